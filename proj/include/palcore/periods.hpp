#pragma once

#include <optional>
#include <string>
#include <vector>

#include "palcore/words.hpp"

namespace palcore {

// p is a period of w when w is a prefix of a p-periodic infinite sequence;
// any p >= |w| qualifies vacuously.
bool has_period(const Word& w, std::size_t p);
std::size_t smallest_period(const Word& w);           // via the border array
std::vector<std::size_t> all_periods(const Word& w);  // ascending, within 1..|w|

std::size_t fine_wilf_threshold(std::size_t t1, std::size_t t2);
// When |w| reaches the threshold for its two given periods, gcd(t1,t2) is a
// period as well and is returned; below the threshold nothing is implied.
std::optional<std::size_t> fine_wilf_reduce(const Word& w, std::size_t t1, std::size_t t2);

// Solves xy = yz (x, z non-empty): x = uv, z = vu, y = (uv)^e u, with the
// canonical choice |u| = |y| mod |x| and e = floor(|y| / |x|).
struct LSDecomposition {
  Word u, v;
  std::size_t exponent;
};
std::optional<LSDecomposition> lyndon_schutzenberger(const Word& x, const Word& y, const Word& z);

// Period trichotomy for palindromes; the smallest period decides the class.
enum class PalindromeClass { NonPeriodic, OddPeriod, EvenPeriod };
std::string to_string(PalindromeClass c);

struct PalindromeRecord {
  std::size_t period = 0;
  PalindromeClass cls = PalindromeClass::NonPeriodic;
  std::optional<Word> twin;  // defined exactly for the even-period class
};
PalindromeRecord classify_palindrome(const Word& w);

// The partner palindrome of an even-period palindrome: write w as a prefix of
// (xy)^inf with |x| = |y| = period/2 and take the same-length prefix of
// (yx)^inf. An involution distinct from w with the same smallest period.
Word twin(const Word& w);

// Three structural facts about periods, each checked when its hypotheses hold
// on the supplied words: (1) all short periods of w are multiples of the
// smallest; (2) a period of a long-enough factor transfers to the whole word;
// (3) two long-enough factors of the same word have equal smallest periods.
struct PeriodFact {
  bool applicable = false;
  bool holds = false;
  std::string detail;
};
struct PeriodFactsReport {
  PeriodFact divisibility;
  PeriodFact transfer;
  PeriodFact equality;
};
PeriodFactsReport period_fact_checks(const Word& w, const Word& z, const Word& wprime);

}  // namespace palcore
