#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "palcore/periods.hpp"
#include "palcore/words.hpp"

using namespace palcore;

namespace {

Word random_word(std::mt19937& rng, std::size_t len, unsigned alphabet) {
  std::uniform_int_distribution<unsigned> pick(0, alphabet - 1);
  std::vector<Symbol> s;
  s.reserve(len);
  for (std::size_t i = 0; i < len; ++i) s.push_back(static_cast<Symbol>(pick(rng)));
  return Word(std::move(s));
}

Word binary_word_from_bits(unsigned bits, std::size_t len) {
  std::vector<Symbol> s;
  s.reserve(len);
  for (std::size_t i = 0; i < len; ++i) s.push_back(static_cast<Symbol>((bits >> i) & 1));
  return Word(std::move(s));
}

}  // namespace

TEST_CASE("period detection agrees with the brute oracle, exhaustively to length 12") {
  for (std::size_t len = 1; len <= 12; ++len)
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      const Word w = binary_word_from_bits(bits, len);
      const auto expected = oracle::periods(w);
      CHECK(all_periods(w) == expected);
      CHECK(smallest_period(w) == expected.front());
      for (std::size_t p = 1; p <= len; ++p) {
        const bool want =
            std::find(expected.begin(), expected.end(), p) != expected.end();
        CHECK(has_period(w, p) == want);
      }
    }
}

TEST_CASE("period detection agrees with the brute oracle on random ternary words") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = random_word(rng, 1 + trial % 200, 3);
    CHECK(all_periods(w) == oracle::periods(w));
    CHECK(smallest_period(w) == oracle::smallest_period(w));
  }
}

TEST_CASE("pinned example: 01101") {
  const Word w = Word::of({0, 1, 1, 0, 1});
  CHECK(smallest_period(w) == 3);
  CHECK(all_periods(w) == std::vector<std::size_t>{3, 5});
  CHECK(has_period(w, 5));
  CHECK_FALSE(has_period(w, 4));
  CHECK(has_period(w, 6));  // vacuously, beyond the length
}

TEST_CASE("two-period threshold value and reduction") {
  CHECK(fine_wilf_threshold(3, 5) == 7);
  CHECK(fine_wilf_threshold(4, 6) == 8);
  CHECK(fine_wilf_threshold(2, 4) == 4);

  // At threshold length, two periods force their gcd.
  const Word w = Word::of({0, 1, 0, 1, 0, 1, 0, 1});  // periods 4 and 6, length 8
  REQUIRE(has_period(w, 4));
  REQUIRE(has_period(w, 6));
  CHECK(fine_wilf_reduce(w, 4, 6) == std::size_t{2});
  CHECK(smallest_period(w) == 2);

  // Below threshold nothing is implied; this word keeps periods 4 and 6
  // without acquiring period 2.
  const Word v = Word::of({0, 1, 0, 0, 0, 1, 0});  // length 7 < 8
  REQUIRE(has_period(v, 4));
  REQUIRE(has_period(v, 6));
  REQUIRE_FALSE(has_period(v, 2));
  CHECK_FALSE(fine_wilf_reduce(v, 4, 6).has_value());
}

TEST_CASE("two-period threshold is sharp when neither period divides the other") {
  // For each such pair there is a word one symbol shorter than the threshold
  // with both periods but without their gcd; found by exhaustive search.
  for (std::size_t p = 2; p <= 7; ++p)
    for (std::size_t q = p + 1; q <= 8; ++q) {
      if (q % p == 0) continue;
      const std::size_t g = std::gcd(p, q);
      const std::size_t len = p + q - g - 1;
      bool found = false;
      for (unsigned bits = 0; bits < (1u << len) && !found; ++bits) {
        const Word w = binary_word_from_bits(bits, len);
        if (has_period(w, p) && has_period(w, q) && !has_period(w, g)) found = true;
      }
      CAPTURE(p);
      CAPTURE(q);
      CHECK(found);
    }
}

TEST_CASE("conjugacy equation xy = yz") {
  const Alphabet ab = Alphabet::of_chars("ab");
  const Word x = parse_word("ab", ab);
  const Word y = parse_word("abab", ab);
  const Word z = parse_word("ab", ab);
  const auto d = lyndon_schutzenberger(x, y, z);
  REQUIRE(d.has_value());
  // x = uv, z = vu, y = (uv)^e u with |u| = |y| mod |x|.
  CHECK(concat(d->u, d->v) == x);
  CHECK(concat(d->v, d->u) == z);
  CHECK(d->u.empty());
  CHECK(d->exponent == 2);

  const Word y2 = parse_word("ababa", ab);  // no solution: ab.ababa != ababa.ab
  CHECK_FALSE(lyndon_schutzenberger(x, y2, x).has_value());

  // A genuinely conjugate (not equal) pair: aab . aabaa = aabaa . baa.
  const Word x3 = parse_word("aab", ab);
  const Word y3 = parse_word("aabaa", ab);
  const Word z3 = parse_word("baa", ab);
  const auto d3 = lyndon_schutzenberger(x3, y3, z3);
  REQUIRE(d3.has_value());
  CHECK(concat(d3->u, d3->v) == x3);
  CHECK(concat(d3->v, d3->u) == z3);
  Word rebuilt;
  for (std::size_t e = 0; e < d3->exponent; ++e) rebuilt.append(x3);
  rebuilt.append(d3->u);
  CHECK(rebuilt == y3);
}

TEST_CASE("random conjugacy equations round-trip") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Word u = random_word(rng, trial % 4, 2);
    const Word v = random_word(rng, 1 + trial % 5, 2);
    const unsigned e = trial % 3;
    const Word x = concat(u, v);
    const Word z = concat(v, u);
    Word y;
    for (unsigned i = 0; i < e; ++i) y.append(x);
    y.append(u);
    if (y.empty()) continue;  // the equation needs a non-trivial middle
    const auto d = lyndon_schutzenberger(x, y, z);
    REQUIRE(d.has_value());
    CHECK(concat(d->u, d->v) == x);
    CHECK(concat(d->v, d->u) == z);
    // Canonical answer reproduces y.
    Word again;
    for (std::size_t i = 0; i < d->exponent; ++i) again.append(x);
    again.append(d->u);
    CHECK(again == y);
  }
}

TEST_CASE("palindrome period trichotomy") {
  // Non-periodic: smallest period > |w|/2.
  const Word np = Word::of({0, 1, 0});
  const auto rnp = classify_palindrome(np);
  CHECK(rnp.cls == PalindromeClass::NonPeriodic);
  CHECK(rnp.period == 2);
  CHECK_FALSE(rnp.twin.has_value());

  // Odd period: 0110110 has smallest period 3 and length 7 >= 2*3.
  const Word op = Word::of({0, 1, 1, 0, 1, 1, 0});
  REQUIRE(is_palindrome(op));
  const auto rop = classify_palindrome(op);
  CHECK(rop.period == 3);
  CHECK(rop.cls == PalindromeClass::OddPeriod);
  CHECK_FALSE(rop.twin.has_value());

  // Even period: 01100110 has smallest period 4 and length 8 >= 2*4.
  const Word ep = Word::of({0, 1, 1, 0, 0, 1, 1, 0});
  REQUIRE(is_palindrome(ep));
  const auto rep = classify_palindrome(ep);
  CHECK(rep.period == 4);
  CHECK(rep.cls == PalindromeClass::EvenPeriod);
  REQUIRE(rep.twin.has_value());
  CHECK(*rep.twin == twin(ep));
}

TEST_CASE("twin involution on even-period palindromes") {
  // w a palindrome with even smallest period 2m and |w| >= 2m: write
  // w = prefix of (xy)^inf, |x| = |y| = m; the twin is the same-length
  // prefix of (yx)^inf.
  const Word w = Word::of({0, 1, 1, 0, 0, 1, 1, 0});  // x = 01, y = 10
  const Word t = twin(w);
  CHECK(is_palindrome(t));
  CHECK(t != w);
  CHECK(smallest_period(t) == smallest_period(w));
  CHECK(twin(t) == w);
  CHECK(t == Word::of({1, 0, 0, 1, 1, 0, 0, 1}));
}

TEST_CASE("structural period facts on palindromic factors") {
  // w' = palindrome with even period inside a longer palindrome z.
  const Word z = Word::of({0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0});
  const Word w = Word::of({0, 1, 1, 0, 0, 1, 1, 0});
  const Word wp = Word::of({1, 0, 0, 1, 1, 0, 0, 1});
  const auto rep = period_fact_checks(w, z, wp);
  if (rep.divisibility.applicable) CHECK(rep.divisibility.holds);
  if (rep.transfer.applicable) CHECK(rep.transfer.holds);
  if (rep.equality.applicable) CHECK(rep.equality.holds);
  CHECK((rep.divisibility.applicable || rep.transfer.applicable ||
         rep.equality.applicable));
}
