#pragma once

#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "palcore/sequences.hpp"
#include "palcore/words.hpp"

namespace palcore {

// Engine used to count distinct factors of each length.  The suffix
// automaton covers every length at once; hashed sliding windows do one pass
// per length and win when only a few small lengths are wanted on a long
// word.  Auto picks between them; all engines return identical counts.
enum class FactorEngine { Auto, SuffixAutomaton, HashedWindows };

// fac[k] = number of distinct factors of length k of w, for k = 0..k_max
// (fac[0] = 1 for the empty factor).
std::vector<std::uint64_t> factor_counts(const Word& w, std::size_t k_max,
                                         FactorEngine engine = FactorEngine::Auto);

// pal[k] = number of distinct palindromic factors of length k of w, for
// k = 0..k_max (pal[0] = 1).
std::vector<std::uint64_t> palindrome_counts(const Word& w, std::size_t k_max);

// Palindromic tree: one node per distinct non-empty palindromic factor of w.
// Construction checks the structural bound that a word of length L has at
// most L distinct non-empty palindromic factors.
class Eertree {
 public:
  explicit Eertree(const Word& w);

  // Number of distinct non-empty palindromic factors.
  std::size_t size() const noexcept { return nodes_ - 2; }

  // counts[k] for k = 0..k_max, counts[0] = 1.
  std::vector<std::uint64_t> counts_by_length(std::size_t k_max) const;

  // Distinct palindromic factors of length k with the start position of
  // their first occurrence, sorted lexicographically.
  std::vector<std::pair<Word, std::size_t>> of_length(std::size_t k) const;

  // Palindromic factors that are not the centre of any longer palindromic
  // factor of w (no child in the tree), sorted by length then
  // lexicographically.
  std::vector<Word> maximal() const;

 private:
  Word w_;
  std::size_t nodes_ = 0;
  std::vector<std::int32_t> len_;
  std::vector<std::int32_t> link_;
  std::vector<std::uint32_t> first_start_;
  std::vector<std::int32_t> child_count_;
};

std::vector<std::pair<Word, std::size_t>> palindromes_of_length(const Word& w, std::size_t k);
std::vector<std::pair<Word, std::size_t>> palindrome_inventory(const Word& w, std::size_t k_max);
std::vector<Word> maximal_palindromes(const Word& w);

// Counts of an infinite sequence estimated on finite prefixes.  prefix_len
// is the length the final counts came from; stable[k] records whether the
// counts for length k survived the last doubling of the prefix unchanged
// (all false when the budget allowed no doubling).
struct ComplexityProfile {
  std::size_t k_max = 0;
  std::size_t prefix_len = 0;
  std::vector<std::uint64_t> fac;  // index 0..k_max
  std::vector<std::uint64_t> pal;  // index 0..k_max
  std::vector<bool> stable;        // index 0..k_max
  std::string source_name;
  std::string source_params;
};

// Evaluate fac/pal on prefixes of doubling length, starting from
// min(max(4096, 8 k_max), budget) and stopping as soon as one doubling
// leaves every count unchanged, or at the budget.  Counts are checked to be
// non-decreasing in the prefix length.
ComplexityProfile compute_profile(const Sequence& s, std::size_t k_max,
                                  std::size_t budget,
                                  FactorEngine engine = FactorEngine::Auto);

// CSV round-trip, one row per length:  k,fac,pal,prefix_len,stable
std::string profile_to_csv(const ComplexityProfile& p);
ComplexityProfile profile_from_csv(std::string_view csv);

// Reduced non-negative fraction (den >= 1).
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  bool operator==(const Fraction&) const = default;
};
Fraction make_fraction(std::uint64_t num, std::uint64_t den);

// Exact ratios relating palindrome counts to factor counts on a stabilised
// profile: weighted = k pal(k) / fac(k + floor(k/4)) and
// square = pal(k)^2 / fac(k); bound_ok = [k pal(k) < 16 fac(k + floor(k/4))].
struct RatioRow {
  std::size_t k = 0;
  std::uint64_t fac_k = 0;
  std::uint64_t pal_k = 0;
  std::uint64_t fac_shifted = 0;
  Fraction weighted;
  Fraction square;
  bool stable = false;  // profile stability at k and at k + floor(k/4)
  bool bound_ok = false;
};
std::vector<RatioRow> complexity_ratios(const Sequence& s, std::size_t k_max,
                                        std::size_t budget);
std::string ratios_to_csv(const std::vector<RatioRow>& rows);

// Generic stabilisation over doubling prefixes: value = fn(prefix) at the
// final length, stable = value survived the last doubling unchanged.
template <typename V>
struct Stabilized {
  V value;
  bool stable = false;
  std::size_t prefix_len = 0;
};

template <typename Fn>
auto stabilize_over_prefix(const Sequence& s, std::size_t start_len,
                           std::size_t budget, Fn&& fn)
    -> Stabilized<std::decay_t<decltype(fn(std::declval<const Word&>()))>> {
  using V = std::decay_t<decltype(fn(std::declval<const Word&>()))>;
  if (budget == 0) raise(ErrorKind::Input, "budget must be positive");
  std::size_t len = std::min(std::max<std::size_t>(start_len, 1), budget);
  V cur = fn(s.prefix(len));
  bool stable = false;
  while (len < budget) {
    const std::size_t next_len = std::min(budget, len * 2);
    V next = fn(s.prefix(next_len));
    stable = (next == cur);
    cur = std::move(next);
    len = next_len;
    if (stable) break;
  }
  return Stabilized<V>{std::move(cur), stable, len};
}

}  // namespace palcore
