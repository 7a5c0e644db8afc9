#pragma once

#include <optional>
#include <string>
#include <vector>

#include "palcore/words.hpp"

namespace palcore {

enum class PSide { Prefix, Suffix };
std::string to_string(PSide side);

// Witness that every image of a morphism factors through palindromes:
// m(a) = p q_a (side Prefix) or m(a) = q_a p (side Suffix) where p and all
// q_a are palindromes (q_a may be empty when p is not).
struct ClassPDecomposition {
  PSide side = PSide::Prefix;
  Word p;
  std::vector<Word> q;  // indexed by letter
};

// All decompositions, ordered by |p| ascending, prefix form before suffix
// form at equal |p|.  The p = empty form (all images palindromic) is
// emitted once, as a prefix form.
std::vector<ClassPDecomposition> class_p_decompositions(const Morphism& m);
bool is_class_p(const Morphism& m);

// Conjugate of m by r: each image a -> r^{-1} m(a) r (side Prefix, defined
// when m(a) r starts with r) or a -> r m(a) r^{-1} (side Suffix, defined
// when r m(a) ends with r).  Raises Input when the cancellation fails.
Morphism shift_conjugate(const Morphism& m, const Word& r, PSide side);

// Result of rewriting a palindromic morphism into its minimal-prefix form:
// conjugating by the first half of the shared prefix p leaves a morphism
// whose own decomposition has |p| <= 1.  `power` is the smallest exponent
// making the conjugate prolongable (on `seed`), and factors_agree records
// whether the fixed points of the original and the rewritten morphism have
// identical factor sets up to factor_check_len (evaluated on prefixes long
// enough that the sets stopped changing; false also when they had not).
struct ClassPNormalization {
  Morphism normalized;
  ClassPDecomposition used;  // decomposition of `normalized`, |p| <= 1
  unsigned power = 1;
  Symbol seed = 0;
  std::size_t factor_check_len = 0;
  bool factors_agree = false;
};

// seed: letter whose fixed point under m is being tracked; m must be
// prolongable on it.  Returns nullopt when m has no prefix-form
// decomposition to rewrite.
std::optional<ClassPNormalization> normalize_class_p(const Morphism& m, Symbol seed);

// Palindromic split of a repeating unit: unit = left . right with both
// parts palindromes (possibly empty).  Such a split exists if and only if
// the periodic repetition of the unit contains palindromes of length
// >= 2 |unit|; returns nullopt otherwise.
struct PeriodicClassP {
  Word left;
  Word right;
};
std::optional<PeriodicClassP> periodic_class_p(const Word& unit);

}  // namespace palcore
