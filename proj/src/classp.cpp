#include "palcore/classp.hpp"

#include <algorithm>
#include <set>

#include "palcore/complexity.hpp"
#include "palcore/periods.hpp"

namespace palcore {

std::string to_string(PSide side) { return side == PSide::Prefix ? "prefix" : "suffix"; }

namespace {

// Longest word that is a prefix (resp. suffix) of every image.
Word common_affix(const Morphism& m, PSide side) {
  const std::vector<Word>& images = m.images();
  std::size_t len = images.empty() ? 0 : images.front().size();
  for (const Word& w : images) len = std::min(len, w.size());
  const Word& base = images.front();
  std::size_t good = 0;
  for (; good < len; ++good) {
    bool all = true;
    for (const Word& w : images) {
      const Symbol expect = side == PSide::Prefix ? base[good] : base[base.size() - 1 - good];
      const Symbol have = side == PSide::Prefix ? w[good] : w[w.size() - 1 - good];
      if (have != expect) {
        all = false;
        break;
      }
    }
    if (!all) break;
  }
  if (side == PSide::Prefix) return base.subword(0, good);
  return base.subword(base.size() - good, good);
}

std::optional<ClassPDecomposition> try_decompose(const Morphism& m, PSide side,
                                                 std::size_t plen) {
  ClassPDecomposition d;
  d.side = side;
  std::vector<Word> q;
  for (Symbol a = 0; a < m.alphabet_size(); ++a) {
    const Word& img = m.image(a);
    if (img.size() < plen) return std::nullopt;
    const Word rest = side == PSide::Prefix ? img.subword(plen, img.size() - plen)
                                            : img.subword(0, img.size() - plen);
    if (!is_palindrome(rest)) return std::nullopt;
    q.push_back(rest);
  }
  const Word& sample = m.image(0);
  d.p = side == PSide::Prefix ? sample.subword(0, plen)
                              : sample.subword(sample.size() - plen, plen);
  d.q = std::move(q);
  return d;
}

}  // namespace

std::vector<ClassPDecomposition> class_p_decompositions(const Morphism& m) {
  if (m.alphabet_size() == 0) raise(ErrorKind::Input, "morphism over an empty alphabet");
  std::vector<ClassPDecomposition> out;
  const Word pref = common_affix(m, PSide::Prefix);
  const Word suff = common_affix(m, PSide::Suffix);
  const std::size_t longest = std::max(pref.size(), suff.size());
  for (std::size_t plen = 0; plen <= longest; ++plen) {
    if (plen <= pref.size()) {
      const Word p = pref.subword(0, plen);
      if (is_palindrome(p)) {
        if (auto d = try_decompose(m, PSide::Prefix, plen)) out.push_back(std::move(*d));
      }
    }
    if (plen > 0 && plen <= suff.size()) {
      const Word p = suff.subword(suff.size() - plen, plen);
      if (is_palindrome(p)) {
        if (auto d = try_decompose(m, PSide::Suffix, plen)) out.push_back(std::move(*d));
      }
    }
  }
  return out;
}

bool is_class_p(const Morphism& m) { return !class_p_decompositions(m).empty(); }

Morphism shift_conjugate(const Morphism& m, const Word& r, PSide side) {
  if (r.empty()) return m;
  std::vector<Word> images;
  images.reserve(m.alphabet_size());
  for (Symbol a = 0; a < m.alphabet_size(); ++a) {
    const Word t = side == PSide::Prefix ? concat(m.image(a), r) : concat(r, m.image(a));
    bool ok = t.size() >= r.size();
    for (std::size_t i = 0; ok && i < r.size(); ++i) {
      const Symbol have = side == PSide::Prefix ? t[i] : t[t.size() - r.size() + i];
      if (have != r[i]) ok = false;
    }
    if (!ok)
      raise(ErrorKind::Input, "conjugation by '" + format_word(r, m.alphabet()) +
                                  "' does not cancel on letter '" + m.alphabet().letter(a) + "'");
    images.push_back(side == PSide::Prefix ? t.subword(r.size(), t.size() - r.size())
                                           : t.subword(0, t.size() - r.size()));
  }
  return Morphism(m.alphabet(), std::move(images));
}

namespace {

constexpr std::size_t kFactorCheckLen = 12;
constexpr std::size_t kFactorCheckPrefix = std::size_t(1) << 15;
constexpr std::size_t kImageSizeCap = std::size_t(1) << 20;

// Distinct factors of each length 1..k of w, as one sorted set per length.
std::vector<std::set<Word>> factor_sets(const Word& w, std::size_t k) {
  std::vector<std::set<Word>> sets(k + 1);
  for (std::size_t len = 1; len <= k && len <= w.size(); ++len)
    for (std::size_t i = 0; i + len <= w.size(); ++i)
      sets[len].insert(w.subword(i, len));
  return sets;
}

}  // namespace

std::optional<ClassPNormalization> normalize_class_p(const Morphism& m, Symbol seed) {
  if (seed >= m.alphabet_size()) raise(ErrorKind::Input, "seed letter outside the alphabet");
  if (!m.prolongable_on(seed))
    raise(ErrorKind::Input,
          "morphism is not prolongable on letter '" + m.alphabet().letter(seed) + "'");

  const std::vector<ClassPDecomposition> all = class_p_decompositions(m);
  const ClassPDecomposition* chosen = nullptr;
  for (const ClassPDecomposition& d : all)
    if (d.side == PSide::Prefix) {
      chosen = &d;
      break;
    }
  if (chosen == nullptr) return std::nullopt;

  const Word r = chosen->p.subword(0, chosen->p.size() / 2);
  Morphism normalized = shift_conjugate(m, r, PSide::Prefix);

  // The conjugate must again decompose, now with a trivial shared prefix.
  bool found = false;
  ClassPDecomposition used;
  for (ClassPDecomposition& d : class_p_decompositions(normalized))
    if (d.side == PSide::Prefix && d.p.size() <= 1) {
      used = std::move(d);
      found = true;
      break;
    }
  if (!found)
    raise(ErrorKind::Internal, "conjugated morphism lost its palindromic decomposition");

  // Smallest power of the conjugate that is prolongable on some letter.
  Morphism power = normalized;
  unsigned exponent = 1;
  std::optional<Symbol> new_seed;
  while (true) {
    new_seed = power.prolongable_letter();
    if (new_seed) break;
    if (exponent >= m.alphabet_size())
      raise(ErrorKind::Construction, "no power of the conjugate is prolongable");
    std::size_t bulk = 0;
    for (const Word& w : power.images()) bulk += w.size();
    if (bulk > kImageSizeCap)
      raise(ErrorKind::Resource, "conjugate powers grow without becoming prolongable");
    power = compose(normalized, power);
    ++exponent;
  }

  // Factor sets of both fixed points up to kFactorCheckLen, required to be
  // unchanged under doubling the inspected prefix and equal to each other.
  const Word a_half = fixed_point_prefix(m, seed, kFactorCheckPrefix / 2);
  const Word a_full = fixed_point_prefix(m, seed, kFactorCheckPrefix);
  const Word b_half = fixed_point_prefix(power, *new_seed, kFactorCheckPrefix / 2);
  const Word b_full = fixed_point_prefix(power, *new_seed, kFactorCheckPrefix);
  const auto sa = factor_sets(a_full, kFactorCheckLen);
  const auto sb = factor_sets(b_full, kFactorCheckLen);
  const bool agree = sa == sb && sa == factor_sets(a_half, kFactorCheckLen) &&
                     sb == factor_sets(b_half, kFactorCheckLen);
  return ClassPNormalization{std::move(normalized), std::move(used),
                             exponent, *new_seed, kFactorCheckLen, agree};
}

std::optional<PeriodicClassP> periodic_class_p(const Word& unit) {
  if (unit.empty()) raise(ErrorKind::Input, "repeating unit must be non-empty");
  const std::size_t n = unit.size();

  // Gate: the periodic repetition must contain a palindromic factor of
  // length >= 2 |unit|; any such factor already appears in a 6 |unit| window.
  Word window;
  for (int rep = 0; rep < 6; ++rep) window.append(unit);
  bool long_palindrome = false;
  for (const Word& p : Eertree(window).maximal())
    if (p.size() >= 2 * n) {
      long_palindrome = true;
      break;
    }
  if (!long_palindrome) return std::nullopt;

  // Locate the reversed unit inside unit.unit: the split point yields two
  // palindromic halves.
  const Word rev = reverse(unit);
  const Word doubled = concat(unit, unit);
  for (std::size_t i = 0; i < n; ++i) {
    bool match = true;
    for (std::size_t t = 0; t < n && match; ++t)
      if (doubled[i + t] != rev[t]) match = false;
    if (!match) continue;
    PeriodicClassP split;
    split.left = unit.subword(0, i);
    split.right = unit.subword(i, n - i);
    if (!is_palindrome(split.left) || !is_palindrome(split.right))
      raise(ErrorKind::Internal, "palindromic split check failed on a located occurrence");
    return split;
  }
  raise(ErrorKind::Internal,
        "long palindromes present but no palindromic split of the unit was found");
}

}  // namespace palcore
