// Acceptance harness: one line per criterion, every tolerance pinned in this
// file, exit code 0 only when all criteria hold.  Each criterion prints
// "[NN] PASS|FAIL <title>" followed by indented notes (failures carry the
// first counterexamples; observations are marked as such and never assert).

#include <cstdint>
#include <cstdio>
#include <exception>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "oracles.hpp"
#include "palcore/classp.hpp"
#include "palcore/complexity.hpp"
#include "palcore/periods.hpp"
#include "palcore/sequences.hpp"
#include "palcore/verify.hpp"
#include "palcore/words.hpp"

using namespace palcore;

namespace {

// Working budgets.  kBudget is the default prefix budget for profile-based
// criteria; the folding family stabilises far earlier, so it runs shorter.
constexpr std::size_t kBudget = std::size_t{1} << 20;
constexpr std::size_t kFoldBudget = std::size_t{1} << 18;
constexpr std::size_t kScramblerPrefix = 1'000'000;

Word W(std::string_view digits) {
  std::vector<Symbol> s;
  s.reserve(digits.size());
  for (char c : digits) s.push_back(static_cast<Symbol>(c - '0'));
  return Word(std::move(s));
}

std::string S(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(static_cast<char>('0' + s));
  return out;
}

std::string num(std::uint64_t v) { return std::to_string(v); }

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;
  void note(std::string msg) { lines.push_back(std::move(msg)); }
  void fail(std::string msg) {
    pass = false;
    lines.push_back("counterexample: " + std::move(msg));
  }
  void expect(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
  }
};

const ComplexityProfile& profile(const SequencePtr& s, std::size_t k_max,
                                 std::size_t budget) {
  static std::map<std::string, ComplexityProfile> cache;
  const std::string key = s->name() + "|" + s->params() + "|" + num(k_max) + "|" +
                          num(budget);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_profile(*s, k_max, budget)).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// 1. Period-doubling palindrome counts: initial table, vanishing even counts,
//    and the odd-index halving identity pal(k) = pal(2k-1) = pal(2k+1).
Outcome c01() {
  Outcome o;
  const auto s = make_builtin("period-doubling");
  const auto& p = profile(s, 64, kBudget);
  const std::uint64_t first7[7] = {2, 1, 3, 0, 4, 0, 3};
  for (std::size_t k = 1; k <= 7; ++k) {
    o.expect(p.stable[k], "pal(" + num(k) + ") did not stabilise at this budget");
    o.expect(p.pal[k] == first7[k - 1],
             "pal(" + num(k) + ") = " + num(p.pal[k]) + ", expected " + num(first7[k - 1]));
  }
  for (std::size_t k = 4; k <= 64; k += 2)
    o.expect(p.pal[k] == 0, "pal(" + num(k) + ") = " + num(p.pal[k]) + ", expected 0 at even length");
  for (std::size_t k = 5; k <= 31; k += 2) {
    o.expect(p.stable[k] && p.stable[2 * k - 1] && p.stable[2 * k + 1],
             "counts at k = " + num(k) + ", " + num(2 * k - 1) + ", " + num(2 * k + 1) +
                 " did not all stabilise");
    o.expect(p.pal[k] == p.pal[2 * k - 1] && p.pal[k] == p.pal[2 * k + 1],
             "pal(" + num(k) + ") = " + num(p.pal[k]) + " but pal(" + num(2 * k - 1) +
                 ") = " + num(p.pal[2 * k - 1]) + ", pal(" + num(2 * k + 1) +
                 ") = " + num(p.pal[2 * k + 1]));
  }
  if (o.pass)
    o.note("pal(1..7) = 2,1,3,0,4,0,3; even counts vanish through 64; "
           "pal(k) = pal(2k-1) = pal(2k+1) for odd k = 5..31");
  return o;
}

// ---------------------------------------------------------------------------
// 2. Folding family: palindromes disappear from length 14 on (paperfolding)
//    and from length 15 on (their partial-sum images), for the classical
//    instruction stream and five distinct periodic streams.
Outcome c02() {
  Outcome o;
  const std::vector<std::vector<int>> streams = {
      {1}, {0, 1}, {1, 1, 0}, {0, 0, 0, 1}, {1, 0, 1, 1, 0}};

  std::vector<SequencePtr> folds = {make_paperfolding_classical()};
  for (const auto& st : streams) folds.push_back(make_paperfolding(st));
  for (std::size_t i = 0; i < folds.size(); ++i)
    for (std::size_t j = i + 1; j < folds.size(); ++j)
      o.expect(!(folds[i]->prefix(256) == folds[j]->prefix(256)),
               "instruction streams " + num(i) + " and " + num(j) +
                   " generated identical sequences");
  for (const auto& f : folds) {
    const auto& p = profile(f, 40, kFoldBudget);
    for (std::size_t k = 14; k <= 40; ++k)
      o.expect(p.pal[k] == 0, f->name() + " [" + f->params() + "]: pal(" + num(k) +
                                  ") = " + num(p.pal[k]) + ", expected 0");
  }

  std::vector<SequencePtr> sums = {make_rudin_shapiro_classical()};
  for (const auto& st : streams) sums.push_back(make_rudin_shapiro(st));
  for (const auto& r : sums) {
    const auto& p = profile(r, 40, kFoldBudget);
    for (std::size_t k = 15; k <= 40; ++k)
      o.expect(p.pal[k] == 0, r->name() + " [" + r->params() + "]: pal(" + num(k) +
                                  ") = " + num(p.pal[k]) + ", expected 0");
  }
  if (o.pass)
    o.note("6 folding streams: pal(14..40) = 0; their partial-sum images: pal(15..40) = 0");
  return o;
}

std::vector<unsigned> golden_cf() { return std::vector<unsigned>(35, 1); }
std::vector<unsigned> two_one_cf() {
  std::vector<unsigned> v;
  for (int i = 0; i < 16; ++i) {
    v.push_back(2);
    v.push_back(1);
  }
  return v;
}
std::vector<unsigned> mixed_cf() {
  std::vector<unsigned> v;
  for (int r = 0; r < 4; ++r)
    for (unsigned t : {1u, 2u, 3u, 4u, 5u, 4u, 3u, 2u, 1u, 2u}) v.push_back(t);
  return v;
}

// ---------------------------------------------------------------------------
// 3. Standard-word sequences for three distinct slopes: fac(k) = k+1 and the
//    palindrome pattern 2 (odd) / 1 (even >= 2), through k = 64.
Outcome c03() {
  Outcome o;
  const std::vector<std::vector<unsigned>> slopes = {golden_cf(), two_one_cf(), mixed_cf()};
  std::vector<SequencePtr> seqs;
  for (const auto& cf : slopes) seqs.push_back(make_sturmian(cf));
  for (std::size_t i = 0; i < seqs.size(); ++i)
    for (std::size_t j = i + 1; j < seqs.size(); ++j)
      o.expect(!(seqs[i]->prefix(64) == seqs[j]->prefix(64)),
               "slopes " + num(i) + " and " + num(j) + " generated identical sequences");
  for (const auto& s : seqs) {
    const auto& p = profile(s, 64, kBudget);
    for (std::size_t k = 1; k <= 64; ++k) {
      o.expect(p.stable[k], s->params() + ": counts at k = " + num(k) + " did not stabilise");
      o.expect(p.fac[k] == k + 1, s->params() + ": fac(" + num(k) + ") = " + num(p.fac[k]) +
                                      ", expected " + num(k + 1));
      const std::uint64_t want = (k % 2 == 1) ? 2 : 1;
      o.expect(p.pal[k] == want, s->params() + ": pal(" + num(k) + ") = " + num(p.pal[k]) +
                                     ", expected " + num(want));
    }
  }
  if (o.pass)
    o.note("3 slopes: fac(k) = k+1 and pal = 2 (odd) / 1 (even) confirmed for k <= 64");
  return o;
}

// ---------------------------------------------------------------------------
// 4. Partial sums of each slope above: fac(k) = 2k, pal(k) = 2 through 64,
//    and the difference/integration correspondence through k = 32.
Outcome c04() {
  Outcome o;
  const std::vector<std::vector<unsigned>> slopes = {golden_cf(), two_one_cf(), mixed_cf()};
  for (const auto& cf : slopes) {
    const auto r = make_rote(cf, 0);
    const auto& p = profile(r, 64, kBudget);
    for (std::size_t k = 1; k <= 64; ++k) {
      o.expect(p.stable[k], r->params() + ": counts at k = " + num(k) + " did not stabilise");
      o.expect(p.fac[k] == 2 * k, r->params() + ": fac(" + num(k) + ") = " + num(p.fac[k]) +
                                      ", expected " + num(2 * k));
      o.expect(p.pal[k] == 2,
               r->params() + ": pal(" + num(k) + ") = " + num(p.pal[k]) + ", expected 2");
    }
    const VerificationReport rep = verify_rote_bijection(r, 32, kBudget);
    o.expect(rep.status == CheckStatus::Pass,
             r->params() + ": correspondence check " + to_string(rep.status) +
                 (rep.witness.empty() ? "" : " (" + rep.witness + ")"));
  }
  if (o.pass)
    o.note("3 partial-sum sequences: fac(k) = 2k, pal(k) = 2 for k <= 64; "
           "difference/integration bijection holds for k <= 32");
  return o;
}

// ---------------------------------------------------------------------------
// 5. fix(0 -> 001, 1 -> 111): pal(k) = 2 for every k <= 64.
Outcome c05() {
  Outcome o;
  const auto s = make_builtin("rote-morphic");
  const auto& p = profile(s, 64, kBudget);
  for (std::size_t k = 1; k <= 64; ++k) {
    o.expect(p.stable[k], "counts at k = " + num(k) + " did not stabilise");
    o.expect(p.pal[k] == 2, "pal(" + num(k) + ") = " + num(p.pal[k]) + ", expected 2");
  }
  if (o.pass) o.note("pal(k) = 2 confirmed for 1 <= k <= 64");
  return o;
}

// ---------------------------------------------------------------------------
// 6. Letterwise-image example: pal = 2 on 1..5, 1 on 6..10, 0 on 11..24.
Outcome c06() {
  Outcome o;
  const auto s = make_builtin("image-example");
  const auto& p = profile(s, 24, kBudget);
  for (std::size_t k = 1; k <= 24; ++k) {
    const std::uint64_t want = k <= 5 ? 2 : (k <= 10 ? 1 : 0);
    if (want > 0)
      o.expect(p.stable[k], "counts at k = " + num(k) + " did not stabilise");
    o.expect(p.pal[k] == want,
             "pal(" + num(k) + ") = " + num(p.pal[k]) + ", expected " + num(want));
  }
  if (o.pass) o.note("pal = 2 on 1..5, 1 on 6..10, 0 on 11..24");
  return o;
}

// ---------------------------------------------------------------------------
// 7. fix(0 -> 001, 1 -> 101): fac(k) = 2k for k <= 40; palindromes stop at 8.
Outcome c07() {
  Outcome o;
  const auto s = make_builtin("v-sequence");
  const auto& p = profile(s, 40, kBudget);
  for (std::size_t k = 1; k <= 40; ++k) {
    o.expect(p.stable[k], "counts at k = " + num(k) + " did not stabilise");
    o.expect(p.fac[k] == 2 * k,
             "fac(" + num(k) + ") = " + num(p.fac[k]) + ", expected " + num(2 * k));
    const std::uint64_t want = k <= 7 ? 2 : 0;
    o.expect(p.pal[k] == want,
             "pal(" + num(k) + ") = " + num(p.pal[k]) + ", expected " + num(want));
  }
  if (o.pass) o.note("fac(k) = 2k for k <= 40; pal = 2 on 1..7 and 0 on 8..40");
  return o;
}

// ---------------------------------------------------------------------------
// 8. Chacon sequence: fac(k) = 2k-1 for 2 <= k <= 40; pal(13..40) = 0.
Outcome c08() {
  Outcome o;
  const auto s = make_builtin("chacon");
  const auto& p = profile(s, 40, kBudget);
  for (std::size_t k = 2; k <= 40; ++k) {
    o.expect(p.stable[k], "counts at k = " + num(k) + " did not stabilise");
    o.expect(p.fac[k] == 2 * k - 1,
             "fac(" + num(k) + ") = " + num(p.fac[k]) + ", expected " + num(2 * k - 1));
  }
  for (std::size_t k = 13; k <= 40; ++k)
    o.expect(p.pal[k] == 0, "pal(" + num(k) + ") = " + num(p.pal[k]) + ", expected 0");
  if (o.pass) o.note("fac(k) = 2k-1 for 2 <= k <= 40; no palindromes of length 13..40");
  return o;
}

// ---------------------------------------------------------------------------
// 9. Kolakoski sequence: pal(k) = 2 for k <= 30 is recorded as an observation
//    consistent with the conjectured constant; deviations are reported, never
//    failed.
Outcome c09() {
  Outcome o;
  const auto s = make_builtin("kolakoski");
  const auto& p = profile(s, 30, kBudget);
  std::vector<std::string> deviations;
  std::size_t unstable = 0;
  for (std::size_t k = 1; k <= 30; ++k) {
    if (!p.stable[k]) {
      ++unstable;
      continue;
    }
    if (p.pal[k] != 2)
      deviations.push_back("pal(" + num(k) + ") = " + num(p.pal[k]));
  }
  if (deviations.empty() && unstable == 0)
    o.note("observation: pal(k) = 2 for every k <= 30, consistent with the conjectured constant");
  else if (deviations.empty())
    o.note("observation: pal(k) = 2 on all " + num(30 - unstable) +
           " stabilised lengths <= 30 (" + num(unstable) + " not stabilised)");
  for (const auto& d : deviations)
    o.note("observed deviation from the conjectured value (reported, not failed): " + d);
  return o;
}

// ---------------------------------------------------------------------------
// 10. Strict product bound k*pal(k) < 16*fac(k + k/4) on every builtin
//     source, over every length that stabilised, k <= 64.
Outcome c10() {
  Outcome o;
  for (const std::string& name : builtin_names()) {
    const VerificationReport rep = verify_cassaigne_bound(make_builtin(name), 64, kBudget);
    if (rep.status == CheckStatus::Pass) {
      if (!rep.observations.empty()) o.note(name + ": " + rep.observations.front());
    } else {
      o.fail(name + ": bound check " + to_string(rep.status) +
             (rep.witness.empty() ? "" : " (" + rep.witness + ")"));
    }
  }
  return o;
}

// ---------------------------------------------------------------------------
// 11. Palindromic decompositions of the catalog morphisms, plus normalization
//     of a crafted even-prefix example down to all-palindrome images.
Outcome c11() {
  Outcome o;
  const auto pd = make_builtin("period-doubling")->generating_morphism();
  const auto tm2 = make_builtin("thue-morse-squared")->generating_morphism();
  const auto v = make_builtin("v-sequence")->generating_morphism();
  o.expect(pd.has_value() && tm2.has_value() && v.has_value(),
           "a catalog source lost its generating morphism");
  if (!o.pass) return o;

  const auto pd_decs = class_p_decompositions(*pd);
  o.expect(!pd_decs.empty() && pd_decs.front().side == PSide::Prefix &&
               S(pd_decs.front().p) == "0",
           "period-doubling: expected leading decomposition with p = \"0\"");

  const auto tm_decs = class_p_decompositions(*tm2);
  o.expect(!tm_decs.empty() && tm_decs.front().p.empty(),
           "squared Thue-Morse: expected leading decomposition with empty p");

  o.expect(!is_class_p(*v), "fix(0 -> 001, 1 -> 101) must not admit a palindromic decomposition");

  const Morphism crafted(Alphabet::binary(), {W("110"), W("11010")});
  const auto decs = class_p_decompositions(crafted);
  o.expect(!decs.empty() && decs.front().p.size() == 2,
           "crafted example: expected a decomposition with |p| = 2");
  const auto norm = normalize_class_p(crafted, 1);
  o.expect(norm.has_value(), "crafted example: normalization returned nothing");
  if (norm) {
    o.expect(norm->used.p.empty(), "normalized form still carries p = \"" + S(norm->used.p) + "\"");
    for (std::size_t a = 0; a < norm->normalized.alphabet_size(); ++a)
      o.expect(is_palindrome(norm->normalized.image(static_cast<Symbol>(a))),
               "normalized image of letter " + num(a) + " is not a palindrome");
    o.expect(norm->factor_check_len == 12,
             "factor agreement was checked to length " + num(norm->factor_check_len) +
                 ", expected 12");
    o.expect(norm->factors_agree, "factor sets of the fixed points disagree below length 12");
  }
  if (o.pass)
    o.note("p = \"0\" (period-doubling), p = empty (squared Thue-Morse), no decomposition "
           "(0 -> 001, 1 -> 101); crafted 0 -> 110, 1 -> 11010 normalizes to all-palindrome "
           "images with factor agreement to length 12");
  return o;
}

// ---------------------------------------------------------------------------
// 12. Twin involution, exhaustively over binary palindromes of length <= 14
//     with even period.
Outcome c12() {
  Outcome o;
  std::size_t tested = 0;
  for (std::size_t len = 1; len <= 14 && o.pass; ++len) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << len); ++mask) {
      std::vector<Symbol> syms(len);
      for (std::size_t i = 0; i < len; ++i) syms[i] = (mask >> i) & 1;
      const Word w(std::move(syms));
      if (!is_palindrome(w)) continue;
      const PalindromeRecord rec = classify_palindrome(w);
      if (rec.cls != PalindromeClass::EvenPeriod) continue;
      ++tested;
      const Word t = twin(w);
      o.expect(!(t == w), S(w) + ": twin equals the word itself");
      o.expect(is_palindrome(t), S(w) + ": twin " + S(t) + " is not a palindrome");
      o.expect(smallest_period(t) == rec.period,
               S(w) + ": twin changed the smallest period");
      o.expect(twin(t) == w, S(w) + ": twin of twin is not the original");
      o.expect(rec.twin.has_value() && *rec.twin == t,
               S(w) + ": classification record carries a different twin");
      if (!o.pass) break;
    }
  }
  o.expect(tested > 0, "no even-period palindrome was generated");
  if (o.pass)
    o.note("involution, palindromicity and period preservation hold on all " + num(tested) +
           " even-period binary palindromes of length <= 14");
  return o;
}

// Brute-force palindrome counts by centre expansion; shares nothing with the
// counting engines.
std::vector<std::uint64_t> brute_pal_counts(const Word& w) {
  const std::size_t n = w.size();
  std::set<Word> seen;
  const auto expand = [&](std::size_t l, std::size_t r) {
    while (r < n && w[l] == w[r]) {
      seen.insert(w.subword(l, r - l + 1));
      if (l == 0) break;
      --l;
      ++r;
    }
  };
  for (std::size_t c = 0; c < n; ++c) {
    expand(c, c);
    if (c + 1 < n) expand(c, c + 1);
  }
  std::vector<std::uint64_t> out(n + 1, 0);
  out[0] = 1;
  for (const Word& p : seen) ++out[p.size()];
  return out;
}

// ---------------------------------------------------------------------------
// 13. Engine equivalence on 200 random words (length <= 2000, alphabet <= 4):
//     both factor engines against a brute-force scan (k <= 16), and the
//     palindromic tree against centre-expansion brute force (all lengths).
Outcome c13() {
  Outcome o;
  std::mt19937 rng(0x5eed2026u);
  constexpr std::size_t kFactorK = 16;
  for (int t = 0; t < 200 && o.pass; ++t) {
    const std::size_t len = 1 + rng() % 2000;
    const std::size_t alpha = 2 + rng() % 3;
    std::vector<Symbol> syms(len);
    for (auto& s : syms) s = static_cast<Symbol>(rng() % alpha);
    const Word w(std::move(syms));
    const std::string tag = "word " + num(t) + " (length " + num(len) + ", " + num(alpha) +
                            " letters)";

    const auto brute_fac = oracle::factor_counts(w, kFactorK);
    o.expect(factor_counts(w, kFactorK, FactorEngine::SuffixAutomaton) == brute_fac,
             tag + ": suffix-automaton factor counts differ from brute force");
    o.expect(factor_counts(w, kFactorK, FactorEngine::HashedWindows) == brute_fac,
             tag + ": hashed-window factor counts differ from brute force");

    const Eertree tree(w);
    o.expect(tree.counts_by_length(w.size()) == brute_pal_counts(w),
             tag + ": palindromic-tree counts differ from brute force");
  }
  if (o.pass)
    o.note("200 random words: factor engines match brute force (k <= 16), palindromic "
           "tree matches centre-expansion counts at every length");
  return o;
}

// ---------------------------------------------------------------------------
// 14. Nested-block construction: stage literals and the stage-3 length are
//     exact; the predicted pal(4) = 3 and pal(16) = 5 are flagged
//     observations, not assertions.
Outcome c14() {
  Outcome o;
  o.expect(S(remcor_word(1)) == oracle::remcor_stage1(), "stage 1 word changed");
  o.expect(S(remcor_word(2)) == oracle::remcor_stage2(), "stage 2 word changed");
  o.expect(remcor_word(3).size() == 4997,
           "stage 3 length = " + num(remcor_word(3).size()) + ", expected 4997");

  const auto s = make_builtin("remcor-limit");
  const auto& p = profile(s, 16, kBudget);
  const std::pair<std::size_t, std::uint64_t> predictions[] = {{4, 3}, {16, 5}};
  for (const auto& [k, want] : predictions) {
    std::string status;
    if (p.pal[k] == want)
      status = p.stable[k] ? "matches" : "matches (count not yet stabilised)";
    else
      status = "FLAGGED: measured value differs";
    o.note("observation: pal(" + num(k) + ") = " + num(p.pal[k]) + ", predicted " + num(want) +
           " - " + status);
  }
  if (o.pass) o.note("stage words and lengths are exact; pal predictions recorded above");
  return o;
}

// The measured palindrome counts of the quadratic-complexity example follow a
// parity-and-length counting rule over the nested palindrome family.
std::uint64_t pansiot_rule(std::size_t k) {
  std::uint64_t c = 0;
  for (std::size_t m = 0; m <= k + 1; ++m) {
    const bool long_enough =
        m >= 63 || (std::uint64_t{1} << (m + 1)) + m - 1 >= k;
    if (long_enough && (m + k) % 2 == 1) ++c;
  }
  return c;
}

// ---------------------------------------------------------------------------
// 15. Quadratic-complexity fixed point: the maximal palindromes are the nested
//     family w0 = 0, w_{m+1} = 1.sigma(w_m), and the palindrome counts follow
//     the parity counting rule through k = 512.  The rule counts the central
//     slices of every w_m with m <= k+1, and w_m first enters the sequence at
//     position 2^{m+1}-1-m, so the material behind the rule at k = 512 lies
//     about 2^513 symbols deep.  Everything decidable at the pinned budget is
//     checked strictly; the k <= 512 window itself is reported as the failure
//     it is, together with the measured scaling law that shows why no feasible
//     budget can reach it.
Outcome c15() {
  Outcome o;
  const auto s = make_builtin("pansiot-quadratic");
  const auto m = s->generating_morphism();
  o.expect(m.has_value(), "source lost its generating morphism");
  if (!m) return o;

  // Materialise the family deep enough to classify every palindrome the
  // budget prefix can contain (|w_20| > 2 * kBudget).
  std::vector<Word> family;
  family.push_back(W("0"));
  while (family.back().size() < 2 * kBudget)
    family.push_back(concat(W("1"), apply(*m, family.back())));
  for (unsigned j = 0; j <= 6; ++j) {
    o.expect(is_palindrome(family[j]), "w_" + num(j) + " is not a palindrome");
    const std::size_t want = (std::size_t{1} << (j + 1)) + j - 1;
    o.expect(family[j].size() == want, "|w_" + num(j) + "| = " + num(family[j].size()) +
                                           ", expected " + num(want));
  }

  const Word pre = s->prefix(kBudget);
  const std::string ps = S(pre);

  // First-occurrence law (m >= 1): w_m first occurs at position 2^{m+1}-1-m.
  // This is the verified leg under the depth analysis below.
  for (unsigned j = 1; j <= 10; ++j) {
    const std::size_t pos = ps.find(S(family[j]));
    const std::size_t want = (std::size_t{1} << (j + 1)) - 1 - j;
    o.expect(pos == want, "w_" + num(j) + " first occurs at position " + num(pos) +
                              ", expected " + num(want));
  }

  const Eertree tree(pre);
  const auto maximal = tree.maximal();
  const std::set<Word> maxset(maximal.begin(), maximal.end());
  for (unsigned j = 0; j <= 6; ++j)
    o.expect(maxset.count(family[j]) == 1,
             "w_" + num(j) + " is not a maximal palindrome of the measured prefix");

  // Any maximal palindrome outside the family must be a prefix-boundary
  // artifact: every occurrence flush against the edge, so the extension that
  // disqualifies it lives just past the budget.  An interior occurrence would
  // be a genuine counterexample to the family claim.
  const std::set<Word> famset(family.begin(), family.end());
  for (const Word& p : maximal) {
    if (famset.count(p) != 0) continue;
    const std::string needle = S(p);
    bool interior = false;
    std::size_t occurrences = 0;
    for (std::size_t pos = ps.find(needle); pos != std::string::npos;
         pos = ps.find(needle, pos + 1)) {
      ++occurrences;
      if (pos > 0 && pos + needle.size() < ps.size()) {
        interior = true;
        break;
      }
    }
    if (interior)
      o.fail("non-family maximal palindrome of length " + num(p.size()) +
             " with an occurrence away from the prefix edge");
    else
      o.note("edge artifact: length-" + num(p.size()) + " palindrome (" +
             num(occurrences) + " occurrence(s), all flush against the prefix "
             "boundary); its extension lies just past the budget");
  }

  // Counting-rule window.  Agreement advances by one length per budget
  // doubling, so the k <= 512 demand is out of reach; measure the law, verify
  // the decidable window, and report the criterion honestly as failed.
  const auto counts = tree.counts_by_length(512);
  std::size_t first_div = 0, short_lengths = 0;
  for (std::size_t k = 1; k <= 512; ++k) {
    if (counts[k] == pansiot_rule(k)) continue;
    if (counts[k] > pansiot_rule(k)) {
      o.fail("pal(" + num(k) + ") = " + num(counts[k]) +
             " exceeds the counting rule value " + num(pansiot_rule(k)));
      continue;
    }
    if (first_div == 0) first_div = k;
    ++short_lengths;
  }
  std::string law;
  for (unsigned lg = 17; lg <= 19; ++lg) {
    const Eertree t(s->prefix(std::size_t{1} << lg));
    const auto c = t.counts_by_length(64);
    std::size_t boundary = 64;
    for (std::size_t k = 1; k <= 64; ++k)
      if (c[k] != pansiot_rule(k)) {
        boundary = k - 1;
        break;
      }
    law += "2^" + num(lg) + " -> " + num(boundary) + ", ";
  }
  law += "2^20 -> " + num(first_div == 0 ? 512 : first_div - 1);
  if (first_div != 0) {
    o.fail("pal(" + num(first_div) + ") = " + num(counts[first_div]) +
           " but the counting rule gives " + num(pansiot_rule(first_div)) + "; " +
           num(short_lengths) + " of 512 lengths fall short at this budget");
    o.note("every count below the divergence point matches the rule exactly, and no "
           "count anywhere exceeds it");
    o.note("agreement boundary by prefix length: " + law +
           " (one additional length per doubling)");
    o.note("the rule at length k counts central slices of w_m for m <= k+1, and w_m "
           "first enters the sequence at 2^{m+1}-1-m (verified above for m = 1..10)");
    o.note("matching the rule at k = 512 therefore needs a prefix of roughly 2^513 "
           "symbols; the window is not reachable by prefix measurement at any "
           "feasible budget");
  } else {
    o.note("counts match the parity rule for k <= 512");
  }
  if (o.pass)
    o.note("w_0..w_6 verified: palindromic, lengths 2^{m+1}+m-1, all maximal, no "
           "interior strangers");
  return o;
}

// ---------------------------------------------------------------------------
// 16. fix(0 -> 010, 1 -> 11): exactly one palindrome of each odd length 2n+1
//     for n = 4..100.
Outcome c16() {
  Outcome o;
  const auto s = make_builtin("loglog");
  const Word pre = s->prefix(kBudget);
  const Eertree tree(pre);
  const auto counts = tree.counts_by_length(201);
  for (std::size_t n = 4; n <= 100; ++n) {
    const std::size_t k = 2 * n + 1;
    o.expect(counts[k] == 1,
             "pal(" + num(k) + ") = " + num(counts[k]) + ", expected exactly 1");
  }
  if (o.pass) o.note("pal(2n+1) = 1 confirmed for n = 4..100");
  return o;
}

// ---------------------------------------------------------------------------
// 17. Scrambled full-complexity image: the window-exclusion oracle passes and
//     the engine finds no palindrome of length 8 or 9 in a 10^6-symbol prefix.
Outcome c17() {
  Outcome o;
  const VerificationReport rep = scrambler_absence_oracle();
  o.expect(rep.status == CheckStatus::Pass,
           "window-exclusion oracle " + to_string(rep.status) +
               (rep.witness.empty() ? "" : " (" + rep.witness + ")"));
  const auto s = make_builtin("scrambler-image");
  const auto counts = palindrome_counts(s->prefix(kScramblerPrefix), 9);
  o.expect(counts[8] == 0, "pal(8) = " + num(counts[8]) + " on the 10^6 prefix, expected 0");
  o.expect(counts[9] == 0, "pal(9) = " + num(counts[9]) + " on the 10^6 prefix, expected 0");
  if (o.pass)
    o.note("all 16 window images exclude palindromes of length 8 and 9; engine agrees "
           "on the 10^6 prefix");
  return o;
}

// ---------------------------------------------------------------------------
// 18. The period-doubling palindrome counts behave like a base-2 automatic
//     sequence: at most 16 distinct truncated 2-kernel slices, saturating by
//     depth 6.
Outcome c18() {
  Outcome o;
  const auto s = make_builtin("period-doubling");
  const VerificationReport rep = verify_kernel_source(s, 2, 6, 4096, 16, kBudget);
  o.expect(rep.status == CheckStatus::Pass,
           "kernel check " + to_string(rep.status) +
               (rep.witness.empty() ? "" : " (" + rep.witness + ")"));
  for (const auto& n : rep.notes) o.note(n);
  return o;
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*fn)();
};

const Criterion kCriteria[] = {
    {1, "period-doubling palindrome counts (table, even gaps, halving identity)", c01},
    {2, "folding family palindrome cutoffs (6 streams, direct and summed)", c02},
    {3, "standard-word complexity signature for three slopes", c03},
    {4, "partial-sum sequences: 2k complexity, two palindromes, bijection", c04},
    {5, "fix(0->001, 1->111) keeps exactly two palindromes per length", c05},
    {6, "letterwise-image example palindrome staircase 2/1/0", c06},
    {7, "fix(0->001, 1->101): fac = 2k, palindromes stop at 8", c07},
    {8, "Chacon complexity 2k-1 and palindrome cutoff at 13", c08},
    {9, "Kolakoski palindrome counts (conjecture-consistent observation)", c09},
    {10, "strict bound k*pal(k) < 16*fac(k+k/4) across the catalog", c10},
    {11, "palindromic decompositions and even-prefix normalization", c11},
    {12, "twin involution on even-period binary palindromes (exhaustive)", c12},
    {13, "engines versus brute force on 200 random words", c13},
    {14, "nested-block stage words exact; pal predictions flagged", c14},
    {15, "quadratic example: maximal palindrome family and counting rule", c15},
    {16, "loglog example: unique odd palindromes through length 201", c16},
    {17, "scrambled image: palindromes of length 8 and 9 excluded", c17},
    {18, "period-doubling counts pass the base-2 kernel finiteness check", c18},
};

}  // namespace

int main() {
  int passed = 0;
  constexpr std::size_t kMaxLines = 12;
  for (const Criterion& c : kCriteria) {
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.lines.push_back(std::string("exception: ") + e.what());
    }
    std::printf("[%2d] %s  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.title);
    for (std::size_t i = 0; i < o.lines.size() && i < kMaxLines; ++i)
      std::printf("      %s\n", o.lines[i].c_str());
    if (o.lines.size() > kMaxLines)
      std::printf("      ... (%zu more)\n", o.lines.size() - kMaxLines);
    if (o.pass) ++passed;
  }
  std::printf("acceptance: %d/18 criteria passed\n", passed);
  return passed == 18 ? 0 : 1;
}
