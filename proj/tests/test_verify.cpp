#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <string>
#include <vector>

#include "palcore/sequences.hpp"
#include "palcore/verify.hpp"
#include "palcore/words.hpp"

using namespace palcore;

namespace {

Morphism binary_morphism(const char* img0, const char* img1) {
  const Alphabet bin = Alphabet::binary();
  return Morphism(bin, {parse_word(img0, bin), parse_word(img1, bin)});
}

bool has_note(const VerificationReport& rep, const std::string& needle) {
  for (const std::string& n : rep.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("block-counting recursion holds for uniform substitutions with shared prefix") {
  const VerificationReport pd =
      verify_general_recursion(binary_morphism("01", "00"), 0, 64, std::size_t{1} << 16);
  CHECK(pd.status == CheckStatus::Pass);
  CHECK(has_note(pd, "p=\"0\""));

  const Alphabet ab = Alphabet::of_chars("ab");
  const Morphism tm2(ab, {parse_word("abba", ab), parse_word("baab", ab)});
  const VerificationReport t = verify_general_recursion(tm2, 0, 64, std::size_t{1} << 16);
  CHECK(t.status == CheckStatus::Pass);
}

TEST_CASE("block-counting recursion is not applicable off its hypotheses") {
  // Non-uniform image lengths.
  const auto fib = verify_general_recursion(binary_morphism("01", "0"), 0, 32, 1 << 14);
  CHECK(fib.status == CheckStatus::NotApplicable);

  // Non-primitive substitution.
  const auto chacon =
      verify_general_recursion(binary_morphism("0010", "1"), 0, 32, 1 << 14);
  CHECK(chacon.status == CheckStatus::NotApplicable);

  // Uniform and primitive, but without any shared-prefix decomposition into
  // palindromic parts.
  const auto vseq = verify_general_recursion(binary_morphism("001", "101"), 0, 32, 1 << 14);
  CHECK(vseq.status == CheckStatus::NotApplicable);

  CHECK_THROWS_AS(verify_general_recursion(binary_morphism("01", "00"), 0, 1, 1 << 12),
                  Error);
}

TEST_CASE("base-expansion slice counting saturates on automatic inputs") {
  // values[n] = n mod 4 comes from a finite base-2 automaton.
  std::vector<std::uint64_t> values(2048);
  for (std::size_t n = 0; n < values.size(); ++n) values[n] = n % 4;
  const KernelCounts kc = kernel_distinct_counts(values, 2, 5, 2048);
  REQUIRE(kc.distinct_by_depth.size() == 6);
  CHECK(kc.saturated);
  CHECK(kc.window == 2048 / 32);
  for (std::size_t i = 1; i < kc.distinct_by_depth.size(); ++i)
    CHECK(kc.distinct_by_depth[i - 1] <= kc.distinct_by_depth[i]);
  CHECK(kc.distinct_by_depth.back() <= 8);

  // A constant sequence has a single slice at every depth.
  const std::vector<std::uint64_t> flat(1024, 7);
  const KernelCounts kf = kernel_distinct_counts(flat, 2, 4, 1024);
  CHECK(kf.saturated);
  for (std::size_t c : kf.distinct_by_depth) CHECK(c == 1);

  CHECK_THROWS_AS(kernel_distinct_counts(values, 1, 3, 512), Error);
  CHECK_THROWS_AS(kernel_distinct_counts(values, 2, 0, 512), Error);
  CHECK_THROWS_AS(kernel_distinct_counts(values, 2, 12, 512), Error);
}

TEST_CASE("slice counting rejects unsaturated or oversized kernels") {
  // A sequence with no base-2 self-similarity: values[n] = n.
  std::vector<std::uint64_t> values(4096);
  for (std::size_t n = 0; n < values.size(); ++n) values[n] = n;
  const VerificationReport rep = kernel_finiteness_check(values, 2, 5, 4096, 16);
  CHECK(rep.status == CheckStatus::Fail);
}

TEST_CASE("complexity bound check passes on aperiodic catalog members") {
  for (const char* name : {"period-doubling", "fibonacci", "rote-morphic"}) {
    const auto rep = verify_cassaigne_bound(make_builtin(name), 32, std::size_t{1} << 16);
    CAPTURE(name);
    CHECK(rep.status == CheckStatus::Pass);
    CHECK_FALSE(rep.observations.empty());
  }
}

TEST_CASE("complexity bound check skips eventually periodic sources") {
  // 0 -> 01, 1 -> 01 has the periodic fixed point (01)^inf.
  const auto rep = verify_cassaigne_bound(
      make_morphic(binary_morphism("01", "01"), 0, "alternating"), 16, 1 << 14);
  CHECK(rep.status == CheckStatus::NotApplicable);
}

TEST_CASE("minimal-complexity signature check") {
  CHECK(verify_droubay_pirillo(make_builtin("fibonacci"), 48, 1 << 16).status ==
        CheckStatus::Pass);
  std::vector<unsigned> cf;
  for (int i = 0; i < 16; ++i) {
    cf.push_back(2);
    cf.push_back(1);
  }
  CHECK(verify_droubay_pirillo(make_sturmian(cf), 48, 1 << 16).status ==
        CheckStatus::Pass);
  // The period-doubling word is not of minimal complexity: pal(3) = 3.
  const auto pd = verify_droubay_pirillo(make_builtin("period-doubling"), 16, 1 << 14);
  CHECK(pd.status == CheckStatus::Fail);
  CHECK(pd.witness.find("3") != std::string::npos);
}

TEST_CASE("difference-word correspondence for lattice words") {
  const std::vector<unsigned> cf(30, 1);
  const auto rep = verify_rote_bijection(make_rote(cf, 0), 32, std::size_t{1} << 15);
  CHECK(rep.status == CheckStatus::Pass);

  // Sources that do not expose a parent sequence are out of scope.
  CHECK(verify_rote_bijection(make_builtin("period-doubling"), 16, 1 << 13).status ==
        CheckStatus::NotApplicable);
  // Non-binary sources are out of scope.
  CHECK(verify_rote_bijection(make_builtin("kolakoski"), 16, 1 << 13).status ==
        CheckStatus::NotApplicable);
}

TEST_CASE("survey rows pass for the light catalog members") {
  for (const char* name : {"period-doubling", "fibonacci", "thue-morse-squared",
                           "rote-morphic", "v-sequence", "chacon", "loglog",
                           "image-example", "kolakoski", "paperfolding-classical",
                           "rudin-shapiro-classical"}) {
    const auto rep = survey_table_check(name, std::size_t{1} << 17);
    CAPTURE(name);
    CAPTURE(rep.witness);
    CHECK(rep.status == CheckStatus::Pass);
  }
  CHECK_THROWS_AS(survey_table_check("no-such-source", 1 << 12), Error);
}

TEST_CASE("image-absence oracle needs no sequence at all") {
  const auto rep = scrambler_absence_oracle();
  CHECK(rep.status == CheckStatus::Pass);
  CHECK_FALSE(rep.notes.empty());
}

TEST_CASE("named check dispatch") {
  const SequencePtr pd = make_builtin("period-doubling");
  CHECK(run_named_check("general", pd, 48, 1 << 15).status == CheckStatus::Pass);
  CHECK(run_named_check("kernel", pd, 16, 1 << 14).status == CheckStatus::Pass);
  CHECK(run_named_check("cassaigne", pd, 24, 1 << 15).status == CheckStatus::Pass);
  CHECK(run_named_check("droubay-pirillo", pd, 16, 1 << 14).status == CheckStatus::Fail);
  CHECK(run_named_check("scrambler", nullptr, 8, 1 << 12).status == CheckStatus::Pass);
  // A source built directly (not from a substitution) has no generating rule.
  CHECK(run_named_check("general", make_builtin("kolakoski"), 16, 1 << 13).status ==
        CheckStatus::NotApplicable);
  CHECK_THROWS_AS(run_named_check("no-such-check", pd, 8, 1 << 12), Error);
  CHECK_THROWS_AS(run_named_check("cassaigne", nullptr, 8, 1 << 12), Error);
}

TEST_CASE("reports serialize to JSON with their verdicts") {
  const auto rep = run_named_check("scrambler", nullptr, 8, 1 << 12);
  const std::string j = rep.to_json();
  CHECK(j.find("\"check\"") != std::string::npos);
  CHECK(j.find("\"pass\"") != std::string::npos);
  const std::string s = to_string(CheckStatus::NotApplicable);
  CHECK(s == "not-applicable");
}
