#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "palcore/sequences.hpp"
#include "palcore/words.hpp"

namespace palcore {

// Empirical verification suite: structural identities, complexity bounds and
// catalog expectations, all checked against the counting engines.

enum class CheckStatus { Pass, Fail, NotApplicable };

std::string to_string(CheckStatus s);

// Outcome of a single check.  `witness` carries the first counterexample when
// the check fails.  `notes` document parameters, thresholds and anything that
// limited the run; `observations` record measured-but-not-asserted data.
struct VerificationReport {
  std::string check;
  std::string params;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string witness;
  std::vector<std::string> notes;
  std::vector<std::string> observations;

  std::string to_json() const;
};

// Block-counting recursion for palindrome counts of fixed points of suitable
// substitutions.  Requires a primitive substitution admitting a decomposition
// sigma(a) = p q_a with p and every q_a palindromic, all images of one common
// length l, and the q_a non-empty with pairwise distinct first letters.  For
// all n past some threshold n0,
//     pal(n) = sum of pal(s) over s >= 1 with n = s*l + |p| - 2j, 0 <= j < l,
// and pal(n) = 0 when no such s exists.  The check locates the empirical
// threshold and passes when the identity holds on [n0, n_max] with
// n0 <= max(1, n_max / 2).
VerificationReport verify_general_recursion(const Morphism& m, Symbol seed,
                                            std::size_t n_max, std::size_t budget);

// Distinct truncated base-d kernel slices of an integer sequence.  The slice
// for (t, r), 0 <= t <= depth and 0 <= r < d^t, is values[d^t * n + r] for
// n = 0 .. horizon / d^depth - 1.  distinct_by_depth[t] counts the distinct
// slices among all levels up to t; `saturated` reports whether the final
// level added no new slice.
struct KernelCounts {
  std::vector<std::size_t> distinct_by_depth;
  bool saturated = false;
  std::size_t window = 0;
};

KernelCounts kernel_distinct_counts(const std::vector<std::uint64_t>& values,
                                    std::uint64_t d, unsigned depth,
                                    std::size_t horizon);

// Passes when the number of distinct truncated kernel slices saturates before
// the final depth and stays within `limit` — the signature of a sequence of
// values consistent with a base-d automatic rule.
VerificationReport kernel_finiteness_check(const std::vector<std::uint64_t>& values,
                                           std::uint64_t d, unsigned depth,
                                           std::size_t horizon, std::size_t limit);

// Engine-backed variant: feeds the palindrome counts of `s` to the kernel
// check.
VerificationReport verify_kernel_source(const SequencePtr& s, std::uint64_t d,
                                        unsigned depth, std::size_t horizon,
                                        std::size_t limit, std::size_t budget);

// Strict product bound k * pal(k) < 16 * fac(k + k/4) for aperiodic
// sequences, evaluated only on k whose counts stabilized; a k that could not
// be tested is reported, never passed silently.  Sequences whose 4096-symbol
// prefix is periodic with period at most half its length are screened out as
// not applicable.  Ratio observations (including pal(k)^2 / fac(k)) are
// attached without being asserted.
VerificationReport verify_cassaigne_bound(const SequencePtr& s, std::size_t k_max,
                                          std::size_t budget);

// Joint signature of Sturmian sequences: fac(k) = k + 1 together with
// pal(k) = 2 for odd k and pal(k) = 1 for even k >= 2.
VerificationReport verify_droubay_pirillo(const SequencePtr& s, std::size_t k_max,
                                          std::size_t budget);

// Difference/integration correspondence for complexity-2k sequences built as
// running sums of Sturmian sequences: for each k <= k_max the sequence has
// exactly two palindromic factors of length k, applying the letterwise
// difference map to either yields one palindrome of length k - 1 (with
// central letter 0 when k is even), and integrating that word from initial
// letter 0 and from 1 recovers exactly the two originals.
VerificationReport verify_rote_bijection(const SequencePtr& rote, std::size_t k_max,
                                         std::size_t budget);

// Catalog expectations for one built-in source, checked on stabilized k;
// unknown names raise an input error.
VerificationReport survey_table_check(const std::string& name, std::size_t budget);

// Engine-independent exclusion argument for the scrambled full-complexity
// image: the source contains every binary word, every length-8 or length-9
// factor of the image lies inside the image of some binary word of length 4,
// and no window of length 8 or 9 in any of those sixteen images is a
// palindrome.
VerificationReport scrambler_absence_oracle();

// Dispatch by check name: general | kernel | cassaigne | droubay-pirillo |
// rote | survey | scrambler.  `source` may be null only for `scrambler`.
VerificationReport run_named_check(const std::string& check, const SequencePtr& source,
                                   std::size_t k_max, std::size_t budget);

// Catalog sweep: survey of every built-in source plus the oracle checks.
// all_pass is true only when every report passes.
struct SuiteReport {
  std::size_t budget = 0;
  bool all_pass = false;
  std::vector<VerificationReport> reports;

  std::string to_json() const;
};

SuiteReport run_report(std::size_t budget);

}  // namespace palcore
