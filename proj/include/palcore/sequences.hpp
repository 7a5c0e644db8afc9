#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "palcore/words.hpp"

namespace palcore {

// An infinite symbolic sequence that produces finite prefixes on demand.
// Prefixes are cached, so repeated calls with growing n only pay for the
// newly generated suffix.  Instances are safe to share across threads.
class Sequence {
 public:
  virtual ~Sequence() = default;

  // First n symbols.  Raises when the source cannot supply that many
  // symbols (Resource for inherent bounds, Input when user-supplied
  // parameters such as a continued fraction run out).
  Word prefix(std::size_t n) const;

  const Alphabet& alphabet() const { return alphabet_; }
  const std::string& name() const { return name_; }
  const std::string& params() const { return params_; }

  // For fixed points of a morphism: the morphism and its seed letter.
  virtual std::optional<Morphism> generating_morphism() const { return std::nullopt; }
  virtual std::optional<Symbol> generating_seed() const { return std::nullopt; }

  // For derived sources (partial sums, letter-wise images): the sequence
  // they are built from.
  virtual std::shared_ptr<const Sequence> parent() const { return nullptr; }

 protected:
  Sequence(Alphabet alphabet, std::string name, std::string params);

  // Append symbols to buf until buf.size() >= need, or raise.
  virtual void extend(std::vector<Symbol>& buf, std::size_t need) const = 0;

 private:
  Alphabet alphabet_;
  std::string name_;
  std::string params_;
  mutable std::mutex mu_;
  mutable std::vector<Symbol> buf_;
};

using SequencePtr = std::shared_ptr<const Sequence>;

// Fixed point of a non-erasing morphism prolongable on `seed`.
SequencePtr make_morphic(Morphism m, Symbol seed, std::string name = "",
                         std::string params = "");

// Standard-word sequence driven by the terms cf = a1, a2, ... (all >= 1):
// with s(-1) = "1", s(0) = "0" and s(n) = s(n-1)^{a_n} s(n-2), the s(n) are
// prefixes of one another and converge to an infinite binary sequence.
// cf = 1,1,1,... yields 01001010....  Raises Input when a prefix longer
// than the given terms can generate is requested.
SequencePtr make_sturmian(std::vector<unsigned> cf);

// Paperfolding sequences, indexed from position 1: writing n = 2^m (2j+1),
// the n-th symbol is j + i_m mod 2 where i_0, i_1, ... are the folding
// instructions.  make_paperfolding cycles a finite instruction word;
// the classical variant uses the fixed instruction stream 0, 0, 1, 0, 1, ...
SequencePtr make_paperfolding(std::vector<int> instructions);
SequencePtr make_paperfolding_classical();

// Partial sums mod 2 of a binary parent sequence, starting from `first`:
// out(0) = first, out(n+1) = out(n) + parent(n) mod 2.  Sends paperfolding
// sequences to Rudin-Shapiro-type sequences and standard-word sequences to
// Rote-type sequences.
SequencePtr make_running_sum(SequencePtr parent, Symbol first,
                             std::string name = "", std::string params = "");

SequencePtr make_rudin_shapiro(std::vector<int> instructions);
SequencePtr make_rudin_shapiro_classical();
SequencePtr make_rote(std::vector<unsigned> cf, Symbol first);

// Letter-wise image of `parent`: parent symbol a is replaced by images[a],
// a non-empty word over `target`.  (Unlike Morphism, the target alphabet may
// differ from the parent's.)
SequencePtr make_pointwise_image(SequencePtr parent, Alphabet target,
                                 std::vector<Word> images,
                                 std::string name = "", std::string params = "");

// Kolakoski sequence over {1,2} starting 2211...: it equals its own
// run-length encoding.
SequencePtr make_kolakoski();

// Binary Champernowne sequence: the binary expansions of 0, 1, 2, ...
// concatenated, starting 0110111001011101111000....
SequencePtr make_champernowne();

// Limit of the nested word family below: w(0) = "1" and w(j+1) extends w(j)
// by blocks of zeros interleaved with w(j) and its reversal.  Prefixes are
// served from the smallest stage that is long enough; only stages up to
// j = 4 (about 1.8e7 symbols) are materialisable, beyond that prefix()
// raises Resource.
SequencePtr make_remcor();

// Stage words of the construction behind make_remcor.  remcor_word accepts
// j <= 4 (Resource beyond); remcor_length evaluates the length recurrence
// without materialising the word and raises Resource on overflow.
Word remcor_word(unsigned j);
std::uint64_t remcor_length(unsigned j);

// Named builtin sequences, constructed on demand.
std::vector<std::string> builtin_names();
SequencePtr make_builtin(const std::string& name);

}  // namespace palcore
