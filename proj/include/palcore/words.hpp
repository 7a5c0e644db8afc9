#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace palcore {

enum class ErrorKind { Input, Domain, Construction, Resource, Internal };

// Exception carrying a coarse category so the C API (and the CLI behind it)
// can map failures onto stable status codes.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& msg);

// A symbol is an index into an Alphabet. Alphabets in this domain are tiny
// (binary most of the time, a handful of letters otherwise), so 8 bits is
// plenty and keeps million-symbol prefixes cheap.
using Symbol = std::uint8_t;
inline constexpr std::size_t kMaxAlphabet = 255;

class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> letters);
  static Alphabet binary();                           // letters "0", "1"
  static Alphabet of_chars(std::string_view chars);   // one letter per char

  std::size_t size() const noexcept { return letters_.size(); }
  const std::string& letter(Symbol i) const;
  std::optional<Symbol> index_of(std::string_view name) const;
  bool single_char() const noexcept;  // every letter is one character wide

  bool operator==(const Alphabet&) const = default;

private:
  std::vector<std::string> letters_;
};

class Word {
public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  static Word of(std::initializer_list<int> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  void push_back(Symbol s) { symbols_.push_back(s); }
  void append(const Word& w) {
    symbols_.insert(symbols_.end(), w.symbols_.begin(), w.symbols_.end());
  }
  Word subword(std::size_t pos, std::size_t len) const;

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

private:
  std::vector<Symbol> symbols_;
};

Word reverse(const Word& w);
bool is_palindrome(std::span<const Symbol> w);
inline bool is_palindrome(const Word& w) { return is_palindrome(w.symbols()); }
Word concat(const Word& a, const Word& b);
bool is_factor(const Word& needle, const Word& hay);

// Run-length view of a word: lengths of maximal blocks of equal symbols.
std::vector<std::size_t> run_lengths(const Word& w);

// Run-length derivative used for C-infinity words over {1,2}: take the block
// lengths, dropping the first and/or last block when it has length one (a
// boundary block may be cut, an inner block may not). Blocks of length >= 3
// make the word non-differentiable.
Word cinf_derivative(const Word& w);

class Morphism {
public:
  Morphism(Alphabet alphabet, std::vector<Word> images);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t alphabet_size() const noexcept { return images_.size(); }
  const Word& image(Symbol a) const;
  const std::vector<Word>& images() const noexcept { return images_; }

  std::optional<std::size_t> uniform_length() const;
  bool erasing() const;
  // Primitivity via boolean powers of the occurrence matrix, checked up to
  // the Wielandt bound (n-1)^2 + 1.
  bool primitive() const;
  bool prolongable_on(Symbol a) const;
  std::optional<Symbol> prolongable_letter() const;  // smallest such letter

  bool operator==(const Morphism&) const = default;

private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

Word apply(const Morphism& m, const Word& w);
Morphism compose(const Morphism& outer, const Morphism& inner);
Morphism morphism_power(const Morphism& m, unsigned e);

// First n symbols of the fixed point obtained by iterating m on seed.
// Requires m non-erasing and prolongable on seed (m(seed) starts with seed
// and has length >= 2). Materializes at most n + max-image-length symbols.
Word fixed_point_prefix(const Morphism& m, Symbol seed, std::size_t n);

// Text round-trip. Words over single-character alphabets print concatenated;
// otherwise letters are space-separated (parse accepts both shapes).
std::string format_word(const Word& w, const Alphabet& a);
Word parse_word(std::string_view text, const Alphabet& a);
std::pair<Alphabet, Word> parse_word_auto(std::string_view text);

}  // namespace palcore
