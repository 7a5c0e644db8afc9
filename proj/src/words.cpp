#include "palcore/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace palcore {

void raise(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

namespace {

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) raise(ErrorKind::Input, "alphabet must not be empty");
  if (letters_.size() > kMaxAlphabet)
    raise(ErrorKind::Input, "alphabet exceeds " + std::to_string(kMaxAlphabet) + " letters");
  std::set<std::string> seen;
  for (const auto& l : letters_) {
    if (l.empty()) raise(ErrorKind::Input, "alphabet letter must not be empty");
    for (char c : l)
      if (std::isspace(static_cast<unsigned char>(c)))
        raise(ErrorKind::Input, "alphabet letter contains whitespace: '" + l + "'");
    if (!seen.insert(l).second)
      raise(ErrorKind::Input, "duplicate alphabet letter '" + l + "'");
  }
}

Alphabet Alphabet::binary() { return of_chars("01"); }

Alphabet Alphabet::of_chars(std::string_view chars) {
  std::vector<std::string> letters;
  letters.reserve(chars.size());
  for (char c : chars) letters.emplace_back(1, c);
  return Alphabet(std::move(letters));
}

const std::string& Alphabet::letter(Symbol i) const {
  if (i >= letters_.size()) raise(ErrorKind::Internal, "symbol index out of range");
  return letters_[i];
}

std::optional<Symbol> Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == name) return static_cast<Symbol>(i);
  return std::nullopt;
}

bool Alphabet::single_char() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](const std::string& l) { return l.size() == 1; });
}

Word Word::of(std::initializer_list<int> symbols) {
  std::vector<Symbol> s;
  s.reserve(symbols.size());
  for (int v : symbols) s.push_back(static_cast<Symbol>(v));
  return Word(std::move(s));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos > symbols_.size() || len > symbols_.size() - pos)
    raise(ErrorKind::Internal, "subword range out of bounds");
  return Word(std::vector<Symbol>(symbols_.begin() + pos, symbols_.begin() + pos + len));
}

Word reverse(const Word& w) {
  std::vector<Symbol> s(w.begin(), w.end());
  std::reverse(s.begin(), s.end());
  return Word(std::move(s));
}

bool is_palindrome(std::span<const Symbol> w) {
  for (std::size_t i = 0, j = w.size(); i + 1 < j; ++i, --j)
    if (w[i] != w[j - 1]) return false;
  return true;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

bool is_factor(const Word& needle, const Word& hay) {
  if (needle.empty()) return true;
  auto it = std::search(hay.begin(), hay.end(), needle.begin(), needle.end());
  return it != hay.end();
}

std::vector<std::size_t> run_lengths(const Word& w) {
  std::vector<std::size_t> runs;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    runs.push_back(j - i);
    i = j;
  }
  return runs;
}

Word cinf_derivative(const Word& w) {
  std::vector<std::size_t> runs = run_lengths(w);
  for (std::size_t r : runs)
    if (r > 2)
      raise(ErrorKind::Domain, "word is not differentiable: block of length " + std::to_string(r));
  std::size_t lo = 0, hi = runs.size();
  if (lo < hi && runs[lo] == 1) ++lo;
  if (lo < hi && runs[hi - 1] == 1) --hi;
  std::vector<Symbol> out;
  out.reserve(hi - lo);
  for (std::size_t i = lo; i < hi; ++i)
    out.push_back(static_cast<Symbol>(runs[i] - 1));  // block length 1 or 2 -> letter "1" or "2"
  return Word(std::move(out));
}

Morphism::Morphism(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size())
    raise(ErrorKind::Input, "morphism must define exactly one image per letter");
  for (const Word& im : images_)
    for (Symbol s : im)
      if (s >= alphabet_.size())
        raise(ErrorKind::Input, "morphism image uses a symbol outside the alphabet");
}

const Word& Morphism::image(Symbol a) const {
  if (a >= images_.size()) raise(ErrorKind::Input, "letter index out of range");
  return images_[a];
}

std::optional<std::size_t> Morphism::uniform_length() const {
  std::size_t d = images_.front().size();
  for (const Word& im : images_)
    if (im.size() != d) return std::nullopt;
  return d;
}

bool Morphism::erasing() const {
  return std::any_of(images_.begin(), images_.end(),
                     [](const Word& im) { return im.empty(); });
}

bool Morphism::primitive() const {
  if (erasing()) raise(ErrorKind::Input, "primitivity is defined for non-erasing morphisms");
  const std::size_t n = alphabet_size();
  // occ[a][b]: does b occur in the image of a?
  std::vector<std::vector<bool>> occ(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (Symbol b : images_[a]) occ[a][b] = true;

  auto all_positive = [n](const std::vector<std::vector<bool>>& m) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!m[a][b]) return false;
    return true;
  };

  std::vector<std::vector<bool>> cur = occ;
  const std::size_t bound = (n - 1) * (n - 1) + 1;  // Wielandt: no need to look further
  for (std::size_t step = 1; step <= bound; ++step) {
    if (all_positive(cur)) return true;
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; c < n; ++c)
        if (cur[a][c])
          for (std::size_t b = 0; b < n; ++b)
            if (occ[c][b]) next[a][b] = true;
    cur = std::move(next);
  }
  return false;
}

bool Morphism::prolongable_on(Symbol a) const {
  if (a >= images_.size()) return false;
  return !erasing() && images_[a].size() >= 2 && images_[a][0] == a;
}

std::optional<Symbol> Morphism::prolongable_letter() const {
  for (std::size_t a = 0; a < images_.size(); ++a)
    if (prolongable_on(static_cast<Symbol>(a))) return static_cast<Symbol>(a);
  return std::nullopt;
}

Word apply(const Morphism& m, const Word& w) {
  std::size_t total = 0;
  for (Symbol s : w) total += m.image(s).size();
  std::vector<Symbol> out;
  out.reserve(total);
  for (Symbol s : w) {
    const Word& im = m.image(s);
    out.insert(out.end(), im.begin(), im.end());
  }
  return Word(std::move(out));
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (!(outer.alphabet() == inner.alphabet()))
    raise(ErrorKind::Input, "cannot compose morphisms over different alphabets");
  std::vector<Word> images;
  images.reserve(inner.alphabet_size());
  for (std::size_t a = 0; a < inner.alphabet_size(); ++a)
    images.push_back(apply(outer, inner.image(static_cast<Symbol>(a))));
  return Morphism(outer.alphabet(), std::move(images));
}

Morphism morphism_power(const Morphism& m, unsigned e) {
  if (e == 0) {
    std::vector<Word> identity;
    for (std::size_t a = 0; a < m.alphabet_size(); ++a)
      identity.push_back(Word::of({static_cast<int>(a)}));
    return Morphism(m.alphabet(), std::move(identity));
  }
  Morphism acc = m;
  for (unsigned i = 1; i < e; ++i) acc = compose(m, acc);
  return acc;
}

Word fixed_point_prefix(const Morphism& m, Symbol seed, std::size_t n) {
  if (m.erasing())
    raise(ErrorKind::Construction, "fixed point requires a non-erasing morphism");
  if (!m.prolongable_on(seed))
    raise(ErrorKind::Construction,
          "morphism is not prolongable on '" + m.alphabet().letter(seed) + "'");
  std::vector<Symbol> buf(m.image(seed).begin(), m.image(seed).end());
  std::size_t idx = 1;
  while (buf.size() < n) {
    const Word& im = m.image(buf[idx]);
    buf.insert(buf.end(), im.begin(), im.end());
    ++idx;
  }
  buf.resize(std::min(buf.size(), n));
  return Word(std::move(buf));
}

std::string format_word(const Word& w, const Alphabet& a) {
  std::string out;
  const bool tight = a.single_char();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!tight && i > 0) out += ' ';
    out += a.letter(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text, const Alphabet& a) {
  std::vector<Symbol> out;
  if (a.single_char()) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      auto idx = a.index_of(std::string_view(&c, 1));
      if (!idx) raise(ErrorKind::Input, std::string("unknown letter '") + c + "'");
      out.push_back(*idx);
    }
  } else {
    for (const std::string& tok : split_ws(text)) {
      auto idx = a.index_of(tok);
      if (!idx) raise(ErrorKind::Input, "unknown letter '" + tok + "'");
      out.push_back(*idx);
    }
  }
  return Word(std::move(out));
}

std::pair<Alphabet, Word> parse_word_auto(std::string_view text) {
  std::vector<std::string> tokens;
  const bool spaced = text.find_first_of(" \t") != std::string_view::npos;
  if (spaced) {
    tokens = split_ws(text);
  } else {
    for (char c : text) tokens.emplace_back(1, c);
  }
  if (tokens.empty()) raise(ErrorKind::Input, "empty word");
  std::set<std::string> letters(tokens.begin(), tokens.end());
  Alphabet a(std::vector<std::string>(letters.begin(), letters.end()));
  std::vector<Symbol> syms;
  syms.reserve(tokens.size());
  for (const std::string& t : tokens) syms.push_back(*a.index_of(t));
  return {std::move(a), Word(std::move(syms))};
}

}  // namespace palcore
