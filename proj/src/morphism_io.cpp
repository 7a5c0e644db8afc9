#include "palcore/morphism_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace palcore {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(std::string_view origin, std::size_t line, const std::string& msg) {
  std::ostringstream os;
  os << origin << ":" << line << ": " << msg;
  raise(ErrorKind::Input, os.str());
}

}  // namespace

MorphismSpec parse_morphism_text(std::string_view text, std::string_view origin) {
  std::optional<Alphabet> alphabet;
  std::map<std::string, std::pair<std::size_t, std::vector<std::string>>> rules;  // letter -> (line, image)
  std::optional<std::string> seed;
  std::size_t seed_line = 0;

  std::istringstream input{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(input, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::vector<std::string> tok = tokenize(raw);
    if (tok.empty()) continue;

    if (tok[0] == "alphabet:") {
      if (alphabet) fail(origin, lineno, "duplicate alphabet declaration");
      if (tok.size() < 2) fail(origin, lineno, "alphabet declaration lists no letters");
      try {
        alphabet = Alphabet(std::vector<std::string>(tok.begin() + 1, tok.end()));
      } catch (const Error& e) {
        fail(origin, lineno, e.what());
      }
    } else if (tok[0] == "rule:") {
      if (!alphabet) fail(origin, lineno, "rule appears before the alphabet declaration");
      if (tok.size() < 3 || tok[2] != "->")
        fail(origin, lineno, "rule must have the shape 'rule: <letter> -> <letters...>'");
      const std::string& letter = tok[1];
      if (!alphabet->index_of(letter))
        fail(origin, lineno, "rule for unknown letter '" + letter + "'");
      if (rules.count(letter))
        fail(origin, lineno, "duplicate rule for letter '" + letter + "'");
      std::vector<std::string> image(tok.begin() + 3, tok.end());
      for (const std::string& im : image)
        if (!alphabet->index_of(im))
          fail(origin, lineno, "rule image uses unknown letter '" + im + "'");
      rules[letter] = {lineno, std::move(image)};
    } else if (tok[0] == "seed:") {
      if (seed) fail(origin, lineno, "duplicate seed declaration");
      if (tok.size() != 2) fail(origin, lineno, "seed declaration must name exactly one letter");
      seed = tok[1];
      seed_line = lineno;
    } else {
      fail(origin, lineno, "unknown directive '" + tok[0] + "'");
    }
  }

  if (!alphabet) fail(origin, lineno == 0 ? 1 : lineno, "missing alphabet declaration");
  for (std::size_t i = 0; i < alphabet->size(); ++i) {
    const std::string& l = alphabet->letter(static_cast<Symbol>(i));
    if (!rules.count(l))
      fail(origin, lineno, "missing rule for letter '" + l + "'");
  }
  std::optional<Symbol> seed_sym;
  if (seed) {
    seed_sym = alphabet->index_of(*seed);
    if (!seed_sym) fail(origin, seed_line, "seed letter '" + *seed + "' is not in the alphabet");
  }

  std::vector<Word> images(alphabet->size());
  for (std::size_t a = 0; a < alphabet->size(); ++a) {
    const auto& image = rules.at(alphabet->letter(static_cast<Symbol>(a))).second;
    std::vector<Symbol> syms;
    syms.reserve(image.size());
    for (const std::string& im : image) syms.push_back(*alphabet->index_of(im));
    images[a] = Word(std::move(syms));
  }
  return MorphismSpec{Morphism(*alphabet, std::move(images)), seed_sym};
}

MorphismSpec parse_morphism_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::Input, path + ": cannot open morphism file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_morphism_text(buf.str(), path);
}

std::string format_morphism(const Morphism& m, std::optional<Symbol> seed) {
  const Alphabet& a = m.alphabet();
  std::ostringstream os;
  os << "alphabet:";
  for (std::size_t i = 0; i < a.size(); ++i) os << ' ' << a.letter(static_cast<Symbol>(i));
  os << '\n';
  for (std::size_t i = 0; i < a.size(); ++i) {
    os << "rule: " << a.letter(static_cast<Symbol>(i)) << " ->";
    for (Symbol s : m.image(static_cast<Symbol>(i))) os << ' ' << a.letter(s);
    os << '\n';
  }
  if (seed) os << "seed: " << a.letter(*seed) << '\n';
  return os.str();
}

}  // namespace palcore
