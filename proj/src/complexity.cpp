#include "palcore/complexity.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace palcore {

// --- palindromic tree -------------------------------------------------------

Eertree::Eertree(const Word& w) : w_(w) {
  const std::size_t n = w_.size();
  len_.reserve(n + 2);
  link_.reserve(n + 2);
  first_start_.reserve(n + 2);
  child_count_.reserve(n + 2);
  std::unordered_map<std::uint64_t, std::int32_t> go;
  go.reserve(n + 2);

  auto add_node = [&](std::int32_t len, std::int32_t link, std::uint32_t first) {
    len_.push_back(len);
    link_.push_back(link);
    first_start_.push_back(first);
    child_count_.push_back(0);
    return static_cast<std::int32_t>(len_.size() - 1);
  };
  add_node(-1, 0, 0);  // node 0: length -1 root
  add_node(0, 0, 0);   // node 1: empty-word root, linked to node 0

  // Walk suffix links from v until the palindrome can be extended by w_[i].
  auto extendable = [&](std::int32_t v, std::size_t i) {
    while (true) {
      const std::size_t l = static_cast<std::size_t>(len_[v] + 1);
      if (i >= l && w_[i - l] == w_[i]) return v;
      v = link_[v];
    }
  };

  std::int32_t last = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Symbol c = w_[i];
    const std::int32_t v = extendable(last, i);
    const std::uint64_t key = (std::uint64_t(v) << 8) | c;
    if (auto it = go.find(key); it != go.end()) {
      last = it->second;
      continue;
    }
    const std::int32_t new_len = len_[v] + 2;
    std::int32_t link;
    if (new_len == 1) {
      link = 1;  // single letters fall back to the empty word
    } else {
      const std::int32_t u = extendable(link_[v], i);
      link = go.at((std::uint64_t(u) << 8) | c);
    }
    const std::int32_t id =
        add_node(new_len, link, static_cast<std::uint32_t>(i + 1 - std::size_t(new_len)));
    go.emplace(key, id);
    ++child_count_[v];
    last = id;
  }
  nodes_ = len_.size();
  if (nodes_ > n + 2)
    raise(ErrorKind::Internal, "palindromic factor count exceeded its structural bound");
}

std::vector<std::uint64_t> Eertree::counts_by_length(std::size_t k_max) const {
  std::vector<std::uint64_t> counts(k_max + 1, 0);
  counts[0] = 1;
  for (std::size_t v = 2; v < nodes_; ++v) {
    const std::size_t l = static_cast<std::size_t>(len_[v]);
    if (l <= k_max) ++counts[l];
  }
  return counts;
}

std::vector<std::pair<Word, std::size_t>> Eertree::of_length(std::size_t k) const {
  std::vector<std::pair<Word, std::size_t>> out;
  if (k == 0) {
    out.emplace_back(Word{}, 0);
    return out;
  }
  for (std::size_t v = 2; v < nodes_; ++v)
    if (static_cast<std::size_t>(len_[v]) == k)
      out.emplace_back(w_.subword(first_start_[v], k), first_start_[v]);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<Word> Eertree::maximal() const {
  std::vector<Word> out;
  for (std::size_t v = 2; v < nodes_; ++v)
    if (child_count_[v] == 0)
      out.push_back(w_.subword(first_start_[v], static_cast<std::size_t>(len_[v])));
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<std::uint64_t> palindrome_counts(const Word& w, std::size_t k_max) {
  return Eertree(w).counts_by_length(k_max);
}

std::vector<std::pair<Word, std::size_t>> palindromes_of_length(const Word& w, std::size_t k) {
  return Eertree(w).of_length(k);
}

std::vector<std::pair<Word, std::size_t>> palindrome_inventory(const Word& w,
                                                               std::size_t k_max) {
  const Eertree tree(w);
  std::vector<std::pair<Word, std::size_t>> out;
  for (std::size_t k = 1; k <= k_max; ++k) {
    auto rows = tree.of_length(k);
    out.insert(out.end(), std::make_move_iterator(rows.begin()),
               std::make_move_iterator(rows.end()));
  }
  return out;
}

std::vector<Word> maximal_palindromes(const Word& w) { return Eertree(w).maximal(); }

// --- factor counting: suffix automaton --------------------------------------

namespace {

class SuffixAutomaton {
 public:
  SuffixAutomaton(const Word& w, std::size_t alpha) : a_(std::max<std::size_t>(alpha, 1)) {
    flat_ = a_ <= 8;
    const std::size_t n = w.size();
    len_.reserve(2 * n + 2);
    link_.reserve(2 * n + 2);
    if (flat_)
      flat_go_.reserve((2 * n + 2) * a_);
    else
      map_go_.reserve(2 * n + 2);
    new_state(0, -1);
    std::int32_t last = 0;
    for (const Symbol c : w) last = extend(last, c);
    n_ = n;
  }

  std::vector<std::uint64_t> counts(std::size_t k_max) const {
    // Each non-initial state contributes one distinct factor for every
    // length in (len(link), len].
    std::vector<std::int64_t> diff(n_ + 2, 0);
    for (std::size_t v = 1; v < len_.size(); ++v) {
      diff[static_cast<std::size_t>(len_[link_[v]]) + 1] += 1;
      diff[static_cast<std::size_t>(len_[v]) + 1] -= 1;
    }
    std::vector<std::uint64_t> out(k_max + 1, 0);
    out[0] = 1;
    std::int64_t run = 0;
    for (std::size_t k = 1; k <= n_; ++k) {
      run += diff[k];
      if (k <= k_max) out[k] = static_cast<std::uint64_t>(run);
    }
    return out;
  }

 private:
  std::int32_t new_state(std::int32_t len, std::int32_t link) {
    len_.push_back(len);
    link_.push_back(link);
    if (flat_) flat_go_.resize(flat_go_.size() + a_, -1);
    return static_cast<std::int32_t>(len_.size() - 1);
  }

  std::int32_t get(std::int32_t v, Symbol c) const {
    if (flat_) return flat_go_[std::size_t(v) * a_ + c];
    const auto it = map_go_.find((std::uint64_t(v) << 8) | c);
    return it == map_go_.end() ? -1 : it->second;
  }

  void set(std::int32_t v, Symbol c, std::int32_t to) {
    if (flat_)
      flat_go_[std::size_t(v) * a_ + c] = to;
    else
      map_go_[(std::uint64_t(v) << 8) | c] = to;
  }

  std::int32_t extend(std::int32_t last, Symbol c) {
    const std::int32_t cur = new_state(len_[last] + 1, -1);
    std::int32_t p = last;
    while (p != -1 && get(p, c) == -1) {
      set(p, c, cur);
      p = link_[p];
    }
    if (p == -1) {
      link_[cur] = 0;
      return cur;
    }
    const std::int32_t q = get(p, c);
    if (len_[p] + 1 == len_[q]) {
      link_[cur] = q;
      return cur;
    }
    const std::int32_t clone = new_state(len_[p] + 1, link_[q]);
    for (unsigned s = 0; s < a_; ++s) {
      const std::int32_t t = get(q, static_cast<Symbol>(s));
      if (t != -1) set(clone, static_cast<Symbol>(s), t);
    }
    while (p != -1 && get(p, c) == q) {
      set(p, c, clone);
      p = link_[p];
    }
    link_[q] = clone;
    link_[cur] = clone;
    return cur;
  }

  std::size_t a_;
  std::size_t n_ = 0;
  bool flat_ = true;
  std::vector<std::int32_t> len_, link_;
  std::vector<std::int32_t> flat_go_;
  std::unordered_map<std::uint64_t, std::int32_t> map_go_;
};

// --- factor counting: hashed sliding windows --------------------------------

constexpr std::uint64_t kHashMod = (std::uint64_t(1) << 61) - 1;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(z & kHashMod) + static_cast<std::uint64_t>(z >> 61);
  if (r >= kHashMod) r -= kHashMod;
  return r;
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r >= kHashMod) r -= kHashMod;
  return r;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) { return mod_add(a, kHashMod - b); }

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mod_mul(r, b);
    b = mod_mul(b, b);
    e >>= 1;
  }
  return r;
}

constexpr std::uint64_t kBase1 = 0x9ddfea08eb382d69ULL % kHashMod;
constexpr std::uint64_t kBase2 = 0xc3a5c85c97cb3127ULL % kHashMod;

std::uint64_t hashed_window_count(const Word& w, std::size_t k) {
  const std::size_t n = w.size();
  if (k == 0 || k > n) return k == 0 ? 1 : 0;
  const std::uint64_t top1 = mod_pow(kBase1, k);
  const std::uint64_t top2 = mod_pow(kBase2, k);
  std::vector<unsigned __int128> seen;
  seen.reserve(n - k + 1);
  std::uint64_t h1 = 0, h2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t x = std::uint64_t(w[i]) + 1;
    h1 = mod_add(mod_mul(h1, kBase1), x);
    h2 = mod_add(mod_mul(h2, kBase2), x);
    if (i >= k) {
      const std::uint64_t y = std::uint64_t(w[i - k]) + 1;
      h1 = mod_sub(h1, mod_mul(y, top1));
      h2 = mod_sub(h2, mod_mul(y, top2));
    }
    if (i + 1 >= k)
      seen.push_back((static_cast<unsigned __int128>(h1) << 64) | h2);
  }
  std::sort(seen.begin(), seen.end());
  return static_cast<std::uint64_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

std::size_t alphabet_span(const Word& w) {
  std::size_t hi = 0;
  for (const Symbol s : w) hi = std::max<std::size_t>(hi, std::size_t(s) + 1);
  return std::max<std::size_t>(hi, 1);
}

}  // namespace

std::vector<std::uint64_t> factor_counts(const Word& w, std::size_t k_max,
                                         FactorEngine engine) {
  if (engine == FactorEngine::Auto)
    engine = (k_max <= 12 && w.size() > (std::size_t(1) << 15))
                 ? FactorEngine::HashedWindows
                 : FactorEngine::SuffixAutomaton;
  if (engine == FactorEngine::SuffixAutomaton)
    return SuffixAutomaton(w, alphabet_span(w)).counts(k_max);
  std::vector<std::uint64_t> out(k_max + 1, 0);
  out[0] = 1;
  for (std::size_t k = 1; k <= k_max; ++k) out[k] = hashed_window_count(w, k);
  return out;
}

// --- stabilised profiles -----------------------------------------------------

ComplexityProfile compute_profile(const Sequence& s, std::size_t k_max,
                                  std::size_t budget, FactorEngine engine) {
  if (k_max == 0) raise(ErrorKind::Input, "k_max must be at least 1");
  if (budget == 0) raise(ErrorKind::Input, "budget must be positive");

  auto eval = [&](std::size_t len) {
    const Word w = s.prefix(len);
    return std::make_pair(factor_counts(w, k_max, engine), palindrome_counts(w, k_max));
  };

  std::size_t len = std::min(std::max<std::size_t>(4096, 8 * k_max), budget);
  auto [fac, pal] = eval(len);
  std::vector<bool> stable(k_max + 1, false);
  stable[0] = true;

  while (len < budget) {
    const std::size_t next_len = std::min(budget, len * 2);
    auto [next_fac, next_pal] = eval(next_len);
    bool all = true;
    for (std::size_t k = 0; k <= k_max; ++k) {
      if (next_fac[k] < fac[k] || next_pal[k] < pal[k])
        raise(ErrorKind::Internal, "factor or palindrome count decreased on a longer prefix");
      stable[k] = (next_fac[k] == fac[k] && next_pal[k] == pal[k]);
      all = all && stable[k];
    }
    fac = std::move(next_fac);
    pal = std::move(next_pal);
    len = next_len;
    if (all) break;
  }

  ComplexityProfile p;
  p.k_max = k_max;
  p.prefix_len = len;
  p.fac = std::move(fac);
  p.pal = std::move(pal);
  p.stable = std::move(stable);
  p.source_name = s.name();
  p.source_params = s.params();
  return p;
}

std::string profile_to_csv(const ComplexityProfile& p) {
  std::ostringstream os;
  os << "k,fac,pal,prefix_len,stable\n";
  for (std::size_t k = 0; k <= p.k_max; ++k)
    os << k << ',' << p.fac[k] << ',' << p.pal[k] << ',' << p.prefix_len << ','
       << (p.stable[k] ? 1 : 0) << '\n';
  return os.str();
}

namespace {

std::uint64_t parse_u64_field(std::string_view field, std::size_t line_no) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    raise(ErrorKind::Input,
          "line " + std::to_string(line_no) + ": expected an unsigned integer, got '" +
              std::string(field) + "'");
  return v;
}

}  // namespace

ComplexityProfile profile_from_csv(std::string_view csv) {
  ComplexityProfile p;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_prefix_len = false;
  while (pos < csv.size()) {
    std::size_t eol = csv.find('\n', pos);
    if (eol == std::string_view::npos) eol = csv.size();
    std::string_view line = csv.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != "k,fac,pal,prefix_len,stable")
        raise(ErrorKind::Input, "line 1: expected header 'k,fac,pal,prefix_len,stable'");
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t fpos = 0;
    while (true) {
      const std::size_t comma = line.find(',', fpos);
      fields.push_back(line.substr(fpos, comma == std::string_view::npos ? line.size() - fpos
                                                                         : comma - fpos));
      if (comma == std::string_view::npos) break;
      fpos = comma + 1;
    }
    if (fields.size() != 5)
      raise(ErrorKind::Input, "line " + std::to_string(line_no) + ": expected 5 fields");
    const std::uint64_t k = parse_u64_field(fields[0], line_no);
    if (k != p.fac.size())
      raise(ErrorKind::Input,
            "line " + std::to_string(line_no) + ": lengths must start at 0 and be contiguous");
    p.fac.push_back(parse_u64_field(fields[1], line_no));
    p.pal.push_back(parse_u64_field(fields[2], line_no));
    const std::uint64_t plen = parse_u64_field(fields[3], line_no);
    if (have_prefix_len && plen != p.prefix_len)
      raise(ErrorKind::Input, "line " + std::to_string(line_no) + ": prefix_len must be constant");
    p.prefix_len = static_cast<std::size_t>(plen);
    have_prefix_len = true;
    const std::uint64_t st = parse_u64_field(fields[4], line_no);
    if (st > 1)
      raise(ErrorKind::Input, "line " + std::to_string(line_no) + ": stable must be 0 or 1");
    p.stable.push_back(st == 1);
  }
  if (p.fac.empty()) raise(ErrorKind::Input, "profile has no rows");
  p.k_max = p.fac.size() - 1;
  return p;
}

// --- ratios -------------------------------------------------------------------

Fraction make_fraction(std::uint64_t num, std::uint64_t den) {
  if (den == 0) raise(ErrorKind::Input, "fraction with zero denominator");
  if (num == 0) return Fraction{0, 1};
  const std::uint64_t g = std::gcd(num, den);
  return Fraction{num / g, den / g};
}

std::vector<RatioRow> complexity_ratios(const Sequence& s, std::size_t k_max,
                                        std::size_t budget) {
  if (k_max == 0) raise(ErrorKind::Input, "k_max must be at least 1");
  const std::size_t ext = k_max + k_max / 4;
  const ComplexityProfile p = compute_profile(s, ext, budget);
  std::vector<RatioRow> rows;
  rows.reserve(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    RatioRow r;
    r.k = k;
    r.fac_k = p.fac[k];
    r.pal_k = p.pal[k];
    r.fac_shifted = p.fac[k + k / 4];
    r.weighted = r.fac_shifted ? make_fraction(k * r.pal_k, r.fac_shifted) : Fraction{0, 1};
    r.square = r.fac_k ? make_fraction(r.pal_k * r.pal_k, r.fac_k) : Fraction{0, 1};
    r.stable = p.stable[k] && p.stable[k + k / 4];
    r.bound_ok = r.fac_shifted > 0 && k * r.pal_k < 16 * r.fac_shifted;
    rows.push_back(r);
  }
  return rows;
}

std::string ratios_to_csv(const std::vector<RatioRow>& rows) {
  std::ostringstream os;
  os << "k,fac,pal,fac_shift,weighted_num,weighted_den,square_num,square_den,stable,bound_ok\n";
  for (const RatioRow& r : rows)
    os << r.k << ',' << r.fac_k << ',' << r.pal_k << ',' << r.fac_shifted << ','
       << r.weighted.num << ',' << r.weighted.den << ',' << r.square.num << ','
       << r.square.den << ',' << (r.stable ? 1 : 0) << ',' << (r.bound_ok ? 1 : 0) << '\n';
  return os.str();
}

}  // namespace palcore
