#include "palcore/periods.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace palcore {

namespace {

// Longest proper border of w (classic failure-function computation).
std::size_t longest_border(const Word& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  return n == 0 ? 0 : fail[n - 1];
}

}  // namespace

bool has_period(const Word& w, std::size_t p) {
  if (p == 0) raise(ErrorKind::Input, "period must be positive");
  for (std::size_t i = 0; i + p < w.size(); ++i)
    if (w[i] != w[i + p]) return false;
  return true;
}

std::size_t smallest_period(const Word& w) {
  if (w.empty()) raise(ErrorKind::Input, "period of the empty word is undefined");
  return w.size() - longest_border(w);
}

std::vector<std::size_t> all_periods(const Word& w) {
  if (w.empty()) raise(ErrorKind::Input, "period of the empty word is undefined");
  const std::size_t n = w.size();
  // Periods within 1..n correspond exactly to borders: p = n - |border|.
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  std::vector<std::size_t> periods;
  for (std::size_t b = fail[n - 1];; b = fail[b - 1]) {
    periods.push_back(n - b);
    if (b == 0) break;
  }
  std::sort(periods.begin(), periods.end());
  return periods;
}

std::size_t fine_wilf_threshold(std::size_t t1, std::size_t t2) {
  if (t1 == 0 || t2 == 0) raise(ErrorKind::Input, "periods must be positive");
  return t1 + t2 - std::gcd(t1, t2);
}

std::optional<std::size_t> fine_wilf_reduce(const Word& w, std::size_t t1, std::size_t t2) {
  if (!has_period(w, t1) || !has_period(w, t2))
    raise(ErrorKind::Input, "claimed periods do not hold for the word");
  if (w.size() < fine_wilf_threshold(t1, t2)) return std::nullopt;
  const std::size_t g = std::gcd(t1, t2);
  if (!has_period(w, g))
    raise(ErrorKind::Internal, "period combination failed below its proven threshold");
  return g;
}

std::optional<LSDecomposition> lyndon_schutzenberger(const Word& x, const Word& y, const Word& z) {
  if (x.empty() || z.empty())
    raise(ErrorKind::Input, "conjugation equation requires non-empty outer words");
  if (concat(x, y) != concat(y, z)) return std::nullopt;
  // |x| == |z| is forced; the canonical split follows from y's position.
  const std::size_t r = y.size() % x.size();
  const std::size_t e = y.size() / x.size();
  LSDecomposition d;
  d.u = y.subword(0, r);
  d.v = x.subword(r, x.size() - r);
  d.exponent = e;
  Word xt = concat(d.u, d.v);
  Word zt = concat(d.v, d.u);
  Word yt;
  for (std::size_t i = 0; i < e; ++i) yt.append(xt);
  yt.append(d.u);
  if (xt != x || zt != z || yt != y)
    raise(ErrorKind::Internal, "conjugation decomposition failed to reassemble");
  return d;
}

std::string to_string(PalindromeClass c) {
  switch (c) {
    case PalindromeClass::NonPeriodic: return "non-periodic";
    case PalindromeClass::OddPeriod: return "odd-period";
    case PalindromeClass::EvenPeriod: return "even-period";
  }
  return "?";
}

PalindromeRecord classify_palindrome(const Word& w) {
  if (w.empty()) raise(ErrorKind::Input, "cannot classify the empty word");
  if (!is_palindrome(w)) raise(ErrorKind::Input, "word is not a palindrome");
  PalindromeRecord rec;
  rec.period = smallest_period(w);
  if (2 * rec.period > w.size()) {
    rec.cls = PalindromeClass::NonPeriodic;
  } else if (rec.period % 2 == 1) {
    rec.cls = PalindromeClass::OddPeriod;
  } else {
    rec.cls = PalindromeClass::EvenPeriod;
    const std::size_t half = rec.period / 2;
    Word xy = w.subword(0, rec.period);
    Word yx = concat(xy.subword(half, half), xy.subword(0, half));
    std::vector<Symbol> t;
    t.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) t.push_back(yx[i % rec.period]);
    rec.twin = Word(std::move(t));
  }
  return rec;
}

Word twin(const Word& w) {
  PalindromeRecord rec = classify_palindrome(w);
  if (rec.cls != PalindromeClass::EvenPeriod)
    raise(ErrorKind::Domain, "twin is defined only for even-period palindromes");
  return *rec.twin;
}

PeriodFactsReport period_fact_checks(const Word& w, const Word& z, const Word& wprime) {
  if (w.empty() || z.empty() || wprime.empty())
    raise(ErrorKind::Input, "period fact checks require non-empty words");
  PeriodFactsReport rep;

  {  // (1) every period of w that is <= |w|/2 is a multiple of the smallest
    const std::size_t t = smallest_period(w);
    rep.divisibility.applicable = 2 * t <= w.size();
    if (rep.divisibility.applicable) {
      rep.divisibility.holds = true;
      for (std::size_t u : all_periods(w)) {
        if (2 * u > w.size()) break;
        if (u % t != 0) {
          rep.divisibility.holds = false;
          rep.divisibility.detail = "period " + std::to_string(u) +
                                    " is not a multiple of " + std::to_string(t);
          break;
        }
      }
      if (rep.divisibility.holds)
        rep.divisibility.detail =
            "all periods <= |w|/2 are multiples of " + std::to_string(t);
    } else {
      rep.divisibility.detail = "smallest period exceeds |w|/2";
    }
  }

  {  // (2) a period of a factor w of z transfers to z when t_z + t_w <= |w|
    const std::size_t tz = smallest_period(z);
    const std::size_t tw = smallest_period(w);
    rep.transfer.applicable = is_factor(w, z) && tz + tw <= w.size();
    if (rep.transfer.applicable) {
      rep.transfer.holds = has_period(z, tw);
      rep.transfer.detail = "factor period " + std::to_string(tw) +
                            (rep.transfer.holds ? " is" : " is NOT") + " a period of the whole word";
    } else {
      rep.transfer.detail = "hypotheses not met (factor containment or length bound)";
    }
  }

  {  // (3) two long-enough factors of z share their smallest period
    const std::size_t theta = smallest_period(z);
    const std::size_t t = smallest_period(w);
    const std::size_t tp = smallest_period(wprime);
    rep.equality.applicable = is_factor(w, z) && is_factor(wprime, z) &&
                              w.size() >= theta + t && wprime.size() >= theta + tp;
    if (rep.equality.applicable) {
      rep.equality.holds = (t == tp);
      std::ostringstream os;
      os << "periods " << t << " and " << tp << (rep.equality.holds ? " agree" : " differ");
      rep.equality.detail = os.str();
    } else {
      rep.equality.detail = "hypotheses not met (factor containment or length bounds)";
    }
  }

  return rep;
}

}  // namespace palcore
