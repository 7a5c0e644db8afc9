#include "palcore/sequences.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <utility>

namespace palcore {

Sequence::Sequence(Alphabet alphabet, std::string name, std::string params)
    : alphabet_(std::move(alphabet)), name_(std::move(name)), params_(std::move(params)) {}

Word Sequence::prefix(std::size_t n) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (buf_.size() < n) {
    extend(buf_, n);
    if (buf_.size() < n)
      raise(ErrorKind::Internal, "sequence extension fell short of the request");
  }
  return Word(std::vector<Symbol>(buf_.begin(), buf_.begin() + static_cast<std::ptrdiff_t>(n)));
}

namespace {

std::string describe_morphism_inline(const Morphism& m, Symbol seed) {
  std::ostringstream os;
  const Alphabet& a = m.alphabet();
  for (Symbol s = 0; s < m.alphabet_size(); ++s) {
    if (s) os << ", ";
    os << a.letter(s) << "->" << format_word(m.image(s), a);
  }
  os << "; seed=" << a.letter(seed);
  return os.str();
}

class MorphicSequence final : public Sequence {
 public:
  MorphicSequence(Morphism m, Symbol seed, std::string name, std::string params)
      : Sequence(m.alphabet(),
                 name.empty() ? "morphic" : std::move(name),
                 params.empty() ? describe_morphism_inline(m, seed) : std::move(params)),
        m_(std::move(m)),
        seed_(seed) {
    if (m_.erasing())
      raise(ErrorKind::Construction, "fixed point requires a non-erasing morphism");
    if (!m_.prolongable_on(seed_))
      raise(ErrorKind::Construction,
            "morphism is not prolongable on letter '" + m_.alphabet().letter(seed_) + "'");
  }

  std::optional<Morphism> generating_morphism() const override { return m_; }
  std::optional<Symbol> generating_seed() const override { return seed_; }

 protected:
  void extend(std::vector<Symbol>& buf, std::size_t need) const override {
    if (buf.empty()) {
      const Word& first = m_.image(seed_);
      buf.assign(first.begin(), first.end());
      next_ = 1;
    }
    while (buf.size() < need) {
      const Word& img = m_.image(buf[next_++]);
      buf.insert(buf.end(), img.begin(), img.end());
    }
  }

 private:
  Morphism m_;
  Symbol seed_;
  mutable std::size_t next_ = 0;  // guarded by the base-class mutex
};

class SturmianSequence final : public Sequence {
 public:
  explicit SturmianSequence(std::vector<unsigned> cf, std::string name, std::string params)
      : Sequence(Alphabet::binary(), std::move(name), std::move(params)), cf_(std::move(cf)) {
    if (cf_.empty()) raise(ErrorKind::Input, "continued fraction needs at least one term");
    for (unsigned t : cf_)
      if (t == 0) raise(ErrorKind::Input, "continued-fraction terms must be >= 1");
    prev_ = {1};  // stage -1
    cur_ = {0};   // stage 0
  }

 protected:
  void extend(std::vector<Symbol>& buf, std::size_t need) const override {
    // Each stage word begins with the previous one, so the growing stage is
    // itself the cached prefix.
    while (cur_.size() < need && stage_ < cf_.size()) {
      std::vector<Symbol> next;
      next.reserve(cur_.size() * cf_[stage_] + prev_.size());
      for (unsigned r = 0; r < cf_[stage_]; ++r)
        next.insert(next.end(), cur_.begin(), cur_.end());
      next.insert(next.end(), prev_.begin(), prev_.end());
      prev_ = std::move(cur_);
      cur_ = std::move(next);
      ++stage_;
    }
    if (cur_.size() < need)
      raise(ErrorKind::Input,
            "continued fraction with " + std::to_string(cf_.size()) +
                " terms generates only " + std::to_string(cur_.size()) +
                " symbols; " + std::to_string(need) + " requested");
    if (cur_.size() > buf.size()) buf = cur_;
  }

 private:
  std::vector<unsigned> cf_;
  mutable std::vector<Symbol> prev_, cur_;
  mutable std::size_t stage_ = 0;
};

class PaperfoldingSequence final : public Sequence {
 public:
  // Empty instruction vector selects the classical stream 0, 0, 1, 0, 1, ...;
  // otherwise the finite word is cycled.
  PaperfoldingSequence(std::vector<int> instructions, std::string name, std::string params)
      : Sequence(Alphabet::binary(), std::move(name), std::move(params)),
        instr_(std::move(instructions)) {
    for (int i : instr_)
      if (i != 0 && i != 1) raise(ErrorKind::Input, "folding instructions must be 0 or 1");
  }

 protected:
  void extend(std::vector<Symbol>& buf, std::size_t need) const override {
    while (buf.size() < need) {
      std::size_t n = buf.size() + 1;  // positions are 1-based
      std::size_t m = 0;
      while (n % 2 == 0) {
        n /= 2;
        ++m;
      }
      const std::size_t j = (n - 1) / 2;
      buf.push_back(static_cast<Symbol>((j + instruction(m)) % 2));
    }
  }

 private:
  int instruction(std::size_t m) const {
    if (instr_.empty()) return m == 0 ? 0 : (m % 2 == 0 ? 1 : 0);
    return instr_[m % instr_.size()];
  }

  std::vector<int> instr_;
};

class RunningSumSequence final : public Sequence {
 public:
  RunningSumSequence(SequencePtr parent, Symbol first, std::string name, std::string params)
      : Sequence(Alphabet::binary(), std::move(name), std::move(params)),
        parent_(std::move(parent)),
        first_(first) {
    if (!parent_) raise(ErrorKind::Input, "partial sums need a parent sequence");
    if (parent_->alphabet().size() != 2)
      raise(ErrorKind::Construction, "partial sums mod 2 require a binary parent");
    if (first_ > 1) raise(ErrorKind::Input, "initial symbol must be 0 or 1");
  }

  std::shared_ptr<const Sequence> parent() const override { return parent_; }

 protected:
  void extend(std::vector<Symbol>& buf, std::size_t need) const override {
    if (buf.empty()) buf.push_back(first_);
    if (buf.size() >= need) return;
    const Word p = parent_->prefix(need - 1);
    while (buf.size() < need)
      buf.push_back(static_cast<Symbol>(buf.back() ^ (p[buf.size() - 1] & 1)));
  }

 private:
  SequencePtr parent_;
  Symbol first_;
};

class PointwiseImageSequence final : public Sequence {
 public:
  PointwiseImageSequence(SequencePtr parent, Alphabet target, std::vector<Word> images,
                         std::string name, std::string params)
      : Sequence(std::move(target), std::move(name), std::move(params)),
        parent_(std::move(parent)),
        images_(std::move(images)) {
    if (!parent_) raise(ErrorKind::Input, "letter-wise image needs a parent sequence");
    if (images_.size() != parent_->alphabet().size())
      raise(ErrorKind::Construction, "one image per parent letter required");
    for (const Word& w : images_) {
      if (w.empty())
        raise(ErrorKind::Construction, "letter-wise images must be non-empty");
      for (Symbol s : w)
        if (s >= alphabet().size())
          raise(ErrorKind::Construction, "image symbol outside the target alphabet");
    }
  }

  std::shared_ptr<const Sequence> parent() const override { return parent_; }

 protected:
  void extend(std::vector<Symbol>& buf, std::size_t need) const override {
    while (buf.size() < need) {
      // Fetch parent symbols in blocks; every symbol contributes >= 1 output.
      const std::size_t want = consumed_ + std::max<std::size_t>(need - buf.size(), 64);
      const Word p = parent_->prefix(want);
      while (consumed_ < p.size() && buf.size() < need) {
        const Word& img = images_[p[consumed_++]];
        buf.insert(buf.end(), img.begin(), img.end());
      }
    }
  }

 private:
  SequencePtr parent_;
  std::vector<Word> images_;
  mutable std::size_t consumed_ = 0;  // guarded by the base-class mutex
};

class KolakoskiSequence final : public Sequence {
 public:
  KolakoskiSequence()
      : Sequence(Alphabet::of_chars("12"), "kolakoski", "start=22") {}

 protected:
  void extend(std::vector<Symbol>& buf, std::size_t need) const override {
    if (buf.empty()) {
      buf = {1, 1};  // the word starts 2 2, and symbol value = letter - 1
      read_ = 1;
      next_letter_ = 1;
    }
    while (buf.size() < need) {
      const unsigned run = static_cast<unsigned>(buf[read_++]) + 1;
      const Symbol s = static_cast<Symbol>(next_letter_ - 1);
      buf.insert(buf.end(), run, s);
      next_letter_ = 3 - next_letter_;
    }
  }

 private:
  mutable std::size_t read_ = 0;    // position whose value drives the next run
  mutable unsigned next_letter_ = 1;  // alternates 1, 2, 1, 2, ...
};

class ChampernowneSequence final : public Sequence {
 public:
  ChampernowneSequence()
      : Sequence(Alphabet::binary(), "champernowne-binary", "base=2") {}

 protected:
  void extend(std::vector<Symbol>& buf, std::size_t need) const override {
    if (buf.empty()) {
      buf.push_back(0);  // binary expansion of 0
      counter_ = 1;
    }
    while (buf.size() < need) {
      const std::uint64_t v = counter_++;
      for (int b = std::bit_width(v) - 1; b >= 0; --b)
        buf.push_back(static_cast<Symbol>((v >> b) & 1));
    }
  }

 private:
  mutable std::uint64_t counter_ = 0;  // guarded by the base-class mutex
};

class RemcorSequence final : public Sequence {
 public:
  RemcorSequence() : Sequence(Alphabet::binary(), "remcor-limit", "") {}

 protected:
  void extend(std::vector<Symbol>& buf, std::size_t need) const override {
    unsigned j = stage_;
    while (j <= 4 && remcor_length(j) < need) ++j;
    if (j > 4)
      raise(ErrorKind::Resource,
            "prefix of length " + std::to_string(need) +
                " would require a stage word beyond the materialisable range");
    if (j > stage_ || buf.empty()) {
      const Word w = remcor_word(j);
      buf.assign(w.begin(), w.end());
      stage_ = j;
    }
  }

 private:
  mutable unsigned stage_ = 0;  // guarded by the base-class mutex
};

std::string join_unsigned(const std::vector<unsigned>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

std::string join_int(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << v[i];
  return os.str();
}

}  // namespace

SequencePtr make_morphic(Morphism m, Symbol seed, std::string name, std::string params) {
  return std::make_shared<MorphicSequence>(std::move(m), seed, std::move(name),
                                           std::move(params));
}

SequencePtr make_sturmian(std::vector<unsigned> cf) {
  std::string params = "cf=[" + join_unsigned(cf) + "]";
  return std::make_shared<SturmianSequence>(std::move(cf), "sturmian", std::move(params));
}

SequencePtr make_paperfolding(std::vector<int> instructions) {
  if (instructions.empty())
    raise(ErrorKind::Input, "folding instructions must not be empty");
  std::string params = "instructions=" + join_int(instructions) + " (cycled)";
  return std::make_shared<PaperfoldingSequence>(std::move(instructions), "paperfolding",
                                                std::move(params));
}

SequencePtr make_paperfolding_classical() {
  return std::make_shared<PaperfoldingSequence>(std::vector<int>{}, "paperfolding-classical",
                                                "instructions=classical");
}

SequencePtr make_running_sum(SequencePtr parent, Symbol first, std::string name,
                             std::string params) {
  if (name.empty()) name = "running-sum";
  if (params.empty() && parent)
    params = "parent=" + parent->name() + "; first=" + std::to_string(int(first));
  return std::make_shared<RunningSumSequence>(std::move(parent), first, std::move(name),
                                              std::move(params));
}

SequencePtr make_rudin_shapiro(std::vector<int> instructions) {
  std::string params = "instructions=" + join_int(instructions) + " (cycled)";
  return make_running_sum(make_paperfolding(std::move(instructions)), 0, "rudin-shapiro",
                          std::move(params));
}

SequencePtr make_rudin_shapiro_classical() {
  return make_running_sum(make_paperfolding_classical(), 0, "rudin-shapiro-classical",
                          "instructions=classical");
}

SequencePtr make_rote(std::vector<unsigned> cf, Symbol first) {
  std::string params = "cf=[" + join_unsigned(cf) + "]; first=" + std::to_string(int(first));
  return make_running_sum(make_sturmian(std::move(cf)), first, "rote", std::move(params));
}

SequencePtr make_pointwise_image(SequencePtr parent, Alphabet target, std::vector<Word> images,
                                 std::string name, std::string params) {
  if (name.empty()) name = "pointwise-image";
  if (params.empty() && parent) params = "parent=" + parent->name();
  return std::make_shared<PointwiseImageSequence>(std::move(parent), std::move(target),
                                                  std::move(images), std::move(name),
                                                  std::move(params));
}

SequencePtr make_kolakoski() { return std::make_shared<KolakoskiSequence>(); }

SequencePtr make_champernowne() { return std::make_shared<ChampernowneSequence>(); }

SequencePtr make_remcor() { return std::make_shared<RemcorSequence>(); }

Word remcor_word(unsigned j) {
  if (j > 4)
    raise(ErrorKind::Resource, "stage " + std::to_string(j) +
                                   " exceeds the materialisable range (max stage 4)");
  std::vector<Symbol> w = {1};  // stage 0 is the single letter 1
  for (unsigned t = 0; t < j; ++t) {
    // Stage t+1 appends, for i = 1 .. 2^(2^t - 1), the block
    //   0^(A+2-4i)  reverse(w)  0^(A-4i)  w      with A = 2^(2^(t+1)).
    const std::uint64_t a = std::uint64_t(1) << (std::uint64_t(1) << (t + 1));
    const std::uint64_t count = std::uint64_t(1) << ((std::uint64_t(1) << t) - 1);
    const std::vector<Symbol> rev(w.rbegin(), w.rend());
    std::vector<Symbol> next = w;
    for (std::uint64_t i = 1; i <= count; ++i) {
      next.insert(next.end(), static_cast<std::size_t>(a + 2 - 4 * i), 0);
      next.insert(next.end(), rev.begin(), rev.end());
      next.insert(next.end(), static_cast<std::size_t>(a - 4 * i), 0);
      next.insert(next.end(), w.begin(), w.end());
    }
    w = std::move(next);
  }
  return Word(std::move(w));
}

std::uint64_t remcor_length(unsigned j) {
  using u128 = unsigned __int128;
  u128 len = 1;
  for (unsigned t = 0; t < j; ++t) {
    const std::uint64_t a_exp = std::uint64_t(1) << (t + 1);
    if (a_exp > 126)
      raise(ErrorKind::Resource, "stage length exceeds the evaluable range");
    const u128 a = u128(1) << a_exp;
    const u128 count = u128(1) << ((std::uint64_t(1) << t) - 1);
    // sum over i of (A+2-4i) + len + (A-4i) + len
    len = len + count * (2 * a + 2 + 2 * len) - 8 * (count * (count + 1) / 2);
  }
  if (len > u128(std::numeric_limits<std::uint64_t>::max()))
    raise(ErrorKind::Resource, "stage length exceeds the 64-bit range");
  return static_cast<std::uint64_t>(len);
}

namespace {

SequencePtr morphic_builtin(const std::string& name, const char* letters,
                            std::initializer_list<const char*> images) {
  const Alphabet a = Alphabet::of_chars(letters);
  std::vector<Word> imgs;
  for (const char* text : images) imgs.push_back(parse_word(text, a));
  return make_morphic(Morphism(a, std::move(imgs)), 0, name);
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {
      "period-doubling",   "fibonacci",      "thue-morse-squared",
      "rote-morphic",      "v-sequence",     "chacon",
      "loglog",            "pansiot-quadratic", "kolakoski",
      "paperfolding-classical", "rudin-shapiro-classical", "champernowne-binary",
      "scrambler-image",   "remcor-limit",   "image-example",
  };
}

SequencePtr make_builtin(const std::string& name) {
  if (name == "period-doubling") return morphic_builtin(name, "01", {"01", "00"});
  if (name == "fibonacci") return morphic_builtin(name, "01", {"01", "0"});
  if (name == "thue-morse-squared") return morphic_builtin(name, "ab", {"abba", "baab"});
  if (name == "rote-morphic") return morphic_builtin(name, "01", {"001", "111"});
  if (name == "v-sequence") return morphic_builtin(name, "01", {"001", "101"});
  if (name == "chacon") return morphic_builtin(name, "01", {"0010", "1"});
  if (name == "loglog") return morphic_builtin(name, "01", {"010", "11"});
  if (name == "pansiot-quadratic") return morphic_builtin(name, "01", {"001", "1"});
  if (name == "kolakoski") return make_kolakoski();
  if (name == "paperfolding-classical") return make_paperfolding_classical();
  if (name == "rudin-shapiro-classical") return make_rudin_shapiro_classical();
  if (name == "champernowne-binary") return make_champernowne();
  if (name == "remcor-limit") return make_remcor();
  if (name == "scrambler-image") {
    const Alphabet bin = Alphabet::binary();
    std::vector<Word> images = {parse_word("011001", bin), parse_word("001011", bin)};
    return make_pointwise_image(make_champernowne(), bin, std::move(images), name,
                                "0->011001, 1->001011 over champernowne-binary");
  }
  if (name == "image-example") {
    const Alphabet dom = Alphabet::of_chars("abcd");
    const Alphabet bin = Alphabet::binary();
    std::vector<Word> fixp_images = {parse_word("ad", dom), parse_word("bac", dom),
                                     parse_word("bacab", dom), parse_word("baca", dom)};
    SequencePtr base = make_morphic(Morphism(dom, std::move(fixp_images)), 0);
    std::vector<Word> coding = {parse_word("0", bin), parse_word("1", bin),
                                parse_word("10110", bin), parse_word("101", bin)};
    return make_pointwise_image(std::move(base), bin, std::move(coding), name,
                                "a->0, b->1, c->10110, d->101 over fix(a->ad, b->bac, "
                                "c->bacab, d->baca)");
  }
  raise(ErrorKind::Input, "unknown builtin sequence '" + name + "'");
}

}  // namespace palcore
