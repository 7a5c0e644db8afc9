#include "palcore.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "palcore/classp.hpp"
#include "palcore/complexity.hpp"
#include "palcore/morphism_io.hpp"
#include "palcore/periods.hpp"
#include "palcore/sequences.hpp"
#include "palcore/verify.hpp"
#include "palcore/words.hpp"

using nlohmann::json;

struct pal_source {
  palcore::SequencePtr seq;
};

struct pal_profile {
  palcore::ComplexityProfile prof;
};

namespace {

std::string& last_error() {
  thread_local std::string msg;
  return msg;
}

pal_status from_kind(palcore::ErrorKind k) {
  switch (k) {
    case palcore::ErrorKind::Input: return PAL_ERR_INPUT;
    case palcore::ErrorKind::Domain: return PAL_ERR_DOMAIN;
    case palcore::ErrorKind::Construction: return PAL_ERR_CONSTRUCTION;
    case palcore::ErrorKind::Resource: return PAL_ERR_RESOURCE;
    case palcore::ErrorKind::Internal: return PAL_ERR_INTERNAL;
  }
  return PAL_ERR_INTERNAL;
}

template <typename Fn>
pal_status guarded(Fn&& fn) noexcept {
  last_error().clear();
  try {
    return fn();
  } catch (const palcore::Error& e) {
    last_error() = e.what();
    return from_kind(e.kind());
  } catch (const std::bad_alloc&) {
    last_error() = "out of memory";
    return PAL_ERR_RESOURCE;
  } catch (const std::exception& e) {
    last_error() = e.what();
    return PAL_ERR_INTERNAL;
  } catch (...) {
    last_error() = "unknown failure";
    return PAL_ERR_INTERNAL;
  }
}

void require(bool cond, const char* message) {
  if (!cond) palcore::raise(palcore::ErrorKind::Input, message);
}

char* copy_out(const std::string& text) {
  char* mem = static_cast<char*>(std::malloc(text.size() + 1));
  if (mem == nullptr) throw std::bad_alloc();
  std::memcpy(mem, text.c_str(), text.size() + 1);
  return mem;
}

palcore::SequencePtr open_spec(const std::string& spec) {
  constexpr const char* kFilePrefix = "file:";
  if (spec.rfind(kFilePrefix, 0) == 0) {
    const std::string path = spec.substr(std::strlen(kFilePrefix));
    const palcore::MorphismSpec ms = palcore::parse_morphism_file(path);
    palcore::Symbol seed;
    if (ms.seed) {
      seed = *ms.seed;
    } else {
      const auto letter = ms.morphism.prolongable_letter();
      if (!letter)
        palcore::raise(palcore::ErrorKind::Input,
                       path + ": no seed given and no letter a with image starting a");
      seed = *letter;
    }
    return palcore::make_morphic(ms.morphism, seed, spec);
  }
  return palcore::make_builtin(spec);
}

json palindrome_items(const palcore::Sequence& s, std::size_t k_max, std::size_t budget,
                      bool maximal_only) {
  const palcore::ComplexityProfile prof = palcore::compute_profile(s, k_max, budget);
  const palcore::Word w = s.prefix(prof.prefix_len);
  const palcore::Eertree tree(w);
  const palcore::Alphabet& alpha = s.alphabet();

  json j;
  j["source"] = s.name();
  j["prefix_len"] = prof.prefix_len;
  j["k_max"] = k_max;
  if (maximal_only) {
    json arr = json::array();
    for (const palcore::Word& p : tree.maximal())
      arr.push_back(palcore::format_word(p, alpha));
    j["maximal"] = arr;
    return j;
  }
  json lengths = json::array();
  for (std::size_t k = 1; k <= k_max; ++k) {
    const auto items = tree.of_length(k);
    json words = json::array();
    for (const auto& [word, first] : items) {
      json entry;
      entry["word"] = palcore::format_word(word, alpha);
      entry["first_occurrence"] = first;
      words.push_back(entry);
    }
    json row;
    row["length"] = k;
    row["count"] = items.size();
    row["stable"] = static_cast<bool>(prof.stable.at(k));
    row["words"] = words;
    lengths.push_back(row);
  }
  j["palindromes"] = lengths;
  return j;
}

pal_status verdict_status(palcore::CheckStatus s) {
  switch (s) {
    case palcore::CheckStatus::Pass: return PAL_OK;
    case palcore::CheckStatus::Fail: return PAL_FAIL;
    case palcore::CheckStatus::NotApplicable: return PAL_NOT_APPLICABLE;
  }
  return PAL_ERR_INTERNAL;
}

}  // namespace

extern "C" {

const char* pal_last_error(void) { return last_error().c_str(); }

void pal_string_free(char* s) { std::free(s); }

pal_status pal_source_open(const char* spec, pal_source** out) {
  return guarded([&]() {
    require(spec != nullptr && out != nullptr, "pal_source_open: null argument");
    *out = new pal_source{open_spec(spec)};
    return PAL_OK;
  });
}

pal_status pal_source_sturmian(const uint32_t* cf, size_t n, pal_source** out) {
  return guarded([&]() {
    require(out != nullptr && (cf != nullptr || n == 0),
            "pal_source_sturmian: null argument");
    const std::vector<unsigned> coeffs(cf, cf + n);
    *out = new pal_source{palcore::make_sturmian(coeffs)};
    return PAL_OK;
  });
}

pal_status pal_source_paperfolding(const int32_t* instructions, size_t n,
                                   pal_source** out) {
  return guarded([&]() {
    require(out != nullptr && (instructions != nullptr || n == 0),
            "pal_source_paperfolding: null argument");
    *out = new pal_source{n == 0
                              ? palcore::make_paperfolding_classical()
                              : palcore::make_paperfolding(
                                    std::vector<int>(instructions, instructions + n))};
    return PAL_OK;
  });
}

pal_status pal_source_rudin_shapiro(const int32_t* instructions, size_t n,
                                    pal_source** out) {
  return guarded([&]() {
    require(out != nullptr && (instructions != nullptr || n == 0),
            "pal_source_rudin_shapiro: null argument");
    *out = new pal_source{n == 0
                              ? palcore::make_rudin_shapiro_classical()
                              : palcore::make_rudin_shapiro(
                                    std::vector<int>(instructions, instructions + n))};
    return PAL_OK;
  });
}

pal_status pal_source_rote(const uint32_t* cf, size_t n, int32_t first,
                           pal_source** out) {
  return guarded([&]() {
    require(out != nullptr && (cf != nullptr || n == 0), "pal_source_rote: null argument");
    require(first == 0 || first == 1, "pal_source_rote: first symbol must be 0 or 1");
    const std::vector<unsigned> coeffs(cf, cf + n);
    *out = new pal_source{
        palcore::make_rote(coeffs, static_cast<palcore::Symbol>(first))};
    return PAL_OK;
  });
}

void pal_source_close(pal_source* s) { delete s; }

pal_status pal_source_name(const pal_source* s, char** out) {
  return guarded([&]() {
    require(s != nullptr && out != nullptr, "pal_source_name: null argument");
    *out = copy_out(s->seq->name());
    return PAL_OK;
  });
}

pal_status pal_builtin_names(char** out) {
  return guarded([&]() {
    require(out != nullptr, "pal_builtin_names: null argument");
    std::string joined;
    for (const auto& name : palcore::builtin_names()) {
      if (!joined.empty()) joined += '\n';
      joined += name;
    }
    *out = copy_out(joined);
    return PAL_OK;
  });
}

pal_status pal_source_prefix(const pal_source* s, size_t n, char** out) {
  return guarded([&]() {
    require(s != nullptr && out != nullptr, "pal_source_prefix: null argument");
    const palcore::Word w = s->seq->prefix(n);
    *out = copy_out(palcore::format_word(w, s->seq->alphabet()));
    return PAL_OK;
  });
}

pal_status pal_profile_compute(const pal_source* s, size_t k_max, size_t budget,
                               pal_profile** out) {
  return guarded([&]() {
    require(s != nullptr && out != nullptr, "pal_profile_compute: null argument");
    *out = new pal_profile{palcore::compute_profile(*s->seq, k_max, budget)};
    return PAL_OK;
  });
}

void pal_profile_free(pal_profile* p) { delete p; }

size_t pal_profile_k_max(const pal_profile* p) { return p == nullptr ? 0 : p->prof.k_max; }

size_t pal_profile_prefix_len(const pal_profile* p) {
  return p == nullptr ? 0 : p->prof.prefix_len;
}

pal_status pal_profile_row(const pal_profile* p, size_t k, uint64_t* fac,
                           uint64_t* pal, int32_t* stable) {
  return guarded([&]() {
    require(p != nullptr, "pal_profile_row: null profile");
    require(k <= p->prof.k_max, "pal_profile_row: length beyond k_max");
    if (fac != nullptr) *fac = p->prof.fac[k];
    if (pal != nullptr) *pal = p->prof.pal[k];
    if (stable != nullptr) *stable = p->prof.stable[k] ? 1 : 0;
    return PAL_OK;
  });
}

pal_status pal_profile_csv(const pal_profile* p, char** out) {
  return guarded([&]() {
    require(p != nullptr && out != nullptr, "pal_profile_csv: null argument");
    *out = copy_out(palcore::profile_to_csv(p->prof));
    return PAL_OK;
  });
}

pal_status pal_word_is_palindrome(const char* word, int32_t* out) {
  return guarded([&]() {
    require(word != nullptr && out != nullptr, "pal_word_is_palindrome: null argument");
    const auto [alpha, w] = palcore::parse_word_auto(word);
    (void)alpha;
    *out = palcore::is_palindrome(w) ? 1 : 0;
    return PAL_OK;
  });
}

pal_status pal_word_smallest_period(const char* word, size_t* out) {
  return guarded([&]() {
    require(word != nullptr && out != nullptr, "pal_word_smallest_period: null argument");
    const auto [alpha, w] = palcore::parse_word_auto(word);
    (void)alpha;
    *out = palcore::smallest_period(w);
    return PAL_OK;
  });
}

pal_status pal_word_periods_json(const char* word, char** out) {
  return guarded([&]() {
    require(word != nullptr && out != nullptr, "pal_word_periods_json: null argument");
    const auto [alpha, w] = palcore::parse_word_auto(word);
    json j;
    j["word"] = palcore::format_word(w, alpha);
    j["length"] = w.size();
    j["smallest_period"] = palcore::smallest_period(w);
    j["periods"] = palcore::all_periods(w);
    const bool pal = palcore::is_palindrome(w);
    j["is_palindrome"] = pal;
    if (pal) {
      const palcore::PalindromeRecord rec = palcore::classify_palindrome(w);
      j["repetition_class"] = palcore::to_string(rec.cls);
      if (rec.twin) j["twin"] = palcore::format_word(*rec.twin, alpha);
    }
    *out = copy_out(j.dump(2));
    return PAL_OK;
  });
}

pal_status pal_factor_counts(const char* word, size_t k_max, uint64_t* counts) {
  return guarded([&]() {
    require(word != nullptr && counts != nullptr, "pal_factor_counts: null argument");
    const auto [alpha, w] = palcore::parse_word_auto(word);
    (void)alpha;
    const auto values = palcore::factor_counts(w, k_max);
    for (std::size_t k = 0; k <= k_max; ++k) counts[k] = values[k];
    return PAL_OK;
  });
}

pal_status pal_palindrome_counts(const char* word, size_t k_max, uint64_t* counts) {
  return guarded([&]() {
    require(word != nullptr && counts != nullptr, "pal_palindrome_counts: null argument");
    const auto [alpha, w] = palcore::parse_word_auto(word);
    (void)alpha;
    const auto values = palcore::palindrome_counts(w, k_max);
    for (std::size_t k = 0; k <= k_max; ++k) counts[k] = values[k];
    return PAL_OK;
  });
}

pal_status pal_palindromes_json(const pal_source* s, size_t k_max, size_t budget,
                                int32_t maximal_only, char** out) {
  return guarded([&]() {
    require(s != nullptr && out != nullptr, "pal_palindromes_json: null argument");
    const json j = palindrome_items(*s->seq, k_max, budget, maximal_only != 0);
    *out = copy_out(j.dump(2));
    return PAL_OK;
  });
}

pal_status pal_classp_json(const char* morphism_path, char** out) {
  return guarded([&]() {
    require(morphism_path != nullptr && out != nullptr, "pal_classp_json: null argument");
    const palcore::MorphismSpec ms = palcore::parse_morphism_file(morphism_path);
    const palcore::Morphism& m = ms.morphism;
    const palcore::Alphabet& alpha = m.alphabet();

    json j;
    std::string letters;
    for (palcore::Symbol a = 0; a < alpha.size(); ++a) letters += alpha.letter(a);
    j["alphabet"] = letters;
    json rules;
    for (palcore::Symbol a = 0; a < m.alphabet_size(); ++a)
      rules[alpha.letter(a)] = palcore::format_word(m.image(a), alpha);
    j["rules"] = rules;
    j["is_class_p"] = palcore::is_class_p(m);

    json decomps = json::array();
    for (const auto& d : palcore::class_p_decompositions(m)) {
      json item;
      item["side"] = palcore::to_string(d.side);
      item["p"] = palcore::format_word(d.p, alpha);
      json parts;
      for (palcore::Symbol a = 0; a < m.alphabet_size(); ++a)
        parts[alpha.letter(a)] = palcore::format_word(d.q[a], alpha);
      item["parts"] = parts;
      decomps.push_back(item);
    }
    j["decompositions"] = decomps;

    std::optional<palcore::Symbol> seed = ms.seed;
    if (!seed) seed = m.prolongable_letter();
    if (seed) {
      try {
        const auto nz = palcore::normalize_class_p(m, *seed);
        if (nz) {
          json norm;
          json nrules;
          for (palcore::Symbol a = 0; a < m.alphabet_size(); ++a)
            nrules[alpha.letter(a)] =
                palcore::format_word(nz->normalized.image(a), alpha);
          norm["rules"] = nrules;
          norm["shared_prefix"] = palcore::format_word(nz->used.p, alpha);
          norm["power"] = nz->power;
          norm["seed"] = alpha.letter(nz->seed);
          norm["factor_check_len"] = nz->factor_check_len;
          norm["factors_agree"] = nz->factors_agree;
          j["normalization"] = norm;
        } else {
          j["normalization"] = nullptr;
        }
      } catch (const palcore::Error& e) {
        j["normalization_error"] = e.what();
      }
    } else {
      j["normalization"] = nullptr;
      j["normalization_note"] = "no letter a with image starting a; rewrite skipped";
    }
    *out = copy_out(j.dump(2));
    return PAL_OK;
  });
}

pal_status pal_verify(const char* check, const pal_source* source, size_t k_max,
                      size_t budget, char** json_out) {
  return guarded([&]() {
    require(check != nullptr && json_out != nullptr, "pal_verify: null argument");
    const palcore::SequencePtr seq = source != nullptr ? source->seq : nullptr;
    const palcore::VerificationReport rep =
        palcore::run_named_check(check, seq, k_max, budget);
    *json_out = copy_out(rep.to_json());
    return verdict_status(rep.status);
  });
}

pal_status pal_report(size_t budget, char** json_out) {
  return guarded([&]() {
    require(json_out != nullptr, "pal_report: null argument");
    const palcore::SuiteReport rep = palcore::run_report(budget);
    *json_out = copy_out(rep.to_json());
    return rep.all_pass ? PAL_OK : PAL_FAIL;
  });
}

}  // extern "C"
