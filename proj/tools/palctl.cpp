// palctl: command-line front end over the palcore C interface.
//
// Subcommands: generate | complexity | palindromes | periods | classp |
// verify | report.  Outputs are deterministic; verify/report exit with
// 0 (pass), 1 (fail) or 2 (not applicable).  Usage and input errors exit
// with 2 and a diagnostic on stderr.

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "palcore.h"

namespace {

using nlohmann::json;

[[noreturn]] void die(const std::string& msg) {
  std::cerr << "palctl: " << msg << "\n";
  std::exit(2);
}

void check_status(pal_status st) {
  if (st >= PAL_ERR_INPUT) die(pal_last_error());
}

std::string take_string(char* owned) {
  std::string s(owned == nullptr ? "" : owned);
  pal_string_free(owned);
  return s;
}

// Comma- or space-separated list of non-negative integers.
std::vector<std::uint32_t> parse_number_list(const std::string& text, const char* what) {
  std::vector<std::uint32_t> out;
  std::string token;
  const auto flush = [&]() {
    if (token.empty()) return;
    char* end = nullptr;
    const unsigned long v = std::strtoul(token.c_str(), &end, 10);
    if (end == nullptr || *end != '\0' || v > 0xffffffffUL)
      die(std::string(what) + ": '" + token + "' is not a non-negative integer");
    out.push_back(static_cast<std::uint32_t>(v));
    token.clear();
  };
  for (const char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

struct SourceOptions {
  std::string source;
  std::string cf;
  std::string instructions;
  int first = 0;
};

void add_source_options(CLI::App* cmd, SourceOptions& so) {
  cmd->add_option("--source", so.source,
                  "built-in name, file:<path>, or one of the parametric families "
                  "sturmian | rote | paperfolding | rudin-shapiro");
  cmd->add_option("--cf", so.cf,
                  "continued-fraction coefficients for sturmian/rote, e.g. 1,2,1,2");
  cmd->add_option("--instructions", so.instructions,
                  "folding instruction word for paperfolding/rudin-shapiro, e.g. 0,1,1");
  cmd->add_option("--first", so.first, "initial symbol (0 or 1) for rote")
      ->check(CLI::Range(0, 1));
}

pal_source* open_source(const SourceOptions& so) {
  if (so.source.empty()) die("missing --source");
  pal_source* s = nullptr;
  pal_status st = PAL_ERR_INPUT;
  if (so.source == "sturmian") {
    const auto cf = parse_number_list(so.cf, "--cf");
    if (cf.empty()) die("--source sturmian requires --cf");
    st = pal_source_sturmian(cf.data(), cf.size(), &s);
  } else if (so.source == "rote") {
    const auto cf = parse_number_list(so.cf, "--cf");
    if (cf.empty()) die("--source rote requires --cf");
    st = pal_source_rote(cf.data(), cf.size(), so.first, &s);
  } else if (so.source == "paperfolding") {
    const auto raw = parse_number_list(so.instructions, "--instructions");
    const std::vector<std::int32_t> ins(raw.begin(), raw.end());
    st = pal_source_paperfolding(ins.empty() ? nullptr : ins.data(), ins.size(), &s);
  } else if (so.source == "rudin-shapiro") {
    const auto raw = parse_number_list(so.instructions, "--instructions");
    const std::vector<std::int32_t> ins(raw.begin(), raw.end());
    st = pal_source_rudin_shapiro(ins.empty() ? nullptr : ins.data(), ins.size(), &s);
  } else {
    st = pal_source_open(so.source.c_str(), &s);
  }
  check_status(st);
  return s;
}

std::size_t resolve_budget(const std::optional<std::uint64_t>& flag) {
  if (flag) return static_cast<std::size_t>(*flag);
  if (const char* env = std::getenv("PALCTL_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0' || v == 0)
      die("PALCTL_BUDGET is not a positive integer");
    return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 20;
}

void enforce_run_config(std::size_t k_max, std::size_t budget) {
  if (k_max < 1) die("k-max must be at least 1");
  if (budget < 2 * k_max)
    die("budget " + std::to_string(budget) + " is smaller than twice k-max (" +
        std::to_string(2 * k_max) + ")");
}

void emit(const std::string& payload, const std::string& out_path) {
  std::string text = payload;
  if (text.empty() || text.back() != '\n') text += '\n';
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) die("cannot open output file " + out_path);
  f << text;
}

std::string plain_periods(const json& j) {
  std::string out;
  out += "word: " + j["word"].get<std::string>() + "\n";
  out += "length: " + std::to_string(j["length"].get<std::size_t>()) + "\n";
  out += "smallest period: " + std::to_string(j["smallest_period"].get<std::size_t>()) + "\n";
  out += "all periods:";
  for (const auto& p : j["periods"]) out += " " + std::to_string(p.get<std::size_t>());
  out += "\n";
  out += std::string("palindrome: ") + (j["is_palindrome"].get<bool>() ? "yes" : "no") + "\n";
  if (j.contains("repetition_class"))
    out += "repetition class: " + j["repetition_class"].get<std::string>() + "\n";
  if (j.contains("twin")) out += "twin: " + j["twin"].get<std::string>() + "\n";
  return out;
}

std::string plain_classp(const json& j) {
  std::string out;
  out += "alphabet: " + j["alphabet"].get<std::string>() + "\n";
  for (const auto& [letter, image] : j["rules"].items())
    out += "rule: " + letter + " -> " + image.get<std::string>() + "\n";
  out += std::string("palindromic decomposition exists: ") +
         (j["is_class_p"].get<bool>() ? "yes" : "no") + "\n";
  for (const auto& d : j["decompositions"]) {
    out += "decomposition (" + d["side"].get<std::string>() + "): p=\"" +
           d["p"].get<std::string>() + "\"";
    for (const auto& [letter, part] : d["parts"].items())
      out += " " + letter + "->\"" + part.get<std::string>() + "\"";
    out += "\n";
  }
  if (j.contains("normalization") && !j["normalization"].is_null()) {
    const auto& n = j["normalization"];
    out += "minimal-prefix rewrite: shared prefix \"" +
           n["shared_prefix"].get<std::string>() + "\", power " +
           std::to_string(n["power"].get<unsigned>()) + ", seed " +
           n["seed"].get<std::string>() + "\n";
    for (const auto& [letter, image] : n["rules"].items())
      out += "rewritten rule: " + letter + " -> " + image.get<std::string>() + "\n";
    out += std::string("factor sets agree up to length ") +
           std::to_string(n["factor_check_len"].get<std::size_t>()) + ": " +
           (n["factors_agree"].get<bool>() ? "yes" : "no") + "\n";
  } else if (j.contains("normalization_error")) {
    out += "minimal-prefix rewrite failed: " + j["normalization_error"].get<std::string>() + "\n";
  } else {
    out += "minimal-prefix rewrite: not applicable\n";
  }
  return out;
}

std::string plain_palindromes(const json& j) {
  std::string out;
  out += "source: " + j["source"].get<std::string>() + "\n";
  out += "prefix length: " + std::to_string(j["prefix_len"].get<std::size_t>()) + "\n";
  if (j.contains("maximal")) {
    out += "palindromic factors with no longer palindrome around them:\n";
    for (const auto& w : j["maximal"]) out += "  " + w.get<std::string>() + "\n";
    return out;
  }
  for (const auto& row : j["palindromes"]) {
    out += "k=" + std::to_string(row["length"].get<std::size_t>()) + " (count " +
           std::to_string(row["count"].get<std::size_t>()) +
           (row["stable"].get<bool>() ? "" : ", unstable") + "):";
    for (const auto& w : row["words"]) out += " " + w["word"].get<std::string>();
    out += "\n";
  }
  return out;
}

std::string csv_palindromes(const json& j) {
  std::string out;
  if (j.contains("maximal")) {
    out = "word\n";
    for (const auto& w : j["maximal"]) out += w.get<std::string>() + "\n";
    return out;
  }
  out = "length,word,first_occurrence\n";
  for (const auto& row : j["palindromes"])
    for (const auto& w : row["words"])
      out += std::to_string(row["length"].get<std::size_t>()) + "," +
             w["word"].get<std::string>() + "," +
             std::to_string(w["first_occurrence"].get<std::size_t>()) + "\n";
  return out;
}

std::string profile_json_text(pal_profile* prof, const std::string& source_name) {
  json j;
  j["source"] = source_name;
  j["k_max"] = pal_profile_k_max(prof);
  j["prefix_len"] = pal_profile_prefix_len(prof);
  json rows = json::array();
  for (std::size_t k = 0; k <= pal_profile_k_max(prof); ++k) {
    std::uint64_t fac = 0;
    std::uint64_t pal = 0;
    std::int32_t stable = 0;
    check_status(pal_profile_row(prof, k, &fac, &pal, &stable));
    json row;
    row["k"] = k;
    row["fac"] = fac;
    row["pal"] = pal;
    row["stable"] = stable != 0;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j.dump(2);
}

std::string profile_plain_text(pal_profile* prof, const std::string& source_name) {
  std::string out;
  out += "source: " + source_name + "\n";
  out += "prefix length: " + std::to_string(pal_profile_prefix_len(prof)) + "\n";
  out += "k\tfac\tpal\tstable\n";
  for (std::size_t k = 0; k <= pal_profile_k_max(prof); ++k) {
    std::uint64_t fac = 0;
    std::uint64_t pal = 0;
    std::int32_t stable = 0;
    check_status(pal_profile_row(prof, k, &fac, &pal, &stable));
    out += std::to_string(k) + "\t" + std::to_string(fac) + "\t" + std::to_string(pal) +
           "\t" + (stable != 0 ? "yes" : "no") + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "combinatorics on words: sequence catalog, exact complexity profiles, "
      "palindrome and period calculus, verification suite"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "print a prefix of a source");
  SourceOptions gen_src;
  add_source_options(gen, gen_src);
  std::uint64_t gen_length = 64;
  gen->add_option("--length", gen_length, "number of symbols to print");
  std::string gen_out;
  gen->add_option("--out", gen_out, "write to a file instead of stdout");

  // complexity
  auto* cpx = app.add_subcommand("complexity",
                                 "factor and palindrome counts per length");
  SourceOptions cpx_src;
  add_source_options(cpx, cpx_src);
  std::uint64_t cpx_kmax = 64;
  cpx->add_option("--k-max,--max-k", cpx_kmax, "largest factor length");
  std::optional<std::uint64_t> cpx_budget;
  cpx->add_option("--budget", cpx_budget, "largest prefix length examined");
  std::string cpx_format = "csv";
  cpx->add_option("--format", cpx_format, "csv | json | plain")
      ->check(CLI::IsMember({"csv", "json", "plain"}));
  std::string cpx_out;
  cpx->add_option("--out", cpx_out, "write to a file instead of stdout");

  // palindromes
  auto* pals = app.add_subcommand("palindromes",
                                  "distinct palindromic factors per length");
  SourceOptions pal_src;
  add_source_options(pals, pal_src);
  std::uint64_t pal_kmax = 64;
  pals->add_option("--k-max,--max-k", pal_kmax, "largest length listed");
  std::optional<std::uint64_t> pal_budget;
  pals->add_option("--budget", pal_budget, "largest prefix length examined");
  bool pal_maximal = false;
  pals->add_flag("--maximal", pal_maximal,
                 "list only palindromes that are not the centre of a longer one");
  std::string pal_format = "json";
  pals->add_option("--format", pal_format, "json | csv | plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  std::string pal_out;
  pals->add_option("--out", pal_out, "write to a file instead of stdout");

  // periods
  auto* per = app.add_subcommand("periods", "period structure of a finite word");
  std::string per_word;
  per->add_option("--word", per_word, "the word, one character per symbol")->required();
  std::string per_format = "plain";
  per->add_option("--format", per_format, "plain | json")
      ->check(CLI::IsMember({"plain", "json"}));
  std::string per_out;
  per->add_option("--out", per_out, "write to a file instead of stdout");

  // classp
  auto* cls = app.add_subcommand(
      "classp", "palindromic decompositions of a substitution file");
  std::string cls_path;
  cls->add_option("--morphism", cls_path, "substitution description file")->required();
  std::string cls_format = "json";
  cls->add_option("--format", cls_format, "json | plain")
      ->check(CLI::IsMember({"json", "plain"}));
  std::string cls_out;
  cls->add_option("--out", cls_out, "write to a file instead of stdout");

  // verify
  auto* ver = app.add_subcommand("verify", "run one verification check");
  std::string ver_check;
  ver->add_option("--check", ver_check,
                  "general | kernel | cassaigne | droubay-pirillo | rote | "
                  "survey | scrambler")
      ->required();
  SourceOptions ver_src;
  add_source_options(ver, ver_src);
  std::uint64_t ver_kmax = 64;
  ver->add_option("--k-max,--max-k", ver_kmax, "largest length checked");
  std::optional<std::uint64_t> ver_budget;
  ver->add_option("--budget", ver_budget, "largest prefix length examined");
  std::string ver_out;
  ver->add_option("--out", ver_out, "write the JSON report to a file");

  // report
  auto* repc = app.add_subcommand("report", "run the full catalog sweep");
  std::optional<std::uint64_t> rep_budget;
  repc->add_option("--budget", rep_budget, "largest prefix length examined");
  std::string rep_out;
  repc->add_option("--out", rep_out, "write the JSON report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "palctl: " << e.what() << "\n";
    return 2;
  }

  if (gen->parsed()) {
    pal_source* s = open_source(gen_src);
    char* text = nullptr;
    check_status(pal_source_prefix(s, static_cast<std::size_t>(gen_length), &text));
    emit(take_string(text), gen_out);
    pal_source_close(s);
    return 0;
  }

  if (cpx->parsed()) {
    const std::size_t budget = resolve_budget(cpx_budget);
    enforce_run_config(cpx_kmax, budget);
    pal_source* s = open_source(cpx_src);
    pal_profile* prof = nullptr;
    check_status(pal_profile_compute(s, cpx_kmax, budget, &prof));
    char* name_raw = nullptr;
    check_status(pal_source_name(s, &name_raw));
    const std::string name = take_string(name_raw);
    std::string payload;
    if (cpx_format == "csv") {
      char* csv = nullptr;
      check_status(pal_profile_csv(prof, &csv));
      payload = take_string(csv);
    } else if (cpx_format == "json") {
      payload = profile_json_text(prof, name);
    } else {
      payload = profile_plain_text(prof, name);
    }
    emit(payload, cpx_out);
    pal_profile_free(prof);
    pal_source_close(s);
    return 0;
  }

  if (pals->parsed()) {
    const std::size_t budget = resolve_budget(pal_budget);
    enforce_run_config(pal_kmax, budget);
    pal_source* s = open_source(pal_src);
    char* raw = nullptr;
    check_status(pal_palindromes_json(s, pal_kmax, budget, pal_maximal ? 1 : 0, &raw));
    const std::string text = take_string(raw);
    std::string payload;
    if (pal_format == "json") {
      payload = text;
    } else {
      const json j = json::parse(text);
      payload = pal_format == "csv" ? csv_palindromes(j) : plain_palindromes(j);
    }
    emit(payload, pal_out);
    pal_source_close(s);
    return 0;
  }

  if (per->parsed()) {
    char* raw = nullptr;
    check_status(pal_word_periods_json(per_word.c_str(), &raw));
    const std::string text = take_string(raw);
    emit(per_format == "json" ? text : plain_periods(json::parse(text)), per_out);
    return 0;
  }

  if (cls->parsed()) {
    char* raw = nullptr;
    check_status(pal_classp_json(cls_path.c_str(), &raw));
    const std::string text = take_string(raw);
    emit(cls_format == "json" ? text : plain_classp(json::parse(text)), cls_out);
    return 0;
  }

  if (ver->parsed()) {
    const std::size_t budget = resolve_budget(ver_budget);
    enforce_run_config(ver_kmax, budget);
    pal_source* s = nullptr;
    if (!ver_src.source.empty()) s = open_source(ver_src);
    char* raw = nullptr;
    const pal_status st =
        pal_verify(ver_check.c_str(), s, ver_kmax, budget, &raw);
    if (st >= PAL_ERR_INPUT) {
      if (s != nullptr) pal_source_close(s);
      die(pal_last_error());
    }
    emit(take_string(raw), ver_out);
    if (s != nullptr) pal_source_close(s);
    return st == PAL_OK ? 0 : st == PAL_FAIL ? 1 : 2;
  }

  if (repc->parsed()) {
    const std::size_t budget = resolve_budget(rep_budget);
    if (budget < 1024) die("report needs a budget of at least 1024");
    char* raw = nullptr;
    const pal_status st = pal_report(budget, &raw);
    if (st >= PAL_ERR_INPUT) die(pal_last_error());
    emit(take_string(raw), rep_out);
    return st == PAL_OK ? 0 : 1;
  }

  die("no subcommand given");
}
