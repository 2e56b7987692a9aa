#include "trip_cli/cli.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trip/dynamics.hpp"
#include "trip/e13e.hpp"
#include "trip/e23e.hpp"
#include "trip/eee.hpp"
#include "trip/equivalence.hpp"
#include "trip/language.hpp"
#include "trip/render.hpp"
#include "trip/reproduction.hpp"
#include "trip/substitution.hpp"

namespace trip::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Parsing helpers
// ---------------------------------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string strip(const std::string& s, const char* extra = "") {
  std::string drop = std::string(" \t") + extra;
  size_t b = s.find_first_not_of(drop);
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(drop);
  return s.substr(b, e - b + 1);
}

TripTriple parse_map(const std::string& s) {
  auto t = TripTriple::parse(s);
  if (!t) {
    throw UsageError("bad --map '" + s +
                     "'; expected \"(sigma,tau0,tau1)\" with entries e,12,13,23,123,132");
  }
  return *t;
}

Variant parse_variant_arg(const std::string& s) {
  try {
    return parse_variant(s);
  } catch (const DomainError&) {
    throw UsageError("bad --variant '" + s + "'; expected canonical13 or variant31");
  }
}

long parse_long_token(const std::string& s, const char* what) {
  try {
    size_t idx = 0;
    long v = std::stol(s, &idx);
    if (idx != s.size()) throw std::invalid_argument("trailing garbage");
    return v;
  } catch (...) {
    throw UsageError(std::string("bad ") + what + " entry '" + s + "'");
  }
}

std::vector<long> parse_digit_list(const std::string& s, const char* what) {
  std::vector<long> out;
  for (const auto& tok : split(s, ',')) {
    long v = parse_long_token(strip(tok), what);
    if (v < 0) throw UsageError(std::string(what) + " digits must be nonnegative");
    out.push_back(v);
  }
  return out;
}

std::vector<std::pair<long, long>> parse_pairs(const std::string& s) {
  std::vector<std::pair<long, long>> out;
  for (const auto& group : split(s, ';')) {
    auto g = strip(group, "()");
    auto parts = split(g, ',');
    if (parts.size() != 2) {
      throw UsageError("bad --pairs group '" + group + "'; expected \"(j,k);(j,k);...\"");
    }
    long j = parse_long_token(strip(parts[0]), "--pairs");
    long k = parse_long_token(strip(parts[1]), "--pairs");
    if (j < 0 || k < 0) throw UsageError("--pairs digits must be nonnegative");
    out.emplace_back(j, k);
  }
  return out;
}

CodingSeq coding_from(const std::string& farey, const std::string& gauss) {
  if (!farey.empty() && !gauss.empty()) {
    throw UsageError("give exactly one of --farey and --gauss");
  }
  if (!farey.empty()) {
    for (char c : farey) {
      if (c != '0' && c != '1') throw UsageError("--farey must be a string over {0,1}");
    }
    return CodingSeq::farey(farey);
  }
  if (!gauss.empty()) return CodingSeq::gauss(parse_digit_list(gauss, "--gauss"));
  throw UsageError("a coding is required: --farey BITS or --gauss k0,k1,...");
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("TRIP_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      throw UsageError("TRIP_SEED is not a valid unsigned integer");
    }
    return v;
  }
  return 12345;
}

// ---------------------------------------------------------------------------
// Output helpers
// ---------------------------------------------------------------------------

int emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot open --out path '" + out_path + "'");
    f << text;
  }
  return 0;
}

int emit_json(const json& j, const std::string& out_path) {
  return emit_text(j.dump(2) + "\n", out_path);
}

std::string iso_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

json base_report(const char* command, json config) {
  json j;
  j["command"] = command;
  j["timestamp"] = iso_now();
  j["config"] = std::move(config);
  return j;
}

json optional_long(const std::optional<long>& v) { return v ? json(*v) : json(nullptr); }

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_code_point(const std::string& map_s, const std::string& point_s, int steps,
                   const std::string& out) {
  TripTriple t = parse_map(map_s);
  auto p = Point3::parse(point_s);
  if (!p) throw UsageError("bad --point; expected exact rationals \"x,y,z\" like 1/6,1/3,1/2");
  if (steps < 1) throw UsageError("--steps must be positive");
  auto [farey, gauss] = code_point(*p, t, steps);
  std::string bits;
  for (int b : farey.bits) bits += static_cast<char>('0' + b);
  json j = base_report("code-point",
                       {{"map", t.name()}, {"point", p->to_string()}, {"steps", steps}});
  j["result"] = {{"farey_bits", bits},
                 {"farey_truncated", farey.truncated},
                 {"gauss_ks", gauss.ks},
                 {"gauss_truncated", gauss.truncated}};
  return emit_json(j, out);
}

int cmd_word(const std::string& map_s, const std::string& variant_s, const std::string& farey_s,
             const std::string& gauss_s, const std::string& out) {
  TripTriple t = parse_map(map_s);
  Variant v = parse_variant_arg(variant_s);
  CodingSeq seq = coding_from(farey_s, gauss_s);

  Mat3 prod = Mat3::identity();
  for (const auto& s : coding_substitutions(seq, t, v)) prod = prod * abelianize_substitution(s);
  Int len = prod(0, 0) + prod(1, 0) + prod(2, 0);
  if (len > 2'000'000) {
    throw UsageError("expanded word would have " + len.str() +
                     " characters; shorten the coding");
  }
  Word w = expand_word(seq, t, static_cast<int>(seq.size()), '1', v);
  Vec3 counts = abelianize_word(w);
  json j = base_report("word", {{"map", t.name()},
                                {"variant", std::string(variant_name(v))},
                                {"coding", seq.to_string()}});
  j["result"] = {{"word", w},
                 {"length", static_cast<long>(w.size())},
                 {"letter_counts",
                  {counts[0].convert_to<long>(), counts[1].convert_to<long>(),
                   counts[2].convert_to<long>()}}};
  return emit_json(j, out);
}

int cmd_complexity(const std::string& map_s, const std::string& variant_s,
                   const std::string& farey_s, const std::string& gauss_s, int n_max, bool csv,
                   const std::string& out) {
  TripTriple t = parse_map(map_s);
  Variant v = parse_variant_arg(variant_s);
  CodingSeq seq = coding_from(farey_s, gauss_s);
  if (n_max < 1) throw UsageError("--n-max must be positive");

  auto sample = expand_language_sample(seq, t, n_max + 2, v);
  int used = std::min(n_max, sample.reliable_window());
  auto profile = complexity_profile(sample, used);
  if (csv) {
    std::string text = "n,p\n";
    for (int n = 0; n <= used; ++n) {
      text += std::to_string(n) + ',' + std::to_string(profile[static_cast<size_t>(n)]) + '\n';
    }
    return emit_text(text, out);
  }
  json j = base_report("complexity", {{"map", t.name()},
                                      {"variant", std::string(variant_name(v))},
                                      {"coding", seq.to_string()},
                                      {"n_max", n_max}});
  j["result"] = {{"reliable_window", sample.reliable_window()},
                 {"window_flagged", sample.window_flagged()},
                 {"depth", sample.depth()},
                 {"n_max_used", used},
                 {"profile", profile}};
  return emit_json(j, out);
}

int cmd_bispecial(const std::string& map_s, const std::string& variant_s,
                  const std::string& farey_s, const std::string& gauss_s, int n_max,
                  const std::string& out) {
  TripTriple t = parse_map(map_s);
  Variant v = parse_variant_arg(variant_s);
  CodingSeq seq = coding_from(farey_s, gauss_s);
  if (n_max < 0) throw UsageError("--n-max must be nonnegative");

  auto sample = expand_language_sample(seq, t, n_max + 2, v);
  int used = std::min(n_max, sample.reliable_window() - 2);
  if (used < 0) {
    throw WindowError("coding too short: reliable window " +
                      std::to_string(sample.reliable_window()));
  }
  auto entries = enumerate_bispecial(sample, used);
  json list = json::array();
  for (const auto& e : entries) {
    json cells = json::array();
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        if (e.diagram.has(a, b)) {
          cells.push_back(std::string(1, static_cast<char>('0' + a)) +
                          static_cast<char>('0' + b));
        }
      }
    }
    list.push_back({{"word", e.word},
                    {"length", static_cast<long>(e.word.size())},
                    {"m", e.m},
                    {"cells", cells}});
  }
  json j = base_report("bispecial", {{"map", t.name()},
                                     {"variant", std::string(variant_name(v))},
                                     {"coding", seq.to_string()},
                                     {"n_max", n_max}});
  j["result"] = {{"reliable_window", sample.reliable_window()},
                 {"len_max_used", used},
                 {"bispecial", list}};
  return emit_json(j, out);
}

int cmd_certify(const std::string& map_s, const std::string& gauss_s, int n_max,
                const std::string& out) {
  TripTriple t = parse_map(map_s);
  if (!(t == eee_triple())) {
    throw UsageError("certify supports --map \"(e,e,e)\" (relabel other members of its class)");
  }
  if (gauss_s.empty()) throw UsageError("certify requires --gauss k0,k1,...");
  auto ks = parse_digit_list(gauss_s, "--gauss");
  if (n_max < 4) throw UsageError("--n-max must be >= 4");

  auto cert = certify_eee(ks, n_max);
  json j = base_report("certify", {{"map", t.name()},
                                   {"coding", CodingSeq::gauss(ks).to_string()},
                                   {"n_max", n_max}});
  j["result"] = {{"bounds_ok", cert.bounds_ok},
                 {"coverage_ok", cert.coverage_ok},
                 {"m_values_ok", cert.m_values_ok},
                 {"interleaving_ok", cert.interleaving_ok},
                 {"parity_ok", cert.parity_ok},
                 {"ok", cert.ok()},
                 {"bispecials_checked", cert.bispecials_checked},
                 {"chain_entries", cert.chain_entries},
                 {"profile", cert.profile},
                 {"failures", cert.failures}};
  emit_json(j, out);
  return cert.ok() ? 0 : 1;
}

int cmd_analyze_e13e(const std::string& prefix_s, const std::string& period_s, int n_check,
                     const std::string& out) {
  if (period_s.empty()) throw UsageError("analyze-e13e requires --period k0,k1,...");
  E13eInput input;
  if (!prefix_s.empty()) input.prefix = parse_digit_list(prefix_s, "--prefix");
  input.period = parse_digit_list(period_s, "--period");

  auto rep = analyze_e13e(input, n_check);
  json j = base_report("analyze-e13e", {{"map", e13e_triple().name()},
                                        {"prefix", input.prefix},
                                        {"period", input.period},
                                        {"n_max", n_check}});
  j["result"] = {{"verdict", rep.verdict},
                 {"v_limit", optional_long(rep.v_limit)},
                 {"w_limit", optional_long(rep.w_limit)},
                 {"fitted_c", optional_long(rep.fitted_c)},
                 {"fitted_plateau", optional_long(rep.fitted_plateau)},
                 {"conditions_ok", rep.conditions_ok},
                 {"chains_ok", rep.chains_ok},
                 {"right_specials_ok", rep.rs_ok},
                 {"profile_ok", rep.profile_ok},
                 {"fit_ok", rep.fit_ok},
                 {"two_letter_ok", rep.two_letter_ok},
                 {"ok", rep.ok()},
                 {"profile", rep.profile},
                 {"failures", rep.failures}};
  emit_json(j, out);
  return rep.ok() ? 0 : 1;
}

int cmd_check_e23e(const std::string& pairs_s, const std::string& gauss_s, int n_max,
                   const std::string& out) {
  std::vector<std::pair<long, long>> pairs;
  bool dropped = false;
  if (!pairs_s.empty() && !gauss_s.empty()) {
    throw UsageError("give exactly one of --pairs and --gauss");
  }
  if (!pairs_s.empty()) {
    pairs = parse_pairs(pairs_s);
  } else if (!gauss_s.empty()) {
    auto [seq, d] = CodingSeq::pair_up(CodingSeq::gauss(parse_digit_list(gauss_s, "--gauss")));
    pairs = seq.pairs;
    dropped = d;
  } else {
    throw UsageError("check-e23e requires --pairs \"(j,k);(j,k);...\" or --gauss k0,k1,...");
  }

  auto rep = check_e23e(pairs, n_max);
  json j = base_report("check-e23e", {{"map", e23e_triple().name()},
                                      {"coding", CodingSeq::double_gauss(pairs).to_string()},
                                      {"dropped_last_digit", dropped},
                                      {"n_max", n_max}});
  j["result"] = {{"word_length", rep.word_len.str()},
                 {"bound_ok", rep.bound_ok},
                 {"delta_ok", rep.delta_ok},
                 {"ok", rep.ok()},
                 {"profile", rep.profile},
                 {"failures", rep.failures}};
  emit_json(j, out);
  return rep.ok() ? 0 : 1;
}

int cmd_classes(int n_max, long trials, const std::optional<std::uint64_t>& seed_opt,
                const std::string& out) {
  json list = json::array();
  for (const auto& c : enumerate_classes()) {
    json members = json::array();
    for (const auto& m : c.members) members.push_back(m.name());
    list.push_back({{"representative", c.representative.name()},
                    {"starred", c.starred},
                    {"size", static_cast<long>(c.members.size())},
                    {"verdict", verdict_name(c.verdict)},
                    {"members", members}});
  }
  bool ok = true;
  json j = base_report("classes", {{"n_max", n_max}, {"trials", trials}});
  j["result"] = {{"count", static_cast<long>(enumerate_classes().size())}, {"classes", list}};
  if (trials > 0) {
    std::uint64_t seed = resolve_seed(seed_opt);
    j["config"]["seed"] = seed;
    auto suite = class_verdict_suite(n_max, trials, seed);
    ok = suite.ok();
    j["result"]["verdict_suite"] = {{"degenerate_checked", suite.degenerate_checked},
                                    {"cassaigne_checked", suite.cassaigne_checked},
                                    {"eee_checked", suite.eee_checked},
                                    {"ok", suite.ok()},
                                    {"failures", suite.failures}};
  }
  emit_json(j, out);
  return ok ? 0 : 1;
}

json table_report_json(const TableCheckReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) {
    rows.push_back({{"triple", r.row.triple.name()},
                    {"bits", r.row.farey_bits},
                    {"n", r.row.n},
                    {"p_expected", r.row.p_expected},
                    {"p_computed", r.p_computed},
                    {"word_length", r.word_len},
                    {"match", r.match}});
  }
  return {{"variant", std::string(variant_name(rep.variant))},
          {"rows", rows},
          {"all_match", rep.all_match},
          {"failures", rep.failures}};
}

int cmd_reproduce(const std::string& variant_s, bool csv, const std::string& out) {
  if (csv) {
    if (variant_s.empty()) throw UsageError("--csv needs --variant canonical13 or variant31");
    return emit_text(counterexample_table_csv(parse_variant_arg(variant_s)), out);
  }
  json j = base_report("reproduce-tables",
                       {{"variant", variant_s.empty() ? "both" : variant_s}});
  bool ok = true;
  json reports = json::array();
  if (variant_s.empty() || variant_s == "both") {
    for (Variant v : {Variant::Canonical13, Variant::Variant31}) {
      auto rep = reproduce_counterexample_tables(v);
      ok = ok && rep.all_match;
      reports.push_back(table_report_json(rep));
    }
  } else {
    auto rep = reproduce_counterexample_tables(parse_variant_arg(variant_s));
    ok = rep.all_match;
    reports.push_back(table_report_json(rep));
  }
  j["result"] = {{"tables", reports}, {"all_match", ok}};
  emit_json(j, out);
  return ok ? 0 : 1;
}

int cmd_search(const std::string& map_s, const std::string& variant_s, int max_bits, long budget,
               int n_cap, const std::string& out) {
  TripTriple t = parse_map(map_s);
  Variant v = parse_variant_arg(variant_s);
  auto witness = search_high_complexity(t, v, max_bits, budget, n_cap);
  json j = base_report("search", {{"map", t.name()},
                                  {"variant", std::string(variant_name(v))},
                                  {"max_bits", max_bits},
                                  {"budget", budget},
                                  {"n_cap", n_cap}});
  if (witness) {
    j["result"] = {{"found", true},
                   {"bits", witness->bits},
                   {"n", witness->n},
                   {"p", witness->p},
                   {"word_length", witness->word_len}};
  } else {
    j["result"] = {{"found", false}};
  }
  return emit_json(j, out);
}

int cmd_hidden(long trials, const std::optional<std::uint64_t>& seed_opt, int jobs,
               long max_steps, const std::string& sum_bound_s, const std::string& out) {
  Int bound;
  try {
    bound = Int(sum_bound_s);
  } catch (...) {
    throw UsageError("bad --sum-bound '" + sum_bound_s + "'");
  }
  std::uint64_t seed = resolve_seed(seed_opt);
  auto rep = hidden_r2_experiment(trials, bound, seed, max_steps, jobs);
  json j = base_report("hidden-r2", {{"trials", trials},
                                     {"sum_bound", bound.str()},
                                     {"seed", seed},
                                     {"max_steps", max_steps},
                                     {"jobs", jobs}});
  json hist = json::array();
  for (long h : rep.step_histogram) hist.push_back(h);
  j["result"] = {{"reached_ygtz", rep.reached},
                 {"hit_zero", rep.hit_zero},
                 {"exhausted", rep.exhausted},
                 {"reached_fraction", rep.reached_fraction()},
                 {"step_histogram", hist}};
  return emit_json(j, out);
}

int cmd_render(const std::string& map_s, int depth, const std::string& mode_s,
               const std::string& out) {
  TripTriple t = parse_map(map_s);
  auto mode = parse_render_mode(mode_s);
  if (!mode) throw UsageError("bad --mode '" + mode_s + "'; expected farey, gauss-fan, or regions");
  return emit_text(render_partition_svg(t, depth, *mode), out);
}

}  // namespace

// ---------------------------------------------------------------------------
// Argument wiring
// ---------------------------------------------------------------------------

int run(int argc, const char* const* argv) {
  CLI::App app{"exact tools for the triangle-partition map family: orbits, substitution"
               " languages, complexity certificates, and published-table reproduction"};
  app.require_subcommand(1);

  std::string map_s = "(e,e,e)";
  std::string variant_s = "canonical13";
  std::string farey_s, gauss_s, pairs_s, point_s, prefix_s, period_s, out_path;
  std::string mode_s = "farey";
  std::string reproduce_variant_s;
  std::string sum_bound_s = "2147483648";
  std::optional<std::uint64_t> seed_opt;
  bool csv = false;
  bool svg = false;
  int code_steps = 16, complexity_n = 50, bispecial_n = 24, certify_n = 150, e13e_n = 60,
      e23e_n = 200, classes_n = 120, search_bits = 12, search_ncap = 64, render_depth = 6,
      jobs = 1;
  long classes_trials = 0, hidden_trials = 100000, search_budget = 100000, hidden_steps = 1000;

  auto add_map = [&](CLI::App* sc) {
    sc->add_option("--map", map_s, "map triple \"(sigma,tau0,tau1)\"")
        ->capture_default_str();
  };
  auto add_variant = [&](CLI::App* sc) {
    sc->add_option("--variant", variant_s, "substitution convention: canonical13 | variant31")
        ->capture_default_str();
  };
  auto add_coding = [&](CLI::App* sc) {
    sc->add_option("--farey", farey_s, "branch bits, e.g. 0110");
    sc->add_option("--gauss", gauss_s, "Gauss digits, e.g. 0,2,1");
  };
  auto add_out = [&](CLI::App* sc) {
    sc->add_option("--out", out_path, "write the report to this path instead of stdout");
  };
  auto add_seed = [&](CLI::App* sc) {
    sc->add_option("--seed", seed_opt, "RNG seed (falls back to env TRIP_SEED, then 12345)");
  };

  auto* sc_code = app.add_subcommand("code-point", "Farey/Gauss itinerary of an exact point");
  add_map(sc_code);
  sc_code->add_option("--point", point_s, "exact rational point \"x,y,z\"")->required();
  sc_code->add_option("--steps", code_steps, "itinerary length")->capture_default_str();
  add_out(sc_code);

  auto* sc_word = app.add_subcommand("word", "expand a coding into its word from seed 1");
  add_map(sc_word);
  add_variant(sc_word);
  add_coding(sc_word);
  add_out(sc_word);

  auto* sc_cx = app.add_subcommand("complexity", "complexity profile of a coding's language");
  add_map(sc_cx);
  add_variant(sc_cx);
  add_coding(sc_cx);
  sc_cx->add_option("--n-max", complexity_n, "profile up to this length")->capture_default_str();
  sc_cx->add_flag("--csv", csv, "emit CSV instead of JSON");
  add_out(sc_cx);

  auto* sc_bs = app.add_subcommand("bispecial", "bispecial factors with extension tables");
  add_map(sc_bs);
  add_variant(sc_bs);
  add_coding(sc_bs);
  sc_bs->add_option("--n-max", bispecial_n, "enumerate up to this factor length")
      ->capture_default_str();
  add_out(sc_bs);

  auto* sc_cert = app.add_subcommand("certify", "full complexity certificate for (e,e,e)");
  add_map(sc_cert);
  sc_cert->add_option("--gauss", gauss_s, "Gauss digits, e.g. 0,2,1")->required();
  sc_cert->add_option("--n-max", certify_n, "certify up to this length")->capture_default_str();
  add_out(sc_cert);

  auto* sc_13 = app.add_subcommand("analyze-e13e", "trichotomy analysis for (e,13,e)");
  sc_13->add_option("--prefix", prefix_s, "Gauss digit prefix, e.g. 2,1");
  sc_13->add_option("--period", period_s, "repeating Gauss digits, e.g. 0,1")->required();
  sc_13->add_option("--n-max", e13e_n, "analyze up to this length")->capture_default_str();
  add_out(sc_13);

  auto* sc_23 = app.add_subcommand("check-e23e", "3n bound check for (e,23,e) pair codings");
  sc_23->add_option("--pairs", pairs_s, "doubled digits \"(j,k);(j,k);...\"");
  sc_23->add_option("--gauss", gauss_s, "Gauss digits to pair up, e.g. 0,2,1,1");
  sc_23->add_option("--n-max", e23e_n, "check up to this length")->capture_default_str();
  add_out(sc_23);

  auto* sc_cls = app.add_subcommand("classes", "the 21 equivalence classes and their verdicts");
  sc_cls->add_option("--n-max", classes_n, "verdict-suite profile length")->capture_default_str();
  sc_cls->add_option("--trials", classes_trials, "run the verdict spot-check suite this often")
      ->capture_default_str();
  add_seed(sc_cls);
  add_out(sc_cls);

  auto* sc_rt = app.add_subcommand("reproduce-tables", "recompute the published witness tables");
  sc_rt->add_option("--variant", reproduce_variant_s,
                    "canonical13 | variant31 | both (default both)");
  sc_rt->add_flag("--csv", csv, "emit the golden table as CSV");
  add_out(sc_rt);

  auto* sc_se = app.add_subcommand("search", "breadth-first search for p(n) > 3n witnesses");
  add_map(sc_se);
  add_variant(sc_se);
  sc_se->add_option("--max-bits", search_bits, "maximum coding length")->capture_default_str();
  sc_se->add_option("--budget", search_budget, "maximum codings to expand")
      ->capture_default_str();
  sc_se->add_option("--n-cap", search_ncap, "scan factor lengths up to this")
      ->capture_default_str();
  add_out(sc_se);

  auto* sc_hr = app.add_subcommand("hidden-r2", "integer-orbit y>z experiment");
  sc_hr->add_option("--trials", hidden_trials, "number of sampled points")->capture_default_str();
  sc_hr->add_option("--sum-bound", sum_bound_s, "coordinate sum bound")->capture_default_str();
  sc_hr->add_option("--steps", hidden_steps, "orbit step cap")->capture_default_str();
  sc_hr->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  add_seed(sc_hr);
  add_out(sc_hr);

  auto* sc_rd = app.add_subcommand("render", "SVG of the nested triangle partition");
  add_map(sc_rd);
  sc_rd->add_option("--steps", render_depth, "subdivision depth (1..12)")->capture_default_str();
  sc_rd->add_option("--mode", mode_s, "farey | gauss-fan | regions")->capture_default_str();
  sc_rd->add_flag("--svg", svg, "emit SVG (the only render format; accepted for symmetry)");
  add_out(sc_rd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*sc_code) return cmd_code_point(map_s, point_s, code_steps, out_path);
    if (*sc_word) return cmd_word(map_s, variant_s, farey_s, gauss_s, out_path);
    if (*sc_cx) {
      return cmd_complexity(map_s, variant_s, farey_s, gauss_s, complexity_n, csv, out_path);
    }
    if (*sc_bs) return cmd_bispecial(map_s, variant_s, farey_s, gauss_s, bispecial_n, out_path);
    if (*sc_cert) return cmd_certify(map_s, gauss_s, certify_n, out_path);
    if (*sc_13) return cmd_analyze_e13e(prefix_s, period_s, e13e_n, out_path);
    if (*sc_23) return cmd_check_e23e(pairs_s, gauss_s, e23e_n, out_path);
    if (*sc_cls) return cmd_classes(classes_n, classes_trials, seed_opt, out_path);
    if (*sc_rt) return cmd_reproduce(reproduce_variant_s, csv, out_path);
    if (*sc_se) {
      return cmd_search(map_s, variant_s, search_bits, search_budget, search_ncap, out_path);
    }
    if (*sc_hr) {
      return cmd_hidden(hidden_trials, seed_opt, jobs, hidden_steps, sum_bound_s, out_path);
    }
    if (*sc_rd) return cmd_render(map_s, render_depth, mode_s, out_path);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const WindowError& e) {
    std::cerr << "window error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace trip::cli
