#include "rwl/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "rwl/formulas.hpp"
#include "rwl/generating_functions.hpp"
#include "rwl/graph.hpp"
#include "rwl/identities.hpp"
#include "rwl/parallel.hpp"
#include "rwl/report.hpp"
#include "rwl/walk.hpp"

namespace rwl::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(std::ostream& out, const Report& r) { out << to_json(r).dump(2) << '\n'; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read graph file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FamilySpec family_from_flags(const std::string& kind, std::size_t m, std::size_t n) {
  auto k = parse_family_kind(kind);
  if (!k) throw UsageError("unknown family '" + kind + "'");
  FamilySpec spec{*k, m, n};
  spec.validate();
  return spec;
}

// ---- count -----------------------------------------------------------------

struct CountArgs {
  std::string graph_file;
  std::string family;
  std::size_t n = 0;
  std::size_t m = 2;
  std::string method = "dp";
  std::string dp_mode = "auto";
};

int cmd_count(const CountArgs& a, std::ostream& out) {
  const auto t0 = Clock::now();
  if (a.graph_file.empty() == a.family.empty()) {
    throw UsageError("count needs exactly one of --graph FILE or --family KIND");
  }
  Report r;
  r.method = a.method;
  std::optional<FamilySpec> spec;
  std::optional<Graph> graph;
  if (!a.family.empty()) {
    if (a.n == 0) throw UsageError("--family requires --n");
    spec = family_from_flags(a.family, a.m, a.n);
    graph.emplace(build_family(*spec));
    r.input = "family:" + spec->label();
    r.params["family"] = std::string(to_string(spec->kind));
    if (spec->kind == FamilyKind::king || spec->kind == FamilyKind::grid) r.params["m"] = spec->m;
    r.params["n"] = spec->n;
  } else {
    graph.emplace(parse_graph(slurp(a.graph_file)));
    r.input = a.graph_file;
  }
  r.params["vertices"] = graph->order();
  r.params["edges"] = graph->edge_count();

  DpOptions dp;
  dp.threads = default_thread_count();
  if (a.dp_mode == "dense") dp.mode = DpMode::dense;
  else if (a.dp_mode == "layered") dp.mode = DpMode::layered;
  else if (a.dp_mode != "auto") throw UsageError("unknown --dp-mode '" + a.dp_mode + "'");

  const bool all = a.method == "all";
  json results = json::object();
  if (a.method == "dp" || (all && graph->dp_eligible())) {
    results["dp"] = count_labelings_dp(*graph, dp).to_string();
  }
  if (a.method == "walk" || (all && graph->order() <= kMaxWalkOrder)) {
    results["walk"] = std::to_string(enumerate_labelings_walk(*graph).size());
  }
  if (a.method == "formula" || all) {
    std::optional<FamilyCount> f = spec ? formula_for_family(*spec) : std::nullopt;
    if (f) {
      results["formula"] = f->value.to_string();
      r.params["formula"] = std::string(to_string(f->formula));
    } else if (!all) {
      throw UsageError("no closed-form count for this input; use --method dp or walk");
    }
  }
  if (!all && results.empty()) throw UsageError("unknown --method '" + a.method + "'");
  if (results.empty()) throw Error(ErrorKind::too_large, "no counting method applies to this graph");

  const std::string first = results.begin().value().get<std::string>();
  bool agree = true;
  for (const auto& [name, v] : results.items()) agree = agree && v.get<std::string>() == first;

  r.value = first;
  r.details["results"] = results;
  const bool connected = is_connected(*graph);
  if (!agree) r.status = "disagree";
  else if (!connected) r.status = "disconnected";
  else r.status = all ? "agree" : "ok";
  r.elapsed_ms = ms_since(t0);
  emit(out, r);
  return agree ? kOk : kDisagreement;
}

// ---- family-table ----------------------------------------------------------

struct TableArgs {
  std::string family;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::string format = "text";
};

int cmd_family_table(const TableArgs& a, std::ostream& out) {
  FormulaId id;
  if (a.family == "complete") id = FormulaId::complete;
  else if (a.family == "path") id = FormulaId::path;
  else if (a.family == "cycle") id = FormulaId::cycle;
  else if (a.family == "king2" || a.family == "king") id = FormulaId::king2;
  else if (a.family == "grid2" || a.family == "grid") id = FormulaId::grid2_binomial_inverse;
  else throw UsageError("unknown family '" + a.family + "' (complete, path, cycle, king2, grid2)");
  if (a.format != "text" && a.format != "csv" && a.format != "json") {
    throw UsageError("unknown --format '" + a.format + "'");
  }
  const std::size_t lo = std::max(a.n_min, min_n(id));
  if (a.format == "csv") out << "family,n,value\n";
  for (std::size_t n = lo; n <= a.n_max; ++n) {
    const auto t0 = Clock::now();
    const std::string value = evaluate(id, n).to_string();
    if (a.format == "csv") {
      out << a.family << ',' << n << ',' << value << '\n';
    } else if (a.format == "text") {
      out << a.family << ' ' << std::setw(4) << n << "  " << value << '\n';
    } else {
      Report r;
      r.input = "family:" + a.family;
      r.method = "formula";
      r.value = value;
      r.params["family"] = a.family;
      r.params["n"] = n;
      r.params["formula"] = std::string(to_string(id));
      r.status = "ok";
      r.elapsed_ms = ms_since(t0);
      out << to_json(r).dump() << '\n';
    }
  }
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string claim;
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> terms;
  double tol = 1e-8;
  std::vector<std::size_t> ns{25, 50, 100, 200, 400};
  std::size_t random_graphs = 200;
  std::uint64_t seed = 20240601;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto t0 = Clock::now();
  Report r;
  r.input = a.claim;
  VerificationResult v;
  const unsigned threads = default_thread_count();
  if (auto theorem = parse_theorem_claim(a.claim)) {
    r.method = "exact";
    const std::size_t n_max = a.n_max.value_or(100);
    r.params["n_max"] = n_max;
    v = verify_theorem(*theorem, n_max, threads);
  } else if (a.claim == "egf-gg2" || a.claim == "ogf-a087547" || a.claim == "egf-a182525") {
    r.method = "series";
    const std::size_t terms = a.terms.value_or(a.n_max.value_or(25));
    r.params["terms"] = terms;
    v = a.claim == "egf-gg2"       ? verify_egf_gg2(terms)
        : a.claim == "ogf-a087547" ? verify_ogf_a087547(terms)
                                   : verify_egf_a182525(terms);
  } else if (a.claim == "lemma37") {
    r.method = "quadrature";
    const std::size_t n_max = a.n_max.value_or(20);
    if (n_max > 30) throw UsageError("lemma37 supports --n-max up to 30");
    if (a.tol < 1e-8) throw UsageError("lemma37 requires --tol >= 1e-8");
    r.params["n_max"] = n_max;
    r.params["tol"] = a.tol;
    v = verify_lemma37(n_max, a.tol);
  } else if (a.claim == "asymptotic") {
    r.method = "mpfr";
    for (std::size_t i = 0; i < a.ns.size(); ++i) {
      if (a.ns[i] < 1 || a.ns[i] > 2000 || (i > 0 && a.ns[i] <= a.ns[i - 1])) {
        throw UsageError("--ns must be strictly increasing values in 1..2000");
      }
    }
    r.params["ns"] = a.ns;
    v = check_asymptotic_gg2(a.ns);
  } else if (a.claim == "oracle-equivalence") {
    r.method = "walk-vs-dp";
    const std::size_t n_max = a.n_max.value_or(7);
    if (n_max > kMaxWalkOrder) {
      throw Error(ErrorKind::too_large, "oracle-equivalence supports --n-max up to " +
                                            std::to_string(kMaxWalkOrder));
    }
    r.params["n_max"] = n_max;
    r.params["random_graphs"] = a.random_graphs;
    r.params["seed"] = a.seed;
    v = verify_oracle_equivalence(n_max, a.random_graphs, std::min<std::size_t>(n_max, 7), a.seed);
  } else {
    throw UsageError("unknown claim '" + a.claim + "'");
  }
  r.value = v.passed ? "pass" : "fail";
  r.status = r.value;
  r.details = to_json(v);
  r.elapsed_ms = ms_since(t0);
  emit(out, r);
  return v.passed ? kOk : kVerifyFailed;
}

// ---- series ----------------------------------------------------------------

struct SeriesArgs {
  std::string egf;
  std::size_t terms = 10;
};

int cmd_series(const SeriesArgs& a, std::ostream& out) {
  const auto t0 = Clock::now();
  const std::size_t order = std::max(a.terms + 1, kDefaultSeriesOrder);
  PowerSeries s(1);
  std::size_t first = 1;
  bool shifted = false;  // scale by (n-1)! rather than n!
  if (a.egf == "gg2") {
    s = grid2_egf(order);
  } else if (a.egf == "a087547") {
    s = a087547_scaled_ogf(order);
    shifted = true;
  } else if (a.egf == "a182525") {
    s = a182525_egf(order);
    first = 0;
  } else {
    throw UsageError("unknown --egf '" + a.egf + "' (gg2, a087547, a182525)");
  }
  json coeffs = json::array();
  json terms = json::array();
  for (std::size_t n = first; n <= a.terms; ++n) {
    coeffs.push_back(egf_coefficient(s, n).to_string());
    terms.push_back(factorial_scaled_coefficient(s, n, shifted ? n - 1 : n).to_string());
  }
  Report r;
  r.input = a.egf;
  r.method = "series";
  r.value = terms.empty() ? "" : terms.back().get<std::string>();
  r.params["terms"] = a.terms;
  r.params["first_index"] = first;
  r.params["scaling"] = shifted ? "(n-1)!" : "n!";
  r.status = "ok";
  r.details["coefficients"] = coeffs;
  r.details["terms"] = terms;
  r.elapsed_ms = ms_since(t0);
  emit(out, r);
  return kOk;
}

int cmd_info(std::ostream& out) {
  json j;
  j["name"] = "rwl";
  j["families"] = {"complete", "path", "cycle", "king", "grid"};
  j["claims"] = {"eq915", "eq771", "eq003", "eq900-vs-901", "egf-gg2", "ogf-a087547",
                 "egf-a182525", "lemma37", "asymptotic", "oracle-equivalence"};
  j["limits"] = {{"walk_max_vertices", kMaxWalkOrder},
                 {"dp_max_vertices", kMaxDpOrder},
                 {"dense_dp_max_vertices", kDenseDpHardLimit}};
  j["threads"] = default_thread_count();
  j["exit_codes"] = {{"ok", kOk}, {"verify_failed", kVerifyFailed}, {"usage", kUsage},
                     {"disagreement", kDisagreement}, {"size_limit", kSizeLimit}};
  out << j.dump(2) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count random walk labelings of graphs and verify their closed forms", "rwl"};
  app.require_subcommand(1, 1);

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count labelings of one graph");
  c->add_option("--graph", count.graph_file, "Edge-list file");
  c->add_option("--family", count.family, "complete|path|cycle|king|grid");
  c->add_option("--n", count.n, "Order (or columns for boards)");
  c->add_option("--m", count.m, "Rows for king/grid boards")->capture_default_str();
  c->add_option("--method", count.method, "dp|walk|formula|all")->capture_default_str();
  c->add_option("--dp-mode", count.dp_mode, "auto|dense|layered")->capture_default_str();

  TableArgs table;
  auto* t = app.add_subcommand("family-table", "Closed-form counts for a family, one row per n");
  t->add_option("--family", table.family, "complete|path|cycle|king2|grid2")->required();
  t->add_option("--n-max", table.n_max, "Largest n")->required();
  t->add_option("--n-min", table.n_min, "Smallest n (default: family minimum)");
  t->add_option("--format", table.format, "text|csv|json")->capture_default_str();

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check one identity or oracle claim");
  v->add_option("--claim", verify.claim, "Claim id (see `rwl info`)")->required();
  v->add_option("--n-max", verify.n_max, "Largest n checked");
  v->add_option("--terms", verify.terms, "Largest series index checked");
  v->add_option("--tol", verify.tol, "Relative tolerance for quadrature claims")->capture_default_str();
  v->add_option("--ns", verify.ns, "Increasing n values for the asymptotic ratio")->delimiter(',');
  v->add_option("--random-graphs", verify.random_graphs, "Random graphs for oracle-equivalence")
      ->capture_default_str();
  v->add_option("--seed", verify.seed, "Seed for random graphs")->capture_default_str();

  SeriesArgs series;
  auto* s = app.add_subcommand("series", "Expand a closed-form generating function");
  s->add_option("--egf", series.egf, "gg2|a087547|a182525")->required();
  s->add_option("--terms", series.terms, "Largest index printed")->capture_default_str();

  auto* i = app.add_subcommand("info", "Limits, claims and thread count");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "rwl: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (c->parsed()) return cmd_count(count, out);
    if (t->parsed()) return cmd_family_table(table, out);
    if (v->parsed()) return cmd_verify(verify, out);
    if (s->parsed()) return cmd_series(series, out);
    if (i->parsed()) return cmd_info(out);
  } catch (const UsageError& e) {
    err << "rwl: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "rwl: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::too_large ? kSizeLimit : kUsage;
  }
  return kUsage;
}

}  // namespace rwl::cli
