#pragma once

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "upset/bounds.hpp"
#include "upset/embed_search.hpp"
#include "upset/embedding.hpp"
#include "upset/error.hpp"
#include "upset/gadget.hpp"
#include "upset/graph_io.hpp"
#include "upset/grid_embed.hpp"
#include "upset/montecarlo.hpp"
#include "upset/point_set.hpp"
#include "upset/version.hpp"
#include "upset/witness.hpp"

namespace upset {

using Json = nlohmann::ordered_json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_unknown = 2;
inline constexpr int exit_usage = 64;

namespace cli_detail {

inline std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline Json manifest(const std::string& subcommand, Json config,
                     std::optional<std::uint64_t> master_seed = {}) {
  Json m;
  m["subcommand"] = subcommand;
  m["version"] = std::string(version);
  if (master_seed) m["master_seed"] = *master_seed;
  m["config"] = std::move(config);
  m["timestamp"] = utc_timestamp();
  return m;
}

inline Json placement_json(const std::vector<Point>& placement) {
  Json arr = Json::array();
  for (std::size_t v = 0; v < placement.size(); ++v)
    arr.push_back({v, placement[v].x, placement[v].y});
  return arr;
}

inline std::vector<Point> parse_placement_file(const std::string& path,
                                               int expected_n) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::IoError, "cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    raise(ErrorCode::FormatError, path + ": " + e.what());
  }
  if (!doc.contains("placement") || !doc["placement"].is_array())
    raise(ErrorCode::FormatError, path + ": missing placement array");
  std::vector<Point> placement(expected_n, Point{0, 0});
  std::vector<char> seen(expected_n, 0);
  for (const Json& item : doc["placement"]) {
    if (!item.is_array() || item.size() != 3)
      raise(ErrorCode::FormatError, path + ": placement rows are [v, x, y]");
    const int v = item[0].get<int>();
    if (v < 0 || v >= expected_n || seen[v])
      raise(ErrorCode::FormatError,
            path + ": bad or repeated vertex " + std::to_string(v));
    seen[v] = 1;
    placement[v] = Point{item[1].get<Coord>(), item[2].get<Coord>()};
  }
  for (int v = 0; v < expected_n; ++v)
    if (!seen[v])
      raise(ErrorCode::FormatError,
            path + ": vertex " + std::to_string(v) + " has no position");
  return placement;
}

inline double real_log10(const Real& value) {
  return boost::multiprecision::log10(value).convert_to<double>();
}

inline Json real_json(const Real& value) {
  const double d = value.convert_to<double>();
  if (std::isfinite(d)) return d;
  return nullptr;
}

inline GadgetGraph require_gadget(const LoadedGraph& loaded,
                                  const std::string& origin) {
  if (!loaded.gadget_k)
    raise(ErrorCode::InvalidArgument,
          origin + " carries no `# gadget k=` marker; this command needs a "
                   "gadget graph file");
  return gadget_from_graph(loaded.graph, *loaded.gadget_k);
}

inline int resolve_workers(int flag_value) {
  if (const char* env = std::getenv("UPSET_WORKERS")) {
    try {
      const int parsed = std::stoi(env);
      if (parsed >= 1) return parsed;
    } catch (const std::exception&) {
    }
  }
  return flag_value;
}

inline Json mc_report_json(const McReport& r, int workers) {
  Json config;
  config["m"] = r.config.m;
  config["ell"] = r.config.ell;
  config["trials"] = r.config.trials;
  config["seed"] = r.config.master_seed;
  config["mode"] = std::string(to_string(r.config.mode));
  config["workers"] = workers;

  Json out;
  out["config"] = config;
  out["hits"] = r.hits;
  out["trials"] = r.trials;
  out["empirical_p"] = r.empirical_p;
  out["wilson95"] = {r.wilson95.lo, r.wilson95.hi};
  Json bounds;
  bounds["union"] = r.union_bound_value;
  bounds["claim3"] = r.claim3_bound ? Json(*r.claim3_bound) : Json(nullptr);
  bounds["tail"] = r.tail ? Json(*r.tail) : Json(nullptr);
  out["bounds"] = bounds;
  out["vacuous"] = r.vacuous;
  out["certificate_rate"] =
      r.certificate_rate ? Json(*r.certificate_rate) : Json(nullptr);
  if (r.n) out["n"] = *r.n;
  return out;
}

inline std::string csv_field(const std::optional<double>& value) {
  if (!value) return "";
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10)
     << *value;
  return os.str();
}

inline void mc_report_csv(std::ostream& out, const McReport& r, int workers) {
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  out << "m,ell,trials,seed,mode,workers,hits,empirical_p,wilson_lo,"
         "wilson_hi,union,claim3,tail,vacuous,certificate_rate,n\n";
  out << r.config.m << ',' << r.config.ell << ',' << r.trials << ','
      << r.config.master_seed << ',' << to_string(r.config.mode) << ','
      << workers << ',' << r.hits << ',' << r.empirical_p << ','
      << r.wilson95.lo << ',' << r.wilson95.hi << ',' << r.union_bound_value
      << ',' << csv_field(r.claim3_bound) << ',' << csv_field(r.tail) << ','
      << (r.vacuous ? 1 : 0) << ',' << csv_field(r.certificate_rate) << ',';
  if (r.n) out << *r.n;
  out << '\n';
}

}  // namespace cli_detail

// Entry point shared by the binary and the in-process CLI tests. Streams take
// the place of stdout/stderr.
inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"universal point set toolkit"};
  app.require_subcommand(1);

  // gadget
  int gadget_n = 0;
  std::string gadget_out;
  auto* cmd_gadget =
      app.add_subcommand("gadget", "build the stacked-triangle gadget graph");
  cmd_gadget->add_option("--n", gadget_n, "vertex count (multiple of 12)")
      ->required();
  cmd_gadget->add_option("-o,--output", gadget_out, "edge list output file");

  // grid-embed
  std::string ge_graph, ge_points_out;
  auto* cmd_grid = app.add_subcommand(
      "grid-embed", "draw a maximal planar graph on the (2n-4) x (n-2) grid");
  cmd_grid->add_option("--graph", ge_graph, "edge list input")->required();
  cmd_grid->add_option("-o,--output", ge_points_out, "point CSV output file");

  // embed-check
  std::string ec_graph, ec_points;
  std::uint64_t ec_budget = default_embed_budget;
  auto* cmd_check = app.add_subcommand(
      "embed-check", "decide embeddability of a graph into a point set");
  cmd_check->add_option("--graph", ec_graph, "edge list input")->required();
  cmd_check->add_option("--points", ec_points, "point CSV input")->required();
  cmd_check->add_option("--budget", ec_budget, "node expansion budget");

  // witness
  std::string wi_graph, wi_points, wi_placement;
  auto* cmd_witness = app.add_subcommand(
      "witness", "extract a monotone witness from a gadget drawing");
  cmd_witness->add_option("--graph", wi_graph, "gadget edge list")->required();
  cmd_witness->add_option("--points", wi_points, "point CSV input")
      ->required();
  cmd_witness->add_option("--placement", wi_placement, "placement JSON")
      ->required();

  // certify
  std::string ce_points;
  int ce_n = 0;
  auto* cmd_certify = app.add_subcommand(
      "certify", "test a point set for a non-universality certificate");
  cmd_certify->add_option("--points", ce_points, "point CSV input")
      ->required();
  cmd_certify->add_option("--n", ce_n, "universality parameter")->required();

  // lis
  std::string lis_perm;
  auto* cmd_lis = app.add_subcommand(
      "lis", "longest monotone subsequences of a permutation");
  cmd_lis->add_option("--perm", lis_perm, "comma-separated permutation")
      ->required();

  // bound
  int bound_n = 0;
  auto* cmd_bound =
      app.add_subcommand("bound", "threshold point count and tail bound");
  cmd_bound->add_option("--n", bound_n, "universality parameter")->required();

  // chain
  std::int64_t chain_m = 0;
  int chain_ell = 0;
  auto* cmd_chain = app.add_subcommand(
      "chain", "evaluate the union bound inequality chain");
  cmd_chain->add_option("--m", chain_m, "point count")->required();
  cmd_chain->add_option("--ell", chain_ell, "monotone threshold")->required();

  // mc
  int mc_m = 0, mc_ell = 0, mc_workers = 1;
  std::uint64_t mc_trials = 0, mc_seed = 0;
  std::string mc_mode = "points";
  bool mc_csv = false, mc_json = false;
  auto* cmd_mc =
      app.add_subcommand("mc", "Monte Carlo monotone subsequence trials");
  cmd_mc->add_option("--m", mc_m, "points per trial")->required();
  cmd_mc->add_option("--ell", mc_ell, "monotone threshold")->required();
  cmd_mc->add_option("--trials", mc_trials, "trial count")->required();
  cmd_mc->add_option("--seed", mc_seed, "master seed")->required();
  cmd_mc->add_option("--mode", mc_mode, "points|perm")
      ->check(CLI::IsMember({"points", "perm"}));
  cmd_mc->add_option("--workers", mc_workers, "worker threads");
  cmd_mc->add_flag("--csv", mc_csv, "CSV output");
  cmd_mc->add_flag("--json", mc_json, "JSON output (default)");

  // thm1
  int t1_n = 0, t1_workers = 1;
  std::uint64_t t1_trials = 0, t1_seed = 0;
  std::int64_t t1_m = -1;
  bool t1_csv = false, t1_json = false;
  auto* cmd_thm1 = app.add_subcommand(
      "thm1", "sample the theorem's regime at a given n");
  cmd_thm1->add_option("--n", t1_n, "universality parameter")->required();
  cmd_thm1->add_option("--trials", t1_trials, "trial count")->required();
  cmd_thm1->add_option("--seed", t1_seed, "master seed")->required();
  cmd_thm1->add_option("--m", t1_m, "override the point count");
  cmd_thm1->add_option("--workers", t1_workers, "worker threads");
  cmd_thm1->add_flag("--csv", t1_csv, "CSV output");
  cmd_thm1->add_flag("--json", t1_json, "JSON output (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return exit_usage;
  }

  try {
    if (cmd_gadget->parsed()) {
      const GadgetGraph gadget = build_gadget(gadget_n);
      if (gadget_out.empty()) {
        write_edge_list(out, gadget);
        return exit_ok;
      }
      write_edge_list_file(gadget_out, gadget);
      Json result;
      result["manifest"] = cli_detail::manifest(
          "gadget", Json{{"n", gadget_n}, {"output", gadget_out}});
      result["n"] = gadget.graph.n();
      result["k"] = gadget.k;
      result["edges"] = gadget.graph.m();
      result["output"] = gadget_out;
      out << result.dump(2) << '\n';
      return exit_ok;
    }

    if (cmd_grid->parsed()) {
      const LoadedGraph loaded = read_edge_list_file(ge_graph);
      const PlanarGraph* graph = &loaded.graph;
      std::optional<GadgetGraph> gadget;
      if (loaded.gadget_k) {
        gadget = gadget_from_graph(loaded.graph, *loaded.gadget_k);
        graph = &gadget->graph;
      }
      const StraightLineEmbedding drawing = grid_embed(*graph);
      if (!ge_points_out.empty()) {
        PointSet set;
        set.lattice_bits = 0;
        set.points = drawing.placement;
        write_point_csv(ge_points_out, set);
      }
      Json result;
      result["manifest"] = cli_detail::manifest(
          "grid-embed",
          Json{{"graph", ge_graph}, {"output", ge_points_out}});
      result["n"] = graph->n();
      result["grid"] = {{"width", 2 * graph->n() - 4},
                        {"height", graph->n() - 2}};
      if (!ge_points_out.empty()) result["points_file"] = ge_points_out;
      result["placement"] = cli_detail::placement_json(drawing.placement);
      out << result.dump(2) << '\n';
      return exit_ok;
    }

    if (cmd_check->parsed()) {
      const LoadedGraph loaded = read_edge_list_file(ec_graph);
      const PointSet points = read_point_csv(ec_points);
      const EmbedSearchResult search =
          embeddable(loaded.graph, points, ec_budget);
      Json result;
      result["manifest"] = cli_detail::manifest(
          "embed-check", Json{{"graph", ec_graph},
                              {"points", ec_points},
                              {"budget", ec_budget}});
      result["result"] = search.outcome == EmbedOutcome::FOUND ? "yes"
                         : search.outcome == EmbedOutcome::IMPOSSIBLE
                             ? "no"
                             : "unknown";
      result["nodes_expanded"] = search.nodes_expanded;
      if (search.embedding)
        result["placement"] =
            cli_detail::placement_json(search.embedding->placement);
      out << result.dump(2) << '\n';
      return search.outcome == EmbedOutcome::BUDGET_EXCEEDED ? exit_unknown
                                                             : exit_ok;
    }

    if (cmd_witness->parsed()) {
      const LoadedGraph loaded = read_edge_list_file(wi_graph);
      const GadgetGraph gadget = cli_detail::require_gadget(loaded, wi_graph);
      const PointSet points = read_point_csv(wi_points);
      const std::vector<Point> placement =
          cli_detail::parse_placement_file(wi_placement, gadget.graph.n());
      const std::set<Point> universe(points.points.begin(),
                                     points.points.end());
      for (const Point& p : placement)
        if (!universe.count(p))
          raise(ErrorCode::InvalidArgument,
                "placement uses a point that is not in the point set");
      const StraightLineEmbedding e{gadget.graph, placement};
      const MonotoneWitness witness = monotone_witness(gadget, e);
      Json result;
      result["manifest"] = cli_detail::manifest(
          "witness", Json{{"graph", wi_graph},
                          {"points", wi_points},
                          {"placement", wi_placement}});
      result["direction"] = std::string(to_string(witness.direction));
      result["size"] = witness.points.size();
      result["ell"] = monotone_threshold(gadget.graph.n());
      Json pts = Json::array();
      for (const Point& p : witness.points) pts.push_back({p.x, p.y});
      result["points"] = pts;
      Json prov = Json::array();
      for (const WitnessProvenance& wp : witness.provenance)
        prov.push_back({{"index", wp.nested_index},
                        {"cycle", wp.cycle},
                        {"role", std::string(to_string(wp.role))}});
      result["provenance"] = prov;
      out << result.dump(2) << '\n';
      return exit_ok;
    }

    if (cmd_certify->parsed()) {
      const PointSet points = read_point_csv(ce_points);
      const auto certificate = certify_nonuniversal(points, ce_n);
      const Permutation pi = perm_of(points);
      Json result;
      result["manifest"] = cli_detail::manifest(
          "certify", Json{{"points", ce_points}, {"n", ce_n}});
      result["certified"] = certificate.has_value();
      result["lis"] = lis(pi);
      result["lds"] = lds(pi);
      result["ell"] = monotone_threshold(ce_n);
      result["m"] = points.size();
      out << result.dump(2) << '\n';
      return exit_ok;
    }

    if (cmd_lis->parsed()) {
      std::vector<int> values;
      std::istringstream stream(lis_perm);
      std::string token;
      while (std::getline(stream, token, ',')) {
        try {
          values.push_back(std::stoi(token));
        } catch (const std::exception&) {
          raise(ErrorCode::FormatError, "bad permutation entry: " + token);
        }
      }
      const Permutation p(std::move(values));
      Json result;
      result["manifest"] =
          cli_detail::manifest("lis", Json{{"perm", lis_perm}});
      result["m"] = p.size();
      result["lis"] = lis(p);
      result["lds"] = lds(p);
      result["max_monotone"] = max_monotone(p);
      out << result.dump(2) << '\n';
      return exit_ok;
    }

    if (cmd_bound->parsed()) {
      const TheoremThreshold t = theorem_threshold(bound_n);
      Json result;
      result["manifest"] =
          cli_detail::manifest("bound", Json{{"n", bound_n}});
      result["n"] = t.n;
      result["m_max"] = t.m_max;
      result["tail"] = t.tail;
      result["tail_log10"] = t.tail_log10;
      result["boundary_flag"] = t.boundary_flag;
      if (t.boundary_flag) {
        result["m_max_low"] = t.m_max_low;
        result["m_max_high"] = t.m_max_high;
      }
      out << result.dump(2) << '\n';
      return exit_ok;
    }

    if (cmd_chain->parsed()) {
      const StirlingChain chain = stirling_chain(chain_m, chain_ell);
      Json result;
      result["manifest"] = cli_detail::manifest(
          "chain", Json{{"m", chain_m}, {"ell", chain_ell}});
      result["m"] = chain.m;
      result["ell"] = chain.ell;
      Json steps = Json::array();
      for (const ChainStep& step : chain.steps) {
        Json s;
        s["label"] = step.label;
        s["value"] = cli_detail::real_json(step.value);
        s["log10"] = step.value > 0
                         ? Json(cli_detail::real_log10(step.value))
                         : Json(nullptr);
        steps.push_back(s);
      }
      result["steps"] = steps;
      result["ell_threshold"] = chain.ell_threshold.convert_to<double>();
      result["precondition_met"] = chain.precondition_met;
      result["monotone"] = chain.monotone;
      result["claim_bound"] = cli_detail::real_json(chain.claim_bound);
      result["claim_bound_log10"] = cli_detail::real_log10(chain.claim_bound);
      result["lifted_tail"] = cli_detail::real_json(chain.lifted_tail);
      out << result.dump(2) << '\n';
      return exit_ok;
    }

    if (cmd_mc->parsed()) {
      const int workers = cli_detail::resolve_workers(mc_workers);
      TrialConfig cfg;
      cfg.m = mc_m;
      cfg.ell = mc_ell;
      cfg.trials = mc_trials;
      cfg.master_seed = mc_seed;
      cfg.mode =
          mc_mode == "points" ? SampleMode::POINTS : SampleMode::PERMUTATION;
      const McReport report = run_trials(cfg, workers);
      if (mc_csv && !mc_json) {
        cli_detail::mc_report_csv(out, report, workers);
        return exit_ok;
      }
      Json result;
      result["manifest"] = cli_detail::manifest(
          "mc",
          Json{{"m", mc_m},
               {"ell", mc_ell},
               {"trials", mc_trials},
               {"mode", mc_mode},
               {"workers", workers}},
          mc_seed);
      result.update(cli_detail::mc_report_json(report, workers));
      out << result.dump(2) << '\n';
      return exit_ok;
    }

    if (cmd_thm1->parsed()) {
      const int workers = cli_detail::resolve_workers(t1_workers);
      const std::optional<std::int64_t> override_m =
          t1_m >= 0 ? std::optional<std::int64_t>(t1_m) : std::nullopt;
      const McReport report =
          theorem1_experiment(t1_n, t1_trials, t1_seed, workers, override_m);
      if (t1_csv && !t1_json) {
        cli_detail::mc_report_csv(out, report, workers);
        return exit_ok;
      }
      Json result;
      result["manifest"] = cli_detail::manifest(
          "thm1",
          Json{{"n", t1_n},
               {"trials", t1_trials},
               {"m_override", t1_m >= 0 ? Json(t1_m) : Json(nullptr)},
               {"workers", workers}},
          t1_seed);
      result.update(cli_detail::mc_report_json(report, workers));
      out << result.dump(2) << '\n';
      return exit_ok;
    }
  } catch (const Error& e) {
    Json error;
    error["error"] = {{"code", std::string(to_string(e.code()))},
                      {"message", e.what()}};
    out << error.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return exit_error;
  }

  err << app.help();
  return exit_usage;
}

}  // namespace upset
