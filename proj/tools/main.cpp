// rigsep: generate instances, compute separators, spread LPs, duality
// reports, spectra and exact oracles.  Every command writes JSON (CSV for
// `scale`) to --out or stdout and is deterministic for a fixed --seed.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rigsep/errors.hpp"
#include "rigsep/experiment.hpp"
#include "rigsep/flow/spread_lp.hpp"
#include "rigsep/generators.hpp"
#include "rigsep/io.hpp"
#include "rigsep/oracles.hpp"
#include "rigsep/partition/balanced.hpp"
#include "rigsep/partition/random_separator.hpp"
#include "rigsep/random.hpp"
#include "rigsep/spectral.hpp"

using json = nlohmann::json;
using namespace rigsep;

namespace {

struct Source {
  std::string graph_path;
  std::string kind;
  int size = -1;
  double edge_prob = 0.3;
};

struct Loaded {
  Instance inst;
  std::vector<double> weights;  // from the graph file; empty when absent
};

Loaded load(const Source& src, std::uint64_t seed) {
  Loaded l;
  if (!src.graph_path.empty()) {
    l.inst.kind = "file";
    l.inst.seed = seed;
    l.inst.graph = graph_from_json(read_text_file(src.graph_path), &l.weights);
    l.inst.size = l.inst.graph.n();
    return l;
  }
  if (src.kind.empty()) throw InputError("give either --graph FILE or --kind with --size");
  if (src.size < 0) throw InputError("--kind needs --size");
  l.inst = generate(src.kind, src.size, seed, src.edge_prob);
  return l;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty())
    std::cout << text << '\n';
  else
    write_text_file(out, text + "\n");
}

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("--graph", src.graph_path, "Graph JSON file {\"n\",\"edges\"[,\"weights\"]}");
  cmd->add_option("--kind", src.kind, "Generate the input: random-segments, grid, planar-triangulation, clique-rig, gnp");
  cmd->add_option("--size", src.size, "Generator size");
  cmd->add_option("--edge-prob", src.edge_prob, "Edge probability for gnp");
}

// "inf" or an integer exponent.
int parse_norm(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "0") return kInfNorm;
  if (s == "1") return 1;
  if (s == "2") return 2;
  throw InputError("norm must be 1, 2 or inf, got '" + s + "'");
}

json optional_number(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

Congestion parse_congestion(const std::string& s) {
  if (s == "incidence") return Congestion::EdgeIncidence;
  if (s == "visit") return Congestion::VertexVisit;
  throw InputError("congestion must be 'incidence' or 'visit'");
}

void check_separation(const Graph& g, const VertexSet& s, const std::vector<VertexSet>& comps) {
  const auto expect = connected_components(g, set_difference(all_vertices(g.n()), s));
  if (expect != comps) throw InvariantViolation("separator components do not match G minus S");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced separators in region intersection graphs"};
  app.footer("Environment: RIGSEP_WORKERS sets the number of worker threads.");
  app.set_help_flag("--help", "Print this help message and exit");  // -h is not reserved: --h is a parameter
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string out;
  std::string method = "spectral";
  double delta = 0.0;
  int h = 5;
  std::string lp_p = "1", dual_p = "inf";
  Source src;

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--kind", src.kind, "random-segments, grid, planar-triangulation, clique-rig, gnp")->required();
  gen->add_option("--size", src.size, "Instance size")->required();
  gen->add_option("--edge-prob", src.edge_prob, "Edge probability for gnp");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--out", out, "Output prefix: writes PREFIX.graph.json (+ .polylines.json, .regions.json)");

  auto* sep = app.add_subcommand("sep", "Compute a 2/3-balanced separator or one random-separator sample");
  add_source(sep, src);
  sep->add_option("--method", method, "lp-round, spectral, chop or random-separator");
  sep->add_option("--h", h, "Minor-exclusion parameter h");
  sep->add_option("--delta", delta, "Scale for random-separator");
  sep->add_option("--seed", seed, "Random seed");
  sep->add_option("--out", out, "Separator JSON output");
  std::string record_path;
  sep->add_option("--record", record_path, "Also write the experiment record (with wall time) as JSON");

  auto* lp = app.add_subcommand("lp", "Solve the extremal spread LP or the congestion LP");
  add_source(lp, src);
  lp->add_option("--p", lp_p, "Norm exponent: 1 or 2 for spread, 1, 2 or inf for vcong");
  std::string lp_what = "spread", congestion = "incidence";
  lp->add_option("--what", lp_what, "spread or vcong");
  lp->add_option("--congestion", congestion, "incidence or visit (vcong only)");
  SpreadLPOptions lp_opt;
  lp->add_option("--exact-limit", lp_opt.exact_limit, "Largest n solved exactly for p = 1");
  lp->add_option("--seed", seed, "Seed for generated inputs");
  lp->add_option("--out", out, "Output JSON");

  auto* dual = app.add_subcommand("duality", "Compare vcong_p with n^(2-1/q) cspread_q");
  add_source(dual, src);
  dual->add_option("--p", dual_p, "inf, 2 or 1 (q is the dual exponent)");
  double tol = 1e-4;
  dual->add_option("--tol", tol, "Relative tolerance");
  dual->add_option("--seed", seed, "Seed for generated inputs");
  dual->add_option("--out", out, "Output JSON");

  auto* spec = app.add_subcommand("spectrum", "Laplacian eigenvalues, spectral bisection, spreading constant");
  add_source(spec, src);
  int k = 0, spreading_r = 0;
  bool bisect = false, sampled = false;
  spec->add_option("--k", k, "Number of smallest eigenvalues (default all)");
  spec->add_flag("--bisect", bisect, "Output the spectral bisection separator instead");
  spec->add_option("--spreading", spreading_r, "Output the (r, eps)-spreading constant for this r with unit weights");
  spec->add_flag("--sampled", sampled, "Sample subsets for --spreading");
  spec->add_option("--seed", seed, "Random seed");
  spec->add_option("--out", out, "Output JSON");

  auto* scale = app.add_subcommand("scale", "Separator size scaling study with a log-log fit");
  std::string kind = "random-segments";
  std::vector<int> sizes;
  int trials = 5;
  bool with_time = false;
  std::string csv_path;
  scale->add_option("--kind", kind, "Generator");
  scale->add_option("--sizes", sizes, "Ascending sizes")->delimiter(',')->required();
  scale->add_option("--trials", trials, "Trials per size");
  scale->add_option("--method", method, "lp-round, spectral or chop");
  scale->add_option("--h", h, "Minor-exclusion parameter h");
  scale->add_option("--seed", seed, "Random seed");
  scale->add_option("--out", csv_path, "CSV output (the fit goes to stdout)");
  scale->add_flag("--with-time", with_time, "Add a wall-time column (not reproducible)");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive oracles for small graphs");
  add_source(oracle, src);
  std::string what = "expansion", pattern_path;
  oracle->add_option("--what", what, "expansion, separator, minor, strict-minor, careful-minor or cspread");
  oracle->add_option("--pattern", pattern_path, "Pattern graph H for the minor oracles");
  oracle->add_option("--seed", seed, "Seed for generated inputs");
  oracle->add_option("--out", out, "Output JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const Instance inst = generate(src.kind, src.size, seed, src.edge_prob);
      if (out.empty()) {
        emit("", graph_to_json(inst.graph));
      } else {
        write_text_file(out + ".graph.json", graph_to_json(inst.graph) + "\n");
        if (inst.polylines) write_text_file(out + ".polylines.json", polylines_to_json(*inst.polylines) + "\n");
        if (inst.assign) write_text_file(out + ".regions.json", regions_to_json(*inst.assign) + "\n");
      }
      std::cerr << "n=" << inst.graph.n() << " m=" << inst.graph.m() << '\n';
    } else if (sep->parsed()) {
      const Loaded l = load(src, seed);
      const Graph& g = l.inst.graph;
      SeparatorRecord rec;
      rec.seed = seed;
      rec.params["n"] = g.n();
      rec.params["m"] = static_cast<double>(g.m());
      rec.params["h"] = h;
      if (method == "random-separator") {
        if (!(delta > 0.0)) throw InputError("random-separator needs --delta > 0");
        const ConformalWeight w = l.weights.empty() ? ConformalWeight::constant(g.n()) : ConformalWeight(l.weights);
        const auto s = random_separator(g, w, delta, h, seed);
        check_separation(g, s.S, s.components);
        if (!s.within_bound) throw InvariantViolation("random-separator: component diameter exceeds its bound");
        rec.S = s.S;
        rec.components = s.components;
        rec.params["delta"] = delta;
        rec.params["diameter_bound"] = s.diameter_bound;
        rec.params["diameter_certificate"] = s.diameter_certificate;
        rec.params["alpha_raw"] = s.alpha_raw;
        rec.params["spaced_node"] = s.spaced_node ? 1.0 : 0.0;
        rec.labels["method"] = method;
        emit(out, separator_to_json(rec));
      } else {
        BalancedOptions opt;
        opt.seed = seed;
        opt.h = h;
        BalancedSeparatorResult res;
        const ExperimentRecord er = separate(l.inst, parse_strategy(method), opt, &res);
        check_separation(g, res.S, res.components);
        rec.S = res.S;
        rec.components = res.components;
        rec.params["separator_size"] = static_cast<double>(er.separator_size);
        rec.params["balance"] = er.balance;
        if (er.lp_value) rec.params["lp_value"] = *er.lp_value;
        rec.labels["method"] = er.method;
        rec.labels["generator"] = er.generator;
        emit(out, separator_to_json(rec));
        if (!record_path.empty()) {
          json r{{"generator", er.generator}, {"size", er.size},         {"seed", er.seed},
                 {"method", er.method},       {"n", er.n},               {"m", er.m},
                 {"separator_size", er.separator_size}, {"balance", er.balance},
                 {"wall_seconds", er.wall_seconds},     {"lp_value", optional_number(er.lp_value)},
                 {"params", er.params}};
          write_text_file(record_path, r.dump() + "\n");
        }
      }
    } else if (lp->parsed()) {
      const Loaded l = load(src, seed);
      const int p = parse_norm(lp_p);
      if (lp_what == "spread") {
        if (p == kInfNorm) throw InputError("spread LP supports p = 1 or 2");
        emit(out, spread_to_json(cspread_lp(l.inst.graph, p, lp_opt), p));
      } else if (lp_what == "vcong") {
        const VcongResult r = vcong_lp(l.inst.graph, p, parse_congestion(congestion));
        json j{{"p", p == kInfNorm ? "inf" : std::to_string(p)},
               {"congestion", congestion},
               {"value", r.value},
               {"lower_bound", r.lower_bound},
               {"congestion_map", r.congestion},
               {"flow", json::parse(flow_to_json(r.flow))}};
        emit(out, j.dump());
      } else {
        throw InputError("--what must be spread or vcong");
      }
    } else if (dual->parsed()) {
      const Loaded l = load(src, seed);
      const int p = parse_norm(dual_p);
      const int q = p == kInfNorm ? 1 : (p == 1 ? kInfNorm : 2);
      const DualityReport r = check_duality(l.inst.graph, p, q, tol);
      emit(out, duality_to_json(r));
      if (!r.holds) return 3;
    } else if (spec->parsed()) {
      const Loaded l = load(src, seed);
      const Graph& g = l.inst.graph;
      if (bisect) {
        const BisectionResult b = spectral_bisection(g);
        SeparatorRecord rec;
        rec.S = b.separator;
        rec.components = connected_components(g, set_difference(all_vertices(g.n()), b.separator));
        rec.params["cut_edges"] = static_cast<double>(b.cut_edges);
        rec.params["ratio"] = b.ratio;
        rec.labels["method"] = "spectral-bisection";
        rec.seed = seed;
        emit(out, separator_to_json(rec));
      } else if (spreading_r > 0) {
        const auto r = spreading_constant(g, ConformalWeight::constant(g.n()), spreading_r,
                                          sampled ? SpreadingMode::Sampled : SpreadingMode::Exact, seed);
        emit(out, json{{"r", spreading_r}, {"epsilon", r.epsilon}, {"minimizer", r.minimizer},
                       {"subsets", r.subsets}, {"exact", r.exact}}
                      .dump());
      } else {
        emit(out, spectrum_to_json(laplacian_spectrum(g, k > 0 ? k : g.n())));
      }
    } else if (scale->parsed()) {
      BalancedOptions opt;
      opt.h = h;
      const ScalingStudy st = scaling_study(kind, sizes, trials, seed, parse_strategy(method), opt);
      const std::string csv = scaling_csv(st, with_time);
      if (!csv_path.empty()) write_text_file(csv_path, csv);
      json fit{{"exponent_vs_m", optional_number(st.fit_vs_m.exponent)},
               {"r_squared_vs_m", st.fit_vs_m.r_squared},
               {"exponent_vs_n", optional_number(st.fit_vs_n.exponent)},
               {"r_squared_vs_n", st.fit_vs_n.r_squared}};
      if (csv_path.empty()) std::cout << csv;
      std::cout << fit.dump() << '\n';
    } else if (oracle->parsed()) {
      const Loaded l = load(src, seed);
      const Graph& g = l.inst.graph;
      json j{{"what", what}};
      if (what == "expansion") {
        const auto r = vertex_expansion_exact(g, l.weights);
        j["phi"] = r.phi;
        j["U"] = r.U;
        j["boundary"] = r.boundary;
      } else if (what == "separator") {
        const auto r = min_balanced_separator_exact(g, l.weights);
        j["size"] = r.size;
        j["S"] = r.S;
      } else if (what == "minor" || what == "strict-minor" || what == "careful-minor") {
        if (pattern_path.empty()) throw InputError("--pattern is required for minor oracles");
        const Graph hg = graph_from_json(read_text_file(pattern_path));
        const auto w = what == "minor"          ? has_minor_exact(g, hg)
                       : what == "strict-minor" ? has_strict_minor_exact(g, hg)
                                                : has_careful_minor_exact(g, hg);
        j["present"] = w.has_value();
        if (w) j["supernodes"] = w->supernodes;
      } else if (what == "cspread") {
        j["cspread1"] = cspread_exact_small(g);
      } else {
        throw InputError("unknown oracle '" + what + "'");
      }
      emit(out, j.dump());
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return 4;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
