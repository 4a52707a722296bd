#include "cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "unicomm/antipodal.hpp"
#include "unicomm/chain.hpp"
#include "unicomm/decomposition.hpp"
#include "unicomm/error.hpp"
#include "unicomm/function_models.hpp"
#include "unicomm/json_io.hpp"
#include "unicomm/linalg.hpp"
#include "unicomm/norm_field.hpp"
#include "unicomm/probe.hpp"
#include "unicomm/random.hpp"
#include "unicomm/star_polynomial.hpp"
#include "unicomm/variational.hpp"

namespace unicomm::cli {

namespace {

using nlohmann::json;
using io::to_json;

// Unreadable or malformed input; maps to kExitIo.
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::vector<std::string> inputs;
  std::string output;
  std::uint64_t seed = 0;
  int threads = 1;
  double tol_unitarity = Tolerances{}.unitarity;
  double tol_zero = Tolerances{}.zero;

  Tolerances tolerances() const {
    Tolerances t;
    t.unitarity = tol_unitarity;
    t.zero = tol_zero;
    t.validate();
    return t;
  }
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open input '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, "malformed JSON in '" + path + "': " + e.what());
  }
}

UnitaryPair load_pair(const Globals& g, const Tolerances& tol) {
  if (g.inputs.size() == 1) {
    const json doc = read_json_file(g.inputs[0]);
    // A report carrying result.pair, as voiculescu writes, is accepted as input.
    if (doc.is_object() && doc.contains("result") && doc["result"].is_object() && doc["result"].contains("pair")) {
      return io::pair_from_json(doc["result"]["pair"], tol);
    }
    return io::pair_from_json(doc, tol);
  }
  if (g.inputs.size() == 2) {
    return UnitaryPair(io::unitary_from_json(read_json_file(g.inputs[0]), tol),
                       io::unitary_from_json(read_json_file(g.inputs[1]), tol));
  }
  throw IoFailure("expected one pair file or two matrix files via --input");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoFailure("cannot write '" + path + "'");
}

std::string format_double(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

json vec_json(const std::vector<double>& v) { return json(v); }

json chain_json(const UnitaryChain& c) {
  json out = json::array();
  for (const auto& m : c.matrices()) out.push_back(to_json(m));
  return out;
}

// ---- subcommands ---------------------------------------------------------

struct SmoothArgs {
  std::optional<double> eps, delta;
  std::optional<int> window;
  std::string csv;
};

json smooth_cmd(const Globals& g, const SmoothArgs& a, json& cfg) {
  const Tolerances tol = g.tolerances();
  if (g.inputs.size() != 1) throw IoFailure("smooth-chain reads exactly one input file");
  const json in = read_json_file(g.inputs[0]);
  if (!in.is_object() || !in.contains("chain") || !in.at("chain").is_array()) {
    fail(ErrorCode::ParseError, "smooth-chain input needs a 'chain' array of matrices");
  }
  std::vector<UnitaryMatrix> mats;
  for (const auto& m : in.at("chain")) mats.push_back(io::unitary_from_json(m, tol));
  auto number = [&](const std::optional<double>& flag, const char* key) {
    if (flag) return *flag;
    if (!in.contains(key) || !in.at(key).is_number()) {
      fail(ErrorCode::ParseError, std::string("missing '") + key + "' (file field or flag)");
    }
    return in.at(key).get<double>();
  };
  const double eps = number(a.eps, "eps");
  const double delta = number(a.delta, "delta");
  cfg["eps"] = eps;
  cfg["delta"] = delta;
  cfg["window"] = a.window ? json(*a.window) : json(nullptr);

  const UnitaryChain chain(std::move(mats), eps, tol);
  const SmoothingResult r = a.window ? windowed_smooth(chain, *a.window, delta, tol) : smooth_chain(chain, delta, tol);

  if (!a.csv.empty()) {
    std::ostringstream csv;
    csv << "k,gap_before,gap_after,displacement\n";
    for (std::size_t k = 0; k < r.displacement.size(); ++k) {
      csv << k << ',' << (k == 0 ? "" : format_double(r.gaps_before[k - 1])) << ','
          << (k == 0 ? "" : format_double(r.gaps_after[k - 1])) << ',' << format_double(r.displacement[k]) << '\n';
    }
    write_text(a.csv, csv.str());
  }
  return json{{"chain", chain_json(r.chain)},
              {"schedule",
               {{"theta", r.schedule.theta}, {"m", r.schedule.m}, {"sigma", r.schedule.sigma}, {"t", r.schedule.t}}},
              {"gaps_before", vec_json(r.gaps_before)},
              {"gaps_after", vec_json(r.gaps_after)},
              {"displacement", vec_json(r.displacement)},
              {"margin", r.margin},
              {"max_displacement", r.max_displacement}};
}

json perturb_cmd(const Globals& g, double delta, int grid, json& cfg) {
  const Tolerances tol = g.tolerances();
  cfg["delta"] = delta;
  cfg["grid"] = grid;
  const UnitaryPair p = load_pair(g, tol);
  const PerturbationResult r = perturb_off_max(p, delta, grid, tol);
  return json{{"u_prime", to_json(r.u_prime)},
              {"t_star", r.t_star},
              {"new_commutator", r.new_commutator},
              {"commutator_margin", 2.0 - r.new_commutator},
              {"displacement", r.displacement},
              {"displacement_margin", delta - r.displacement},
              {"f_value", to_json(r.f_value)},
              {"f_at_one", to_json(r.f_at_one)},
              {"threshold", r.threshold},
              {"grid_index", r.grid_index},
              {"t_max", r.t_max},
              {"continuity_ok", r.continuity_ok}};
}

json certify_cmd(const Globals& g) {
  const Tolerances tol = g.tolerances();
  const LocalMinCertificate c = certify_scalar_min(load_pair(g, tol), tol);
  return json{{"lambda", to_json(c.lambda)},         {"bound", c.bound},
              {"angle_sum", c.angle_sum},            {"det_check", to_json(c.det_check)},
              {"n", c.n},                            {"commutator_norm", c.commutator_norm}};
}

json regularity_cmd(const Globals& g) {
  const Tolerances tol = g.tolerances();
  const RegularityReport r = regularity_report(load_pair(g, tol));
  return json{{"n", r.n},
              {"rank_L", r.rank_L},
              {"commutant_dim", r.commutant_dim},
              {"irreducible", r.irreducible},
              {"rank_threshold", r.rank_threshold},
              {"commutant_threshold", r.commutant_threshold}};
}

json decomposition_json(const PairDecomposition& d) {
  json blocks = json::array();
  for (const auto& b : d.blocks) {
    blocks.push_back(json{{"dim", b.dim()}, {"commutator_norm", b.commutator_norm}, {"pair", to_json(b.pair)}});
  }
  return json{{"blocks", std::move(blocks)},
              {"basis", to_json(d.basis)},
              {"max_commutator", d.max_commutator},
              {"attaining", d.attaining},
              {"reconstruction_error", d.reconstruction_error}};
}

json decompose_cmd(const Globals& g) {
  const Tolerances tol = g.tolerances();
  return decomposition_json(decompose_pair(load_pair(g, tol), g.seed));
}

json check54_cmd(const Globals& g) {
  const Tolerances tol = g.tolerances();
  const AttainingBlockReport r = check_attaining_blocks(load_pair(g, tol), g.seed);
  json verdicts = json::array();
  for (const auto& b : r.blocks) {
    verdicts.push_back(json{{"index", b.index},
                            {"dim", b.dim},
                            {"commutator_norm", b.commutator_norm},
                            {"attaining", b.attaining},
                            {"scalar", b.scalar ? to_json(*b.scalar) : json(nullptr)}});
  }
  return json{{"holds", r.holds}, {"blocks", std::move(verdicts)}, {"decomposition", decomposition_json(r.decomposition)}};
}

json voiculescu_cmd(int n, int m, json& cfg) {
  cfg["n"] = n;
  cfg["m"] = m;
  const UnitaryPair p = voiculescu_sum(n, m);
  const auto lambda = scalar_commutator(voiculescu_pair(n));
  return json{{"pair", to_json(p)},
              {"omega", to_json(std::polar(1.0, 2.0 * kPi / n))},
              {"block_gamma_scalar", lambda ? to_json(*lambda) : json(nullptr)},
              {"commutator_norm", commutator_norm(p)},
              {"expected_commutator_norm", 2.0 * std::sin(kPi / n)}};
}

json probe_report_json(const ProbeReport& r) {
  return json{{"family", std::string(to_string(r.family))},
              {"radius", r.radius},
              {"seed", r.seed},
              {"samples", r.samples_run},
              {"baseline", r.baseline},
              {"best_found", r.best_found},
              {"best_index", r.best_index},
              {"decrease_found", r.decrease_found},
              {"best_pair", to_json(r.best_pair)}};
}

struct ProbeArgs {
  double radius = 0.05;
  std::int64_t samples = 10000;
  std::string family = "dense";
  Index split = 0;
};

json probe_cmd(const Globals& g, const ProbeArgs& a, json& cfg) {
  const Tolerances tol = g.tolerances();
  cfg["radius"] = a.radius;
  cfg["samples"] = a.samples;
  cfg["family"] = a.family;
  cfg["split"] = a.split;
  ProbeConfig pc{a.radius, a.samples, g.seed, load_pair(g, tol), probe_family_from_string(a.family), a.split,
                 g.threads};
  return probe_report_json(local_probe(pc));
}

struct ConjectureArgs {
  int n = 3;
  int m = 1;
  std::vector<double> radii{0.05};
  std::int64_t samples = 100000;
};

json conjecture_cmd(const Globals& g, const ConjectureArgs& a, json& cfg) {
  cfg["n"] = a.n;
  cfg["m"] = a.m;
  cfg["radii"] = a.radii;
  cfg["samples"] = a.samples;
  const ConjectureReport r = conjecture_probe(a.n, a.m, a.radii, a.samples, g.seed, g.threads);
  json reports = json::array();
  for (const auto& rep : r.reports) reports.push_back(probe_report_json(rep));
  return json{{"n", r.n},
              {"m", r.m},
              {"baseline", r.baseline},
              {"any_decrease", r.any_decrease},
              {"reports", std::move(reports)}};
}

struct NormFieldArgs {
  std::string poly = "uv - vu";
  Index dim = 2;
  std::vector<double> eps_grid{0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
  int restarts = 4;
  int iters = 400;
  std::string csv;
};

json norm_field_cmd(const Globals& g, const NormFieldArgs& a, json& cfg) {
  const StarPolynomial poly = StarPolynomial::parse(a.poly);
  cfg["poly"] = a.poly;
  cfg["dim"] = a.dim;
  cfg["eps_grid"] = a.eps_grid;
  cfg["restarts"] = a.restarts;
  cfg["iters"] = a.iters;
  NormFieldOptions opts{a.dim, a.eps_grid, a.restarts, a.iters, g.seed, g.threads};
  const NormFieldCurve curve = norm_field_estimate(poly, opts);

  json points = json::array();
  std::ostringstream csv;
  csv << "eps,estimate,certificate_commutator,chain\n";
  for (const auto& pt : curve.points) {
    points.push_back(json{{"eps", pt.eps},
                          {"estimate", pt.estimate},
                          {"certificate_commutator", pt.certificate_commutator},
                          {"chain", pt.chain},
                          {"certificate", to_json(pt.certificate)}});
    csv << format_double(pt.eps) << ',' << format_double(pt.estimate) << ','
        << format_double(pt.certificate_commutator) << ',' << pt.chain << '\n';
  }
  if (!a.csv.empty()) write_text(a.csv, csv.str());
  return json{{"polynomial", poly.to_string()}, {"dim", curve.dim}, {"points", std::move(points)}};
}

struct CircleArgs {
  int n = 3;
  Index D = 3600;
  Index r = 1199;
  Index width = 8;
  double delta = 0.1;
};

json check_json(const ConditionCheck& c) {
  return json{{"k", c.k}, {"lhs", c.lhs}, {"bound", c.bound}, {"pass", c.pass}};
}

json circle_cmd(const CircleArgs& a, json& cfg) {
  cfg["n"] = a.n;
  cfg["D"] = a.D;
  cfg["r"] = a.r;
  cfg["width"] = a.width;
  cfg["delta"] = a.delta;
  const CirclePair pair{CircleGrid(a.D, a.r)};
  const RotationModelReport rep = verify_rotation_model(a.n, a.D, a.r, a.width, a.delta);

  json pair_json{{"u", {{"kind", "diagonal"}, {"entries", "exp(2 pi i d / D)"}}},
                 {"v", {{"kind", "cyclic-shift"}, {"rule", "(v x)[d] = x[(d - r) mod D]"}, {"r", a.r}}}};
  if (a.D <= 64) pair_json["dense"] = to_json(pair.to_dense());

  json xi = json::array();
  for (const CVector& x : rep.xi) {
    json entries = json::array();
    for (Index d = 0; d < x.size(); ++d) {
      if (x(d) != 0.0) entries.push_back(json{d, x(d).real(), x(d).imag()});
    }
    xi.push_back(json{{"nonzero", std::move(entries)}});
  }
  json spectral = json::array(), shift = json::array();
  for (const auto& c : rep.spectral) spectral.push_back(check_json(c));
  for (const auto& c : rep.shift) shift.push_back(check_json(c));
  return json{{"theta", rep.theta},
              {"commutator_norm", pair.commutator_norm()},
              {"d_theta", 2.0 * std::sin(rep.theta / 2.0)},
              {"twisted_residual", pair.twisted_residual()},
              {"pair", std::move(pair_json)},
              {"xi", std::move(xi)},
              {"conditions", {{"commutator", check_json(rep.commutator)}, {"spectral", spectral}, {"shift", shift}}},
              {"all_pass", rep.all_pass}};
}

json banach_cmd(int n, Index grid, json& cfg) {
  cfg["n"] = n;
  cfg["grid"] = grid;
  const BanachDemo d = banach_distance_demo(n, grid);
  return json{{"dist_to_member", d.dist_to_member},
              {"dist_to_intersection", d.dist_to_intersection},
              {"exhibited_value", d.exhibited_value},
              {"feasible", d.feasible},
              {"nodes", d.nodes},
              {"minimizer", d.minimizer}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-dimensional experiments on almost commuting unitary pairs", "unicomm"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("-i,--input", g.inputs, "Input JSON file (repeatable)");
  app.add_option("-o,--output", g.output, "Report path (default: standard output)");
  app.add_option("--seed", g.seed, "Seed for every random draw");
  app.add_option("--threads", g.threads, "Worker cap; never changes the report")->check(CLI::PositiveNumber);
  app.add_option("--tol-unitarity", g.tol_unitarity, "Unitarity tolerance");
  app.add_option("--tol-zero", g.tol_zero, "Zero-test tolerance");

  std::function<json(json&)> action;
  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };

  SmoothArgs smooth;
  {
    auto* s = sub("smooth-chain", "Smooth a unitary chain so every gap is strictly below eps");
    s->add_option("--eps", smooth.eps, "Gap bound (overrides the file field)");
    s->add_option("--delta", smooth.delta, "Displacement bound (overrides the file field)");
    s->add_option("--window", smooth.window, "Smooth only indices -window..window of a chain of odd length");
    s->add_option("--csv", smooth.csv, "Also write k,gap_before,gap_after,displacement");
    s->final_callback([&] { action = [&](json& cfg) { return smooth_cmd(g, smooth, cfg); }; });
  }
  double perturb_delta = 0.1;
  int perturb_grid = 10000;
  {
    auto* s = sub("perturb-max", "Move a pair off commutator norm 2");
    s->add_option("--delta", perturb_delta, "Displacement bound");
    s->add_option("--grid", perturb_grid, "Scan points");
    s->final_callback([&] { action = [&](json& cfg) { return perturb_cmd(g, perturb_delta, perturb_grid, cfg); }; });
  }
  sub("certify-min", "Certify a scalar-commutator pair as a local minimum")->final_callback([&] {
    action = [&](json&) { return certify_cmd(g); };
  });
  sub("regularity", "Rank of the commutator differential and commutant dimension")->final_callback([&] {
    action = [&](json&) { return regularity_cmd(g); };
  });
  sub("decompose", "Split a pair into irreducible blocks")->final_callback([&] {
    action = [&](json&) { return decompose_cmd(g); };
  });
  sub("check-5-4", "Check that some norm-attaining block has a scalar commutator")->final_callback([&] {
    action = [&](json&) { return check54_cmd(g); };
  });
  int voic_n = 3, voic_m = 0;
  {
    auto* s = sub("voiculescu", "Emit the clock and shift pair, optionally padded by an identity block");
    s->add_option("--n", voic_n, "Size of the cyclic block")->required();
    s->add_option("--m", voic_m, "Size of the identity block");
    s->final_callback([&] { action = [&](json& cfg) { return voiculescu_cmd(voic_n, voic_m, cfg); }; });
  }
  ProbeArgs probe;
  {
    auto* s = sub("probe", "Random local search for a smaller commutator norm");
    s->add_option("--radius", probe.radius, "Operator-norm radius of each skew generator");
    s->add_option("--samples", probe.samples, "Number of samples");
    s->add_option("--family", probe.family, "dense | identity-block | coupling");
    s->add_option("--split", probe.split, "Leading block size for structured families");
    s->final_callback([&] { action = [&](json& cfg) { return probe_cmd(g, probe, cfg); }; });
  }
  ConjectureArgs conj;
  {
    auto* s = sub("conjecture", "Probe around the padded clock and shift pair with every family");
    s->add_option("--n", conj.n, "Size of the cyclic block");
    s->add_option("--m", conj.m, "Size of the identity block");
    s->add_option("--radius", conj.radii, "Radii (repeatable)");
    s->add_option("--samples", conj.samples, "Samples per radius and family");
    s->final_callback([&] { action = [&](json& cfg) { return conjecture_cmd(g, conj, cfg); }; });
  }
  NormFieldArgs nf;
  {
    auto* s = sub("norm-field", "Lower bounds for the norm of a polynomial under a commutator constraint");
    s->add_option("--poly", nf.poly, "Polynomial in u, v, U = u*, V = v*");
    s->add_option("--dim", nf.dim, "Matrix size");
    s->add_option("--eps-grid", nf.eps_grid, "Ascending eps values in [0, 2]")->delimiter(',');
    s->add_option("--restarts", nf.restarts, "Independent chains");
    s->add_option("--iters", nf.iters, "Proposals per grid point per chain");
    s->add_option("--csv", nf.csv, "Also write eps,estimate,certificate_commutator,chain");
    s->final_callback([&] { action = [&](json& cfg) { return norm_field_cmd(g, nf, cfg); }; });
  }
  CircleArgs circle;
  {
    auto* s = sub("circle-model", "Rotation pair on a circle grid and its approximation conditions");
    s->add_option("--n", circle.n, "Target cyclic order");
    s->add_option("--D", circle.D, "Grid points");
    s->add_option("--r", circle.r, "Rotation steps");
    s->add_option("--width", circle.width, "Bump width in grid points");
    s->add_option("--delta", circle.delta, "Bound for the vector conditions");
    s->final_callback([&] { action = [&](json& cfg) { return circle_cmd(circle, cfg); }; });
  }
  int banach_n = 1;
  Index banach_grid = 100;
  {
    auto* s = sub("banach-demo", "Distance gap between a decreasing family of subspaces and its intersection");
    s->add_option("--n", banach_n, "Index of the subspace");
    s->add_option("--grid", banach_grid, "Uniform grid intervals");
    s->final_callback([&] { action = [&](json& cfg) { return banach_cmd(banach_n, banach_grid, cfg); }; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "unicomm: " << e.what() << '\n';
    return kExitIo;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  json cfg{{"seed", g.seed},
           {"generator", std::string(Rng::kName)},
           {"inputs", g.inputs},
           {"tolerances", {{"unitarity", g.tol_unitarity}, {"zero", g.tol_zero}, {"angle", Tolerances{}.angle}}}};
  json report{{"command", command}};
  int code = kExitOk;
  try {
    json result = action(cfg);
    report["config"] = cfg;
    report["result"] = std::move(result);
  } catch (const Error& e) {
    code = e.code() == ErrorCode::ParseError ? kExitIo : kExitDomain;
    report["config"] = cfg;
    report["error"] = {{"code", std::string(e.name())}, {"message", e.what()}};
  } catch (const IoFailure& e) {
    code = kExitIo;
    report["config"] = cfg;
    report["error"] = {{"code", "IoError"}, {"message", e.what()}};
  }
  if (code != kExitOk) err << "unicomm: " << report["error"]["message"].get<std::string>() << '\n';

  const std::string text = report.dump(2) + "\n";
  if (g.output.empty()) {
    out << text;
  } else {
    try {
      write_text(g.output, text);
    } catch (const IoFailure& e) {
      err << "unicomm: " << e.what() << '\n';
      return kExitIo;
    }
  }
  return code;
}

}  // namespace unicomm::cli
