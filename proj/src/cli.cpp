#include "thinseq/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "thinseq/carleson.hpp"
#include "thinseq/error.hpp"
#include "thinseq/gram.hpp"
#include "thinseq/jones.hpp"
#include "thinseq/pick.hpp"
#include "thinseq/separation.hpp"
#include "thinseq/seqgen.hpp"
#include "thinseq/seqio.hpp"

namespace thinseq {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  std::string in;
  std::string out;
  std::string csv;
  std::string targets;
  std::size_t tail = 1;  // 1-based, as reported
  double amp = 2.0;
  std::size_t grid = 0;  // 0: the command's default density
  std::uint64_t seed = 1;
  double tol = kFeasibilityTolerance;
  std::size_t trials = 100;
  std::string method = "jones";
  bool bisect = false;
  FamilySpec family;
  std::string family_name;
};

Json complex_json(cplx z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json complex_array(std::span<const cplx> v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(complex_json(z));
  return a;
}

Json matrix_json(const CMatrix& m) {
  Json re = Json::array(), im = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json rr = Json::array(), ii = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) {
      rr.push_back(m(i, j).real());
      ii.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  return Json{{"n", m.size()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

/// Plot columns: first index and value.
using Columns = std::vector<std::pair<std::size_t, double>>;

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot write '" + path + "'");
  f << text;
}

std::string csv_text(const std::string& header, const Columns& cols) {
  std::string s = "index," + header + "\n";
  for (const auto& [i, v] : cols) s += std::to_string(i) + "," + format_double(v) + "\n";
  return s;
}

void check_output_path(const std::string& path, const char* flag) {
  if (path.empty() || path == "-") return;
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty() && !std::filesystem::is_directory(parent)) {
    throw DomainError(std::string(flag) + ": directory '" + parent.string() + "' does not exist");
  }
}

void validate(const RunConfig& cfg) {
  if (!cfg.in.empty() && !std::filesystem::is_regular_file(cfg.in)) {
    throw DomainError("--in: no such file '" + cfg.in + "'");
  }
  if (!cfg.targets.empty() && !std::filesystem::is_regular_file(cfg.targets)) {
    throw DomainError("--targets: no such file '" + cfg.targets + "'");
  }
  check_output_path(cfg.out, "--out");
  check_output_path(cfg.csv, "--csv");
  if (!(cfg.tol > 0.0)) throw DomainError("--tol must be positive");
  if (cfg.tail < 1) throw DomainError("--tail counts from 1");
  if (!(cfg.amp >= 1.0)) throw DomainError("--amp must be >= 1");
}

PointSequence input_sequence(const RunConfig& cfg) {
  if (!cfg.in.empty()) return load_sequence(cfg.in);
  if (!cfg.family_name.empty()) return generate(cfg.family);
  throw DomainError("no input: pass --in FILE or --family NAME");
}

std::size_t tail_index(const RunConfig& cfg, const PointSequence& seq) {
  if (cfg.tail > seq.size()) {
    throw DomainError("--tail " + std::to_string(cfg.tail) + " exceeds sequence length " + std::to_string(seq.size()));
  }
  return cfg.tail - 1;
}

PolarGrid grid_of(const RunConfig& cfg, std::size_t fallback) {
  const std::size_t d = cfg.grid ? cfg.grid : fallback;
  return PolarGrid{d, d, 1e-4};
}

Json cmd_generate(const RunConfig& cfg, std::ostream& out) {
  const auto seq = generate(cfg.family);
  const auto format =
      std::filesystem::path(cfg.out).extension() == ".json" ? SequenceFormat::json : SequenceFormat::text;
  write_text(cfg.out, format_sequence(seq, format, describe(cfg.family)), out);
  return nullptr;
}

Json cmd_analyze(const RunConfig& cfg, Columns& cols) {
  const auto seq = input_sequence(cfg);
  const auto rep = separation_constants(seq);
  const auto trend = thinness_trend([&](std::size_t n) { return seq[n]; }, seq.size());
  for (std::size_t j = 0; j < seq.size(); ++j) cols.emplace_back(j + 1, rep.delta_j[j]);
  return Json{{"length", seq.size()},
              {"deltaJ", rep.delta_j},
              {"oneMinusDeltaJ", rep.one_minus_delta_j},
              {"delta", rep.delta},
              {"tailDelta", rep.tail_delta},
              {"thinTrend",
               {{"lengths", trend.lengths},
                {"windowOneMinusTailDelta", trend.window_one_minus_tail_delta},
                {"thinConsistent", trend.thin_consistent}}}};
}

Json cmd_gram(const RunConfig& cfg, Columns& cols) {
  const auto seq = input_sequence(cfg);
  const std::size_t tail = tail_index(cfg, seq);
  const auto g = gram_matrix(seq, tail);
  const auto spec = hermitian_spectrum(g, false);
  std::vector<double> defects;
  for (std::size_t n = tail; n < seq.size(); ++n) {
    defects.push_back(gram_column_defect(g, n));
    cols.emplace_back(n + 1, defects.back());
  }
  return Json{{"N", cfg.tail},
              {"cN", spec.values.front()},
              {"CN", spec.values.back()},
              {"eigenvalues", spec.values},
              {"columnDefects", defects},
              {"matrix", matrix_json(g.entries)}};
}

Json cmd_carleson(const RunConfig& cfg, Columns& cols) {
  const auto seq = input_sequence(cfg);
  const std::size_t tail = tail_index(cfg, seq);
  const std::size_t density = cfg.grid ? cfg.grid : 64;
  const auto rep = carleson_report(seq, tail, cfg.amp, density);
  for (std::size_t i = 0; i < rep.box_sums.size(); ++i) cols.emplace_back(tail + i + 1, rep.box_sums[i]);
  return Json{{"N", cfg.tail},       {"boxSums", rep.box_sums}, {"R", rep.kernel_constant},
              {"C", rep.embedding},  {"A", cfg.amp},           {"gridDensity", density}};
}

InterpolationProblem problem_of(const RunConfig& cfg, const PointSequence& seq) {
  if (cfg.targets.empty()) throw DomainError("interpolate needs --targets FILE");
  auto prob = load_targets(cfg.targets);
  if (prob.tail >= seq.size()) throw DomainError("targets offsetN exceeds sequence length");
  if (prob.targets.size() != seq.size() - prob.tail) {
    throw DomainError("targets file has " + std::to_string(prob.targets.size()) + " values; the tail has " +
                      std::to_string(seq.size() - prob.tail) + " points");
  }
  return prob;
}

Json coefficients_json(const KernelCoefficients& c) {
  Json a = Json::array();
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    a.push_back({{"index", c.support[i] + 1}, {"re", c.coeffs[i].real()}, {"im", c.coeffs[i].imag()}});
  }
  return a;
}

double weight_of(const DiscPoint& z, Exponent p) { return p == Exponent::two ? std::sqrt(z.one_minus_abs2()) : 1.0; }

Json cmd_interpolate(const RunConfig& cfg, Columns& cols) {
  const auto seq = input_sequence(cfg);
  const auto prob = problem_of(cfg, seq);
  const char* p_name = prob.p == Exponent::two ? "2" : "inf";
  Json rep{{"method", cfg.method}, {"p", p_name}, {"offsetN", prob.tail + 1}, {"targetNorm", prob.norm()}};

  if (cfg.method == "jones") {
    if (prob.p != Exponent::infinity) throw DomainError("--method jones takes p = \"inf\" targets");
    const JonesBasis basis(seq);
    const auto g = jones_interpolate(basis, prob, grid_of(cfg, 100));
    std::vector<cplx> values;
    for (std::size_t j = prob.tail; j < seq.size(); ++j) {
      values.push_back(g(seq[j]));
      cols.emplace_back(j + 1, std::abs(values.back() - prob.targets[j - prob.tail]));
    }
    rep["delta"] = basis.delta();
    rep["maxResidual"] = g.max_residual;
    rep["gridSup"] = g.grid_sup;
    rep["sumBound"] = g.sum_bound;
    rep["bound"] = g.bound;
    rep["nodeValues"] = complex_array(values);
    return rep;
  }
  if (cfg.method == "kernel") {
    std::vector<cplx> plain;
    for (std::size_t j = prob.tail; j < seq.size(); ++j) plain.push_back(prob.targets[j - prob.tail] / weight_of(seq[j], prob.p));
    const auto c = min_norm_interpolant(seq, plain, prob.tail);
    double worst = 0.0;
    for (std::size_t j = prob.tail; j < seq.size(); ++j) {
      const double r = std::abs(weight_of(seq[j], prob.p) * evaluate_synthesis(c, seq[j]) - prob.targets[j - prob.tail]);
      worst = std::max(worst, r);
      cols.emplace_back(j + 1, r);
    }
    rep["maxResidual"] = worst;
    rep["norm"] = std::sqrt(synthesis_norm_squared(c));
    rep["coefficients"] = coefficients_json(c);
    return rep;
  }
  if (cfg.method == "iterative") {
    if (prob.p != Exponent::two) throw DomainError("--method iterative takes p = 2 targets");
    const auto sol = iterative_eis_solve(seq, prob);
    for (std::size_t k = 0; k < sol.residual_trace.size(); ++k) cols.emplace_back(k, sol.residual_trace[k]);
    rep["epsilon"] = sol.epsilon;
    rep["rounds"] = sol.rounds;
    rep["residualTrace"] = sol.residual_trace;
    rep["finalResidual"] = sol.final_residual;
    rep["norm"] = sol.norm;
    rep["normBound"] = sol.norm_bound;
    rep["coefficients"] = coefficients_json(sol.coefficients);
    return rep;
  }
  throw DomainError("--method must be jones, kernel or iterative");
}

Json cmd_pick(const RunConfig& cfg, Columns& cols) {
  const auto seq = input_sequence(cfg);
  const std::size_t tail = tail_index(cfg, seq);
  const auto nodes = seq.tail(tail);
  const PointSequence tail_seq({nodes.begin(), nodes.end()});
  std::vector<cplx> targets(tail_seq.size(), 1.0);
  if (!cfg.targets.empty()) {
    const auto prob = load_targets(cfg.targets);
    if (prob.tail != tail || prob.targets.size() != tail_seq.size()) {
      throw DomainError("targets file must cover the tail selected by --tail");
    }
    targets = prob.targets;
  }
  const double lam = pick_min_eigenvalue(tail_seq.points(), targets);
  Json rep{{"N", cfg.tail}, {"minEigenvalue", lam}, {"feasible", lam >= -cfg.tol}};
  if (cfg.bisect) {
    const auto s = max_feasible_scale(tail_seq, targets, cfg.tol);
    rep["sStar"] = s.s_star;
    Json path = Json::array();
    for (std::size_t i = 0; i < s.path.size(); ++i) {
      path.push_back({{"s", s.path[i].first}, {"minEigenvalue", s.path[i].second}});
      cols.emplace_back(i + 1, s.path[i].first);
    }
    rep["path"] = std::move(path);
  } else {
    rep["sStar"] = nullptr;
  }
  rep["MHat"] = interpolation_constant_probe(seq, tail, cfg.trials, cfg.seed, cfg.tol);
  rep["trials"] = cfg.trials;
  rep["seed"] = cfg.seed;
  return rep;
}

Json cmd_split(const RunConfig& cfg, Columns& cols) {
  const auto seq = input_sequence(cfg);
  const std::size_t cut = tail_index(cfg, seq);
  const auto grid = grid_of(cfg, 100);
  const auto sp = splitting_pair(seq, cut, grid);
  double worst_point = 0.0;
  Json values = Json::array();
  for (std::size_t j = 0; j < seq.size(); ++j) {
    const cplx f = sp.F(seq[j]), g = sp.G(seq[j]);
    const double want = j >= cut ? 1.0 : 0.0;
    worst_point = std::max({worst_point, std::abs(f - want), std::abs(g - (1.0 - want))});
    values.push_back({{"index", j + 1}, {"F", complex_json(f)}, {"G", complex_json(g)}});
    cols.emplace_back(j + 1, f.real());
  }
  const auto pts = grid.points();
  double grid_max = 0.0;
  for (const auto& z : pts) grid_max = std::max(grid_max, std::abs(sp.F(z)) + std::abs(sp.G(z)));
  return Json{{"n", cfg.tail},
              {"deltaPrime", sp.delta_prime},
              {"headTailSup", sp.head_tail_sup},
              {"epsRecorded", sp.eps_recorded},
              {"t", sp.t},
              {"deltaT", sp.delta_t},
              {"gamma", sp.gamma},
              {"gridMaxSumAbs", grid_max},
              {"gridPoints", pts.size()},
              {"maxPointError", worst_point},
              {"pointValues", std::move(values)}};
}

std::string error_line(const std::string& what) { return Json{{"error", what}}.dump() + "\n"; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Numerical laboratory for interpolating and thin sequences in the unit disc", "thinseq"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--in", cfg.in, "sequence file (text re,im lines or {\"points\":[...]})");
    sub->add_option("--family", cfg.family_name, "generate the input instead: geometric, supergeometric, power_tower");
    sub->add_option("--q", cfg.family.q, "family ratio q in (0, 1)");
    sub->add_option("--c", cfg.family.c, "family scale c in (0, 1]");
    sub->add_option("--a", cfg.family.a, "power_tower base a > 1");
    sub->add_option("--count", cfg.family.count, "number of points, 1..64");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "report path (default stdout)");
    sub->add_option("--csv", cfg.csv, "write index,value plot columns here");
  };

  auto* gen = app.add_subcommand("generate", "write a test family to a sequence file");
  gen->add_option("--family", cfg.family_name, "geometric, supergeometric or power_tower")->required();
  gen->add_option("--q", cfg.family.q, "ratio q in (0, 1)");
  gen->add_option("--c", cfg.family.c, "scale c in (0, 1]");
  gen->add_option("--a", cfg.family.a, "power_tower base a > 1");
  gen->add_option("--count", cfg.family.count, "number of points, 1..64");
  gen->add_option("--angles", cfg.family.angles, "cycle the points through these angles (radians)")->delimiter(',');
  gen->add_option("--out", cfg.out, "sequence file (.json selects the structured format; default stdout)");

  auto* analyze = app.add_subcommand("analyze", "separation constants and thinness trend");
  add_input(analyze);
  add_output(analyze);

  auto* gram = app.add_subcommand("gram", "tail Gram matrix, spectrum and column defects");
  add_input(gram);
  add_output(gram);
  gram->add_option("--tail", cfg.tail, "first index N of the tail (from 1)");

  auto* carleson = app.add_subcommand("carleson", "box sums and embedding constants of mu_N");
  add_input(carleson);
  add_output(carleson);
  carleson->add_option("--tail", cfg.tail, "first index N of the tail (from 1)");
  carleson->add_option("--amp", cfg.amp, "box amplification A >= 1");
  carleson->add_option("--grid", cfg.grid, "probe grid density (default 64)");

  auto* interp = app.add_subcommand("interpolate", "solve an interpolation problem from a targets file");
  add_input(interp);
  add_output(interp);
  interp->add_option("--targets", cfg.targets, "targets file {\"p\":2|\"inf\",\"offsetN\":N,\"values\":[...]}")->required();
  interp->add_option("--method", cfg.method, "jones, kernel or iterative")
      ->check(CLI::IsMember({"jones", "kernel", "iterative"}));
  interp->add_option("--grid", cfg.grid, "sup-norm grid density (default 100)");

  auto* pick = app.add_subcommand("pick", "Pick-matrix feasibility, scale search, interpolation constant probe");
  add_input(pick);
  add_output(pick);
  pick->add_option("--tail", cfg.tail, "first index N of the tail (from 1)");
  pick->add_option("--targets", cfg.targets, "targets on the tail (default: all ones)");
  pick->add_option("--tol", cfg.tol, "feasibility tolerance on the smallest eigenvalue");
  pick->add_flag("--bisect", cfg.bisect, "search the largest feasible scale s*");
  pick->add_option("--trials", cfg.trials, "random target vectors for the constant probe");
  pick->add_option("--seed", cfg.seed, "seed for the random targets");

  auto* split = app.add_subcommand("split", "splitting pair F, G around the cut");
  add_input(split);
  add_output(split);
  split->add_option("--tail", cfg.tail, "first index n of the tail; the head is z_1..z_{n-1}");
  split->add_option("--grid", cfg.grid, "sup-norm grid density (default 100)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << error_line(e.what());
    return kExitUsage;
  }

  try {
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
    if (!cfg.family_name.empty()) cfg.family.kind = parse_family_kind(cfg.family_name);
    if (!cfg.family.angles.empty()) cfg.family.angle_rule = AngleRule::fixed_list;
    if (cfg.family.kind == FamilyKind::custom_file) throw DomainError("use --in for sequence files");
    validate(cfg);

    Columns cols;
    std::string csv_header = "value";
    Json rep;
    if (cfg.command == "generate") {
      cmd_generate(cfg, out);
      return kExitOk;
    } else if (cfg.command == "analyze") {
      rep = cmd_analyze(cfg, cols);
      csv_header = "deltaJ";
    } else if (cfg.command == "gram") {
      rep = cmd_gram(cfg, cols);
      csv_header = "columnDefect";
    } else if (cfg.command == "carleson") {
      rep = cmd_carleson(cfg, cols);
      csv_header = "boxSum";
    } else if (cfg.command == "interpolate") {
      rep = cmd_interpolate(cfg, cols);
      csv_header = cfg.method == "iterative" ? "residual" : "nodeResidual";
    } else if (cfg.command == "pick") {
      rep = cmd_pick(cfg, cols);
      csv_header = "scale";
    } else {
      rep = cmd_split(cfg, cols);
      csv_header = "F";
    }
    write_text(cfg.out, rep.dump(2) + "\n", out);
    if (!cfg.csv.empty()) write_text(cfg.csv, csv_text(csv_header, cols), out);
    return kExitOk;
  } catch (const DomainError& e) {
    err << error_line(e.what());
    return kExitUsage;
  } catch (const NumericError& e) {
    err << error_line(e.what());
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << error_line(e.what());
    return kExitNumeric;
  }
}

}  // namespace thinseq
