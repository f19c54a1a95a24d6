#include "qwb/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qwb/cli/parse.hpp"
#include "qwb/cli/suites.hpp"
#include "qwb/fock.hpp"
#include "qwb/kgeom.hpp"
#include "qwb/moyal.hpp"
#include "qwb/numlab.hpp"
#include "qwb/prequant.hpp"
#include "qwb/zetafock.hpp"

namespace qwb::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string hbar = "1";
  std::uint64_t seed = RunConfig{}.seed;
  double tolerance = 0;
  std::string format;
  int cutoff = RunConfig{}.cutoff;
  int grid_points = RunConfig{}.grid_points;
  int sphere_resolution = RunConfig{}.sphere_resolution;
  int samples = RunConfig{}.random_samples;
  CLI::Option* tolerance_opt = nullptr;
  CLI::Option* cutoff_opt = nullptr;
  CLI::Option* grid_opt = nullptr;
  CLI::Option* sphere_opt = nullptr;
  CLI::Option* samples_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* hbar_opt = nullptr;

  mpq_class hbar_value() const {
    mpq_class h;
    try {
      h = parse_rational(hbar);
    } catch (const std::exception&) {
      throw UsageError("--hbar expects a rational such as 1 or 1/2, got '" + hbar + "'");
    }
    if (h <= 0) throw UsageError("--hbar must be positive");
    return h;
  }
};

std::string format_or(const Globals& g, const std::string& fallback, bool grid) {
  const std::string f = g.format.empty() ? fallback : g.format;
  if (f != "json" && f != "csv") throw UsageError("--format must be json or csv");
  if (f == "csv" && !grid) throw UsageError("csv output is only available for grid commands");
  return f;
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

nlohmann::json poly_json(const PhasePoly& f, const mpq_class& hbar) {
  return {{"text", f.to_string()}, {"terms", to_json(f)}, {"at_hbar", f.substitute_hbar(hbar).to_string()}};
}

StarConvention convention_from(const std::string& s) {
  if (s == "physics") return StarConvention::physics;
  if (s == "mathematical") return StarConvention::mathematical;
  throw UsageError("--convention must be physics or mathematical");
}

std::vector<std::array<double, 2>> read_path(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot open path file '" + file + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw UsageError("malformed path file: " + std::string(e.what()));
  }
  const nlohmann::json& pts = j.is_object() ? j.at("points") : j;
  std::vector<std::array<double, 2>> path;
  for (const auto& p : pts) {
    if (!p.is_array() || p.size() != 2) throw UsageError("path points must be [x, y] pairs");
    path.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return path;
}

numlab::Grid2D parse_grid(const std::string& text, double hbar) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      v.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("malformed --grid '" + text + "'");
    }
  }
  if (v.size() == 2) {
    if (v[1] < 3) throw UsageError("--grid needs at least 3 points");
    return numlab::Grid2D::square(v[0] * std::sqrt(hbar), static_cast<int>(v[1]));
  }
  if (v.size() == 6) return {v[0], v[1], static_cast<int>(v[2]), v[3], v[4], static_cast<int>(v[5])};
  throw UsageError("--grid expects HALF_WIDTH:POINTS or XMIN:XMAX:NX:PMIN:PMAX:NP");
}

RunConfig make_run_config(const Globals& g, bool fast, bool timings) {
  RunConfig c = fast ? RunConfig::fast_defaults() : RunConfig{};
  c.timings = timings;
  if (g.hbar_opt->count() > 0) c.hbar = g.hbar_value();
  if (g.seed_opt->count() > 0) c.seed = g.seed;
  if (g.tolerance_opt->count() > 0) c.tolerance = g.tolerance;
  if (g.cutoff_opt->count() > 0) c.cutoff = g.cutoff;
  if (g.grid_opt->count() > 0) c.grid_points = g.grid_points;
  if (g.sphere_opt->count() > 0) c.sphere_resolution = g.sphere_resolution;
  if (g.samples_opt->count() > 0) c.random_samples = g.samples;
  if (c.cutoff < 2) throw UsageError("--cutoff must be at least 2");
  if (c.grid_points < 3) throw UsageError("--grid-points must be at least 3");
  return c;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantization workbench: exact and numeric checks of phase-space quantization", "qwb"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file");
  app.allow_config_extras(CLI::config_extras_mode::error);

  Globals g;
  g.hbar_opt = app.add_option("--hbar", g.hbar, "Value substituted for hbar (rational)")->envname("QWB_HBAR");
  g.seed_opt = app.add_option("--seed", g.seed, "Seed for randomized checks")->envname("QWB_SEED");
  g.tolerance_opt =
      app.add_option("--tolerance", g.tolerance, "Override for floating-point tolerances")->envname("QWB_TOLERANCE");
  app.add_option("--format", g.format, "json or csv")->envname("QWB_FORMAT");
  g.cutoff_opt = app.add_option("--cutoff", g.cutoff, "Fock cutoff D (exponents < D)");
  g.grid_opt = app.add_option("--grid-points", g.grid_points, "Wigner grid points per axis in suites");
  g.sphere_opt = app.add_option("--sphere-resolution", g.sphere_resolution, "Panels per axis for the sphere integral");
  g.samples_opt = app.add_option("--samples", g.samples, "Random samples per property check");

  std::function<int()> action;
  auto on = [&](CLI::App* sub, std::function<int()> f) { sub->callback([&action, f] { action = f; }); };

  // star / moyal-bracket
  std::string f_text, g_text, convention = "physics";
  std::size_t dof = 1;
  auto* star = app.add_subcommand("star", "Groenewold-Moyal star product f * g");
  auto* mb = app.add_subcommand("moyal-bracket", "Moyal bracket and its deviation from the Poisson bracket");
  for (auto* sub : {star, mb}) {
    sub->add_option("f", f_text, "Left factor")->required();
    sub->add_option("g", g_text, "Right factor")->required();
    sub->add_option("--dof", dof, "Minimum number of degrees of freedom");
    sub->add_option("--convention", convention, "physics or mathematical");
  }
  on(star, [&] {
    const auto t = infer_table({f_text, g_text}, dof);
    const auto ctx = StarContext{PoissonStructure::canonical(t), convention_from(convention)};
    const auto f = parse_expression(f_text, t);
    const auto gg = parse_expression(g_text, t);
    emit(out, {{"f", f.to_string()}, {"g", gg.to_string()}, {"star", poly_json(star_product(f, gg, ctx), g.hbar_value())}});
    return 0;
  });
  on(mb, [&] {
    const auto t = infer_table({f_text, g_text}, dof);
    const auto ctx = StarContext{PoissonStructure::canonical(t), convention_from(convention)};
    const auto f = parse_expression(f_text, t);
    const auto gg = parse_expression(g_text, t);
    emit(out, {{"f", f.to_string()},
               {"g", gg.to_string()},
               {"moyal_bracket", poly_json(moyal_bracket(f, gg, ctx), g.hbar_value())},
               {"poisson_bracket", poisson_bracket(f, gg, ctx.poisson).to_string()},
               {"witness", bracket_witness(f, gg, ctx).to_string()}});
    return 0;
  });

  auto* gro = app.add_subcommand("groenewold", "Cubic and quadratic bracket witnesses");
  on(gro, [&] {
    const auto t = VariableTable::canonical(1);
    const auto ctx = StarContext::canonical(t);
    const auto q = PhasePoly::variable(t, "q");
    const auto p = PhasePoly::variable(t, "p");
    emit(out, {{"cubic", poly_json(groenewold_witness(ctx), g.hbar_value())},
               {"quadratic", poly_json(bracket_witness(q * q, p * p, ctx), g.hbar_value())}});
    return 0;
  });

  std::string op_text;
  auto* weyl = app.add_subcommand("weyl", "Weyl (symmetrized) quantization of a polynomial");
  weyl->add_option("f", f_text, "Polynomial in q, p")->required();
  weyl->add_option("--dof", dof, "Minimum number of degrees of freedom");
  on(weyl, [&] {
    const auto t = infer_table({f_text}, dof);
    if (t->chart() != Chart::canonical) throw UsageError("weyl needs a polynomial in q and p");
    const auto op = weyl_map(parse_expression(f_text, t));
    emit(out, {{"operator", op.to_string()}, {"terms", to_json(op)}});
    return 0;
  });
  auto* wmap = app.add_subcommand("wigner-map", "Weyl symbol of an ordered operator expression in Q, P");
  wmap->add_option("op", op_text, "Operator expression, products taken in the written order")->required();
  wmap->add_option("--dof", dof, "Number of modes");
  on(wmap, [&] {
    std::string lowered = op_text;
    for (char& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const std::size_t modes = infer_table({lowered}, dof)->dof();
    const auto op = parse_operator(op_text, modes);
    const auto sym = wigner_map(op);
    emit(out, {{"operator", op.to_string()}, {"symbol", poly_json(sym, g.hbar_value())}});
    return 0;
  });

  auto* pq = app.add_subcommand("prequant", "Prequantum operator i hbar X_f + f + theta(X_f)");
  pq->add_option("f", f_text, "Observable")->required();
  pq->add_option("--dof", dof, "Minimum number of degrees of freedom");
  on(pq, [&] {
    const auto t = infer_table({f_text}, dof);
    const auto f = parse_expression(f_text, t);
    const auto op = prequantize(f);
    emit(out, {{"f", f.to_string()},
               {"operator", op.to_string()},
               {"terms", to_json(op)},
               {"symmetric", formal_adjoint(op) == op}});
    return 0;
  });

  std::string lambda_text = "0";
  int window = 5;
  auto* circ = app.add_subcommand("circle", "Prequantization P_lambda of the momentum on T*S^1");
  circ->add_option("--lambda", lambda_text, "Holonomy parameter in [0, 1)");
  circ->add_option("--window", window, "Modes |n| <= window");
  on(circ, [&] {
    mpq_class lambda;
    try {
      lambda = parse_rational(lambda_text);
    } catch (const std::exception&) {
      throw UsageError("--lambda expects a rational");
    }
    const auto op = circle_prequantize(lambda, window);
    nlohmann::json ev = nlohmann::json::array();
    for (int n = -window; n <= window; ++n) {
      ev.push_back({{"mode", n}, {"eigenvalue", op.eigenvalue(n).to_string()},
                    {"at_hbar", op.eigenvalue(n).substitute(g.hbar_value()).to_string()}});
    }
    emit(out, {{"lambda", rational_string(lambda)}, {"diagonal", op.is_diagonal()}, {"spectrum", ev}});
    return 0;
  });

  std::size_t modes = 2;
  std::string matrix_name;
  auto* fk = app.add_subcommand("fock", "Truncated Bargmann-Fock ladder operators");
  fk->add_option("--modes", modes, "Number of modes");
  fk->add_option("--matrix", matrix_name, "Dump one matrix: a1, astar1, gram, h0");
  on(fk, [&] {
    const BargmannBasis b(modes, g.cutoff, g.hbar_value());
    const auto H = oscillator_hamiltonian(b);
    if (!matrix_name.empty()) {
      const auto lad = ladder_matrices(b);
      std::map<std::string, ExactMatrix> named{{"gram", gram_matrix(b)}, {"h0", H}};
      for (std::size_t k = 0; k < modes; ++k) {
        named.emplace("a" + std::to_string(k + 1), lad.a[k]);
        named.emplace("astar" + std::to_string(k + 1), lad.a_star[k]);
      }
      auto it = named.find(matrix_name);
      if (it == named.end()) throw UsageError("unknown matrix '" + matrix_name + "'");
      emit(out, {{"matrix", matrix_name}, {"size", b.size()}, {"entries", to_json(it->second)}});
      return 0;
    }
    bool ccr = true;
    bool adj = true;
    for (std::size_t i = 0; i < modes; ++i) {
      adj = adj && adjoint_defect(b, i).is_zero();
      for (std::size_t j = 0; j < modes; ++j) {
        const auto d = ccr_defect(b, i, j);
        for (std::size_t k : b.interior()) ccr = ccr && d.column(k).empty();
      }
    }
    std::map<std::string, int> spectrum;
    for (std::size_t k : b.interior()) spectrum[H.get(k, k).to_string()] += 1;
    nlohmann::json by_degree = nlohmann::json::array();
    for (int N = 0; N <= g.cutoff - 2; ++N) {
      const auto block = b.of_degree(N);
      if (block.empty()) continue;
      by_degree.push_back({{"degree", N}, {"eigenvalue", H.get(block[0], block[0]).to_string()}, {"states", block.size()}});
    }
    emit(out, {{"modes", modes}, {"cutoff", g.cutoff}, {"size", b.size()}, {"ccr_below_boundary", ccr},
               {"gram_adjoint", adj}, {"h0_by_degree", by_degree}});
    return 0;
  });

  auto* su = app.add_subcommand("su2", "Schwinger SU(2) on two modes");
  on(su, [&] {
    const BargmannBasis b(2, g.cutoff, g.hbar_value());
    const auto s = schwinger_su2(b);
    nlohmann::json blocks = nlohmann::json::array();
    for (int N = 0; N <= g.cutoff - 1; ++N) {
      nlohmann::json weights = nlohmann::json::array();
      std::string cas;
      for (std::size_t k : b.of_degree(N)) {
        weights.push_back(s.M3.get(k, k).to_string());
        cas = s.casimir.get(k, k).to_string();
      }
      blocks.push_back({{"degree", N}, {"j", rational_string(mpq_class(N) / 2)}, {"m3", weights}, {"casimir", cas}});
    }
    emit(out, {{"cutoff", g.cutoff}, {"blocks", blocks}});
    return 0;
  });

  int car_modes = 3;
  auto* car = app.add_subcommand("car", "Jordan-Wigner fermion matrices");
  car->add_option("--modes", car_modes, "Number of modes (1..12)");
  on(car, [&] {
    const CarAlgebra c = car_matrices(car_modes);
    const std::size_t dim = std::size_t{1} << car_modes;
    bool ok = true;
    for (int i = 0; i < car_modes && ok; ++i) {
      for (int j = 0; j < car_modes && ok; ++j) {
        const auto ac = anticommutator(c.a[i], c.a_star[j]);
        ok = (i == j ? ac == ExactMatrix::identity(dim) : ac.is_zero()) && anticommutator(c.a[i], c.a[j]).is_zero();
      }
    }
    std::map<std::string, int> mult;
    const auto N = c.number_operator();
    for (std::size_t k = 0; k < dim; ++k) mult[N.get(k, k).to_string()] += 1;
    emit(out, {{"modes", car_modes}, {"dimension", dim}, {"car_relations", ok}, {"number_spectrum", mult}});
    return ok ? 0 : 1;
  });

  int state = 0;
  std::string grid_text = "6:121";
  auto* wig = app.add_subcommand("wigner", "Wigner function of an oscillator eigenstate on a grid");
  wig->add_option("--state", state, "Hermite index n (0..20)");
  wig->add_option("--grid", grid_text, "HALF_WIDTH:POINTS (in units of sqrt(hbar)) or XMIN:XMAX:NX:PMIN:PMAX:NP");
  on(wig, [&] {
    const double h = g.hbar_value().get_d();
    const auto psi = numlab::hermite_wavefunction(state, h);
    const auto F = numlab::wigner_transform(psi, parse_grid(grid_text, h), h);
    if (format_or(g, "csv", true) == "csv") {
      out << "x,p,F\n" << std::setprecision(17);
      for (int i = 0; i < F.grid.nx; ++i) {
        for (int j = 0; j < F.grid.np; ++j) out << F.grid.x(i) << "," << F.grid.p(j) << "," << F.at(i, j) << "\n";
      }
    } else {
      emit(out, {{"state", state}, {"hbar", h}, {"nx", F.grid.nx}, {"np", F.grid.np}, {"values", F.values},
                 {"truncation_error", F.truncation_error}});
    }
    return 0;
  });

  double theta = 0, phi = 0;
  int dimension = 0;
  auto* st = app.add_subcommand("stora", "Stora quasi-distribution");
  st->add_option("--theta", theta, "Bloch polar angle of a pure spin-1/2 state (sigma_z, sigma_x bases)");
  st->add_option("--phi", phi, "Bloch azimuth");
  st->add_option("--dimension", dimension, "Random state and bases of this dimension instead (seeded)");
  on(st, [&] {
    format_or(g, "json", false);
    Eigen::MatrixXd F;
    if (dimension > 0) {
      numlab::Sampler s(g.seed);
      const auto rho = s.random_density(dimension);
      const auto A = s.random_basis(dimension);
      const auto B = s.random_basis(dimension);
      F = numlab::stora_distribution(rho, A, B);
    } else {
      F = numlab::stora_distribution(numlab::DensityMatrix::pure(numlab::bloch_state(theta, phi)),
                                     numlab::spin_z_basis(), numlab::spin_x_basis());
    }
    nlohmann::json rows = nlohmann::json::array();
    for (int a = 0; a < F.rows(); ++a) {
      std::vector<double> r(static_cast<std::size_t>(F.cols()));
      for (int b = 0; b < F.cols(); ++b) r[static_cast<std::size_t>(b)] = F(a, b);
      rows.push_back(r);
    }
    emit(out, {{"F", rows}, {"min", F.minCoeff()}, {"sum", F.sum()}});
    return 0;
  });

  int sphere_n = 1;
  auto* sph = app.add_subcommand("sphere", "Residue integral over the sphere of radius hbar N");
  sph->add_option("--N", sphere_n, "Positive integer N");
  on(sph, [&] {
    format_or(g, "json", false);
    const auto r = numlab::sphere_residue_integral(sphere_n, g.hbar_value().get_d(), g.sphere_resolution,
                                                   g.tolerance_opt->count() ? g.tolerance : 1e-9);
    emit(out, {{"N", sphere_n}, {"value", r.value}, {"restriction", r.restriction}, {"error", r.error},
               {"resolution", r.resolution}});
    return 0;
  });

  std::string path_file;
  auto* lp = app.add_subcommand("loop", "Integral of (x dy - y dx)/(x^2 + y^2) along a closed polyline");
  lp->add_option("--path", path_file, "JSON file: {\"points\": [[x, y], ...]}")->required();
  on(lp, [&] {
    format_or(g, "json", false);
    const double v = numlab::loop_integral_eta1(read_path(path_file));
    emit(out, {{"value", v}, {"winding", std::lround(v / (2 * 3.14159265358979323846))}});
    return 0;
  });

  auto* kg = app.add_subcommand("kgeom", "Quaternion and complex symplectic form identities");
  on(kg, [&] {
    const RunReport r = run_suite("kgeom", make_run_config(g, false, false));
    out << r.serialize();
    return r.passed() ? 0 : 1;
  });

  double beta = 2;
  std::uint64_t zcut = 1000000;
  std::uint32_t zprimes = 100000;
  auto* zt = app.add_subcommand("zeta", "Partition function of the prime Fock space");
  zt->add_option("--beta", beta, "Inverse temperature (> 1)");
  zt->add_option("--cutoff", zcut, "Partial-sum cutoff M");
  zt->add_option("--primes", zprimes, "Euler-product prime cutoff P");
  on(zt, [&] {
    format_or(g, "json", false);
    const auto z = zeta::partition_function(beta, zcut);
    const auto e = zeta::euler_product(beta, zprimes);
    emit(out, {{"beta", beta},
               {"partition_function", {{"value", z.value}, {"lower", z.lower}, {"upper", z.upper}, {"cutoff", zcut}}},
               {"euler_product", {{"value", e.value}, {"lower", e.lower}, {"upper", e.upper}, {"prime_cutoff", zprimes}}},
               {"brackets_overlap", zeta::brackets_overlap(z, e)}});
    return 0;
  });

  std::string suite = "all";
  bool fast = false, timings = false;
  auto* run = app.add_subcommand("run", "Run a verification suite and print its report");
  run->add_option("suite", suite, "all, moyal, prequant, fock, numlab, kgeom or zeta");
  run->add_flag("--fast", fast, "Reduced resolutions and looser tolerances");
  run->add_flag("--timings", timings, "Include per-check runtimes (breaks byte-identical reports)");
  on(run, [&] {
    format_or(g, "json", false);
    if (suite != "all") {
      const auto& names = suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
    }
    const RunReport r = run_suite(suite, make_run_config(g, fast, timings));
    out << r.serialize();
    return r.passed() ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    return action ? action() : 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qwb::cli
