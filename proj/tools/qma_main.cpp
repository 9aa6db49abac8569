// Command-line front end: verification suites, pointwise densities with CSV
// grid export, plurisubharmonicity sampling, fundamental-solution constants,
// density mass integration, mass/sup estimates, comparison and minimum
// principles, and convergence tables.  Exit code 0 iff every check passed.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qma/fundamental.hpp"
#include "qma/mean_value.hpp"
#include "qma/measures.hpp"
#include "qma/parser.hpp"
#include "qma/suites.hpp"

using namespace qma;

namespace {

std::string fmt(double v) { return ScalarTraits<double>::to_string(v); }

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

template <class T>
T parse_scalar(const std::string& text) {
  const Polynomial<T> p = parse_polynomial<T>(text, 1);
  if (p.total_degree() > 0)
    throw std::invalid_argument("expected a number, got '" + text + "'");
  const Complex<T> v = p.eval(std::vector<T>{ScalarTraits<T>::zero()});
  return v.re;
}

template <class T>
GroupPoint<T> parse_point(const std::string& csv, int n) {
  const auto parts = split_csv(csv);
  if (static_cast<int>(parts.size()) != space_vars(n))
    throw std::invalid_argument("point needs " + std::to_string(space_vars(n)) +
                                " comma-separated coordinates (x1..x" +
                                std::to_string(4 * n) + ",t), got " +
                                std::to_string(parts.size()));
  GroupPoint<T> p;
  for (int i = 0; i < 4 * n; ++i) p.x.push_back(parse_scalar<T>(parts[i]));
  p.t = parse_scalar<T>(parts.back());
  return p;
}

std::vector<double> parse_doubles(const std::string& csv) {
  std::vector<double> out;
  for (const auto& part : split_csv(csv)) out.push_back(parse_scalar<double>(part));
  return out;
}

void print_reports(const std::vector<SuiteReport>& reports) {
  for (const auto& rep : reports) {
    for (const auto& c : rep.checks) {
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << rep.suite << '/' << c.name << ": "
                << c.lhs << " vs " << c.rhs << "  (residual " << fmt(c.residual)
                << ", tol " << fmt(c.tol) << ")\n";
    }
    std::cout << "suite " << rep.suite << ": " << rep.checks.size() << " checks, "
              << rep.failures() << " failures, " << rep.elapsed_ms << " ms (n=" << rep.n
              << ", " << rep.mode << ", seed " << rep.seed << ")\n";
  }
}

bool all_pass(const std::vector<SuiteReport>& reports) {
  for (const auto& r : reports)
    if (!r.all_pass()) return false;
  return true;
}

// Synthetic one-suite report for the non-verify subcommands, so --report
// works uniformly and exit codes stay honest.
struct CommandReport {
  SuiteReport rep;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  CommandReport(std::string suite, const RunConfig& cfg) {
    rep.suite = std::move(suite);
    rep.n = cfg.n;
    rep.mode = cfg.mode;
    rep.seed = cfg.seed;
  }
  void add(const CheckResult& c) { rep.checks.push_back(c); }
  std::vector<SuiteReport> finish() {
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return {rep};
  }
};

int finish_command(CommandReport& cr, const std::string& report_path) {
  const auto reports = cr.finish();
  print_reports(reports);
  if (!report_path.empty()) write_report_file(report_path, reports);
  return all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  int exit_code = 0;
  CLI::App app{
      "qmahg: exterior calculus, quaternionic Hessians, Monge-Ampere densities,\n"
      "and their verification suites on the quaternionic Heisenberg group"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string report_path;
  app.add_option("--n", cfg.n, "number of quaternionic blocks (coordinates x1..x4n, t)")
      ->check(CLI::Range(1, 4))
      ->capture_default_str();
  app.add_option("--mode", cfg.mode, "scalar mode for the symbolic suites")
      ->check(CLI::IsMember({"rational", "float"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "random generator seed")->capture_default_str();
  app.add_option("--tol", cfg.tol, "base tolerance for float residuals")
      ->capture_default_str();
  app.add_option("--report", report_path, "write the JSON report to this path");
  app.add_option("--samples", cfg.samples,
                 "override per-check trial counts (0 = defaults)");
  app.set_config("--config", "", "key=value file mirroring the global flags");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  {
    std::vector<std::string> allowed = suite_names();
    allowed.push_back("all");
    verify->add_option("suite", suite, "suite name or 'all'")
        ->required()
        ->check(CLI::IsMember(allowed));
  }
  verify->callback([&]() {
    const auto reports = run_suites(suite, cfg);
    print_reports(reports);
    if (!report_path.empty()) write_report_file(report_path, reports);
    if (!all_pass(reports)) exit_code = 1;
  });

  // ---- density ----
  auto* density = app.add_subcommand(
      "density", "Moore determinant of the horizontal Hessian at a point");
  std::string d_fn, d_point, d_csv;
  int d_cells = 20;
  double d_span = 1.0;
  density->add_option("--fn", d_fn, "polynomial in x1..x4n, t")->required();
  density->add_option("--point", d_point, "comma-separated coordinates")->required();
  density->add_option("--csv", d_csv,
                      "export a density grid over the (x1,x2) plane through the point");
  density->add_option("--cells", d_cells, "grid cells per axis for --csv")
      ->check(CLI::PositiveNumber);
  density->add_option("--span", d_span, "half-width of the --csv grid")
      ->check(CLI::PositiveNumber);
  density->callback([&]() {
    const int nv = space_vars(cfg.n);
    if (cfg.mode == "rational") {
      const auto u = parse_polynomial<Rational>(d_fn, nv);
      const auto p = parse_point<Rational>(d_point, cfg.n);
      std::cout << ScalarTraits<Rational>::to_string(density_at_exact(u, p)) << "\n";
    } else {
      const auto u = parse_polynomial<double>(d_fn, nv);
      const auto p = parse_point<double>(d_point, cfg.n);
      std::cout << fmt(density_at(u, p)) << "\n";
    }
    if (!d_csv.empty()) {
      const auto u = parse_polynomial<double>(d_fn, nv);
      const auto base = parse_point<double>(d_point, cfg.n);
      std::ofstream out(d_csv);
      if (!out) throw std::runtime_error("cannot open '" + d_csv + "' for writing");
      out << "x1,x2,density\n";
      const auto h = horizontal_hessian(u);
      std::vector<double> coords = base.x;
      coords.push_back(base.t);
      for (int i = 0; i <= d_cells; ++i)
        for (int j = 0; j <= d_cells; ++j) {
          coords[0] = base.x[0] - d_span + 2.0 * d_span * i / d_cells;
          coords[1] = base.x[1] - d_span + 2.0 * d_span * j / d_cells;
          out << fmt(coords[0]) << ',' << fmt(coords[1]) << ','
              << fmt(moore_det(h.eval(coords))) << "\n";
        }
      std::cout << "wrote " << (d_cells + 1) * (d_cells + 1) << " grid rows to " << d_csv
                << "\n";
    }
  });

  // ---- psh ----
  auto* psh = app.add_subcommand(
      "psh", "sample the horizontal Hessian for nonnegativity over a box");
  std::string p_fn, p_box, p_center;
  int p_samples = 200;
  psh->add_option("--fn", p_fn, "polynomial in x1..x4n, t")->required();
  psh->add_option("--box", p_box, "comma-separated half-widths (default: all 1)");
  psh->add_option("--center", p_center, "box center (default: origin)");
  psh->add_option("--samples", p_samples, "sample count")->check(CLI::PositiveNumber);
  psh->callback([&]() {
    const int nv = space_vars(cfg.n);
    const auto u = parse_polynomial<double>(p_fn, nv);
    std::vector<double> half(nv, 1.0);
    if (!p_box.empty()) {
      half = parse_doubles(p_box);
      if (static_cast<int>(half.size()) != nv)
        throw std::invalid_argument("--box needs " + std::to_string(nv) + " half-widths");
    }
    GroupPoint<double> center;
    center.x.assign(4 * cfg.n, 0.0);
    center.t = 0.0;
    if (!p_center.empty()) center = parse_point<double>(p_center, cfg.n);
    Rng rng(cfg.seed);
    std::vector<GroupPoint<double>> samples;
    for (int s = 0; s < p_samples; ++s) {
      GroupPoint<double> q;
      for (int i = 0; i < 4 * cfg.n; ++i)
        q.x.push_back(center.x[i] + rng.in(-half[i], half[i]));
      q.t = center.t + rng.in(-half[nv - 1], half[nv - 1]);
      samples.push_back(std::move(q));
    }
    const PshReport pr = is_psh_on_samples(u, samples);
    CommandReport cr("psh", cfg);
    std::string where = "worst sample " + detail::point_string(samples[pr.worst_sample]);
    cr.add(make_check("hessian-nonnegative-on-samples", "psh-hessian-positivity",
                      "min Hessian eigenvalue over " + std::to_string(p_samples) +
                          " samples (" + where + ")",
                      ">= 0", pr.psh ? 0.0 : -pr.worst_eigenvalue, cfg.tol));
    if (!pr.psh)
      std::cout << "hypothesis violation: Hessian eigenvalue "
                << fmt(pr.worst_eigenvalue) << " at "
                << detail::point_string(samples[pr.worst_sample]) << "\n";
    exit_code = finish_command(cr, report_path);
  });

  // ---- fundamental ----
  auto* fundamental = app.add_subcommand(
      "fundamental", "fundamental-solution constant and residuals for a line frame");
  std::string f_q;
  int f_refine = 4;
  fundamental->add_option("--q", f_q, "4n comma-separated quaternion components")
      ->required();
  fundamental->add_option("--refine", f_refine, "refinement levels")
      ->check(CLI::Range(1, 8));
  fundamental->callback([&]() {
    const auto vals = parse_doubles(f_q);
    if (static_cast<int>(vals.size()) != 4 * cfg.n)
      throw std::invalid_argument("--q needs " + std::to_string(4 * cfg.n) +
                                  " components (" + std::to_string(cfg.n) +
                                  " quaternions)");
    std::vector<Quaternion<double>> q;
    for (int l = 0; l < cfg.n; ++l)
      q.push_back(Quaternion<double>(vals[4 * l], vals[4 * l + 1], vals[4 * l + 2],
                                     vals[4 * l + 3]));
    const LineFrame<double> frame = make_line_frame(q);
    if (frame.is_degenerate())
      throw std::invalid_argument(
          "degenerate frame: the pairing form vanishes (Lambda = 0)");
    const double lambda = frame.lambda();
    std::cout << "Lambda = " << fmt(lambda) << "\n";
    const RefinementTable table = fs_constant_table(lambda, 32, f_refine);
    for (std::size_t k = 0; k < table.values.size(); ++k)
      std::cout << "  level " << k << ": C = " << fmt(table.values[k]) << "\n";
    const double c = table.richardson();
    const double closed = fs_constant_closed_form(lambda);
    std::cout << "extrapolated C = " << fmt(c) << "\n";
    std::cout << "closed form Lambda/(4 pi^3) = " << fmt(closed) << "\n";

    const auto lap = fundamental_shape_laplacian(frame);
    Rng rng(cfg.seed);
    double worst = 0.0;
    for (int s = 0; s < 20; ++s) {
      LinePoint<double> p;
      double norm = 0.0;
      for (int a = 0; a < 4; ++a) {
        p.lam[a] = rng.in(-2.0, 2.0);
        norm += p.lam[a] * p.lam[a];
      }
      p.t = rng.in(-2.0, 2.0);
      if (norm < 0.25) p.lam[0] += 1.0;
      worst = std::max(worst, fs_residual_at(lap, p));
    }
    CommandReport cr("fundamental", cfg);
    cr.add(make_check("harmonic-off-origin", "fundamental-solution",
                      "|SubLap(-1/gauge^4)| at 20 points", "0", worst, 1e-9));
    cr.add(make_check("constant-grid-stability", "fundamental-constant",
                      "relative change of C under one refinement", "<= 1e-4",
                      table.last_diff() / std::fabs(c), 1e-4));
    cr.add(make_check("constant-closed-form", "fundamental-constant", "extrapolated C",
                      "Lambda/(4 pi^3)", std::fabs(c - closed) / std::fabs(c), 1e-3));
    exit_code = finish_command(cr, report_path);
  });

  // ---- integrate ----
  auto* integrate = app.add_subcommand(
      "integrate", "density mass (n! det of the Hessian) over a ball or box");
  std::string i_fn, i_box, i_weight;
  double i_radius = 1.0;
  integrate->add_option("--fn", i_fn, "polynomial in x1..x4n, t")->required();
  integrate->add_option("--radius", i_radius, "gauge-ball radius (default domain)")
      ->check(CLI::PositiveNumber);
  integrate->add_option("--box", i_box, "comma-separated half-widths for a box domain");
  integrate->add_option("--weight", i_weight, "optional polynomial weight (ball only)");
  integrate->callback([&]() {
    const int nv = space_vars(cfg.n);
    const auto u = parse_polynomial<double>(i_fn, nv);
    double mass = 0.0;
    if (!i_box.empty()) {
      if (!i_weight.empty())
        throw std::invalid_argument("--weight is supported on ball domains only");
      const auto half = parse_doubles(i_box);
      if (static_cast<int>(half.size()) != nv)
        throw std::invalid_argument("--box needs " + std::to_string(nv) + " half-widths");
      std::vector<double> lo(nv), hi(nv);
      for (int i = 0; i < nv; ++i) {
        lo[i] = -half[i];
        hi[i] = half[i];
      }
      mass = density_integral_box(u, Box(lo, hi));
    } else {
      GroupPoint<double> center;
      center.x.assign(4 * cfg.n, 0.0);
      center.t = 0.0;
      const GaugeBall ball(center, i_radius);
      mass = i_weight.empty()
                 ? density_integral_ball(u, ball)
                 : weighted_density_integral_ball(
                       u, parse_polynomial<double>(i_weight, nv), ball);
    }
    std::cout << fmt(mass) << "\n";
  });

  // ---- cln ----
  auto* cln = app.add_subcommand(
      "cln", "mass / sup-norm estimate on nested gauge balls");
  std::vector<std::string> c_fns;
  int c_count = 20, c_k = 1;
  double c_inner = 1.0, c_outer = 2.0;
  cln->add_option("--fn", c_fns, "potentials (repeatable; default: random family)");
  cln->add_option("--count", c_count, "random potentials when --fn is absent")
      ->check(CLI::PositiveNumber);
  cln->add_option("--k", c_k, "wedge count per random check")->check(CLI::PositiveNumber);
  cln->add_option("--inner", c_inner, "inner ball radius")->check(CLI::PositiveNumber);
  cln->add_option("--outer", c_outer, "outer ball radius")->check(CLI::PositiveNumber);
  cln->callback([&]() {
    const int nv = space_vars(cfg.n);
    GroupPoint<double> center;
    center.x.assign(4 * cfg.n, 0.0);
    center.t = 0.0;
    const GaugeBall inner(center, c_inner), outer(center, c_outer);
    Rng rng(cfg.seed);
    CommandReport cr("cln", cfg);
    double worst_spread = 0.0, worst_ratio = 0.0;
    auto run_one = [&](const std::vector<Polynomial<double>>& us, const std::string& tag) {
      const ClnReport r = cln_check(us, inner, outer, rng);
      std::cout << tag << ": mass = " << fmt(r.mass) << ", bound = " << fmt(r.bound)
                << ", ratio = " << fmt(r.ratio) << ", scaling spread = "
                << fmt(r.family_spread) << "\n";
      worst_spread = std::max(worst_spread, r.family_spread);
      worst_ratio = std::max(worst_ratio, r.ratio);
    };
    if (!c_fns.empty()) {
      std::vector<Polynomial<double>> us;
      for (const auto& s : c_fns) us.push_back(parse_polynomial<double>(s, nv));
      run_one(us, "family");
    } else {
      for (int i = 0; i < c_count; ++i) {
        std::vector<Polynomial<double>> us;
        for (int j = 0; j < c_k; ++j) us.push_back(random_psh_quadratic(rng, cfg.n));
        run_one(us, "random " + std::to_string(i));
      }
    }
    std::cout << "max ratio (the estimate's constant for these balls): "
              << fmt(worst_ratio) << "\n";
    cr.add(make_check("scaling-invariance", "mass-sup-estimate",
                      "ratio drift under the scalar family {1,2,5}", "0 within 1e-10",
                      worst_spread, 1e-10));
    exit_code = finish_command(cr, report_path);
  });

  // ---- compare ----
  auto* compare = app.add_subcommand(
      "compare", "density-mass comparison under boundary equality and ordering");
  std::string cm_u, cm_v;
  double cm_radius = 1.0;
  int cm_samples = 200;
  compare->add_option("--u", cm_u, "polynomial u")->required();
  compare->add_option("--v", cm_v, "polynomial v")->required();
  compare->add_option("--radius", cm_radius, "gauge-ball radius")
      ->check(CLI::PositiveNumber);
  compare->add_option("--samples", cm_samples, "hypothesis sample count")
      ->check(CLI::PositiveNumber);
  compare->callback([&]() {
    const int nv = space_vars(cfg.n);
    const auto u = parse_polynomial<double>(cm_u, nv);
    const auto v = parse_polynomial<double>(cm_v, nv);
    GroupPoint<double> center;
    center.x.assign(4 * cfg.n, 0.0);
    center.t = 0.0;
    const GaugeBall ball(center, cm_radius);
    Rng rng(cfg.seed);
    const ComparisonReport r = comparison_check(u, v, ball, rng, cm_samples);
    std::cout << "mass(u) = " << fmt(r.mass_u) << "\nmass(v) = " << fmt(r.mass_v) << "\n";
    CommandReport cr("compare", cfg);
    cr.add(make_check("mass-ordering", "mass-comparison", "mass(u)", "<= mass(v)",
                      std::max(0.0, r.mass_u - r.mass_v) /
                          (1.0 + std::fabs(r.mass_v)),
                      1e-8));
    exit_code = finish_command(cr, report_path);
  });

  // ---- minprinciple ----
  auto* minp = app.add_subcommand(
      "minprinciple", "minimum of u - v on the closure vs the boundary");
  std::string mp_u, mp_v;
  double mp_radius = 1.0;
  int mp_samples = 300;
  minp->add_option("--u", mp_u, "polynomial u")->required();
  minp->add_option("--v", mp_v, "polynomial v")->required();
  minp->add_option("--radius", mp_radius, "gauge-ball radius")
      ->check(CLI::PositiveNumber);
  minp->add_option("--samples", mp_samples, "samples per region")
      ->check(CLI::PositiveNumber);
  minp->callback([&]() {
    const int nv = space_vars(cfg.n);
    const auto u = parse_polynomial<double>(mp_u, nv);
    const auto v = parse_polynomial<double>(mp_v, nv);
    GroupPoint<double> center;
    center.x.assign(4 * cfg.n, 0.0);
    center.t = 0.0;
    const GaugeBall ball(center, mp_radius);
    Rng rng(cfg.seed);
    const MinPrincipleReport r = min_principle_check(u, v, ball, rng, mp_samples,
                                                     mp_samples);
    std::cout << "min over closure  = " << fmt(r.closure_min)
              << "\nmin over boundary = " << fmt(r.boundary_min) << "\n";
    CommandReport cr("minprinciple", cfg);
    cr.add(make_check("boundary-attainment", "minimum-principle", "min_closure(u - v)",
                      ">= min_boundary(u - v)",
                      std::max(0.0, r.boundary_min - r.closure_min) /
                          (1.0 + std::fabs(r.boundary_min)),
                      1e-7));
    exit_code = finish_command(cr, report_path);
  });

  // ---- convergence ----
  auto* conv = app.add_subcommand(
      "convergence", "masses along two quadratic regularizations of a potential");
  std::string cv_fn;
  double cv_radius = 1.0;
  int cv_jmax = 0;
  conv->add_option("--fn", cv_fn, "polynomial in x1..x4n, t")->required();
  conv->add_option("--radius", cv_radius, "gauge-ball radius")
      ->check(CLI::PositiveNumber);
  conv->add_option("--jmax", cv_jmax, "table length (0 = default)");
  conv->callback([&]() {
    const int nv = space_vars(cfg.n);
    const auto u = parse_polynomial<double>(cv_fn, nv);
    GroupPoint<double> center;
    center.x.assign(4 * cfg.n, 0.0);
    center.t = 0.0;
    const GaugeBall ball(center, cv_radius);
    const MaConvergenceReport r =
        cv_jmax > 0 ? ma_convergence_check(u, ball, cv_jmax)
                    : ma_convergence_check(u, ball);
    std::cout << "j  |  mass(u + (1/j)|x|^2)  |  mass(u + (1/j^2)(|x|^2+1))\n";
    for (std::size_t j = 0; j < r.seq1.size(); ++j)
      std::cout << (j + 1) << "  |  " << fmt(r.seq1[j]) << "  |  " << fmt(r.seq2[j])
                << "\n";
    std::cout << "limit(seq 1) = " << fmt(r.limit1) << "\nlimit(seq 2) = "
              << fmt(r.limit2) << "\ndirect mass  = " << fmt(r.direct) << "\n";
    CommandReport cr("convergence", cfg);
    cr.add(make_check("cauchy-table", "density-convergence",
                      "gaps of both regularizing sequences", "nonincreasing",
                      r.cauchy ? 0.0 : 1.0, 0.0));
    cr.add(make_check("common-limit", "density-convergence",
                      "two extrapolated limits and the direct value",
                      "agree within 1e-6",
                      (r.limit_gap + std::fabs(r.limit1 - r.direct)) /
                          (1.0 + std::fabs(r.direct)),
                      1e-6));
    exit_code = finish_command(cr, report_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the message; --help exits 0
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "check aborted: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
