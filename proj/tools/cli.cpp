#include "cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "output_record.hpp"
#include "spectra/bounds.hpp"
#include "spectra/comparison.hpp"
#include "spectra/discrete_laplacian.hpp"
#include "spectra/errors.hpp"
#include "spectra/expression.hpp"
#include "spectra/model_spectra.hpp"
#include "spectra/transport.hpp"

namespace spectra::cli {

namespace {

constexpr const char* kFormatsHelp =
    "Output columns (CSV, one header line, a trailing provenance column on every row):\n"
    "  spectrum, solve1d        k,value,mult,exact\n"
    "  bound, transport --lipschitz  name,value,valid,reason\n"
    "  count                    lambda,value,kind\n"
    "  transport                x,T,derivative\n"
    "  profile                  v,value\n"
    "  trace                    t,value,partial,tail,lower_estimate\n"
    "  compare                  k,lhs,rhs,margin,ok\n"
    "  counterexample           n,sphere,sphere_exact,gaussian,strict\n"
    "  classify                 p,discrete,hilbert_schmidt,hyperbounded,scenario,warning\n"
    "Measures: gaussian:<rho> | exppower:<p> | nu:<p> | potential:<expr in x>\n"
    "Log-Sobolev constants use Ent(f^2) <= (2/L) int |grad f|^2.\n"
    "SPECTRA_GRID_N overrides the default grid size N=4000.\n"
    "Exit codes: 0 success, 2 validation error or bad usage, 3 comparison violations.\n";

constexpr const char* kLogSobolevNote = "log-Sobolev normalization Ent(f^2) <= (2/L) int |grad f|^2";

std::string num(double v) { return format_number(v); }

const char* model_provenance(const std::string& model) {
  return model == "gaussian" ? "Gaussian space: Hermite spectrum rho*l with multiplicity C(n-1+l,l)"
                             : "round sphere with Ric = rho: spherical harmonic spectrum";
}

void warn_outside_validity(const MeasureSpec1D& spec, std::ostream& err) {
  if (const auto* ep = std::get_if<ExpPowerFamily>(&spec.family); ep && ep->p == 1.0) {
    err << "warning: exppower:1 is outside validity; its weighted Laplacian does not have discrete spectrum, "
           "so the computed values are discretization artifacts\n";
  }
}

void add_spectrum_rows(OutputRecord& rec, const Spectrum& s, const std::string& provenance) {
  rec.columns = {"k", "value", "mult", "exact"};
  std::uint64_t k = 1;
  for (const auto& level : s.entries) {
    rec.add_row({static_cast<std::int64_t>(k), level.value, static_cast<std::int64_t>(level.mult), s.exact},
                provenance);
    k += level.mult;
  }
}

Cell bound_value(const BoundReport& r) {
  switch (r.marker) {
    case BoundMarker::unbounded: return std::string("unbounded");
    case BoundMarker::empty: return std::string("empty");
    case BoundMarker::number: break;
  }
  return r.value;
}

std::string bound_reason(const BoundReport& r) {
  if (!r.valid) return r.reason;
  std::string out;
  for (const auto& n : r.notes) out += (out.empty() ? "" : "; ") + n;
  return out;
}

void set_bound_columns(OutputRecord& rec) { rec.columns = {"name", "value", "valid", "reason"}; }

struct GridFlags {
  std::optional<double> a, b;
  double radius = 0.0;
  std::optional<std::size_t> N;
};

void add_grid_flags(CLI::App* sub, GridFlags& g) {
  sub->add_option("--a", g.a, "left end of the computational interval");
  sub->add_option("--b", g.b, "right end of the computational interval");
  sub->add_option("--radius", g.radius, "symmetric interval [-radius, radius] (0 picks the measure bulk)");
  sub->add_option("--N", g.N, "interior grid points (default SPECTRA_GRID_N or 4000)");
}

Grid1D resolve_grid(const MeasureSpec1D& spec, const GridFlags& g, OutputRecord& rec) {
  const std::size_t N = g.N.value_or(default_grid_size());
  require(g.a.has_value() == g.b.has_value(), "--a and --b must be given together");
  Grid1D grid = (g.a && g.b) ? make_grid(*g.a, *g.b, N) : default_grid(spec, N, g.radius);
  rec.inputs["a"] = num(grid.a);
  rec.inputs["b"] = num(grid.b);
  rec.inputs["N"] = std::to_string(grid.N);
  return grid;
}

std::vector<double> sample_points(const std::vector<double>& listed, std::optional<double> lo,
                                  std::optional<double> hi, std::size_t points) {
  if (!listed.empty()) return listed;
  require(lo && hi, "give either explicit points or a range with its endpoints");
  require(*lo < *hi, "range must satisfy min < max");
  require(points >= 2, "range needs at least 2 points");
  std::vector<double> out(points);
  for (std::size_t i = 0; i < points; ++i) {
    out[i] = *lo + (*hi - *lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return out;
}

std::string join_numbers(const std::vector<double>& v) {
  std::string out;
  for (double x : v) out += (out.empty() ? "" : " ") + num(x);
  return out;
}

}  // namespace

std::size_t default_grid_size() {
  const char* env = std::getenv("SPECTRA_GRID_N");
  if (env == nullptr || *env == '\0') return 4000;
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(env, &end, 10);
  require(errno == 0 && *end == '\0' && v >= 3 && v <= 100000000, "SPECTRA_GRID_N must be an integer in [3, 1e8]");
  return static_cast<std::size_t>(v);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral comparison toolkit for weighted one-dimensional spaces and model spectra", "spectra"};
  app.footer(kFormatsHelp);
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string format = "csv";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  OutputRecord rec;
  std::function<int()> action;

  // spectrum
  std::string sp_model;
  int sp_n = 1;
  double sp_rho = 1.0;
  std::uint64_t sp_kmax = 10;
  auto* spectrum = app.add_subcommand("spectrum", "closed-form model spectrum (columns k,value,mult,exact)");
  spectrum->add_option("--model", sp_model, "gaussian or sphere")->required()->check(CLI::IsMember({"gaussian", "sphere"}));
  spectrum->add_option("--n", sp_n, "dimension")->capture_default_str();
  spectrum->add_option("--rho", sp_rho, "curvature scale")->capture_default_str();
  spectrum->add_option("--kmax", sp_kmax, "number of eigenvalues counted with multiplicity")->capture_default_str();
  spectrum->callback([&] {
    action = [&] {
      rec.inputs = {{"model", sp_model}, {"n", std::to_string(sp_n)}, {"rho", num(sp_rho)}, {"kmax", std::to_string(sp_kmax)}};
      const ModelParams params{sp_n, sp_rho, std::nullopt};
      const Spectrum s = sp_model == "gaussian" ? gaussian_spectrum(params, sp_kmax) : sphere_spectrum(params, sp_kmax);
      if (s.truncation_note) err << "note: " << *s.truncation_note << "\n";
      add_spectrum_rows(rec, s, model_provenance(sp_model));
      return kExitOk;
    };
  });

  // count
  std::string ct_model;
  std::string ct_measure;
  int ct_n = 1;
  double ct_rho = 1.0;
  double ct_p = 2.0;
  std::vector<double> ct_lambda;
  GridFlags ct_grid;
  auto* count = app.add_subcommand("count", "eigenvalue counting function N(lambda) (columns lambda,value,kind)");
  count->add_option("--model", ct_model, "gaussian, sphere, sphere-lower or nu (Weyl law)")
      ->check(CLI::IsMember({"gaussian", "sphere", "sphere-lower", "nu"}));
  count->add_option("--measure", ct_measure, "discretized count for a 1-D measure instead of a model");
  count->add_option("--n", ct_n, "dimension")->capture_default_str();
  count->add_option("--rho", ct_rho, "curvature scale")->capture_default_str();
  count->add_option("--p", ct_p, "exponent for --model nu")->capture_default_str();
  count->add_option("--lambda", ct_lambda, "one or more thresholds")->required();
  add_grid_flags(count, ct_grid);
  count->callback([&] {
    action = [&] {
      rec.columns = {"lambda", "value", "kind"};
      rec.inputs["lambda"] = join_numbers(ct_lambda);
      require(ct_model.empty() != ct_measure.empty(), "give exactly one of --model or --measure");
      if (!ct_measure.empty()) {
        rec.inputs["measure"] = ct_measure;
        const MeasureSpec1D spec = parse_measure(ct_measure);
        warn_outside_validity(spec, err);
        const Grid1D grid = resolve_grid(spec, ct_grid, rec);
        const PotentialGrid W = h_transform_potential(spec, grid);
        const Tridiagonal T = schrodinger_matrix(W);
        for (double lam : ct_lambda) {
          const auto c = sturm_count(T, std::nextafter(lam, std::numeric_limits<double>::infinity()));
          rec.add_row({lam, static_cast<double>(c), std::string("discretized")},
                      "Dirichlet finite differences for -f'' + W f with W = V'^2/4 - V''/2");
          rec.add_row({lam, weyl_phase_volume_1d(W, lam), std::string("phase_volume")},
                      "Weyl phase-space volume (1/pi) int sqrt((lambda - W)_+) dx");
        }
        return kExitOk;
      }
      rec.inputs["model"] = ct_model;
      rec.inputs["n"] = std::to_string(ct_n);
      if (ct_model == "nu") rec.inputs["p"] = num(ct_p);
      else rec.inputs["rho"] = num(ct_rho);
      for (double lam : ct_lambda) {
        CountingResult r;
        const char* prov = "";
        if (ct_model == "gaussian") {
          r = gaussian_count({ct_n, ct_rho, std::nullopt}, lam);
          prov = "Gaussian counting identity N(lambda) = C(n + floor(lambda/rho), n)";
        } else if (ct_model == "sphere") {
          r = sphere_count({ct_n, ct_rho, std::nullopt}, lam);
          prov = "spherical harmonics dimension count on the rescaled sphere";
        } else if (ct_model == "sphere-lower") {
          r = sphere_count_lower(ct_n, lam);
          prov = "canonical sphere lower count for lambda >= n^2";
        } else {
          r = nu_p_weyl_count({ct_n, 1.0, ct_p}, lam);
          prov = "Weyl law leading term for the product measure nu_p";
        }
        rec.add_row({lam, r.value, std::string(to_string(r.kind))}, prov);
      }
      return kExitOk;
    };
  });

  // solve1d
  std::string sv_measure;
  std::string sv_method = "schrodinger";
  std::size_t sv_kmax = 10;
  GridFlags sv_grid;
  auto* solve1d = app.add_subcommand("solve1d", "finite-difference eigenvalues of a 1-D weighted Laplacian (columns k,value,mult,exact)");
  solve1d->add_option("--measure", sv_measure, "gaussian:<rho> | exppower:<p> | nu:<p> | potential:<expr>")->required();
  solve1d->add_option("--method", sv_method, "schrodinger (Dirichlet, h-transform) or weighted (Neumann)")
      ->check(CLI::IsMember({"schrodinger", "weighted"}))->capture_default_str();
  solve1d->add_option("--kmax", sv_kmax, "number of eigenvalues")->capture_default_str();
  add_grid_flags(solve1d, sv_grid);
  solve1d->callback([&] {
    action = [&] {
      rec.inputs = {{"measure", sv_measure}, {"method", sv_method}, {"kmax", std::to_string(sv_kmax)}};
      const MeasureSpec1D spec = parse_measure(sv_measure);
      warn_outside_validity(spec, err);
      const Grid1D grid = resolve_grid(spec, sv_grid, rec);
      if (sv_kmax > grid.N / 100) err << "warning: kmax exceeds N/100; high eigenvalues lose accuracy\n";
      Spectrum s;
      const char* prov;
      if (sv_method == "schrodinger") {
        s = solve_schrodinger_dirichlet(h_transform_potential(spec, grid), sv_kmax);
        prov = "Doob h-transform -f'' + W f, Dirichlet finite differences, Sturm bisection";
      } else {
        s = solve_weighted_neumann(spec, grid, sv_kmax);
        prov = "discretized weighted Rayleigh quotient min-max, Neumann ends, Sturm bisection";
      }
      if (s.truncation_note) err << "note: " << *s.truncation_note << "\n";
      add_spectrum_rows(rec, s, prov);
      return kExitOk;
    };
  });

  // transport
  std::string tr_source, tr_target, tr_direction = "increasing";
  std::vector<double> tr_x;
  std::optional<double> tr_xmin, tr_xmax;
  std::size_t tr_points = 11;
  bool tr_lipschitz = false;
  auto* transport = app.add_subcommand("transport", "monotone map T = F2^-1 o F1 (columns x,T,derivative)");
  transport->add_option("--source", tr_source, "source measure")->required();
  transport->add_option("--target", tr_target, "target measure")->required();
  transport->add_option("--direction", tr_direction, "increasing or decreasing")
      ->check(CLI::IsMember({"increasing", "decreasing"}))->capture_default_str();
  transport->add_option("--x", tr_x, "evaluation points");
  transport->add_option("--xmin", tr_xmin, "range start");
  transport->add_option("--xmax", tr_xmax, "range end");
  transport->add_option("--points", tr_points, "range size")->capture_default_str();
  transport->add_flag("--lipschitz", tr_lipschitz, "report the optimal Lipschitz constant instead (name,value,valid,reason)");
  transport->callback([&] {
    action = [&] {
      rec.inputs = {{"source", tr_source}, {"target", tr_target}, {"direction", tr_direction}};
      const MeasureSpec1D src = parse_measure(tr_source);
      const MeasureSpec1D tgt = parse_measure(tr_target);
      const Direction dir = tr_direction == "increasing" ? Direction::increasing : Direction::decreasing;
      if (tr_lipschitz) {
        set_bound_columns(rec);
        const LipschitzResult lip = lipschitz_constant(src, tgt, dir);
        rec.inputs["argmax_v"] = num(lip.argmax);
        Cell value = lip.unbounded ? Cell(std::string("unbounded")) : Cell(lip.value);
        rec.add_row({std::string("lipschitz"), value, !lip.unbounded, lip.note},
                    "optimal Lipschitz constant of the monotone map as sup of flat profile ratios");
        return kExitOk;
      }
      rec.columns = {"x", "T", "derivative"};
      const TransportMap1D map{src, tgt, dir, std::nullopt};
      for (double x : sample_points(tr_x, tr_xmin, tr_xmax, tr_points)) {
        rec.add_row({x, map(x), map.derivative(x)}, "monotone rearrangement T = F2^-1 o F1, T' = f1 / f2(T)");
      }
      return kExitOk;
    };
  });

  // profile
  std::string pr_measure;
  std::vector<double> pr_v;
  std::size_t pr_points = 11;
  auto* profile = app.add_subcommand("profile", "flat isoperimetric profile f o F^-1 (columns v,value)");
  profile->add_option("--measure", pr_measure, "measure")->required();
  profile->add_option("--v", pr_v, "levels in (0,1)");
  profile->add_option("--points", pr_points, "equispaced interior levels when --v is absent")->capture_default_str();
  profile->callback([&] {
    action = [&] {
      rec.inputs = {{"measure", pr_measure}};
      rec.columns = {"v", "value"};
      const MeasureSpec1D spec = parse_measure(pr_measure);
      std::vector<double> levels = pr_v;
      if (levels.empty()) {
        require(pr_points >= 1, "--points must be positive");
        for (std::size_t i = 1; i <= pr_points; ++i) levels.push_back(static_cast<double>(i) / static_cast<double>(pr_points + 1));
      }
      for (double v : levels) rec.add_row({v, flat_profile(spec, v)}, "flat isoperimetric profile f(F^-1(v))");
      return kExitOk;
    };
  });

  // bound
  std::string bd_name;
  double bd_rho = 0.0, bd_lsob = 1.0, bd_B = 0.0, bd_m2 = 0.0, bd_t = 1.0, bd_lambda = 0.0, bd_Z = 1.0, bd_p = 2.0;
  double bd_t0 = 1.0, bd_q0 = 4.0, bd_beta0 = 0.0;
  int bd_n = 3;
  std::uint64_t bd_k = 1;
  auto* bound = app.add_subcommand("bound", "closed-form spectral bounds (columns name,value,valid,reason)");
  bound->add_option("--name", bd_name,
                    "harnack, trace-rate, feasible-time, z-upper, wang, trace-lambda, clr-count, clr-compare, "
                    "clr-threshold, hyper, hyper-from-time, lp-ball, gaussian-lambda")
      ->required()
      ->check(CLI::IsMember({"harnack", "trace-rate", "feasible-time", "z-upper", "wang", "trace-lambda", "clr-count",
                             "clr-compare", "clr-threshold", "hyper", "hyper-from-time", "lp-ball", "gaussian-lambda"}));
  bound->add_option("--rho", bd_rho, "curvature lower bound CD(rho, inf)")->capture_default_str();
  bound->add_option("--lsob", bd_lsob, "log-Sobolev constant L, normalization Ent(f^2) <= (2/L) int |grad f|^2")->capture_default_str();
  bound->add_option("--B", bd_B, "log-Sobolev defect")->capture_default_str();
  bound->add_option("--m2", bd_m2, "second moment int d(x,x0)^2")->capture_default_str();
  bound->add_option("--t", bd_t, "time")->capture_default_str();
  bound->add_option("--n", bd_n, "dimension")->capture_default_str();
  bound->add_option("--k", bd_k, "eigenvalue index")->capture_default_str();
  bound->add_option("--lambda", bd_lambda, "spectral threshold")->capture_default_str();
  bound->add_option("--Z", bd_Z, "heat trace value at --t")->capture_default_str();
  bound->add_option("--p", bd_p, "starting exponent for hyperboundedness")->capture_default_str();
  bound->add_option("--t0", bd_t0, "time of a single hyperbounded estimate")->capture_default_str();
  bound->add_option("--q0", bd_q0, "target exponent of that estimate")->capture_default_str();
  bound->add_option("--beta0", bd_beta0, "log of its operator norm")->capture_default_str();
  bound->callback([&] {
    action = [&] {
      set_bound_columns(rec);
      rec.inputs["name"] = bd_name;
      const CurvatureData curv{bd_rho, bd_lsob, bd_B, bd_m2};
      auto scalar = [&](const std::string& name, double value, const char* prov) {
        rec.add_row({name, value, true, std::string()}, prov);
      };
      auto report = [&](const BoundReport& r, const char* prov) {
        rec.add_row({r.name, bound_value(r), r.valid, bound_reason(r)}, prov);
        for (const auto& [key, value] : r.details) {
          rec.add_row({r.name + "." + key, value, r.valid, std::string()}, prov);
        }
      };
      auto curvature_inputs = [&] {
        rec.inputs["rho"] = num(bd_rho);
        rec.inputs["lsob"] = num(bd_lsob);
        rec.inputs["m2"] = num(bd_m2);
        rec.inputs["normalization"] = kLogSobolevNote;
        err << "note: " << kLogSobolevNote << "\n";
      };
      if (bd_name == "harnack") {
        rec.inputs["rho"] = num(bd_rho);
        rec.inputs["t"] = num(bd_t);
        scalar("harnack", harnack_factor(bd_rho, bd_t), "Harnack factor h(rho,t) = 2 rho t / (exp(2 rho t) - 1)");
      } else if (bd_name == "trace-rate") {
        rec.inputs["rho"] = num(bd_rho);
        rec.inputs["t"] = num(bd_t);
        scalar("trace-rate", trace_rate(bd_rho, bd_t), "heat trace exponent rate s(t) = h(rho,t/2)/(t/2)");
      } else if (bd_name == "feasible-time") {
        curvature_inputs();
        const auto t = feasible_time_threshold(bd_rho, bd_lsob);
        rec.add_row({std::string("feasible-time"), t ? Cell(*t) : Cell(std::string("empty")), t.has_value(),
                     t ? std::string() : std::string("no t satisfies 2 s(t) < L")},
                    "smallest t with 2 s(t) < L in the heat trace estimate");
      } else if (bd_name == "z-upper") {
        curvature_inputs();
        rec.inputs["t"] = num(bd_t);
        report(z_upper_bound(curv, bd_t), "heat trace upper bound from Wang's Harnack inequality and log-Sobolev");
      } else if (bd_name == "wang") {
        curvature_inputs();
        rec.inputs["k"] = std::to_string(bd_k);
        report(eigen_lower_bound_wang(curv, bd_k), "dimension-free eigenvalue lower bound optimized over t");
      } else if (bd_name == "trace-lambda") {
        rec.inputs["k"] = std::to_string(bd_k);
        rec.inputs["Z"] = num(bd_Z);
        rec.inputs["t"] = num(bd_t);
        scalar("trace-lambda", eigen_lower_from_trace(bd_k, bd_Z, bd_t), "lambda_k >= log(k / Z(t)) / t");
      } else if (bd_name == "clr-count") {
        rec.inputs["n"] = std::to_string(bd_n);
        rec.inputs["rho"] = num(bd_rho);
        rec.inputs["lambda"] = num(bd_lambda);
        report(clr_count_bound(bd_n, bd_rho, bd_lambda), "CLR count bound through the sharp Sobolev inequality under Ric >= rho");
      } else if (bd_name == "clr-compare") {
        rec.inputs["n"] = std::to_string(bd_n);
        rec.inputs["k"] = std::to_string(bd_k);
        report(clr_eigen_comparison(bd_n, bd_k), "dimension-free comparison lambda_k >= (1 - 2/n)/(5e) lambda_k(S^n)");
      } else if (bd_name == "clr-threshold") {
        rec.inputs["n"] = std::to_string(bd_n);
        scalar("clr-threshold", clr_comparison_threshold(bd_n), "index threshold 6 (5e)^{n/2} of the CLR comparison");
      } else if (bd_name == "hyper") {
        rec.inputs = {{"name", bd_name}, {"lsob", num(bd_lsob)}, {"B", num(bd_B)}, {"p", num(bd_p)}, {"t", num(bd_t)}};
        const HyperParams h = hyper_q_beta(bd_lsob, bd_B, bd_p, bd_t);
        scalar("q", h.q, "hyperboundedness exponent q(t) - 1 = (p - 1) exp(2 t L)");
        scalar("beta", h.beta, "hyperboundedness norm exponent from the defect B");
      } else if (bd_name == "hyper-from-time") {
        rec.inputs = {{"name", bd_name}, {"t0", num(bd_t0)}, {"q0", num(bd_q0)}, {"beta0", num(bd_beta0)}};
        const HyperConstants c = hyper_params_from_single_time(bd_t0, bd_q0, bd_beta0);
        scalar("L", c.L, "defective log-Sobolev constants from one hyperbounded time");
        scalar("B", c.B, "defective log-Sobolev constants from one hyperbounded time");
      } else if (bd_name == "lp-ball") {
        rec.inputs["n"] = std::to_string(bd_n);
        rec.inputs["k"] = std::to_string(bd_k);
        scalar("lp-ball", lp_ball_eigen_bound(bd_n, bd_k), "uniform l_p ball eigenvalue lower bound lambda_k(gamma^n)/392");
      } else {
        rec.inputs["n"] = std::to_string(bd_n);
        rec.inputs["k"] = std::to_string(bd_k);
        scalar("gaussian-lambda", gaussian_lambda_k(bd_n, bd_k), "k-th eigenvalue of the standard Gaussian space");
      }
      return kExitOk;
    };
  });

  // trace
  std::string th_model = "gaussian", th_measure;
  int th_n = 1;
  double th_rho = 1.0;
  std::vector<double> th_t;
  std::uint64_t th_kmax = 1;
  GridFlags th_grid;
  auto* trace = app.add_subcommand("trace", "heat trace Z(t) = sum exp(-t lambda_k) (columns t,value,partial,tail,lower_estimate)");
  trace->add_option("--model", th_model, "gaussian or sphere")->check(CLI::IsMember({"gaussian", "sphere"}))->capture_default_str();
  trace->add_option("--measure", th_measure, "use a discretized 1-D spectrum instead (lower estimate)");
  trace->add_option("--n", th_n, "dimension")->capture_default_str();
  trace->add_option("--rho", th_rho, "curvature scale")->capture_default_str();
  trace->add_option("--kmax", th_kmax, "eigenvalues summed explicitly; model tails are summed in closed form")->capture_default_str();
  trace->add_option("--t", th_t, "times")->required();
  add_grid_flags(trace, th_grid);
  trace->callback([&] {
    action = [&] {
      rec.columns = {"t", "value", "partial", "tail", "lower_estimate"};
      rec.inputs = {{"t", join_numbers(th_t)}, {"kmax", std::to_string(th_kmax)}};
      Spectrum s;
      const char* prov;
      if (!th_measure.empty()) {
        rec.inputs["measure"] = th_measure;
        const MeasureSpec1D spec = parse_measure(th_measure);
        warn_outside_validity(spec, err);
        s = solve_weighted_neumann(spec, resolve_grid(spec, th_grid, rec), th_kmax);
        prov = "heat trace of the discretized spectrum (truncated sum)";
      } else {
        rec.inputs["model"] = th_model;
        rec.inputs["n"] = std::to_string(th_n);
        rec.inputs["rho"] = num(th_rho);
        const ModelParams params{th_n, th_rho, std::nullopt};
        s = th_model == "gaussian" ? gaussian_spectrum(params, th_kmax) : sphere_spectrum(params, th_kmax);
        prov = th_model == "gaussian" ? "Gaussian heat trace summed over the Hermite spectrum"
                                      : "sphere heat trace summed over spherical harmonic levels";
      }
      for (double t : th_t) {
        const HeatTrace h = heat_trace(s, t);
        rec.add_row({t, h.value, h.partial, h.tail.value_or(0.0), h.truncated_lower_estimate}, prov);
      }
      return kExitOk;
    };
  });

  // compare
  std::string cp_source, cp_target;
  std::optional<double> cp_L;
  std::size_t cp_kmax = kDefaultComparisonK;
  double cp_tol = kDefaultComparisonTol;
  double cp_radius = 0.0;
  std::optional<std::size_t> cp_N;
  auto* compare = app.add_subcommand("compare", "contraction check lambda_k(target) >= lambda_k(source)/L^2 (columns k,lhs,rhs,margin,ok)");
  compare->add_option("--source", cp_source, "source measure")->required();
  compare->add_option("--target", cp_target, "target measure")->required();
  compare->add_option("--L", cp_L, "Lipschitz constant of a map source -> target (default: from profile ratios)");
  compare->add_option("--kmax", cp_kmax, "eigenvalues compared")->capture_default_str();
  compare->add_option("--tol", cp_tol, "relative tolerance")->capture_default_str();
  compare->add_option("--radius", cp_radius, "common interval [-radius, radius] (0 covers both bulks)");
  compare->add_option("--N", cp_N, "interior grid points (default SPECTRA_GRID_N or 4000)");
  compare->callback([&] {
    action = [&] {
      rec.columns = {"k", "lhs", "rhs", "margin", "ok"};
      const SolverOptions opts{cp_N.value_or(default_grid_size()), cp_radius};
      rec.inputs = {{"source", cp_source}, {"target", cp_target}, {"kmax", std::to_string(cp_kmax)},
                    {"tol", num(cp_tol)}, {"N", std::to_string(opts.N)}};
      const MeasureSpec1D src = parse_measure(cp_source);
      const MeasureSpec1D tgt = parse_measure(cp_target);
      warn_outside_validity(src, err);
      warn_outside_validity(tgt, err);
      const ComparisonReport r = cp_L ? check_contraction_ordering(src, tgt, *cp_L, cp_kmax, cp_tol, opts)
                                      : check_profile_ordering(src, tgt, cp_kmax, cp_tol, opts);
      rec.inputs["L"] = r.lipschitz ? num(*r.lipschitz) : std::string("unbounded");
      for (const auto& w : r.warnings) err << "warning: " << w << "\n";
      for (const auto& row : r.rows) {
        rec.add_row({static_cast<std::int64_t>(row.k), row.lhs, row.rhs, row.margin, row.ok},
                    "contraction principle: an L-Lipschitz push-forward gives lambda_k(target) >= lambda_k(source)/L^2");
      }
      if (!r.passed) {
        err << "comparison failed: " << r.violations.size() << " violation(s)\n";
        return kExitComparisonFailed;
      }
      return kExitOk;
    };
  });

  // counterexample
  std::vector<int> ce_n;
  auto* counterexample = app.add_subcommand("counterexample", "sphere vs Gaussian lambda_{n+2} (columns n,sphere,sphere_exact,gaussian,strict)");
  counterexample->add_option("--n", ce_n, "dimensions >= 3 (default 3..10)");
  counterexample->callback([&] {
    action = [&] {
      rec.columns = {"n", "sphere", "sphere_exact", "gaussian", "strict"};
      if (ce_n.empty()) for (int n = 3; n <= 10; ++n) ce_n.push_back(n);
      std::string listed;
      for (int n : ce_n) listed += (listed.empty() ? "" : " ") + std::to_string(n);
      rec.inputs["n"] = listed;
      for (int n : ce_n) {
        const auto [sphere, gauss] = sphere_gaussian_counterexample(n);
        rec.add_row({static_cast<std::int64_t>(n), sphere, std::to_string(n) + "/" + std::to_string(n - 1), gauss, sphere < gauss},
                    "lambda_{n+2} of S^n with Ric = 1 equals n/(n-1), below the Gaussian value 2");
      }
      return kExitOk;
    };
  });

  // classify
  std::optional<double> cl_p;
  bool cl_discrete = false, cl_hs = false, cl_hyper = false;
  auto* classify = app.add_subcommand("classify", "semigroup trichotomy scenario (columns p,discrete,hilbert_schmidt,hyperbounded,scenario,warning)");
  classify->add_option("--p", cl_p, "exponent of exp(-|x|^p/p); inf allowed");
  classify->add_flag("--discrete", cl_discrete, "spectrum is discrete");
  classify->add_flag("--hs", cl_hs, "semigroup is eventually Hilbert-Schmidt");
  classify->add_flag("--hyper", cl_hyper, "semigroup is eventually hyperbounded");
  classify->callback([&] {
    action = [&] {
      rec.columns = {"p", "discrete", "hilbert_schmidt", "hyperbounded", "scenario", "warning"};
      TrichotomyFlags flags{cl_discrete, cl_hs, cl_hyper};
      Cell p_cell = std::string("");
      if (cl_p) {
        require(!(cl_discrete || cl_hs || cl_hyper), "--p derives the flags; do not combine it with them");
        flags = exp_power_trichotomy_flags(*cl_p);
        p_cell = *cl_p;
        rec.inputs["p"] = num(*cl_p);
      } else {
        rec.inputs = {{"discrete", cl_discrete ? "true" : "false"}, {"hs", cl_hs ? "true" : "false"},
                      {"hyper", cl_hyper ? "true" : "false"}};
      }
      const TrichotomyResult r = classify_trichotomy(flags.discrete, flags.hilbert_schmidt, flags.hyperbounded);
      if (r.warning) err << "warning: " << *r.warning << "\n";
      rec.add_row({p_cell, flags.discrete, flags.hilbert_schmidt, flags.hyperbounded,
                   static_cast<std::int64_t>(r.scenario), r.warning.value_or("")},
                  "trichotomy of heat semigroups: not discrete / discrete but not hyperbounded / hyperbounded");
      return kExitOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const auto subs = app.get_subcommands();
    err << "error: " << e.what() << "\n\n" << (subs.empty() ? app.help() : subs.front()->help());
    return kExitValidation;
  }

  try {
    rec.command = app.get_subcommands().front()->get_name();
    const int code = action();
    if (format == "json") write_json(out, rec);
    else write_csv(out, rec);
    return code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace spectra::cli
