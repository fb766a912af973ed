#include <CLI11.hpp>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cauchygeom/errors.hpp"
#include "cauchygeom/mixture.hpp"
#include "cauchygeom/monte_carlo.hpp"
#include "cauchygeom/quadrature.hpp"
#include "cauchygeom/verify.hpp"

namespace cg = cauchygeom;

namespace {

struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;
};

std::vector<double> split_doubles(const std::string& s, char sep) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw cg::ParamError("could not parse number '" + item + "'");
    }
    if (pos != item.size()) throw cg::ParamError("could not parse number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

cg::CauchyMixtureFamily parse_family(const std::string& raw) {
  const std::vector<double> v = split_doubles(raw, ',');
  if (v.size() != 4) throw cg::ParamError("--family expects l0,s0,l1,s1");
  return cg::CauchyMixtureFamily(cg::CauchyParam(v[0], v[1]), cg::CauchyParam(v[2], v[3]));
}

GridSpec parse_grid(const std::string& raw) {
  const std::vector<double> v = split_doubles(raw, ':');
  if (v.size() != 3) throw cg::ParamError("--grid expects start:stop:steps");
  GridSpec g;
  g.start = v[0];
  g.stop = v[1];
  g.steps = static_cast<int>(v[2]);
  if (g.steps < 2 || static_cast<double>(g.steps) != v[2])
    throw cg::ParamError("--grid steps must be an integer >= 2");
  if (!(g.start > 0.0 && g.stop < 1.0 && g.start <= g.stop))
    throw cg::ParamError("--grid must satisfy 0 < start <= stop < 1");
  return g;
}

std::vector<double> grid_points(const GridSpec& g) {
  std::vector<double> pts(g.steps);
  for (int i = 0; i < g.steps; ++i)
    pts[i] = g.start + (g.stop - g.start) * static_cast<double>(i) /
                           static_cast<double>(g.steps - 1);
  return pts;
}

void require_open_theta(double theta, const char* flag) {
  if (!(theta > 0.0 && theta < 1.0))
    throw cg::ParamError(std::string(flag) + " must lie in the open interval (0,1)");
}

// Writes to --out or stdout; file output is byte-identical to stream output.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw cg::IoError("could not open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    if (file_.is_open()) {
      file_.flush();
      if (!file_) throw cg::IoError("failed writing output file");
    }
  }

 private:
  std::ofstream file_;
};

int run_table(const cg::CauchyMixtureFamily& fam, const GridSpec& grid,
              const std::string& out_path) {
  OutputTarget out(out_path);
  std::ostream& os = out.stream();
  os << "theta,F,eta,d2F,entropy,dual\n";
  for (double th : grid_points(grid)) {
    os << cg::format_value(th) << ',' << cg::format_value(fam.negentropy(th)) << ','
       << cg::format_value(fam.eta(th)) << ',' << cg::format_value(fam.metric(th)) << ','
       << cg::format_value(fam.entropy(th)) << ','
       << cg::format_value(fam.dual_value_in_theta(th)) << '\n';
  }
  out.finish();
  return 0;
}

int run_verify(const std::optional<std::string>& family_raw, double oracle_tol) {
  std::vector<cg::CauchyMixtureFamily> fams;
  if (family_raw)
    fams.push_back(parse_family(*family_raw));
  else
    fams = cg::default_verify_families();
  bool ok = true;
  for (const auto& fam : fams) {
    const auto results = cg::verify_family(fam, oracle_tol);
    cg::print_report(std::cout, results);
    ok = ok && cg::all_passed(results);
  }
  std::cout << (ok ? "verify: all checks passed\n" : "verify: FAILURES above\n");
  return ok ? 0 : 1;
}

int run_oracle_compare(const cg::CauchyMixtureFamily& fam, const GridSpec& grid, double theta2,
                       const std::string& out_path, std::optional<std::uint64_t> seed,
                       std::uint64_t mc_samples, double oracle_tol) {
  cg::QuadratureSpec spec = cg::QuadratureSpec::for_family(fam);
  spec.abs_tol = oracle_tol;
  OutputTarget out(out_path);
  std::ostream& os = out.stream();
  os << "theta1,theta2,kl_closed,kl_quadrature,abs_gap_quadrature";
  if (seed) os << ",kl_mc,mc_std_error,abs_gap_mc";
  os << '\n';
  for (double t1 : grid_points(grid)) {
    const double closed = fam.kl(t1, theta2);
    const double quad = cg::numeric_kl([&](double x) { return fam.pdf(t1, x); },
                                       [&](double x) { return fam.pdf(theta2, x); }, spec);
    os << cg::format_value(t1) << ',' << cg::format_value(theta2) << ','
       << cg::format_value(closed) << ',' << cg::format_value(quad) << ','
       << cg::format_value(std::abs(closed - quad));
    if (seed) {
      const cg::McEstimate est =
          cg::mc_kl_between_mixtures(fam, t1, theta2, cg::McSpec{mc_samples, *seed});
      os << ',' << cg::format_value(est.mean) << ',' << cg::format_value(est.std_error) << ','
         << cg::format_value(std::abs(closed - est.mean));
    }
    os << '\n';
  }
  out.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form dually flat geometry of two-component Cauchy mixtures"};
  app.require_subcommand(1);

  std::string family_raw;
  std::optional<std::string> family_opt;
  double theta = 0.5, theta1 = 0.0, theta2 = 0.5;
  std::string grid_raw = "0.01:0.99:99";
  std::string out_path;
  double tol = 1e-10;
  std::optional<std::uint64_t> seed;
  std::uint64_t mc_samples = 1'000'000;

  auto* c_entropy = app.add_subcommand("entropy", "differential entropy h[m_theta]");
  c_entropy->add_option("--family", family_raw, "l0,s0,l1,s1")->required();
  c_entropy->add_option("--theta", theta, "mixture weight in (0,1)")->required();

  auto* c_kl = app.add_subcommand("kl", "KL divergence between two mixtures of the family");
  auto* c_js = app.add_subcommand("js", "Jensen-Shannon divergence between two mixtures");
  auto* c_jeffreys = app.add_subcommand("jeffreys", "Jeffreys divergence between two mixtures");
  for (auto* cmd : {c_kl, c_js, c_jeffreys}) {
    cmd->add_option("--family", family_raw, "l0,s0,l1,s1")->required();
    cmd->add_option("--theta1", theta1, "first mixture weight in (0,1)")->required();
    cmd->add_option("--theta2", theta2, "second mixture weight in (0,1)")->required();
  }

  auto* c_table = app.add_subcommand(
      "table", "CSV of theta, F, eta, F'', entropy and the dual potential over a grid");
  c_table->add_option("--family", family_raw, "l0,s0,l1,s1")->required();
  c_table->add_option("--grid", grid_raw, "start:stop:steps (default 0.01:0.99:99)");
  c_table->add_option("--out", out_path, "output file (default stdout)");

  auto* c_verify =
      app.add_subcommand("verify", "closed-form consistency battery (default: three families)");
  c_verify->add_option("--family", family_raw, "verify this family only");
  c_verify->add_option("--tol", tol, "oracle quadrature gap tolerance (default 1e-10)");

  auto* c_oracle = app.add_subcommand(
      "oracle-compare", "closed form vs quadrature (and Monte Carlo with --seed) over a grid");
  c_oracle->add_option("--family", family_raw, "l0,s0,l1,s1")->required();
  c_oracle->add_option("--grid", grid_raw, "theta1 grid start:stop:steps");
  c_oracle->add_option("--theta2", theta2, "reference weight (default 0.5)");
  c_oracle->add_option("--out", out_path, "output file (default stdout)");
  c_oracle->add_option("--seed", seed, "Monte-Carlo seed; enables the MC columns");
  c_oracle->add_option("--mc-samples", mc_samples, "Monte-Carlo sample count (default 1e6)");
  c_oracle->add_option("--tol", tol, "oracle quadrature gap tolerance (default 1e-10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_entropy->parsed()) {
      require_open_theta(theta, "--theta");
      const auto fam = parse_family(family_raw);
      std::cout << cg::format_value(fam.entropy(theta)) << '\n';
      return 0;
    }
    if (c_kl->parsed() || c_js->parsed() || c_jeffreys->parsed()) {
      require_open_theta(theta1, "--theta1");
      require_open_theta(theta2, "--theta2");
      const auto fam = parse_family(family_raw);
      double v = 0.0;
      if (c_kl->parsed()) v = fam.kl(theta1, theta2);
      if (c_js->parsed()) v = fam.js(theta1, theta2);
      if (c_jeffreys->parsed()) v = fam.jeffreys(theta1, theta2);
      std::cout << cg::format_value(v) << '\n';
      return 0;
    }
    if (c_table->parsed())
      return run_table(parse_family(family_raw), parse_grid(grid_raw), out_path);
    if (c_verify->parsed()) {
      if (!family_raw.empty()) family_opt = family_raw;
      if (!(tol > 0.0)) throw cg::ParamError("--tol must be > 0");
      return run_verify(family_opt, tol);
    }
    if (c_oracle->parsed()) {
      require_open_theta(theta2, "--theta2");
      if (mc_samples < 1) throw cg::ParamError("--mc-samples must be >= 1");
      if (!(tol > 0.0)) throw cg::ParamError("--tol must be > 0");
      return run_oracle_compare(parse_family(family_raw), parse_grid(grid_raw), theta2,
                                out_path, seed, mc_samples, tol);
    }
  } catch (const cg::ParamError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const cg::WeightError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const cg::DimensionError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
