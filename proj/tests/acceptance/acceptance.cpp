// Acceptance suite: one line per criterion, non-zero exit if any fails.
//
//   acceptance [path/to/thinfilm] [scratch-dir]
//
// With a CLI path the determinism criterion also runs the executable twice.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/simpson_oracle.hpp"
#include "thinfilm/csv.hpp"
#include "thinfilm/error.hpp"
#include "thinfilm/fuchs.hpp"
#include "thinfilm/local_slab.hpp"
#include "thinfilm/optics.hpp"
#include "thinfilm/sweep.hpp"

using namespace thinfilm;
using namespace std::complex_literals;

namespace
{

struct Outcome
{
  bool pass;
  std::string detail;
};

std::string fmt(const char *format, double a, double b = 0.0, double c = 0.0)
{
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

// 1: T + R + A = 1 and each coefficient in [0, 1] for B in the closed right half-plane.
Outcome energy_conservation()
{
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> log_mag(-8.0, 8.0);
  std::uniform_real_distribution<double> angle(-std::numbers::pi / 2, std::numbers::pi / 2);
  double worst_sum = 0.0;
  double worst_range = 0.0;
  for (int i = 0; i < 100000; ++i)
  {
    std::complex<double> b = std::polar(std::pow(10.0, log_mag(rng)), angle(rng));
    if (i % 10 == 0)
    {
      b = {0.0, b.imag()};  // boundary of the half-plane
    }
    b = {std::max(b.real(), 0.0), b.imag()};
    if (i == 0)
    {
      b = 0.0;
    }
    const OpticalCoefficients c = tra_from_b(BFactor(b));
    worst_sum = std::max(worst_sum, std::abs(c.T + c.R + c.A - 1.0));
    for (const double x : {c.T, c.R, c.A})
    {
      worst_range = std::max({worst_range, -x, x - 1.0});
    }
  }
  return {worst_sum <= 1e-12 && worst_range <= 1e-12,
          fmt("max |T+R+A-1| = %.2e, max excursion outside [0,1] = %.2e over 1e5 samples",
              worst_sum, std::max(worst_range, 0.0))};
}

// 2: sigma_d -> 0 gives (1, 0, 0) exactly; theta = pi/2 - 1e-6 gives R > 0.999.
Outcome analytic_limits()
{
  const OpticalCoefficients zero = film_coefficients(0.0, 1e-7, 0.4);
  const bool exact = zero.T == 1.0 && zero.R == 0.0 && zero.A == 0.0;
  double approach = 0.0;
  for (const double s : {1e10, 1e8, 1e6})
  {
    const OpticalCoefficients c = film_coefficients({s, s}, 1e-7, 0.0);
    approach = std::abs(c.T - 1.0) + c.R + c.A;
  }
  const MaterialParams na = sodium_preset();
  const std::complex<double> sigma = sigma_d(na, {1e-7, 0.0, 1e-2 * na.omega_p, 0.5}).sigma_d;
  const OpticalCoefficients grazing = film_coefficients(sigma, 1e-7, constants::pi / 2 - 1e-6);
  return {exact && approach < 1e-6 && grazing.R > 0.999,
          fmt("sigma=0 -> (%g, %g, %g) exactly; ", zero.T, zero.R, zero.A) +
              fmt("R(pi/2 - 1e-6) = %.9f", grazing.R)};
}

// 3: p = 1 reproduces sigma_0 / (1 - i omega tau) to 1e-14.
Outcome specular_reduction()
{
  const MaterialParams na = sodium_preset();
  double worst = 0.0;
  for (int i = 0; i <= 20; ++i)
  {
    const double d = std::pow(10.0, -9.0 + 4.0 * i / 20.0);
    for (int j = 0; j <= 20; ++j)
    {
      const double omega = j == 0 ? 0.0 : std::pow(10.0, -4.0 + 4.5 * j / 20.0) * na.omega_p;
      const std::complex<double> drude = drude_sigma(na, omega);
      const std::complex<double> s = sigma_d(na, {d, 0.0, omega, 1.0}).sigma_d;
      worst = std::max(worst, std::abs(s - drude) / std::abs(drude));
    }
  }
  return {worst < 1e-14, fmt("max relative deviation %.2e over a 21 x 21 (d, omega) grid", worst)};
}

// 4: adaptive quadrature vs 10^6-panel Simpson on 20 fixed points.
Outcome quadrature_correctness()
{
  double worst = 0.0;
  double worst_ratio = 0.0;
  for (const oracle::FixedPoint &pt : oracle::acceptance_points)
  {
    const std::complex<double> brute = oracle::simpson_size_integral(pt.w, pt.p, 1000000);
    const FuchsIntegral r = integrate_fuchs(SizeParameter(pt.w), Specularity(pt.p));
    worst = std::max(worst, std::abs(r.value - brute) / std::abs(brute));
    worst_ratio = std::max(worst_ratio, std::abs(pt.w.imag()) / pt.w.real());
  }
  return {worst <= 1e-8 && worst_ratio >= 1e3,
          fmt("max relative deviation %.2e over 20 points, max |Im w|/Re w = %g", worst,
              worst_ratio)};
}

// 5: w / Phi(w) = 1 - 3(1-p)/(8w) within 1e-4 for real w >= 50.
Outcome thick_film_asymptote()
{
  double worst = 0.0;
  for (const double p : {0.0, 0.3, 0.7})
  {
    for (const double w : {50.0, 60.0, 75.0, 100.0, 200.0, 500.0, 1e3, 1e4})
    {
      const std::complex<double> factor = w * phi_inverse(SizeParameter(w), Specularity(p));
      worst = std::max(worst, std::abs(factor - (1.0 - 3.0 * (1.0 - p) / (8.0 * w))));
    }
  }
  return {worst <= 1e-4, fmt("max |w/Phi - (1 - 3(1-p)/(8w))| = %.2e", worst)};
}

// 6: thin-film B-form vs the exact local slab at p = 1.
Outcome oracle_equivalence()
{
  const MaterialParams na = sodium_preset();
  const double omega = 1e-2 * na.omega_p;
  const auto rows = validate_thin_film(na, {{1e-7, 0.0, omega, 1.0}, {1e-9, 0.0, omega, 1.0}});
  const double dev7 = rows[0].max_deviation();
  const double dev9 = rows[1].max_deviation();
  return {dev7 <= 1e-2 && dev9 <= 1e-4,
          fmt("max |dT|,|dR|,|dA|: %.2e at d=1e-7 cm (limit 1e-2), %.2e at d=1e-9 cm (limit 1e-4)",
              dev7, dev9)};
}

std::map<double, std::vector<SweepRow>> by_series(const std::vector<SweepRow> &rows)
{
  std::map<double, std::vector<SweepRow>> out;
  for (const SweepRow &r : rows)
  {
    out[r.series_value].push_back(r);
  }
  return out;
}

// 7: qualitative shape of the five figures.
Outcome figure_shapes(std::vector<std::string> &notes)
{
  bool all = true;
  auto note = [&](bool ok, const std::string &text) {
    notes.push_back(std::string(ok ? "    ok   " : "    FAIL ") + text);
    all = all && ok;
  };

  const std::vector<SweepRow> f1 = run_sweep(figure_preset("fig1"));
  const auto peak = std::max_element(f1.begin(), f1.end(),
                                     [](const SweepRow &a, const SweepRow &b) { return a.A < b.A; });
  const bool interior = peak != f1.begin() && peak != f1.end() - 1;
  note(interior && peak->swept_value > constants::pi / 4 && f1.back().A < peak->A,
       fmt("fig1: A(theta) peaks in the interior at theta = %.4f rad (A = %.4f), A(pi/2) = %g",
           peak->swept_value, peak->A, f1.back().A));

  const std::vector<SweepRow> f2 = run_sweep(figure_preset("fig2"));
  double a_min = 1.0, a_max = 0.0;
  for (const SweepRow &r : f2)
  {
    a_min = std::min(a_min, r.A);
    a_max = std::max(a_max, r.A);
  }
  const double a_var = (a_max - a_min) / a_max;
  const double t_factor = f2.front().T / f2.back().T;
  const double r_factor = f2.back().R / f2.front().R;
  note(a_var < 0.2, fmt("fig2: relative variation of A over d = %.3f (limit 0.2)", a_var));
  note(t_factor >= 1.5 && t_factor <= 3.0,
       fmt("fig2: T(1e-7)/T(1e-6) = %.3f (required in [1.5, 3])", t_factor));
  note(r_factor >= 1.5 && r_factor <= 3.0,
       fmt("fig2: R(1e-6)/R(1e-7) = %.3f (required in [1.5, 3])", r_factor));

  const std::vector<SweepRow> f3 = run_sweep(figure_preset("fig3"));
  bool r_up = true, a_down = true;
  for (std::size_t i = 1; i < f3.size(); ++i)
  {
    r_up = r_up && f3[i].R >= f3[i - 1].R;
    a_down = a_down && f3[i].A <= f3[i - 1].A;
  }
  note(r_up && a_down, fmt("fig3: R nondecreasing in p (%g), A nonincreasing in p (%g)", r_up, a_down));

  const auto f4 = by_series(run_sweep(figure_preset("fig4")));
  const auto f5 = by_series(run_sweep(figure_preset("fig5")));
  bool monotone = true;
  for (const auto *fig : {&f4, &f5})
  {
    for (const auto &[d, rows] : *fig)
    {
      for (std::size_t i = 1; i < rows.size(); ++i)
      {
        monotone = monotone && rows[i].R <= rows[i - 1].R;
      }
    }
  }
  note(monotone, "fig4/fig5: every R(omega) series nonincreasing");

  bool d_order = true;
  for (const auto *fig : {&f4, &f5})
  {
    const std::vector<std::vector<SweepRow>> series{fig->at(1e-7), fig->at(2e-7), fig->at(3e-7)};
    for (std::size_t i = 0; i < series[0].size(); ++i)
    {
      d_order = d_order && series[1][i].R > series[0][i].R && series[2][i].R > series[1][i].R;
    }
  }
  note(d_order, "fig4/fig5: R increases with d at every frequency");

  std::size_t p_violations = 0, total = 0;
  double first_violation = std::numeric_limits<double>::infinity();
  for (const auto &[d, diffuse] : f4)
  {
    const std::vector<SweepRow> &specular = f5.at(d);
    for (std::size_t i = 0; i < diffuse.size(); ++i)
    {
      ++total;
      if (!(specular[i].R >= diffuse[i].R))
      {
        ++p_violations;
        first_violation = std::min(first_violation, diffuse[i].swept_value);
      }
    }
  }
  note(p_violations == 0,
       fmt("fig4 vs fig5: R(p=1) >= R(p=0) violated at %g of %g points, from omega/omega_p = %.3g",
           static_cast<double>(p_violations), static_cast<double>(total),
           p_violations ? first_violation : 0.0));

  return {all, "figure shape properties (details below)"};
}

// 8: impedance route with the kd -> 0 pair equals the B-form.
Outcome route_equivalence()
{
  const MaterialParams na = sodium_preset();
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> log_d(-8.0, -6.0);
  std::uniform_real_distribution<double> log_frac(-3.0, 0.0);
  std::uniform_real_distribution<double> theta(0.0, 1.57);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i)
  {
    const FilmSetup s{std::pow(10.0, log_d(rng)), theta(rng),
                      std::pow(10.0, log_frac(rng)) * na.omega_p, unit(rng)};
    const std::complex<double> sigma = sigma_d(na, s).sigma_d;
    const OpticalCoefficients b = film_coefficients(sigma, s.d, s.theta);
    const OpticalCoefficients z = tra_from_impedances(
        thin_impedances(sigma, s.d, s.omega, s.theta, ThinLimit::kd_to_zero), s.theta);
    worst = std::max({worst, std::abs(b.T - z.T), std::abs(b.R - z.R), std::abs(b.A - z.A)});
  }
  return {worst <= 1e-12, fmt("max coefficient difference %.2e over 1e4 random sodium films", worst)};
}

std::string slurp(const std::filesystem::path &p)
{
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// 9: repeated fig1 runs are byte-identical.
Outcome determinism(const std::string &cli, const std::filesystem::path &scratch)
{
  std::ostringstream a, b;
  emit_csv(run_sweep(figure_preset("fig1"), 1), a);
  emit_csv(run_sweep(figure_preset("fig1"), 8), b);
  bool same = a.str() == b.str();
  std::string detail = std::string("in-process serial vs 8-thread fig1 ") + (same ? "identical" : "DIFFER");
  if (!cli.empty())
  {
    const auto f1 = scratch / "acceptance_fig1_a.csv";
    const auto f2 = scratch / "acceptance_fig1_b.csv";
    const int rc1 = std::system(("\"" + cli + "\" figure fig1 --out \"" + f1.string() + "\"").c_str());
    const int rc2 = std::system(("\"" + cli + "\" figure fig1 --out \"" + f2.string() + "\"").c_str());
    const bool cli_same = rc1 == 0 && rc2 == 0 && slurp(f1) == slurp(f2) && !slurp(f1).empty();
    same = same && cli_same && slurp(f1) == a.str();
    detail += std::string("; two `thinfilm figure fig1` runs ") + (cli_same ? "identical" : "DIFFER");
  }
  return {same, detail};
}

}  // namespace

int main(int argc, char **argv)
{
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::filesystem::path scratch =
      argc > 2 ? std::filesystem::path(argv[2]) : std::filesystem::temp_directory_path();

  std::vector<std::string> figure_notes;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"energy conservation", energy_conservation},
      {"analytic limits", analytic_limits},
      {"specular reduction", specular_reduction},
      {"quadrature correctness", quadrature_correctness},
      {"thick-film asymptote", thick_film_asymptote},
      {"oracle equivalence", oracle_equivalence},
      {"figure-shape reproduction", [&] { return figure_shapes(figure_notes); }},
      {"route equivalence", route_equivalence},
      {"determinism", [&] { return determinism(cli, scratch); }},
  };

  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i)
  {
    Outcome o;
    try
    {
      o = criteria[i].second();
    }
    catch (const std::exception &e)
    {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("[%s] %zu. %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    if (i == 6)
    {
      for (const std::string &n : figure_notes)
      {
        std::printf("%s\n", n.c_str());
      }
    }
    failed += o.pass ? 0 : 1;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu/%zu criteria passed in %.1f s\n", criteria.size() - failed, criteria.size(),
              seconds);
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
