#include "thinfilm/local_slab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "thinfilm/error.hpp"
#include "thinfilm/fuchs.hpp"

namespace thinfilm
{

using namespace std::complex_literals;

namespace
{

constexpr double resonance_threshold = 1e-12;
constexpr double series_radius = 1e-4;

// tan(x + iy) = (sin 2x + i sinh 2y) / (cos 2x + cosh 2y), divided through by
// cosh 2y so that large |y| tends to +-i instead of inf/inf.
std::complex<double> stable_tan(std::complex<double> s)
{
  const double sech = 1.0 / std::cosh(2.0 * s.imag());
  return std::complex<double>(std::sin(2.0 * s.real()) * sech, std::tanh(2.0 * s.imag())) /
         (std::cos(2.0 * s.real()) * sech + 1.0);
}

void check_resonance(std::complex<double> s)
{
  if (std::abs(s.imag()) > 30.0)
  {
    return;  // |sin|, |cos| >= sinh|Im s|
  }
  const bool tan_pole = std::abs(std::cos(s)) < resonance_threshold;
  const bool cot_pole =
      std::abs(s) > series_radius && std::abs(std::sin(s)) < resonance_threshold;
  if (tan_pole || cot_pole)
  {
    throw SlabResonance("slab resonance at qd/2 = (" + std::to_string(s.real()) + ", " +
                            std::to_string(s.imag()) + ")",
                        s);
  }
}

void check(const LocalSlabParams &lp)
{
  if (!std::isfinite(lp.d) || lp.d <= 0.0)
  {
    throw InvalidParameter("slab thickness must be positive, got " + std::to_string(lp.d));
  }
  if (!(lp.theta >= 0.0 && lp.theta <= constants::pi / 2))
  {
    throw InvalidParameter("theta must lie in [0, pi/2], got " + std::to_string(lp.theta));
  }
  if (!std::isfinite(lp.omega) || lp.omega < 0.0)
  {
    throw InvalidParameter("omega must be finite and non-negative");
  }
  if (lp.sigma_local.real() < 0.0)
  {
    throw InvalidParameter("local conductivity must have Re(sigma) >= 0");
  }
}

double cos_incidence(double theta) { return is_grazing(theta) ? 0.0 : std::cos(theta); }

}  // namespace

std::complex<double> slab_wavevector_squared(const LocalSlabParams &lp)
{
  const double k = lp.omega / constants::c;
  const double cos_theta = cos_incidence(lp.theta);
  return k * k * cos_theta * cos_theta +
         4.0 * constants::pi * 1i * lp.omega * lp.sigma_local / (constants::c * constants::c);
}

std::complex<double> slab_wavevector(const LocalSlabParams &lp)
{
  std::complex<double> q = std::sqrt(slab_wavevector_squared(lp));
  if (q.real() == 0.0 && q.imag() < 0.0)
  {
    q = -q;
  }
  return q;
}

ImpedancePair impedances_from_wavevector(std::complex<double> q, const LocalSlabParams &lp)
{
  check(lp);
  const double k = lp.omega / constants::c;
  const std::complex<double> s = 0.5 * q * lp.d;
  check_resonance(s);

  if (std::abs(s) < series_radius)
  {
    // tan(s)/s = 1 + s^2/3 + 2 s^4/15; z2 = 2ik / (q^2 d tan(s)/s) rewritten so that
    // k / q^2 = c / (omega cos^2 theta + 4 pi i sigma) stays finite as omega -> 0.
    const std::complex<double> s2 = s * s;
    const std::complex<double> tan_ratio = 1.0 + s2 / 3.0 + 2.0 * s2 * s2 / 15.0;
    const double cos_theta = cos_incidence(lp.theta);
    const std::complex<double> reduced =
        lp.omega * cos_theta * cos_theta + 4.0 * constants::pi * 1i * lp.sigma_local;
    const std::complex<double> z2 =
        reduced == 0.0 ? std::complex<double>(std::numeric_limits<double>::infinity(), 0.0)
                       : 2.0i * constants::c / (lp.d * reduced * tan_ratio);
    return {-0.5i * k * lp.d * tan_ratio, z2};
  }

  const std::complex<double> t = stable_tan(s);
  const std::complex<double> ik_over_q = 1i * k / q;
  return {-ik_over_q * t, ik_over_q / t};
}

ImpedancePair exact_impedances(const LocalSlabParams &lp)
{
  return impedances_from_wavevector(slab_wavevector(lp), lp);
}

OpticalCoefficients exact_tra(const LocalSlabParams &lp)
{
  return tra_from_impedances(exact_impedances(lp), lp.theta);
}

double skin_depth(std::complex<double> sigma, double omega)
{
  const double k = omega / constants::c;
  const std::complex<double> q = std::sqrt(
      k * k + 4.0 * constants::pi * 1i * omega * sigma / (constants::c * constants::c));
  const double im = std::abs(q.imag());
  return im > 0.0 ? 1.0 / im : std::numeric_limits<double>::infinity();
}

double ValidationRow::dev_T() const { return std::abs(thin.T - exact.T); }
double ValidationRow::dev_R() const { return std::abs(thin.R - exact.R); }
double ValidationRow::dev_A() const { return std::abs(thin.A - exact.A); }
double ValidationRow::max_deviation() const { return std::max({dev_T(), dev_R(), dev_A()}); }

std::vector<ValidationRow> validate_thin_film(const MaterialParams &m,
                                              const std::vector<FilmSetup> &grid)
{
  std::vector<ValidationRow> rows;
  rows.reserve(grid.size());
  for (const FilmSetup &s : grid)
  {
    if (s.p != 1.0)
    {
      throw InvalidParameter("thin-film validation is defined for p = 1 only, got p = " +
                             std::to_string(s.p));
    }
    thinfilm::check(s);
    const std::complex<double> sigma = sigma_d(m, s).sigma_d;
    const LocalSlabParams lp{sigma, s.d, s.theta, s.omega};
    rows.push_back({.setup = s,
                    .sigma = sigma,
                    .thin = film_coefficients(sigma, s.d, s.theta),
                    .exact = exact_tra(lp),
                    .kd = s.omega / constants::c * s.d,
                    .d_over_delta = s.d / skin_depth(sigma, s.omega)});
  }
  return rows;
}

}  // namespace thinfilm
