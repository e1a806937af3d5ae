#include "thinfilm/optics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "thinfilm/error.hpp"
#include "thinfilm/material.hpp"

namespace thinfilm
{

using namespace std::complex_literals;

namespace
{

void check_geometry(double d, double theta)
{
  if (!std::isfinite(d) || d <= 0.0)
  {
    throw InvalidParameter("film thickness must be positive, got " + std::to_string(d));
  }
  if (!(theta >= 0.0 && theta <= constants::pi / 2))
  {
    throw InvalidParameter("theta must lie in [0, pi/2], got " + std::to_string(theta));
  }
}

bool is_infinite(std::complex<double> z)
{
  return std::isinf(z.real()) || std::isinf(z.imag());
}

// cos(theta) with the grazing endpoint pinned to exactly zero.
double incidence_cosine(double theta) { return is_grazing(theta) ? 0.0 : std::cos(theta); }

}  // namespace

BFactor BFactor::grazing()
{
  return BFactor({std::numeric_limits<double>::infinity(), 0.0});
}

bool BFactor::is_grazing() const { return is_infinite(b_); }

BFactor b_factor(std::complex<double> sigma, double d, double theta)
{
  check_geometry(d, theta);
  if (is_grazing(theta))
  {
    return BFactor::grazing();
  }
  return BFactor(2.0 * constants::pi * d * sigma / (constants::c * std::cos(theta)));
}

OpticalCoefficients tra_from_b(BFactor b)
{
  if (b.is_grazing())
  {
    return {0.0, 1.0, 0.0};
  }
  const std::complex<double> bv = b.value();
  if (bv.real() < 0.0)
  {
    throw PassivityViolation("Re(B) = " + std::to_string(bv.real()) +
                             " < 0 implies negative absorption");
  }
  const double denom = std::norm(1.0 + bv);
  return {1.0 / denom, std::norm(bv) / denom, 2.0 * bv.real() / denom};
}

ImpedancePair thin_impedances(std::complex<double> sigma, double d, double omega,
                              double theta, ThinLimit limit)
{
  check_geometry(d, theta);
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (limit == ThinLimit::kd_to_zero)
  {
    if (sigma == 0.0)
    {
      return {0.0, inf};
    }
    return {0.0, constants::c / (2.0 * constants::pi * d * sigma)};
  }
  const double kd = omega / constants::c * d;
  const double cos_theta = incidence_cosine(theta);
  const std::complex<double> denom =
      -1i * constants::c * kd * cos_theta * cos_theta + 4.0 * constants::pi * d * sigma;
  const std::complex<double> z2 =
      denom == 0.0 ? std::complex<double>(inf, 0.0) : 2.0 * constants::c / denom;
  return {-0.5i * kd, z2};
}

PFactors p_factors(const ImpedancePair &z, double theta)
{
  const double cos_theta = incidence_cosine(theta);
  auto reflect = [cos_theta](std::complex<double> zj) -> std::complex<double> {
    if (is_infinite(zj))
    {
      return 1.0;
    }
    const std::complex<double> zc = zj * cos_theta;
    return (zc - 1.0) / (zc + 1.0);
  };
  return {reflect(z.z1), reflect(z.z2)};
}

OpticalCoefficients tra_from_p(const PFactors &p)
{
  const double t = 0.25 * std::norm(p.p1 - p.p2);
  const double r = 0.25 * std::norm(p.p1 + p.p2);
  return {t, r, 1.0 - t - r};
}

OpticalCoefficients tra_from_impedances(const ImpedancePair &z, double theta)
{
  return tra_from_p(p_factors(z, theta));
}

OpticalCoefficients film_coefficients(std::complex<double> sigma, double d, double theta)
{
  return tra_from_b(b_factor(sigma, d, theta));
}

}  // namespace thinfilm
