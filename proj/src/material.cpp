#include "thinfilm/material.hpp"

#include <cmath>
#include <string>

#include "thinfilm/error.hpp"

namespace thinfilm
{

namespace
{

void require_positive(double value, const char *name)
{
  if (!std::isfinite(value) || value <= 0.0)
  {
    throw InvalidParameter(std::string(name) + " must be finite and positive, got " +
                           std::to_string(value));
  }
}

}  // namespace

void check(const MaterialParams &m)
{
  require_positive(m.omega_p, "omega_p");
  require_positive(m.v_F, "v_F");
  require_positive(m.nu, "nu");
}

void check(const FilmSetup &s)
{
  require_positive(s.d, "d");
  if (!(s.theta >= 0.0 && s.theta <= constants::pi / 2))
  {
    throw InvalidParameter("theta must lie in [0, pi/2], got " + std::to_string(s.theta));
  }
  if (!std::isfinite(s.omega) || s.omega < 0.0)
  {
    throw InvalidParameter("omega must be finite and non-negative, got " +
                           std::to_string(s.omega));
  }
  if (!(s.p >= 0.0 && s.p <= 1.0))
  {
    throw InvalidParameter("p must lie in [0, 1], got " + std::to_string(s.p));
  }
}

DerivedBulk derive_bulk(const MaterialParams &m)
{
  check(m);
  const double tau = 1.0 / m.nu;
  return {.tau = tau,
          .l = m.v_F * tau,
          .sigma_0 = m.omega_p * m.omega_p * tau / (4.0 * constants::pi),
          .delta_0 = constants::c / m.omega_p};
}

MaterialParams sodium_preset()
{
  // nu = 1e-3 omega_p
  return {.omega_p = 6.5e15, .v_F = 8.52e7, .nu = 6.5e12};
}

}  // namespace thinfilm
