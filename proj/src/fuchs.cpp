#include "thinfilm/fuchs.hpp"

#include <cmath>
#include <string>

#include "thinfilm/error.hpp"
#include "thinfilm/quadrature.hpp"

namespace thinfilm
{

using namespace std::complex_literals;

namespace
{

constexpr std::size_t panel_budget = 10000;

// (1 - e) / (1 - p e) with e = e^{-w/u}; bounded by 2 / (1 - p) on Re(w) > 0.
std::complex<double> reflection_ratio(std::complex<double> e, double p)
{
  return (1.0 - e) / (1.0 - p * e);
}

}  // namespace

SizeParameter::SizeParameter(std::complex<double> w) : w_(w)
{
  if (!(w.real() > 0.0) || !std::isfinite(w.real()) || !std::isfinite(w.imag()))
  {
    throw DomainError("size parameter needs finite w with Re(w) > 0, got (" +
                      std::to_string(w.real()) + ", " + std::to_string(w.imag()) + ")");
  }
}

Specularity::Specularity(double p) : p_(p)
{
  if (!(p >= 0.0 && p <= 1.0))
  {
    throw InvalidParameter("specularity must lie in [0, 1], got " + std::to_string(p));
  }
}

std::complex<double> fuchs_integrand(double t, SizeParameter w, Specularity p)
{
  if (!(t >= 1.0))
  {
    throw InvalidParameter("fuchs_integrand needs t >= 1, got " + std::to_string(t));
  }
  const double t2 = t * t;
  const double prefactor = (1.0 - 1.0 / t2) / (t2 * t);
  if (p.value() == 1.0)
  {
    return prefactor;
  }
  return prefactor * reflection_ratio(std::exp(-w.value() * t), p.value());
}

FuchsIntegral integrate_fuchs(SizeParameter w, Specularity p, double tol)
{
  if (!(tol > 0.0))
  {
    throw InvalidParameter("quadrature tolerance must be positive");
  }
  const std::complex<double> wv = w.value();
  const double pv = p.value();
  // t = 1/u: dt t^-3 (1 - t^-2) = du (u - u^3); the integrand vanishes at both ends.
  auto integrand = [wv, pv](double u) -> std::complex<double> {
    const double poly = u * (1.0 - u * u);
    if (pv == 1.0)
    {
      return poly;
    }
    return poly * reflection_ratio(std::exp(-wv / u), pv);
  };

  // Aim for relative accuracy; w / Phi(w) suffers cancellation for small |w|.
  const quad::Result r =
      quad::integrate(integrand, 0.0, 1.0,
                      {.rel_tol = tol, .abs_tol = 1e-3 * tol, .max_panels = panel_budget});
  if (!r.converged && r.error > tol * (std::abs(r.value) + 1.0))
  {
    throw QuadratureFailure("Fuchs integral did not converge within " +
                                std::to_string(panel_budget) + " panels (error estimate " +
                                std::to_string(r.error) + ")",
                            r.value, r.error);
  }
  return {r.value, r.error};
}

std::complex<double> phi_inverse(SizeParameter w, Specularity p, double tol,
                                 double &quad_error)
{
  const std::complex<double> wv = w.value();
  if (p.value() == 1.0)
  {
    quad_error = 0.0;
    return 1.0 / wv;
  }
  const FuchsIntegral integral = integrate_fuchs(w, p, tol);
  quad_error = integral.error;
  return 1.0 / wv - 1.5 / (wv * wv) * (1.0 - p.value()) * integral.value;
}

std::complex<double> phi_inverse(SizeParameter w, Specularity p, double tol)
{
  double ignored = 0.0;
  return phi_inverse(w, p, tol, ignored);
}

std::complex<double> size_factor(SizeParameter w, Specularity p, double tol)
{
  if (p.value() == 1.0)
  {
    return 1.0;
  }
  const FuchsIntegral integral = integrate_fuchs(w, p, tol);
  return 1.0 - 1.5 / w.value() * (1.0 - p.value()) * integral.value;
}

std::complex<double> drude_sigma(const MaterialParams &m, double omega)
{
  const DerivedBulk bulk = derive_bulk(m);
  return bulk.sigma_0 / (1.0 - 1i * omega * bulk.tau);
}

SizeParameter size_parameter(const MaterialParams &m, double d, double omega)
{
  const DerivedBulk bulk = derive_bulk(m);
  if (!std::isfinite(d) || d <= 0.0)
  {
    throw InvalidParameter("film thickness must be positive, got " + std::to_string(d));
  }
  return SizeParameter(d / bulk.l * (1.0 - 1i * omega * bulk.tau));
}

ConductivityResult sigma_d(const MaterialParams &m, const FilmSetup &s, double tol)
{
  check(s);
  const SizeParameter w = size_parameter(m, s.d, s.omega);
  const Specularity p(s.p);
  const std::complex<double> drude = drude_sigma(m, s.omega);
  if (p.value() == 1.0)
  {
    return {drude, 1.0 / w.value(), 0.0, w.value()};
  }
  double quad_error = 0.0;
  const std::complex<double> inv_phi = phi_inverse(w, p, tol, quad_error);
  return {drude * w.value() * inv_phi, inv_phi, quad_error, w.value()};
}

}  // namespace thinfilm
