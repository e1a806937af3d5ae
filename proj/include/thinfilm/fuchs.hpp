#pragma once

// Thickness-averaged conductivity of a thin film with partially diffuse
// electron reflection at its surfaces (Fuchs-Sondheimer kinetics), extended to
// finite frequency by l -> v_F tau / (1 - i omega tau), sigma_0 -> sigma_0 / (1 - i omega tau).

#include <complex>

#include "thinfilm/material.hpp"

namespace thinfilm
{

inline constexpr double default_fuchs_tol = 1e-10;

/// Complex size parameter w = (d / l)(1 - i omega tau). Re(w) > 0 is enforced.
class SizeParameter
{
public:
  explicit SizeParameter(std::complex<double> w);

  std::complex<double> value() const { return w_; }

private:
  std::complex<double> w_;
};

/// Fraction of electrons reflected specularly at the film surfaces, in [0, 1].
class Specularity
{
public:
  explicit Specularity(double p);

  double value() const { return p_; }

private:
  double p_;
};

struct FuchsIntegral
{
  std::complex<double> value;
  double error;  // absolute error estimate
};

struct ConductivityResult
{
  std::complex<double> sigma_d;      // 1/s
  std::complex<double> phi_inverse;  // 1/Phi(w)
  double quad_error_estimate;        // absolute error estimate of the integral, 0 for p = 1
  std::complex<double> w;
};

/// (t^-3 - t^-5) (1 - e^{-wt}) / (1 - p e^{-wt}) for t >= 1.
std::complex<double> fuchs_integrand(double t, SizeParameter w, Specularity p);

/// int_1^inf fuchs_integrand dt, computed on u = 1/t in (0, 1].
/// Throws QuadratureFailure if the 10^4 panel budget does not reach
/// error <= tol (|value| + 1).
FuchsIntegral integrate_fuchs(SizeParameter w, Specularity p, double tol = default_fuchs_tol);

/// 1/Phi(w) = 1/w - 3/(2 w^2) (1 - p) I(w, p). Exactly 1/w for p = 1.
std::complex<double> phi_inverse(SizeParameter w, Specularity p,
                                 double tol = default_fuchs_tol);

/// Same as phi_inverse but also reports the quadrature error estimate.
std::complex<double> phi_inverse(SizeParameter w, Specularity p, double tol,
                                 double &quad_error);

/// The bracket 1 - (1.5 / w)(1 - p) I(w, p), algebraically equal to w / Phi(w).
std::complex<double> size_factor(SizeParameter w, Specularity p,
                                 double tol = default_fuchs_tol);

/// Drude conductivity sigma_0 / (1 - i omega tau) of the bulk metal.
std::complex<double> drude_sigma(const MaterialParams &m, double omega);

/// Size parameter w = (d / l)(1 - i omega tau).
SizeParameter size_parameter(const MaterialParams &m, double d, double omega);

/// sigma_d = [sigma_0 / (1 - i omega tau)] w / Phi(w). Throws InvalidParameter on d <= 0.
ConductivityResult sigma_d(const MaterialParams &m, const FilmSetup &s,
                           double tol = default_fuchs_tol);

}  // namespace thinfilm
