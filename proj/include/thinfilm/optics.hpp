#pragma once

// s-wave transmission, reflection and absorption of a thin film, by two routes:
// surface impedances of the antisymmetric/symmetric field configurations, and
// the compact closed form in B = 2 pi d sigma_d / (c cos theta).

#include <complex>

namespace thinfilm
{

struct OpticalCoefficients
{
  double T;
  double R;
  double A;
};

/// Impedances E_y/H_z at the illuminated face for the antisymmetric-E (z1)
/// and symmetric-E (z2) configurations. z2 may be infinite (non-conducting film in the kd -> 0 limit).
struct ImpedancePair
{
  std::complex<double> z1;
  std::complex<double> z2;
};

struct PFactors
{
  std::complex<double> p1;
  std::complex<double> p2;
};

/// B = 2 pi d sigma / (c cos theta). At grazing incidence B is infinite.
class BFactor
{
public:
  explicit BFactor(std::complex<double> b) : b_(b) {}

  static BFactor grazing();

  std::complex<double> value() const { return b_; }
  bool is_grazing() const;

private:
  std::complex<double> b_;
};

enum class ThinLimit
{
  full,      // keep the kd terms
  kd_to_zero,  // z1 = 0, z2 = c / (2 pi d sigma)
};

/// Throws InvalidParameter on d <= 0 or theta outside [0, pi/2].
BFactor b_factor(std::complex<double> sigma, double d, double theta);

/// T = 1/|1+B|^2, R = |B|^2/|1+B|^2, A = 2 Re B/|1+B|^2. Grazing B gives (0, 1, 0).
/// Throws PassivityViolation on Re(B) < 0.
OpticalCoefficients tra_from_b(BFactor b);

/// Thin-slab impedances: z1 = -i k d / 2, z2 = 2c / (-i c k d cos^2 theta + 4 pi d sigma),
/// with k = omega / c; or their kd -> 0 forms.
ImpedancePair thin_impedances(std::complex<double> sigma, double d, double omega,
                              double theta, ThinLimit limit = ThinLimit::full);

/// P = (z cos theta - 1) / (z cos theta + 1); an infinite z maps to P = 1.
PFactors p_factors(const ImpedancePair &z, double theta);

/// T = |P1 - P2|^2 / 4, R = |P1 + P2|^2 / 4, A = 1 - T - R.
OpticalCoefficients tra_from_p(const PFactors &p);

OpticalCoefficients tra_from_impedances(const ImpedancePair &z, double theta);

/// Canonical route: B-form, with the grazing limit at theta = pi/2.
OpticalCoefficients film_coefficients(std::complex<double> sigma, double d, double theta);

}  // namespace thinfilm
