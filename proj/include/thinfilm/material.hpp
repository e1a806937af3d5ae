#pragma once

// Bulk metal parameters and film geometry. Gaussian CGS throughout: lengths in
// cm, times in s, conductivity in 1/s, angular frequencies in rad/s.

#include <numbers>

namespace thinfilm
{

namespace constants
{
inline constexpr double c = 2.99792458e10;  // speed of light, cm/s
inline constexpr double pi = std::numbers::pi;
}  // namespace constants

struct MaterialParams
{
  double omega_p;  // plasma frequency, rad/s
  double v_F;      // Fermi velocity, cm/s
  double nu;       // volume collision frequency, 1/s

  friend bool operator==(const MaterialParams &, const MaterialParams &) = default;
};

struct DerivedBulk
{
  double tau;      // relaxation time 1/nu, s
  double l;        // mean free path v_F*tau, cm
  double sigma_0;  // static conductivity omega_p^2 tau / (4 pi), 1/s
  double delta_0;  // infrared skin depth c / omega_p, cm

  friend bool operator==(const DerivedBulk &, const DerivedBulk &) = default;
};

/// Film geometry and illumination.
struct FilmSetup
{
  double d;      // thickness, cm
  double theta;  // incidence angle, rad, in [0, pi/2]
  double omega;  // field angular frequency, rad/s
  double p;      // specularity of electron reflection at the surfaces, [0, 1]
};

/// Throws InvalidParameter unless all three fields are finite and positive.
void check(const MaterialParams &m);

/// Throws InvalidParameter on d <= 0, theta outside [0, pi/2], omega < 0 or p outside [0, 1].
void check(const FilmSetup &s);

DerivedBulk derive_bulk(const MaterialParams &m);

/// Sodium: omega_p = 6.5e15 rad/s, v_F = 8.52e7 cm/s, nu = 1e-3 omega_p.
MaterialParams sodium_preset();

/// True for theta at or beyond the largest double not exceeding pi/2.
inline bool is_grazing(double theta) { return theta >= constants::pi / 2; }

}  // namespace thinfilm
