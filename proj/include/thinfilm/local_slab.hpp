#pragma once

// Exact s-wave solution for a slab with a local, position-independent
// conductivity. Eliminating H_z from the slab field equations gives
// E'' + q^2 E = 0 with q^2 = k^2 cos^2 theta + 4 pi i omega sigma / c^2, which
// is solved in closed form for both symmetry classes. No thin-film
// approximation is made, so this is the reference the thin-film formulas are
// checked against (at p = 1, where the Fuchs conductivity is local).

#include <complex>
#include <vector>

#include "thinfilm/material.hpp"
#include "thinfilm/optics.hpp"

namespace thinfilm
{

struct LocalSlabParams
{
  std::complex<double> sigma_local;  // 1/s
  double d;                          // cm
  double theta;                      // rad
  double omega;                      // rad/s
};

/// q^2 = k^2 cos^2 theta + 4 pi i omega sigma / c^2, in 1/cm^2.
std::complex<double> slab_wavevector_squared(const LocalSlabParams &lp);

/// Branch of sqrt(q^2) with Re(q) >= 0, and Im(q) >= 0 when Re(q) = 0.
std::complex<double> slab_wavevector(const LocalSlabParams &lp);

/// z1 = -(ik/q) tan(qd/2), z2 = (ik/q) cot(qd/2) for an explicit choice of q.
/// Throws SlabResonance when |cos(qd/2)| or |sin(qd/2)| (away from q = 0) falls below 1e-12.
ImpedancePair impedances_from_wavevector(std::complex<double> q, const LocalSlabParams &lp);

ImpedancePair exact_impedances(const LocalSlabParams &lp);

OpticalCoefficients exact_tra(const LocalSlabParams &lp);

/// Normal-incidence bulk skin depth 1 / Im(sqrt(k^2 + 4 pi i omega sigma / c^2)); infinite at omega = 0.
double skin_depth(std::complex<double> sigma, double omega);

struct ValidationRow
{
  FilmSetup setup;
  std::complex<double> sigma;  // local Drude conductivity used by both routes
  OpticalCoefficients thin;    // B-form
  OpticalCoefficients exact;   // local slab
  double kd;
  double d_over_delta;

  double dev_T() const;
  double dev_R() const;
  double dev_A() const;
  double max_deviation() const;
};

/// Compares the thin-film B-form against the exact local slab at each grid point.
/// Every point must have p = 1; otherwise InvalidParameter.
std::vector<ValidationRow> validate_thin_film(const MaterialParams &m,
                                              const std::vector<FilmSetup> &grid);

}  // namespace thinfilm
