#pragma once

// Parameter sweeps over one of theta, d, p or omega with the rest held fixed.
// Frequencies are given as fractions of the plasma frequency at this layer and
// converted to rad/s before any physics is evaluated.

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thinfilm/fuchs.hpp"
#include "thinfilm/local_slab.hpp"
#include "thinfilm/material.hpp"

namespace thinfilm
{

enum class SweptParameter
{
  theta,
  d,
  p,
  omega,
};

enum class GridScale
{
  linear,
  log,
};

struct Grid
{
  double min;
  double max;
  std::size_t count;
  GridScale scale = GridScale::linear;
};

/// Values held fixed while another parameter is swept. omega_frac is omega / omega_p.
struct FixedValues
{
  double d = 1e-7;
  double theta = 0.0;
  double omega_frac = 1e-2;
  double p = 0.5;
};

/// A second, discrete parameter; the sweep is repeated once per value.
struct SeriesAxis
{
  SweptParameter parameter;
  std::vector<double> values;
};

struct SweepSpec
{
  SweptParameter swept = SweptParameter::theta;
  Grid grid{0.0, 1.0, 2, GridScale::linear};
  FixedValues fixed;
  std::string material_name = "sodium";
  MaterialParams material = sodium_preset();
  double tol = default_fuchs_tol;
  std::optional<SeriesAxis> series;
};

struct SweepRow
{
  std::string swept_name;
  double swept_value;
  double T, R, A;
  std::complex<double> sigma_d;
  std::complex<double> w;
  double kd;
  double quad_err;
  std::string series_name;  // empty without a series axis
  double series_value;
  std::string error;  // empty on success; numeric fields are NaN otherwise
};

/// A fully resolved evaluation point of a sweep.
struct GridPoint
{
  double swept_value;
  std::optional<double> series_value;
  FilmSetup setup;  // omega in rad/s
};

/// Column label: "theta", "d", "p" or "omega_over_omega_p".
std::string column_name(SweptParameter parameter);

/// Accepts theta, d, p, omega (and omega_over_omega_p).
SweptParameter parse_parameter(std::string_view name);

GridScale parse_scale(std::string_view name);

/// Grid values in order; endpoints are exact. Throws UsageError on count < 2,
/// min > max or a log grid with min <= 0.
std::vector<double> grid_values(const Grid &grid);

/// Throws UsageError when grid bounds or fixed values leave their parameter's domain.
void check(const SweepSpec &spec);

/// Points in output order: series-major, then grid order.
std::vector<GridPoint> grid_points(const SweepSpec &spec);

/// Evaluates every grid point, in parallel when threads != 1 (0 selects the
/// hardware concurrency). Output order is grid order. A quadrature or domain
/// failure at one point fills that row's error column and the run continues.
std::vector<SweepRow> run_sweep(const SweepSpec &spec, unsigned threads = 0);

/// Parameter sets of the five published figures: fig1 (theta), fig2 (d),
/// fig3 (p), fig4 and fig5 (omega, three thickness series, p = 0 and p = 1).
SweepSpec figure_preset(std::string_view name);

/// Known material presets by name ("sodium").
MaterialParams material_preset(std::string_view name);

struct ValidatedRow
{
  SweepRow row;
  ValidationRow check;
};

/// Runs the sweep and the exact local-slab comparison point by point. Requires p = 1
/// everywhere (fixed p = 1 and p not swept).
std::vector<ValidatedRow> run_validation(const SweepSpec &spec);

}  // namespace thinfilm
