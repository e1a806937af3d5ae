#include "thinfilm/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "thinfilm/error.hpp"
#include "thinfilm/optics.hpp"

namespace thinfilm
{

namespace
{

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

void assign(FilmSetup &setup, SweptParameter parameter, double value, double omega_p)
{
  switch (parameter)
  {
    case SweptParameter::theta: setup.theta = value; break;
    case SweptParameter::d: setup.d = value; break;
    case SweptParameter::p: setup.p = value; break;
    case SweptParameter::omega: setup.omega = value * omega_p; break;
  }
}

void check_value(SweptParameter parameter, double value)
{
  bool ok = std::isfinite(value);
  switch (parameter)
  {
    case SweptParameter::theta: ok = ok && value >= 0.0 && value <= constants::pi / 2; break;
    case SweptParameter::d: ok = ok && value > 0.0; break;
    case SweptParameter::p: ok = ok && value >= 0.0 && value <= 1.0; break;
    case SweptParameter::omega: ok = ok && value >= 0.0; break;
  }
  if (!ok)
  {
    throw UsageError(column_name(parameter) + " = " + std::to_string(value) +
                     " is outside the parameter's domain");
  }
}

SweepRow evaluate(const SweepSpec &spec, const GridPoint &point)
{
  SweepRow row{.swept_name = column_name(spec.swept),
               .swept_value = point.swept_value,
               .T = nan,
               .R = nan,
               .A = nan,
               .sigma_d = {nan, nan},
               .w = {nan, nan},
               .kd = point.setup.omega / constants::c * point.setup.d,
               .quad_err = nan,
               .series_name = spec.series ? column_name(spec.series->parameter) : "",
               .series_value = point.series_value.value_or(nan),
               .error = {}};
  try
  {
    const ConductivityResult sigma = sigma_d(spec.material, point.setup, spec.tol);
    const OpticalCoefficients c = film_coefficients(sigma.sigma_d, point.setup.d,
                                                    point.setup.theta);
    row.T = c.T;
    row.R = c.R;
    row.A = c.A;
    row.sigma_d = sigma.sigma_d;
    row.w = sigma.w;
    row.quad_err = sigma.quad_error_estimate;
  }
  catch (const Error &e)
  {
    row.error = e.what();
  }
  return row;
}

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn &&fn)
{
  if (threads == 0)
  {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1)
  {
    for (std::size_t i = 0; i < n; ++i)
    {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t)
  {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++)
      {
        fn(i);
      }
    });
  }
}

}  // namespace

std::string column_name(SweptParameter parameter)
{
  switch (parameter)
  {
    case SweptParameter::theta: return "theta";
    case SweptParameter::d: return "d";
    case SweptParameter::p: return "p";
    case SweptParameter::omega: return "omega_over_omega_p";
  }
  return {};
}

SweptParameter parse_parameter(std::string_view name)
{
  if (name == "theta") return SweptParameter::theta;
  if (name == "d") return SweptParameter::d;
  if (name == "p") return SweptParameter::p;
  if (name == "omega" || name == "omega_over_omega_p" || name == "omega-frac")
  {
    return SweptParameter::omega;
  }
  throw UsageError("unknown sweep parameter '" + std::string(name) +
                   "' (expected theta, d, p or omega)");
}

GridScale parse_scale(std::string_view name)
{
  if (name == "linear" || name == "lin") return GridScale::linear;
  if (name == "log") return GridScale::log;
  throw UsageError("unknown grid scale '" + std::string(name) + "' (expected linear or log)");
}

std::vector<double> grid_values(const Grid &grid)
{
  if (grid.count < 2)
  {
    throw UsageError("grid count must be at least 2");
  }
  if (!(grid.min <= grid.max) || !std::isfinite(grid.min) || !std::isfinite(grid.max))
  {
    throw UsageError("grid needs finite bounds with min <= max");
  }
  if (grid.scale == GridScale::log && grid.min <= 0.0)
  {
    throw UsageError("log grid needs a positive lower bound");
  }
  std::vector<double> values(grid.count);
  const double last = static_cast<double>(grid.count - 1);
  for (std::size_t i = 0; i < grid.count; ++i)
  {
    const double f = static_cast<double>(i) / last;
    if (grid.scale == GridScale::linear)
    {
      values[i] = grid.min + f * (grid.max - grid.min);
    }
    else
    {
      values[i] = std::exp(std::log(grid.min) + f * (std::log(grid.max) - std::log(grid.min)));
    }
  }
  values.front() = grid.min;
  values.back() = grid.max;
  return values;
}

void check(const SweepSpec &spec)
{
  thinfilm::check(spec.material);
  check_value(SweptParameter::theta, spec.fixed.theta);
  check_value(SweptParameter::d, spec.fixed.d);
  check_value(SweptParameter::p, spec.fixed.p);
  check_value(SweptParameter::omega, spec.fixed.omega_frac);
  for (const double v : grid_values(spec.grid))
  {
    check_value(spec.swept, v);
  }
  if (spec.series)
  {
    if (spec.series->parameter == spec.swept)
    {
      throw UsageError("series parameter must differ from the swept parameter");
    }
    if (spec.series->values.empty())
    {
      throw UsageError("series axis has no values");
    }
    for (const double v : spec.series->values)
    {
      check_value(spec.series->parameter, v);
    }
  }
  if (!(spec.tol > 0.0))
  {
    throw UsageError("quadrature tolerance must be positive");
  }
}

std::vector<GridPoint> grid_points(const SweepSpec &spec)
{
  check(spec);
  const double omega_p = spec.material.omega_p;
  const FilmSetup base{.d = spec.fixed.d,
                       .theta = spec.fixed.theta,
                       .omega = spec.fixed.omega_frac * omega_p,
                       .p = spec.fixed.p};
  const std::vector<double> values = grid_values(spec.grid);

  std::vector<std::optional<double>> series{std::nullopt};
  if (spec.series)
  {
    series.assign(spec.series->values.begin(), spec.series->values.end());
  }

  std::vector<GridPoint> points;
  points.reserve(series.size() * values.size());
  for (const std::optional<double> &s : series)
  {
    for (const double v : values)
    {
      GridPoint point{v, s, base};
      if (s)
      {
        assign(point.setup, spec.series->parameter, *s, omega_p);
      }
      assign(point.setup, spec.swept, v, omega_p);
      points.push_back(point);
    }
  }
  return points;
}

std::vector<SweepRow> run_sweep(const SweepSpec &spec, unsigned threads)
{
  const std::vector<GridPoint> points = grid_points(spec);
  std::vector<SweepRow> rows(points.size());
  parallel_for(points.size(), threads,
               [&](std::size_t i) { rows[i] = evaluate(spec, points[i]); });
  return rows;
}

MaterialParams material_preset(std::string_view name)
{
  if (name == "sodium")
  {
    return sodium_preset();
  }
  throw UsageError("unknown material preset '" + std::string(name) + "'");
}

SweepSpec figure_preset(std::string_view name)
{
  SweepSpec spec;
  if (name == "fig1")
  {
    spec.swept = SweptParameter::theta;
    spec.grid = {0.0, constants::pi / 2, 200, GridScale::linear};
    spec.fixed = {.d = 1e-7, .theta = 0.0, .omega_frac = 1e-2, .p = 0.5};
  }
  else if (name == "fig2")
  {
    spec.swept = SweptParameter::d;
    spec.grid = {1e-7, 1e-6, 200, GridScale::linear};
    spec.fixed = {.d = 1e-7, .theta = 0.0, .omega_frac = 1e-1, .p = 0.5};
  }
  else if (name == "fig3")
  {
    spec.swept = SweptParameter::p;
    spec.grid = {0.0, 1.0, 101, GridScale::linear};
    spec.fixed = {.d = 1e-7, .theta = 0.0, .omega_frac = 1e-1, .p = 0.5};
  }
  else if (name == "fig4" || name == "fig5")
  {
    spec.swept = SweptParameter::omega;
    spec.grid = {1e-3, 1.0, 200, GridScale::log};
    spec.fixed = {.d = 1e-7, .theta = 0.0, .omega_frac = 1e-2, .p = name == "fig4" ? 0.0 : 1.0};
    spec.series = SeriesAxis{SweptParameter::d, {1e-7, 2e-7, 3e-7}};
  }
  else
  {
    throw UsageError("unknown figure '" + std::string(name) + "' (expected fig1 ... fig5)");
  }
  return spec;
}

std::vector<ValidatedRow> run_validation(const SweepSpec &spec)
{
  const bool p_varies = spec.swept == SweptParameter::p ||
                        (spec.series && spec.series->parameter == SweptParameter::p);
  if (p_varies || spec.fixed.p != 1.0)
  {
    throw UsageError("validation against the local slab requires p = 1 throughout");
  }
  const std::vector<GridPoint> points = grid_points(spec);
  std::vector<FilmSetup> setups;
  setups.reserve(points.size());
  for (const GridPoint &point : points)
  {
    setups.push_back(point.setup);
  }
  const std::vector<SweepRow> rows = run_sweep(spec, 1);
  const std::vector<ValidationRow> checks = validate_thin_film(spec.material, setups);

  std::vector<ValidatedRow> out;
  out.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
  {
    out.push_back({rows[i], checks[i]});
  }
  return out;
}

}  // namespace thinfilm
