#pragma once

// Globally adaptive 21-point Gauss-Kronrod quadrature for complex-valued
// integrands on a finite interval. The panel with the largest error estimate is
// bisected until the summed estimate meets the tolerance or the panel budget
// runs out.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <vector>

namespace thinfilm::quad
{

struct Options
{
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  std::size_t max_panels = 10000;
};

struct Result
{
  std::complex<double> value;
  double error;  // estimated absolute error
  std::size_t panels;
  bool converged;
};

namespace detail
{

// Kronrod abscissae on [-1, 1], descending; odd indices are the 10-point Gauss nodes.
inline constexpr std::array<double, 11> kronrod_nodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};

inline constexpr std::array<double, 11> kronrod_weights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525787140, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// Gauss weights for kronrod_nodes[1], [3], ..., [9].
inline constexpr std::array<double, 5> gauss_weights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel
{
  double a, b;
  std::complex<double> value;
  double error;

  bool operator<(const Panel &o) const { return error < o.error; }
};

template <class F>
Panel gauss_kronrod_21(const F &f, double a, double b)
{
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const std::complex<double> fc = f(center);
  std::complex<double> kronrod = kronrod_weights[10] * fc;
  std::complex<double> gauss = 0.0;
  for (std::size_t i = 0; i < 10; ++i)
  {
    const double dx = half * kronrod_nodes[i];
    const std::complex<double> pair = f(center - dx) + f(center + dx);
    kronrod += kronrod_weights[i] * pair;
    if (i % 2 == 1)
    {
      gauss += gauss_weights[i / 2] * pair;
    }
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Integrates f over [a, b]; f maps double to std::complex<double>. Stops when
/// error <= max(abs_tol, rel_tol * |value|). On budget exhaustion the best
/// estimate is returned with converged = false.
template <class F>
Result integrate(const F &f, double a, double b, const Options &opt = {})
{
  std::priority_queue<detail::Panel> panels;
  panels.push(detail::gauss_kronrod_21(f, a, b));
  std::complex<double> total = panels.top().value;
  double error = panels.top().error;

  auto done = [&] { return error <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total)); };

  while (!done() && panels.size() < opt.max_panels)
  {
    const detail::Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b))
    {
      break;  // panel no longer splittable in double precision
    }
    panels.pop();
    const detail::Panel left = detail::gauss_kronrod_21(f, worst.a, mid);
    const detail::Panel right = detail::gauss_kronrod_21(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum to shed the drift of the incremental updates.
  total = 0.0;
  error = 0.0;
  const std::size_t count = panels.size();
  std::vector<detail::Panel> leaves;
  leaves.reserve(count);
  while (!panels.empty())
  {
    leaves.push_back(panels.top());
    panels.pop();
  }
  for (auto it = leaves.rbegin(); it != leaves.rend(); ++it)
  {
    total += it->value;
    error += it->error;
  }
  return {total, error, count, done()};
}

}  // namespace thinfilm::quad
