#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace thinfilm
{

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A physical parameter outside its valid domain (non-positive d, p outside [0,1], ...).
class InvalidParameter : public Error
{
public:
  using Error::Error;
};

/// Unknown preset name, malformed sweep description or config key.
class UsageError : public Error
{
public:
  using Error::Error;
};

/// Re(w) <= 0: the size-effect integral does not converge.
class DomainError : public Error
{
public:
  using Error::Error;
};

/// Adaptive quadrature ran out of panels before meeting its tolerance.
class QuadratureFailure : public Error
{
public:
  QuadratureFailure(const std::string &what, std::complex<double> best_estimate,
                    double error_estimate)
    : Error(what), best_estimate(best_estimate), error_estimate(error_estimate)
  {
  }

  std::complex<double> best_estimate;
  double error_estimate;
};

/// Re(B) < 0 would mean a film that emits energy.
class PassivityViolation : public Error
{
public:
  using Error::Error;
};

/// The local slab sits on a pole of tan(qd/2) or cot(qd/2).
class SlabResonance : public Error
{
public:
  SlabResonance(const std::string &what, std::complex<double> half_phase)
    : Error(what), half_phase(half_phase)
  {
  }

  std::complex<double> half_phase;  // qd/2 at the offending point
};

}  // namespace thinfilm
