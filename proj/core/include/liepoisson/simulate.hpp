#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "liepoisson/poisson.hpp"

namespace liepoisson {

using Field = std::function<Vec(const Vec&)>;

enum class Method { rk4, euler };
Method parse_method(const std::string& text);
const char* to_string(Method m);

struct Monitor {
  std::string name;
  Observable observable;
};

struct IntegratorConfig {
  Method method = Method::rk4;
  double dt = 1e-3;
  long steps = 1000;
  std::vector<Monitor> monitors;
  long stride = 1;  // states at step s are recorded when s % stride == 0

  void validate() const;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Vec> states;
  std::vector<std::string> monitor_names;
  std::vector<std::vector<double>> monitor_values;  // parallel to monitor_names

  const std::vector<double>& monitor(const std::string& name) const;
};

// One explicit step of the chosen method.
Vec step(const Field& field, const Vec& z, double dt, Method method);

// Raises NonFiniteState with the offending step number.
Trajectory integrate(const Field& field, const Vec& z0, const IntegratorConfig& cfg);

// max |m(t) - m(0)| over recorded points.
double monitor_drift(const Trajectory& traj, const std::string& name);

// Order is empty when every error is exactly zero.
struct OrderEstimate {
  std::optional<double> order;
  std::vector<double> errors;  // parallel to the step sizes

  bool exact() const { return !order.has_value(); }
};

// Errors at time T are measured against a Richardson extrapolation built from dt_min/2 and dt_min/4
// at the method's nominal order; the estimate is the least-squares slope of log error against log dt.
OrderEstimate convergence_order_estimate(const Field& field, const Vec& z0, double T, const std::vector<double>& dts,
                                         Method method);

// Header "t,z1..zn,<monitors>"; every number printed with 17 significant digits.
void write_csv(std::ostream& out, const Trajectory& traj);

}  // namespace liepoisson
