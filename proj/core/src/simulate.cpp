#include "liepoisson/simulate.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace liepoisson {

Method parse_method(const std::string& text) {
  if (text == "rk4") return Method::rk4;
  if (text == "euler") return Method::euler;
  throw SchemaError("unknown integration method: " + text);
}

const char* to_string(Method m) { return m == Method::rk4 ? "rk4" : "euler"; }

void IntegratorConfig::validate() const {
  if (!(dt > 0) || !std::isfinite(dt)) throw ShapeError("dt must be positive and finite");
  if (steps < 0) throw ShapeError("steps must be non-negative");
  if (stride <= 0) throw ShapeError("stride must be positive");
  if (!std::isfinite(dt * static_cast<double>(steps))) throw ShapeError("dt * steps overflows");
}

const std::vector<double>& Trajectory::monitor(const std::string& name) const {
  for (std::size_t m = 0; m < monitor_names.size(); ++m)
    if (monitor_names[m] == name) return monitor_values[m];
  throw UnknownMonitor(name);
}

namespace {

Vec axpy(const Vec& z, double h, const Vec& k) {
  Vec out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = z[i] + h * k[i];
  return out;
}

bool all_finite(const Vec& z) {
  return std::all_of(z.begin(), z.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

Vec step(const Field& field, const Vec& z, double dt, Method method) {
  Vec k1 = field(z);
  require_dim(z.size(), k1.size());
  if (method == Method::euler) return axpy(z, dt, k1);
  Vec k2 = field(axpy(z, dt / 2, k1));
  Vec k3 = field(axpy(z, dt / 2, k2));
  Vec k4 = field(axpy(z, dt, k3));
  Vec out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = z[i] + dt / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return out;
}

Trajectory integrate(const Field& field, const Vec& z0, const IntegratorConfig& cfg) {
  cfg.validate();
  for (const auto& m : cfg.monitors) require_dim(z0.size(), m.observable.arity());
  if (!all_finite(z0)) throw NonFiniteState(0);

  Trajectory traj;
  for (const auto& m : cfg.monitors) traj.monitor_names.push_back(m.name);
  traj.monitor_values.resize(cfg.monitors.size());
  auto record = [&](long s, const Vec& z) {
    traj.times.push_back(static_cast<double>(s) * cfg.dt);
    traj.states.push_back(z);
    for (std::size_t m = 0; m < cfg.monitors.size(); ++m)
      traj.monitor_values[m].push_back(cfg.monitors[m].observable.value(z));
  };

  Vec z = z0;
  record(0, z);
  for (long s = 1; s <= cfg.steps; ++s) {
    z = step(field, z, cfg.dt, cfg.method);
    if (!all_finite(z)) throw NonFiniteState(s);
    if (s % cfg.stride == 0) record(s, z);
  }
  return traj;
}

double monitor_drift(const Trajectory& traj, const std::string& name) {
  const auto& series = traj.monitor(name);
  double worst = 0;
  for (double v : series) worst = std::max(worst, std::fabs(v - series.front()));
  return worst;
}

namespace {

Vec solve_to(const Field& field, const Vec& z0, double T, double dt, Method method) {
  const double n = std::round(T / dt);
  if (n < 1 || std::fabs(n * dt - T) > 1e-9 * std::max(1.0, T))
    throw ShapeError(fmt::format("step size {} does not divide the horizon {}", dt, T));
  Vec z = z0;
  for (long s = 0; s < static_cast<long>(n); ++s) {
    z = step(field, z, dt, method);
    if (!all_finite(z)) throw NonFiniteState(s + 1);
  }
  return z;
}

}  // namespace

OrderEstimate convergence_order_estimate(const Field& field, const Vec& z0, double T, const std::vector<double>& dts,
                                         Method method) {
  if (dts.size() < 3) throw InsufficientData("convergence estimate needs at least three step sizes");
  const double dt_min = *std::min_element(dts.begin(), dts.end());
  const double p = method == Method::rk4 ? 4 : 1;
  const Vec half = solve_to(field, z0, T, dt_min / 2, method);
  const Vec quarter = solve_to(field, z0, T, dt_min / 4, method);
  const double scale = std::pow(2.0, p);
  Vec ref(z0.size());
  for (std::size_t i = 0; i < ref.size(); ++i) ref[i] = (scale * quarter[i] - half[i]) / (scale - 1);

  OrderEstimate est;
  std::vector<double> xs, ys;
  for (double dt : dts) {
    Vec z = solve_to(field, z0, T, dt, method);
    double err = 0;
    for (std::size_t i = 0; i < z.size(); ++i) err = std::max(err, std::fabs(z[i] - ref[i]));
    est.errors.push_back(err);
    if (err > 0) {
      xs.push_back(std::log(dt));
      ys.push_back(std::log(err));
    }
  }
  if (xs.empty()) return est;
  if (xs.size() < 2) throw InsufficientData("fewer than two step sizes have a nonzero error");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0) throw InsufficientData("step sizes must differ");
  est.order = sxy / sxx;
  return est;
}

void write_csv(std::ostream& out, const Trajectory& traj) {
  const std::size_t n = traj.states.empty() ? 0 : traj.states.front().size();
  std::string line = "t";
  for (std::size_t i = 1; i <= n; ++i) line += fmt::format(",z{}", i);
  for (const auto& name : traj.monitor_names) line += "," + name;
  out << line << '\n';
  for (std::size_t r = 0; r < traj.times.size(); ++r) {
    line = fmt::format("{:.17g}", traj.times[r]);
    for (double x : traj.states[r]) line += fmt::format(",{:.17g}", x);
    for (const auto& series : traj.monitor_values) line += fmt::format(",{:.17g}", series[r]);
    out << line << '\n';
  }
}

}  // namespace liepoisson
