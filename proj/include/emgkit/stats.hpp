#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <vector>

#include "emgkit/errors.hpp"

// Per-series statistic kernels. Free functions over any dense vector-shaped
// Eigen expression (VectorXd, column blocks, maps, ...), templated on the
// expression so they evaluate lazily where possible. Scalar type follows the
// expression's scalar.

namespace emgkit {

template <typename Derived>
struct AmplitudeFeatures {
  typename Derived::Scalar mav;  // mean absolute value
  typename Derived::Scalar min;
  typename Derived::Scalar max;
  typename Derived::Scalar ptp;  // peak to peak
};

template <typename Derived>
struct DispersionFeatures {
  typename Derived::Scalar mean;
  typename Derived::Scalar median;
  typename Derived::Scalar var_s;  // sample variance, n-1 denominator
  typename Derived::Scalar var_p;  // population variance
  typename Derived::Scalar mad;    // mean absolute deviation
  typename Derived::Scalar std_s;
  typename Derived::Scalar std_p;
};

template <typename Derived>
struct OrderStatistics {
  typename Derived::Scalar percentile;
  typename Derived::Scalar q1;
  typename Derived::Scalar q3;
  typename Derived::Scalar iqr;
};

template <typename Derived>
struct ShapeFeatures {
  typename Derived::Scalar skewness;
  typename Derived::Scalar kurtosis;
};

template <typename Derived>
struct SpectralEnergyFeatures {
  typename Derived::Scalar energy;
  typename Derived::Scalar power;
  typename Derived::Scalar rms;
  typename Derived::Scalar hjorth_activity;  // equals var_p by definition
};

namespace detail {

// Near-zero second moments make the standardized moment ratios meaningless;
// below this relative threshold skewness/kurtosis resolve to 0.
inline constexpr double kShapeEpsilon = 1e-12;

template <typename Derived>
std::vector<typename Derived::Scalar> sorted_values(
    const Eigen::DenseBase<Derived>& x) {
  std::vector<typename Derived::Scalar> v(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i)
    v[static_cast<std::size_t>(i)] = x.derived()(i);
  std::sort(v.begin(), v.end());
  return v;
}

/// Order statistic at rank r = p*(n+1)/100 (clamped to [1,n]) with linear
/// interpolation between neighbouring order statistics; v must be sorted.
template <typename Scalar>
Scalar rank_interpolate(const std::vector<Scalar>& v, double p) {
  const double n = static_cast<double>(v.size());
  double rank = p * (n + 1.0) / 100.0;
  rank = std::clamp(rank, 1.0, n);
  const double lo = std::floor(rank);
  const double frac = rank - lo;
  const std::size_t i = static_cast<std::size_t>(lo) - 1;
  if (frac == 0.0 || i + 1 >= v.size()) return v[i];
  return static_cast<Scalar>(v[i] + frac * (v[i + 1] - v[i]));
}

}  // namespace detail

/// min/max/ptp plus the mean-absolute-value scalarization of the absolute
/// amplitude transform. Requires length >= 1.
template <typename Derived>
AmplitudeFeatures<Derived> amplitude_features(const Eigen::DenseBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  if (x.size() == 0) raise(ErrorCode::empty_series, "amplitude_features");
  AmplitudeFeatures<Derived> out;
  out.min = x.derived().minCoeff();
  out.max = x.derived().maxCoeff();
  out.ptp = out.max - out.min;
  out.mav = x.derived().array().abs().sum() / static_cast<Scalar>(x.size());
  return out;
}

/// k-th central moment (1/n) * sum((x_i - mean)^k). Requires length >= 1.
template <typename Derived>
typename Derived::Scalar central_moment(const Eigen::DenseBase<Derived>& x, int k) {
  using Scalar = typename Derived::Scalar;
  if (x.size() == 0) raise(ErrorCode::empty_series, "central_moment");
  if (k < 2 || k > 4)
    raise(ErrorCode::invalid_params, "central_moment order must be 2, 3 or 4");
  const Scalar mu = x.derived().mean();
  const auto d = (x.derived().array() - mu).eval();
  switch (k) {
    case 2: return (d * d).mean();
    case 3: return (d * d * d).mean();
    default: return (d * d * d * d).mean();
  }
}

/// Mean, order-statistic median, both variance conventions, mean absolute
/// deviation and both standard deviations. Requires length >= 2.
template <typename Derived>
DispersionFeatures<Derived> dispersion_features(const Eigen::DenseBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = x.size();
  if (n < 2) raise(ErrorCode::series_too_short, "dispersion_features needs n >= 2");
  DispersionFeatures<Derived> out;
  out.mean = x.derived().mean();
  const auto d = (x.derived().array() - out.mean).eval();
  const Scalar sq = (d * d).sum();
  out.var_s = sq / static_cast<Scalar>(n - 1);
  out.var_p = sq / static_cast<Scalar>(n);
  out.mad = d.abs().sum() / static_cast<Scalar>(n);
  out.std_s = std::sqrt(out.var_s);
  out.std_p = std::sqrt(out.var_p);
  const auto sorted = detail::sorted_values(x);
  out.median = detail::rank_interpolate(sorted, 50.0);
  return out;
}

/// Percentile and quartiles under the p*(n+1)/100 rank convention.
/// Requires length >= 2 and 0 < p < 100.
template <typename Derived>
OrderStatistics<Derived> order_statistics(const Eigen::DenseBase<Derived>& x,
                                          double p = 50.0) {
  if (x.size() < 2) raise(ErrorCode::series_too_short, "order_statistics needs n >= 2");
  if (!(p > 0.0 && p < 100.0))
    raise(ErrorCode::invalid_percent, "percentile must be in (0, 100)");
  const auto sorted = detail::sorted_values(x);
  OrderStatistics<Derived> out;
  out.percentile = detail::rank_interpolate(sorted, p);
  out.q1 = detail::rank_interpolate(sorted, 25.0);
  out.q3 = detail::rank_interpolate(sorted, 75.0);
  out.iqr = out.q3 - out.q1;
  return out;
}

/// Skewness G1 = m3 / m2^(3/2) and kurtosis G2 = m4 / m2^2. A second moment
/// vanishing relative to the mean-square amplitude resolves both to 0 instead
/// of dividing by ~0. Requires length >= 2.
template <typename Derived>
ShapeFeatures<Derived> shape_features(const Eigen::DenseBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = x.size();
  if (n < 2) raise(ErrorCode::series_too_short, "shape_features needs n >= 2");
  const Scalar mu = x.derived().mean();
  const auto d = (x.derived().array() - mu).eval();
  const Scalar m2 = (d * d).mean();
  const Scalar mean_square = x.derived().array().square().mean();
  if (m2 <= static_cast<Scalar>(detail::kShapeEpsilon) * mean_square)
    return {Scalar(0), Scalar(0)};
  const Scalar m3 = (d * d * d).mean();
  const Scalar m4 = (d * d * d * d).mean();
  return {m3 / (m2 * std::sqrt(m2)), m4 / (m2 * m2)};
}

/// Energy-style statistics: sum of squares, mean power, RMS, and Hjorth
/// activity (the population variance). Requires length >= 1.
template <typename Derived>
SpectralEnergyFeatures<Derived> spectral_energy_features(
    const Eigen::DenseBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = x.size();
  if (n == 0) raise(ErrorCode::empty_series, "spectral_energy_features");
  SpectralEnergyFeatures<Derived> out;
  out.energy = x.derived().array().square().sum();
  out.power = out.energy / static_cast<Scalar>(n);
  out.rms = std::sqrt(out.power);
  // Same expression as var_p in dispersion_features; kept bit-identical.
  const Scalar mu = x.derived().mean();
  const auto d = (x.derived().array() - mu).eval();
  out.hjorth_activity = (d * d).sum() / static_cast<Scalar>(n);
  return out;
}

}  // namespace emgkit
