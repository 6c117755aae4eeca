#pragma once

#include <cstddef>
#include <vector>

#include "schwarz/scalar.hpp"

namespace schwarz {

inline constexpr double kDefaultRelTol = 1e-9;

/// Comparison slack used library-wide. Sign tests such as the disk condition
/// sit exactly at 0 for extremal inputs, so raw comparisons would flap;
/// the slack scales with the squared norms of the data and, when a disk is
/// involved, with |a|^2 + |A|^2 (pass 0 otherwise).
inline double tol_scale(double norm_x_sq, double norm_y_sq,
                        double disk_abs_sq = 0.0,
                        double rel_tol = kDefaultRelTol) {
  return rel_tol * (1.0 + norm_x_sq) * (1.0 + norm_y_sq) * (1.0 + disk_abs_sq);
}

/// Paired vectors x, y with nonnegative weights w, immutable after
/// construction. Finite-dimensional truncation stands in for any weighted
/// sequence space: zero-weight entries are invisible to every operation.
class WeightedVectorPair {
 public:
  /// Validates lengths, finiteness, w >= 0, and (in real mode) that every
  /// imaginary part is exactly zero. Empty w means unit weights.
  WeightedVectorPair(Mode mode, std::vector<Cx> x, std::vector<Cx> y,
                     std::vector<double> w = {});

  static WeightedVectorPair real(std::vector<double> x, std::vector<double> y,
                                 std::vector<double> w = {});
  static WeightedVectorPair complex(std::vector<Cx> x, std::vector<Cx> y,
                                    std::vector<double> w = {});

  Mode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return x_.size(); }
  const std::vector<Cx>& x() const noexcept { return x_; }
  const std::vector<Cx>& y() const noexcept { return y_; }
  const std::vector<double>& weights() const noexcept { return w_; }

  /// Number of indices with strictly positive weight.
  std::size_t support_size() const noexcept;

 private:
  Mode mode_;
  std::vector<Cx> x_, y_;
  std::vector<double> w_;
};

struct GapReport {
  double gap = 0.0;  // ||x||^2 ||y||^2 - |<x,y>|^2, clamped to 0 within -tol
  double norm_x_sq = 0.0;
  double norm_y_sq = 0.0;
  Cx inner_xy{0.0, 0.0};
};

/// <x,y>_w = sum_i w_i x_i conj(y_i), pairwise over the positive-weight
/// indices in index order.
Cx weighted_inner(const WeightedVectorPair& pair);

/// ||v||^2_w for a raw vector; lengths must match.
double weighted_norm_sq(const std::vector<Cx>& v, const std::vector<double>& w);

/// The Schwarz gap of the pair. Nonnegative up to summation rounding;
/// values within -tol_scale of zero are clamped to exactly zero.
GapReport schwarz_gap(const WeightedVectorPair& pair,
                      double rel_tol = kDefaultRelTol);

}  // namespace schwarz
