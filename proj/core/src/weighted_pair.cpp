#include "schwarz/weighted_pair.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "schwarz/errors.hpp"
#include "schwarz/summation.hpp"

namespace schwarz {

WeightedVectorPair::WeightedVectorPair(Mode mode, std::vector<Cx> x,
                                       std::vector<Cx> y,
                                       std::vector<double> w)
    : mode_(mode), x_(std::move(x)), y_(std::move(y)), w_(std::move(w)) {
  if (w_.empty()) w_.assign(x_.size(), 1.0);
  if (x_.size() != y_.size() || x_.size() != w_.size()) {
    throw InvalidInput("vector lengths differ: x=" + std::to_string(x_.size()) +
                       " y=" + std::to_string(y_.size()) +
                       " w=" + std::to_string(w_.size()));
  }
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (!is_finite(x_[i]) || !is_finite(y_[i]) || !is_finite(w_[i])) {
      throw InvalidInput("non-finite entry at index " + std::to_string(i));
    }
    if (w_[i] < 0.0) {
      throw InvalidInput("negative weight at index " + std::to_string(i));
    }
    if (mode_ == Mode::Real && (x_[i].imag() != 0.0 || y_[i].imag() != 0.0)) {
      throw InvalidInput("nonzero imaginary part at index " +
                         std::to_string(i) + " in real mode");
    }
  }
}

WeightedVectorPair WeightedVectorPair::real(std::vector<double> x,
                                            std::vector<double> y,
                                            std::vector<double> w) {
  std::vector<Cx> cx(x.begin(), x.end());
  std::vector<Cx> cy(y.begin(), y.end());
  return WeightedVectorPair(Mode::Real, std::move(cx), std::move(cy),
                            std::move(w));
}

WeightedVectorPair WeightedVectorPair::complex(std::vector<Cx> x,
                                               std::vector<Cx> y,
                                               std::vector<double> w) {
  return WeightedVectorPair(Mode::Complex, std::move(x), std::move(y),
                            std::move(w));
}

std::size_t WeightedVectorPair::support_size() const noexcept {
  std::size_t n = 0;
  for (double wi : w_) {
    if (wi > 0.0) ++n;
  }
  return n;
}

Cx weighted_inner(const WeightedVectorPair& pair) {
  const auto& x = pair.x();
  const auto& y = pair.y();
  return support_sum<Cx>(pair.weights(),
                         [&](std::size_t i) { return pair.weights()[i] * x[i] * std::conj(y[i]); });
}

double weighted_norm_sq(const std::vector<Cx>& v,
                        const std::vector<double>& w) {
  if (v.size() != w.size()) {
    throw InvalidInput("weighted_norm_sq: length mismatch");
  }
  return support_sum<double>(w,
                             [&](std::size_t i) { return w[i] * std::norm(v[i]); });
}

GapReport schwarz_gap(const WeightedVectorPair& pair, double rel_tol) {
  GapReport r;
  r.norm_x_sq = weighted_norm_sq(pair.x(), pair.weights());
  r.norm_y_sq = weighted_norm_sq(pair.y(), pair.weights());
  r.inner_xy = weighted_inner(pair);
  r.gap = r.norm_x_sq * r.norm_y_sq - std::norm(r.inner_xy);
  const double tol = tol_scale(r.norm_x_sq, r.norm_y_sq, 0.0, rel_tol);
  if (r.gap < 0.0 && r.gap >= -tol) r.gap = 0.0;
  return r;
}

}  // namespace schwarz
