#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "schwarz/weighted_pair.hpp"

namespace schwarz {

/// Scalar pair (a, A). The admissible region for ratios x_i/y_i is the
/// closed disk whose diameter is the segment [a, A]; only the center
/// (a+A)/2 and the width |A-a| enter the condition and the bound.
struct DiskBound {
  Cx a{0.0, 0.0};
  Cx A{0.0, 0.0};

  DiskBound(Cx a_, Cx A_);

  Cx center() const noexcept { return 0.5 * (a + A); }
  double radius() const noexcept { return 0.5 * std::abs(A - a); }
  double abs_sq() const noexcept { return std::norm(a) + std::norm(A); }
};

/// The admissibility condition in its two equivalent readings, evaluated
/// independently of each other:
///   aggregate_re   Re<Ay - x, x - ay>_w
///   ball_residual  (|A-a|/2)^2 ||y||^2_w - ||x - (a+A)/2 y||^2_w
/// The two agree up to summation rounding (an exact algebraic identity).
/// pointwise_ok reports the stronger per-index sufficient condition, taken
/// over the positive-weight indices.
struct ConditionDiagnostics {
  double aggregate_re = 0.0;
  double ball_residual = 0.0;
  bool pointwise_ok = false;
  bool satisfied = false;  // aggregate_re >= -tol_scale
};

/// One certificate: the Schwarz gap against (|A-a|^2/4) ||y||^4_w.
/// The bound claim holds whenever condition.satisfied; certify never
/// refuses, it reports satisfied = false instead.
struct CertifiedBound {
  double gap = 0.0;
  double bound = 0.0;
  double tightness = 0.0;  // gap/bound; 0 when both vanish
  ConditionDiagnostics condition;
};

ConditionDiagnostics check_condition(const WeightedVectorPair& pair,
                                     const DiskBound& disk,
                                     double rel_tol = kDefaultRelTol);

CertifiedBound certify(const WeightedVectorPair& pair, const DiskBound& disk,
                       double rel_tol = kDefaultRelTol);

/// The two sides of the exact decomposition
///   I1 = Re[(A ||y||^2 - <x,y>) (conj<x,y> - conj(a) ||y||^2)]
///   I2 = ||y||^2 Re<Ay - x, x - ay>
/// whose difference I1 - I2 reproduces the Schwarz gap for any inputs,
/// with no condition on the data.
std::pair<double, double> identity_terms(const WeightedVectorPair& pair,
                                         const DiskBound& disk);

/// Elementary scalar inequality Re[u conj(v)] <= |u+v|^2 / 4.
/// Returns (lhs, rhs).
std::pair<double, double> quarter_bound(Cx u, Cx v);

/// Constructs the pair attaining the bound exactly: y normalized to unit
/// w-norm, m a unit direction w-orthogonal to y (standard basis vector with
/// the largest orthogonal residual, ties broken by lowest index, one
/// re-orthogonalization pass), and x = (a+A)/2 y + (|A-a|/2) m.
/// The result satisfies the condition with aggregate_re = 0 and has
/// tightness 1 up to rounding.
/// Throws DegenerateDisk when a == A, InsufficientDimension when fewer than
/// two indices carry positive weight, InvalidInput when y vanishes on the
/// support.
WeightedVectorPair extremal_witness(Mode mode, std::vector<Cx> y,
                                    std::vector<double> w,
                                    const DiskBound& disk);

enum class FitMode { RealInterval, ComplexMinDisk };

/// Tightest disk making the pointwise condition hold. Real-interval mode
/// takes [min, max] of the ratios x_i/y_i (real pairs only); complex mode
/// computes their minimal enclosing disk and returns its real-axis diameter.
/// Indices with w_i = 0 are ignored; y_i = 0 with x_i = 0 is skipped.
/// Throws NoFiniteBounds when some supported ratio is unbounded,
/// EmptySupport when no ratio point exists.
DiskBound fit_disk(const WeightedVectorPair& pair, FitMode mode,
                   std::uint64_t seed = 1);

}  // namespace schwarz
