#pragma once

#include <cstddef>
#include <vector>

namespace schwarz {

/* Pairwise (tree) summation in index order. The reduction tree depends only
   on the term count, so results are bit-reproducible across runs and do not
   depend on how callers schedule work. Error grows like O(log n · eps)
   instead of O(n · eps) for sequential accumulation. */

inline constexpr std::size_t kPairwiseBaseSize = 16;

template <typename T>
T pairwise_sum(const T* terms, std::size_t n) {
  if (n <= kPairwiseBaseSize) {
    T s{};
    for (std::size_t i = 0; i < n; ++i) s += terms[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(terms, half) + pairwise_sum(terms + half, n - half);
}

template <typename T>
T pairwise_sum(const std::vector<T>& terms) {
  return pairwise_sum(terms.data(), terms.size());
}

/* Sum term(i) over the indices with w[i] > 0, in index order. Skipping
   zero-weight indices up front keeps results bit-identical when such
   entries are appended or removed (the tree shape never sees them). */
template <typename T, typename F>
T support_sum(const std::vector<double>& w, F&& term) {
  std::vector<T> terms;
  terms.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0.0) terms.push_back(term(i));
  }
  return pairwise_sum(terms);
}

}  // namespace schwarz
