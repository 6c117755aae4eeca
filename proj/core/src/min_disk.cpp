#include "schwarz/min_disk.hpp"

#include <cmath>
#include <cstddef>

#include "schwarz/errors.hpp"

namespace schwarz {

namespace {

constexpr double kBoundarySlack = 1e-12;

Disk disk_of(Cx p) { return Disk{p, 0.0}; }

Disk disk_of(Cx p, Cx q) {
  return Disk{0.5 * (p + q), 0.5 * std::abs(p - q)};
}

// Circle through three points. Near-collinear triples have no useful
// circumcenter; fall back to the smallest two-point disk covering the third.
Disk disk_of(Cx a, Cx b, Cx c) {
  const double ax = a.real(), ay = a.imag();
  const double bx = b.real(), by = b.imag();
  const double cx = c.real(), cy = c.imag();
  const double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  const double scale = std::abs(a - b) + std::abs(b - c) + std::abs(c - a);
  if (std::fabs(d) > 1e-14 * scale * scale) {
    const double na = std::norm(a), nb = std::norm(b), nc = std::norm(c);
    const double ux = (na * (by - cy) + nb * (cy - ay) + nc * (ay - by)) / d;
    const double uy = (na * (cx - bx) + nb * (ax - cx) + nc * (bx - ax)) / d;
    const Cx center{ux, uy};
    const double r = std::max(std::abs(a - center),
                              std::max(std::abs(b - center), std::abs(c - center)));
    return Disk{center, r};
  }
  Disk best;
  bool found = false;
  Disk widest;
  const Cx pts[3] = {a, b, c};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      Disk cand = disk_of(pts[i], pts[j]);
      if (cand.radius > widest.radius) widest = cand;
      if (cand.contains(pts[3 - i - j]) &&
          (!found || cand.radius < best.radius)) {
        best = cand;
        found = true;
      }
    }
  }
  return found ? best : widest;
}

std::uint64_t splitmix_step(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

bool Disk::contains(Cx p) const noexcept {
  const double d = std::abs(p - center);
  return d <= radius + kBoundarySlack * (1.0 + radius + d);
}

Disk minimal_enclosing_disk(std::vector<Cx> points, std::uint64_t seed) {
  if (points.empty()) {
    throw InvalidInput("minimal_enclosing_disk: no points");
  }
  // Fisher-Yates with a splitmix64 stream: deterministic for a fixed seed.
  std::uint64_t state = seed;
  for (std::size_t i = points.size() - 1; i > 0; --i) {
    const std::size_t j =
        static_cast<std::size_t>(splitmix_step(state) % (i + 1));
    std::swap(points[i], points[j]);
  }

  Disk d = disk_of(points[0]);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (d.contains(points[i])) continue;
    d = disk_of(points[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (d.contains(points[j])) continue;
      d = disk_of(points[i], points[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (!d.contains(points[k])) {
          d = disk_of(points[i], points[j], points[k]);
        }
      }
    }
  }
  return d;
}

}  // namespace schwarz
