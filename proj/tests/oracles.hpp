#pragma once

// Test-only reference implementations. None of these call into the code
// paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "dtopo/lattice.hpp"
#include "dtopo/neighborhood.hpp"

namespace oracle {

using dtopo::Coord;
using dtopo::Point;

// Number of vectors in {-1,0,1}^n with between 1 and t nonzero entries,
// found by decoding every base-3 index.
inline std::uint64_t k_by_counting(int t, int n) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    int nonzero = 0;
    for (std::uint64_t c = code; c; c /= 3) nonzero += (c % 3) != 0;
    if (nonzero >= 1 && nonzero <= t) ++count;
  }
  return count;
}

// Chebyshev distance 1 and Hamming difference count <= t.
inline bool adjacent(const Point& p, const Point& q, int t) {
  Coord cheb = 0;
  int hamming = 0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    Coord d = p[i] > q[i] ? p[i] - q[i] : q[i] - p[i];
    cheb = std::max(cheb, d);
    hamming += d != 0;
  }
  return cheb == 1 && hamming <= t;
}

// Shortest length over every simple path (distinct points, consecutive
// points adjacent) from x to y, by exhaustive backtracking.
inline std::optional<std::uint64_t> brute_path_length(const std::vector<Point>& pts, int t,
                                                      std::size_t x, std::size_t y) {
  if (x == y) return 0;
  std::optional<std::uint64_t> best;
  std::vector<bool> used(pts.size(), false);
  auto rec = [&](auto&& self, std::size_t cur, std::uint64_t len) -> void {
    if (cur == y) {
      if (!best || len < *best) best = len;
      return;
    }
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (!used[j] && adjacent(pts[cur], pts[j], t)) {
        used[j] = true;
        self(self, j, len + 1);
        used[j] = false;
      }
    }
  };
  used[x] = true;
  rec(rec, x, 0);
  return best;
}

// Deterministic generator: raw mt19937_64 output reduced modulo, so the
// sequence does not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 gen_;
};

// Random set of `size` distinct points in [0, side)^n. The side grows when
// the box has fewer than 2*size cells.
inline std::vector<Point> random_points(Rng& rng, int n, std::size_t size, Coord side) {
  auto cells = [&] {
    std::uint64_t c = 1;
    for (int i = 0; i < n; ++i) c *= static_cast<std::uint64_t>(side);
    return c;
  };
  while (cells() < 2 * size) ++side;
  std::set<Point> pts;
  while (pts.size() < size) {
    std::vector<Coord> c;
    for (int i = 0; i < n; ++i) c.push_back(rng.between(0, side - 1));
    pts.insert(Point(std::move(c)));
  }
  return {pts.begin(), pts.end()};
}

// Connected set grown from the origin: repeatedly step from a random member
// to a random lattice neighbor under k(t,n).
inline std::vector<Point> grown_points(Rng& rng, int n, int t, std::size_t size) {
  std::vector<Point> pts{Point(std::vector<Coord>(static_cast<std::size_t>(n), 0))};
  std::set<Point> seen(pts.begin(), pts.end());
  while (pts.size() < size) {
    const Point& from = pts[rng.below(pts.size())];
    std::vector<Coord> c(from.coords().begin(), from.coords().end());
    for (auto& v : c) v += rng.between(-1, 1);
    Point q(std::move(c));
    if (!adjacent(from, q, t) || seen.count(q)) continue;
    seen.insert(q);
    pts.push_back(q);
  }
  return pts;
}

// Every simple cycle of exactly `len` points through the origin in the
// k(1,n) lattice graph, counted by naive DFS (chords allowed). Used for the
// parity fact: the count is zero for odd len.
inline std::uint64_t count_cycles_through_origin(int n, std::size_t len) {
  const Point origin(std::vector<Coord>(static_cast<std::size_t>(n), 0));
  std::vector<Point> path{origin};
  std::uint64_t count = 0;
  auto rec = [&](auto&& self) -> void {
    const Point last = path.back();
    for (int axis = 0; axis < n; ++axis) {
      for (Coord step : {-1, 1}) {
        std::vector<Coord> c(last.coords().begin(), last.coords().end());
        c[static_cast<std::size_t>(axis)] += step;
        Point q(std::move(c));
        if (path.size() == len) {
          if (q == origin) ++count;
          continue;
        }
        if (std::find(path.begin(), path.end(), q) != path.end()) continue;
        path.push_back(q);
        self(self);
        path.pop_back();
      }
    }
  };
  rec(rec);
  return count;
}

}  // namespace oracle
