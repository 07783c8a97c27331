#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dtopo {

using Coord = std::int64_t;

// A lattice point of Z^n. Ordered lexicographically.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Coord> coords);
  Point(std::initializer_list<Coord> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Coord> coords() const noexcept { return coords_; }

  // Coordinate concatenation: (this, other) in Z^{n1+n2}.
  Point concat(const Point& other) const;
  Point slice(std::size_t first, std::size_t count) const;
  Point translated(std::span<const Coord> offset) const;

  // "(1,-1,0)"
  std::string str() const;

  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<Coord> coords_;
};

// One k(t,n)-adjacency of Z^n. Always carries n, since k alone is ambiguous
// (k(2,2) = 8 = k(1,4)).
class AdjacencySpec {
 public:
  static AdjacencySpec from_t(int t, int n);
  static AdjacencySpec from_k(std::uint64_t k, int n);

  int t() const noexcept { return t_; }
  int n() const noexcept { return n_; }
  std::uint64_t k() const noexcept { return k_; }

  friend bool operator==(const AdjacencySpec&, const AdjacencySpec&) = default;

 private:
  AdjacencySpec(int t, int n, std::uint64_t k) : t_(t), n_(n), k_(k) {}

  int t_;
  int n_;
  std::uint64_t k_;
};

// k(t,n) = sum_{i=1..t} 2^i C(n,i), exact. Throws ErrorCode::overflow when the
// value does not fit in 64 bits.
std::uint64_t k_value(int t, int n);

// The unique t in [1,n] with k_value(t,n) == k.
int t_from_k(std::uint64_t k, int n);

// All k(t,n) for t = 1..n, increasing.
std::vector<std::uint64_t> k_values(int n);

// Distinct, every coordinate difference in {-1,0,1}, at most t nonzero.
bool adjacent(const Point& p, const Point& q, const AdjacencySpec& spec);

// Every point of Z^n adjacent to p, sorted. Size is spec.k().
std::vector<Point> lattice_neighbors(const Point& p, const AdjacencySpec& spec);

// The offsets used by lattice_neighbors, sorted.
std::vector<std::vector<Coord>> neighbor_offsets(const AdjacencySpec& spec);

}  // namespace dtopo
