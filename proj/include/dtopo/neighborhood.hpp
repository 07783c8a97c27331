#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dtopo/lattice.hpp"

namespace dtopo {

// A digital image (X, k): a finite nonempty set of points of Z^n with one
// k(t,n)-adjacency. Points are kept sorted and unique.
class DigitalImage {
 public:
  // Throws ErrorCode::parameter on an empty set, a dimension mismatch or a
  // duplicate point.
  DigitalImage(std::vector<Point> points, AdjacencySpec spec);

  const std::vector<Point>& points() const noexcept { return points_; }
  const AdjacencySpec& spec() const noexcept { return spec_; }
  std::size_t size() const noexcept { return points_.size(); }
  int dim() const noexcept { return spec_.n(); }

  bool contains(const Point& p) const;
  std::optional<std::size_t> index_of(const Point& p) const;
  // Throws ErrorCode::membership when p is not in the image.
  std::size_t require_index(const Point& p) const;

  // Adjacency lists over point indices, each list sorted. Rebuilt per call.
  std::vector<std::vector<std::size_t>> adjacency_lists() const;

  friend bool operator==(const DigitalImage&, const DigitalImage&) = default;

 private:
  std::vector<Point> points_;
  AdjacencySpec spec_;
};

// Shortest simple k-path length, or unreachable. Never a sentinel integer.
class PathLength {
 public:
  static PathLength of(std::uint64_t edges) { return PathLength(edges); }
  static PathLength unreachable() { return PathLength(); }

  bool reachable() const noexcept { return value_.has_value(); }
  std::uint64_t value() const { return value_.value(); }
  bool within(std::uint64_t eps) const noexcept { return value_ && *value_ <= eps; }

  friend bool operator==(const PathLength&, const PathLength&) = default;

 private:
  PathLength() = default;
  explicit PathLength(std::uint64_t v) : value_(v) {}

  std::optional<std::uint64_t> value_;
};

// N_k(x0, 1): points of the image adjacent to x0, plus x0. Sorted.
std::vector<Point> neighborhood_1(const DigitalImage& image, const Point& x0);

PathLength path_length(const DigitalImage& image, const Point& x, const Point& y);

// N_k(x0, eps) = {x : l_k(x0, x) <= eps} u {x0}. eps >= 1. Sorted.
std::vector<Point> neighborhood(const DigitalImage& image, const Point& x0, std::uint64_t eps);

bool is_connected(const DigitalImage& image);

// Maximal k-connected blocks, each sorted, ordered by their least point.
std::vector<std::vector<Point>> components(const DigitalImage& image);

}  // namespace dtopo
