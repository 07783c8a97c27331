#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dtopo/neighborhood.hpp"

namespace dtopo {

// X x Y inside Z^{n1+n2}; product points are left coordinates then right
// coordinates. No adjacency is attached: certification tries every
// k(t, n1+n2).
class ProductImage {
 public:
  ProductImage(DigitalImage left, DigitalImage right);

  const DigitalImage& left() const noexcept { return left_; }
  const DigitalImage& right() const noexcept { return right_; }
  const std::vector<Point>& points() const noexcept { return points_; }
  int dim() const noexcept { return left_.dim() + right_.dim(); }
  std::size_t size() const noexcept { return points_.size(); }

  bool contains(const Point& p) const;
  // Throws ErrorCode::membership when p is not a product point.
  std::pair<Point, Point> split(const Point& p) const;

  // The product as a digital image under k(t, n1+n2).
  DigitalImage as_image(int t) const;

 private:
  DigitalImage left_;
  DigitalImage right_;
  std::vector<Point> points_;
};

ProductImage product(DigitalImage left, DigitalImage right);

// Cartesian-product adjacency: exactly one factor moves, to an adjacent point.
bool induced_c_adjacent(const Point& p, const Point& q, const ProductImage& prod);

// Strong-product adjacency: C-adjacent, or both factors move to adjacent points.
bool induced_n_adjacent(const Point& p, const Point& q, const ProductImage& prod);

// Right-hand sides of the two neighborhood equations at p, sorted:
//   C-compatible: (N(x,1) x {y}) u ({x} x N(y,1))
//   normal:       N(x,1) x N(y,1)
std::vector<Point> expected_c_neighborhood(const ProductImage& prod, const Point& p);
std::vector<Point> expected_normal_neighborhood(const ProductImage& prod, const Point& p);

enum class WitnessSide {
  missing_from_lattice,  // required by the factors, not adjacent under k
  extra_in_lattice,      // adjacent under k, not allowed by the factors
};

const char* witness_side_name(WitnessSide side) noexcept;

struct Witness {
  Point p;
  Point q;
  WitnessSide side;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Certification {
  bool holds = false;
  std::optional<Witness> witness;  // present exactly when !holds
};

// Neighborhood-equation checks for the k(t, n1+n2)-adjacency. The witness is
// the least failing p and the least point of the symmetric difference there.
Certification certify_c_compatible(const ProductImage& prod, int t);
Certification certify_normal(const ProductImage& prod, int t);

// Pairwise-definition checks: the k(t, n1+n2)-adjacency restricted to the
// product agrees with induced_c_adjacent / induced_n_adjacent on every pair.
// Independent route to the same verdicts as the certify_* functions.
bool pairwise_c_compatible(const ProductImage& prod, int t);
bool pairwise_normal(const ProductImage& prod, int t);

struct CertOutcome {
  int t = 0;
  std::uint64_t k = 0;
  bool c_compatible = false;
  bool normal = false;
  std::optional<Witness> c_witness;
  std::optional<Witness> normal_witness;
};

struct ProductReport {
  int n1 = 0;
  int n2 = 0;
  std::uint64_t k1 = 0;
  std::uint64_t k2 = 0;
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  std::vector<CertOutcome> outcomes;  // one per t = 1..n1+n2

  std::vector<int> c_compatible_t() const;
  std::vector<int> normal_t() const;
};

ProductReport analyze(const DigitalImage& left, const DigitalImage& right);

}  // namespace dtopo
