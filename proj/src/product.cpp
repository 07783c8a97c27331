#include "dtopo/product.hpp"

#include <algorithm>
#include <iterator>

#include "dtopo/error.hpp"

namespace dtopo {

namespace {

std::vector<std::vector<Point>> factor_neighborhoods(const DigitalImage& image) {
  std::vector<std::vector<Point>> out;
  out.reserve(image.size());
  for (const auto& x : image.points()) out.push_back(neighborhood_1(image, x));
  return out;
}

// Equation-based certification shared by both product adjacencies.
template <typename Expected>
Certification certify_by_neighborhoods(const ProductImage& prod, int t, Expected expected) {
  const DigitalImage image = prod.as_image(t);
  const auto adj = image.adjacency_lists();
  const auto& pts = image.points();
  const auto left_nb = factor_neighborhoods(prod.left());
  const auto right_nb = factor_neighborhoods(prod.right());
  const std::size_t m = prod.right().size();

  for (std::size_t idx = 0; idx < pts.size(); ++idx) {
    // Product points are in (left index, right index) row-major order.
    const std::size_t li = idx / m;
    const std::size_t ri = idx % m;
    std::vector<Point> actual{pts[idx]};
    for (auto j : adj[idx]) actual.push_back(pts[j]);
    std::sort(actual.begin(), actual.end());
    std::vector<Point> want = expected(prod, li, ri, left_nb, right_nb);
    if (actual == want) continue;

    std::vector<Point> missing, extra;
    std::set_difference(want.begin(), want.end(), actual.begin(), actual.end(),
                        std::back_inserter(missing));
    std::set_difference(actual.begin(), actual.end(), want.begin(), want.end(),
                        std::back_inserter(extra));
    const bool use_missing = extra.empty() || (!missing.empty() && missing[0] < extra[0]);
    Witness w{pts[idx], use_missing ? missing[0] : extra[0],
              use_missing ? WitnessSide::missing_from_lattice : WitnessSide::extra_in_lattice};
    return Certification{false, std::move(w)};
  }
  return Certification{true, std::nullopt};
}

std::vector<Point> c_rhs(const ProductImage& prod, std::size_t li, std::size_t ri,
                         const std::vector<std::vector<Point>>& left_nb,
                         const std::vector<std::vector<Point>>& right_nb) {
  const Point& x = prod.left().points()[li];
  const Point& y = prod.right().points()[ri];
  std::vector<Point> out;
  for (const auto& a : left_nb[li]) out.push_back(a.concat(y));
  for (const auto& b : right_nb[ri]) {
    if (b != y) out.push_back(x.concat(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> normal_rhs(const ProductImage&, std::size_t li, std::size_t ri,
                              const std::vector<std::vector<Point>>& left_nb,
                              const std::vector<std::vector<Point>>& right_nb) {
  std::vector<Point> out;
  for (const auto& a : left_nb[li]) {
    for (const auto& b : right_nb[ri]) out.push_back(a.concat(b));
  }
  // Factor neighborhoods are sorted, and concatenation preserves that order.
  return out;
}

template <typename Induced>
bool pairwise_agrees(const ProductImage& prod, int t, Induced induced) {
  const auto spec = AdjacencySpec::from_t(t, prod.dim());
  const auto& pts = prod.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (adjacent(pts[i], pts[j], spec) != induced(pts[i], pts[j], prod)) return false;
    }
  }
  return true;
}

std::size_t index_in(const DigitalImage& image, const Point& p) {
  return image.require_index(p);
}

}  // namespace

ProductImage::ProductImage(DigitalImage left, DigitalImage right)
    : left_(std::move(left)), right_(std::move(right)) {
  points_.reserve(left_.size() * right_.size());
  for (const auto& x : left_.points()) {
    for (const auto& y : right_.points()) points_.push_back(x.concat(y));
  }
}

bool ProductImage::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::pair<Point, Point> ProductImage::split(const Point& p) const {
  const auto n1 = static_cast<std::size_t>(left_.dim());
  const auto n2 = static_cast<std::size_t>(right_.dim());
  if (p.dim() != n1 + n2 || !contains(p)) {
    throw Error(ErrorCode::membership, "point " + p.str() + " is not in the product");
  }
  return {p.slice(0, n1), p.slice(n1, n2)};
}

DigitalImage ProductImage::as_image(int t) const {
  return DigitalImage(points_, AdjacencySpec::from_t(t, dim()));
}

ProductImage product(DigitalImage left, DigitalImage right) {
  return ProductImage(std::move(left), std::move(right));
}

bool induced_c_adjacent(const Point& p, const Point& q, const ProductImage& prod) {
  auto [x, y] = prod.split(p);
  auto [x2, y2] = prod.split(q);
  if (x == x2) return adjacent(y, y2, prod.right().spec());
  if (y == y2) return adjacent(x, x2, prod.left().spec());
  return false;
}

bool induced_n_adjacent(const Point& p, const Point& q, const ProductImage& prod) {
  if (induced_c_adjacent(p, q, prod)) return true;
  auto [x, y] = prod.split(p);
  auto [x2, y2] = prod.split(q);
  return adjacent(x, x2, prod.left().spec()) && adjacent(y, y2, prod.right().spec());
}

std::vector<Point> expected_c_neighborhood(const ProductImage& prod, const Point& p) {
  auto [x, y] = prod.split(p);
  std::vector<std::vector<Point>> ln(prod.left().size()), rn(prod.right().size());
  const auto li = index_in(prod.left(), x);
  const auto ri = index_in(prod.right(), y);
  ln[li] = neighborhood_1(prod.left(), x);
  rn[ri] = neighborhood_1(prod.right(), y);
  return c_rhs(prod, li, ri, ln, rn);
}

std::vector<Point> expected_normal_neighborhood(const ProductImage& prod, const Point& p) {
  auto [x, y] = prod.split(p);
  std::vector<std::vector<Point>> ln(prod.left().size()), rn(prod.right().size());
  const auto li = index_in(prod.left(), x);
  const auto ri = index_in(prod.right(), y);
  ln[li] = neighborhood_1(prod.left(), x);
  rn[ri] = neighborhood_1(prod.right(), y);
  return normal_rhs(prod, li, ri, ln, rn);
}

const char* witness_side_name(WitnessSide side) noexcept {
  switch (side) {
    case WitnessSide::missing_from_lattice: return "missing-from-lattice";
    case WitnessSide::extra_in_lattice: return "extra-in-lattice";
  }
  return "unknown";
}

Certification certify_c_compatible(const ProductImage& prod, int t) {
  return certify_by_neighborhoods(prod, t, c_rhs);
}

Certification certify_normal(const ProductImage& prod, int t) {
  return certify_by_neighborhoods(prod, t, normal_rhs);
}

bool pairwise_c_compatible(const ProductImage& prod, int t) {
  return pairwise_agrees(prod, t, induced_c_adjacent);
}

bool pairwise_normal(const ProductImage& prod, int t) {
  return pairwise_agrees(prod, t, induced_n_adjacent);
}

std::vector<int> ProductReport::c_compatible_t() const {
  std::vector<int> out;
  for (const auto& o : outcomes) {
    if (o.c_compatible) out.push_back(o.t);
  }
  return out;
}

std::vector<int> ProductReport::normal_t() const {
  std::vector<int> out;
  for (const auto& o : outcomes) {
    if (o.normal) out.push_back(o.t);
  }
  return out;
}

ProductReport analyze(const DigitalImage& left, const DigitalImage& right) {
  const ProductImage prod(left, right);
  ProductReport report;
  report.n1 = left.dim();
  report.n2 = right.dim();
  report.k1 = left.spec().k();
  report.k2 = right.spec().k();
  report.left_size = left.size();
  report.right_size = right.size();
  // Each t is certified independently; no interval structure is assumed.
  for (int t = 1; t <= prod.dim(); ++t) {
    CertOutcome o;
    o.t = t;
    o.k = k_value(t, prod.dim());
    auto c = certify_c_compatible(prod, t);
    auto nm = certify_normal(prod, t);
    o.c_compatible = c.holds;
    o.c_witness = std::move(c.witness);
    o.normal = nm.holds;
    o.normal_witness = std::move(nm.witness);
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

}  // namespace dtopo
