#include "dtopo/lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "dtopo/error.hpp"

namespace dtopo {

namespace {

// lattice_neighbors materializes k points; refuse absurd requests.
constexpr std::uint64_t kMaxEnumerated = std::uint64_t{1} << 24;

void check_tn(int t, int n) {
  if (n < 1 || t < 1 || t > n) {
    std::ostringstream os;
    os << "adjacency parameters out of range: need 1 <= t <= n, got t=" << t
       << ", n=" << n;
    throw Error(ErrorCode::parameter, os.str());
  }
}

void check_dim(const Point& p, const AdjacencySpec& spec) {
  if (p.dim() != static_cast<std::size_t>(spec.n())) {
    std::ostringstream os;
    os << "point " << p.str() << " has dimension " << p.dim()
       << ", adjacency is on Z^" << spec.n();
    throw Error(ErrorCode::parameter, os.str());
  }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::overflow, "k(t,n) exceeds 64-bit range");
  }
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::overflow, "k(t,n) exceeds 64-bit range");
  }
  return r;
}

// |a - b| <= 1 without forming a - b.
int unit_difference(Coord a, Coord b) {
  if (a == b) return 0;
  if (a < b) return (b - 1 == a) ? 1 : 2;
  return (a - 1 == b) ? 1 : 2;
}

}  // namespace

Point::Point(std::vector<Coord> coords) : coords_(std::move(coords)) {}

Point::Point(std::initializer_list<Coord> coords) : coords_(coords) {}

Point Point::concat(const Point& other) const {
  std::vector<Coord> c;
  c.reserve(coords_.size() + other.coords_.size());
  c.insert(c.end(), coords_.begin(), coords_.end());
  c.insert(c.end(), other.coords_.begin(), other.coords_.end());
  return Point(std::move(c));
}

Point Point::slice(std::size_t first, std::size_t count) const {
  auto begin = coords_.begin() + static_cast<std::ptrdiff_t>(first);
  return Point(std::vector<Coord>(begin, begin + static_cast<std::ptrdiff_t>(count)));
}

Point Point::translated(std::span<const Coord> offset) const {
  std::vector<Coord> c(coords_);
  for (std::size_t i = 0; i < c.size() && i < offset.size(); ++i) {
    if (__builtin_add_overflow(c[i], offset[i], &c[i])) {
      throw Error(ErrorCode::overflow, "coordinate overflow translating " + str());
    }
  }
  return Point(std::move(c));
}

std::string Point::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

AdjacencySpec AdjacencySpec::from_t(int t, int n) {
  return AdjacencySpec(t, n, k_value(t, n));
}

AdjacencySpec AdjacencySpec::from_k(std::uint64_t k, int n) {
  int t = t_from_k(k, n);
  return AdjacencySpec(t, n, k);
}

std::uint64_t k_value(int t, int n) {
  check_tn(t, n);
  // C(n,i) = C(n,i-1) * (n-i+1) / i. With g = gcd(C(n,i-1), i), i/g divides
  // n-i+1, so the division is exact before multiplying.
  std::uint64_t binom = 1;
  std::uint64_t pow2 = 1;
  std::uint64_t k = 0;
  for (int i = 1; i <= t; ++i) {
    const auto ui = static_cast<std::uint64_t>(i);
    const std::uint64_t g = std::gcd(binom, ui);
    binom = checked_mul(binom / g, static_cast<std::uint64_t>(n - i + 1) / (ui / g));
    pow2 = checked_mul(pow2, 2);
    k = checked_add(k, checked_mul(pow2, binom));
  }
  return k;
}

std::vector<std::uint64_t> k_values(int n) {
  check_tn(1, n);
  std::vector<std::uint64_t> out;
  for (int t = 1; t <= n; ++t) out.push_back(k_value(t, n));
  return out;
}

int t_from_k(std::uint64_t k, int n) {
  if (n < 1) {
    throw Error(ErrorCode::parameter, "dimension n must be >= 1, got " + std::to_string(n));
  }
  std::ostringstream valid;
  for (int t = 1; t <= n; ++t) {
    std::uint64_t kt;
    try {
      kt = k_value(t, n);
    } catch (const Error&) {
      break;
    }
    if (kt == k) return t;
    if (t > 1) valid << ", ";
    valid << kt;
  }
  std::ostringstream os;
  os << "no " << k << "-adjacency on Z^" << n << "; valid k values: " << valid.str();
  throw Error(ErrorCode::unknown_adjacency, os.str());
}

bool adjacent(const Point& p, const Point& q, const AdjacencySpec& spec) {
  check_dim(p, spec);
  check_dim(q, spec);
  int differing = 0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    int d = unit_difference(p[i], q[i]);
    if (d > 1) return false;
    differing += d;
  }
  return differing >= 1 && differing <= spec.t();
}

std::vector<std::vector<Coord>> neighbor_offsets(const AdjacencySpec& spec) {
  if (spec.k() > kMaxEnumerated) {
    throw Error(ErrorCode::parameter, "refusing to enumerate " + std::to_string(spec.k()) +
                                          " lattice neighbors");
  }
  const auto n = static_cast<std::size_t>(spec.n());
  std::vector<std::vector<Coord>> out;
  out.reserve(spec.k());
  std::vector<Coord> cur(n, -1);
  // Odometer over {-1,0,1}^n in lexicographic order.
  while (true) {
    auto nonzero = std::count_if(cur.begin(), cur.end(), [](Coord c) { return c != 0; });
    if (nonzero >= 1 && nonzero <= spec.t()) out.push_back(cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == 1) {
      cur[i - 1] = -1;
      --i;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

std::vector<Point> lattice_neighbors(const Point& p, const AdjacencySpec& spec) {
  check_dim(p, spec);
  std::vector<Point> out;
  for (const auto& off : neighbor_offsets(spec)) out.push_back(p.translated(off));
  // Offsets are lexicographic, so translates are too.
  return out;
}

}  // namespace dtopo
