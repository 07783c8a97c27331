#include "dtopo/neighborhood.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "dtopo/error.hpp"

namespace dtopo {

namespace {

constexpr std::uint64_t kUnvisited = std::numeric_limits<std::uint64_t>::max();

// Breadth-first distances from `source`, stopping after depth `limit`.
std::vector<std::uint64_t> bfs(const std::vector<std::vector<std::size_t>>& adj,
                               std::size_t source, std::uint64_t limit) {
  std::vector<std::uint64_t> dist(adj.size(), kUnvisited);
  std::vector<std::size_t> frontier{source}, next;
  dist[source] = 0;
  for (std::uint64_t d = 1; d <= limit && !frontier.empty(); ++d) {
    for (auto a : frontier) {
      for (auto b : adj[a]) {
        if (dist[b] == kUnvisited) {
          dist[b] = d;
          next.push_back(b);
        }
      }
    }
    std::swap(frontier, next);
    next.clear();
  }
  return dist;
}

}  // namespace

DigitalImage::DigitalImage(std::vector<Point> points, AdjacencySpec spec)
    : points_(std::move(points)), spec_(spec) {
  if (points_.empty()) throw Error(ErrorCode::parameter, "digital image must be nonempty");
  for (const auto& p : points_) {
    if (p.dim() != static_cast<std::size_t>(spec_.n())) {
      std::ostringstream os;
      os << "point " << p.str() << " has dimension " << p.dim() << ", image is in Z^"
         << spec_.n();
      throw Error(ErrorCode::parameter, os.str());
    }
  }
  std::sort(points_.begin(), points_.end());
  auto dup = std::adjacent_find(points_.begin(), points_.end());
  if (dup != points_.end()) {
    throw Error(ErrorCode::parameter, "duplicate point " + dup->str());
  }
}

bool DigitalImage::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::optional<std::size_t> DigitalImage::index_of(const Point& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

std::size_t DigitalImage::require_index(const Point& p) const {
  auto idx = index_of(p);
  if (!idx) throw Error(ErrorCode::membership, "point " + p.str() + " is not in the image");
  return *idx;
}

std::vector<std::vector<std::size_t>> DigitalImage::adjacency_lists() const {
  const std::size_t n = points_.size();
  std::vector<std::vector<std::size_t>> adj(n);
  if (spec_.k() < n) {
    // Sparse: probe the k lattice neighbors of each point.
    const auto offsets = neighbor_offsets(spec_);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& off : offsets) {
        if (auto j = index_of(points_[i].translated(off))) adj[i].push_back(*j);
      }
      std::sort(adj[i].begin(), adj[i].end());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (adjacent(points_[i], points_[j], spec_)) {
          adj[i].push_back(j);
          adj[j].push_back(i);
        }
      }
    }
  }
  return adj;
}

std::vector<Point> neighborhood_1(const DigitalImage& image, const Point& x0) {
  image.require_index(x0);
  std::vector<Point> out;
  for (const auto& x : image.points()) {
    if (x == x0 || adjacent(x, x0, image.spec())) out.push_back(x);
  }
  return out;
}

PathLength path_length(const DigitalImage& image, const Point& x, const Point& y) {
  const auto src = image.require_index(x);
  const auto dst = image.require_index(y);
  if (src == dst) return PathLength::of(0);
  auto dist = bfs(image.adjacency_lists(), src, kUnvisited);
  if (dist[dst] == kUnvisited) return PathLength::unreachable();
  return PathLength::of(dist[dst]);
}

std::vector<Point> neighborhood(const DigitalImage& image, const Point& x0, std::uint64_t eps) {
  if (eps == 0) {
    throw Error(ErrorCode::parameter, "neighborhood radius must be a positive integer");
  }
  const auto src = image.require_index(x0);
  auto dist = bfs(image.adjacency_lists(), src, eps);
  std::vector<Point> out;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] != kUnvisited) out.push_back(image.points()[i]);
  }
  return out;
}

std::vector<std::vector<Point>> components(const DigitalImage& image) {
  const auto adj = image.adjacency_lists();
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::vector<Point>> blocks;
  // Points are sorted, so scanning in index order yields blocks ordered by
  // their least point.
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> members{s}, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      auto a = stack.back();
      stack.pop_back();
      for (auto b : adj[a]) {
        if (!seen[b]) {
          seen[b] = true;
          members.push_back(b);
          stack.push_back(b);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<Point> block;
    block.reserve(members.size());
    for (auto i : members) block.push_back(image.points()[i]);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

bool is_connected(const DigitalImage& image) {
  auto dist = bfs(image.adjacency_lists(), 0, kUnvisited);
  return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnvisited; });
}

}  // namespace dtopo
