#include "dtopo/curves.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dtopo {

namespace {

bool cyclically_consecutive(std::size_t i, std::size_t j, std::size_t l) {
  const std::size_t d = i < j ? j - i : i - j;
  return d == 1 || d == l - 1;
}

struct Searcher {
  const AdjacencySpec& spec;
  std::size_t target;
  std::int64_t box;
  std::vector<std::vector<Coord>> offsets;
  std::vector<Point> seq;
  std::set<Point> used;
  std::uint64_t nodes = 0;

  static std::int64_t chebyshev_norm(const Point& p) {
    std::int64_t m = 0;
    for (auto c : p.coords()) m = std::max(m, c < 0 ? -c : c);
    return m;
  }

  bool fits(const Point& c) const {
    if (c <= seq.front()) return false;  // origin stays lexicographically least
    if (used.count(c)) return false;
    // After c, target - seq.size() steps remain to close the loop at the origin.
    const auto remaining = static_cast<std::int64_t>(target - seq.size());
    if (chebyshev_norm(c) > std::min(box, remaining)) return false;
    const bool closing = seq.size() + 1 == target;
    if (closing && !adjacent(c, seq.front(), spec)) return false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (i == 0 && closing) continue;
      if (adjacent(seq[i], c, spec)) return false;
    }
    return true;
  }

  bool extend() {
    ++nodes;
    if (seq.size() == target) {
      return !find_curve_defect(CurveSequence{seq, spec}).has_value();
    }
    const Point last = seq.back();
    for (const auto& off : offsets) {
      Point c = last.translated(off);
      if (!fits(c)) continue;
      seq.push_back(c);
      used.insert(c);
      if (extend()) return true;
      used.erase(c);
      seq.pop_back();
    }
    return false;
  }
};

CurveSequence make_curve(int t, int n, std::vector<Point> pts) {
  return CurveSequence{std::move(pts), AdjacencySpec::from_t(t, n)};
}

struct CanonicalEntry {
  std::string_view name;
  std::string_view origin;
  int t;
  int n;
  std::vector<Point> points;
};

const std::vector<CanonicalEntry>& canonical_table() {
  // SC4_2_4, SC8_2_6 and SC26_3_5 are the committed outputs of search_curve;
  // tests replay the search and compare.
  static const std::vector<CanonicalEntry> table = {
      {"SC4_2_4", "search_curve(t=1, n=2, l=4)", 1, 2,
       {{0, 0}, {0, 1}, {1, 1}, {1, 0}}},
      {"SC8_2_4", "diamond example of l_8 path lengths", 2, 2,
       {{0, 0}, {1, -1}, {2, 0}, {1, 1}}},
      {"SC8_2_6", "search_curve(t=2, n=2, l=6)", 2, 2,
       {{0, 0}, {0, 1}, {1, 2}, {2, 1}, {2, 0}, {1, -1}}},
      {"SC26_3_5", "search_curve(t=3, n=3, l=5)", 3, 3,
       {{0, 0, 0}, {0, 1, -1}, {1, 0, -2}, {2, -1, -1}, {1, -1, 0}}},
      {"SC18_3_6_EX35", "SC_18^{3,6} whose square is normal for t in {4,5,6}", 2, 3,
       {{0, 0, 0}, {1, 1, 0}, {1, 2, 1}, {0, 3, 1}, {-1, 2, 1}, {-1, 1, 0}}},
      {"MSC18", "SC_18^{3,6} whose square admits no C-compatible or normal adjacency", 2, 3,
       {{0, 0, 0}, {1, -1, 0}, {1, -1, 1}, {2, 0, 1}, {1, 1, 1}, {1, 1, 0}}},
  };
  return table;
}

}  // namespace

const char* curve_defect_kind_name(CurveDefect::Kind kind) noexcept {
  switch (kind) {
    case CurveDefect::Kind::duplicate_point: return "duplicate-point";
    case CurveDefect::Kind::too_short: return "too-short";
    case CurveDefect::Kind::missing_adjacency: return "missing-adjacency";
    case CurveDefect::Kind::forbidden_chord: return "forbidden-chord";
    case CurveDefect::Kind::bad_degree: return "bad-degree";
    case CurveDefect::Kind::disconnected: return "disconnected";
  }
  return "unknown";
}

std::string CurveDefect::describe() const {
  std::ostringstream os;
  const std::string at = point ? point->str() : std::string("?");
  switch (kind) {
    case Kind::duplicate_point:
      os << "duplicate point " << at << " at indices " << i << " and " << j;
      break;
    case Kind::too_short:
      os << "a simple closed curve needs at least 4 points, got " << i;
      break;
    case Kind::missing_adjacency:
      os << "consecutive points " << i << " and " << j << " are not adjacent";
      break;
    case Kind::forbidden_chord:
      os << "non-consecutive points " << i << " and " << j << " are adjacent";
      break;
    case Kind::bad_degree:
      os << "point " << at << " has " << degree << " neighbors in the set (expected 2)";
      break;
    case Kind::disconnected:
      os << "the set is not connected (the component of " << at << " has " << i
         << " of " << j << " points)";
      break;
  }
  return os.str();
}

std::optional<CurveDefect> find_curve_defect(const CurveSequence& seq) {
  const auto& pts = seq.points;
  const std::size_t l = pts.size();
  if (l == 0) throw Error(ErrorCode::parameter, "curve sequence is empty");
  for (const auto& p : pts) {
    if (p.dim() != static_cast<std::size_t>(seq.spec.n())) {
      throw Error(ErrorCode::parameter, "point " + p.str() + " has the wrong dimension");
    }
  }
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j) {
      if (pts[i] == pts[j]) {
        return CurveDefect{CurveDefect::Kind::duplicate_point, i, j, pts[i], 0};
      }
    }
  }
  if (l < 4) return CurveDefect{CurveDefect::Kind::too_short, l, 0, std::nullopt, 0};
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j) {
      const bool adj = adjacent(pts[i], pts[j], seq.spec);
      const bool consecutive = cyclically_consecutive(i, j, l);
      if (consecutive && !adj) {
        return CurveDefect{CurveDefect::Kind::missing_adjacency, i, j, std::nullopt, 0};
      }
      if (!consecutive && adj) {
        return CurveDefect{CurveDefect::Kind::forbidden_chord, i, j, std::nullopt, 0};
      }
    }
  }
  return std::nullopt;
}

std::size_t validate_curve(const CurveSequence& seq) {
  if (auto defect = find_curve_defect(seq)) throw CurveError(*defect);
  return seq.points.size();
}

Recognition recognize_curve(const DigitalImage& image) {
  const auto adj = image.adjacency_lists();
  const auto& pts = image.points();
  for (std::size_t i = 0; i < adj.size(); ++i) {
    if (adj[i].size() != 2) {
      return {std::nullopt,
              CurveDefect{CurveDefect::Kind::bad_degree, 0, 0, pts[i], adj[i].size()}};
    }
  }
  // Every degree is 2: walk the cycle through the least point.
  std::vector<Point> order{pts[0]};
  std::size_t prev = 0;
  std::size_t cur = adj[0][0];  // lists are sorted: lesser neighbor first
  while (cur != 0) {
    order.push_back(pts[cur]);
    const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  if (order.size() != pts.size()) {
    return {std::nullopt, CurveDefect{CurveDefect::Kind::disconnected, order.size(),
                                      pts.size(), pts[0], 2}};
  }
  CurveSequence seq{std::move(order), image.spec()};
  if (auto defect = find_curve_defect(seq)) return {std::nullopt, defect};
  return {std::move(seq), std::nullopt};
}

const char* admissibility_name(Admissibility a) noexcept {
  switch (a) {
    case Admissibility::admissible: return "admissible";
    case Admissibility::inadmissible: return "inadmissible";
    case Admissibility::unspecified: return "unspecified";
  }
  return "unknown";
}

LengthVerdict admissible_length(const AdjacencySpec& spec, std::uint64_t l) {
  auto verdict = [](bool ok, int rule, bool even = false) {
    return LengthVerdict{ok ? Admissibility::admissible : Admissibility::inadmissible, rule,
                         even};
  };
  const int t = spec.t();
  const int n = spec.n();
  if (t == 1 && n != 2) return verdict(l >= 4 && l % 2 == 0, 1, true);
  if (t == 1 && n == 2) return verdict(l >= 4 && l % 2 == 0 && l != 6, 2, true);
  if (t == 2 && n == 2) return verdict(l >= 4 && l != 5, 3);
  if (t == 2 && n == 3) return verdict(l >= 4 && l != 5, 4);
  if (t >= 3) return verdict(l >= 4, 5);
  // t == 2, n >= 4: lengths below 4 are excluded for every curve regardless.
  if (l < 4) return verdict(false, 0);
  return LengthVerdict{Admissibility::unspecified, 0, false};
}

SearchOutcome search_curve(const AdjacencySpec& spec, std::uint64_t l) {
  SearchOutcome out;
  out.box = static_cast<std::int64_t>(l);
  if (l < 4) return out;
  Searcher s{spec, static_cast<std::size_t>(l), out.box, neighbor_offsets(spec), {}, {}, 0};
  Point origin(std::vector<Coord>(static_cast<std::size_t>(spec.n()), 0));
  s.seq.push_back(origin);
  s.used.insert(origin);
  if (s.extend()) out.curve = CurveSequence{s.seq, spec};
  out.nodes = s.nodes;
  return out;
}

const std::vector<std::string_view>& canonical_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> v;
    for (const auto& e : canonical_table()) v.push_back(e.name);
    return v;
  }();
  return names;
}

CanonicalCurve canonical(std::string_view name) {
  for (const auto& e : canonical_table()) {
    if (e.name == name) {
      CanonicalCurve c{e.name, e.origin, make_curve(e.t, e.n, e.points)};
      validate_curve(c.curve);
      return c;
    }
  }
  std::ostringstream os;
  os << "unknown canonical curve '" << name << "'; valid names:";
  for (auto n : canonical_names()) os << ' ' << n;
  throw Error(ErrorCode::unknown_name, os.str());
}

}  // namespace dtopo
