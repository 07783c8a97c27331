#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtopo/error.hpp"
#include "dtopo/lattice.hpp"
#include "dtopo/neighborhood.hpp"

namespace dtopo {

// A cyclically ordered list of points claimed to form SC_k^{n,l}.
struct CurveSequence {
  std::vector<Point> points;
  AdjacencySpec spec;

  std::size_t length() const noexcept { return points.size(); }
  DigitalImage to_image() const { return DigitalImage(points, spec); }
};

// Why a sequence or point set is not a simple closed k-curve.
struct CurveDefect {
  enum class Kind {
    duplicate_point,     // indices i < j hold the same point
    too_short,           // fewer than 4 points
    missing_adjacency,   // cyclically consecutive i, j not adjacent
    forbidden_chord,     // non-consecutive i, j adjacent
    bad_degree,          // `point` has `degree` neighbors in the set
    disconnected,        // every degree is 2 but the set splits into cycles
  };

  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;
  std::optional<Point> point;
  std::size_t degree = 0;

  std::string describe() const;
};

const char* curve_defect_kind_name(CurveDefect::Kind kind) noexcept;

class CurveError : public Error {
 public:
  explicit CurveError(CurveDefect defect)
      : Error(ErrorCode::invalid_curve, defect.describe()), defect_(std::move(defect)) {}

  const CurveDefect& defect() const noexcept { return defect_; }

 private:
  CurveDefect defect_;
};

// First violation in scan order: duplicates, length, then index pairs (i < j)
// row by row. nullopt when the sequence is an SC_k^{n,l}.
std::optional<CurveDefect> find_curve_defect(const CurveSequence& seq);

// Returns l, or throws CurveError describing the first violation.
std::size_t validate_curve(const CurveSequence& seq);

struct Recognition {
  std::optional<CurveSequence> curve;
  std::optional<CurveDefect> defect;

  explicit operator bool() const noexcept { return curve.has_value(); }
};

// Recovers the cyclic order of a point set whose adjacency graph is a single
// cycle. Starts at the least point and walks toward its lesser neighbor.
Recognition recognize_curve(const DigitalImage& image);

enum class Admissibility { admissible, inadmissible, unspecified };

struct LengthVerdict {
  Admissibility value;
  int rule = 0;                 // 1..5, 0 when no rule applies
  bool even_reading = false;    // verdict relies on reading N_0 as even integers
};

const char* admissibility_name(Admissibility a) noexcept;

// Admissible lengths l of SC_k^{n,l}:
//   t=1, n!=2 : even l >= 4
//   t=1, n=2  : even l >= 4, l != 6
//   t=2, n=2  : l >= 4, l != 5
//   t=2, n=3  : l >= 4, l != 5
//   t>=3      : l >= 4
// t=2 with n >= 4 is not covered and yields Admissibility::unspecified.
LengthVerdict admissible_length(const AdjacencySpec& spec, std::uint64_t l);

struct SearchOutcome {
  std::optional<CurveSequence> curve;
  std::uint64_t nodes = 0;   // partial sequences visited
  std::int64_t box = 0;      // search confined to [-box, box]^n
};

// Deterministic backtracking for an SC_k^{n,l}. points[0] is the origin and is
// the lexicographically least point of the curve; every point lies in
// [-l, l]^n; extensions are tried in lexicographic order. An empty result only
// means none exists inside that box.
SearchOutcome search_curve(const AdjacencySpec& spec, std::uint64_t l);

struct CanonicalCurve {
  std::string_view name;
  std::string_view origin;   // where the representative comes from
  CurveSequence curve;

  DigitalImage image() const { return curve.to_image(); }
};

const std::vector<std::string_view>& canonical_names();

// Throws ErrorCode::unknown_name listing the valid names.
CanonicalCurve canonical(std::string_view name);

}  // namespace dtopo
