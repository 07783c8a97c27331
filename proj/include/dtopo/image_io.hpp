#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "dtopo/curves.hpp"
#include "dtopo/neighborhood.hpp"

namespace dtopo {

// Image file: a JSON object
//   { "n": 2, "k": 8, "points": [[0,0],[1,-1]] }
// with exactly one of "t" / "k" and an optional string "name". Any k is
// resolved against n. Errors are ErrorCode::parse, prefixed with
// "<source>:<line>:<column>" for syntax errors.
DigitalImage parse_image(std::string_view text, std::string_view source = "<input>");

// ErrorCode::io when the file cannot be read.
DigitalImage load_image(const std::filesystem::path& path);

// Stable text form: keys n, k, points (plus name when given), one point per
// line, newline-terminated. Points in the image's sorted order.
std::string serialize_image(const DigitalImage& image,
                            std::optional<std::string_view> name = std::nullopt);

// Same format, points in curve order.
std::string serialize_curve(const CurveSequence& curve,
                            std::optional<std::string_view> name = std::nullopt);

// Lowercase hex SHA-256 of serialize_image(image).
std::string image_digest(const DigitalImage& image);

// "1,-2,3" or "(1,-2,3)" -> Point. ErrorCode::parse on malformed input.
Point parse_point(std::string_view text);

}  // namespace dtopo
