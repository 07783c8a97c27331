#pragma once

#include <cstdint>
#include <string>

#include "dtopo/lattice.hpp"
#include "dtopo/neighborhood.hpp"

namespace dtopo {

inline constexpr const char* kToolName = "dtopo";
inline constexpr const char* kToolVersion = "0.1.0";

// text: prose for people. machine: a JSON document with sorted keys and
// two-space indentation. Both are newline-terminated and byte-stable for
// identical inputs.
enum class Format { text, machine };

// Machine documents share the top-level keys
//   command, flags, inputs, result, tool
// where flags lists the interpretive conventions a result depends on.
std::string render_ktable(int max_n, Format format);
std::string render_neighborhood(const DigitalImage& image, const Point& x0, std::uint64_t eps,
                                Format format);
std::string render_connected(const DigitalImage& image, Format format);
std::string render_check_curve(const DigitalImage& image, Format format);
std::string render_search_curve(const AdjacencySpec& spec, std::uint64_t l, Format format);
std::string render_product_analyze(const DigitalImage& left, const DigitalImage& right,
                                   Format format);

}  // namespace dtopo
