#include "dtopo/image_io.hpp"

#include <openssl/evp.h>

#include <cerrno>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <limits>
#include <sstream>

#include "dtopo/error.hpp"

namespace dtopo {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string_view source, const std::string& msg) {
  std::ostringstream os;
  os << source << ": " << msg;
  throw Error(ErrorCode::parse, os.str());
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Coord as_coord(const json& v, std::string_view source, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned() &&
        v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Coord>::max())) {
      fail(source, where + ": coordinate out of 64-bit range");
    }
    return v.get<Coord>();
  }
  fail(source, where + ": coordinates must be integers");
}

std::string render(const std::vector<Point>& points, const AdjacencySpec& spec,
                   std::optional<std::string_view> name) {
  std::ostringstream os;
  os << "{\n";
  if (name) os << "  \"name\": " << json(std::string(*name)).dump() << ",\n";
  os << "  \"n\": " << spec.n() << ",\n";
  os << "  \"k\": " << spec.k() << ",\n";
  os << "  \"points\": [\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    os << "    [";
    const auto c = points[i].coords();
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) os << ", ";
      os << c[j];
    }
    os << ']' << (i + 1 < points.size() ? "," : "") << '\n';
  }
  os << "  ]\n}\n";
  return os.str();
}

}  // namespace

DigitalImage parse_image(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::ostringstream os;
    os << source << ':' << line << ':' << col << ": invalid JSON (byte " << e.byte << ")";
    throw Error(ErrorCode::parse, os.str());
  }
  if (!doc.is_object()) fail(source, "image file must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "n" && key != "t" && key != "k" && key != "points" && key != "name") {
      fail(source, "unknown key \"" + key + "\"");
    }
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() < 1 ||
      doc["n"].get<std::int64_t>() > std::numeric_limits<int>::max()) {
    fail(source, "\"n\" must be a positive integer");
  }
  const int n = static_cast<int>(doc["n"].get<std::int64_t>());
  const bool has_t = doc.contains("t");
  const bool has_k = doc.contains("k");
  if (has_t == has_k) fail(source, "exactly one of \"t\" and \"k\" is required");
  const auto& adj = has_t ? doc["t"] : doc["k"];
  if (!adj.is_number_integer() || adj.get<std::int64_t>() < 1) {
    fail(source, std::string("\"") + (has_t ? "t" : "k") + "\" must be a positive integer");
  }
  if (doc.contains("name") && !doc["name"].is_string()) fail(source, "\"name\" must be a string");

  AdjacencySpec spec = [&] {
    try {
      if (has_t) {
        const auto t = adj.get<std::int64_t>();
        if (t > n) fail(source, "\"t\" must satisfy 1 <= t <= n");
        return AdjacencySpec::from_t(static_cast<int>(t), n);
      }
      return AdjacencySpec::from_k(adj.get<std::uint64_t>(), n);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::parse) throw;
      fail(source, e.what());
    }
  }();

  if (!doc.contains("points") || !doc["points"].is_array()) {
    fail(source, "\"points\" must be a list of integer lists");
  }
  std::vector<Point> points;
  const auto& arr = doc["points"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "points[" + std::to_string(i) + "]";
    if (!arr[i].is_array()) fail(source, where + ": expected a list of integers");
    if (arr[i].size() != static_cast<std::size_t>(n)) {
      fail(source, where + ": expected " + std::to_string(n) + " coordinates, got " +
                       std::to_string(arr[i].size()));
    }
    std::vector<Coord> c;
    for (std::size_t j = 0; j < arr[i].size(); ++j) {
      c.push_back(as_coord(arr[i][j], source, where));
    }
    points.emplace_back(std::move(c));
  }
  try {
    return DigitalImage(std::move(points), spec);
  } catch (const Error& e) {
    fail(source, e.what());
  }
}

DigitalImage load_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot read image file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_image(buf.str(), path.string());
}

std::string serialize_image(const DigitalImage& image, std::optional<std::string_view> name) {
  return render(image.points(), image.spec(), name);
}

std::string serialize_curve(const CurveSequence& curve, std::optional<std::string_view> name) {
  return render(curve.points, curve.spec, name);
}

std::string image_digest(const DigitalImage& image) {
  const std::string text = serialize_image(image);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::io, "SHA-256 digest failed");
  }
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(md[i]);
  return os.str();
}

Point parse_point(std::string_view text) {
  std::string_view s = text;
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  s = trim(s);
  if (s.size() >= 2 && ((s.front() == '(' && s.back() == ')') ||
                        (s.front() == '[' && s.back() == ']'))) {
    s = s.substr(1, s.size() - 2);
  }
  std::vector<Coord> coords;
  while (true) {
    auto comma = s.find(',');
    auto field = trim(s.substr(0, comma));
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    Coord v{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw Error(ErrorCode::parse, "malformed point \"" + std::string(text) +
                                        "\": expected comma-separated integers");
    }
    coords.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return Point(std::move(coords));
}

}  // namespace dtopo
