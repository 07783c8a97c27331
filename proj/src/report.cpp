#include "dtopo/report.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "dtopo/curves.hpp"
#include "dtopo/image_io.hpp"
#include "dtopo/product.hpp"

namespace dtopo {

namespace {

using nlohmann::json;

json point_json(const Point& p) {
  json a = json::array();
  for (auto c : p.coords()) a.push_back(c);
  return a;
}

json points_json(const std::vector<Point>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(point_json(p));
  return a;
}

json image_json(const DigitalImage& image) {
  return {{"n", image.dim()},
          {"t", image.spec().t()},
          {"k", image.spec().k()},
          {"points", image.size()},
          {"sha256", image_digest(image)}};
}

json document(json command, json inputs, json result, json flags) {
  return {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
          {"command", std::move(command)},
          {"inputs", std::move(inputs)},
          {"result", std::move(result)},
          {"flags", std::move(flags)}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string describe(const DigitalImage& image) {
  std::ostringstream os;
  os << "n=" << image.dim() << ", k=" << image.spec().k() << ", " << image.size()
     << (image.size() == 1 ? " point" : " points");
  return os.str();
}

void add_length_flags(json& flags, const LengthVerdict& v) {
  if (v.even_reading) flags.push_back("n0-read-as-even");
  if (v.value == Admissibility::unspecified) flags.push_back("length-rule-unspecified");
}

json length_json(const LengthVerdict& v) {
  return {{"verdict", admissibility_name(v.value)}, {"rule", v.rule}};
}

std::string length_text(const LengthVerdict& v) {
  std::ostringstream os;
  os << admissibility_name(v.value);
  if (v.rule) os << " (length rule " << v.rule << ")";
  if (v.even_reading) os << " [N_0 read as the even positive integers]";
  if (v.value == Admissibility::unspecified) os << " [no length rule covers t=2, n>=4]";
  return os.str();
}

json defect_json(const CurveDefect& d) {
  json j = {{"kind", curve_defect_kind_name(d.kind)}, {"message", d.describe()}};
  switch (d.kind) {
    case CurveDefect::Kind::bad_degree:
      j["point"] = point_json(*d.point);
      j["degree"] = d.degree;
      break;
    case CurveDefect::Kind::disconnected:
      j["point"] = point_json(*d.point);
      j["component_size"] = d.i;
      j["size"] = d.j;
      break;
    case CurveDefect::Kind::too_short:
      j["size"] = d.i;
      break;
    default:
      j["indices"] = {d.i, d.j};
      break;
  }
  return j;
}

json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return {{"p", point_json(w->p)}, {"q", point_json(w->q)}, {"side", witness_side_name(w->side)}};
}

std::string join_ints(const std::vector<std::uint64_t>& v) {
  if (v.empty()) return "none";
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os.str();
}

}  // namespace

std::string render_ktable(int max_n, Format format) {
  std::vector<std::vector<std::uint64_t>> rows;
  for (int n = 1; n <= max_n; ++n) rows.push_back(k_values(n));
  if (format == Format::machine) {
    json table = json::array();
    for (int n = 1; n <= max_n; ++n) {
      table.push_back({{"n", n}, {"k", rows[static_cast<std::size_t>(n - 1)]}});
    }
    return dump(document({{"name", "ktable"}, {"max_n", max_n}}, json::object(),
                         {{"rows", table}}, json::array()));
  }
  std::ostringstream os;
  os << "k(t,n) adjacencies of Z^n, t = 1..n\n";
  for (int n = 1; n <= max_n; ++n) {
    os << "n=" << n << ':';
    for (auto k : rows[static_cast<std::size_t>(n - 1)]) os << ' ' << k;
    os << '\n';
  }
  return os.str();
}

std::string render_neighborhood(const DigitalImage& image, const Point& x0, std::uint64_t eps,
                                Format format) {
  const auto members = neighborhood(image, x0, eps);
  if (format == Format::machine) {
    return dump(document(
        {{"name", "neighborhood"}, {"point", point_json(x0)}, {"eps", eps}},
        {{"image", image_json(image)}},
        {{"size", members.size()}, {"members", points_json(members)}},
        json::array({"neighborhoods-subset-relative"})));
  }
  std::ostringstream os;
  os << "N_" << image.spec().k() << '(' << x0.str() << ", " << eps << ") in image ("
     << describe(image) << "): " << members.size()
     << (members.size() == 1 ? " point\n" : " points\n");
  for (const auto& p : members) os << "  " << p.str() << '\n';
  return os.str();
}

std::string render_connected(const DigitalImage& image, Format format) {
  const auto blocks = components(image);
  const bool connected = blocks.size() == 1;
  if (format == Format::machine) {
    json comp = json::array();
    for (const auto& b : blocks) comp.push_back(points_json(b));
    return dump(document({{"name", "connected"}}, {{"image", image_json(image)}},
                         {{"connected", connected},
                          {"component_count", blocks.size()},
                          {"components", comp}},
                         json::array()));
  }
  std::ostringstream os;
  os << (connected ? "connected" : "not connected") << " (" << describe(image) << "), "
     << blocks.size() << (blocks.size() == 1 ? " component\n" : " components\n");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    os << "  component " << i + 1 << ':';
    for (const auto& p : blocks[i]) os << ' ' << p.str();
    os << '\n';
  }
  return os.str();
}

std::string render_check_curve(const DigitalImage& image, Format format) {
  const auto rec = recognize_curve(image);
  json flags = json::array();
  json result;
  std::ostringstream os;
  if (rec) {
    const auto& curve = *rec.curve;
    const auto l = curve.length();
    const auto verdict = admissible_length(image.spec(), l);
    add_length_flags(flags, verdict);
    if (verdict.value == Admissibility::inadmissible) flags.push_back("length-rule-conflict");
    result = {{"is_curve", true},
              {"l", l},
              {"order", points_json(curve.points)},
              {"length_rule", length_json(verdict)}};
    os << "simple closed " << image.spec().k() << "-curve in Z^" << image.dim() << ", l=" << l
       << '\n'
       << "order:";
    for (const auto& p : curve.points) os << ' ' << p.str();
    os << "\nlength rule: " << length_text(verdict) << '\n';
  } else {
    result = {{"is_curve", false}, {"defect", defect_json(*rec.defect)}};
    os << "not a simple closed " << image.spec().k() << "-curve: " << rec.defect->describe()
       << '\n';
  }
  if (format == Format::machine) {
    return dump(document({{"name", "check-curve"}}, {{"image", image_json(image)}}, result, flags));
  }
  return os.str();
}

std::string render_search_curve(const AdjacencySpec& spec, std::uint64_t l, Format format) {
  const auto found = search_curve(spec, l);
  const auto verdict = admissible_length(spec, l);
  json flags = json::array();
  add_length_flags(flags, verdict);
  if (!found.curve) flags.push_back("bounded-box-result");
  if (found.curve && verdict.value == Admissibility::inadmissible) {
    flags.push_back("length-rule-conflict");
  }
  if (format == Format::machine) {
    json result = {{"found", found.curve.has_value()},
                   {"box", found.box},
                   {"nodes", found.nodes},
                   {"length_rule", length_json(verdict)},
                   {"curve", found.curve ? points_json(found.curve->points) : json(nullptr)}};
    return dump(document({{"name", "search-curve"},
                          {"n", spec.n()},
                          {"t", spec.t()},
                          {"k", spec.k()},
                          {"l", l}},
                         json::object(), result, flags));
  }
  std::ostringstream os;
  os << "search for SC_" << spec.k() << "^{" << spec.n() << ',' << l << "} in [-" << found.box
     << ", " << found.box << "]^" << spec.n() << ": ";
  if (found.curve) {
    os << "found\n";
    for (const auto& p : found.curve->points) os << "  " << p.str() << '\n';
  } else {
    os << "none in bounded box (" << found.nodes << " partial sequences explored)\n";
  }
  os << "length rule: " << length_text(verdict) << '\n';
  return os.str();
}

std::string render_product_analyze(const DigitalImage& left, const DigitalImage& right,
                                   Format format) {
  const auto report = analyze(left, right);
  std::vector<std::uint64_t> c_k, n_k;
  for (const auto& o : report.outcomes) {
    if (o.c_compatible) c_k.push_back(o.k);
    if (o.normal) n_k.push_back(o.k);
  }
  if (format == Format::machine) {
    json outcomes = json::array();
    for (const auto& o : report.outcomes) {
      outcomes.push_back({{"t", o.t},
                          {"k", o.k},
                          {"c_compatible", o.c_compatible},
                          {"normal", o.normal},
                          {"c_witness", witness_json(o.c_witness)},
                          {"normal_witness", witness_json(o.normal_witness)}});
    }
    json result = {{"n", report.n1 + report.n2},
                   {"points", report.left_size * report.right_size},
                   {"outcomes", outcomes},
                   {"c_compatible_t", report.c_compatible_t()},
                   {"normal_t", report.normal_t()},
                   {"c_compatible_k", c_k},
                   {"normal_k", n_k}};
    return dump(document({{"name", "product-analyze"}},
                         {{"left", image_json(left)}, {"right", image_json(right)}}, result,
                         json::array({"coordinate-order-left-right", "all-t-candidates",
                                      "neighborhoods-subset-relative",
                                      "representative-specific"})));
  }
  std::ostringstream os;
  const int n = report.n1 + report.n2;
  os << "product X x Y in Z^" << n << ", " << report.left_size * report.right_size
     << " points\n"
     << "  X: " << describe(left) << "\n"
     << "  Y: " << describe(right) << "\n"
     << "coordinates are X then Y; neighborhoods are taken inside the sets;\n"
     << "verdicts hold for these point sets, not for every embedding of their curve class\n\n";
  os << std::left << std::setw(4) << "t" << std::setw(8) << "k" << std::setw(14)
     << "C-compatible" << "normal\n";
  for (const auto& o : report.outcomes) {
    os << std::left << std::setw(4) << o.t << std::setw(8) << o.k << std::setw(14)
       << (o.c_compatible ? "yes" : "no") << (o.normal ? "yes" : "no") << '\n';
  }
  os << '\n';
  for (const auto& o : report.outcomes) {
    auto line = [&](const char* what, const std::optional<Witness>& w) {
      if (!w) return;
      os << "t=" << o.t << " not " << what << ": at p=" << w->p.str() << ", q=" << w->q.str()
         << " is " << witness_side_name(w->side) << '\n';
    };
    line("C-compatible", o.c_witness);
    line("normal", o.normal_witness);
  }
  os << "\nC-compatible k: " << join_ints(c_k) << '\n'
     << "normal k: " << join_ints(n_k) << '\n';
  return os.str();
}

}  // namespace dtopo
