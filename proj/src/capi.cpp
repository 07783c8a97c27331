#include "dtopo/dtopo.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "dtopo/curves.hpp"
#include "dtopo/error.hpp"
#include "dtopo/image_io.hpp"
#include "dtopo/product.hpp"
#include "dtopo/report.hpp"

struct dtopo_image {
  dtopo::DigitalImage image;
};

struct dtopo_product_report {
  dtopo::ProductReport report;
};

namespace {

thread_local std::string last_error;

dtopo_status to_status(dtopo::ErrorCode code) {
  using dtopo::ErrorCode;
  switch (code) {
    case ErrorCode::parameter: return DTOPO_ERR_PARAMETER;
    case ErrorCode::membership: return DTOPO_ERR_MEMBERSHIP;
    case ErrorCode::unknown_adjacency: return DTOPO_ERR_UNKNOWN_ADJACENCY;
    case ErrorCode::parse: return DTOPO_ERR_PARSE;
    case ErrorCode::invalid_curve: return DTOPO_ERR_INVALID_CURVE;
    case ErrorCode::unknown_name: return DTOPO_ERR_UNKNOWN_NAME;
    case ErrorCode::overflow: return DTOPO_ERR_OVERFLOW;
    case ErrorCode::io: return DTOPO_ERR_IO;
  }
  return DTOPO_ERR_INTERNAL;
}

// Runs f, translating exceptions into status codes and the last-error text.
template <typename F>
dtopo_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return DTOPO_OK;
  } catch (const dtopo::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return DTOPO_ERR_INTERNAL;
}

void require(const void* p, const char* what) {
  if (!p) throw dtopo::Error(dtopo::ErrorCode::parameter, std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dtopo::Point point_from(const int64_t* coords, int32_t n) {
  require(coords, "point");
  return dtopo::Point(std::vector<dtopo::Coord>(coords, coords + n));
}

dtopo::Format format_from(dtopo_format f) {
  switch (f) {
    case DTOPO_FORMAT_TEXT: return dtopo::Format::text;
    case DTOPO_FORMAT_MACHINE: return dtopo::Format::machine;
  }
  throw dtopo::Error(dtopo::ErrorCode::parameter, "unknown output format");
}

dtopo_image* wrap(dtopo::DigitalImage image) { return new dtopo_image{std::move(image)}; }

}  // namespace

extern "C" {

const char* dtopo_version(void) { return dtopo::kToolVersion; }

const char* dtopo_last_error(void) { return last_error.c_str(); }

const char* dtopo_status_name(dtopo_status status) {
  switch (status) {
    case DTOPO_OK: return "ok";
    case DTOPO_ERR_PARAMETER: return "parameter";
    case DTOPO_ERR_MEMBERSHIP: return "membership";
    case DTOPO_ERR_UNKNOWN_ADJACENCY: return "unknown-adjacency";
    case DTOPO_ERR_PARSE: return "parse";
    case DTOPO_ERR_INVALID_CURVE: return "invalid-curve";
    case DTOPO_ERR_UNKNOWN_NAME: return "unknown-name";
    case DTOPO_ERR_OVERFLOW: return "overflow";
    case DTOPO_ERR_IO: return "io";
    case DTOPO_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void dtopo_string_free(char* s) { std::free(s); }

dtopo_status dtopo_k_value(int32_t t, int32_t n, uint64_t* out_k) {
  return guarded([&] {
    require(out_k, "out_k");
    *out_k = dtopo::k_value(t, n);
  });
}

dtopo_status dtopo_t_from_k(uint64_t k, int32_t n, int32_t* out_t) {
  return guarded([&] {
    require(out_t, "out_t");
    *out_t = dtopo::t_from_k(k, n);
  });
}

dtopo_status dtopo_adjacent(const int64_t* p, const int64_t* q, int32_t n, int32_t t,
                            int* out_adjacent) {
  return guarded([&] {
    require(out_adjacent, "out_adjacent");
    const auto spec = dtopo::AdjacencySpec::from_t(t, n);
    *out_adjacent = dtopo::adjacent(point_from(p, n), point_from(q, n), spec) ? 1 : 0;
  });
}

dtopo_status dtopo_image_create(int32_t n, int32_t t, const int64_t* coords, size_t point_count,
                                dtopo_image** out) {
  return guarded([&] {
    require(out, "out");
    const auto spec = dtopo::AdjacencySpec::from_t(t, n);
    if (point_count > 0) require(coords, "coords");
    std::vector<dtopo::Point> pts;
    for (size_t i = 0; i < point_count; ++i) {
      pts.push_back(point_from(coords + i * static_cast<size_t>(n), n));
    }
    *out = wrap(dtopo::DigitalImage(std::move(pts), spec));
  });
}

dtopo_status dtopo_image_parse(const char* text, const char* source_name, dtopo_image** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(dtopo::parse_image(text, source_name ? source_name : "<input>"));
  });
}

dtopo_status dtopo_image_load(const char* path, dtopo_image** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = wrap(dtopo::load_image(path));
  });
}

dtopo_status dtopo_canonical_image(const char* name, dtopo_image** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = wrap(dtopo::canonical(name).image());
  });
}

void dtopo_image_free(dtopo_image* image) { delete image; }

int32_t dtopo_image_dim(const dtopo_image* image) { return image ? image->image.dim() : 0; }

int32_t dtopo_image_t(const dtopo_image* image) { return image ? image->image.spec().t() : 0; }

uint64_t dtopo_image_k(const dtopo_image* image) { return image ? image->image.spec().k() : 0; }

size_t dtopo_image_size(const dtopo_image* image) { return image ? image->image.size() : 0; }

dtopo_status dtopo_image_point(const dtopo_image* image, size_t index, int64_t* out_coords) {
  return guarded([&] {
    require(image, "image");
    require(out_coords, "out_coords");
    if (index >= image->image.size()) {
      throw dtopo::Error(dtopo::ErrorCode::parameter, "point index out of range");
    }
    const auto c = image->image.points()[index].coords();
    std::copy(c.begin(), c.end(), out_coords);
  });
}

dtopo_status dtopo_image_serialize(const dtopo_image* image, char** out_text) {
  return guarded([&] {
    require(image, "image");
    require(out_text, "out_text");
    *out_text = copy_string(dtopo::serialize_image(image->image));
  });
}

size_t dtopo_canonical_count(void) { return dtopo::canonical_names().size(); }

const char* dtopo_canonical_name(size_t index) {
  const auto& names = dtopo::canonical_names();
  // The table's string_views point at string literals, so they are terminated.
  return index < names.size() ? names[index].data() : nullptr;
}

dtopo_status dtopo_canonical_file(const char* name, char** out_text) {
  return guarded([&] {
    require(name, "name");
    require(out_text, "out_text");
    const auto c = dtopo::canonical(name);
    *out_text = copy_string(dtopo::serialize_curve(c.curve, c.name));
  });
}

dtopo_status dtopo_path_length(const dtopo_image* image, const int64_t* x, const int64_t* y,
                               int* out_reachable, uint64_t* out_length) {
  return guarded([&] {
    require(image, "image");
    require(out_reachable, "out_reachable");
    require(out_length, "out_length");
    const int32_t n = image->image.dim();
    const auto len = dtopo::path_length(image->image, point_from(x, n), point_from(y, n));
    *out_reachable = len.reachable() ? 1 : 0;
    *out_length = len.reachable() ? len.value() : 0;
  });
}

dtopo_status dtopo_is_connected(const dtopo_image* image, int* out_connected,
                                size_t* out_components) {
  return guarded([&] {
    require(image, "image");
    require(out_connected, "out_connected");
    const auto blocks = dtopo::components(image->image);
    *out_connected = blocks.size() == 1 ? 1 : 0;
    if (out_components) *out_components = blocks.size();
  });
}

dtopo_status dtopo_curve_length(const dtopo_image* image, size_t* out_l) {
  return guarded([&] {
    require(image, "image");
    require(out_l, "out_l");
    const auto rec = dtopo::recognize_curve(image->image);
    *out_l = rec ? rec.curve->length() : 0;
  });
}

dtopo_status dtopo_product_analyze(const dtopo_image* left, const dtopo_image* right,
                                   dtopo_product_report** out) {
  return guarded([&] {
    require(left, "left");
    require(right, "right");
    require(out, "out");
    *out = new dtopo_product_report{dtopo::analyze(left->image, right->image)};
  });
}

size_t dtopo_report_outcome_count(const dtopo_product_report* report) {
  return report ? report->report.outcomes.size() : 0;
}

dtopo_status dtopo_report_outcome(const dtopo_product_report* report, size_t index,
                                  dtopo_cert_outcome* out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    if (index >= report->report.outcomes.size()) {
      throw dtopo::Error(dtopo::ErrorCode::parameter, "outcome index out of range");
    }
    const auto& o = report->report.outcomes[index];
    *out = dtopo_cert_outcome{o.t, o.k, o.c_compatible ? 1 : 0, o.normal ? 1 : 0};
  });
}

void dtopo_report_free(dtopo_product_report* report) { delete report; }

dtopo_status dtopo_render_ktable(int32_t max_n, dtopo_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    if (max_n < 1) throw dtopo::Error(dtopo::ErrorCode::parameter, "max_n must be >= 1");
    *out = copy_string(dtopo::render_ktable(max_n, format_from(format)));
  });
}

dtopo_status dtopo_render_neighborhood(const dtopo_image* image, const char* point, uint64_t eps,
                                       dtopo_format format, char** out) {
  return guarded([&] {
    require(image, "image");
    require(point, "point");
    require(out, "out");
    const auto p = dtopo::parse_point(point);
    if (p.dim() != static_cast<size_t>(image->image.dim())) {
      throw dtopo::Error(dtopo::ErrorCode::parameter,
                         "point " + p.str() + " does not have the image's dimension " +
                             std::to_string(image->image.dim()));
    }
    *out = copy_string(dtopo::render_neighborhood(image->image, p, eps, format_from(format)));
  });
}

dtopo_status dtopo_render_connected(const dtopo_image* image, dtopo_format format, char** out) {
  return guarded([&] {
    require(image, "image");
    require(out, "out");
    *out = copy_string(dtopo::render_connected(image->image, format_from(format)));
  });
}

dtopo_status dtopo_render_check_curve(const dtopo_image* image, dtopo_format format, char** out) {
  return guarded([&] {
    require(image, "image");
    require(out, "out");
    *out = copy_string(dtopo::render_check_curve(image->image, format_from(format)));
  });
}

dtopo_status dtopo_render_search_curve(int32_t n, int32_t t, uint64_t l, dtopo_format format,
                                       char** out) {
  return guarded([&] {
    require(out, "out");
    const auto spec = dtopo::AdjacencySpec::from_t(t, n);
    *out = copy_string(dtopo::render_search_curve(spec, l, format_from(format)));
  });
}

dtopo_status dtopo_render_product_analyze(const dtopo_image* left, const dtopo_image* right,
                                          dtopo_format format, char** out) {
  return guarded([&] {
    require(left, "left");
    require(right, "right");
    require(out, "out");
    *out = copy_string(
        dtopo::render_product_analyze(left->image, right->image, format_from(format)));
  });
}

}  // extern "C"
