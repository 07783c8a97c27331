// dtopo command-line tool. Talks to the library only through dtopo.h.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "dtopo/dtopo.h"

namespace {

// Input or usage problem reported by the library; exit status 1.
struct Failure {
  dtopo_status status;
  std::string message;
};

void check(dtopo_status s) {
  if (s != DTOPO_OK) throw Failure{s, dtopo_last_error()};
}

struct ImageDeleter {
  void operator()(dtopo_image* p) const { dtopo_image_free(p); }
};
using ImagePtr = std::unique_ptr<dtopo_image, ImageDeleter>;

struct StringDeleter {
  void operator()(char* p) const { dtopo_string_free(p); }
};
using CString = std::unique_ptr<char, StringDeleter>;

ImagePtr load(const std::string& path) {
  dtopo_image* img = nullptr;
  check(dtopo_image_load(path.c_str(), &img));
  return ImagePtr(img);
}

void write_file(const std::filesystem::path& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) {
    throw Failure{DTOPO_ERR_IO, "cannot write " + path.string()};
  }
}

void emit(const CString& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text.get();
  } else {
    write_file(out_path, text.get());
  }
}

template <typename F>
CString rendered(F&& f) {
  char* s = nullptr;
  check(f(&s));
  return CString(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dtopo: k(t,n)-adjacencies, digital neighborhoods, simple closed k-curves and "
               "digital product certification"};
  app.set_version_flag("--version", std::string(dtopo_version()));
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));
    cmd->add_option("--out", out_path, "Write the report to this file instead of stdout");
  };

  int max_n = 6;
  auto* ktable = app.add_subcommand("ktable", "Print k(t,n) for 1 <= t <= n <= N");
  ktable->add_option("--n", max_n, "Largest dimension N")->check(CLI::Range(1, 40));
  add_common(ktable);

  std::string image_path;
  std::string point;
  std::uint64_t eps = 1;
  auto* nbhd = app.add_subcommand("neighborhood", "Digital k-neighborhood N_k(x0, eps)");
  nbhd->add_option("--image", image_path, "Image file")->required();
  nbhd->add_option("--point", point, "Center x0, e.g. 0,0 or --point=-1,2")->required();
  nbhd->add_option("--eps", eps, "Radius, a positive integer");
  add_common(nbhd);

  auto* connected = app.add_subcommand("connected", "k-connectivity and components");
  connected->add_option("--image", image_path, "Image file")->required();
  add_common(connected);

  auto* check_curve =
      app.add_subcommand("check-curve", "Recognize a simple closed k-curve and report l");
  check_curve->add_option("--image", image_path, "Image file")->required();
  add_common(check_curve);

  int n = 0;
  std::optional<int> t;
  std::optional<std::uint64_t> k;
  std::uint64_t l = 0;
  auto* search = app.add_subcommand("search-curve", "Bounded search for an SC_k^{n,l}");
  search->add_option("--n", n, "Dimension")->required();
  auto* t_opt = search->add_option("--t", t, "Adjacency parameter t");
  auto* k_opt = search->add_option("--k", k, "Adjacency k, resolved against --n");
  t_opt->excludes(k_opt);
  search->add_option("--l", l, "Curve length")->required();
  add_common(search);

  std::string left_path, right_path;
  auto* prod = app.add_subcommand("product-analyze",
                                  "Certify C-compatible and normal k-adjacencies of X x Y");
  prod->add_option("--left", left_path, "Left factor image file")->required();
  prod->add_option("--right", right_path, "Right factor image file")->required();
  add_common(prod);

  std::string example_name;
  std::string out_dir = ".";
  auto* examples = app.add_subcommand("examples", "Write canonical curve image files");
  examples->add_option("name", example_name, "Canonical curve name (default: all)");
  examples->add_option("--out", out_dir, "Output directory");

  CLI11_PARSE(app, argc, argv);

  const dtopo_format fmt = format == "machine" ? DTOPO_FORMAT_MACHINE : DTOPO_FORMAT_TEXT;
  try {
    if (*ktable) {
      emit(rendered([&](char** s) { return dtopo_render_ktable(max_n, fmt, s); }), out_path);
    } else if (*nbhd) {
      auto img = load(image_path);
      emit(rendered([&](char** s) {
             return dtopo_render_neighborhood(img.get(), point.c_str(), eps, fmt, s);
           }),
           out_path);
    } else if (*connected) {
      auto img = load(image_path);
      emit(rendered([&](char** s) { return dtopo_render_connected(img.get(), fmt, s); }),
           out_path);
    } else if (*check_curve) {
      auto img = load(image_path);
      emit(rendered([&](char** s) { return dtopo_render_check_curve(img.get(), fmt, s); }),
           out_path);
    } else if (*search) {
      if (!t && !k) throw Failure{DTOPO_ERR_PARAMETER, "search-curve needs --t or --k"};
      std::int32_t tt = t.value_or(0);
      if (k) check(dtopo_t_from_k(*k, n, &tt));
      emit(rendered([&](char** s) { return dtopo_render_search_curve(n, tt, l, fmt, s); }),
           out_path);
    } else if (*prod) {
      auto left = load(left_path);
      auto right = load(right_path);
      emit(rendered([&](char** s) {
             return dtopo_render_product_analyze(left.get(), right.get(), fmt, s);
           }),
           out_path);
    } else if (*examples) {
      std::filesystem::create_directories(out_dir);
      std::vector<std::string> names;
      if (!example_name.empty()) {
        names.push_back(example_name);
      } else {
        for (size_t i = 0; i < dtopo_canonical_count(); ++i) {
          names.emplace_back(dtopo_canonical_name(i));
        }
      }
      for (const auto& name : names) {
        auto text = rendered([&](char** s) { return dtopo_canonical_file(name.c_str(), s); });
        const auto path = std::filesystem::path(out_dir) / (name + ".json");
        write_file(path, text.get());
        std::cout << path.string() << '\n';
      }
    }
  } catch (const Failure& f) {
    std::cerr << "error (" << dtopo_status_name(f.status) << "): " << f.message << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error (io): " << e.what() << '\n';
    return 1;
  }
  return 0;
}
