// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "dtopo/curves.hpp"
#include "dtopo/image_io.hpp"
#include "dtopo/lattice.hpp"
#include "dtopo/neighborhood.hpp"
#include "dtopo/product.hpp"
#include "oracles.hpp"

using namespace dtopo;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::ostream& detail)> body;
};

DigitalImage canon(const char* name) { return canonical(name).image(); }

std::string fmt_set(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

// Checks one claimed verdict; prints the first witness on divergence.
bool expect(std::ostream& d, const char* label, const ProductReport& r, int t, bool c_claim,
            bool want) {
  const auto& o = r.outcomes.at(static_cast<std::size_t>(t - 1));
  const bool got = c_claim ? o.c_compatible : o.normal;
  if (got == want) return true;
  d << "    " << label << " t=" << t << " k=" << o.k << ": expected "
    << (c_claim ? "C-compatible" : "normal") << '=' << want << ", got " << got;
  const auto& w = c_claim ? o.c_witness : o.normal_witness;
  if (w) d << " witness p=" << w->p.str() << " q=" << w->q.str() << ' ' << witness_side_name(w->side);
  d << '\n';
  return false;
}

std::vector<std::uint64_t> ks(const ProductReport& r, bool c) {
  std::vector<std::uint64_t> out;
  for (const auto& o : r.outcomes) {
    if (c ? o.c_compatible : o.normal) out.push_back(o.k);
  }
  return out;
}

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string(DTOPO_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int rc = pclose(pipe);
  status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return out;
}

bool ac1(std::ostream& d) {
  const std::vector<std::vector<std::uint64_t>> listed = {
      {4, 8}, {6, 18, 26}, {8, 32, 64, 80}, {10, 50, 130, 210, 242},
      {12, 72, 232, 472, 664, 728}};
  const auto start = Clock::now();
  std::vector<std::vector<std::uint64_t>> got;
  for (int n = 2; n <= 6; ++n) got.push_back(k_values(n));
  const double ms = ms_since(start);
  bool ok = got == listed && k_value(1, 1) == 2;
  d << "    computed in " << ms << " ms (limit 1 ms)\n";
  return ok && ms < 1.0;
}

bool ac2(std::ostream& d) {
  oracle::Rng rng(2);
  const auto start = Clock::now();
  std::size_t checks = 0, bad = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int t = 1; t <= n; ++t) {
      const auto spec = AdjacencySpec::from_t(t, n);
      for (int i = 0; i < 20; ++i) {
        std::vector<Coord> c;
        for (int j = 0; j < n; ++j) c.push_back(rng.between(-1000, 1000));
        ++checks;
        if (lattice_neighbors(Point(c), spec).size() != k_value(t, n)) ++bad;
      }
    }
  }
  const double ms = ms_since(start);
  d << "    " << checks << " points, " << bad << " mismatches, " << ms << " ms (limit 1000 ms)\n";
  return bad == 0 && ms < 1000.0;
}

bool ac3(std::ostream& d) {
  const DigitalImage X({{0, 0}, {1, -1}, {2, 0}, {1, 1}}, AdjacencySpec::from_k(8, 2));
  const DigitalImage Y({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {-1, 2}}, AdjacencySpec::from_k(8, 2));
  const bool paths = path_length(X, {0, 0}, {1, -1}) == PathLength::of(1) &&
                     path_length(X, {0, 0}, {2, 0}) == PathLength::of(2) &&
                     path_length(X, {0, 0}, {1, 1}) == PathLength::of(1);
  std::vector<Point> y_minus{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  const bool n1 = neighborhood(Y, {0, 0}, 1) == y_minus;
  const bool n2 = neighborhood(Y, {0, 0}, 2) == Y.points();
  d << "    l_8 (1,2,1): " << paths << ", N_8(y0,1)=Y\\{y4}: " << n1 << ", N_8(y0,2)=Y: " << n2
    << '\n';
  return paths && n1 && n2;
}

bool ac4(std::ostream& d) {
  bool ok = true;
  auto timed = [&](const char* label, const char* a, const char* b) {
    const auto left = canon(a), right = canon(b);
    const auto start = Clock::now();
    auto r = analyze(left, right);
    const double ms = ms_since(start);
    const auto pts = left.size() * right.size();
    d << "    " << label << ": " << pts << " points, " << ms << " ms, C-compatible k="
      << fmt_set(ks(r, true)) << ", normal k=" << fmt_set(ks(r, false)) << '\n';
    if (pts > 36 || ms >= 5000.0) ok = false;
    return r;
  };
  auto r1 = timed("(1) SC4_2_4^2", "SC4_2_4", "SC4_2_4");
  ok &= expect(d, "(1)", r1, 1, true, true);
  auto r2 = timed("(2) SC26_3_5^2", "SC26_3_5", "SC26_3_5");
  ok &= expect(d, "(2)", r2, 3, true, true);
  ok &= expect(d, "(2)", r2, 6, false, true);
  auto r3a = timed("(3) SC8_2_6^2", "SC8_2_6", "SC8_2_6");
  ok &= expect(d, "(3a)", r3a, 4, false, true);
  auto r3b = timed("(3) SC8_2_4 x SC8_2_6", "SC8_2_4", "SC8_2_6");
  ok &= expect(d, "(3b)", r3b, 4, false, true);
  auto r4 = timed("(4) SC8_2_4^2", "SC8_2_4", "SC8_2_4");
  ok &= expect(d, "(4)", r4, 2, true, true);
  ok &= expect(d, "(4)", r4, 3, true, true);
  auto r5 = timed("(5) SC18_3_6_EX35^2", "SC18_3_6_EX35", "SC18_3_6_EX35");
  for (int t : {4, 5, 6}) ok &= expect(d, "(5)", r5, t, false, true);
  return ok;
}

bool ac5(std::ostream& d) {
  bool ok = true;
  const auto msc = analyze(canon("MSC18"), canon("MSC18"));
  for (int t = 1; t <= 6; ++t) {
    ok &= expect(d, "MSC18^2", msc, t, true, false);
    ok &= expect(d, "MSC18^2", msc, t, false, false);
  }
  const auto mixed = analyze(canon("SC4_2_4"), canon("SC8_2_6"));
  for (int t = 1; t <= 4; ++t) ok &= expect(d, "SC4_2_4 x SC8_2_6", mixed, t, false, false);
  d << "    MSC18^2 C-compatible k=" << fmt_set(ks(msc, true)) << ", normal k="
    << fmt_set(ks(msc, false)) << "; SC4_2_4 x SC8_2_6 normal k=" << fmt_set(ks(mixed, false))
    << '\n';
  return ok;
}

bool ac6(std::ostream& d) {
  oracle::Rng rng(0x9e3779b97f4a7c15ULL);
  const auto start = Clock::now();
  std::size_t pairs = 0, checks = 0, disagreements = 0;
  for (; pairs < 250; ++pairs) {
    const int n = static_cast<int>(rng.between(1, 2));
    const int t1 = static_cast<int>(rng.between(1, n));
    const int t2 = static_cast<int>(rng.between(1, n));
    const DigitalImage X(
        oracle::grown_points(rng, n, t1, static_cast<std::size_t>(rng.between(2, 8))),
        AdjacencySpec::from_t(t1, n));
    const DigitalImage Y(
        oracle::grown_points(rng, n, t2, static_cast<std::size_t>(rng.between(2, 8))),
        AdjacencySpec::from_t(t2, n));
    const auto prod = product(X, Y);
    for (int t = 1; t <= prod.dim(); ++t) {
      checks += 2;
      if (certify_c_compatible(prod, t).holds != pairwise_c_compatible(prod, t)) ++disagreements;
      if (certify_normal(prod, t).holds != pairwise_normal(prod, t)) ++disagreements;
    }
  }
  const double ms = ms_since(start);
  d << "    " << pairs << " pairs, " << checks << " checks, " << disagreements
    << " disagreements, " << ms << " ms (limit 30000 ms)\n";
  return pairs >= 200 && disagreements == 0 && ms < 30000.0;
}

bool ac7(std::ostream& d) {
  bool ok = true;
  // Parity: no odd closed 2n-curve, by two independent exhaustive searches.
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t l : {5u, 7u, 9u}) {
      const auto found = search_curve(AdjacencySpec::from_t(1, n), l);
      const auto cycles = oracle::count_cycles_through_origin(n, l);
      if (found.curve || cycles != 0) {
        d << "    odd curve at t=1 n=" << n << " l=" << l << '\n';
        ok = false;
      }
    }
  }
  auto expect_search = [&](int t, int n, std::uint64_t l, bool want) {
    const auto spec = AdjacencySpec::from_t(t, n);
    const auto found = search_curve(spec, l);
    const auto rule = admissible_length(spec, l);
    bool good = found.curve.has_value() == want;
    if (found.curve) good &= validate_curve(*found.curve) == l;
    // Consistent with the length rules where they specify the case.
    if (rule.value != Admissibility::unspecified) {
      good &= (rule.value == Admissibility::admissible) == want;
    }
    d << "    SC_" << spec.k() << "^{" << n << ',' << l << "}: "
      << (found.curve ? "found" : "none in box") << ", rule " << rule.rule << ' '
      << admissibility_name(rule.value) << (good ? "" : "  <-- mismatch") << '\n';
    ok &= good;
  };
  expect_search(1, 2, 6, false);
  expect_search(2, 2, 5, false);
  expect_search(1, 2, 4, true);
  expect_search(2, 2, 4, true);
  expect_search(2, 2, 6, true);
  expect_search(3, 3, 5, true);
  return ok;
}

bool ac8(std::ostream& d) {
  oracle::Rng rng(8);
  std::size_t pairs = 0, disagreements = 0;
  for (int img = 0; img < 100; ++img) {
    const int n = static_cast<int>(rng.between(1, 3));
    const int t = static_cast<int>(rng.between(1, n));
    const auto size = static_cast<std::size_t>(rng.between(2, 9));
    const DigitalImage image(oracle::random_points(rng, n, size, 4), AdjacencySpec::from_t(t, n));
    const auto& P = image.points();
    for (std::size_t a = 0; a < P.size(); ++a) {
      for (std::size_t b = 0; b < P.size(); ++b) {
        ++pairs;
        const auto bfs = path_length(image, P[a], P[b]);
        const auto brute = oracle::brute_path_length(P, t, a, b);
        if (bfs.reachable() != brute.has_value() || (brute && bfs.value() != *brute)) {
          ++disagreements;
        }
      }
    }
  }
  d << "    100 images, " << pairs << " pairs, " << disagreements << " disagreements\n";
  return disagreements == 0;
}

bool ac9(std::ostream& d) {
  const fs::path dir = fs::temp_directory_path() / ("dtopo-accept-" + std::to_string(getpid()));
  fs::create_directories(dir);
  bool ok = true;
  for (auto [a, b] : {std::pair{"SC26_3_5", "SC26_3_5"}, std::pair{"MSC18", "MSC18"},
                      std::pair{"SC4_2_4", "SC8_2_6"}}) {
    for (const char* name : {a, b}) {
      const auto c = canonical(name);
      std::ofstream(dir / (std::string(name) + ".json")) << serialize_curve(c.curve, c.name);
    }
    const std::string args = "product-analyze --format machine --left " +
                             (dir / (std::string(a) + ".json")).string() + " --right " +
                             (dir / (std::string(b) + ".json")).string();
    int s1 = 0, s2 = 0;
    const auto first = run_cli(args, s1);
    const auto second = run_cli(args, s2);
    const bool same = s1 == 0 && s2 == 0 && !first.empty() && first == second;
    d << "    " << a << " x " << b << ": " << first.size() << " bytes, "
      << (same ? "identical" : "DIFFERENT") << '\n';
    ok &= same;
  }
  fs::remove_all(dir);
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "k-value tables", ac1},
      {2, "neighbor-count identity", ac2},
      {3, "worked path-length and neighborhood examples", ac3},
      {4, "product certification suite (C-compatible / normal claims)", ac4},
      {5, "products without compatible adjacencies", ac5},
      {6, "neighborhood-equation vs pairwise-definition equivalence", ac6},
      {7, "curve-length properties", ac7},
      {8, "BFS vs brute-force simple paths", ac8},
      {9, "deterministic machine reports", ac9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::ostringstream detail;
    bool pass = false;
    try {
      pass = c.body(detail);
    } catch (const std::exception& e) {
      detail << "    exception: " << e.what() << '\n';
    }
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "AC" << c.id << ' ' << c.title << '\n'
              << detail.str();
    failed += !pass;
  }
  std::cout << (failed ? "acceptance: FAILED (" : "acceptance: all criteria passed (")
            << criteria.size() - static_cast<std::size_t>(failed) << '/' << criteria.size()
            << ")\n";
  return failed ? 1 : 0;
}
