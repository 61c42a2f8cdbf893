// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "euclid/machine.hpp"
#include "euclid/measure.hpp"
#include "euclid/mensura.hpp"
#include "euclid/ngon.hpp"
#include "euclid/solids.hpp"
#include "euclid/verify.hpp"

using namespace euclid;

namespace {

constexpr double kPi = std::numbers::pi;

struct Criterion {
  const char* title;
  std::function<bool(std::string&)> check;
};

bool within(double got, double want, double tol, const char* what, std::string& note) {
  const bool ok = std::abs(got - want) <= tol;
  if (!ok) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s = %.15g, want %.15g +- %g; ", what, got, want, tol);
    note += buf;
  }
  return ok;
}

Workspace run_sample(const char* name) {
  std::ifstream in(std::filesystem::path(EUCLID_SCRIPTS_DIR) / name);
  std::stringstream text;
  text << in.rdbuf();
  RunOptions o;
  o.emit = [](const Emit&, const Workspace&) {};
  return run_script(text.str(), o);
}

// Euler's totient by trial division.
long long phi(long long n) {
  long long r = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

bool power_of_two(long long x) { return x > 0 && (x & (x - 1)) == 0; }

const Criterion kCriteria[] = {
    {"polygon doubling: p_96 and half of p_192",
     [](std::string& note) {
       const auto t = pi_doubling_table<double>(5, false);
       bool ok = t[4].n == 96 && t[5].n == 192;
       ok &= within(t[4].perimeter, 6.2820638, 1e-6, "p_96", note);
       ok &= within(t[5].perimeter / 2, 3.14145247, 1e-7, "p_192 / 2", note);
       return ok;
     }},
    {"continued fractions: 31/9, sqrt 2, pi",
     [](std::string& note) {
       bool ok = euclid_on_lengths(31, 9).quotients == std::vector<std::int64_t>{3, 2, 4};
       const auto r2 = convergents(continued_fraction(std::sqrt(2.0), 10), 4);
       ok &= r2 == std::vector<Convergent>{{1, 1}, {3, 2}, {7, 5}, {17, 12}};
       const auto rp = convergents(continued_fraction(kPi, 10), 4);
       ok &= rp[1] == Convergent{22, 7} && rp[3] == Convergent{355, 113};
       if (!ok) note += "quotients or convergents differ; ";
       return ok;
     }},
    {"golden section of a unit segment",
     [](std::string& note) {
       const Workspace ws = run_sample("golden_section.euc");
       const double ag = distance(ws.point("A"), ws.point("G"));
       const double ab = distance(ws.point("A"), ws.point("B"));
       const double gb = distance(ws.point("G"), ws.point("B"));
       bool ok = within(ag, 0.61803, 1e-5, "AG", note);
       ok &= within(ag * ag, ab * gb, 1e-9, "AG^2 vs AB GB", note);
       return ok;
     }},
    {"inscribed decagon and dodecagon sides",
     [](std::string& note) {
       bool ok = within(*regular_side_radical(10, 1), 0.6180339887, 1e-9, "a10 radical", note);
       ok &= within(*regular_side_radical(12, 1), 0.5176380902, 1e-9, "a12 radical", note);
       const Workspace ws = run_sample("decagon.euc");
       ok &= within(distance(ws.point("P1"), ws.point("P2")), 0.6180339887, 1e-9, "a10 built", note);
       ok &= within(distance(ws.point("Q1"), ws.point("Q2")), 0.5176380902, 1e-9, "a12 built", note);
       return ok;
     }},
    {"right triangle from projections 5, 7 and bisector of (7, 6, 10)",
     [](std::string& note) {
       const RightTriangle r = right_triangle_from_projections(5, 7);
       bool ok = within(r.hypotenuse, 12, 5e-4, "a", note);
       ok &= within(r.leg_b, 7.746, 5e-4, "b", note);
       ok &= within(r.leg_c, 9.165, 5e-4, "c", note);
       ok &= within(r.height, 5.916, 5e-4, "h", note);
       const TriangleMetrics m = triangle_metrics(make_triangle_sides(7, 6, 10));
       ok &= within(m.bisector_b.first, 60.0 / 17.0, 1e-9, "bisector part", note);
       return ok;
     }},
    {"segment approximations at 60 degrees",
     [](std::string& note) {
       const AngleMeasure a = AngleMeasure::from_degrees(60);
       const double exact = segment_area(1, a, SegmentMethod::kExact);
       const double e1 = 100 * (segment_area(1, a, SegmentMethod::kApprox1) - exact) / exact;
       const double e2 = 100 * (segment_area(1, a, SegmentMethod::kApprox2) - exact) / exact;
       bool ok = within(exact, kPi / 6 - std::sqrt(3.0) / 4, 1e-12, "exact", note);
       ok &= within(e1, -1.4, 0.2, "approx1 error %", note);
       ok &= within(e2, -0.1, 0.2, "approx2 error %", note);
       return ok;
     }},
    {"sphere against circumscribed cylinder and equilateral cone",
     [](std::string& note) {
       const ArchimedesRatios r = archimedes_ratios(1);
       bool ok = within(r.cylinder_area, 2.0 / 3, 1e-12, "cylinder area", note);
       ok &= within(r.cylinder_volume, 2.0 / 3, 1e-12, "cylinder volume", note);
       ok &= within(r.cone_area, 4.0 / 9, 1e-12, "cone area", note);
       ok &= within(r.cone_volume, 4.0 / 9, 1e-12, "cone volume", note);
       return ok;
     }},
    {"pyramid frustum B=16, b=4, H=6",
     [](std::string& note) {
       return within(volume(solid::PyramidFrustum{16, 4, 6}), 56, 1e-12, "V", note);
     }},
    {"lantern: convergence at n = m = 512, divergence for m = n^3",
     [](std::string& note) {
       bool ok = within(schwarz_lantern_area({1, 1, 512, 512}), 2 * kPi, 1e-3, "S(512, 512)", note);
       for (std::int64_t n = 4; n <= 64; ++n) {
         const double s = schwarz_lantern_area({1, 1, n * n * n, n});
         if (!(s > 2.0 * static_cast<double>(n))) {
           ok = false;
           note += "S(n^3, n) <= 2n at n = " + std::to_string(n) + "; ";
         }
       }
       return ok;
     }},
    {"property suites, 10^4 samples each, under 5 s each",
     [](std::string& note) {
       bool ok = true;
       for (auto name : verify_suite_names()) {
         const auto start = std::chrono::steady_clock::now();
         const SuiteReport r = run_verify_suite(name);
         const double s =
             std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
         std::size_t samples = 0;
         for (const auto& inv : r.invariants) samples = std::max(samples, inv.samples);
         if (!r.pass() || s >= 5.0 || samples < 1000 ||
             (name != "macros" && samples < kDefaultSamples)) {
           ok = false;
           note += std::string(name) + " failed; ";
         }
       }
       return ok;
     }},
    {"regular polygon constructibility for n in [3, 1000]",
     [](std::string& note) {
       bool ok = true;
       for (long long n = 3; n <= 1000; ++n) {
         if (is_constructible_ngon(n) != power_of_two(phi(n))) {
           ok = false;
           note += "n = " + std::to_string(n) + "; ";
         }
       }
       for (long long n : {17, 257, 170}) ok &= is_constructible_ngon(n);
       for (long long n : {7, 9, 11, 13, 14}) ok &= !is_constructible_ngon(n);
       return ok;
     }},
};

}  // namespace

int main() {
  int failed = 0;
  int index = 0;
  for (const Criterion& c : kCriteria) {
    ++index;
    std::string note;
    bool ok = false;
    try {
      ok = c.check(note);
    } catch (const std::exception& e) {
      note += std::string("threw: ") + e.what();
    }
    std::printf("%s %2d  %s%s%s\n", ok ? "PASS" : "FAIL", index, c.title, note.empty() ? "" : "  -- ",
                note.c_str());
    if (!ok) ++failed;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
