#include <array>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "euclid/error.hpp"
#include "euclid/solids.hpp"

using namespace euclid;
using namespace euclid::solid;

namespace {

constexpr double kPi = std::numbers::pi;

using P3 = std::array<double, 3>;

double tri_area(const P3& a, const P3& b, const P3& c) {
  const P3 u{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
  const P3 v{c[0] - a[0], c[1] - a[1], c[2] - a[2]};
  const double x = u[1] * v[2] - u[2] * v[1];
  const double y = u[2] * v[0] - u[0] * v[2];
  const double z = u[0] * v[1] - u[1] * v[0];
  return 0.5 * std::sqrt(x * x + y * y + z * z);
}

// Builds the lantern's vertices ring by ring (alternate rings turned by
// pi / n) and sums the areas of its triangles one by one.
double lantern_brute_force(double R, double H, int m, int n) {
  const auto vertex = [&](int ring, int j) {
    const double t = (2.0 * j + (ring % 2)) * kPi / n;
    return P3{R * std::cos(t), R * std::sin(t), H * ring / m};
  };
  double sum = 0;
  for (int k = 0; k < m; ++k) {
    const int shift = k % 2;  // ring k+1 is offset forward when k is even
    for (int j = 0; j < n; ++j) {
      // Triangle with a base on ring k and apex on ring k+1, and its mirror.
      const int apex = shift == 0 ? j : j + 1;
      sum += tri_area(vertex(k, j), vertex(k, j + 1), vertex(k + 1, apex));
      const int base = shift == 0 ? j + 1 : j;
      sum += tri_area(vertex(k + 1, j), vertex(k + 1, j + 1), vertex(k, base));
    }
  }
  return sum;
}

double vol(const SolidSpec& s) { return volume(s); }

}  // namespace

TEST_CASE("sphere") {
  CHECK(vol(Sphere{1}) == doctest::Approx(4 * kPi / 3).epsilon(1e-15));
  CHECK(surface_area(Sphere{1}, Surface::kTotal) == doctest::Approx(4 * kPi).epsilon(1e-15));
  CHECK(vol(SphericalSegment{2, 4}) == doctest::Approx(vol(Sphere{2})).epsilon(1e-15));
  CHECK(surface_area(SphericalZone{2, 4}, Surface::kLateral) ==
        doctest::Approx(surface_area(Sphere{2}, Surface::kTotal)));
  CHECK_THROWS_AS(vol(SphericalZone{1, 1}), DomainError);
  CHECK_THROWS_AS(validate(SphericalSegment{1, 3}), DomainError);
}

TEST_CASE("cones and cylinders") {
  const Cone c = Cone::from_slant(5, 13);
  CHECK(c.height == doctest::Approx(12));
  CHECK(surface_area(c, Surface::kLateral) == doctest::Approx(65 * kPi).epsilon(1e-15));
  CHECK(vol(c) == doctest::Approx(100 * kPi).epsilon(1e-15));
  CHECK_THROWS_AS(Cone::from_slant(5, 4), DomainError);

  const SolidMeasures flat = measure(Cylinder{1, 0});
  CHECK(flat.degenerate);
  CHECK(*flat.lateral == 0);
  CHECK(*flat.total == doctest::Approx(2 * kPi));
  CHECK(*flat.volume == 0);
  CHECK_THROWS_AS(validate(Cylinder{-1, 1}), DomainError);
}

TEST_CASE("frustums") {
  CHECK(vol(PyramidFrustum{16, 4, 6}) == doctest::Approx(56).epsilon(1e-15));
  CHECK_THROWS_AS(validate(PyramidFrustum{4, 16, 6}), DomainError);
  // Continuity: a vanishing top gives the pyramid or cone, an equal top the prism.
  CHECK(vol(PyramidFrustum{9, 0, 5}) == doctest::Approx(vol(Pyramid{9, 5})));
  CHECK(vol(PyramidFrustum{9, 9, 5}) == doctest::Approx(vol(Prism{9, 5})));
  CHECK(vol(ConeFrustum{2, 1e-9, 3}) == doctest::Approx(vol(Cone{2, 3})).epsilon(1e-8));
  CHECK(vol(ConeFrustum{2, 2, 3}) == doctest::Approx(vol(Cylinder{2, 3})));
  CHECK(surface_area(ConeFrustum{2, 0, 3}, Surface::kLateral) ==
        doctest::Approx(surface_area(Cone{2, 3}, Surface::kLateral)));
  CHECK(measure(ConeFrustum{2, 2, 3}).degenerate);
}

TEST_CASE("polyhedral surfaces need perimeters") {
  CHECK_THROWS_AS(surface_area(Prism{4, 2}, Surface::kLateral), DomainError);
  CHECK(surface_area(Prism{4, 2, 8}, Surface::kLateral) == 16);
  CHECK(surface_area(Prism{4, 2, 8}, Surface::kTotal) == 24);
  // Square pyramid, side 2, apothem 3: four triangles of area 3.
  CHECK(surface_area(Pyramid{4, 2, 8, 3}, Surface::kLateral) == doctest::Approx(12));
  const SolidMeasures m = measure(Prism{4, 2});
  CHECK(m.volume);
  CHECK_FALSE(m.lateral);
  CHECK(surface_area(Box{1, 2, 3}, Surface::kTotal) == 22);
}

TEST_CASE("make_solid from keywords") {
  const SolidSpec c = make_solid("cone", {{"R", 5}, {"L", 13}});
  CHECK(std::get<Cone>(c).height == doctest::Approx(12));
  CHECK_THROWS_AS(make_solid("cone", {{"R", 5}, {"L", 13}, {"H", 12}}), DomainError);
  CHECK_THROWS_AS(make_solid("cone", {{"R", 5}}), DomainError);
  CHECK_THROWS_AS(make_solid("cone", {{"R", 5}, {"H", 1}, {"Q", 1}}), DomainError);
  CHECK_THROWS_AS(make_solid("torus", {}), DomainError);
  CHECK(kind_name(make_solid("pyramid-frustum", {{"B", 16}, {"b", 4}, {"H", 6}})) ==
        "pyramid-frustum");
  for (auto kind : solid_kinds()) CHECK_FALSE(solid_keys(kind).empty());
}

TEST_CASE("similarity") {
  const ScalingRatios box = similarity_scaling(Box{1, 2, 3}, 3);
  CHECK(box.area == doctest::Approx(9));
  CHECK(*box.volume == doctest::Approx(27));
  const ScalingRatios ball = similarity_scaling(Sphere{2}, 0.5);
  CHECK(ball.area == doctest::Approx(0.25));
  CHECK(*ball.volume == doctest::Approx(0.125));
  CHECK_THROWS_AS(scaled(Sphere{1}, 0), DomainError);
}

TEST_CASE("archimedes") {
  const ArchimedesRatios r = archimedes_ratios(1.7);
  CHECK(std::abs(r.cylinder_area - 2.0 / 3) < 1e-12);
  CHECK(std::abs(r.cylinder_volume - 2.0 / 3) < 1e-12);
  CHECK(std::abs(r.cone_area - 4.0 / 9) < 1e-12);
  CHECK(std::abs(r.cone_volume - 4.0 / 9) < 1e-12);
}

TEST_CASE("drilled sphere") {
  // Remove a cylinder of height l and its two caps: what remains has the
  // volume of a ball of diameter l, whatever the sphere.
  for (double R : {1.0, 2.0, 7.5}) {
    const double l = 1.0;
    const double r = std::sqrt(R * R - l * l / 4);
    const double cap = R - l / 2;
    const double ring = vol(Sphere{R}) - vol(Cylinder{r, l}) - 2 * vol(SphericalSegment{R, cap});
    CHECK(ring == doctest::Approx(vol(Sphere{l / 2})).epsilon(1e-9));
  }
}

TEST_CASE("lantern against brute force") {
  for (auto [R, H, m, n] : {std::tuple{1.0, 0.0, 1, 3}, {1.0, 1.0, 1, 3}, {1.0, 1.0, 4, 6},
                            {2.0, 3.0, 7, 5}, {1.0, 1.0, 30, 30}}) {
    const double formula = schwarz_lantern_area({R, H, m, n});
    CHECK(formula == doctest::Approx(lantern_brute_force(R, H, m, n)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(schwarz_lantern_area({1, 1, 0, 3}), DomainError);
  CHECK_THROWS_AS(schwarz_lantern_area({1, 1, 1, 2}), DomainError);
}

TEST_CASE("platonic solids") {
  // Tetrahedron: pyramid on an equilateral triangle with height sqrt(2/3).
  const double tetra = std::sqrt(3.0) / 4 * std::sqrt(2.0 / 3) / 3;
  // Octahedron: two square pyramids of height sqrt(2)/2.
  const double octa = 2 * (1.0 / 3) * std::sqrt(2.0) / 2;
  const auto& table = platonic_table();
  REQUIRE(table.size() == 5);
  for (const auto& s : table) {
    CHECK(s.vertices - s.edges + s.faces == 2);
    CHECK(s.faces * s.face_sides == 2 * s.edges);
    if (s.name == "tetrahedron") CHECK(s.volume_coefficient == doctest::Approx(tetra));
    if (s.name == "octahedron") CHECK(s.volume_coefficient == doctest::Approx(octa));
    if (s.name == "cube") CHECK(s.volume_coefficient == 1.0);
  }
}
