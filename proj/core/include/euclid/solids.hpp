#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "euclid/mensura.hpp"

namespace euclid::solid {

// Lateral areas of the polyhedral kinds need the base perimeter(s) and, for
// pyramids, the slant apothem. Leave them at 0 when only volumes are wanted.
struct Box {
  double a = 0.0, b = 0.0, c = 0.0;
};
struct Prism {
  double base_area = 0.0, height = 0.0;
  double base_perimeter = 0.0;
};
struct Pyramid {
  double base_area = 0.0, height = 0.0;
  double base_perimeter = 0.0, apothem = 0.0;
};
struct PyramidFrustum {
  double base_area = 0.0, top_area = 0.0, height = 0.0;
  double base_perimeter = 0.0, top_perimeter = 0.0, apothem = 0.0;
};
struct Cylinder {
  double radius = 0.0, height = 0.0;
};
struct Cone {
  double radius = 0.0, height = 0.0;

  double slant() const;
  // Throws DomainError unless 0 < R <= L.
  static Cone from_slant(double radius, double slant);
};
struct ConeFrustum {
  double radius = 0.0, top_radius = 0.0, height = 0.0;

  double slant() const;
};
struct Sphere {
  double radius = 0.0;
};
// Solid swept by a circular sector about the axis; `height` is that of its cap.
struct SphericalSector {
  double radius = 0.0, height = 0.0;
};
struct SphericalSegment {
  double radius = 0.0, height = 0.0;
};
// A band of the sphere's surface (no volume).
struct SphericalZone {
  double radius = 0.0, height = 0.0;
};

}  // namespace euclid::solid

namespace euclid {

using SolidSpec =
    std::variant<solid::Box, solid::Prism, solid::Pyramid, solid::PyramidFrustum, solid::Cylinder,
                 solid::Cone, solid::ConeFrustum, solid::Sphere, solid::SphericalSector,
                 solid::SphericalSegment, solid::SphericalZone>;

std::string_view kind_name(const SolidSpec& s);

// Checks the parameter invariants. Returns true for admitted degenerate limits
// (zero height, equal frustum bases, vanishing top) and throws DomainError for
// negative or out-of-range parameters.
bool validate(const SolidSpec& s);

// Throws DomainError for a zone, which has no volume.
double volume(const SolidSpec& s);

enum class Surface { kLateral, kTotal };
// Throws DomainError when the solid lacks the perimeter/apothem data.
double surface_area(const SolidSpec& s, Surface which);

struct SolidMeasures {
  std::optional<double> volume;
  std::optional<double> lateral;
  std::optional<double> total;
  bool degenerate = false;
};
// Every measure the solid supports; unsupported ones are empty.
SolidMeasures measure(const SolidSpec& s);

// Builds a solid from a kind name and key=value parameters, e.g.
// "cone" {R: 5, L: 13}. Keys per kind are listed by solid_keys().
SolidSpec make_solid(std::string_view kind, const Params& params);
std::vector<std::string_view> solid_kinds();
std::vector<std::string_view> solid_keys(std::string_view kind);

// Linear dimensions times k (areas k^2).
SolidSpec scaled(const SolidSpec& s, double k);

struct ScalingRatios {
  double area = 0.0;
  std::optional<double> volume;
};
// Ratios measured by scaling the solid and recomputing. Area uses the total
// surface when known, otherwise the base.
ScalingRatios similarity_scaling(const SolidSpec& s, double k);

struct ArchimedesRatios {
  double cylinder_area = 0.0;    // sphere / circumscribed cylinder, total surface
  double cylinder_volume = 0.0;
  double cone_area = 0.0;        // sphere / circumscribed equilateral cone
  double cone_volume = 0.0;
};
ArchimedesRatios archimedes_ratios(double radius);

struct LanternSpec {
  double radius = 1.0;
  double height = 1.0;
  std::int64_t m = 1;  // axial slabs
  std::int64_t n = 3;  // angular divisions
};

// Total area of the 2mn congruent triangles of the inscribed lantern:
// 2 m n R sin(pi/n) sqrt((H/m)^2 + R^2 (1 - cos(pi/n))^2).
double schwarz_lantern_area(const LanternSpec& spec);

struct PlatonicData {
  std::string name;
  int faces = 0;
  int edges = 0;
  int vertices = 0;
  int face_sides = 0;
  double volume_coefficient = 0.0;  // V / a^3 for edge a
};
const std::vector<PlatonicData>& platonic_table();

}  // namespace euclid
