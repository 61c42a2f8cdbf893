#include "euclid/solids.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "euclid/error.hpp"

namespace euclid {

namespace {

using std::numbers::pi;
using namespace solid;

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

// > 0 required; returns true when zero is admitted as a degenerate limit.
bool check(double v, const char* what, bool zero_ok = false) {
  if (!std::isfinite(v) || v < 0.0 || (v == 0.0 && !zero_ok)) {
    throw DomainError(std::string(what) + (zero_ok ? " must be >= 0" : " must be > 0"));
  }
  return v == 0.0;
}

void require(bool ok, const char* message) {
  if (!ok) throw DomainError(message);
}

double cap_base_radius(double r, double h) { return std::sqrt(h * (2.0 * r - h)); }

}  // namespace

double Cone::slant() const { return std::hypot(radius, height); }

Cone Cone::from_slant(double radius, double slant) {
  check(radius, "cone radius");
  check(slant, "cone slant");
  if (slant < radius) throw DomainError("cone slant must be at least the radius");
  return {radius, std::sqrt((slant - radius) * (slant + radius))};
}

double ConeFrustum::slant() const { return std::hypot(radius - top_radius, height); }

std::string_view kind_name(const SolidSpec& s) {
  static constexpr std::string_view kNames[] = {
      "box",      "prism",  "pyramid",          "pyramid-frustum",   "cylinder",        "cone",
      "cone-frustum", "sphere", "spherical-sector", "spherical-segment", "spherical-zone"};
  return kNames[s.index()];
}

bool validate(const SolidSpec& spec) {
  return std::visit(
      Overload{
          [](const Box& s) {
            check(s.a, "a");
            check(s.b, "b");
            check(s.c, "c");
            return false;
          },
          [](const Prism& s) {
            check(s.base_area, "base area");
            check(s.base_perimeter, "base perimeter", true);
            return check(s.height, "height", true);
          },
          [](const Pyramid& s) {
            check(s.base_area, "base area");
            check(s.base_perimeter, "base perimeter", true);
            check(s.apothem, "apothem", true);
            return check(s.height, "height", true);
          },
          [](const PyramidFrustum& s) {
            check(s.base_area, "base area B");
            const bool flat_top = check(s.top_area, "top area b", true);
            require(s.top_area <= s.base_area, "frustum top area b must not exceed B");
            check(s.base_perimeter, "base perimeter", true);
            check(s.top_perimeter, "top perimeter", true);
            check(s.apothem, "apothem", true);
            return check(s.height, "height", true) || flat_top || s.top_area == s.base_area;
          },
          [](const Cylinder& s) {
            check(s.radius, "radius");
            return check(s.height, "height", true);
          },
          [](const Cone& s) {
            check(s.radius, "radius");
            return check(s.height, "height", true);
          },
          [](const ConeFrustum& s) {
            check(s.radius, "radius R");
            const bool point_top = check(s.top_radius, "top radius r", true);
            require(s.top_radius <= s.radius, "frustum top radius r must not exceed R");
            return check(s.height, "height", true) || point_top || s.top_radius == s.radius;
          },
          [](const Sphere& s) {
            check(s.radius, "radius");
            return false;
          },
          [](const auto& s) {  // sector, segment, zone
            check(s.radius, "radius");
            const bool flat = check(s.height, "height", true);
            require(s.height <= 2.0 * s.radius, "height must not exceed the diameter");
            return flat;
          },
      },
      spec);
}

double volume(const SolidSpec& spec) {
  validate(spec);
  return std::visit(
      Overload{
          [](const Box& s) { return s.a * s.b * s.c; },
          [](const Prism& s) { return s.base_area * s.height; },
          [](const Pyramid& s) { return s.base_area * s.height / 3.0; },
          [](const PyramidFrustum& s) {
            return s.height / 3.0 * (s.base_area + s.top_area + std::sqrt(s.base_area * s.top_area));
          },
          [](const Cylinder& s) { return pi * s.radius * s.radius * s.height; },
          [](const Cone& s) { return pi * s.radius * s.radius * s.height / 3.0; },
          [](const ConeFrustum& s) {
            const double r1 = s.radius, r2 = s.top_radius;
            return pi * s.height / 3.0 * (r1 * r1 + r1 * r2 + r2 * r2);
          },
          [](const Sphere& s) { return 4.0 / 3.0 * pi * s.radius * s.radius * s.radius; },
          [](const SphericalSector& s) { return 2.0 / 3.0 * pi * s.radius * s.radius * s.height; },
          [](const SphericalSegment& s) {
            return pi * s.height * s.height * (s.radius - s.height / 3.0);
          },
          [](const SphericalZone&) -> double {
            throw DomainError("a spherical zone is a surface and has no volume");
          },
      },
      spec);
}

double surface_area(const SolidSpec& spec, Surface which) {
  validate(spec);
  const bool total = which == Surface::kTotal;
  const auto need = [](bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("lateral area needs ") + what);
  };
  return std::visit(
      Overload{
          [&](const Box& s) {
            const double side = 2.0 * (s.a + s.b) * s.c;
            return total ? side + 2.0 * s.a * s.b : side;
          },
          [&](const Prism& s) {
            need(s.base_perimeter > 0.0 || s.height == 0.0, "the base perimeter");
            const double side = s.base_perimeter * s.height;
            return total ? side + 2.0 * s.base_area : side;
          },
          [&](const Pyramid& s) {
            need(s.base_perimeter > 0.0 && s.apothem > 0.0, "the base perimeter and the apothem");
            const double side = 0.5 * s.base_perimeter * s.apothem;
            return total ? side + s.base_area : side;
          },
          [&](const PyramidFrustum& s) {
            need(s.base_perimeter > 0.0 && s.apothem > 0.0, "the base perimeters and the apothem");
            const double side = 0.5 * (s.base_perimeter + s.top_perimeter) * s.apothem;
            return total ? side + s.base_area + s.top_area : side;
          },
          [&](const Cylinder& s) {
            const double side = 2.0 * pi * s.radius * s.height;
            return total ? side + 2.0 * pi * s.radius * s.radius : side;
          },
          [&](const Cone& s) {
            const double side = pi * s.radius * s.slant();
            return total ? side + pi * s.radius * s.radius : side;
          },
          [&](const ConeFrustum& s) {
            const double side = pi * (s.radius + s.top_radius) * s.slant();
            return total ? side + pi * (s.radius * s.radius + s.top_radius * s.top_radius) : side;
          },
          [&](const Sphere& s) { return 4.0 * pi * s.radius * s.radius; },
          [&](const SphericalSector& s) {
            // Lateral: the cone over the cap's base circle; total adds the cap.
            const double side = pi * cap_base_radius(s.radius, s.height) * s.radius;
            return total ? side + 2.0 * pi * s.radius * s.height : side;
          },
          [&](const SphericalSegment& s) {
            const double cap = 2.0 * pi * s.radius * s.height;
            const double rho = cap_base_radius(s.radius, s.height);
            return total ? cap + pi * rho * rho : cap;
          },
          [&](const SphericalZone& s) { return 2.0 * pi * s.radius * s.height; },
      },
      spec);
}

SolidMeasures measure(const SolidSpec& spec) {
  SolidMeasures m;
  m.degenerate = validate(spec);
  const auto attempt = [&](auto f) -> std::optional<double> {
    try {
      return f();
    } catch (const DomainError&) {
      return std::nullopt;
    }
  };
  m.volume = attempt([&] { return volume(spec); });
  m.lateral = attempt([&] { return surface_area(spec, Surface::kLateral); });
  m.total = attempt([&] { return surface_area(spec, Surface::kTotal); });
  return m;
}

namespace {

struct SolidKind {
  std::string_view name;
  std::vector<std::string_view> required;
  std::vector<std::string_view> optional;
};

const std::vector<SolidKind>& kinds() {
  static const std::vector<SolidKind> table = {
      {"box", {"a", "b", "c"}, {}},
      {"prism", {"B", "H"}, {"P"}},
      {"pyramid", {"B", "H"}, {"P", "apothem"}},
      {"pyramid-frustum", {"B", "b", "H"}, {"P", "p", "apothem"}},
      {"cylinder", {"R", "H"}, {}},
      {"cone", {"R"}, {"H", "L"}},
      {"cone-frustum", {"R", "r"}, {"H", "L"}},
      {"sphere", {"R"}, {}},
      {"spherical-sector", {"R", "H"}, {}},
      {"spherical-segment", {"R", "H"}, {}},
      {"spherical-zone", {"R", "H"}, {}},
  };
  return table;
}

const SolidKind& find_kind(std::string_view name) {
  for (const SolidKind& k : kinds()) {
    if (k.name == name) return k;
  }
  throw DomainError("unknown solid '" + std::string(name) + "'");
}

}  // namespace

std::vector<std::string_view> solid_kinds() {
  std::vector<std::string_view> out;
  for (const SolidKind& k : kinds()) out.push_back(k.name);
  return out;
}

std::vector<std::string_view> solid_keys(std::string_view kind) {
  const SolidKind& k = find_kind(kind);
  std::vector<std::string_view> out = k.required;
  out.insert(out.end(), k.optional.begin(), k.optional.end());
  return out;
}

SolidSpec make_solid(std::string_view kind, const Params& params) {
  const SolidKind& k = find_kind(kind);
  for (const auto& [key, value] : params) {
    const bool known = std::find(k.required.begin(), k.required.end(), key) != k.required.end() ||
                       std::find(k.optional.begin(), k.optional.end(), key) != k.optional.end();
    if (!known) throw DomainError("unknown parameter '" + key + "' for " + std::string(kind));
  }
  for (std::string_view key : k.required) {
    if (params.find(key) == params.end()) {
      throw DomainError("missing parameter '" + std::string(key) + "' for " + std::string(kind));
    }
  }
  const auto get = [&](std::string_view key) {
    const auto it = params.find(key);
    return it == params.end() ? 0.0 : it->second;
  };
  const auto height_of = [&](double radius_drop) {
    const bool has_h = params.find("H") != params.end();
    const bool has_l = params.find("L") != params.end();
    if (has_h == has_l) throw DomainError(std::string(kind) + ": give exactly one of H and L");
    if (has_h) return get("H");
    const double l = get("L");
    if (!(l >= radius_drop)) throw DomainError(std::string(kind) + ": slant L is too short");
    return std::sqrt((l - radius_drop) * (l + radius_drop));
  };
  SolidSpec s;
  if (kind == "box") s = Box{get("a"), get("b"), get("c")};
  else if (kind == "prism") s = Prism{get("B"), get("H"), get("P")};
  else if (kind == "pyramid") s = Pyramid{get("B"), get("H"), get("P"), get("apothem")};
  else if (kind == "pyramid-frustum")
    s = PyramidFrustum{get("B"), get("b"), get("H"), get("P"), get("p"), get("apothem")};
  else if (kind == "cylinder") s = Cylinder{get("R"), get("H")};
  else if (kind == "cone") s = Cone{get("R"), height_of(get("R"))};
  else if (kind == "cone-frustum")
    s = ConeFrustum{get("R"), get("r"), height_of(std::abs(get("R") - get("r")))};
  else if (kind == "sphere") s = Sphere{get("R")};
  else if (kind == "spherical-sector") s = SphericalSector{get("R"), get("H")};
  else if (kind == "spherical-segment") s = SphericalSegment{get("R"), get("H")};
  else s = SphericalZone{get("R"), get("H")};
  validate(s);
  return s;
}

SolidSpec scaled(const SolidSpec& spec, double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("scale factor must be finite and > 0");
  const double k2 = k * k;
  return std::visit(
      Overload{
          [&](const Box& s) -> SolidSpec { return Box{k * s.a, k * s.b, k * s.c}; },
          [&](const Prism& s) -> SolidSpec {
            return Prism{k2 * s.base_area, k * s.height, k * s.base_perimeter};
          },
          [&](const Pyramid& s) -> SolidSpec {
            return Pyramid{k2 * s.base_area, k * s.height, k * s.base_perimeter, k * s.apothem};
          },
          [&](const PyramidFrustum& s) -> SolidSpec {
            return PyramidFrustum{k2 * s.base_area,      k2 * s.top_area,      k * s.height,
                                  k * s.base_perimeter, k * s.top_perimeter, k * s.apothem};
          },
          [&](const Cylinder& s) -> SolidSpec { return Cylinder{k * s.radius, k * s.height}; },
          [&](const Cone& s) -> SolidSpec { return Cone{k * s.radius, k * s.height}; },
          [&](const ConeFrustum& s) -> SolidSpec {
            return ConeFrustum{k * s.radius, k * s.top_radius, k * s.height};
          },
          [&](const Sphere& s) -> SolidSpec { return Sphere{k * s.radius}; },
          [&](const SphericalSector& s) -> SolidSpec {
            return SphericalSector{k * s.radius, k * s.height};
          },
          [&](const SphericalSegment& s) -> SolidSpec {
            return SphericalSegment{k * s.radius, k * s.height};
          },
          [&](const SphericalZone& s) -> SolidSpec {
            return SphericalZone{k * s.radius, k * s.height};
          },
      },
      spec);
}

ScalingRatios similarity_scaling(const SolidSpec& s, double k) {
  const SolidSpec t = scaled(s, k);
  const SolidMeasures a = measure(s);
  const SolidMeasures b = measure(t);
  ScalingRatios r;
  if (a.total && b.total && *a.total > 0.0) {
    r.area = *b.total / *a.total;
  } else {
    const auto base = [](const SolidSpec& x) {
      return std::visit(Overload{[](const Prism& p) { return p.base_area; },
                                 [](const Pyramid& p) { return p.base_area; },
                                 [](const PyramidFrustum& p) { return p.base_area; },
                                 [](const auto&) { return 0.0; }},
                        x);
    };
    if (base(s) <= 0.0) throw DomainError("similarity_scaling: no area available for this solid");
    r.area = base(t) / base(s);
  }
  if (a.volume && b.volume && *a.volume > 0.0) r.volume = *b.volume / *a.volume;
  return r;
}

ArchimedesRatios archimedes_ratios(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("radius must be finite and > 0");
  const SolidSpec ball = Sphere{radius};
  const SolidSpec cylinder = Cylinder{radius, 2.0 * radius};
  // Equilateral cone around the sphere: base radius R sqrt(3), height 3R.
  const SolidSpec cone = Cone{radius * std::sqrt(3.0), 3.0 * radius};
  return {surface_area(ball, Surface::kTotal) / surface_area(cylinder, Surface::kTotal),
          volume(ball) / volume(cylinder),
          surface_area(ball, Surface::kTotal) / surface_area(cone, Surface::kTotal),
          volume(ball) / volume(cone)};
}

double schwarz_lantern_area(const LanternSpec& spec) {
  if (!(spec.radius > 0.0) || !std::isfinite(spec.radius)) throw DomainError("lantern R must be > 0");
  if (!(spec.height >= 0.0) || !std::isfinite(spec.height)) throw DomainError("lantern H must be >= 0");
  if (spec.m < 1) throw DomainError("lantern m must be >= 1");
  if (spec.n < 3) throw DomainError("lantern n must be >= 3");
  const double m = static_cast<double>(spec.m);
  const double n = static_cast<double>(spec.n);
  const double r = spec.radius;
  const double half = pi / n;
  const double s = std::sin(0.5 * half);
  const double sagitta = 2.0 * r * s * s;  // R (1 - cos(pi/n))
  return 2.0 * m * n * r * std::sin(half) * std::hypot(spec.height / m, sagitta);
}

const std::vector<PlatonicData>& platonic_table() {
  static const std::vector<PlatonicData> table = {
      {"tetrahedron", 4, 6, 4, 3, std::sqrt(2.0) / 12.0},
      {"cube", 6, 12, 8, 4, 1.0},
      {"octahedron", 8, 12, 6, 3, std::sqrt(2.0) / 3.0},
      {"dodecahedron", 12, 30, 20, 5, (15.0 + 7.0 * std::sqrt(5.0)) / 4.0},
      {"icosahedron", 20, 30, 12, 3, 5.0 * (3.0 + std::sqrt(5.0)) / 12.0},
  };
  return table;
}

}  // namespace euclid
