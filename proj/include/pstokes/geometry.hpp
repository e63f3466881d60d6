#ifndef PSTOKES_GEOMETRY_HPP
#define PSTOKES_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pstokes/tensor.hpp"

namespace pstokes {

enum class BoundaryTag : std::uint8_t { Gamma0, Gamma1, GammaL };

const char* to_string(BoundaryTag tag);

/// Film profile x' -> h(x'), restricted to analytic families so that
/// h_min/h_max and arclengths need no root-finding.
struct Profile {
  enum class Family { Constant, Affine, CosineBump } family = Family::Constant;
  // Constant: h = a.   Affine: h = a + b x'.   CosineBump: h = a + b cos(2 pi x'/L).
  double a = 1.0;
  double b = 0.0;

  double operator()(double x, double L) const;
  double derivative(double x, double L) const;
};

/// Thin-film cross-section {(x', x3) : x' in (0,L), 0 < x3 < h(x')}.
struct ThinDomain {
  double L = 1.0;
  Profile h;
  double h_min = 1.0;
  double h_max = 1.0;

  static ThinDomain flat(double L, double h0);
  static ThinDomain affine(double L, double a, double b);
  static ThinDomain cosine(double L, double a, double b);

  double height(double x) const { return h(x, L); }
  double height_slope(double x) const { return h.derivative(x, L); }
};

struct BoundaryFacet {
  int a = -1;  // endpoint vertices, oriented so the domain lies on the left
  int b = -1;
  BoundaryTag tag = BoundaryTag::Gamma0;
  Vec2 normal = Vec2::Zero();  // outward unit normal
  double length = 0.0;
};

struct Mesh {
  std::vector<Vec2> vertices;
  std::vector<std::array<int, 3>> cells;  // CCW vertex triples
  std::vector<BoundaryFacet> boundary_facets;
  int nx = 0;  // structured resolution the mesh was built with
  int nz = 0;

  double cell_area(int c) const;
  double total_area() const;
};

/// Structured terrain-following mesh: nx columns, nz rows, each quad split
/// into two triangles; vertical coordinates scaled per column to [0, h(x'_i)].
Mesh build_thin_mesh(const ThinDomain& domain, int nx, int nz);

/// Sum of facet lengths carrying the tag.
double boundary_measure(const Mesh& mesh, BoundaryTag tag);

/// Plain-text dump: `vertex x z`, `cell i j k`, `facet i j TAG` records.
void write_mesh(const Mesh& mesh, const std::string& path);

}  // namespace pstokes

#endif
