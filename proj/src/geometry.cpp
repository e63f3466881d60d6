#include "pstokes/geometry.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace pstokes {

const char* to_string(BoundaryTag tag) {
  switch (tag) {
    case BoundaryTag::Gamma0: return "Gamma0";
    case BoundaryTag::Gamma1: return "Gamma1";
    case BoundaryTag::GammaL: return "GammaL";
  }
  return "?";
}

double Profile::operator()(double x, double L) const {
  switch (family) {
    case Family::Constant: return a;
    case Family::Affine: return a + b * x;
    case Family::CosineBump:
      return a + b * std::cos(2.0 * std::numbers::pi * x / L);
  }
  return a;
}

double Profile::derivative(double x, double L) const {
  switch (family) {
    case Family::Constant: return 0.0;
    case Family::Affine: return b;
    case Family::CosineBump: {
      const double k = 2.0 * std::numbers::pi / L;
      return -b * k * std::sin(k * x);
    }
  }
  return 0.0;
}

namespace {

ThinDomain make_domain(double L, Profile p) {
  if (L <= 0.0) throw std::invalid_argument("domain length must be positive");
  ThinDomain d;
  d.L = L;
  d.h = p;
  switch (p.family) {
    case Profile::Family::Constant:
      d.h_min = d.h_max = p.a;
      break;
    case Profile::Family::Affine:
      d.h_min = std::min(p.a, p.a + p.b * L);
      d.h_max = std::max(p.a, p.a + p.b * L);
      break;
    case Profile::Family::CosineBump:
      d.h_min = p.a - std::abs(p.b);
      d.h_max = p.a + std::abs(p.b);
      break;
  }
  if (d.h_min <= 0.0)
    throw std::invalid_argument("profile must satisfy h_min > 0");
  return d;
}

}  // namespace

ThinDomain ThinDomain::flat(double L, double h0) {
  return make_domain(L, Profile{Profile::Family::Constant, h0, 0.0});
}

ThinDomain ThinDomain::affine(double L, double a, double b) {
  return make_domain(L, Profile{Profile::Family::Affine, a, b});
}

ThinDomain ThinDomain::cosine(double L, double a, double b) {
  return make_domain(L, Profile{Profile::Family::CosineBump, a, b});
}

double Mesh::cell_area(int c) const {
  const auto& t = cells[c];
  const Vec2 e1 = vertices[t[1]] - vertices[t[0]];
  const Vec2 e2 = vertices[t[2]] - vertices[t[0]];
  return 0.5 * (e1.x() * e2.y() - e1.y() * e2.x());
}

double Mesh::total_area() const {
  double a = 0.0;
  for (int c = 0; c < static_cast<int>(cells.size()); ++c) a += cell_area(c);
  return a;
}

Mesh build_thin_mesh(const ThinDomain& domain, int nx, int nz) {
  if (nx < 1 || nz < 1) throw std::invalid_argument("nx, nz must be >= 1");
  if (domain.h_min <= 0.0)
    throw std::invalid_argument("domain has non-positive h_min");

  Mesh m;
  m.nx = nx;
  m.nz = nz;
  m.vertices.resize(static_cast<size_t>(nx + 1) * (nz + 1));
  auto vid = [nx](int i, int j) { return j * (nx + 1) + i; };

  for (int j = 0; j <= nz; ++j) {
    for (int i = 0; i <= nx; ++i) {
      const double x = domain.L * static_cast<double>(i) / nx;
      const double z =
          domain.height(x) * static_cast<double>(j) / nz;
      m.vertices[vid(i, j)] = Vec2(x, z);
    }
  }

  m.cells.reserve(static_cast<size_t>(2 * nx) * nz);
  for (int j = 0; j < nz; ++j) {
    for (int i = 0; i < nx; ++i) {
      const int a = vid(i, j), b = vid(i + 1, j);
      const int c = vid(i + 1, j + 1), d = vid(i, j + 1);
      m.cells.push_back({a, b, c});
      m.cells.push_back({a, c, d});
    }
  }

  auto add_facet = [&m](int a, int b, BoundaryTag tag) {
    BoundaryFacet f;
    f.a = a;
    f.b = b;
    f.tag = tag;
    const Vec2 t = m.vertices[b] - m.vertices[a];
    f.length = t.norm();
    // Outward normal: rotate the (domain-on-the-left) tangent by -90 deg.
    f.normal = Vec2(t.y(), -t.x()) / f.length;
    m.boundary_facets.push_back(f);
  };

  // Bottom left->right gives n = (0,-1) exactly; the other sides are
  // oriented to keep the domain on the left.
  for (int i = 0; i < nx; ++i) add_facet(vid(i, 0), vid(i + 1, 0), BoundaryTag::Gamma0);
  for (int i = 0; i < nx; ++i) add_facet(vid(i + 1, nz), vid(i, nz), BoundaryTag::Gamma1);
  for (int j = 0; j < nz; ++j) add_facet(vid(0, j + 1), vid(0, j), BoundaryTag::GammaL);
  for (int j = 0; j < nz; ++j) add_facet(vid(nx, j), vid(nx, j + 1), BoundaryTag::GammaL);

  return m;
}

double boundary_measure(const Mesh& mesh, BoundaryTag tag) {
  double len = 0.0;
  for (const auto& f : mesh.boundary_facets)
    if (f.tag == tag) len += f.length;
  return len;
}

void write_mesh(const Mesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out.precision(17);
  for (const auto& v : mesh.vertices)
    out << "vertex " << v.x() << " " << v.y() << "\n";
  for (const auto& c : mesh.cells)
    out << "cell " << c[0] << " " << c[1] << " " << c[2] << "\n";
  for (const auto& f : mesh.boundary_facets)
    out << "facet " << f.a << " " << f.b << " " << to_string(f.tag) << "\n";
}

}  // namespace pstokes
