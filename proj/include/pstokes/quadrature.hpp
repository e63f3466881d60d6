#ifndef PSTOKES_QUADRATURE_HPP
#define PSTOKES_QUADRATURE_HPP

#include <array>
#include <vector>

namespace pstokes {

/// Quadrature point on the reference triangle {x,y >= 0, x+y <= 1}
/// or on the reference edge [0,1] (y unused).
struct QPoint {
  double x;
  double y;
  double w;
};

/// 4-point Gauss-Legendre rule on [0,1], exact for polynomials of degree 7.
const std::array<QPoint, 4>& edge_rule();

/// Triangle rule built by collapsing the tensor product of two 4-point
/// Gauss-Legendre rules through the Duffy map x = u(1-v), y = v.
/// Exact for all polynomials of total degree <= 6; 16 points.
const std::vector<QPoint>& tri_rule();

}  // namespace pstokes

#endif
