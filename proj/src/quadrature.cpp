#include "pstokes/quadrature.hpp"

namespace pstokes {

namespace {

// Gauss-Legendre n=4 on [-1,1].
constexpr double kGL4Node[2] = {0.3399810435848563, 0.8611363115940526};
constexpr double kGL4Weight[2] = {0.6521451548625461, 0.3478548451374538};

std::array<QPoint, 4> make_edge_rule() {
  std::array<QPoint, 4> r{};
  int k = 0;
  for (int i = 0; i < 2; ++i) {
    for (double sign : {-1.0, 1.0}) {
      r[k].x = 0.5 * (1.0 + sign * kGL4Node[i]);
      r[k].y = 0.0;
      r[k].w = 0.5 * kGL4Weight[i];
      ++k;
    }
  }
  return r;
}

std::vector<QPoint> make_tri_rule() {
  const auto& e = edge_rule();
  std::vector<QPoint> r;
  r.reserve(16);
  for (const auto& qu : e) {
    for (const auto& qv : e) {
      // Duffy map from the unit square; Jacobian (1 - v).
      QPoint q;
      q.x = qu.x * (1.0 - qv.x);
      q.y = qv.x;
      q.w = qu.w * qv.w * (1.0 - qv.x);
      r.push_back(q);
    }
  }
  return r;
}

}  // namespace

const std::array<QPoint, 4>& edge_rule() {
  static const std::array<QPoint, 4> rule = make_edge_rule();
  return rule;
}

const std::vector<QPoint>& tri_rule() {
  static const std::vector<QPoint> rule = make_tri_rule();
  return rule;
}

}  // namespace pstokes
