#ifndef PSTOKES_TENSOR_HPP
#define PSTOKES_TENSOR_HPP

#include <Eigen/Dense>
#include <cmath>

namespace pstokes {

using Vec2 = Eigen::Vector2d;

/// Symmetric 2x2 tensor (strain rates, deviatoric stresses).
/// Symmetry is exact by storage: only xx, zz, xz are kept.
struct SymTensor2 {
  double xx = 0.0;
  double zz = 0.0;
  double xz = 0.0;

  static SymTensor2 zero() { return {}; }
  static SymTensor2 diag(double a, double b) { return {a, b, 0.0}; }

  /// Frobenius norm, counting the off-diagonal entry twice.
  double norm() const { return std::sqrt(xx * xx + zz * zz + 2.0 * xz * xz); }
  double squared_norm() const { return xx * xx + zz * zz + 2.0 * xz * xz; }

  /// Double contraction A : B.
  double ddot(const SymTensor2& o) const {
    return xx * o.xx + zz * o.zz + 2.0 * xz * o.xz;
  }

  SymTensor2 operator+(const SymTensor2& o) const {
    return {xx + o.xx, zz + o.zz, xz + o.xz};
  }
  SymTensor2 operator-(const SymTensor2& o) const {
    return {xx - o.xx, zz - o.zz, xz - o.xz};
  }
  SymTensor2 operator*(double a) const { return {a * xx, a * zz, a * xz}; }
  SymTensor2& operator+=(const SymTensor2& o) {
    xx += o.xx;
    zz += o.zz;
    xz += o.xz;
    return *this;
  }
};

inline SymTensor2 operator*(double a, const SymTensor2& t) { return t * a; }

/// Symmetric gradient of a vector field from its 2x2 gradient entries
/// (du_i/dx_j layout: g(i,j) = d u_i / d x_j).
inline SymTensor2 sym_grad(const Eigen::Matrix2d& g) {
  return {g(0, 0), g(1, 1), 0.5 * (g(0, 1) + g(1, 0))};
}

}  // namespace pstokes

#endif
