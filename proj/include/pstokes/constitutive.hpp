#ifndef PSTOKES_CONSTITUTIVE_HPP
#define PSTOKES_CONSTITUTIVE_HPP

#include <utility>

#include "pstokes/tensor.hpp"

namespace pstokes {

/// Viscosity families. All satisfy mu0 <= mu(o,e,d) <= mu1 with
/// d -> mu(.,.,d) nondecreasing, by construction:
///   Constant:          mu = c
///   BoundedIncreasing: mu = mu0 + (mu1-mu0) d^2/(1+d^2)
///   ThermoCoupled:     mu = mu0 + (mu1-mu0) s(-alpha*o + beta*|e|) d^2/(1+d^2)
/// with s the logistic function, o the temperature and e the velocity.
enum class MuFamily { Constant, BoundedIncreasing, ThermoCoupled };

struct FluidParams {
  double p = 1.5;       // shear-thinning exponent, 6/5 <= p < 2 (p = 2 allowed
                        // for the linear sanity path)
  double p_conj = 3.0;  // p' = p/(p-1)
  double mu0 = 1.0;
  double mu1 = 1.0;
  MuFamily family = MuFamily::Constant;
  double alpha = 0.0;  // ThermoCoupled temperature sensitivity
  double beta = 0.0;   // ThermoCoupled velocity sensitivity

  static FluidParams constant(double p, double c);
  static FluidParams bounded_increasing(double p, double mu0, double mu1);
  static FluidParams thermo_coupled(double p, double mu0, double mu1,
                                    double alpha, double beta);
};

/// mu(o, e, d); rejects d < 0.
double viscosity(const FluidParams& params, double temp, const Vec2& vel,
                 double d);

/// d(mu)/dd at fixed (o, e); nonnegative for every family.
double viscosity_dd(const FluidParams& params, double temp, const Vec2& vel,
                    double d);

/// Power-law stress map: 2 mu(o,e,|t|) |t|^{p-2} t, zero tensor at t = 0.
SymTensor2 eval_F(const FluidParams& params, double temp, const Vec2& vel,
                  const SymTensor2& t);

/// Smoothed map with m = sqrt(|t|^2 + eta^2): 2 mu(o,e,m) m^{p-2} t.
/// Coincides with eval_F at eta = 0, t != 0; continuous at t = 0 for eta > 0.
SymTensor2 eval_F_eta(const FluidParams& params, double temp, const Vec2& vel,
                      const SymTensor2& t, double eta);

/// (F1, F2) with F1 = mu0 |t|^{p-2} t and F2 = 2 (mu - mu0/2) |t|^{p-2} t;
/// F1 + F2 = eval_F exactly.
std::pair<SymTensor2, SymTensor2> split_F(const FluidParams& params,
                                          double temp, const Vec2& vel,
                                          const SymTensor2& t);

/// Phi(t) = integral_0^t 2 mu(o,e,s) s^{p-1} ds, the convex potential whose
/// gradient in the tensor argument is eval_F once (o, e) are frozen.
/// Adaptive quadrature, relative tolerance 1e-10.
double potential_phi(const FluidParams& params, double temp, const Vec2& vel,
                     double t);

/// Potential of the eta-smoothed map: Phi_eta(t) = Phi(m) - Phi(eta) with
/// m = sqrt(t^2 + eta^2), evaluated as a single integral for accuracy.
double potential_phi_eta(const FluidParams& params, double temp,
                         const Vec2& vel, double t, double eta);

/// (|a|+|b|)^{2-p} (F1(a)-F1(b)):(a-b) - mu0 (p-1) |a-b|^2; nonnegative up
/// to roundoff for all inputs when p in (1,2).
double strong_monotonicity_residual(double p, double mu0, const SymTensor2& a,
                                    const SymTensor2& b);

}  // namespace pstokes

#endif
