#pragma once

#include "kirbylab/hopf.hpp"

namespace kirbylab {

class RibbonAlgebra;
using RibbonPtr = std::shared_ptr<const RibbonAlgebra>;

// Quasitriangular + ribbon structure on a Hopf algebra: the R-matrix, the
// twist theta, and the derived Drinfeld element u, special grouplike G = theta u,
// and h_nu = (id x nu)(R). All identities are verified by exact tensor
// contraction over the basis at construction time.
class RibbonAlgebra {
public:
  static AxiomReport verify_quasitriangular(const HopfAlgebra& H, const Tensor& R);
  static AxiomReport verify_ribbon(const HopfAlgebra& H, const Tensor& R,
                                   const AlgebraElement& theta);

  // Runs both verifications plus the special-grouplike consistency checks
  // (G grouplike, S(u) = G^{-1} u G^{-1}, S^2 = conj by G, g = G^2 h_nu,
  // lambda(S(x)) = lambda(G^2 h_nu x)). Throws AxiomFailed / ConsistencyFailure.
  static RibbonPtr make(HopfPtr H, Tensor R, AlgebraElement theta);

  const HopfAlgebra& hopf() const { return *H_; }
  const HopfPtr& hopf_ptr() const { return H_; }

  const Tensor& R() const { return R_; }
  const Tensor& R_inv() const { return R_inv_; }
  const AlgebraElement& theta() const { return theta_; }
  const AlgebraElement& theta_inv() const { return theta_inv_; }
  const AlgebraElement& drinfeld_u() const { return u_; }
  const AlgebraElement& drinfeld_u_inv() const { return u_inv_; }
  const AlgebraElement& special_grouplike() const { return G_; }
  const AlgebraElement& special_grouplike_inv() const { return G_inv_; }
  const AlgebraElement& h_nu() const { return h_nu_; }

  // Integer powers of G (negative allowed).
  AlgebraElement G_power(long k) const;
  AlgebraElement theta_power(long k) const;

  // Quantum trace tr_q(f) = Tr(rho(G) f) and dimension dim_q = Tr(rho(G)).
  // Both are cross-checked against the G^{-1} expression; H-linear input is
  // the caller's responsibility for quantum_trace.
  Fe quantum_trace(const Representation& rho, const Matrix& f) const;
  Fe quantum_dim(const Representation& rho) const;

private:
  RibbonAlgebra() = default;

  HopfPtr H_;
  Tensor R_, R_inv_, R21_;
  AlgebraElement theta_, theta_inv_, u_, u_inv_, G_, G_inv_, h_nu_;
};

// u = m(S x id) sigma(R), with u^{-1} = m(id x S^2)(R_21) verified against it.
AlgebraElement drinfeld_element(const HopfAlgebra& H, const Tensor& R);

}  // namespace kirbylab
