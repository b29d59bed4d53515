#include "kirbylab/ribbon.hpp"

#include "kirbylab/errors.hpp"

namespace kirbylab {

namespace {

// Embed an arity-2 tensor into arity 3 at the given slot pair.
Tensor embed3(const HopfAlgebra& H, const Tensor& t, int slot_a, int slot_b) {
  Tensor out(H.field(), H.dim(), 3);
  int unit_witness = -1;
  // decompose 1 over the basis once
  AlgebraElement one = H.unit();
  std::vector<std::pair<int, Fe>> unit_terms;
  for (int i = 0; i < H.dim(); ++i)
    if (!one[i].is_zero()) unit_terms.emplace_back(i, one[i]);
  (void)unit_witness;
  for (const auto& [k, c] : t.terms())
    for (const auto& [ui, uc] : unit_terms) {
      Tensor::Key key(3, 0);
      key[slot_a] = k[0];
      key[slot_b] = k[1];
      for (int s = 0; s < 3; ++s)
        if (s != slot_a && s != slot_b) key[s] = ui;
      out.add(key, c * uc);
    }
  return out;
}

Tensor comult_slot(const HopfAlgebra& H, const Tensor& t, int slot) {
  // apply Delta to one slot of an arity-2 tensor, yielding arity 3
  Tensor out(H.field(), H.dim(), 3);
  for (const auto& [k, c] : t.terms())
    for (const auto& [i, j, v] : H.data().comult[k[slot]]) {
      Tensor::Key key;
      if (slot == 0)
        key = {i, j, k[1]};
      else
        key = {k[0], i, j};
      out.add(key, c * v);
    }
  return out;
}

Tensor antipode_both(const HopfAlgebra& H, const Tensor& t) {
  return H.apply_antipode_slot(H.apply_antipode_slot(t, 0), 1);
}

}  // namespace

AlgebraElement drinfeld_element(const HopfAlgebra& H, const Tensor& R) {
  // u = sum S(b_i) a_i for R = sum a_i x b_i
  AlgebraElement u = H.zero();
  for (const auto& [k, c] : R.terms()) {
    AlgebraElement sb = H.antipode(H.basis_element(k[1]));
    u = H.add(u, H.scalar_mul(c, H.mul(sb, H.basis_element(k[0]))));
  }
  return u;
}

AxiomReport RibbonAlgebra::verify_quasitriangular(const HopfAlgebra& H, const Tensor& R) {
  AxiomReport report;
  auto record = [&](const std::string& name, bool pass) {
    report.checks.push_back({name, pass});
  };
  if (R.arity() != 2) throw DimensionMismatch("R must have arity 2");

  // invertibility, with (S x id)(R) as the candidate inverse
  Tensor candidate = H.apply_antipode_slot(R, 0);
  Tensor unit2 = H.tensor_unit(2);
  bool invertible =
      H.tensor_mul(R, candidate) == unit2 && H.tensor_mul(candidate, R) == unit2;
  record("R invertible with R^-1 = (S x id)(R)", invertible);

  // R Delta(x) = sigma Delta(x) R on the basis
  bool intertwines = true;
  for (int b = 0; b < H.dim() && intertwines; ++b) {
    Tensor delta = H.comult(H.basis_element(b));
    if (H.tensor_mul(R, delta) != H.tensor_mul(H.tensor_flip(delta), R)) intertwines = false;
  }
  record("R Delta(x) = sigma Delta(x) R", intertwines);

  // (id x Delta)(R) = R_13 R_12 and (Delta x id)(R) = R_13 R_23
  Tensor id_delta = comult_slot(H, R, 1);
  Tensor delta_id = comult_slot(H, R, 0);
  Tensor R12 = embed3(H, R, 0, 1);
  Tensor R13 = embed3(H, R, 0, 2);
  Tensor R23 = embed3(H, R, 1, 2);
  record("(id x Delta)(R) = R13 R12", id_delta == H.tensor_mul(R13, R12));
  record("(Delta x id)(R) = R13 R23", delta_id == H.tensor_mul(R13, R23));

  // counit collapses
  AlgebraElement eps_left = H.zero(), eps_right = H.zero();
  for (const auto& [k, c] : R.terms()) {
    eps_left = H.add(eps_left, H.scalar_mul(c * H.data().counit[k[0]], H.basis_element(k[1])));
    eps_right = H.add(eps_right, H.scalar_mul(c * H.data().counit[k[1]], H.basis_element(k[0])));
  }
  record("(eps x id)(R) = 1 = (id x eps)(R)",
         eps_left == H.unit() && eps_right == H.unit());

  // Yang-Baxter
  Tensor lhs = H.tensor_mul(H.tensor_mul(R23, R13), R12);
  Tensor rhs = H.tensor_mul(H.tensor_mul(R12, R13), R23);
  record("R23 R13 R12 = R12 R13 R23", lhs == rhs);

  // (S x S)(R) = R
  record("(S x S)(R) = R", antipode_both(H, R) == R);

  // Drinfeld element sanity: u invertible via m(id x S^2)(R21), S^2 = conj by u
  AlgebraElement u = drinfeld_element(H, R);
  AlgebraElement u_inv = H.zero();
  for (const auto& [k, c] : R.terms()) {
    // R21 term: b_i x a_i -> b_i S^2(a_i)
    AlgebraElement s2a = H.antipode(H.antipode(H.basis_element(k[0])));
    u_inv = H.add(u_inv, H.scalar_mul(c, H.mul(H.basis_element(k[1]), s2a)));
  }
  bool u_ok = H.mul(u, u_inv) == H.unit() && H.mul(u_inv, u) == H.unit();
  if (u_ok)
    for (int b = 0; b < H.dim(); ++b) {
      AlgebraElement s2 = H.antipode(H.antipode(H.basis_element(b)));
      if (s2 != H.mul(H.mul(u, H.basis_element(b)), u_inv)) {
        u_ok = false;
        break;
      }
    }
  record("u = m(S x id)sigma(R) invertible and S^2 = u x u^-1", u_ok);

  return report;
}

AxiomReport RibbonAlgebra::verify_ribbon(const HopfAlgebra& H, const Tensor& R,
                                         const AlgebraElement& theta) {
  AxiomReport report;
  auto record = [&](const std::string& name, bool pass) {
    report.checks.push_back({name, pass});
  };

  bool central = true;
  for (int b = 0; b < H.dim() && central; ++b) {
    AlgebraElement e = H.basis_element(b);
    if (H.mul(theta, e) != H.mul(e, theta)) central = false;
  }
  record("theta central", central);

  std::vector<Fe> theta_inv = solve_linear(H.left_mult_matrix(theta), H.unit());
  bool invertible = !theta_inv.empty();
  record("theta invertible", invertible);

  record("S(theta) = theta", H.antipode(theta) == theta);
  record("eps(theta) = 1", H.counit(theta).is_one());

  // Delta(theta) = (theta x theta) R21 R
  Tensor theta_tensor(H.field(), H.dim(), 2);
  for (int i = 0; i < H.dim(); ++i) {
    if (theta[i].is_zero()) continue;
    for (int j = 0; j < H.dim(); ++j)
      if (!theta[j].is_zero()) theta_tensor.add({i, j}, theta[i] * theta[j]);
  }
  Tensor rhs = H.tensor_mul(theta_tensor, H.tensor_mul(H.tensor_flip(R), R));
  record("Delta(theta) = (theta x theta) R21 R", H.comult(theta) == rhs);

  if (invertible) {
    AlgebraElement u = drinfeld_element(H, R);
    AlgebraElement theta_inv2 = H.mul(theta_inv, theta_inv);
    record("theta^-2 = u S(u)", theta_inv2 == H.mul(u, H.antipode(u)));
  }

  return report;
}

RibbonPtr RibbonAlgebra::make(HopfPtr H, Tensor R, AlgebraElement theta) {
  AxiomReport qt = verify_quasitriangular(*H, R);
  if (!qt.ok()) {
    if (qt.checks.front().name.starts_with("R invertible") && !qt.checks.front().passed)
      throw NotInvertible("R is not invertible via (S x id)(R)");
    throw AxiomFailed("quasitriangular axiom failed: " + qt.first_failure());
  }
  AxiomReport rb = verify_ribbon(*H, R, theta);
  if (!rb.ok()) throw AxiomFailed("ribbon axiom failed: " + rb.first_failure());

  auto A = std::shared_ptr<RibbonAlgebra>(new RibbonAlgebra());
  A->H_ = std::move(H);
  const HopfAlgebra& hopf = *A->H_;
  A->R_ = std::move(R);
  A->R21_ = hopf.tensor_flip(A->R_);
  A->R_inv_ = hopf.apply_antipode_slot(A->R_, 0);
  A->theta_ = std::move(theta);
  A->theta_inv_ = solve_linear(hopf.left_mult_matrix(A->theta_), hopf.unit());
  A->u_ = drinfeld_element(hopf, A->R_);
  A->u_inv_ = hopf.zero();
  for (const auto& [k, c] : A->R_.terms()) {
    AlgebraElement s2a = hopf.antipode(hopf.antipode(hopf.basis_element(k[0])));
    A->u_inv_ = hopf.add(A->u_inv_, hopf.scalar_mul(c, hopf.mul(hopf.basis_element(k[1]), s2a)));
  }
  A->G_ = hopf.mul(A->theta_, A->u_);
  A->G_inv_ = hopf.mul(A->theta_inv_, A->u_inv_);
  A->h_nu_ = hopf.zero();
  const LinearForm& nu = hopf.distinguished_grouplike_dual();
  for (const auto& [k, c] : A->R_.terms())
    A->h_nu_ = hopf.add(A->h_nu_, hopf.scalar_mul(c * nu[k[1]], hopf.basis_element(k[0])));

  // consistency of the special grouplike element
  if (hopf.mul(A->G_, A->G_inv_) != hopf.unit())
    throw ConsistencyFailure("G G^-1 != 1");
  if (!hopf.is_grouplike(A->G_)) throw ConsistencyFailure("G = theta u is not grouplike");
  if (hopf.antipode(A->u_) != hopf.mul(hopf.mul(A->G_inv_, A->u_), A->G_inv_))
    throw ConsistencyFailure("S(u) != G^-1 u G^-1");
  for (int b = 0; b < hopf.dim(); ++b) {
    AlgebraElement s2 = hopf.antipode(hopf.antipode(hopf.basis_element(b)));
    if (s2 != hopf.mul(hopf.mul(A->G_, hopf.basis_element(b)), A->G_inv_))
      throw ConsistencyFailure("S^2 != conjugation by G");
  }
  AlgebraElement g_expected = hopf.mul(hopf.mul(A->G_, A->G_), A->h_nu_);
  if (g_expected != hopf.distinguished_grouplike())
    throw ConsistencyFailure("g != G^2 h_nu");
  for (int b = 0; b < hopf.dim(); ++b) {
    Fe lhs = hopf.lambda_of(hopf.antipode(hopf.basis_element(b)));
    Fe rhs = hopf.lambda_of(hopf.mul(g_expected, hopf.basis_element(b)));
    if (lhs != rhs) throw ConsistencyFailure("lambda(S(x)) != lambda(G^2 h_nu x)");
  }

  return A;
}

AlgebraElement RibbonAlgebra::G_power(long k) const {
  const HopfAlgebra& H = *H_;
  AlgebraElement base = k >= 0 ? G_ : G_inv_;
  AlgebraElement out = H.unit();
  for (long i = 0; i < std::abs(k); ++i) out = H.mul(out, base);
  return out;
}

AlgebraElement RibbonAlgebra::theta_power(long k) const {
  const HopfAlgebra& H = *H_;
  AlgebraElement base = k >= 0 ? theta_ : theta_inv_;
  AlgebraElement out = H.unit();
  for (long i = 0; i < std::abs(k); ++i) out = H.mul(out, base);
  return out;
}

Fe RibbonAlgebra::quantum_trace(const Representation& rho, const Matrix& f) const {
  if (!is_representation(*H_, rho)) throw NotARepresentation("quantum_trace input");
  Matrix G_mat = representation_of(*H_, rho, G_);
  Matrix Ginv_mat = representation_of(*H_, rho, G_inv_);
  Fe via_G = (G_mat * f).trace();
  Fe via_Ginv = (Ginv_mat * f).trace();
  if (via_G != via_Ginv)
    throw NotARepresentation("Tr(G f) != Tr(G^-1 f); f is not H-linear");
  return via_G;
}

Fe RibbonAlgebra::quantum_dim(const Representation& rho) const {
  return quantum_trace(rho, Matrix::identity(rho.dim, H_->field()));
}

}  // namespace kirbylab
