#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "kirbylab/linalg.hpp"
#include "kirbylab/tensor.hpp"

namespace kirbylab {

// Coordinate vector over the algebra basis (length = dim H).
using AlgebraElement = std::vector<Fe>;
// Linear form on H, stored by its values on the basis.
using LinearForm = std::vector<Fe>;

struct AxiomCheck {
  std::string name;
  bool passed;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return c.name;
    return "";
  }
};

// Structure constants of a finite-dimensional Hopf algebra over an exact
// field. Multiplication is stored densely (one sparse row per basis pair),
// comultiplication sparsely per basis vector.
struct HopfData {
  FieldPtr field;
  int dim = 0;
  std::vector<std::string> basis_names;
  std::vector<std::vector<SparseRow>> mult;  // mult[i][j] = coords of e_i * e_j
  AlgebraElement unit;
  std::vector<std::vector<std::tuple<int, int, Fe>>> comult;  // per basis index
  std::vector<Fe> counit;
  Matrix antipode;  // column j = coords of S(e_j)
};

class HopfAlgebra;
using HopfPtr = std::shared_ptr<const HopfAlgebra>;

class HopfAlgebra {
public:
  // Exact verification of every Hopf axiom as a tensor identity over the
  // basis. Throws DimensionMismatch on structurally inconsistent input.
  static AxiomReport verify(const HopfData& data);

  // Requires verify(data).ok(); computes integrals and distinguished
  // grouplikes eagerly. Throws AxiomFailed / KernelNotOneDimensional /
  // NormalizationFailure / NotGrouplike as appropriate.
  static HopfPtr make(HopfData data);

  int dim() const { return data_.dim; }
  const FieldPtr& field() const { return data_.field; }
  const std::vector<std::string>& basis_names() const { return data_.basis_names; }
  const HopfData& data() const { return data_; }

  AlgebraElement zero() const { return AlgebraElement(data_.dim, Fe::zero(data_.field)); }
  AlgebraElement unit() const { return data_.unit; }
  AlgebraElement basis_element(int i) const;
  AlgebraElement scalar_mul(const Fe& c, const AlgebraElement& a) const;
  AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const;
  bool is_zero_elem(const AlgebraElement& a) const;

  const SparseRow& mult_entry(int i, int j) const { return data_.mult[i][j]; }
  AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;
  Fe counit(const AlgebraElement& a) const;
  Tensor comult(const AlgebraElement& a) const;
  AlgebraElement antipode(const AlgebraElement& a) const;
  AlgebraElement antipode_inv(const AlgebraElement& a) const;
  // S^k for any integer k (negative powers use the inverse antipode).
  const Matrix& antipode_power(long k) const;
  SparseRow antipode_power_basis(long k, int basis_index) const;

  // Iterated comultiplication Delta^{(n)} : H -> H^{otimes n}, n >= 1.
  Tensor sweedler_power(const AlgebraElement& a, int n) const;

  // Componentwise product on H^{otimes n}.
  Tensor tensor_mul(const Tensor& a, const Tensor& b) const;
  Tensor tensor_unit(int arity) const;
  Tensor tensor_flip(const Tensor& t) const;  // arity 2
  Tensor apply_antipode_slot(const Tensor& t, int slot, long power = 1) const;
  Tensor elem_to_tensor(const AlgebraElement& a) const;  // arity 1

  Matrix left_mult_matrix(const AlgebraElement& a) const;
  Matrix right_mult_matrix(const AlgebraElement& a) const;

  // Integrals and distinguished grouplikes (cached at construction):
  //   Lambda: left integral, x Lambda = eps(x) Lambda;
  //   lambda: right integral for H*, normalized so lambda(Lambda) = 1
  //           (and lambda(S(Lambda)) = 1 is verified);
  //   g in H with x_(1) lambda(x_(2)) = lambda(x) g;
  //   nu in H* with Lambda x = nu(x) Lambda.
  const AlgebraElement& left_integral() const { return Lambda_; }
  const LinearForm& right_integral_dual() const { return lambda_; }
  const AlgebraElement& distinguished_grouplike() const { return g_; }
  const LinearForm& distinguished_grouplike_dual() const { return nu_; }
  bool is_unimodular() const { return unimodular_; }

  Fe eval_form(const LinearForm& f, const AlgebraElement& a) const;
  // lambda(a b) without materializing the product twice.
  Fe lambda_of(const AlgebraElement& a) const { return eval_form(lambda_, a); }

  // x harpoon nu = nu(x_(1)) x_(2), as a cached linear map.
  const Matrix& nu_action() const { return nu_action_; }
  AlgebraElement harpoon_nu(const AlgebraElement& a) const { return nu_action_.apply(a); }

  // a = lambda(a Lambda_(1)) S(Lambda_(2)); throws IdentityViolated when the
  // recomputation disagrees (only possible on a corrupted presentation).
  AlgebraElement radford_expand(const AlgebraElement& a) const;

  // Mutually inverse maps between forms and elements:
  //   form_to_element(f) = (f tensor S) Delta(Lambda),  element_to_form(a) = lambda . a.
  AlgebraElement form_to_element(const LinearForm& f) const;
  LinearForm element_to_form(const AlgebraElement& a) const;

  bool is_grouplike(const AlgebraElement& a) const;

private:
  explicit HopfAlgebra(HopfData data) : data_(std::move(data)) {}
  void compute_caches();

  HopfData data_;
  AlgebraElement Lambda_;
  LinearForm lambda_;
  AlgebraElement g_;
  LinearForm nu_;
  bool unimodular_ = false;
  Matrix nu_action_;
  Matrix antipode_inv_;
  mutable std::map<long, Matrix> antipode_powers_;
  mutable std::mutex cache_mutex_;
};

// Left/trivial representations and helpers. `action[b]` is the matrix of the
// basis element e_b on V.
struct Representation {
  int dim = 0;
  std::vector<Matrix> action;
};

Representation regular_representation(const HopfAlgebra& H);
Representation trivial_representation(const HopfAlgebra& H);
Representation dual_representation(const HopfAlgebra& H, const Representation& rho);
Representation tensor_representation(const HopfAlgebra& H, const Representation& a,
                                     const Representation& b);
bool is_representation(const HopfAlgebra& H, const Representation& rho);
Matrix representation_of(const HopfAlgebra& H, const Representation& rho,
                         const AlgebraElement& a);

}  // namespace kirbylab
