#include "kirbylab/hopf.hpp"

#include <algorithm>

#include "kirbylab/errors.hpp"

namespace kirbylab {

namespace {

void check_shapes(const HopfData& d) {
  const int n = d.dim;
  if (n <= 0) throw DimensionMismatch("dimension must be positive");
  if (static_cast<int>(d.basis_names.size()) != n)
    throw DimensionMismatch("basis name count != dim");
  if (static_cast<int>(d.mult.size()) != n) throw DimensionMismatch("mult table rows != dim");
  for (const auto& row : d.mult) {
    if (static_cast<int>(row.size()) != n) throw DimensionMismatch("mult table cols != dim");
    for (const auto& entry : row)
      for (const auto& [c, v] : entry) {
        (void)v;
        if (c < 0 || c >= n) throw DimensionMismatch("mult entry index out of range");
      }
  }
  if (static_cast<int>(d.unit.size()) != n) throw DimensionMismatch("unit length != dim");
  if (static_cast<int>(d.comult.size()) != n) throw DimensionMismatch("comult size != dim");
  for (const auto& terms : d.comult)
    for (const auto& [i, j, c] : terms) {
      (void)c;
      if (i < 0 || i >= n || j < 0 || j >= n)
        throw DimensionMismatch("comult index out of range");
    }
  if (static_cast<int>(d.counit.size()) != n) throw DimensionMismatch("counit length != dim");
  if (d.antipode.rows() != n || d.antipode.cols() != n)
    throw DimensionMismatch("antipode matrix must be dim x dim");
}

}  // namespace

AlgebraElement HopfAlgebra::basis_element(int i) const {
  AlgebraElement e = zero();
  e[i] = Fe::one(data_.field);
  return e;
}

AlgebraElement HopfAlgebra::scalar_mul(const Fe& c, const AlgebraElement& a) const {
  AlgebraElement r(a.size(), Fe::zero(data_.field));
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) r[i] = a[i] * c;
  return r;
}

AlgebraElement HopfAlgebra::add(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement r(a.size(), Fe::zero(data_.field));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

AlgebraElement HopfAlgebra::sub(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement r(a.size(), Fe::zero(data_.field));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool HopfAlgebra::is_zero_elem(const AlgebraElement& a) const {
  return std::all_of(a.begin(), a.end(), [](const Fe& x) { return x.is_zero(); });
}

AlgebraElement HopfAlgebra::mul(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement r = zero();
  for (int i = 0; i < data_.dim; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < data_.dim; ++j) {
      if (b[j].is_zero()) continue;
      Fe c = a[i] * b[j];
      for (const auto& [k, v] : data_.mult[i][j]) r[k] += c * v;
    }
  }
  return r;
}

Fe HopfAlgebra::counit(const AlgebraElement& a) const {
  Fe r = Fe::zero(data_.field);
  for (int i = 0; i < data_.dim; ++i)
    if (!a[i].is_zero()) r += a[i] * data_.counit[i];
  return r;
}

Tensor HopfAlgebra::comult(const AlgebraElement& a) const {
  Tensor t(data_.field, data_.dim, 2);
  for (int b = 0; b < data_.dim; ++b) {
    if (a[b].is_zero()) continue;
    for (const auto& [i, j, c] : data_.comult[b]) t.add({i, j}, a[b] * c);
  }
  return t;
}

AlgebraElement HopfAlgebra::antipode(const AlgebraElement& a) const {
  return data_.antipode.apply(a);
}

AlgebraElement HopfAlgebra::antipode_inv(const AlgebraElement& a) const {
  return antipode_inv_.apply(a);
}

const Matrix& HopfAlgebra::antipode_power(long k) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = antipode_powers_.find(k);
  if (it != antipode_powers_.end()) return it->second;
  Matrix m = Matrix::identity(data_.dim, data_.field);
  const Matrix& step = k >= 0 ? data_.antipode : antipode_inv_;
  for (long i = 0; i < std::abs(k); ++i) m = step * m;
  return antipode_powers_.emplace(k, std::move(m)).first->second;
}

SparseRow HopfAlgebra::antipode_power_basis(long k, int basis_index) const {
  const Matrix& m = antipode_power(k);
  SparseRow r;
  for (int i = 0; i < data_.dim; ++i)
    if (!m.at(i, basis_index).is_zero()) r.emplace_back(i, m.at(i, basis_index));
  return r;
}

Tensor HopfAlgebra::sweedler_power(const AlgebraElement& a, int n) const {
  if (n < 1) throw DimensionMismatch("sweedler power arity must be >= 1");
  Tensor t = elem_to_tensor(a);
  for (int step = 1; step < n; ++step) {
    Tensor next(data_.field, data_.dim, t.arity() + 1);
    for (const auto& [key, c] : t.terms()) {
      int last = key.back();
      for (const auto& [i, j, v] : data_.comult[last]) {
        Tensor::Key k(key.begin(), key.end() - 1);
        k.push_back(i);
        k.push_back(j);
        next.add(k, c * v);
      }
    }
    t = std::move(next);
  }
  return t;
}

Tensor HopfAlgebra::tensor_mul(const Tensor& a, const Tensor& b) const {
  if (a.arity() != b.arity()) throw DimensionMismatch("tensor arity mismatch");
  const int arity = a.arity();
  Tensor out(data_.field, data_.dim, arity);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // expand the product slot by slot
      std::vector<std::pair<Tensor::Key, Fe>> partial{{{}, ca * cb}};
      for (int s = 0; s < arity; ++s) {
        std::vector<std::pair<Tensor::Key, Fe>> next;
        const SparseRow& prod = data_.mult[ka[s]][kb[s]];
        for (const auto& [key, coeff] : partial) {
          for (const auto& [idx, v] : prod) {
            Tensor::Key k = key;
            k.push_back(idx);
            next.emplace_back(std::move(k), coeff * v);
          }
        }
        partial = std::move(next);
        if (partial.empty()) break;
      }
      for (auto& [key, coeff] : partial) out.add(key, coeff);
    }
  }
  return out;
}

Tensor HopfAlgebra::tensor_unit(int arity) const {
  Tensor one = elem_to_tensor(data_.unit);
  Tensor out(data_.field, data_.dim, arity);
  std::vector<std::pair<Tensor::Key, Fe>> partial{{{}, Fe::one(data_.field)}};
  for (int s = 0; s < arity; ++s) {
    std::vector<std::pair<Tensor::Key, Fe>> next;
    for (const auto& [key, coeff] : partial)
      for (const auto& [k1, c1] : one.terms()) {
        Tensor::Key k = key;
        k.push_back(k1[0]);
        next.emplace_back(std::move(k), coeff * c1);
      }
    partial = std::move(next);
  }
  for (auto& [key, coeff] : partial) out.add(key, coeff);
  return out;
}

Tensor HopfAlgebra::tensor_flip(const Tensor& t) const {
  if (t.arity() != 2) throw DimensionMismatch("flip needs arity 2");
  Tensor out(data_.field, data_.dim, 2);
  for (const auto& [k, c] : t.terms()) out.add({k[1], k[0]}, c);
  return out;
}

Tensor HopfAlgebra::apply_antipode_slot(const Tensor& t, int slot, long power) const {
  Tensor out(data_.field, data_.dim, t.arity());
  for (const auto& [k, c] : t.terms()) {
    SparseRow img = antipode_power_basis(power, k[slot]);
    for (const auto& [idx, v] : img) {
      Tensor::Key key = k;
      key[slot] = idx;
      out.add(key, c * v);
    }
  }
  return out;
}

Tensor HopfAlgebra::elem_to_tensor(const AlgebraElement& a) const {
  Tensor t(data_.field, data_.dim, 1);
  for (int i = 0; i < data_.dim; ++i)
    if (!a[i].is_zero()) t.add({i}, a[i]);
  return t;
}

Matrix HopfAlgebra::left_mult_matrix(const AlgebraElement& a) const {
  Matrix m(data_.dim, data_.dim, data_.field);
  for (int i = 0; i < data_.dim; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < data_.dim; ++j)
      for (const auto& [k, v] : data_.mult[i][j]) m.at(k, j) += a[i] * v;
  }
  return m;
}

Matrix HopfAlgebra::right_mult_matrix(const AlgebraElement& a) const {
  Matrix m(data_.dim, data_.dim, data_.field);
  for (int j = 0; j < data_.dim; ++j) {
    if (a[j].is_zero()) continue;
    for (int i = 0; i < data_.dim; ++i)
      for (const auto& [k, v] : data_.mult[i][j]) m.at(k, i) += a[j] * v;
  }
  return m;
}

Fe HopfAlgebra::eval_form(const LinearForm& f, const AlgebraElement& a) const {
  Fe r = Fe::zero(data_.field);
  for (int i = 0; i < data_.dim; ++i)
    if (!f[i].is_zero() && !a[i].is_zero()) r += f[i] * a[i];
  return r;
}

AxiomReport HopfAlgebra::verify(const HopfData& d) {
  check_shapes(d);
  const FieldPtr& F = d.field;
  const int n = d.dim;
  AxiomReport report;
  HopfAlgebra H(d);  // uncached shell; only the structure maps are used

  auto record = [&](const std::string& name, bool pass) {
    report.checks.push_back({name, pass});
  };

  // associativity and unitality
  bool assoc = true;
  for (int i = 0; i < n && assoc; ++i)
    for (int j = 0; j < n && assoc; ++j) {
      AlgebraElement eij = H.mul(H.basis_element(i), H.basis_element(j));
      for (int k = 0; k < n && assoc; ++k) {
        AlgebraElement left = H.mul(eij, H.basis_element(k));
        AlgebraElement right =
            H.mul(H.basis_element(i), H.mul(H.basis_element(j), H.basis_element(k)));
        if (left != right) assoc = false;
      }
    }
  record("associativity", assoc);

  bool unital = true;
  for (int i = 0; i < n; ++i) {
    AlgebraElement e = H.basis_element(i);
    if (H.mul(d.unit, e) != e || H.mul(e, d.unit) != e) unital = false;
  }
  record("unitality", unital);

  // coassociativity: (Delta x id) Delta = (id x Delta) Delta on the basis
  bool coassoc = true;
  for (int b = 0; b < n && coassoc; ++b) {
    Tensor left(F, n, 3), right(F, n, 3);
    for (const auto& [i, j, c] : d.comult[b]) {
      for (const auto& [p, q, v] : d.comult[i]) left.add({p, q, j}, c * v);
      for (const auto& [p, q, v] : d.comult[j]) right.add({i, p, q}, c * v);
    }
    if (left != right) coassoc = false;
  }
  record("coassociativity", coassoc);

  bool counital = true;
  for (int b = 0; b < n && counital; ++b) {
    AlgebraElement left(n, Fe::zero(F)), right(n, Fe::zero(F));
    for (const auto& [i, j, c] : d.comult[b]) {
      left[j] += c * d.counit[i];   // (eps x id) Delta
      right[i] += c * d.counit[j];  // (id x eps) Delta
    }
    if (left != H.basis_element(b) || right != H.basis_element(b)) counital = false;
  }
  record("counitality", counital);

  // bialgebra compatibility
  bool compat = true;
  for (int i = 0; i < n && compat; ++i)
    for (int j = 0; j < n && compat; ++j) {
      Tensor lhs = H.comult(H.mul(H.basis_element(i), H.basis_element(j)));
      Tensor rhs = H.tensor_mul(H.comult(H.basis_element(i)), H.comult(H.basis_element(j)));
      if (lhs != rhs) compat = false;
      Fe eps_prod = H.counit(H.mul(H.basis_element(i), H.basis_element(j)));
      if (eps_prod != d.counit[i] * d.counit[j]) compat = false;
    }
  if (H.comult(d.unit) != H.tensor_unit(2)) compat = false;
  if (!H.counit(d.unit).is_one()) compat = false;
  record("bialgebra compatibility", compat);

  // antipode: m(S x id)Delta = eta eps = m(id x S)Delta
  bool antipode_ok = true;
  for (int b = 0; b < n; ++b) {
    AlgebraElement left = H.zero(), right = H.zero();
    for (const auto& [i, j, c] : d.comult[b]) {
      AlgebraElement si = d.antipode.apply(H.basis_element(i));
      AlgebraElement sj = d.antipode.apply(H.basis_element(j));
      left = H.add(left, H.scalar_mul(c, H.mul(si, H.basis_element(j))));
      right = H.add(right, H.scalar_mul(c, H.mul(H.basis_element(i), sj)));
    }
    AlgebraElement target = H.scalar_mul(d.counit[b], d.unit);
    if (left != target || right != target) antipode_ok = false;
  }
  record("antipode axiom", antipode_ok);

  return report;
}

HopfPtr HopfAlgebra::make(HopfData data) {
  AxiomReport report = verify(data);
  if (!report.ok())
    throw AxiomFailed("Hopf axiom check failed: " + report.first_failure());
  auto H = std::shared_ptr<HopfAlgebra>(new HopfAlgebra(std::move(data)));
  H->compute_caches();
  return H;
}

void HopfAlgebra::compute_caches() {
  const int n = data_.dim;
  const FieldPtr& F = data_.field;

  antipode_inv_ = invert(data_.antipode);

  // Lambda: kernel of the stacked operators (left mult by e_b) - eps(e_b) id.
  {
    std::vector<SparseRow> rows;
    for (int b = 0; b < n; ++b) {
      // row (b, r): sum_j [coeff of e_r in e_b e_j] z_j - eps_b z_r = 0
      std::vector<std::map<int, Fe>> cols(n);
      for (int j = 0; j < n; ++j)
        for (const auto& [r, v] : data_.mult[b][j]) {
          auto [it, inserted] = cols[r].emplace(j, v);
          if (!inserted) it->second += v;
        }
      for (int r = 0; r < n; ++r) {
        auto [it, inserted] = cols[r].emplace(r, -data_.counit[b]);
        if (!inserted) it->second -= data_.counit[b];
      }
      for (int r = 0; r < n; ++r) {
        SparseRow row;
        for (const auto& [j, v] : cols[r])
          if (!v.is_zero()) row.emplace_back(j, v);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
    auto kernel = sparse_kernel(std::move(rows), n, F);
    if (kernel.size() != 1)
      throw KernelNotOneDimensional("left integral space has dimension " +
                                    std::to_string(kernel.size()));
    Lambda_ = kernel[0];
  }

  // lambda: right integral for H*: lambda(x_(1)) x_(2) = lambda(x) 1.
  {
    std::vector<SparseRow> rows;
    for (int b = 0; b < n; ++b) {
      std::vector<std::map<int, Fe>> cols(n);  // per output coordinate r
      for (const auto& [i, j, c] : data_.comult[b]) {
        auto [it, inserted] = cols[j].emplace(i, c);
        if (!inserted) it->second += c;
      }
      for (int r = 0; r < n; ++r) {
        if (!data_.unit[r].is_zero()) {
          auto [it, inserted] = cols[r].emplace(b, -data_.unit[r]);
          if (!inserted) it->second -= data_.unit[r];
        }
      }
      for (int r = 0; r < n; ++r) {
        SparseRow row;
        for (const auto& [i, v] : cols[r])
          if (!v.is_zero()) row.emplace_back(i, v);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
    auto kernel = sparse_kernel(std::move(rows), n, F);
    if (kernel.size() != 1)
      throw KernelNotOneDimensional("right integral space of H* has dimension " +
                                    std::to_string(kernel.size()));
    lambda_ = kernel[0];
  }

  // normalize lambda(Lambda) = 1, then require lambda(S(Lambda)) = 1 as well;
  // a single scaling cannot fix the latter, so failure is reported, not hidden.
  Fe pairing = eval_form(lambda_, Lambda_);
  if (pairing.is_zero())
    throw NormalizationFailure("lambda(Lambda) = 0; integral pairing degenerate");
  Fe inv = pairing.inverse();
  for (auto& c : lambda_) c = c * inv;
  Fe s_pairing = eval_form(lambda_, antipode(Lambda_));
  if (!s_pairing.is_one())
    throw NormalizationFailure("lambda(S(Lambda)) = " + s_pairing.str() + " != 1");

  // distinguished grouplike g of H: x_(1) lambda(x_(2)) = lambda(x) g.
  {
    int witness = -1;
    for (int b = 0; b < n; ++b)
      if (!lambda_[b].is_zero()) {
        witness = b;
        break;
      }
    if (witness < 0) throw KernelNotOneDimensional("lambda vanished entirely");
    auto lhs_of = [&](int b) {
      AlgebraElement v = zero();
      for (const auto& [i, j, c] : data_.comult[b]) v[i] += c * lambda_[j];
      return v;
    };
    g_ = scalar_mul(lambda_[witness].inverse(), lhs_of(witness));
    for (int b = 0; b < n; ++b)
      if (lhs_of(b) != scalar_mul(lambda_[b], g_))
        throw NotGrouplike("x_(1) lambda(x_(2)) = lambda(x) g fails on basis " +
                           data_.basis_names[b]);
    if (!is_grouplike(g_)) throw NotGrouplike("distinguished element g is not grouplike");
  }

  // distinguished grouplike nu of H*: Lambda x = nu(x) Lambda.
  {
    int k = -1;
    for (int i = 0; i < n; ++i)
      if (!Lambda_[i].is_zero()) {
        k = i;
        break;
      }
    nu_.assign(n, Fe::zero(F));
    for (int b = 0; b < n; ++b) {
      AlgebraElement prod = mul(Lambda_, basis_element(b));
      nu_[b] = prod[k] / Lambda_[k];
      if (prod != scalar_mul(nu_[b], Lambda_))
        throw NotGrouplike("Lambda x = nu(x) Lambda fails on basis " + data_.basis_names[b]);
    }
    // nu must be an algebra map (grouplike in H*)
    if (!eval_form(nu_, data_.unit).is_one()) throw NotGrouplike("nu(1) != 1");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Fe lhs = eval_form(nu_, mul(basis_element(i), basis_element(j)));
        if (lhs != nu_[i] * nu_[j]) throw NotGrouplike("nu is not multiplicative");
      }
  }

  unimodular_ = (nu_ == data_.counit);

  nu_action_ = Matrix(n, n, F);
  for (int b = 0; b < n; ++b)
    for (const auto& [i, j, c] : data_.comult[b]) nu_action_.at(j, b) += c * nu_[i];
}

AlgebraElement HopfAlgebra::radford_expand(const AlgebraElement& a) const {
  AlgebraElement out = zero();
  for (const auto& [key, c] : comult(Lambda_).terms()) {
    Fe coeff = lambda_of(mul(a, basis_element(key[0]))) * c;
    if (coeff.is_zero()) continue;
    out = add(out, scalar_mul(coeff, antipode(basis_element(key[1]))));
  }
  if (out != a) throw IdentityViolated("a != lambda(a Lambda_(1)) S(Lambda_(2))");
  return out;
}

AlgebraElement HopfAlgebra::form_to_element(const LinearForm& f) const {
  AlgebraElement out = zero();
  for (const auto& [key, c] : comult(Lambda_).terms()) {
    Fe coeff = f[key[0]] * c;
    if (coeff.is_zero()) continue;
    out = add(out, scalar_mul(coeff, antipode(basis_element(key[1]))));
  }
  return out;
}

LinearForm HopfAlgebra::element_to_form(const AlgebraElement& a) const {
  LinearForm f(data_.dim, Fe::zero(data_.field));
  for (int b = 0; b < data_.dim; ++b) f[b] = lambda_of(mul(a, basis_element(b)));
  return f;
}

bool HopfAlgebra::is_grouplike(const AlgebraElement& a) const {
  if (!counit(a).is_one()) return false;
  Tensor expected(data_.field, data_.dim, 2);
  for (int i = 0; i < data_.dim; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < data_.dim; ++j)
      if (!a[j].is_zero()) expected.add({i, j}, a[i] * a[j]);
  }
  return comult(a) == expected;
}

Representation regular_representation(const HopfAlgebra& H) {
  Representation rho;
  rho.dim = H.dim();
  for (int b = 0; b < H.dim(); ++b) rho.action.push_back(H.left_mult_matrix(H.basis_element(b)));
  return rho;
}

Representation trivial_representation(const HopfAlgebra& H) {
  Representation rho;
  rho.dim = 1;
  for (int b = 0; b < H.dim(); ++b) {
    Matrix m(1, 1, H.field());
    m.at(0, 0) = H.data().counit[b];
    rho.action.push_back(std::move(m));
  }
  return rho;
}

Representation dual_representation(const HopfAlgebra& H, const Representation& rho) {
  Representation out;
  out.dim = rho.dim;
  for (int b = 0; b < H.dim(); ++b)
    out.action.push_back(representation_of(H, rho, H.antipode(H.basis_element(b))).transpose());
  return out;
}

Representation tensor_representation(const HopfAlgebra& H, const Representation& a,
                                     const Representation& b) {
  Representation out;
  out.dim = a.dim * b.dim;
  for (int g = 0; g < H.dim(); ++g) {
    Matrix m(out.dim, out.dim, H.field());
    for (const auto& [i, j, c] : H.data().comult[g]) {
      const Matrix& ma = a.action[i];
      const Matrix& mb = b.action[j];
      for (int r1 = 0; r1 < a.dim; ++r1)
        for (int c1 = 0; c1 < a.dim; ++c1) {
          if (ma.at(r1, c1).is_zero()) continue;
          for (int r2 = 0; r2 < b.dim; ++r2)
            for (int c2 = 0; c2 < b.dim; ++c2) {
              if (mb.at(r2, c2).is_zero()) continue;
              m.at(r1 * b.dim + r2, c1 * b.dim + c2) += c * ma.at(r1, c1) * mb.at(r2, c2);
            }
        }
    }
    out.action.push_back(std::move(m));
  }
  return out;
}

bool is_representation(const HopfAlgebra& H, const Representation& rho) {
  if (static_cast<int>(rho.action.size()) != H.dim()) return false;
  if (representation_of(H, rho, H.unit()) != Matrix::identity(rho.dim, H.field())) return false;
  for (int i = 0; i < H.dim(); ++i)
    for (int j = 0; j < H.dim(); ++j) {
      Matrix lhs = rho.action[i] * rho.action[j];
      Matrix rhs =
          representation_of(H, rho, H.mul(H.basis_element(i), H.basis_element(j)));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

Matrix representation_of(const HopfAlgebra& H, const Representation& rho,
                         const AlgebraElement& a) {
  Matrix m(rho.dim, rho.dim, H.field());
  for (int b = 0; b < H.dim(); ++b) {
    if (a[b].is_zero()) continue;
    m = m + rho.action[b].scaled(a[b]);
  }
  return m;
}

}  // namespace kirbylab
