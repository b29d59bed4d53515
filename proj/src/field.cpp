#include "kirbylab/field.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace kirbylab {

namespace {

long euler_phi(long m) {
  long result = m, n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Exact division of integer polynomials, used to build Phi_m from x^m - 1.
std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> num,
                                         const std::vector<mpz_class>& den) {
  std::vector<mpz_class> quot(num.size() - den.size() + 1, mpz_class(0));
  for (long k = static_cast<long>(quot.size()) - 1; k >= 0; --k) {
    mpz_class c = num[k + den.size() - 1] / den.back();
    quot[k] = c;
    for (size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  return quot;
}

std::vector<mpz_class> cyclotomic_poly(long m) {
  // Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d, computed recursively.
  static std::map<long, std::vector<mpz_class>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  std::function<std::vector<mpz_class>(long)> build = [&](long n) -> std::vector<mpz_class> {
    auto hit = cache.find(n);
    if (hit != cache.end()) return hit->second;
    std::vector<mpz_class> num(n + 1, mpz_class(0));
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d)
      if (n % d == 0) num = poly_divide_exact(std::move(num), build(d));
    cache[n] = num;
    return num;
  };
  return build(m);
}

long mod_pow(long base, long exp, long p) {
  long r = 1 % p;
  base %= p;
  if (base < 0) base += p;
  while (exp > 0) {
    if (exp & 1) r = static_cast<long>((__int128)r * base % p);
    base = static_cast<long>((__int128)base * base % p);
    exp >>= 1;
  }
  return r;
}

long multiplicative_order(long a, long p) {
  long r = a % p, k = 1;
  while (r != 1) {
    r = static_cast<long>((__int128)r * a % p);
    ++k;
    if (k > p) return 0;
  }
  return k;
}

}  // namespace

FieldPtr Field::rationals() {
  static FieldPtr instance = [] {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::rationals;
    f->order_ = 1;
    f->degree_ = 1;
    return FieldPtr(f);
  }();
  return instance;
}

FieldPtr Field::cyclotomic(long order) {
  if (order < 1) throw NoSuchRoot("cyclotomic order must be positive");
  if (order <= 2) return rationals();  // Phi_1, Phi_2 are linear
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::cyclotomic;
  f->order_ = order;
  f->degree_ = static_cast<int>(euler_phi(order));
  auto phi = cyclotomic_poly(order);
  f->modulus_.assign(phi.begin(), phi.end() - 1);  // drop leading 1
  for (auto& c : f->modulus_) c.canonicalize();
  // x^(deg+k) mod Phi_m, built incrementally from x^deg = -modulus_.
  const int deg = f->degree_;
  std::vector<Rational> cur(deg);
  for (int i = 0; i < deg; ++i) cur[i] = -f->modulus_[i];
  f->reduction_.push_back(cur);
  for (int k = 1; k + 1 < deg; ++k) {
    std::vector<Rational> next(deg, Rational(0));
    for (int i = 0; i + 1 < deg; ++i) next[i + 1] = cur[i];
    Rational top = cur[deg - 1];
    if (top != 0)
      for (int i = 0; i < deg; ++i) next[i] -= top * f->modulus_[i];
    cur = next;
    f->reduction_.push_back(cur);
  }
  return f;
}

FieldPtr Field::prime(long p, long root_order) {
  if (!is_prime(p)) throw NoSuchRoot("modulus " + std::to_string(p) + " is not prime");
  if (root_order != 0 && (p - 1) % root_order != 0)
    throw NoSuchRoot("no subgroup of order " + std::to_string(root_order) + " in F_" +
                     std::to_string(p) + "^*");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::prime;
  f->order_ = root_order;
  f->char_ = p;
  f->degree_ = 1;
  return f;
}

bool Field::same(const Field& other) const {
  return kind_ == other.kind_ && order_ == other.order_ && char_ == other.char_;
}

std::string Field::describe() const {
  switch (kind_) {
    case FieldKind::rationals: return "Q";
    case FieldKind::cyclotomic: return "Q(zeta_" + std::to_string(order_) + ")";
    case FieldKind::prime:
      return "F_" + std::to_string(char_) +
             (order_ ? " with root order " + std::to_string(order_) : "");
  }
  return "?";
}

Fe Fe::zero(const FieldPtr& f) { return Fe(f, std::vector<Rational>(f->degree(), Rational(0))); }

Fe Fe::one(const FieldPtr& f) {
  std::vector<Rational> c(f->degree(), Rational(0));
  c[0] = 1;
  Fe e(f, std::move(c));
  e.canonicalize();
  return e;
}

Fe Fe::integer(const FieldPtr& f, long n) { return rational(f, Rational(n)); }

Fe Fe::rational(const FieldPtr& f, const Rational& q) {
  std::vector<Rational> c(f->degree(), Rational(0));
  c[0] = q;
  Fe e(f, std::move(c));
  e.canonicalize();
  return e;
}

Fe Fe::generator(const FieldPtr& f) {
  if (f->kind() != FieldKind::cyclotomic)
    throw DescriptorMismatch("generator only defined for cyclotomic fields");
  std::vector<Rational> c(f->degree(), Rational(0));
  c[1] = 1;
  return Fe(f, std::move(c));
}

Fe Fe::from_coords(const FieldPtr& f, std::vector<Rational> coords) {
  if (static_cast<int>(coords.size()) != f->degree())
    throw DimensionMismatch("coordinate length does not match field degree");
  Fe e(f, std::move(coords));
  e.canonicalize();
  return e;
}

void Fe::canonicalize() {
  if (field_->kind() == FieldKind::prime) {
    // Elements of F_p are stored as their integer representative in [0, p).
    Rational& q = c_[0];
    if (q.get_den() != 1) {
      mpz_class den_inv;
      if (mpz_invert(den_inv.get_mpz_t(), q.get_den().get_mpz_t(),
                     mpz_class(field_->characteristic()).get_mpz_t()) == 0)
        throw DivisionByZero("denominator not invertible modulo p");
      q = Rational(q.get_num() * den_inv);
    }
    mpz_class r;
    mpz_mod(r.get_mpz_t(), q.get_num().get_mpz_t(),
            mpz_class(field_->characteristic()).get_mpz_t());
    q = Rational(r);
  }
  for (auto& q : c_) q.canonicalize();
}

void Fe::check_same_field(const Fe& o) const {
  if (!field_ || !o.field_ || !field_->same(*o.field_))
    throw DescriptorMismatch("operands live in different fields");
}

bool Fe::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool Fe::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Fe Fe::operator-() const {
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  Fe e(field_, std::move(c));
  e.canonicalize();
  return e;
}

Fe Fe::operator+(const Fe& o) const {
  check_same_field(o);
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] + o.c_[i];
  Fe e(field_, std::move(c));
  e.canonicalize();
  return e;
}

Fe Fe::operator-(const Fe& o) const {
  check_same_field(o);
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] - o.c_[i];
  Fe e(field_, std::move(c));
  e.canonicalize();
  return e;
}

Fe Fe::operator*(const Fe& o) const {
  check_same_field(o);
  const int deg = field_->degree();
  if (deg == 1) {
    Fe e(field_, {c_[0] * o.c_[0]});
    e.canonicalize();
    return e;
  }
  std::vector<Rational> prod(2 * deg - 1, Rational(0));
  for (int i = 0; i < deg; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<Rational> c(prod.begin(), prod.begin() + deg);
  const auto& red = field_->reduction();
  for (int k = 0; k + deg < static_cast<int>(prod.size()) + 1 && k < deg - 1; ++k) {
    const Rational& top = prod[deg + k];
    if (top == 0) continue;
    for (int i = 0; i < deg; ++i) c[i] += top * red[k][i];
  }
  Fe e(field_, std::move(c));
  e.canonicalize();
  return e;
}

Fe Fe::operator/(const Fe& o) const { return *this * o.inverse(); }

bool Fe::operator==(const Fe& o) const {
  check_same_field(o);
  return c_ == o.c_;
}

Fe Fe::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  const int deg = field_->degree();
  if (field_->kind() == FieldKind::prime) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), c_[0].get_num().get_mpz_t(),
                   mpz_class(field_->characteristic()).get_mpz_t()) == 0)
      throw DivisionByZero("element not invertible modulo p");
    Fe e(field_, {Rational(inv)});
    e.canonicalize();
    return e;
  }
  if (deg == 1) {
    Fe e(field_, {1 / c_[0]});
    e.canonicalize();
    return e;
  }
  // Extended Euclid in Q[x] against Phi_m.
  std::vector<Rational> r0(field_->modulus());
  r0.push_back(Rational(1));
  std::vector<Rational> r1(c_);
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
  auto is_zero_poly = [](const std::vector<Rational>& p) { return p.empty(); };
  auto trim = [](std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  while (!is_zero_poly(r1) && r1.size() > 1) {
    // divide r0 by r1
    std::vector<Rational> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rational(0));
    std::vector<Rational> rem = r0;
    for (long k = static_cast<long>(rem.size()) - static_cast<long>(r1.size()); k >= 0; --k) {
      Rational coef = rem[k + r1.size() - 1] / r1.back();
      q[k] = coef;
      if (coef == 0) continue;
      for (size_t j = 0; j < r1.size(); ++j) rem[k + j] -= coef * r1[j];
    }
    trim(rem);
    // s_new = s0 - q * s1
    std::vector<Rational> s_new(std::max(s0.size(), q.size() + s1.size() - 1), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) s_new[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s_new[i + j] -= q[i] * s1[j];
    }
    trim(s_new);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s_new);
  }
  if (is_zero_poly(r1))
    throw DivisionByZero("element shares a factor with the modulus");
  // r1 is a nonzero constant: inverse = s1 / r1[0], reduced mod Phi_m.
  std::vector<Rational> c(deg, Rational(0));
  for (size_t i = 0; i < s1.size() && i < c.size(); ++i) c[i] = s1[i] / r1[0];
  // s1 may exceed deg-1 in degree in principle; fold the tail in.
  for (size_t i = deg; i < s1.size(); ++i) {
    if (s1[i] == 0) continue;
    const auto& red = field_->reduction()[i - deg];
    for (int j = 0; j < deg; ++j) c[j] += (s1[i] / r1[0]) * red[j];
  }
  Fe e(field_, std::move(c));
  e.canonicalize();
  return e;
}

Fe Fe::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Fe result = Fe::one(field_);
  Fe base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Fe::less(const Fe& o) const {
  for (size_t i = 0; i < c_.size(); ++i) {
    int cmp = ::cmp(c_[i], o.c_[i]);
    if (cmp != 0) return cmp < 0;
  }
  return false;
}

std::string Fe::str() const {
  std::ostringstream os;
  if (field_->degree() == 1) {
    os << c_[0];
    return os.str();
  }
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i];
  }
  os << "]";
  return os.str();
}

Fe primitive_root(long m, const FieldPtr& f) {
  if (m < 1) throw NoSuchRoot("root order must be positive");
  switch (f->kind()) {
    case FieldKind::rationals: {
      if (m == 1) return Fe::one(f);
      if (m == 2) return -Fe::one(f);
      throw NoSuchRoot("Q has no primitive " + std::to_string(m) + "-th root of unity");
    }
    case FieldKind::cyclotomic: {
      if (f->order() % m != 0)
        throw NoSuchRoot(std::to_string(m) + " does not divide the cyclotomic order");
      if (m == 1) return Fe::one(f);
      if (m == 2) return -Fe::one(f);
      Fe zeta = Fe::generator(f);
      Fe root = zeta.pow(f->order() / m);
      return root;
    }
    case FieldKind::prime: {
      const long p = f->characteristic();
      if ((p - 1) % m != 0)
        throw NoSuchRoot("no order-" + std::to_string(m) + " subgroup in F_" + std::to_string(p));
      if (m == 1) return Fe::one(f);
      for (long r = 2; r < p; ++r) {
        long candidate = mod_pow(r, (p - 1) / m, p);
        if (multiplicative_order(candidate, p) == m) return Fe::integer(f, candidate);
      }
      throw NoSuchRoot("exhausted residues without finding a root");
    }
  }
  throw NoSuchRoot("unreachable");
}

}  // namespace kirbylab
