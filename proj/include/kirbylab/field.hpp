#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "kirbylab/errors.hpp"

namespace kirbylab {

using Rational = mpq_class;

enum class FieldKind { rationals, cyclotomic, prime };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Ground field context shared by all elements: the rationals, a cyclotomic
// extension Q(zeta_m) represented as Q[x]/Phi_m(x), or a prime field F_p with
// an optionally registered root-of-unity order m | p-1. Immutable.
class Field {
public:
  static FieldPtr rationals();
  static FieldPtr cyclotomic(long order);
  static FieldPtr prime(long p, long root_order = 0);

  FieldKind kind() const { return kind_; }
  long order() const { return order_; }            // m (cyclotomic / prime root order)
  long characteristic() const { return char_; }    // p for prime fields, 0 otherwise
  int degree() const { return degree_; }           // coordinate length

  bool same(const Field& other) const;
  std::string describe() const;

  // Phi_m as a monic integer polynomial, degree = degree(). Index k holds the
  // coefficient of x^k; the leading 1 is implicit.
  const std::vector<Rational>& modulus() const { return modulus_; }
  // reduction_[k] = x^(degree+k) mod Phi_m, for k = 0 .. degree-2.
  const std::vector<std::vector<Rational>>& reduction() const { return reduction_; }

private:
  Field() = default;

  FieldKind kind_ = FieldKind::rationals;
  long order_ = 1;
  long char_ = 0;
  int degree_ = 1;
  std::vector<Rational> modulus_;
  std::vector<std::vector<Rational>> reduction_;
};

// Exact field element: a coordinate vector over the fixed power basis of the
// field (length 1 unless cyclotomic). Always kept in canonical form.
class Fe {
public:
  Fe() = default;  // invalid sentinel; every real element carries its field
  static Fe zero(const FieldPtr& f);
  static Fe one(const FieldPtr& f);
  static Fe integer(const FieldPtr& f, long n);
  static Fe rational(const FieldPtr& f, const Rational& q);
  // Residue class of x in Q[x]/Phi_m. Requires a cyclotomic field.
  static Fe generator(const FieldPtr& f);
  static Fe from_coords(const FieldPtr& f, std::vector<Rational> coords);

  bool valid() const { return static_cast<bool>(field_); }
  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  Fe operator-() const;
  Fe operator+(const Fe& o) const;
  Fe operator-(const Fe& o) const;
  Fe operator*(const Fe& o) const;
  Fe operator/(const Fe& o) const;
  Fe& operator+=(const Fe& o) { return *this = *this + o; }
  Fe& operator-=(const Fe& o) { return *this = *this - o; }
  Fe& operator*=(const Fe& o) { return *this = *this * o; }

  bool operator==(const Fe& o) const;
  bool operator!=(const Fe& o) const { return !(*this == o); }

  Fe inverse() const;
  Fe pow(long e) const;

  // Total order used for deterministic serialization only.
  bool less(const Fe& o) const;

  std::string str() const;

private:
  Fe(FieldPtr f, std::vector<Rational> c) : field_(std::move(f)), c_(std::move(c)) {}
  void canonicalize();
  void check_same_field(const Fe& o) const;

  FieldPtr field_;
  std::vector<Rational> c_;
};

// Root of unity of exact multiplicative order m in the given field.
// For the rationals only m = 1, 2 exist; for Q(zeta_M) any m | M; for F_p any
// m | p-1. Throws NoSuchRoot otherwise.
Fe primitive_root(long m, const FieldPtr& f);

}  // namespace kirbylab
