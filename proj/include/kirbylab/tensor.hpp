#pragma once

#include <map>
#include <vector>

#include "kirbylab/field.hpp"

namespace kirbylab {

// Sparse element of H^{otimes arity} over a fixed basis of H: a map from
// basis-index tuples to nonzero coefficients. Deterministic iteration order.
class Tensor {
public:
  using Key = std::vector<int>;

  Tensor() = default;
  Tensor(FieldPtr f, int dim, int arity) : field_(std::move(f)), dim_(dim), arity_(arity) {}

  const FieldPtr& field() const { return field_; }
  int dim() const { return dim_; }
  int arity() const { return arity_; }
  const std::map<Key, Fe>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Key& k, const Fe& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Tensor operator+(const Tensor& o) const {
    Tensor r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, c);
    return r;
  }

  Tensor operator-(const Tensor& o) const {
    Tensor r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, -c);
    return r;
  }

  Tensor scaled(const Fe& c) const {
    Tensor r(field_, dim_, arity_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
  }

  bool operator==(const Tensor& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }
  bool operator!=(const Tensor& o) const { return !(*this == o); }

  // Flatten to a dense coordinate vector of length dim^arity (row-major).
  std::vector<Fe> densify() const {
    long size = 1;
    for (int i = 0; i < arity_; ++i) size *= dim_;
    std::vector<Fe> v(size, Fe::zero(field_));
    for (const auto& [k, c] : terms_) {
      long idx = 0;
      for (int x : k) idx = idx * dim_ + x;
      v[idx] = c;
    }
    return v;
  }

private:
  FieldPtr field_;
  int dim_ = 0;
  int arity_ = 0;
  std::map<Key, Fe> terms_;
};

}  // namespace kirbylab
