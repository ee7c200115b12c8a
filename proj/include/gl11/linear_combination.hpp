#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <utility>

#include "gl11/scalar.hpp"

namespace gl11 {

/// Finite formal sum of basis keys with Scalar coefficients.
///
/// Zero coefficients are never stored, so two combinations are equal exactly
/// when their term maps are equal. Iteration order follows `Key`'s ordering,
/// which keeps printing and report output deterministic.
template <class Key>
class LinearCombination {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Scalar>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(Key key, Scalar coeff = Scalar(1)) {
    add(std::move(key), std::move(coeff));
  }

  static LinearCombination zero() { return {}; }

  void add(const Key& key, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, coeff);
      return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }

  void add(const LinearCombination& other, const Scalar& factor = Scalar(1)) {
    if (factor.is_zero()) return;
    bool unit = factor.is_one();
    for (const auto& [k, c] : other.terms_) add(k, unit ? c : c * factor);
  }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar() : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  LinearCombination& operator+=(const LinearCombination& o) {
    add(o);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    add(o, Scalar(-1));
    return *this;
  }
  LinearCombination& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a,
                                     const LinearCombination& b) {
    return a += b;
  }
  friend LinearCombination operator-(LinearCombination a,
                                     const LinearCombination& b) {
    return a -= b;
  }
  friend LinearCombination operator-(LinearCombination a) {
    return a *= Scalar(-1);
  }
  friend LinearCombination operator*(LinearCombination a, const Scalar& s) {
    return a *= s;
  }
  friend LinearCombination operator*(const Scalar& s, LinearCombination a) {
    return a *= s;
  }
  friend bool operator==(const LinearCombination& a,
                         const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

  /// Applies `f` to every coefficient, dropping terms that become zero.
  template <class F>
  LinearCombination map_coefficients(F&& f) const {
    LinearCombination out;
    for (const auto& [k, c] : terms_) out.add(k, f(c));
    return out;
  }

 private:
  map_type terms_;
};

}  // namespace gl11
