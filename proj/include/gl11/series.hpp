#pragma once

#include "gl11/params.hpp"
#include "gl11/scalar.hpp"

namespace gl11 {

/// Truncated expansion c0 + c1*eps around eps = 0.
///
/// `order` is 1 when c1 is known and 0 when a division by an eps-divisible
/// value consumed the first-order information. `pole` marks a surviving
/// eps^-1 term, in which case the coefficients are meaningless.
struct EpsSeries {
  Scalar c0;
  Scalar c1;
  int order = 1;
  bool pole = false;

  static EpsSeries constant(const Scalar& c) { return EpsSeries{c, Scalar(0)}; }

  EpsSeries& operator+=(const EpsSeries& o);
  EpsSeries& operator-=(const EpsSeries& o);
  EpsSeries& operator*=(const EpsSeries& o);
  EpsSeries& operator/=(const EpsSeries& o);
  friend EpsSeries operator+(EpsSeries a, const EpsSeries& b) { return a += b; }
  friend EpsSeries operator-(EpsSeries a, const EpsSeries& b) { return a -= b; }
  friend EpsSeries operator*(EpsSeries a, const EpsSeries& b) { return a *= b; }
  friend EpsSeries operator/(EpsSeries a, const EpsSeries& b) { return a /= b; }
};

/// Bindings of the limit path: q = 1+eps, r = 1+eps*rho (r22) or eps*rho
/// (r12), K = 1+eps*tau and the slot copies K1, K2 = 1+eps*tau1, 1+eps*tau2,
/// Kr = r^(A+D) = 1+eps*rho*tau (r22 only).
std::map<Var, Scalar> classical_path(CaseId c);

/// Expands x along the limit path of `c`. The expansion is exact: the whole
/// rational function is substituted first and then Laurent-expanded, so no
/// truncation error enters c0 or c1. A negative eps-order sets `pole`.
EpsSeries classical_series(const Scalar& x, CaseId c);

}  // namespace gl11
