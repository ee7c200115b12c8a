#include "gl11/series.hpp"

namespace gl11 {

namespace {

// Coefficient of eps^i as a rational function of the other indeterminates.
Scalar coeff(const std::vector<Poly>& u, std::size_t i) {
  return i < u.size() ? Scalar(RatFunc(u[i])) : Scalar(0);
}

std::size_t order_of(const std::vector<Poly>& u) {
  std::size_t i = 0;
  while (i < u.size() && u[i].is_zero()) ++i;
  return i;
}

}  // namespace

EpsSeries& EpsSeries::operator+=(const EpsSeries& o) {
  c0 += o.c0;
  c1 += o.c1;
  order = std::min(order, o.order);
  pole = pole || o.pole;
  return *this;
}

EpsSeries& EpsSeries::operator-=(const EpsSeries& o) {
  c0 -= o.c0;
  c1 -= o.c1;
  order = std::min(order, o.order);
  pole = pole || o.pole;
  return *this;
}

EpsSeries& EpsSeries::operator*=(const EpsSeries& o) {
  Scalar n1 = c0 * o.c1 + c1 * o.c0;
  c0 *= o.c0;
  c1 = std::move(n1);
  order = std::min(order, o.order);
  pole = pole || o.pole;
  return *this;
}

EpsSeries& EpsSeries::operator/=(const EpsSeries& o) {
  pole = pole || o.pole;
  if (!o.c0.is_zero()) {
    Scalar n1 = (c1 * o.c0 - c0 * o.c1) / (o.c0 * o.c0);
    c0 /= o.c0;
    c1 = std::move(n1);
    order = std::min(order, o.order);
    return *this;
  }
  if (o.c1.is_zero()) throw PoleError("division by a series vanishing to order 1");
  if (!c0.is_zero()) {
    pole = true;
    return *this;
  }
  // (c1 eps) / (d1 eps): only the constant term survives the truncation.
  c0 = c1 / o.c1;
  c1 = Scalar(0);
  order = 0;
  return *this;
}

std::map<Var, Scalar> classical_path(CaseId c) {
  Scalar eps = Scalar::var(Var::eps);
  Scalar rho = Scalar::var(Var::rho);
  std::map<Var, Scalar> b;
  b[Var::q] = Scalar(1) + eps;
  if (c == CaseId::r22) {
    b[Var::r] = Scalar(1) + eps * rho;
    b[Var::Kr] = Scalar(1) + eps * rho * Scalar::var(Var::tau);
    b[Var::Kr1] = Scalar(1) + eps * rho * Scalar::var(Var::tau1);
    b[Var::Kr2] = Scalar(1) + eps * rho * Scalar::var(Var::tau2);
  } else if (c == CaseId::r12) {
    b[Var::r] = eps * rho;
  }
  b[Var::K] = Scalar(1) + eps * Scalar::var(Var::tau);
  b[Var::K1] = Scalar(1) + eps * Scalar::var(Var::tau1);
  b[Var::K2] = Scalar(1) + eps * Scalar::var(Var::tau2);
  return b;
}

EpsSeries classical_series(const Scalar& x, CaseId c) {
  if (x.has_sigma()) throw ScalarError("sigma has no expansion along q = 1+eps");
  Scalar y = x.substitute(classical_path(c));
  std::vector<Poly> num = coefficients_in(y.rational_part().num(), Var::eps);
  std::vector<Poly> den = coefficients_in(y.rational_part().den(), Var::eps);
  EpsSeries out;
  if (num.empty()) return out;
  std::size_t on = order_of(num);
  std::size_t od = order_of(den);
  if (on < od) {
    out.pole = true;
    return out;
  }
  // Divide numerator and denominator by eps^od, then expand the quotient.
  Scalar d0 = coeff(den, od);
  Scalar d1 = coeff(den, od + 1);
  Scalar n0 = coeff(num, od);
  Scalar n1 = coeff(num, od + 1);
  out.c0 = n0 / d0;
  out.c1 = (n1 * d0 - n0 * d1) / (d0 * d0);
  return out;
}

}  // namespace gl11
