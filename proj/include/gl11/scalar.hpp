#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gl11 {

using Rational = mpq_class;

/// Formal indeterminates available to coefficient expressions.
///
/// `q`, `r`, `p` are the deformation parameters, `K` stands for q^(A+D) and
/// `Kr` for r^(A+D) on the enveloping side. The numbered copies (`K1`, `K2`,
/// ...) are the same central elements placed in a given tensor slot. `tau`,
/// `rho` and `eps` are the bookkeeping symbols of the classical-limit series.
enum class Var : std::uint8_t {
  q,
  r,
  p,
  K,
  tau,
  rho,
  eps,
  Kr,
  K1,
  K2,
  K3,
  Kr1,
  Kr2,
  Kr3,
  tau1,
  tau2,
};

inline constexpr std::size_t kVarCount = 16;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

class ScalarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised on division by zero and on substitutions or evaluations that hit a
/// vanishing denominator.
class PoleError : public ScalarError {
 public:
  using ScalarError::ScalarError;
};

class ParseError : public ScalarError {
 public:
  using ScalarError::ScalarError;
};

struct Monomial {
  std::array<std::int16_t, kVarCount> exp{};
  std::int16_t deg = 0;

  static Monomial of(Var v, int e = 1) {
    Monomial m;
    m.exp[static_cast<std::size_t>(v)] = static_cast<std::int16_t>(e);
    m.deg = static_cast<std::int16_t>(e);
    return m;
  }
  int operator[](Var v) const { return exp[static_cast<std::size_t>(v)]; }
  bool is_one() const { return deg == 0; }
  std::uint32_t var_mask() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exp == b.exp;
  }
};

/// Graded lexicographic comparison: total degree first, then exponents
/// compared in variable order q, r, p, K, tau, ... (larger exponent wins).
int compare(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial quotient(const Monomial& a, const Monomial& b);  // a / b

using Assignment = std::map<Var, Rational>;

/// Sparse multivariate polynomial with rational coefficients. Terms are kept
/// sorted by decreasing monomial order with no zero coefficients.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static Poly var(Var v, int e = 1);
  static Poly term(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_value() const;  // requires is_constant()
  const Term& leading() const { return terms_.front(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  std::uint32_t var_mask() const;
  int degree_in(Var v) const;
  int total_degree() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  Poly mul_monomial(const Monomial& m) const;
  Poly pow(unsigned e) const;
  /// Divides every coefficient so that the leading coefficient is 1.
  Poly monic() const;
  Rational eval(const Assignment& values) const;
  /// Partial evaluation: variables absent from `values` stay symbolic.
  Poly partial_eval(const Assignment& values) const;

  std::string to_string() const;

  static Poly from_sorted_terms(std::vector<Term> terms);
  static Poly from_unsorted_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

/// Coefficients of `p` as a polynomial in `v` (index = power of v).
std::vector<Poly> coefficients_in(const Poly& p, Var v);

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);
/// Monic greatest common divisor over Q. gcd(0, 0) is 0.
Poly gcd(const Poly& a, const Poly& b);

/// Element of Q(q, r, p, K, ...): reduced fraction with monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT
  RatFunc(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  std::uint32_t var_mask() const { return num_.var_mask() | den_.var_mask(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(RatFunc a);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  RatFunc pow(int e) const;
  RatFunc inverse() const;

  Rational eval(const Assignment& values) const;
  RatFunc partial_eval(const Assignment& values) const;
  RatFunc substitute(const std::map<Var, RatFunc>& bindings) const;

  std::string to_string() const;

 private:
  struct Raw {};
  RatFunc(Raw, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  Poly num_;
  Poly den_;
};

/// The coefficient ring: x + y*sigma with x, y rational functions and
/// sigma^2 = 1 - q^-2. Most values have y = 0.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long c) : x_(c) {}  // NOLINT
  Scalar(int c) : x_(static_cast<long>(c)) {}  // NOLINT
  Scalar(const Rational& c) : x_(c) {}  // NOLINT
  Scalar(const RatFunc& x) : x_(x) {}  // NOLINT
  Scalar(RatFunc x, RatFunc y) : x_(std::move(x)), y_(std::move(y)) {}

  static Scalar var(Var v) { return Scalar(RatFunc(Poly::var(v))); }
  static Scalar sigma() { return Scalar(RatFunc(), RatFunc(1)); }
  static Scalar rational(long num, long den) { return Scalar(Rational(num, den)); }
  /// sigma^2 as an element of Q(q).
  static const RatFunc& sigma_squared();

  /// Parses the canonical text grammar (see README); identifiers are the
  /// names of `Var` plus `sigma`.
  static Scalar parse(std::string_view text);
  /// Parses with a custom identifier table (e.g. numeric parameters).
  static Scalar parse(std::string_view text,
                      const std::map<std::string, Scalar, std::less<>>& symbols);
  std::string to_string() const;

  const RatFunc& rational_part() const { return x_; }
  const RatFunc& sigma_part() const { return y_; }
  bool has_sigma() const { return !y_.is_zero(); }
  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  bool is_one() const { return y_.is_zero() && x_.is_one(); }
  std::uint32_t var_mask() const { return x_.var_mask() | y_.var_mask(); }
  bool depends_on(Var v) const {
    return (var_mask() >> static_cast<unsigned>(v)) & 1U;
  }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(Scalar a);
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }
  Scalar pow(int e) const;
  Scalar inverse() const;

  /// Replaces bound indeterminates by the given values. Binding `q` in a
  /// sigma-bearing value is rejected since sigma is defined through q.
  Scalar substitute(const std::map<Var, Scalar>& bindings) const;
  /// Specializes the given indeterminates to rationals; the rest stay formal.
  Scalar partial_eval(const Assignment& values) const;

 private:
  RatFunc x_;
  RatFunc y_;
};

/// Exact value of a sigma-free scalar at a rational point. Throws PoleError
/// naming the vanishing denominator, and ScalarError if a sigma part remains.
Rational eval_rational(const Scalar& x, const Assignment& values);

/// Both components (x, y) of x + y*sigma at a rational point.
std::pair<Rational, Rational> eval_components(const Scalar& x,
                                              const Assignment& values);

/// True iff both components of `x` vanish at the point; since 1 and sigma are
/// independent this is the numeric form of the zero test.
bool vanishes_at(const Scalar& x, const Assignment& values);

}  // namespace gl11
