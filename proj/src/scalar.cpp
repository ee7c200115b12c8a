#include <sstream>

#include "gl11/expression_parser.hpp"
#include "gl11/scalar.hpp"

namespace gl11 {

namespace {

bool is_unit(const Poly& p) {
  return p.is_constant() && !p.is_zero() && p.constant_value() == 1;
}

Poly divide_or_throw(const Poly& a, const Poly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw ScalarError("internal: inexact division by gcd");
  return *std::move(q);
}

// Numerator and denominator of p(bindings) over a common denominator.
std::pair<Poly, Poly> substitute_poly(const Poly& p,
                                      const std::map<Var, RatFunc>& bindings) {
  std::map<Var, int> top;
  for (const auto& [v, b] : bindings) {
    int d = p.degree_in(v);
    if (d > 0) top[v] = d;
  }
  if (top.empty()) return {p, Poly(1)};

  std::map<std::pair<Var, int>, Poly> num_pow;
  std::map<std::pair<Var, int>, Poly> den_pow;
  auto power = [](std::map<std::pair<Var, int>, Poly>& cache, Var v, int e,
                  const Poly& base) -> const Poly& {
    auto key = std::make_pair(v, e);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, base.pow(static_cast<unsigned>(e))).first;
    return it->second;
  };

  Poly num;
  for (const Poly::Term& t : p.terms()) {
    Monomial rest = t.mono;
    Poly piece = Poly::term(Monomial{}, t.coeff);
    for (const auto& [v, d] : top) {
      auto i = static_cast<std::size_t>(v);
      int e = rest.exp[i];
      rest.exp[i] = 0;
      rest.deg = static_cast<std::int16_t>(rest.deg - e);
      const RatFunc& b = bindings.at(v);
      if (e > 0) piece *= power(num_pow, v, e, b.num());
      if (d - e > 0 && !is_unit(b.den())) piece *= power(den_pow, v, d - e, b.den());
    }
    num += piece.mul_monomial(rest);
  }
  Poly den(1);
  for (const auto& [v, d] : top) {
    const RatFunc& b = bindings.at(v);
    if (!is_unit(b.den())) den *= power(den_pow, v, d, b.den());
  }
  return {num, den};
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) ||
      !mpz_perfect_square_p(x.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n;
  mpz_class d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  return Rational(n, d);
}

struct ScalarPolicy {
  using Value = Scalar;
  const std::map<std::string, Scalar, std::less<>>* symbols;

  Value number(const Rational& n) { return Scalar(n); }
  Value divide(const Value& a, const Value& b) { return a / b; }
  Value power(const Value& a, int e) { return a.pow(e); }
  Value identifier(const std::string& name, ExprParser<ScalarPolicy>& p) {
    if (symbols != nullptr) {
      auto it = symbols->find(name);
      if (it != symbols->end()) return it->second;
    } else {
      if (name == "sigma") return Scalar::sigma();
      if (auto v = var_from_name(name)) return Scalar::var(*v);
    }
    p.fail("unknown identifier '" + name + "'");
  }
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::Number;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        t.text += text[i++];
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Kind::Ident;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        t.text += text[i++];
    } else if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
      t.kind = Token::Kind::Symbol;
      t.text = std::string(1, c);
      ++i;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) +
                       "' at offset " + std::to_string(i) + " in \"" +
                       std::string(text) + "\"");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = text.size();
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw PoleError("division by zero");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_or_throw(num_, g);
      den_ = divide_or_throw(den_, g);
    }
  }
  Rational lc = den_.leading().coeff;
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

bool RatFunc::is_one() const { return is_unit(num_) && is_unit(den_); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) canonicalize();
    else if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  Poly d1 = divide_or_throw(den_, g);
  Poly d2 = divide_or_throw(o.den_, g);
  Poly num = num_ * d2 + o.num_ * d1;
  Poly den = den_ * d2;
  if (num.is_zero()) return *this = RatFunc();
  if (!g.is_constant()) {
    Poly h = gcd(num, g);
    if (!h.is_constant()) {
      num = divide_or_throw(num, h);
      den = divide_or_throw(den, h);
    }
  }
  num_ = std::move(num);
  den_ = std::move(den);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc operator-(RatFunc a) {
  a.num_ = -a.num_;
  return a;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    return *this;
  }
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n1 = g1.is_constant() ? num_ : divide_or_throw(num_, g1);
  Poly d2 = g1.is_constant() ? o.den_ : divide_or_throw(o.den_, g1);
  Poly n2 = g2.is_constant() ? o.num_ : divide_or_throw(o.num_, g2);
  Poly d1 = g2.is_constant() ? den_ : divide_or_throw(den_, g2);
  num_ = n1 * n2;
  den_ = d1 * d2;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw PoleError("division by zero");
  Rational inv = Rational(1) / num_.leading().coeff;
  return RatFunc(Raw{}, den_ * inv, num_ * inv);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return RatFunc(1);
  return RatFunc(Raw{}, num_.pow(static_cast<unsigned>(e)),
                 den_.pow(static_cast<unsigned>(e)));
}

Rational RatFunc::eval(const Assignment& values) const {
  Rational d = den_.eval(values);
  if (d == 0)
    throw PoleError("pole: denominator " + den_.to_string() + " vanishes");
  return num_.eval(values) / d;
}

RatFunc RatFunc::partial_eval(const Assignment& values) const {
  Poly d = den_.partial_eval(values);
  if (d.is_zero())
    throw PoleError("pole: denominator " + den_.to_string() + " vanishes");
  return RatFunc(num_.partial_eval(values), d);
}

RatFunc RatFunc::substitute(const std::map<Var, RatFunc>& bindings) const {
  auto [nn, nd] = substitute_poly(num_, bindings);
  auto [dn, dd] = substitute_poly(den_, bindings);
  if (dn.is_zero())
    throw PoleError("pole: denominator " + den_.to_string() +
                    " vanishes under substitution");
  return RatFunc(nn, nd) / RatFunc(dn, dd);
}

std::string RatFunc::to_string() const {
  if (is_unit(den_)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ----------------------------------------------------------------- Scalar

const RatFunc& Scalar::sigma_squared() {
  static const RatFunc s2(Poly::var(Var::q, 2) - Poly(1), Poly::var(Var::q, 2));
  return s2;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  x_ += o.x_;
  if (!o.y_.is_zero()) y_ += o.y_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  x_ -= o.x_;
  if (!o.y_.is_zero()) y_ -= o.y_;
  return *this;
}

Scalar operator-(Scalar a) {
  a.x_ = -a.x_;
  if (!a.y_.is_zero()) a.y_ = -a.y_;
  return a;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (y_.is_zero() && o.y_.is_zero()) {
    x_ *= o.x_;
    return *this;
  }
  RatFunc x = x_ * o.x_;
  if (!y_.is_zero() && !o.y_.is_zero()) x += y_ * o.y_ * sigma_squared();
  RatFunc y = x_ * o.y_ + y_ * o.x_;
  x_ = std::move(x);
  y_ = std::move(y);
  return *this;
}

Scalar Scalar::inverse() const {
  if (y_.is_zero()) return Scalar(x_.inverse());
  RatFunc norm = x_ * x_ - y_ * y_ * sigma_squared();
  if (norm.is_zero()) throw PoleError("division by zero");
  RatFunc inv = norm.inverse();
  return Scalar(x_ * inv, -(y_ * inv));
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  if (!has_sigma()) return Scalar(x_.pow(e));
  Scalar result(1);
  Scalar base = *this;
  auto u = static_cast<unsigned>(e);
  while (u != 0) {
    if (u & 1U) result *= base;
    u >>= 1U;
    if (u != 0) base *= base;
  }
  return result;
}

Scalar Scalar::substitute(const std::map<Var, Scalar>& bindings) const {
  std::map<Var, RatFunc> rb;
  for (const auto& [v, s] : bindings) {
    if (s.has_sigma())
      throw ScalarError("substitution values must be sigma-free");
    rb.emplace(v, s.rational_part());
  }
  if (has_sigma() && rb.count(Var::q) != 0)
    throw ScalarError("cannot substitute q in a sigma-bearing scalar");
  Scalar out(x_.substitute(rb));
  if (has_sigma()) out.y_ = y_.substitute(rb);
  return out;
}

Scalar Scalar::partial_eval(const Assignment& values) const {
  Scalar out(x_.partial_eval(values));
  // sigma stays formal; evaluating the remaining q at the same point later is
  // compatible with this partial step.
  if (has_sigma()) out.y_ = y_.partial_eval(values);
  return out;
}

std::string Scalar::to_string() const {
  if (!has_sigma()) return x_.to_string();
  return "(" + x_.to_string() + ")+(" + y_.to_string() + ")*sigma";
}

Scalar Scalar::parse(std::string_view text) {
  ScalarPolicy policy{nullptr};
  return ExprParser<ScalarPolicy>(text, policy).parse_all();
}

Scalar Scalar::parse(std::string_view text,
                     const std::map<std::string, Scalar, std::less<>>& symbols) {
  ScalarPolicy policy{&symbols};
  return ExprParser<ScalarPolicy>(text, policy).parse_all();
}

std::pair<Rational, Rational> eval_components(const Scalar& x,
                                              const Assignment& values) {
  Rational a = x.rational_part().eval(values);
  Rational b = x.has_sigma() ? x.sigma_part().eval(values) : Rational(0);
  return {a, b};
}

Rational eval_rational(const Scalar& x, const Assignment& values) {
  auto [a, b] = eval_components(x, values);
  if (b == 0) return a;
  auto q = values.find(Var::q);
  if (q == values.end())
    throw ScalarError("no value for indeterminate q (needed by sigma)");
  if (q->second == 0) throw PoleError("pole: sigma is undefined at q = 0");
  auto s = rational_sqrt(1 - 1 / (q->second * q->second));
  if (!s)
    throw ScalarError("sigma is irrational at q = " + q->second.get_str());
  return a + b * *s;
}

bool vanishes_at(const Scalar& x, const Assignment& values) {
  auto [a, b] = eval_components(x, values);
  return a == 0 && b == 0;
}

}  // namespace gl11
