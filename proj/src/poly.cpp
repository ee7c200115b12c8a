#include <algorithm>
#include <sstream>

#include "gl11/scalar.hpp"

namespace gl11 {

namespace {

constexpr std::array<std::string_view, kVarCount> kNames = {
    "q",  "r",  "p",  "K",   "tau", "rho", "eps",  "Kr",
    "K1", "K2", "K3", "Kr1", "Kr2", "Kr3", "tau1", "tau2"};

using Term = Poly::Term;

bool greater(const Term& a, const Term& b) {
  return compare(a.mono, b.mono) > 0;
}

// a + c * m * b, with both inputs sorted.
std::vector<Term> merge_scaled(const std::vector<Term>& a,
                               const std::vector<Term>& b, const Rational& c,
                               const Monomial* m) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  auto shifted = [&](std::size_t k) {
    return Term{m ? b[k].mono * *m : b[k].mono, b[k].coeff * c};
  };
  while (i < a.size() && j < b.size()) {
    Term bj = shifted(j);
    int cmp = compare(a[i].mono, bj.mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(bj));
      ++j;
    } else {
      Rational s = a[i].coeff + bj.coeff;
      if (s != 0) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(shifted(j));
  return out;
}

Rational rpow(const Rational& x, int e) {
  mpz_class n;
  mpz_class d;
  mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational out(n, d);
  out.canonicalize();
  return out;
}

// Coefficients of p viewed as a polynomial in v; index = power of v.
std::vector<Poly> split(const Poly& p, Var v) {
  auto vi = static_cast<std::size_t>(v);
  std::vector<std::vector<Term>> buckets(p.degree_in(v) + 1);
  for (const Term& t : p.terms()) {
    Term u = t;
    int e = u.mono.exp[vi];
    u.mono.exp[vi] = 0;
    u.mono.deg = static_cast<std::int16_t>(u.mono.deg - e);
    buckets[e].push_back(std::move(u));
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Poly::from_sorted_terms(std::move(b)));
  return out;
}

Poly join(const std::vector<Poly>& coeffs, Var v) {
  std::vector<Term> terms;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    Monomial shift = Monomial::of(v, static_cast<int>(d));
    for (const Term& t : coeffs[d].terms())
      terms.push_back(Term{t.mono * shift, t.coeff});
  }
  return Poly::from_unsorted_terms(std::move(terms));
}

void trim(std::vector<Poly>& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Poly content(const std::vector<Poly>& coeffs) {
  Poly g;
  for (const Poly& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

void divide_all(std::vector<Poly>& coeffs, const Poly& c) {
  if (c.is_constant() && c.constant_value() == 1) return;
  for (Poly& x : coeffs) x = *exact_divide(x, c);
}

bool all_constant(const std::vector<Poly>& u) {
  return std::all_of(u.begin(), u.end(),
                     [](const Poly& p) { return p.is_constant(); });
}

std::vector<Poly> pseudo_remainder(std::vector<Poly> r,
                                   const std::vector<Poly>& b) {
  const Poly& lb = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Poly lr = r.back();
    if (!(lb.is_constant() && lb.constant_value() == 1))
      for (Poly& x : r) x *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) r[j + shift] -= lr * b[j];
    r.back() = Poly();
    trim(r);
  }
  return r;
}

Poly monomial_gcd(const Poly& m, const Poly& p) {
  Monomial g = m.leading().mono;
  for (const Term& t : p.terms()) {
    g.deg = 0;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      g.exp[i] = std::min(g.exp[i], t.mono.exp[i]);
      g.deg = static_cast<std::int16_t>(g.deg + g.exp[i]);
    }
    if (g.deg == 0) break;
  }
  return Poly::term(g, 1);
}

int lowest_bit(std::uint32_t mask) { return __builtin_ctz(mask); }

}  // namespace

std::vector<Poly> coefficients_in(const Poly& p, Var v) {
  if (p.is_zero()) return {};
  return split(p, v);
}

std::string_view var_name(Var v) { return kNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (kNames[i] == name) return static_cast<Var>(i);
  return std::nullopt;
}

std::uint32_t Monomial::var_mask() const {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (exp[i] != 0) m |= 1U << i;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kVarCount; ++i)
    m.exp[i] = static_cast<std::int16_t>(a.exp[i] + b.exp[i]);
  m.deg = static_cast<std::int16_t>(a.deg + b.deg);
  return m;
}

int compare(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
  return 0;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kVarCount; ++i)
    m.exp[i] = static_cast<std::int16_t>(a.exp[i] - b.exp[i]);
  m.deg = static_cast<std::int16_t>(a.deg - b.deg);
  return m;
}

Poly::Poly(long c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, Rational(c)});
}

// mpq_class(n, d) is not reduced on construction; coefficients entering
// from outside are, so that equality stays structural.
Poly::Poly(const Rational& c) {
  if (c == 0) return;
  terms_.push_back(Term{Monomial{}, c});
  terms_.back().coeff.canonicalize();
}

Poly Poly::var(Var v, int e) { return term(Monomial::of(v, e), 1); }

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p;
  if (c == 0) return p;
  p.terms_.push_back(Term{m, c});
  p.terms_.back().coeff.canonicalize();
  return p;
}

Poly Poly::from_sorted_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

Poly Poly::from_unsorted_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), greater);
  Poly p;
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_[0].coeff;
}

std::uint32_t Poly::var_mask() const {
  std::uint32_t m = 0;
  for (const Term& t : terms_) m |= t.mono.var_mask();
  return m;
}

int Poly::degree_in(Var v) const {
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono[v]);
  return d;
}

int Poly::total_degree() const { return terms_.empty() ? 0 : terms_[0].mono.deg; }

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_scaled(terms_, o.terms_, 1, nullptr);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_scaled(terms_, o.terms_, -1, nullptr);
  return *this;
}

Poly operator-(Poly a) {
  for (Term& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (Term& t : terms_) t.coeff *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.is_constant()) return b * a.terms_[0].coeff;
  if (b.is_constant()) return a * b.terms_[0].coeff;
  if (a.is_monomial()) {
    Poly out = b.mul_monomial(a.terms_[0].mono);
    return out *= a.terms_[0].coeff;
  }
  if (b.is_monomial()) {
    Poly out = a.mul_monomial(b.terms_[0].mono);
    return out *= b.terms_[0].coeff;
  }
  std::vector<Term> terms;
  terms.reserve(a.size() * b.size());
  for (const Term& x : a.terms_)
    for (const Term& y : b.terms_)
      terms.push_back(Term{x.mono * y.mono, x.coeff * y.coeff});
  return Poly::from_unsorted_terms(std::move(terms));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) ||
        a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

Poly Poly::mul_monomial(const Monomial& m) const {
  Poly out = *this;
  for (Term& t : out.terms_) t.mono = t.mono * m;
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  Rational lc = terms_[0].coeff;
  if (lc == 1) return *this;
  Poly out = *this;
  out *= Rational(1) / lc;
  return out;
}

Rational Poly::eval(const Assignment& values) const {
  Rational acc = 0;
  for (const Term& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (t.mono.exp[i] == 0) continue;
      auto it = values.find(static_cast<Var>(i));
      if (it == values.end())
        throw ScalarError("no value for indeterminate " +
                          std::string(kNames[i]));
      v *= rpow(it->second, t.mono.exp[i]);
    }
    acc += v;
  }
  return acc;
}

Poly Poly::partial_eval(const Assignment& values) const {
  std::uint32_t mask = 0;
  for (const auto& kv : values) mask |= 1U << static_cast<unsigned>(kv.first);
  if ((var_mask() & mask) == 0) return *this;
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) {
    Term u = t;
    for (const auto& [v, x] : values) {
      auto i = static_cast<std::size_t>(v);
      int e = u.mono.exp[i];
      if (e == 0) continue;
      u.coeff *= rpow(x, e);
      u.mono.exp[i] = 0;
      u.mono.deg = static_cast<std::int16_t>(u.mono.deg - e);
    }
    terms.push_back(std::move(u));
  }
  return from_unsorted_terms(std::move(terms));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational a = abs(c);
    bool unit = t.mono.is_one();
    if (unit) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    bool lead = true;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      int e = t.mono.exp[i];
      if (e == 0) continue;
      if (!lead) os << "*";
      lead = false;
      os << kNames[i];
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw PoleError("division by zero polynomial");
  if (a.is_zero()) return Poly();
  if (b.is_constant()) return a * (Rational(1) / b.constant_value());
  if (b.is_monomial()) {
    const Term& m = b.leading();
    std::vector<Term> terms;
    terms.reserve(a.size());
    Rational inv = Rational(1) / m.coeff;
    for (const Term& t : a.terms()) {
      if (!divides(m.mono, t.mono)) return std::nullopt;
      terms.push_back(Term{quotient(t.mono, m.mono), t.coeff * inv});
    }
    return Poly::from_sorted_terms(std::move(terms));
  }
  std::uint32_t mb = b.var_mask();
  for (std::uint32_t m = mb; m != 0; m &= m - 1) {
    auto v = static_cast<Var>(lowest_bit(m));
    if (a.degree_in(v) < b.degree_in(v)) return std::nullopt;
  }
  const Term& lb = b.leading();
  Rational inv = Rational(1) / lb.coeff;
  std::vector<Term> rem = a.terms();
  std::vector<Term> quo;
  while (!rem.empty()) {
    const Term& lt = rem.front();
    if (!divides(lb.mono, lt.mono)) return std::nullopt;
    Term t{quotient(lt.mono, lb.mono), lt.coeff * inv};
    rem = merge_scaled(rem, b.terms(), -t.coeff, &t.mono);
    quo.push_back(std::move(t));
  }
  return Poly::from_sorted_terms(std::move(quo));
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  if (a == b) return a.monic();

  std::uint32_t ma = a.var_mask();
  std::uint32_t mb = b.var_mask();
  if (std::uint32_t only = ma & ~mb; only != 0) {
    auto v = static_cast<Var>(lowest_bit(only));
    return gcd(content(split(a, v)), b);
  }
  if (std::uint32_t only = mb & ~ma; only != 0) {
    auto v = static_cast<Var>(lowest_bit(only));
    return gcd(a, content(split(b, v)));
  }

  // Main variable: the shared one of least degree keeps the remainder
  // sequence short.
  Var v = static_cast<Var>(lowest_bit(ma));
  int best = -1;
  for (std::uint32_t m = ma; m != 0; m &= m - 1) {
    auto w = static_cast<Var>(lowest_bit(m));
    int d = std::max(a.degree_in(w), b.degree_in(w));
    if (best < 0 || d < best) {
      best = d;
      v = w;
    }
  }

  std::vector<Poly> ua = split(a, v);
  std::vector<Poly> ub = split(b, v);
  Poly ca = content(ua);
  Poly cb = content(ub);
  Poly c = gcd(ca, cb);
  divide_all(ua, ca);
  divide_all(ub, cb);
  if (ua.size() < ub.size()) std::swap(ua, ub);

  for (;;) {
    std::vector<Poly> r = pseudo_remainder(ua, ub);
    if (r.empty()) break;
    if (r.size() == 1) {
      ub = {Poly(1)};
      break;
    }
    if (all_constant(r)) {
      Rational inv = Rational(1) / r.back().constant_value();
      for (Poly& x : r) x *= inv;
    } else {
      divide_all(r, content(r));
    }
    ua = std::move(ub);
    ub = std::move(r);
  }
  return (c * join(ub, v)).monic();
}

}  // namespace gl11
