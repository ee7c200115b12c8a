#include "gl11/params.hpp"

namespace gl11 {

namespace {

constexpr Var kFormal[] = {Var::K,   Var::Kr,  Var::K1,   Var::K2,
                           Var::K3,  Var::Kr1, Var::Kr2,  Var::Kr3,
                           Var::tau, Var::rho, Var::tau1, Var::tau2};

}  // namespace

std::string_view to_string(CaseId c) {
  switch (c) {
    case CaseId::classical: return "classical";
    case CaseId::r22: return "r22";
    case CaseId::r12: return "r12";
    case CaseId::r11: return "r11";
  }
  return "?";
}

std::string_view to_string(Framework f) {
  return f == Framework::unbraided ? "unbraided" : "braided";
}

std::optional<CaseId> parse_case(std::string_view name) {
  for (CaseId c : {CaseId::classical, CaseId::r22, CaseId::r12, CaseId::r11})
    if (to_string(c) == name) return c;
  return std::nullopt;
}

std::optional<Framework> parse_framework(std::string_view name) {
  if (name == "unbraided") return Framework::unbraided;
  if (name == "braided") return Framework::braided;
  return std::nullopt;
}

Rational random_parameter(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  for (;;) {
    Rational x(num(rng), den(rng));
    x.canonicalize();
    if (x != 0 && x != 1 && x != -1) return x;
  }
}

Params Params::symbolic(CaseId c) {
  Params out;
  out.case_id = c;
  out.q = Scalar::var(Var::q);
  out.p = Scalar::var(Var::p);
  if (c == CaseId::r11) {
    Scalar qi = out.q.inverse();
    out.r = (out.q + qi) * Scalar::rational(1, 2);
    out.s = (out.q - qi) * Scalar::rational(1, 2);
  } else {
    out.r = Scalar::var(Var::r);
    out.s = Scalar(0);
  }
  return out;
}

Params Params::sample(CaseId c, std::mt19937_64& rng) {
  Params out;
  out.case_id = c;
  out.numeric = true;
  Rational q = random_parameter(rng);
  Rational r = random_parameter(rng);
  Rational p = random_parameter(rng);
  out.q = Scalar(q);
  out.p = Scalar(p);
  if (c == CaseId::r11) {
    out.r = Scalar((q + 1 / q) / 2);
    out.s = Scalar((q - 1 / q) / 2);
  } else {
    out.r = Scalar(r);
    out.s = Scalar(0);
  }
  // q stays in the point: sigma-bearing values reintroduce it through
  // sigma^2, and those must be evaluated at the same q.
  out.point[Var::q] = q;
  out.point[Var::r] = r;
  out.point[Var::p] = p;
  for (Var v : kFormal) out.point[v] = random_parameter(rng);
  return out;
}

SymbolTable Params::symbols() const {
  SymbolTable t;
  t.emplace("q", q);
  t.emplace("r", r);
  t.emplace("s", s);
  t.emplace("p", p);
  t.emplace("sigma", Scalar::sigma());
  for (Var v : kFormal) t.emplace(std::string(var_name(v)), Scalar::var(v));
  t.emplace("eps", Scalar::var(Var::eps));
  return t;
}

Scalar Params::parse(std::string_view text) const {
  return Scalar::parse(text, symbols());
}

bool Params::is_zero(const Scalar& x) const {
  if (x.is_zero()) return true;
  if (!numeric) return false;
  return vanishes_at(x, point);
}

}  // namespace gl11
