#include "gl11/pairing.hpp"

#include <stdexcept>

#include "gl11/expression_parser.hpp"

namespace gl11 {

namespace {

bool is_group_like(const DualLetter& l) { return l.kind == DualLetter::Kind::GroupLike; }

bool trivial(const DualLetter& l) { return is_group_like(l) && l.u.is_one() && l.v.is_one(); }

bool has_bc(const GroupMonomial& m) { return m.e[kLb] != 0 || m.e[kLc] != 0; }

int parity(const GroupMonomial& m) { return (m.e[kLb] + m.e[kLc]) & 1; }

// A scalar-only element (only the empty word) or nothing.
std::optional<Scalar> as_scalar(const DualElement& x) {
  if (x.is_zero()) return Scalar();
  if (x.size() != 1 || !x.begin()->first.empty()) return std::nullopt;
  return x.begin()->second;
}

struct DualPolicy {
  using Value = DualElement;
  const Params* params;
  SymbolTable symbols;

  Value number(const Rational& n) { return dual_scalar(Scalar(n)); }

  Value divide(const Value& a, const Value& b) {
    auto s = as_scalar(b);
    if (!s) throw ParseError("division by a non-scalar enveloping element");
    return a * s->inverse();
  }

  Value power(const Value& a, int e) {
    if (auto s = as_scalar(a)) return dual_scalar(s->pow(e));
    if (e < 0) {
      // Only a single group-like (with coefficient 1) is invertible here.
      if (a.size() == 1 && a.begin()->second.is_one() && a.begin()->first.size() == 1 &&
          is_group_like(a.begin()->first[0])) {
        const DualLetter& g = a.begin()->first[0];
        return dual_letter(DualLetter::group_like(g.u.pow(e), g.v.pow(e)));
      }
      throw ParseError("negative power of a non-invertible enveloping element");
    }
    Value out = dual_scalar(1);
    for (int i = 0; i < e; ++i) out = out * a;
    return out;
  }

  Scalar scalar_arg(ExprParser<DualPolicy>& p) {
    auto s = as_scalar(p.parse_expr());
    if (!s) p.fail("GL arguments must be scalars");
    return *s;
  }

  Value identifier(const std::string& name, ExprParser<DualPolicy>& p) {
    if (name == "A") return dual_letter(DualLetter::A());
    if (name == "B") return dual_letter(DualLetter::B());
    if (name == "C") return dual_letter(DualLetter::C());
    if (name == "D") return dual_letter(DualLetter::D());
    if (name == "K") return dual_letter(DualLetter::group_like(params->q, params->q));
    if (name == "Kr") return dual_letter(DualLetter::group_like(params->r, params->r));
    if (name == "eta") return dual_letter(DualLetter::group_like(1, -1));
    if (name == "GL") {
      p.expect('(');
      Scalar u = scalar_arg(p);
      p.expect(',');
      Scalar v = scalar_arg(p);
      p.expect(')');
      return dual_letter(DualLetter::group_like(u, v));
    }
    auto it = symbols.find(name);
    if (it != symbols.end()) return dual_scalar(it->second);
    p.fail("unknown identifier '" + name + "'");
  }
};

}  // namespace

std::string DualLetter::to_string() const {
  switch (kind) {
    case Kind::A: return "A";
    case Kind::B: return "B";
    case Kind::C: return "C";
    case Kind::D: return "D";
    case Kind::GroupLike: return "GL(" + u.to_string() + "," + v.to_string() + ")";
  }
  return "?";
}

bool operator<(const DualLetter& x, const DualLetter& y) {
  if (x.kind != y.kind) return x.kind < y.kind;
  if (x.kind != DualLetter::Kind::GroupLike) return false;
  std::string xu = x.u.to_string(), yu = y.u.to_string();
  if (xu != yu) return xu < yu;
  return x.v.to_string() < y.v.to_string();
}

DualWord concat(const DualWord& x, const DualWord& y) {
  DualWord out = x;
  for (const DualLetter& l : y) {
    if (!out.empty() && is_group_like(out.back()) && is_group_like(l)) {
      out.back().u *= l.u;
      out.back().v *= l.v;
      if (trivial(out.back())) out.pop_back();
    } else if (!trivial(l)) {
      out.push_back(l);
    }
  }
  return out;
}

DualElement operator*(const DualElement& x, const DualElement& y) {
  DualElement out;
  for (const auto& [wx, cx] : x)
    for (const auto& [wy, cy] : y) out.add(concat(wx, wy), cx * cy);
  return out;
}

DualElement dual_letter(DualLetter l) { return DualElement(concat({}, {std::move(l)})); }

DualElement dual_scalar(const Scalar& c) { return DualElement(DualWord{}, c); }

int parity(const DualWord& w) {
  int p = 0;
  for (const DualLetter& l : w) p += l.odd();
  return p & 1;
}

std::string to_string(const DualElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : x) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    for (const DualLetter& l : w) out += "*" + l.to_string();
  }
  return out;
}

DualElement parse_dual(std::string_view text, const Params& params) {
  DualPolicy policy{&params, params.symbols()};
  ExprParser<DualPolicy> parser(text, policy);
  return parser.parse_all();
}

Scalar pair_letter(const DualLetter& letter, const GroupMonomial& m) {
  const int k = m.e[kLa], l = m.e[kLd], b = m.e[kLb], c = m.e[kLc];
  switch (letter.kind) {
    case DualLetter::Kind::A: return (b == 0 && c == 0) ? Scalar(k) : Scalar();
    case DualLetter::Kind::D: return (b == 0 && c == 0) ? Scalar(l) : Scalar();
    case DualLetter::Kind::B: return (b == 1 && c == 0) ? Scalar(1) : Scalar();
    case DualLetter::Kind::C: return (b == 0 && c == 1) ? Scalar(1) : Scalar();
    case DualLetter::Kind::GroupLike:
      if (b != 0 || c != 0) return Scalar();
      return letter.u.pow(k) * letter.v.pow(l);
  }
  return Scalar();
}

Pairing::Pairing(const Presentation& pres, PairingSign sign)
    : pres_(pres), cop_(pres), graded_(cop_.graded() && sign == PairingSign::graded) {}

Scalar Pairing::pair(const DualWord& w, const GroupMonomial& x) const {
  if (w.empty()) return has_bc(x) ? Scalar() : Scalar(1);
  if (w.size() == 1) return pair_letter(w[0], x);
  auto key = std::make_pair(w, x);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  DualWord rest(w.begin() + 1, w.end());
  const bool rest_odd = graded() && parity(rest);
  Scalar out;
  for (const auto& [t, c] : cop_.delta(x)) {
    Scalar first = pair_letter(w[0], t[0]);
    if (first.is_zero()) continue;
    Scalar second = pair(rest, t[1]);
    if (second.is_zero()) continue;
    Scalar term = c * first * second;
    if (rest_odd && parity(t[0])) term = -term;
    out += term;
  }
  cache_.emplace(std::move(key), out);
  return out;
}

Scalar Pairing::pair(const DualElement& P, const GroupMonomial& x) const {
  Scalar out;
  for (const auto& [w, c] : P) out += c * pair(w, x);
  return out;
}

Scalar Pairing::pair(const DualElement& P, const GroupElement& x) const {
  Scalar out;
  for (const auto& [m, c] : x) out += c * pair(P, m);
  return out;
}

void Pairing::validate(const DualElement& P) const {
  CaseId c = pres_.case_id();
  if (c != CaseId::r12 && c != CaseId::r11) return;
  const Params& params = pres_.params();
  for (const auto& [w, coeff] : P)
    for (const DualLetter& l : w)
      if (is_group_like(l) && !params.is_zero(l.u * l.u - l.v * l.v))
        throw std::invalid_argument(l.to_string() +
                                    " is not a character: u^2 != v^2 in this algebra");
}

std::vector<GroupMonomial> pbw_basis(int max_degree) {
  std::vector<GroupMonomial> out;
  for (int n = 0; n <= max_degree; ++n)
    for (int k = n; k >= 0; --k)
      for (int m = 0; m <= 1; ++m)
        for (int c = 0; c <= 1; ++c) out.push_back(group_monomial(k, n - k, m, c));
  return out;
}

CheckReport relation_check(const Pairing& pg, const DualElement& lhs,
                           const DualElement& rhs, int N, const std::string& label) {
  pg.validate(lhs);
  pg.validate(rhs);
  const Presentation& pres = pg.presentation();
  CheckReport rep;
  rep.case_name = std::string(to_string(pres.case_id()));
  rep.framework = std::string(to_string(pres.framework()));
  rep.params.max_degree = N;
  DualElement diff = lhs - rhs;
  std::string prefix = label.empty() ? "" : label + " ";
  for (const GroupMonomial& x : pbw_basis(N)) {
    Scalar v = pg.pair(diff, x);
    if (!pres.params().is_zero(v))
      rep.residuals.push_back({prefix + "<lhs-rhs, " + pres.algebra().to_string(x) + ">",
                               v.to_string()});
  }
  rep.status = rep.residuals.empty() ? Status::PASS : Status::FAIL;
  return rep;
}

CheckReport coproduct_check(const Pairing& pg, const DualElement& X,
                            const DualTensor& formula, int N, const std::string& label) {
  pg.validate(X);
  for (const auto& [l, r] : formula) {
    pg.validate(l);
    pg.validate(r);
  }
  const Presentation& pres = pg.presentation();
  CheckReport rep;
  rep.case_name = std::string(to_string(pres.case_id()));
  rep.framework = std::string(to_string(pres.framework()));
  rep.params.max_degree = N;
  std::vector<GroupMonomial> basis = pbw_basis(N);
  const std::size_t n = basis.size(), t = formula.size();
  // left[i][x], and right[i][y] split by the parity of the word.
  std::vector<std::vector<Scalar>> left(t, std::vector<Scalar>(n));
  std::vector<std::vector<Scalar>> right_even(t, std::vector<Scalar>(n));
  std::vector<std::vector<Scalar>> right_odd(t, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      left[i][j] = pg.pair(formula[i].first, basis[j]);
      for (const auto& [w, c] : formula[i].second) {
        Scalar v = c * pg.pair(w, basis[j]);
        (parity(w) ? right_odd : right_even)[i][j] += v;
      }
    }
  std::string prefix = label.empty() ? "" : label + " ";
  for (std::size_t a = 0; a < n; ++a) {
    const bool flip = pg.graded() && parity(basis[a]);
    for (std::size_t b = 0; b < n; ++b) {
      Scalar lhs;
      for (std::size_t i = 0; i < t; ++i) {
        if (left[i][a].is_zero()) continue;
        Scalar r = flip ? right_even[i][b] - right_odd[i][b]
                        : right_even[i][b] + right_odd[i][b];
        lhs += left[i][a] * r;
      }
      Scalar rhs = pg.pair(X, pres.mul(GroupElement(basis[a]), GroupElement(basis[b])));
      Scalar diff = lhs - rhs;
      if (!pres.params().is_zero(diff))
        rep.residuals.push_back({prefix + pres.algebra().to_string(basis[a]) + " (x) " +
                                     pres.algebra().to_string(basis[b]),
                                 diff.to_string()});
    }
  }
  rep.status = rep.residuals.empty() ? Status::PASS : Status::FAIL;
  return rep;
}

}  // namespace gl11
