#include "gl11/coproduct.hpp"

namespace gl11 {

namespace {

int parity(const GroupMonomial& m) { return (m.e[kLb] + m.e[kLc]) & 1; }

GroupMonomial mono(int letter) { return GroupAlgebra::letter(letter); }

}  // namespace

Coproduct::Coproduct(const Presentation& pres)
    : Coproduct(pres, pres.framework() == Framework::braided) {}

Coproduct::Coproduct(const Presentation& pres, bool graded)
    : pres_(pres), graded_(graded) {}

TensorElement Coproduct::tensor_mul(const TensorElement& x,
                                    const TensorElement& y) const {
  const GroupAlgebra& alg = pres_.algebra();
  TensorElement out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      if (kx.size() != ky.size())
        throw std::invalid_argument("tensor arities differ");
      std::size_t n = kx.size();
      int sign = 0;
      if (graded_) {
        // Moving y_j to the left past x_i for every i > j.
        for (std::size_t j = 0; j < n; ++j) {
          if (!parity(ky[j])) continue;
          for (std::size_t i = j + 1; i < n; ++i) sign += parity(kx[i]);
        }
      }
      Scalar coeff = cx * cy;
      if (sign & 1) coeff = -coeff;
      // Expand the factorwise products into a tensor.
      TensorElement acc(TensorKey{}, coeff);
      for (std::size_t i = 0; i < n; ++i) {
        const GroupElement& f = alg.mul_mono(kx[i], ky[i]);
        TensorElement next;
        for (const auto& [key, c] : acc)
          for (const auto& [m, cm] : f) {
            TensorKey k2 = key;
            k2.push_back(m);
            next.add(k2, c * cm);
          }
        acc = std::move(next);
      }
      out += acc;
    }
  }
  return out;
}

const TensorElement& Coproduct::delta(const GroupMonomial& m) const {
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  TensorElement out;
  int last = -1;
  for (int i = 3; i >= 0; --i)
    if (m.e[i] != 0) {
      last = i;
      break;
    }
  if (last < 0) {
    out.add(TensorKey{GroupMonomial{}, GroupMonomial{}}, Scalar(1));
  } else {
    TensorElement gen;
    switch (last) {
      case kLa:
        gen.add({mono(kLa), mono(kLa)}, 1);
        gen.add({mono(kLb), mono(kLc)}, 1);
        break;
      case kLb:
        gen.add({mono(kLa), mono(kLb)}, 1);
        gen.add({mono(kLb), mono(kLd)}, 1);
        break;
      case kLc:
        gen.add({mono(kLc), mono(kLa)}, 1);
        gen.add({mono(kLd), mono(kLc)}, 1);
        break;
      case kLd:
        gen.add({mono(kLc), mono(kLb)}, 1);
        gen.add({mono(kLd), mono(kLd)}, 1);
        break;
    }
    GroupMonomial prefix = m;
    --prefix.e[last];
    out = prefix.is_one() ? gen : tensor_mul(delta(prefix), gen);
  }
  return cache_.emplace(m, std::move(out)).first->second;
}

TensorElement Coproduct::delta(const GroupElement& x) const {
  TensorElement out;
  for (const auto& [m, c] : x) out.add(delta(m), c);
  return out;
}

TensorElement Coproduct::delta_at(const TensorElement& t, std::size_t slot) const {
  TensorElement out;
  for (const auto& [key, c] : t) {
    for (const auto& [pair, cp] : delta(key[slot])) {
      TensorKey k2(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(slot));
      k2.push_back(pair[0]);
      k2.push_back(pair[1]);
      k2.insert(k2.end(), key.begin() + static_cast<std::ptrdiff_t>(slot) + 1,
                key.end());
      out.add(k2, c * cp);
    }
  }
  return out;
}

TensorElement Coproduct::delta_n(const GroupElement& x, int n) const {
  if (n < 2) throw std::invalid_argument("delta_n needs arity >= 2");
  TensorElement t = delta(x);
  for (int k = 2; k < n; ++k) t = delta_at(t, 0);
  return t;
}

TensorElement Coproduct::tensor(const std::vector<GroupElement>& factors) const {
  TensorElement acc(TensorKey{}, Scalar(1));
  for (const GroupElement& f : factors) {
    TensorElement next;
    for (const auto& [key, c] : acc)
      for (const auto& [m, cm] : f) {
        TensorKey k2 = key;
        k2.push_back(m);
        next.add(k2, c * cm);
      }
    acc = std::move(next);
  }
  return acc;
}

std::string Coproduct::to_string(const TensorElement& t) const {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : t) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*";
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) out += "(x)";
      out += pres_.algebra().to_string(key[i]);
    }
  }
  return out;
}

std::array<CoeffPoly, 16> coeff_polys_of(const TensorElement& t) {
  std::array<CoeffPoly, 16> out;
  for (const auto& [key, c] : t) {
    if (key.size() != 2) throw std::invalid_argument("coefficient polynomials need arity 2");
    CoeffTag tag{key[0].e[kLb], key[0].e[kLc], key[1].e[kLb], key[1].e[kLc]};
    std::array<int, 4> exps = {key[0].e[kLa], key[0].e[kLd], key[1].e[kLa],
                               key[1].e[kLd]};
    Scalar& slot = out[tag.index()][exps];
    slot += c;
    if (slot.is_zero()) out[tag.index()].erase(exps);
  }
  return out;
}

std::array<CoeffPoly, 16> extract_coeff_polys(const Coproduct& cop, int k, int l,
                                              Family family) {
  int m = (family == Family::b || family == Family::bc) ? 1 : 0;
  int n = (family == Family::c || family == Family::bc) ? 1 : 0;
  return coeff_polys_of(cop.delta(group_monomial(k, l, m, n)));
}

TensorElement reassemble(const std::array<CoeffPoly, 16>& polys) {
  TensorElement out;
  for (int idx = 0; idx < 16; ++idx)
    for (const auto& [e, c] : polys[idx]) {
      GroupMonomial x = group_monomial(e[0], e[1], (idx >> 3) & 1, (idx >> 2) & 1);
      GroupMonomial y = group_monomial(e[2], e[3], (idx >> 1) & 1, idx & 1);
      out.add(TensorKey{x, y}, c);
    }
  return out;
}

EvalPoint EvalPoint::ones() { return EvalPoint{{Scalar(1), Scalar(1), Scalar(1), Scalar(1)}}; }

EvalPoint EvalPoint::meps(const Scalar& q, int e1, int e2) {
  Scalar x = q.pow(-e1);
  Scalar y = q.pow(-e2);
  return EvalPoint{{x, -x, y, -y}};
}

Scalar eval_coeff(const CoeffPoly& poly, const EvalPoint& pt,
                  std::array<int, 4> deriv) {
  Scalar out;
  for (const auto& [e, c] : poly) {
    Scalar term = c;
    for (int v = 0; v < 4; ++v) {
      int p = e[v];
      for (int k = 0; k < deriv[v]; ++k) term *= Scalar(p - k);
      if (term.is_zero()) break;
      int rest = p - deriv[v];
      if (rest > 0) term *= pt.v[v].pow(rest);
    }
    out += term;
  }
  return out;
}

}  // namespace gl11
