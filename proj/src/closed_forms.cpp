#include "gl11/closed_forms.hpp"

#include <chrono>
#include <optional>
#include <stdexcept>

#include "gl11/enveloping.hpp"
#include "gl11/pairing.hpp"

namespace gl11 {

// ---------------------------------------------------------------------------
// Coefficient polynomial arithmetic.

namespace {

void accumulate(CoeffPoly& out, const std::array<int, 4>& e, const Scalar& c) {
  if (c.is_zero()) return;
  Scalar& slot = out[e];
  slot += c;
  if (slot.is_zero()) out.erase(e);
}

}  // namespace

CoeffPoly cp_var(int v) {
  std::array<int, 4> e{};
  e[v] = 1;
  return {{e, Scalar(1)}};
}

CoeffPoly cp_const(const Scalar& c) {
  if (c.is_zero()) return {};
  return {{std::array<int, 4>{}, c}};
}

CoeffPoly operator+(const CoeffPoly& x, const CoeffPoly& y) {
  CoeffPoly out = x;
  for (const auto& [e, c] : y) accumulate(out, e, c);
  return out;
}

CoeffPoly operator-(const CoeffPoly& x, const CoeffPoly& y) {
  CoeffPoly out = x;
  for (const auto& [e, c] : y) accumulate(out, e, -c);
  return out;
}

CoeffPoly operator*(const CoeffPoly& x, const CoeffPoly& y) {
  CoeffPoly out;
  for (const auto& [ex, cx] : x)
    for (const auto& [ey, cy] : y) {
      std::array<int, 4> e;
      for (int v = 0; v < 4; ++v) e[v] = ex[v] + ey[v];
      accumulate(out, e, cx * cy);
    }
  return out;
}

CoeffPoly operator*(const Scalar& c, const CoeffPoly& x) {
  CoeffPoly out;
  if (c.is_zero()) return out;
  for (const auto& [e, cx] : x) accumulate(out, e, c * cx);
  return out;
}

CoeffPoly cp_diff(const CoeffPoly& x, int v) {
  CoeffPoly out;
  for (const auto& [exps, c] : x) {
    if (exps[v] == 0) continue;
    std::array<int, 4> e = exps;
    Scalar f = c * Scalar(e[v]);
    --e[v];
    accumulate(out, e, f);
  }
  return out;
}

CoeffPoly cp_twist(const CoeffPoly& x, int e1, int e2, const Scalar& r, const Scalar& s) {
  std::array<CoeffPoly, 4> image;
  const int eps[2] = {e1, e2};
  for (int slot = 0; slot < 2; ++slot) {
    CoeffPoly a = cp_var(2 * slot), d = cp_var(2 * slot + 1);
    Scalar es = Scalar(eps[slot]) * s;
    image[2 * slot] = r * a - es * d;
    image[2 * slot + 1] = es * a - r * d;
  }
  std::array<std::vector<CoeffPoly>, 4> powers;
  for (int v = 0; v < 4; ++v) powers[v].push_back(cp_const(1));
  CoeffPoly out;
  for (const auto& [e, c] : x) {
    CoeffPoly term = cp_const(c);
    for (int v = 0; v < 4; ++v) {
      while (static_cast<int>(powers[v].size()) <= e[v])
        powers[v].push_back(powers[v].back() * image[v]);
      term = term * powers[v][e[v]];
    }
    out = out + term;
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

enum Variable { a1 = 0, d1 = 1, a2 = 2, d2 = 3 };

// Collects residuals of one check.
class Checker {
 public:
  Checker(const Params& params, CaseId c, int N) : params_(params), t0_(Clock::now()) {
    rep_.case_name = std::string(to_string(c));
    rep_.framework = "unbraided";
    rep_.params.max_degree = N;
    rep_.params.mode = params.numeric ? "numeric" : "symbolic";
  }

  void scalar(const std::string& ctx, const Scalar& lhs, const Scalar& rhs) {
    Scalar d = lhs - rhs;
    if (!params_.is_zero(d)) rep_.residuals.push_back({ctx, d.to_string()});
  }

  void element(const GroupAlgebra& alg, const std::string& ctx, const GroupElement& diff) {
    collect_residuals(alg, diff, params_, ctx, rep_.residuals);
  }

  void tensor(const Coproduct& cop, const std::string& ctx, const TensorElement& diff) {
    for (const auto& [key, c] : diff)
      if (!params_.is_zero(c))
        rep_.residuals.push_back({ctx + " @ " + cop.to_string(TensorElement(key)), c.to_string()});
  }

  void poly(const std::string& ctx, const CoeffPoly& diff) {
    for (const auto& [e, c] : diff)
      if (!params_.is_zero(c))
        rep_.residuals.push_back({ctx + " @ a1^" + std::to_string(e[0]) + " d1^" +
                                      std::to_string(e[1]) + " a2^" + std::to_string(e[2]) +
                                      " d2^" + std::to_string(e[3]),
                                  c.to_string()});
  }

  CheckReport finish() {
    rep_.status = rep_.residuals.empty() ? Status::PASS : Status::FAIL;
    rep_.wall_seconds = std::chrono::duration<double>(Clock::now() - t0_).count();
    return std::move(rep_);
  }

 private:
  const Params& params_;
  Clock::time_point t0_;
  CheckReport rep_;
};

std::string kl(int k, int l) { return "k=" + std::to_string(k) + " l=" + std::to_string(l); }

// ---------------------------------------------------------------------------
// Elements of A(1,2) written as printed.

class Builder {
 public:
  explicit Builder(const Presentation& pres) : pres_(pres) {}

  /// a^k d^l b^m c^n; zero when an exponent is negative.
  GroupElement mono(int k, int l, int m = 0, int n = 0) const {
    if (k < 0 || l < 0) return {};
    return GroupElement(group_monomial(k, l, m, n));
  }
  /// a^k (a^2 - d^2) d^l b^m c^n as a product of words.
  GroupElement sq(int k, int l, int m = 0, int n = 0) const {
    if (k < 0 || l < 0) return {};
    WordSum w;
    w.add(run(k + 2, 0, l, m, n), 1);
    w.add(run(k, 2, l, m, n), -1);
    return pres_.normalize(w);
  }
  GroupElement word(std::initializer_list<std::pair<int, int>> runs) const {
    Word w;
    for (auto [letter, n] : runs) {
      if (n < 0) return {};
      w.insert(w.end(), n, letter);
    }
    return pres_.normalize(WordSum(w));
  }

 private:
  static Word run(int k, int dd, int l, int m, int n) {
    Word w(k, kLa);
    w.insert(w.end(), dd + l, kLd);
    w.insert(w.end(), m, kLb);
    w.insert(w.end(), n, kLc);
    return w;
  }
  const Presentation& pres_;
};

TensorElement tp(const GroupElement& x, const GroupElement& y) {
  TensorElement out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) out.add(TensorKey{mx, my}, cx * cy);
  return out;
}

struct QTools {
  Scalar q, r, one = Scalar(1);
  Scalar f(int n) const { return q.pow(n) - one; }     // q^n - 1
  Scalar qp(int n) const { return q.pow(n); }
  Scalar q1() const { return q - one; }
  Scalar q2() const { return q * q - one; }
  Scalar sign(int n) const { return n % 2 ? Scalar(-1) : Scalar(1); }
};

// ---------------------------------------------------------------------------
// Section 3: A(1,2).

CheckReport r12_lemma1(const Params& p, int N) {
  Presentation pres(CaseId::r12, Framework::unbraided, p);
  Coproduct cop(pres);
  Builder g(pres);
  QTools t{p.q, p.r};
  Checker chk(p, CaseId::r12, N);
  for (int k = 0; k <= N; ++k) {
    TensorElement rhs = tp(g.mono(k, 0), g.mono(k, 0)) +
                        t.f(k) / t.q1() * tp(g.mono(k - 1, 0, 1), g.mono(k - 1, 0, 0, 1)) -
                        t.r * t.qp(2) * t.f(k) * t.f(k - 1) / (t.q2() * t.q1()) *
                            tp(g.mono(k - 2, 1, 0, 1), g.mono(k - 1, 0, 0, 1));
    chk.tensor(cop, "Delta(a^" + std::to_string(k) + ")", cop.delta(group_monomial(k, 0)) - rhs);
  }
  for (int l = 0; l <= N; ++l) {
    TensorElement rhs = tp(g.mono(0, l), g.mono(0, l)) +
                        t.f(l) / t.q1() * tp(g.mono(0, l - 1, 0, 1), g.mono(0, l - 1, 1)) -
                        t.r * t.qp(2) * t.f(l) * t.f(l - 1) / (t.q2() * t.q1()) *
                            tp(g.mono(0, l - 1, 0, 1), g.mono(1, l - 2, 0, 1));
    chk.tensor(cop, "Delta(d^" + std::to_string(l) + ")", cop.delta(group_monomial(0, l)) - rhs);
  }
  return chk.finish();
}

TensorElement r12_delta_ad(const Builder& g, const QTools& t, int k, int l) {
  const Scalar& r = t.r;
  return tp(g.mono(k, l), g.mono(k, l)) +
         t.qp(l) * t.f(k) * t.f(l) / (t.q1() * t.q1()) *
             (tp(g.mono(k - 1, l - 1, 1, 1), g.mono(k - 1, l - 1, 1, 1)) -
              r * t.q * tp(g.mono(k, l - 1, 0, 1), g.mono(k - 1, l, 0, 1))) +
         t.f(l) / t.q1() *
             (tp(g.mono(k, l - 1, 0, 1), g.mono(k, l - 1, 1)) -
              r * t.qp(2) * t.f(l - 1) / t.q2() * tp(g.mono(k, l - 1, 0, 1), g.mono(k + 1, l - 2, 0, 1))) +
         t.qp(l) * t.f(k) / t.q1() *
             (tp(g.mono(k - 1, l, 1), g.mono(k - 1, l, 0, 1)) -
              r * t.qp(l + 2) * t.f(k - 1) / t.q2() *
                  tp(g.mono(k - 2, l + 1, 0, 1), g.mono(k - 1, l, 0, 1)));
}

TensorElement r12_delta_adc(const Builder& g, const QTools& t, int k, int l) {
  return tp(g.mono(k, l, 0, 1), g.mono(k + 1, l)) + tp(g.mono(k, l + 1), g.mono(k, l, 0, 1)) -
         t.f(l) / t.q1() * tp(g.mono(k, l, 0, 1), g.mono(k, l - 1, 1, 1)) +
         t.qp(l + 1) * t.f(k) / t.q1() * tp(g.mono(k - 1, l, 1, 1), g.mono(k, l, 0, 1));
}

TensorElement r12_delta_adb(const Builder& g, const QTools& t, int k, int l) {
  const Scalar& r = t.r;
  const Scalar q2q1 = t.q2() * t.q1();
  return tp(g.mono(k + 1, l), g.mono(k, l, 1)) + tp(g.mono(k, l, 1), g.mono(k, l + 1)) -
         t.f(l) / t.q1() * tp(g.mono(k, l - 1, 1, 1), g.mono(k, l, 1)) +
         t.qp(l + 1) * t.f(k) / t.q1() * tp(g.mono(k, l, 1), g.mono(k - 1, l, 1, 1)) -
         r * t.qp(l + 2) * t.f(k) / t.q2() * tp(g.sq(k - 1, l), g.mono(k - 1, l + 1, 0, 1)) +
         r * t.qp(2) * t.f(l) / t.q2() * tp(g.mono(k + 1, l - 1, 0, 1), g.sq(k, l - 1)) -
         r * t.qp(2) * t.f(l) * t.f(l - 1) / q2q1 *
             tp(g.mono(k + 1, l - 1, 0, 1), g.mono(k + 1, l - 2, 1, 1)) +
         r * t.qp(2 * l + 4) * t.f(k) * t.f(k - 1) / q2q1 *
             tp(g.mono(k - 2, l + 1, 1, 1), g.mono(k - 1, l + 1, 0, 1)) +
         r * t.qp(2) * t.f(k + l + 1) / q2q1 *
             (t.f(l) * tp(g.mono(k, l - 1, 1, 1), g.mono(k + 1, l - 1, 0, 1)) -
              t.qp(l) * t.f(k) * tp(g.mono(k - 1, l + 1, 0, 1), g.mono(k - 1, l, 1, 1))) +
         r * t.qp(l + 2) * t.f(k) * t.f(l) / q2q1 *
             (tp(g.mono(k, l - 1, 1, 1), g.mono(k - 1, l + 1, 0, 1)) -
              t.q * tp(g.mono(k + 1, l - 1, 0, 1), g.mono(k - 1, l, 1, 1)));
}

TensorElement r12_delta_adbc(const Builder& g, const QTools& t, int k, int l) {
  const Scalar& r = t.r;
  return tp(g.mono(k + 1, l, 0, 1), g.mono(k + 1, l, 1)) -
         tp(g.mono(k, l + 1, 1), g.mono(k, l + 1, 0, 1)) +
         tp(g.mono(k, l, 1, 1), g.mono(k + 1, l + 1)) +
         tp(g.mono(k + 1, l + 1), g.mono(k, l, 1, 1)) +
         (t.qp(l + 1) * t.f(k + 1) - t.f(l + 1)) / t.q1() *
             tp(g.mono(k, l, 1, 1), g.mono(k, l, 1, 1)) +
         r * t.qp(2) / t.q2() * (t.f(l) - t.qp(l + 1) * t.f(k)) *
             tp(g.mono(k + 1, l, 0, 1), g.mono(k, l + 1, 0, 1)) -
         r * t.qp(2) * t.f(l) / t.q2() * tp(g.mono(k + 1, l, 0, 1), g.mono(k + 2, l - 1, 0, 1)) +
         r * t.qp(2) * t.qp(l + 1) * t.f(k) / t.q2() *
             tp(g.mono(k - 1, l + 2, 0, 1), g.mono(k, l + 1, 0, 1));
}

CheckReport r12_delta_family(const Params& p, int N, Family family) {
  Presentation pres(CaseId::r12, Framework::unbraided, p);
  Coproduct cop(pres);
  Builder g(pres);
  QTools t{p.q, p.r};
  Checker chk(p, CaseId::r12, N);
  int m = (family == Family::b || family == Family::bc) ? 1 : 0;
  int n = (family == Family::c || family == Family::bc) ? 1 : 0;
  for (int k = 0; k <= N; ++k)
    for (int l = 0; l <= N; ++l) {
      TensorElement rhs;
      switch (family) {
        case Family::plain: rhs = r12_delta_ad(g, t, k, l); break;
        case Family::b: rhs = r12_delta_adb(g, t, k, l); break;
        case Family::c: rhs = r12_delta_adc(g, t, k, l); break;
        case Family::bc: rhs = r12_delta_adbc(g, t, k, l); break;
      }
      chk.tensor(cop, "Delta(" + pres.to_string(GroupElement(group_monomial(k, l, m, n))) + ")",
                 cop.delta(group_monomial(k, l, m, n)) - rhs);
    }
  return chk.finish();
}

CheckReport r12_lemma2(const Params& p, int N) {
  Presentation pres(CaseId::r12, Framework::unbraided, p);
  Builder g(pres);
  QTools t{p.q, p.r};
  const Scalar& r = t.r;
  const Scalar one(1);
  Checker chk(p, CaseId::r12, N);
  // Tails after each a^k d^l factor: 0 none, 1 b, 2 c, 3 bc.
  auto tail = [](int code) -> std::pair<int, int> { return {code & 1, code >> 1}; };
  struct Formula {
    int left, right;
  };
  const Formula forms[] = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}, {1, 1}, {1, 2}, {2, 1},
                           {3, 0}, {0, 3}, {1, 3}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}};
  for (int k = 0; k <= N; ++k)
    for (int l = 0; l <= N; ++l)
      for (int k2 = 0; k2 <= N; ++k2)
        for (int l2 = 0; l2 <= N; ++l2) {
          const int K = k + k2, L = l + l2;
          const Scalar sg = t.sign(l2);
          for (const Formula& f : forms) {
            auto [m1, n1] = tail(f.left);
            auto [m2, n2] = tail(f.right);
            GroupElement lhs = g.word({{kLa, k}, {kLd, l}, {kLb, m1}, {kLc, n1},
                                       {kLa, k2}, {kLd, l2}, {kLb, m2}, {kLc, n2}});
            GroupElement rhs;
            switch (f.left * 4 + f.right) {
              case 0:  // a^k d^l a^k' d^l'
                rhs = g.mono(K, L) + t.qp(l2) * t.f(k2) * t.f(l) / t.q1() * g.mono(K - 1, L - 1, 1, 1);
                break;
              case 1:
                rhs = g.mono(K, L, 1) +
                      r * t.qp(2) / t.q2() * t.qp(l2) * t.f(k2) * t.f(l) * g.sq(K - 1, L - 1, 0, 1);
                break;
              case 2: rhs = g.mono(K, L, 0, 1); break;
              case 4:
                rhs = sg * (g.mono(K, L, 1) +
                            r * t.qp(2) / t.q2() * t.qp(l2) * t.f(k2) * t.f(l) *
                                g.sq(K - 1, L - 1, 0, 1) -
                            r * t.q / t.q1() * t.f(l2) * g.mono(K + 1, L - 1, 0, 1) -
                            r * t.qp(l2 + 1) / t.q1() * t.f(k2) * g.mono(K - 1, L + 1, 0, 1));
                break;
              case 8: rhs = sg * t.qp(k2 + l2) * g.mono(K, L, 0, 1); break;
              case 5:
                rhs = sg * (r * t.q / (t.q + one) * g.sq(K, L) +
                            r * t.q * t.f(L) * g.mono(K + 1, L - 1, 1, 1) -
                            r * t.qp(2) / t.q1() * t.f(l2) * g.mono(K + 1, L - 1, 1, 1) -
                            r * t.qp(2) / t.q1() * t.qp(l2) * t.f(k2) * g.mono(K - 1, L + 1, 1, 1) +
                            r * t.qp(3) / t.q2() * t.qp(l2) * t.f(k2) * t.f(l) *
                                g.sq(K - 1, L - 1, 1, 1));
                break;
              case 6: rhs = sg * g.mono(K, L, 1, 1); break;
              case 9: rhs = sg * t.qp(k2 + l2 + 1) * g.mono(K, L, 1, 1); break;
              case 12: rhs = t.qp(k2 + l2) * g.mono(K, L, 1, 1); break;
              case 3: rhs = g.mono(K, L, 1, 1); break;
              case 7: rhs = sg * r * t.q / (t.q + one) * g.sq(K, L, 0, 1); break;
              case 13: rhs = r * t.qp(2) / (t.q + one) * t.qp(k2 + l2) * g.sq(K, L, 0, 1); break;
              default: break;  // the products ending in c twice vanish
            }
            static const char* names[] = {"", "b", "c", "bc"};
            chk.element(pres.algebra(),
                        "a^" + std::to_string(k) + "d^" + std::to_string(l) + names[f.left] +
                            " a^" + std::to_string(k2) + "d^" + std::to_string(l2) + names[f.right],
                        lhs - rhs);
          }
        }
  return chk.finish();
}

// <X, a^k d^l b^m c^n> for the commutators of the dual algebra.
struct Functional {
  const char* name;
  const char* text;
};

const Functional kBrackets[] = {
    {"{B,C}", "B*C + C*B"}, {"B^2", "B*B"},         {"C^2", "C*C"},
    {"[A,B]", "A*B - B*A"}, {"[A,C]", "A*C - C*A"}, {"[D,B]", "D*B - B*D"},
    {"[D,C]", "D*C - C*D"}, {"[A,D]", "A*D - D*A"}};

std::string on(const char* name, const Presentation& pres, const GroupMonomial& x) {
  return std::string("<") + name + ", " + pres.algebra().to_string(x) + ">";
}

CheckReport r12_pairings(const Params& p, int N) {
  Presentation pres(CaseId::r12, Framework::unbraided, p);
  Pairing pg(pres);
  QTools t{p.q, p.r};
  Checker chk(p, CaseId::r12, N);
  for (int k = 0; k <= N; ++k)
    for (int l = 0; l <= N; ++l) {
      const int n = k + l;
      for (int m = 0; m <= 1; ++m)
        for (int c = 0; c <= 1; ++c) {
          GroupMonomial x = group_monomial(k, l, m, c);
          const int t_code = m + 2 * c;
          for (const Functional& f : kBrackets) {
            std::string name = f.name;
            Scalar expected;
            if (t_code == 0 && name == "{B,C}") expected = t.f(n) / t.q1();
            if (t_code == 0 && name == "C^2")
              expected = -t.r * t.qp(2) * t.f(n) * t.f(n - 1) / (t.q2() * t.q1());
            if (t_code == 1 && name == "[A,B]") expected = 1;
            if (t_code == 1 && name == "[D,B]") expected = -1;
            if (t_code == 2 && name == "[A,C]") expected = -1;
            if (t_code == 2 && name == "[D,C]") expected = 1;
            if (t_code == 1 && name == "[A,C]") expected = -Scalar(2) * t.r * t.qp(2) * t.f(n) / t.q2();
            if (t_code == 1 && name == "[D,C]") expected = Scalar(2) * t.r * t.qp(2) * t.f(n) / t.q2();
            chk.scalar(on(f.name, pres, x), pg.pair(parse_dual(f.text, p), x), expected);
          }
          // Powers of A and D, K and the shifted KB.
          if (t_code == 0) {
            for (int e = 1; e <= 3; ++e) {
              std::string ae = "A", de = "D";
              for (int i = 1; i < e; ++i) ae += "*A", de += "*D";
              chk.scalar(on(ae.c_str(), pres, x), pg.pair(parse_dual(ae, p), x), Scalar(k).pow(e));
              chk.scalar(on(de.c_str(), pres, x), pg.pair(parse_dual(de, p), x), Scalar(l).pow(e));
            }
            chk.scalar(on("K", pres, x), pg.pair(parse_dual("K", p), x), t.qp(n));
          }
          if (t_code == 1)
            chk.scalar(on("K*B/q", pres, x), pg.pair(parse_dual("K*B/q", p), x), t.qp(n));
        }
    }
  return chk.finish();
}

// <Delta(X), x (x) y> = <X, x y> over PBW pairs, against a printed table.
template <class Table>
void coproduct_pairings(Checker& chk, const Presentation& pres, const Params& p, int N,
                        Table expected) {
  Pairing pg(pres);
  const char* gens[] = {"A", "B", "C", "D"};
  std::vector<DualElement> dual;
  for (const char* x : gens) dual.push_back(parse_dual(x, p));
  std::vector<GroupMonomial> basis;
  for (int k = 0; k <= N; ++k)
    for (int l = 0; l <= N; ++l)
      for (int code = 0; code < 4; ++code) basis.push_back(group_monomial(k, l, code & 1, code >> 1));
  for (const GroupMonomial& x : basis)
    for (const GroupMonomial& y : basis) {
      GroupElement xy = pres.mul(GroupElement(x), GroupElement(y));
      for (int g = 0; g < 4; ++g)
        chk.scalar(std::string("<Delta(") + gens[g] + "), " + pres.algebra().to_string(x) +
                       " (x) " + pres.algebra().to_string(y) + ">",
                   pg.pair(dual[g], xy), expected(g, x, y));
    }
}

int tcode(const GroupMonomial& x) { return x.e[kLb] + 2 * x.e[kLc]; }

CheckReport r12_coproduct_pairings(const Params& p, int N) {
  Presentation pres(CaseId::r12, Framework::unbraided, p);
  QTools t{p.q, p.r};
  Checker chk(p, CaseId::r12, N);
  coproduct_pairings(chk, pres, p, N, [&](int g, const GroupMonomial& x, const GroupMonomial& y) {
    const int tx = tcode(x), ty = tcode(y);
    const int k = x.e[kLa], l = x.e[kLd], k2 = y.e[kLa], l2 = y.e[kLd];
    const Scalar sg = t.sign(l2);
    const Scalar ab = Scalar(2) * t.r * t.q / (t.q + Scalar(1));
    switch (g) {
      case 0:
        if (tx == 0 && ty == 0) return Scalar(k + k2);
        if (tx == 1 && ty == 1) return sg * ab;
        break;
      case 1:
        if (tx == 0 && ty == 1) return Scalar(1);
        if (tx == 1 && ty == 0) return sg;
        break;
      case 2:
        if (tx == 0 && ty == 2) return Scalar(1);
        if (tx == 2 && ty == 0) return sg * t.qp(k2 + l2);
        if (tx == 1 && ty == 0) return -sg * t.r * t.q * t.f(k2 + l2) / t.q1();
        break;
      case 3:
        if (tx == 0 && ty == 0) return Scalar(l + l2);
        if (tx == 1 && ty == 1) return -sg * ab;
        break;
    }
    return Scalar();
  });
  return chk.finish();
}

// ---------------------------------------------------------------------------
// A(1,1).

WordSum letter_sum(const Scalar& ca, const Scalar& cd) {
  WordSum w;
  w.add(Word{kLa}, ca);
  w.add(Word{kLd}, cd);
  return w;
}

WordSum power(const WordSum& x, int n) {
  WordSum out(Word{}, Scalar(1));
  for (int i = 0; i < n; ++i) out = out * x;
  return out;
}

CheckReport r11_reorder(const Params& p, int N) {
  Presentation pres(CaseId::r11, Framework::unbraided, p);
  const Scalar &r = p.r, &s = p.s;
  const Scalar half = Scalar::rational(1, 2);
  Checker chk(p, CaseId::r11, N);
  WordSum bpc = letter_sum(0, 0), bmc = letter_sum(0, 0);
  bpc.add(Word{kLb}, 1);
  bpc.add(Word{kLc}, 1);
  bmc.add(Word{kLb}, 1);
  bmc.add(Word{kLc}, -1);
  for (int k = 0; k <= N; ++k)
    for (int l = 0; l <= N; ++l) {
      WordSum plus = power(letter_sum(r, -s), k) * power(letter_sum(s, -r), l) * bpc;
      WordSum minus = power(letter_sum(r, s), k) * power(letter_sum(-s, -r), l) * bmc;
      GroupElement xb = pres.normalize(plus + minus) * half;
      GroupElement xc = pres.normalize(plus - minus) * half;
      Word ad(k, kLa);
      ad.insert(ad.end(), l, kLd);
      Word bw{kLb}, cw{kLc};
      bw.insert(bw.end(), ad.begin(), ad.end());
      cw.insert(cw.end(), ad.begin(), ad.end());
      chk.element(pres.algebra(), "b a^" + std::to_string(k) + "d^" + std::to_string(l),
                  pres.normalize(WordSum(bw)) - xb);
      chk.element(pres.algebra(), "c a^" + std::to_string(k) + "d^" + std::to_string(l),
                  pres.normalize(WordSum(cw)) - xc);
    }
  return chk.finish();
}

CheckReport r11_coproduct_pairings(const Params& p, int N) {
  Presentation pres(CaseId::r11, Framework::unbraided, p);
  const Scalar& q = p.q;
  const Scalar quarter = Scalar::rational(1, 4), half = Scalar::rational(1, 2);
  Checker chk(p, CaseId::r11, N);
  coproduct_pairings(chk, pres, p, N, [&](int g, const GroupMonomial& x, const GroupMonomial& y) {
    const int tx = tcode(x), ty = tcode(y);
    const int k = x.e[kLa], l = x.e[kLd], k2 = y.e[kLa], l2 = y.e[kLd];
    const Scalar sg = (l2 % 2) ? Scalar(-1) : Scalar(1);
    const Scalar plus = q.pow(k2 + l2) + q.pow(-k2 - l2);
    const Scalar minus = q.pow(k2 + l2) - q.pow(-k2 - l2);
    const Scalar dq = q - q.inverse();
    const bool same = (tx == 1 && ty == 1) || (tx == 2 && ty == 2);
    const bool mixed = (tx == 1 && ty == 2) || (tx == 2 && ty == 1);
    switch (g) {
      case 0:
      case 3: {
        const Scalar flip = g == 0 ? Scalar(1) : Scalar(-1);
        if (tx == 0 && ty == 0) return Scalar(g == 0 ? k + k2 : l + l2);
        if (same) return flip * quarter * dq * sg * plus;
        if (mixed) return -flip * quarter * dq * sg * minus;
        break;
      }
      case 1:
        if (tx == 0 && ty == 1) return Scalar(1);
        if (tx == 1 && ty == 0) return half * sg * plus;
        if (tx == 2 && ty == 0) return -half * sg * minus;
        break;
      case 2:
        if (tx == 0 && ty == 2) return Scalar(1);
        if (tx == 2 && ty == 0) return half * sg * plus;
        if (tx == 1 && ty == 0) return -half * sg * minus;
        break;
    }
    return Scalar();
  });
  return chk.finish();
}

// ---------------------------------------------------------------------------
// Appendix: coefficient polynomials of Delta(a^k d^l t) in A(1,1).

int tag(const char* t) {
  return 8 * (t[0] - '0') + 4 * (t[1] - '0') + 2 * (t[3] - '0') + (t[4] - '0');
}

struct Polys {
  std::array<CoeffPoly, 16> v;
  const CoeffPoly& operator[](const char* t) const { return v[tag(t)]; }
};

const std::array<int, 4> kNone{0, 0, 0, 0}, kA1{1, 0, 0, 0}, kD1{0, 1, 0, 0},
    kA2{0, 0, 1, 0}, kD2{0, 0, 0, 1}, kA1D2{1, 0, 0, 1}, kA2D1{0, 1, 1, 0};

class Appendix {
 public:
  explicit Appendix(const Params& p)
      : p(p), pres(CaseId::r11, Framework::unbraided, p), pg(pres), r(p.r), s(p.s) {
    X1 = cp_var(a1) * cp_var(a1) - cp_var(d1) * cp_var(d1);
    X2 = cp_var(a2) * cp_var(a2) - cp_var(d2) * cp_var(d2);
    for (const Functional& f : kBrackets) brackets.emplace(f.name, parse_dual(f.text, p));
  }

  const Polys& polys(int k, int l, Family f = Family::plain) {
    auto key = std::make_tuple(k, l, static_cast<int>(f));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, Polys{extract_coeff_polys(pg.coproduct(), k, l, f)}).first->second;
  }

  Scalar ones(const CoeffPoly& x, std::array<int, 4> d = kNone) const {
    return eval_coeff(x, EvalPoint::ones(), d);
  }
  Scalar meps(const CoeffPoly& x, int e1, int e2) const {
    return eval_coeff(x, EvalPoint::meps(p.q, e1, e2));
  }
  Scalar pair(const char* bracket, const GroupMonomial& x) const {
    return pg.pair(brackets.at(bracket), x);
  }
  CoeffPoly v(int i) const { return cp_var(i); }
  CoeffPoly c(const Scalar& x) const { return cp_const(x); }

  const Params& p;
  Presentation pres;
  Pairing pg;
  Scalar r, s;
  CoeffPoly X1, X2;
  std::map<std::string, DualElement> brackets;
  std::map<std::tuple<int, int, int>, Polys> cache;
};

const Scalar kHalf = Scalar::rational(1, 2), kQuarter = Scalar::rational(1, 4);

// (q^2n - 1)/(q^2 - 1) and (q^-2n - 1)/(q^-2 - 1).
Scalar up(const Scalar& q, int n) { return (q.pow(2 * n) - 1) / (q.pow(2) - 1); }
Scalar down(const Scalar& q, int n) { return (q.pow(-2 * n) - 1) / (q.pow(-2) - 1); }

const std::pair<int, int> kEps[] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};

CheckReport lemma_a1(const Params& p, int N) {
  Appendix ap(p);
  Checker chk(p, CaseId::r11, N);
  const Scalar& q = p.q;
  for (int k = 0; k <= N; ++k)
    for (int l = 0; l <= N; ++l) {
      const Polys& D = ap.polys(k, l);
      const int n = k + l;
      Scalar sum = up(q, n) + down(q, n);
      chk.scalar("D10,01 " + kl(k, l), ap.ones(D["10,01"]), kQuarter * (sum + Scalar(2 * (k - l))));
      chk.scalar("D01,10 " + kl(k, l), ap.ones(D["01,10"]), kQuarter * (sum - Scalar(2 * (k - l))));
      Scalar diag = -kQuarter * (up(q, n) - down(q, n));
      chk.scalar("D01,01 " + kl(k, l), ap.ones(D["01,01"]), diag);
      chk.scalar("D10,10 " + kl(k, l), ap.ones(D["10,10"]), diag);
    }
  return chk.finish();
}

CheckReport lemma_a2(const Params& p, int N) {
  Appendix ap(p);
  Checker chk(p, CaseId::r11, N);
  for (int k = 0; k <= N; ++k)
    for (int l = 0; l <= N; ++l) {
      const Polys& D = ap.polys(k, l);
      for (int idx = 0; idx < 16; ++idx) {
        if (!(((idx >> 3) + (idx >> 2) + (idx >> 1) + idx) & 1)) continue;
        std::string name = "D" + std::to_string(idx >> 3 & 1) + std::to_string(idx >> 2 & 1) + "," +
                           std::to_string(idx >> 1 & 1) + std::to_string(idx & 1) + " " + kl(k, l);
        chk.scalar(name + " at ONES", ap.ones(D.v[idx]), 0);
        for (auto [e1, e2] : kEps)
          chk.scalar(name + " at MEPS(" + std::to_string(e1) + "," + std::to_string(e2) + ")",
                     ap.meps(D.v[idx], e1, e2), 0);
      }
    }
  return chk.finish();
}

CheckReport lemma_a3(const Params& p, int N) {
  Appendix ap(p);
  Checker chk(p, CaseId::r11, N);
  const std::pair<const char*, std::array<int, 4>> items[] = {
      {"00,01", kA1}, {"00,10", kA1}, {"01,00", kA2}, {"10,00", kA2},
      {"00,01", kD1}, {"00,10", kD1}, {"01,00", kD2}, {"10,00", kD2}};
  static const char* var_names[] = {"a1", "d1", "a2", "d2"};
  for (int k = 0; k <= N; ++k)
    for (int l = 0; l <= N; ++l) {
      const Polys& D = ap.polys(k, l);
      for (const auto& [t, d] : items) {
        int v = 0;
        while (d[v] == 0) ++v;
        chk.scalar(std::string("d/d") + var_names[v] + " D" + t + " " + kl(k, l),
                   ap.ones(D[t], d), 0);
      }
    }
  return chk.finish();
}

CheckReport lemma_a4(const Params& p, int N) {
  Appendix ap(p);
  Checker chk(p, CaseId::r11, N);
  for (int k = 0; k <= N; ++k)
    for (int l = 0; l <= N; ++l) {
      const CoeffPoly& D = ap.polys(k, l)["00,00"];
      chk.scalar("d/da1 D00,00 " + kl(k, l), ap.ones(D, kA1), k);
      chk.scalar("d/da2 D00,00 " + kl(k, l), ap.ones(D, kA2), k);
      chk.scalar("d/dd1 D00,00 " + kl(k, l), ap.ones(D, kD1), l);
      chk.scalar("d/dd2 D00,00 " + kl(k, l), ap.ones(D, kD2), l);
    }
  return chk.finish();
}

CheckReport meps_identity(const Params& p, int N) {
  Appendix ap(p);
  Checker chk(p, CaseId::r11, N);
  for (int k = 0; k <= N; ++k)
    for (int l = 0; l <= N; ++l)
      for (auto [e1, e2] : kEps)
        chk.scalar("D00,00 at MEPS(" + std::to_string(e1) + "," + std::to_string(e2) + ") " + kl(k, l),
                   ap.meps(ap.polys(k, l)["00,00"], e1, e2), p.q.pow(-(k + l) * (e1 + e2)));
  return chk.finish();
}

CheckReport recursions(const Params& p, int N) {
  Appendix ap(p);
  Checker chk(p, CaseId::r11, N);
  const Scalar &r = ap.r, &s = ap.s, &q = p.q;
  const CoeffPoly a1a2 = ap.v(a1) * ap.v(a2);
  const CoeffPoly& X1 = ap.X1;
  const CoeffPoly& X2 = ap.X2;
  const Scalar s8 = s / Scalar(8), s16 = s * s / Scalar(16);
  for (int k = 0; k < N; ++k)
    for (int l = 0; l <= N; ++l) {
      const Polys& D = ap.polys(k, l);
      const Polys& D1 = ap.polys(k + 1, l);
      // Polynomial recursions in k.
      using Sum = std::function<CoeffPoly(int, int)>;
      auto step = [&](const char* t, const CoeffPoly& outside, const Sum& inner) {
        CoeffPoly rhs = a1a2 * D[t];
        CoeffPoly sum;
        for (auto [e1, e2] : kEps) sum = sum + cp_twist(inner(e1, e2), e1, e2, r, s);
        rhs = rhs + outside * sum;
        chk.poly(std::string("D") + t + " at k+1, " + kl(k, l), D1[t] - rhs);
      };
      step("00,00", s16 * (X1 * X2), [&](int e1, int e2) {
        return Scalar(e2) * D["10,10"] + D["10,01"] + Scalar(e1 * e2) * D["01,10"] +
               Scalar(e1) * D["01,01"];
      });
      const CoeffPoly one = ap.c(1);
      step("10,10", one, [&](int e1, int e2) {
        return Scalar(e2) * kQuarter * D["00,00"] + Scalar(e1 * e2) * s8 * (X1 * D["11,00"]) +
               s8 * (X2 * D["00,11"]) + Scalar(e1) * s16 * (X1 * X2 * D["11,11"]);
      });
      step("01,01", one, [&](int e1, int e2) {
        return Scalar(e1) * kQuarter * D["00,00"] + Scalar(e1 * e2) * s8 * (X2 * D["00,11"]) +
               s8 * (X1 * D["11,00"]) + Scalar(e2) * s16 * (X1 * X2 * D["11,11"]);
      });
      step("01,10", one, [&](int e1, int e2) {
        return Scalar(e1 * e2) * kQuarter * D["00,00"] + Scalar(e2) * s8 * (X1 * D["11,00"]) +
               Scalar(e1) * s8 * (X2 * D["00,11"]) + s16 * (X1 * X2 * D["11,11"]);
      });
      step("10,01", one, [&](int e1, int e2) {
        return kQuarter * D["00,00"] + Scalar(e1) * s8 * (X1 * D["11,00"]) +
               Scalar(e2) * s8 * (X2 * D["00,11"]) + Scalar(e1 * e2) * s16 * (X1 * X2 * D["11,11"]);
      });
      step("00,01", X1, [&](int e1, int e2) {
        return s8 * D["10,00"] + Scalar(e1) * s8 * D["01,00"] +
               Scalar(e2) * s16 * (X2 * D["10,11"]) + Scalar(e1 * e2) * s16 * (X2 * D["01,11"]);
      });
    }
  // Evaluated recursions in k and in l.
  for (int k = 0; k < N; ++k)
    for (int l = 0; l < N; ++l) {
      const Polys& D = ap.polys(k, l);
      const Polys& Dk = ap.polys(k + 1, l);
      const Polys& Dl = ap.polys(k, l + 1);
      std::array<Scalar, 4> m;
      Scalar sum0, sum1, sum2, sum12;
      for (int i = 0; i < 4; ++i) {
        auto [e1, e2] = kEps[i];
        m[i] = ap.meps(D["00,00"], e1, e2);
        sum0 += m[i];
        sum1 += Scalar(e1) * m[i];
        sum2 += Scalar(e2) * m[i];
        sum12 += Scalar(e1 * e2) * m[i];
        Scalar factor = q.pow(-e1 - e2);
        std::string at = " at MEPS(" + std::to_string(e1) + "," + std::to_string(e2) + ") ";
        chk.scalar("D00,00 k+1" + at + kl(k, l), ap.meps(Dk["00,00"], e1, e2), factor * m[i]);
        chk.scalar("D00,00 l+1" + at + kl(k, l), ap.meps(Dl["00,00"], e1, e2), factor * m[i]);
      }
      auto both = [&](const char* t, const Scalar& dk, const Scalar& dl) {
        Scalar base = ap.ones(D[t]);
        chk.scalar(std::string("D") + t + " k+1 " + kl(k, l), ap.ones(Dk[t]), base + kQuarter * dk);
        chk.scalar(std::string("D") + t + " l+1 " + kl(k, l), ap.ones(Dl[t]), base + kQuarter * dl);
      };
      both("10,01", sum0, sum12);
      both("01,10", sum12, sum0);
      both("01,01", sum1, sum2);
      both("10,10", sum2, sum1);
      // With the MEPS values inserted.
      const int n = k + l;
      Scalar p2 = q.pow(2 * n), m2 = q.pow(-2 * n);
      chk.scalar("D10,01 k+1 closed " + kl(k, l), ap.ones(Dk["10,01"]),
                 ap.ones(D["10,01"]) + kQuarter * (p2 + m2 + Scalar(2)));
      chk.scalar("D01,10 k+1 closed " + kl(k, l), ap.ones(Dk["01,10"]),
                 ap.ones(D["01,10"]) + kQuarter * (p2 + m2 - Scalar(2)));
      chk.scalar("D01,01 k+1 closed " + kl(k, l), ap.ones(Dk["01,01"]),
                 ap.ones(D["01,01"]) - kQuarter * (p2 - m2));
      chk.scalar("D10,10 k+1 closed " + kl(k, l), ap.ones(Dk["10,10"]),
                 ap.ones(D["10,10"]) - kQuarter * (p2 - m2));
    }
  return chk.finish();
}

// The printed beta, gamma and mu tables, from the plain polynomials D.
using Table = std::vector<std::pair<const char*, CoeffPoly>>;

Table beta_table(const Appendix& ap, const Polys& D, bool corrected) {
  const Scalar &r = ap.r, &s = ap.s;
  const CoeffPoly A1 = ap.v(a1), E1 = ap.v(d1), A2 = ap.v(a2), E2 = ap.v(d2);
  const CoeffPoly &X1 = ap.X1, &X2 = ap.X2;
  const Scalar h = kHalf;
  return {
      {"00,00", h * s * (A1 * X2 * D["00,10"]) + h * s * (E2 * X1 * D["10,00"])},
      {"10,00", E2 * D["00,00"] + h * s * r * (A1 * X2 * D["10,10"]) -
                    h * s * s * (E1 * X2 * D["01,10"])},
      {"01,00", h * r * s * (A1 * X2 * D["01,10"]) - h * s * s * (E1 * X2 * D["10,10"]) +
                    (corrected ? h * s : Scalar(1)) * (E2 * X1 * D["11,00"])},
      {"00,10", A1 * D["00,00"] + h * s * s * (A2 * X1 * D["10,01"]) -
                    h * r * s * (E2 * X1 * D["10,10"])},
      {"00,01", h * s * (A1 * X2 * D["00,11"]) + h * s * s * (A2 * X1 * D["10,10"]) -
                    h * r * s * (E2 * X1 * D["10,01"])},
      {"10,10", r * (A1 * D["10,00"]) - s * (E1 * D["01,00"]) + s * (A2 * D["00,01"]) -
                    r * (E2 * D["00,10"])},
      {"01,01", h * r * s * (A1 * X2 * D["01,11"]) - h * s * s * (E1 * X2 * D["10,11"]) +
                    h * s * s * (A2 * X1 * D["11,10"]) - h * r * s * (E2 * X1 * D["11,01"])},
      {"10,01", s * (A2 * D["00,10"]) - r * (E2 * D["00,01"]) +
                    h * r * s * (A1 * X2 * D["10,11"]) - h * s * s * (E1 * X2 * D["01,11"])},
      {"01,10", r * (A1 * D["01,00"]) - s * (E1 * D["10,00"]) +
                    h * s * s * (A2 * X1 * D["11,01"]) - h * r * s * (E2 * X1 * D["11,10"])},
  };
}

Table gamma_table(const Appendix& ap, const Polys& D, bool corrected) {
  const Scalar &r = ap.r, &s = ap.s;
  const CoeffPoly A1 = ap.v(a1), E1 = ap.v(d1), A2 = ap.v(a2), E2 = ap.v(d2);
  const CoeffPoly &X1 = ap.X1, &X2 = ap.X2;
  const Scalar h = kHalf;
  return {
      {"00,00", h * s * (A2 * X1 * D["01,00"]) + h * s * (E1 * X2 * D["00,01"])},
      {"10,00", h * s * s * (A1 * X2 * D["01,01"]) - h * r * s * (E1 * X2 * D["10,01"]) +
                    (corrected ? h * s : h * s * s) * (A2 * X1 * D["11,00"])},
      {"01,00", A2 * D["00,00"] + h * s * s * (A1 * X2 * D["10,01"]) -
                    h * r * s * (E1 * X2 * D["01,01"])},
      {"00,10", (corrected ? h * s : h * s * s) * (E1 * X2 * D["00,11"]) +
                    h * r * s * (A2 * X1 * D["01,10"]) -
                    h * s * s * (E2 * X1 * D["01,01"])},
      {"00,01", E1 * D["00,00"] + h * r * s * (A2 * X1 * D["01,01"]) -
                    h * s * s * (E2 * X1 * D["01,10"])},
      {"10,10", h * s * s * (A1 * X2 * D["01,11"]) - h * r * s * (E1 * X2 * D["10,11"]) +
                    h * r * s * (A2 * X1 * D["11,10"]) - h * s * s * (E2 * X1 * D["11,01"])},
      {"01,01", A1 * D["10,00"] - r * (E1 * D["01,00"]) + r * (A2 * D["00,01"]) -
                    s * (E2 * D["00,10"])},
      {"10,01", h * s * s * (A1 * D["01,00"]) - h * r * s * (E1 * D["10,00"]) +
                    h * r * s * (A2 * X1 * D["11,01"]) - h * s * s * (E2 * X1 * D["11,10"])},
      {"01,10", h * r * s * (A2 * D["00,10"]) - h * s * s * (E2 * D["00,01"]) +
                    h * s * s * (A1 * X2 * D["10,11"]) - h * r * s * (E1 * X2 * D["01,11"])},
  };
}

Table mu_table(const Appendix& ap, const Polys& D, bool corrected) {
  const Scalar &r = ap.r, &s = ap.s;
  const CoeffPoly A1 = ap.v(a1), E1 = ap.v(d1), A2 = ap.v(a2), E2 = ap.v(d2);
  const CoeffPoly &X1 = ap.X1, &X2 = ap.X2;
  const CoeffPoly P1 = A1 * A1 + E1 * E1, P2 = A2 * A2 + E2 * E2;
  const CoeffPoly cross = A1 * A1 * A2 * A2 - E1 * E1 * E2 * E2;
  const Scalar h = kHalf, f = kQuarter, rs2 = r * r + s * s;
  return {
      {"00,00", f * s * s * (A1 * E1 * X2 * X2 * D["00,11"]) +
                    f * r * s * s * (A1 * A2 * X1 * X2 * D["01,10"]) -
                    f * r * s * s * (E1 * E2 * X1 * X2 * D["10,01"]) +
                    f * s * s * (A2 * E2 * X1 * X1 * D["11,00"])},
      {"10,00", h * s * (A2 * E2 * X1 * D["01,00"]) - h * r * s * s * (E1 * A2 * X2 * D["00,10"]) +
                    h * s * r * r * (E1 * E2 * X2 * D["00,01"]) +
                    f * r * s * s * s * (P1 * X2 * X2 * D["01,11"]) -
                    f * s * s * rs2 * (A1 * E1 * X2 * X2 * D["10,11"]) -
                    f * r * s * s * s * (A1 * E2 * X1 * X2 * D["11,01"]) +
                    f * r * r * s * s * (A1 * A2 * X1 * X2 * D["11,10"])},
      {"01,00", h * s * (A2 * E2 * X1 * D["10,00"]) + h * s * r * r * (A1 * A2 * X2 * D["00,10"]) -
                    h * r * s * s * (A1 * E2 * X2 * D["00,01"]) -
                    f * s * s * rs2 * (A1 * E1 * X2 * X2 * D["01,11"]) +
                    f * r * s * s * s * (P1 * X2 * X2 * D["10,11"]) -
                    f * r * s * s * s * (E1 * A2 * X1 * X2 * D["11,10"]) +
                    f * r * r * s * s * (E1 * E2 * X1 * X2 * D["11,01"])},
      {"00,10", -h * r * s * s * (E1 * A2 * X1 * D["10,00"]) +
                    h * s * r * r * (A1 * A2 * X1 * D["01,00"]) + h * s * (A1 * E1 * X2 * D["00,01"]) -
                    f * r * s * s * s * (A1 * E2 * X1 * X2 * D["01,11"]) +
                    f * r * r * s * s * (E1 * E2 * X1 * X2 * D["10,11"]) -
                    f * s * s * rs2 * (A2 * E2 * X1 * X1 * D["11,10"]) +
                    f * r * s * s * s * (X1 * X1 * P2 * D["11,01"])},
      {"00,01", h * s * r * r * (E1 * E2 * X1 * D["10,00"]) -
                    h * r * s * s * (A1 * E2 * X1 * D["01,00"]) + h * s * (A1 * E1 * X2 * D["00,10"]) +
                    f * r * r * s * s * (A1 * A2 * X1 * X2 * D["01,11"]) -
                    f * r * s * s * s * (E1 * A2 * X1 * X2 * D["10,11"]) -
                    h * s * s * rs2 * (A2 * E2 * X1 * X1 * D["11,01"]) +
                    f * r * s * s * s * (X1 * X1 * P2 * D["11,10"])},
      {"10,10", h * r * s * (A1 * A2 * X1 * D["11,00"]) - h * r * s * (E1 * E2 * X2 * D["00,11"]) +
                    r * s * s * (cross * D["01,01"]) - h * s * rs2 * (A1 * E1 * X2 * D["10,01"]) -
                    h * s * rs2 * (A2 * E2 * X1 * D["01,10"])},
      {"01,01", h * r * s * (A1 * A2 * X2 * D["00,11"]) - h * r * s * (E1 * E2 * X1 * D["11,00"]) +
                    (corrected ? r * s * s : r * s) * (cross * D["10,10"]) -
                    h * s * rs2 * (A1 * E1 * X2 * D["01,10"]) -
                    h * s * rs2 * (A2 * E2 * X1 * D["10,01"])},
      {"10,01", -r * (E1 * E2 * D["00,00"]) + f * r * s * s * (A1 * A2 * X1 * X2 * D["11,11"]) +
                    r * s * s * (cross * D["01,10"]) - h * s * rs2 * (A1 * E1 * X2 * D["10,10"]) -
                    h * s * rs2 * (A2 * E2 * X1 * D["01,01"])},
      {"01,10", r * (A1 * A2 * D["00,00"]) - f * r * s * s * (E1 * E2 * X1 * X2 * D["11,11"]) +
                    r * s * s * (cross * D["10,01"]) - h * s * rs2 * (A2 * E2 * X1 * D["10,10"]) -
                    h * s * rs2 * (A1 * E1 * X2 * D["01,01"])},
  };
}

CheckReport family_table(const Params& p, int N, Family family, bool corrected) {
  Appendix ap(p);
  Checker chk(p, CaseId::r11, N);
  const char* name = family == Family::b ? "beta" : family == Family::c ? "gamma" : "mu";
  if (family == Family::bc) {
    // The coproduct of bc the table is built on.
    Builder g(ap.pres);
    const Scalar& r = ap.r;
    TensorElement dbc = tp(g.mono(1, 1), g.mono(0, 0, 1, 1)) + tp(g.mono(0, 0, 1, 1), g.mono(1, 1)) +
                        r * tp(g.word({{kLa, 1}, {kLc, 1}}), g.mono(1, 0, 1)) -
                        r * tp(g.word({{kLd, 1}, {kLb, 1}}), g.word({{kLd, 1}, {kLc, 1}}));
    chk.tensor(ap.pg.coproduct(), "Delta(bc)",
               ap.pg.coproduct().delta(group_monomial(0, 0, 1, 1)) - dbc);
  }
  for (int k = 0; k <= N; ++k)
    for (int l = 0; l <= N; ++l) {
      const Polys& D = ap.polys(k, l);
      const Polys& F = ap.polys(k, l, family);
      Table table = family == Family::b   ? beta_table(ap, D, corrected)
                    : family == Family::c ? gamma_table(ap, D, corrected)
                                          : mu_table(ap, D, corrected);
      for (const auto& [t, printed] : table)
        chk.poly(std::string(name) + t + " " + kl(k, l), F[t] - printed);
    }
  return chk.finish();
}

// Bracket pairings written through the coefficient polynomials, on a^k d^l.
CheckReport eval_rules(const Params& p, int N) {
  Appendix ap(p);
  Checker chk(p, CaseId::r11, N);
  for (int k = 0; k <= N; ++k)
    for (int l = 0; l <= N; ++l) {
      const Polys& D = ap.polys(k, l);
      GroupMonomial x = group_monomial(k, l);
      auto check = [&](const char* b, const Scalar& via_polys) {
        chk.scalar(on(b, ap.pres, x), ap.pair(b, x), via_polys);
      };
      check("{B,C}", ap.ones(D["10,01"]) + ap.ones(D["01,10"]));
      check("B^2", ap.ones(D["10,10"]));
      check("C^2", ap.ones(D["01,01"]));
      check("[A,B]", ap.ones(D["00,10"], kA1) - ap.ones(D["10,00"], kA2));
      check("[A,C]", ap.ones(D["00,01"], kA1) - ap.ones(D["01,00"], kA2));
      check("[D,B]", ap.ones(D["00,10"], kD1) - ap.ones(D["10,00"], kD2));
      check("[D,C]", ap.ones(D["00,01"], kD1) - ap.ones(D["01,00"], kD2));
      check("[A,D]", ap.ones(D["00,00"], kA1D2) - ap.ones(D["00,00"], kA2D1));
    }
  return chk.finish();
}

// Pairings on a^k d^l t: the engine value, the printed expression in the
// family polynomials F and, where printed, its reduction to the plain ones.
CheckReport eval_family(const Params& p, int N, Family family, bool corrected = false) {
  Appendix ap(p);
  Checker chk(p, CaseId::r11, N);
  const Scalar &r = ap.r, &s = ap.s;
  const Scalar two(2);
  for (int k = 0; k <= N; ++k)
    for (int l = 0; l <= N; ++l) {
      const Polys& D = ap.polys(k, l);
      const Polys& F = ap.polys(k, l, family);
      GroupMonomial x = group_monomial(k, l, family != Family::c, family != Family::b);
      auto O = [&](const char* t, std::array<int, 4> d = kNone) { return ap.ones(D[t], d); };
      auto G = [&](const char* t, std::array<int, 4> d = kNone) { return ap.ones(F[t], d); };
      auto check = [&](const char* b, const Scalar& expr, std::optional<Scalar> reduced) {
        Scalar value = ap.pair(b, x);
        chk.scalar(on(b, ap.pres, x) + " expression", value, expr);
        if (reduced) chk.scalar(on(b, ap.pres, x) + " reduced", value, *reduced);
      };
      const Scalar S = O("10,01") + O("01,10");
      const Scalar none_d = O("00,00");
      check("{B,C}", G("10,01") + G("01,10"), std::nullopt);
      check("B^2", G("10,10"), std::nullopt);
      check("C^2", G("01,01"), std::nullopt);
      const Scalar ad = G("00,00", kA1D2) - G("00,00", kA2D1);
      if (family == Family::b) {
        check("[A,B]", G("00,10", kA1) - G("10,00", kA2),
              s * s * S - two * r * s * O("10,10") + none_d + O("00,00", kA1) - O("00,00", kA2));
        check("[A,C]", G("00,01", kA1) - G("01,00", kA2), two * s * s * O("10,10") - r * s * S);
        check("[D,B]", G("00,10", kD1) - G("10,00", kD2),
              two * r * s * O("10,10") - s * s * S - none_d + O("00,00", kD1) - O("00,00", kD2));
        check("[D,C]", G("00,01", kD1) - G("01,00", kD2), r * s * S - two * s * s * O("10,10"));
        check("[A,D]", ad,
              s * (O("10,00") - O("00,10") - O("10,00", kA1) - O("10,00", kD1) + O("00,10", kA2) +
                   O("00,10", kD2)));
      } else if (family == Family::c) {
        check("[A,B]", G("00,10", kA1) - G("10,00", kA2), r * s * S - two * s * s * O("01,01"));
        check("[A,C]", G("00,01", kA1) - G("01,00", kA2),
              two * r * s * O("01,01") - s * s * S - none_d + O("00,00", kA1) - O("00,00", kA2));
        check("[D,B]", G("00,10", kD1) - G("10,00", kD2), two * s * s * O("01,01") - r * s * S);
        check("[D,C]", G("00,01", kD1) - G("01,00", kD2),
              s * s * S - two * r * s * O("01,01") + none_d + O("00,00", kD1) - O("00,00", kD2));
        check("[A,D]", ad,
              s * (O("01,00") - O("00,01") - O("00,01", kA1) - O("00,01", kD1) + O("01,00", kA2) +
                   O("01,00", kD2)));
      } else {
        const Scalar rs2 = r * s * s, sr2 = s * r * r;
        const Scalar odd = -rs2 * O("10,00") + sr2 * O("01,00") - rs2 * O("00,10") + sr2 * O("00,01");
        const Scalar odd2 = sr2 * O("10,00") - rs2 * O("01,00") + sr2 * O("00,10") - rs2 * O("00,01");
        check("[A,B]", G("00,10", kA1) - G("10,00", kA2), odd);
        check("[A,C]", G("00,01", kA1) - G("01,00", kA2), odd2);
        // Printed against a^k d^l c; the mu polynomials belong to a^k d^l bc.
        check("[D,B]", G("00,10", kD1) - G("10,00", kD2), -odd);
        check("[D,C]", G("00,01", kD1) - G("01,00", kD2), -odd2);
        check("[A,D]", ad, std::nullopt);
        Scalar second = (corrected ? r * s * s : Scalar(4) * r) * (O("10,01") - O("01,10"));
        chk.scalar("d2/da1dd2 mu00,00 " + kl(k, l), G("00,00", kA1D2), second);
        chk.scalar("d2/da2dd1 mu00,00 " + kl(k, l), G("00,00", kA2D1), second);
      }
    }
  return chk.finish();
}

// Printed values of the bracket pairings on a^k d^l t.
CheckReport pairing_values(const Params& p, int N, int which) {
  Appendix ap(p);
  Checker chk(p, CaseId::r11, N);
  const Scalar& q = p.q;
  for (int k = 0; k <= N; ++k)
    for (int l = 0; l <= N; ++l) {
      const int n = k + l;
      const Scalar plus = q.pow(2 * n) + q.pow(-2 * n), minus = q.pow(2 * n) - q.pow(-2 * n);
      auto expect = [&](const GroupMonomial& x, const char* b, const Scalar& v) {
        Scalar value = ap.brackets.count(b) ? ap.pair(b, x) : ap.pg.pair(parse_dual(b, p), x);
        chk.scalar(on(b, ap.pres, x), value, v);
      };
      switch (which) {
        case 0: {  // {B,C}, B^2, C^2 on a^k d^l
          GroupMonomial x = group_monomial(k, l);
          expect(x, "{B,C}", kHalf * (up(q, n) + down(q, n)));
          expect(x, "B^2", -kQuarter * (up(q, n) - down(q, n)));
          expect(x, "C^2", -kQuarter * (up(q, n) - down(q, n)));
          break;
        }
        case 1: {  // odd brackets on a^k d^l
          GroupMonomial x = group_monomial(k, l);
          for (const char* b : {"[A,B]", "[A,C]", "[D,B]", "[D,C]"}) expect(x, b, 0);
          break;
        }
        case 2:
          expect(group_monomial(k, l), "[A,D]", 0);
          break;
        case 3: {  // on a^k d^l b and a^k d^l c
          GroupMonomial xb = group_monomial(k, l, 1, 0), xc = group_monomial(k, l, 0, 1);
          expect(xb, "[A,C]", -kQuarter * minus);
          expect(xc, "[D,B]", -kQuarter * minus);
          expect(xc, "[A,C]", -kHalf - kQuarter * plus);
          expect(xb, "[D,B]", -kHalf - kQuarter * plus);
          expect(xb, "[A,B]", kHalf + kQuarter * plus);
          expect(xc, "[D,C]", kHalf + kQuarter * plus);
          expect(xc, "[A,B]", kQuarter * minus);
          expect(xb, "[D,C]", kQuarter * minus);
          for (const char* b : {"[A,D]", "{B,C}", "B^2", "C^2"}) {
            expect(xb, b, 0);
            expect(xc, b, 0);
          }
          break;
        }
        case 4: {  // on a^k d^l bc
          GroupMonomial x = group_monomial(k, l, 1, 1);
          for (const Functional& f : kBrackets) expect(x, f.name, 0);
          break;
        }
        case 5: {  // group-like exponentials
          GroupMonomial x = group_monomial(k, l);
          expect(x, "K", q.pow(n));
          std::string ad = "(A+D)";
          for (int e = 1; e <= 3; ++e) {
            chk.scalar("<" + ad + ", " + ap.pres.algebra().to_string(x) + ">",
                       ap.pg.pair(parse_dual(ad, p), x), Scalar(n).pow(e));
            ad += "*(A+D)";
          }
          expect(group_monomial(k, l, 1, 0), "K*B/q", q.pow(n));
          expect(group_monomial(k, l, 0, 1), "K*C/q", q.pow(n));
          break;
        }
      }
    }
  return chk.finish();
}

std::vector<ClosedFormCheck> build_checks() {
  using namespace std::placeholders;
  auto fam = [](Family f) { return [f](const Params& p, int N) { return r12_delta_family(p, N, f); }; };
  auto tab = [](Family f, bool fix = false) {
    return [f, fix](const Params& p, int N) { return family_table(p, N, f, fix); };
  };
  auto ev = [](Family f) { return [f](const Params& p, int N) { return eval_family(p, N, f); }; };
  auto val = [](int w) { return [w](const Params& p, int N) { return pairing_values(p, N, w); }; };
  return {
      {"closed.r12.lemma1", "coproduct of a^k and d^l in A(1,2)", CaseId::r12, 5, r12_lemma1},
      {"closed.r12.delta_ad", "coproduct of a^k d^l in A(1,2)", CaseId::r12, 4, fam(Family::plain)},
      {"closed.r12.delta_adc", "coproduct of a^k d^l c in A(1,2)", CaseId::r12, 4, fam(Family::c)},
      {"closed.r12.delta_adb", "coproduct of a^k d^l b in A(1,2)", CaseId::r12, 4, fam(Family::b)},
      {"closed.r12.delta_adbc", "coproduct of a^k d^l bc in A(1,2)", CaseId::r12, 4, fam(Family::bc)},
      {"closed.r12.lemma2", "reordering formulae in A(1,2)", CaseId::r12, 4, r12_lemma2},
      {"closed.r12.pairings", "non-vanishing bracket pairings in U(1,2)", CaseId::r12, 4,
       r12_pairings},
      {"closed.r12.coproduct_pairings", "<Delta(X), x (x) y> table for U(1,2)", CaseId::r12, 3,
       r12_coproduct_pairings},
      {"closed.r11.reorder", "(b +- c) a^k d^l in A(1,1)", CaseId::r11, 4, r11_reorder},
      {"closed.r11.coproduct_pairings", "<Delta(X), x (x) y> table for U(1,1)", CaseId::r11, 4,
       r11_coproduct_pairings},
      {"appendix.lemmaA1", "D10,01, D01,10, D01,01 = D10,10 at ONES", CaseId::r11, 4, lemma_a1},
      {"appendix.lemmaA2", "odd coefficient polynomials vanish at ONES and MEPS", CaseId::r11, 4,
       lemma_a2},
      {"appendix.lemmaA3", "first derivatives of the odd polynomials at ONES", CaseId::r11, 4,
       lemma_a3},
      {"appendix.lemmaA4", "first derivatives of D00,00 at ONES", CaseId::r11, 4, lemma_a4},
      {"appendix.meps", "D00,00 at MEPS = q^-(k+l)(e1+e2)", CaseId::r11, 4, meps_identity},
      {"appendix.recursions", "recursions in k and l for the coefficient polynomials",
       CaseId::r11, 4, recursions},
      {"appendix.beta", "beta table for Delta(a^k d^l b)", CaseId::r11, 4, tab(Family::b)},
      {"appendix.gamma", "gamma table for Delta(a^k d^l c)", CaseId::r11, 4, tab(Family::c)},
      {"appendix.mu", "mu table for Delta(a^k d^l bc)", CaseId::r11, 4, tab(Family::bc)},
      // One coefficient per table amended; diagnostics for the printed tables.
      {"appendix.beta.corrected", "beta table with the d2 X1 D11,00 term at s/2", CaseId::r11, 4,
       tab(Family::b, true)},
      {"appendix.gamma.corrected", "gamma table with the D11,00 and D00,11 terms at s/2",
       CaseId::r11, 4, tab(Family::c, true)},
      {"appendix.mu.corrected", "mu table with the D10,10 term of mu01,01 at r s^2", CaseId::r11, 4,
       tab(Family::bc, true)},
      {"appendix.eval_rules", "bracket pairings through coefficient polynomials", CaseId::r11, 4,
       eval_rules},
      {"appendix.eval_b", "bracket pairings on a^k d^l b via beta", CaseId::r11, 4, ev(Family::b)},
      {"appendix.eval_c", "bracket pairings on a^k d^l c via gamma", CaseId::r11, 4, ev(Family::c)},
      {"appendix.eval_bc", "bracket pairings on a^k d^l bc via mu", CaseId::r11, 4, ev(Family::bc)},
      {"appendix.eval_bc.corrected", "mixed second derivatives of mu00,00 at r s^2 (k-l)",
       CaseId::r11, 4, [](const Params& p, int N) { return eval_family(p, N, Family::bc, true); }},
      {"appendix.pairings_even", "<{B,C}>, <B^2>, <C^2> on a^k d^l", CaseId::r11, 4, val(0)},
      {"appendix.pairings_odd", "odd brackets vanish on a^k d^l", CaseId::r11, 4, val(1)},
      {"appendix.pairings_ad", "<[A,D], a^k d^l> = 0", CaseId::r11, 4, val(2)},
      {"appendix.pairings_b_c", "bracket pairings on a^k d^l b and a^k d^l c", CaseId::r11, 4,
       val(3)},
      {"appendix.pairings_bc", "bracket pairings on a^k d^l bc", CaseId::r11, 4, val(4)},
      {"appendix.exponentials", "<K, a^k d^l> = q^(k+l) and the shifted KB, KC", CaseId::r11, 4,
       val(5)},
  };
}

}  // namespace

const std::vector<ClosedFormCheck>& closed_form_checks() {
  static const std::vector<ClosedFormCheck> checks = build_checks();
  return checks;
}

const ClosedFormCheck& closed_form_check(const std::string& id) {
  for (const ClosedFormCheck& c : closed_form_checks())
    if (c.id == id) return c;
  throw std::invalid_argument("unknown closed-form check '" + id + "'");
}

}  // namespace gl11
