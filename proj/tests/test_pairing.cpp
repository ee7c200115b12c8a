#include <random>

#include "doctest.h"
#include "gl11/pairing.hpp"

using namespace gl11;

namespace {

std::string residual_dump(const CheckReport& r) {
  std::string s;
  for (const auto& x : r.residuals) s += x.context + " = " + x.value + "\n";
  return s;
}

}  // namespace

TEST_CASE("basic pairing table") {
  CHECK(pair_letter(DualLetter::A(), group_monomial(3, 2)) == Scalar(3));
  CHECK(pair_letter(DualLetter::D(), group_monomial(3, 2)) == Scalar(2));
  CHECK(pair_letter(DualLetter::A(), group_monomial(3, 2, 1, 0)) == Scalar(0));
  CHECK(pair_letter(DualLetter::B(), group_monomial(0, 0, 1, 0)) == Scalar(1));
  CHECK(pair_letter(DualLetter::B(), group_monomial(0, 0, 0, 1)) == Scalar(0));
  CHECK(pair_letter(DualLetter::C(), group_monomial(2, 1, 0, 1)) == Scalar(1));
  Scalar q = Scalar::var(Var::q);
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l)
      CHECK(pair_letter(DualLetter::group_like(q, q), group_monomial(k, l)) == q.pow(k + l));
}

TEST_CASE("parsing enveloping-side text") {
  Params p = Params::symbolic(CaseId::r12);
  DualElement x = parse_dual("B*C + C*B", p);
  CHECK(x.size() == 2);
  DualElement k = parse_dual("eta*K", p);
  REQUIRE(k.size() == 1);
  CHECK(k.begin()->first == DualWord{DualLetter::group_like(p.q, -p.q)});
  CHECK(parse_dual("K*K^-1", p) == dual_scalar(1));
  CHECK(parse_dual("GL(q,-q)", p) == k);
  CHECK(parse_dual("(K-1)/(q-1)", p).size() == 2);
  CHECK_THROWS_AS(parse_dual("B/C", p), ParseError);
  CHECK_THROWS_AS(parse_dual("B^-1", p), ParseError);
  CHECK_THROWS_AS(parse_dual("X", p), ParseError);
}

TEST_CASE("printed pairings in the (1,2) case") {
  Params p = Params::symbolic(CaseId::r12);
  Presentation pres(CaseId::r12, Framework::unbraided, p);
  Pairing pg(pres);
  const Scalar& q = p.q;
  const Scalar& r = p.r;
  CHECK(pg.pair(parse_dual("B*C + C*B", p), group_monomial(1, 1)) == q + Scalar(1));
  CHECK(pg.pair(parse_dual("C*C", p), group_monomial(1, 1)) == -r * q * q);
  DualElement shifted = parse_dual("K*B/q", p);
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l)
      CHECK(pg.pair(shifted, group_monomial(k, l, 1, 0)) == q.pow(k + l));
}

TEST_CASE("group-likes must be characters") {
  Params p = Params::symbolic(CaseId::r12);
  Presentation pres(CaseId::r12, Framework::unbraided, p);
  Pairing pg(pres);
  CHECK_THROWS_AS(pg.validate(parse_dual("GL(q,1)", p)), std::invalid_argument);
  CHECK_NOTHROW(pg.validate(parse_dual("GL(q,-q)", p)));
  // Characters are multiplicative.
  DualElement g = parse_dual("GL(q,-q)", p);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> small(0, 3);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int t = 0; t < 20; ++t) {
    GroupMonomial x = group_monomial(small(rng), small(rng), bit(rng), bit(rng));
    GroupMonomial y = group_monomial(small(rng), small(rng), bit(rng), bit(rng));
    CHECK(pg.pair(g, pres.mul(GroupElement(x), GroupElement(y))) ==
          pg.pair(g, x) * pg.pair(g, y));
  }
}

TEST_CASE("bilinearity") {
  Params p = Params::symbolic(CaseId::r22);
  Presentation pres(CaseId::r22, Framework::unbraided, p);
  Pairing pg(pres);
  DualElement P1 = parse_dual("A*B", p), P2 = parse_dual("C*B*K", p);
  GroupElement x = GroupElement(group_monomial(1, 1, 1, 0)) * p.q +
                   GroupElement(group_monomial(2, 0, 1, 1));
  GroupElement y = GroupElement(group_monomial(0, 2));
  Scalar a = p.r, b = Scalar(3);
  CHECK(pg.pair(P1 * a + P2 * b, x) == a * pg.pair(P1, x) + b * pg.pair(P2, x));
  CHECK(pg.pair(P1, x * a + y * b) == a * pg.pair(P1, x) + b * pg.pair(P1, y));
}

TEST_CASE("pairing products against the shuffle coproduct of primitive letters") {
  // In the braided classical algebra A, B, C, D are primitive, so a word
  // splits over subsets of its letters with the graded sign.
  Params p = Params::symbolic(CaseId::classical);
  Presentation pres(CaseId::classical, Framework::braided, p);
  Pairing pg(pres, PairingSign::graded);
  const DualLetter letters[] = {DualLetter::A(), DualLetter::B(), DualLetter::C(),
                                DualLetter::D()};
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> len(1, 3);
  std::vector<GroupMonomial> basis = pbw_basis(2);
  for (int t = 0; t < 12; ++t) {
    DualWord w;
    for (int i = len(rng); i > 0; --i) w.push_back(letters[pick(rng)]);
    for (const GroupMonomial& x : basis)
      for (const GroupMonomial& y : basis) {
        Scalar split;
        for (unsigned mask = 0; mask < (1U << w.size()); ++mask) {
          DualWord lw, rw;
          int sign = 1;
          for (std::size_t i = 0; i < w.size(); ++i) {
            if (mask >> i & 1U) {
              if (w[i].odd() && parity(rw)) sign = -sign;
              lw.push_back(w[i]);
            } else {
              rw.push_back(w[i]);
            }
          }
          int xpar = (x.e[kLb] + x.e[kLc]) & 1;
          if (parity(rw) && xpar) sign = -sign;
          split += Scalar(sign) * pg.pair(lw, x) * pg.pair(rw, y);
        }
        CHECK(pg.pair(DualElement(w), pres.mul(GroupElement(x), GroupElement(y))) == split);
      }
  }
}

TEST_CASE("relation checks") {
  Params p12 = Params::symbolic(CaseId::r12);
  Presentation r12(CaseId::r12, Framework::unbraided, p12);
  Pairing pg12(r12);
  CheckReport bc = relation_check(pg12, parse_dual("B*C + C*B", p12),
                                  parse_dual("(K-1)/(q-1)", p12), 4);
  INFO(residual_dump(bc));
  CHECK(bc.status == Status::PASS);
  CheckReport wrong = relation_check(pg12, parse_dual("B*C + C*B", p12),
                                     parse_dual("(K-1)/(q+1)", p12), 2);
  CHECK(wrong.status == Status::FAIL);
  CHECK_FALSE(wrong.residuals.empty());

  Params p22 = Params::symbolic(CaseId::r22);
  Presentation r22(CaseId::r22, Framework::unbraided, p22);
  Pairing pg22(r22);
  CHECK(relation_check(pg22, parse_dual("A*D - D*A", p22), {}, 4).status == Status::PASS);

  Params p11 = Params::symbolic(CaseId::r11);
  Presentation r11(CaseId::r11, Framework::unbraided, p11);
  Pairing pg11(r11);
  CheckReport ab = relation_check(
      pg11, parse_dual("A*B - B*A", p11),
      parse_dual("B/2 + (q^-2*K^2 + q^2*K^-2)*B/4 + (q^-2*K^2 - q^2*K^-2)*C/4", p11), 3);
  INFO(residual_dump(ab));
  CHECK(ab.status == Status::PASS);
}

TEST_CASE("coproduct checks") {
  Params p12 = Params::symbolic(CaseId::r12);
  Presentation r12(CaseId::r12, Framework::unbraided, p12);
  Pairing pg12(r12);
  DualTensor dB = {{parse_dual("1", p12), parse_dual("B", p12)},
                   {parse_dual("B", p12), parse_dual("eta", p12)}};
  CheckReport rep = coproduct_check(pg12, parse_dual("B", p12), dB, 3);
  INFO(residual_dump(rep));
  CHECK(rep.status == Status::PASS);
  DualTensor bad = {{parse_dual("1", p12), parse_dual("B", p12)},
                    {parse_dual("B", p12), parse_dual("1", p12)}};
  CHECK(coproduct_check(pg12, parse_dual("B", p12), bad, 2).status == Status::FAIL);

  Params p22 = Params::symbolic(CaseId::r22);
  Presentation r22(CaseId::r22, Framework::unbraided, p22);
  Pairing pg22(r22);
  DualTensor dC = {{parse_dual("1", p22), parse_dual("C", p22)},
                   {parse_dual("C", p22), parse_dual("eta*K*Kr^-1", p22)}};
  CHECK(coproduct_check(pg22, parse_dual("C", p22), dC, 3).status == Status::PASS);

  Params p11 = Params::symbolic(CaseId::r11);
  Presentation r11(CaseId::r11, Framework::unbraided, p11);
  Pairing pg11(r11);
  DualTensor dK = {{parse_dual("K", p11), parse_dual("K", p11)}};
  CHECK(coproduct_check(pg11, parse_dual("K", p11), dK, 3).status == Status::PASS);
}

TEST_CASE("braided pairing conventions") {
  // Plain pairing: the braided dual keeps the unbraided relations and the
  // odd (x) odd term of the braided Delta(A) pairs correctly.
  Params p = Params::symbolic(CaseId::r12);
  Presentation fun(CaseId::r12, Framework::braided, p);
  Pairing plain(fun);
  Pairing graded(fun, PairingSign::graded);
  CHECK_FALSE(plain.graded());
  CHECK(graded.graded());
  DualElement bc = parse_dual("B*C + C*B", p);
  DualElement y = parse_dual("(K-1)/(q-1)", p);
  CHECK(relation_check(plain, bc, y, 3).status == Status::PASS);
  CHECK(relation_check(graded, bc, y, 2).status == Status::FAIL);
  CHECK(relation_check(graded, bc, -y, 3).status == Status::PASS);

  DualTensor dA = {{parse_dual("1", p), parse_dual("A", p)},
                   {parse_dual("A", p), parse_dual("1", p)},
                   {parse_dual("2*r*q/(q+1)*B", p), parse_dual("B", p)}};
  CheckReport rep = coproduct_check(plain, parse_dual("A", p), dA, 3);
  INFO(residual_dump(rep));
  CHECK(rep.status == Status::PASS);
  CHECK(coproduct_check(graded, parse_dual("A", p), dA, 2).status == Status::FAIL);
}
