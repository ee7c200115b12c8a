#include <random>

#include "doctest.h"
#include "gl11/coproduct.hpp"

using namespace gl11;

namespace {

const CaseId kCases[] = {CaseId::classical, CaseId::r22, CaseId::r12, CaseId::r11};
const Framework kFrameworks[] = {Framework::unbraided, Framework::braided};

GroupElement mono(int k, int l, int m = 0, int n = 0) {
  return GroupElement(group_monomial(k, l, m, n));
}

// Counit of the matrix bialgebra: a, d -> 1 and b, c -> 0.
Scalar counit(const GroupMonomial& m) {
  return (m.e[kLb] == 0 && m.e[kLc] == 0) ? Scalar(1) : Scalar(0);
}

}  // namespace

TEST_CASE("delta of generators and of 1") {
  Params p = Params::symbolic(CaseId::r22);
  Presentation pres(CaseId::r22, Framework::unbraided, p);
  Coproduct cop(pres);
  TensorElement one = cop.delta(mono(0, 0));
  CHECK(one == TensorElement(TensorKey{group_monomial(0, 0), group_monomial(0, 0)}));
  TensorElement da = cop.delta(mono(1, 0));
  TensorElement expect;
  expect.add({group_monomial(1, 0), group_monomial(1, 0)}, 1);
  expect.add({group_monomial(0, 0, 1, 0), group_monomial(0, 0, 0, 1)}, 1);
  CHECK(da == expect);
}

TEST_CASE("Delta(a^2) in the (1,2) algebra") {
  Params p = Params::symbolic(CaseId::r12);
  Presentation pres(CaseId::r12, Framework::unbraided, p);
  Coproduct cop(pres);
  TensorElement expect;
  expect.add({group_monomial(2, 0), group_monomial(2, 0)}, 1);
  expect.add({group_monomial(1, 0, 1, 0), group_monomial(1, 0, 0, 1)}, p.q + Scalar(1));
  expect.add({group_monomial(0, 1, 0, 1), group_monomial(1, 0, 0, 1)}, -p.r * p.q * p.q);
  CHECK(cop.delta(mono(2, 0)) == expect);
}

TEST_CASE("delta is multiplicative and coassociative, counit holds") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> small(0, 2);
  std::uniform_int_distribution<int> bit(0, 1);
  for (CaseId c : kCases)
    for (Framework f : kFrameworks) {
      Presentation pres(c, f, Params::symbolic(c));
      Coproduct cop(pres);
      for (int t = 0; t < 6; ++t) {
        GroupElement x = mono(small(rng), small(rng), bit(rng), bit(rng));
        GroupElement y = mono(small(rng), small(rng), bit(rng), bit(rng));
        CHECK(cop.delta(pres.mul(x, y)) == cop.tensor_mul(cop.delta(x), cop.delta(y)));
      }
      for (int k = 0; k <= 2; ++k)
        for (int l = 0; k + l <= 3 && l <= 2; ++l)
          for (int m = 0; m <= 1; ++m) {
            GroupElement x = mono(k, l, m, 1 - m);
            TensorElement d = cop.delta(x);
            CHECK(cop.delta_at(d, 0) == cop.delta_at(d, 1));
            GroupElement left;
            GroupElement right;
            for (const auto& [key, coeff] : d) {
              left.add(key[1], coeff * counit(key[0]));
              right.add(key[0], coeff * counit(key[1]));
            }
            CHECK(left == x);
            CHECK(right == x);
          }
    }
}

TEST_CASE("delta_n") {
  Params p = Params::symbolic(CaseId::r22);
  Presentation pres(CaseId::r22, Framework::unbraided, p);
  Coproduct cop(pres);
  // Oracle: iterate a -> a(x)a + b(x)c by hand on the first factor.
  TensorElement d3 = cop.delta_n(mono(1, 0), 3);
  TensorElement expect;
  auto A = group_monomial(1, 0), B = group_monomial(0, 0, 1, 0),
       C = group_monomial(0, 0, 0, 1), D = group_monomial(0, 1);
  expect.add({A, A, A}, 1);
  expect.add({B, C, A}, 1);
  expect.add({A, B, C}, 1);
  expect.add({B, D, C}, 1);
  CHECK(d3 == expect);
  CHECK(cop.delta_n(mono(1, 1), 2) == cop.delta(mono(1, 1)));

  Params p11 = Params::symbolic(CaseId::r11);
  Presentation r11(CaseId::r11, Framework::unbraided, p11);
  Coproduct c11(r11);
  TensorElement d = c11.delta(mono(1, 1));
  CHECK(c11.delta_at(d, 0) == c11.delta_at(d, 1));
}

TEST_CASE("coefficient polynomials are lossless") {
  Params p = Params::symbolic(CaseId::r11);
  Presentation pres(CaseId::r11, Framework::unbraided, p);
  Coproduct cop(pres);
  for (Family fam : {Family::plain, Family::b, Family::c, Family::bc})
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= 2; ++l) {
        int m = (fam == Family::b || fam == Family::bc);
        int n = (fam == Family::c || fam == Family::bc);
        CHECK(reassemble(extract_coeff_polys(cop, k, l, fam)) ==
              cop.delta(mono(k, l, m, n)));
      }
  auto polys = extract_coeff_polys(cop, 1, 0, Family::plain);
  CHECK(eval_coeff(polys[CoeffTag{1, 0, 0, 1}.index()], EvalPoint::ones()) == Scalar(1));
}

TEST_CASE("derivatives of coefficient polynomials") {
  CoeffPoly poly;
  poly[{2, 1, 0, 3}] = Scalar(5);
  // d/da1 of 5 a1^2 d1 d2^3 at (1, 2, 1, -1) = 5*2*1*2*(-1) = -20.
  EvalPoint pt{{Scalar(1), Scalar(2), Scalar(1), Scalar(-1)}};
  CHECK(eval_coeff(poly, pt, {1, 0, 0, 0}) == Scalar(-20));
  CHECK(eval_coeff(poly, pt, {0, 0, 1, 0}) == Scalar(0));
  CHECK(eval_coeff(poly, pt, {1, 0, 0, 1}) == Scalar(5 * 2 * 2 * 3));
  CHECK(eval_coeff(poly, pt) == Scalar(-10));
}

TEST_CASE("graded tensor product sign") {
  Params p = Params::symbolic(CaseId::classical);
  Presentation pres(CaseId::classical, Framework::braided, p);
  Coproduct graded(pres, true);
  Coproduct plain(pres, false);
  auto b = group_monomial(0, 0, 1, 0), c = group_monomial(0, 0, 0, 1),
       one = group_monomial(0, 0);
  // (1 (x) b)(c (x) 1) = -(c (x) b) when graded.
  TensorElement x(TensorKey{one, b});
  TensorElement y(TensorKey{c, one});
  CHECK(graded.tensor_mul(x, y) == TensorElement(TensorKey{c, b}, Scalar(-1)));
  CHECK(plain.tensor_mul(x, y) == TensorElement(TensorKey{c, b}));
}
