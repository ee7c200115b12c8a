#include <random>

#include "doctest.h"
#include "gl11/quantum_plane.hpp"

using namespace gl11;

namespace {

std::string residual_dump(const CheckReport& r) {
  std::string s;
  for (const auto& x : r.residuals) s += x.context + " = " + x.value + "\n";
  return s;
}

GroupElement random_element(const Presentation& pres, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(0, 2);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  GroupElement x;
  for (int t = 0; t < 2; ++t)
    x.add(group_monomial(small(rng), small(rng), bit(rng), bit(rng)),
          Scalar(coeff(rng)) + pres.params().q * Scalar(coeff(rng)));
  return x;
}

const CaseId kCases[] = {CaseId::classical, CaseId::r22, CaseId::r12, CaseId::r11};
const Framework kFrameworks[] = {Framework::unbraided, Framework::braided};

}  // namespace

TEST_CASE("printed rules") {
  Params p = Params::symbolic(CaseId::r12);
  Presentation r12(CaseId::r12, Framework::unbraided, p);
  CHECK(r12.normalize(group_words({{"ba", 1}})) ==
        r12.normalize(group_words({{"ab", 1}, {"dc", -p.r * p.q}})));
  CHECK(r12.normalize(group_words({{"bb", 1}})) ==
        r12.normalize(group_words({{"aa", p.r * p.q / (Scalar(1) + p.q)},
                                   {"dd", -p.r * p.q / (Scalar(1) + p.q)}})));
  CHECK(r12.normalize(group_words({{"a", 1}})) == GroupElement(group_monomial(1, 0)));

  Params p11 = Params::symbolic(CaseId::r11);
  Presentation r11(CaseId::r11, Framework::unbraided, p11);
  CHECK(r11.normalize(group_words({{"ca", 1}})) ==
        r11.normalize(group_words({{"ac", p11.r}, {"db", -p11.s}})));
  Presentation r11b(CaseId::r11, Framework::braided, p11);
  Scalar h = p11.s * Scalar::rational(1, 2);
  CHECK(r11b.normalize(group_words({{"cc", 1}})) ==
        r11b.normalize(group_words({{"aa", -h}, {"dd", h}})));
}

TEST_CASE("c * ad = -q^2 adc in the (1,2) algebra") {
  Params p = Params::symbolic(CaseId::r12);
  Presentation pres(CaseId::r12, Framework::unbraided, p);
  GroupElement x = pres.mul(GroupElement(group_monomial(0, 0, 0, 1)),
                            GroupElement(group_monomial(1, 1)));
  CHECK(x == GroupElement(group_monomial(1, 1, 0, 1), -p.q * p.q));
}

TEST_CASE("(b +- c) a^k d^l closed form in the (1,1) algebra") {
  Params p = Params::symbolic(CaseId::r11);
  Presentation pres(CaseId::r11, Framework::unbraided, p);
  GroupElement a = pres.element(group_monomial(1, 0));
  GroupElement d = pres.element(group_monomial(0, 1));
  GroupElement b = pres.element(group_monomial(0, 0, 1, 0));
  GroupElement c = pres.element(group_monomial(0, 0, 0, 1));
  auto power = [&](const GroupElement& x, int n) {
    GroupElement out = pres.algebra().one();
    for (int i = 0; i < n; ++i) out = pres.mul(out, x);
    return out;
  };
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) {
      GroupElement lhs = pres.mul(b, GroupElement(group_monomial(k, l)));
      // ra -+ sd and +-sa - rd commute with each other (they are built from
      // a and d only), so the closed form is an ordinary product.
      GroupElement plus = pres.mul(
          pres.mul(power(p.r * a - p.s * d, k), power(p.s * a - p.r * d, l)),
          b + c);
      GroupElement minus = pres.mul(
          pres.mul(power(p.r * a + p.s * d, k), power(-p.s * a - p.r * d, l)),
          b - c);
      CHECK(lhs == (plus + minus) * Scalar::rational(1, 2));
    }
}

TEST_CASE("gmul is associative and respects the grading") {
  std::mt19937_64 rng(3);
  for (CaseId c : kCases)
    for (Framework f : kFrameworks) {
      Presentation pres(c, f, Params::symbolic(c));
      for (int t = 0; t < 8; ++t) {
        GroupElement x = random_element(pres, rng);
        GroupElement y = random_element(pres, rng);
        GroupElement z = random_element(pres, rng);
        CHECK(pres.mul(pres.mul(x, y), z) == pres.mul(x, pres.mul(y, z)));
      }
      for (int t = 0; t < 8; ++t) {
        GroupElement x(group_monomial(t % 3, t % 2, t % 2, (t / 2) % 2));
        GroupElement y(group_monomial(1, t % 3, (t / 4) % 2, t % 2));
        int parity = (pres.algebra().parity(x.begin()->first) +
                      pres.algebra().parity(y.begin()->first)) % 2;
        for (const auto& [m, coeff] : pres.mul(x, y))
          CHECK(pres.algebra().parity(m) == parity);
      }
    }
}

TEST_CASE("normal forms are fixed points") {
  Params p = Params::symbolic(CaseId::r11);
  Presentation pres(CaseId::r11, Framework::braided, p);
  for (int k = 0; k < 3; ++k)
    for (int m = 0; m < 2; ++m) {
      GroupMonomial g = group_monomial(k, 2 - k, m, 1 - m);
      CHECK(pres.normalize(WordSum(pres.algebra().to_word(g))) == GroupElement(g));
    }
}

TEST_CASE("Yang-Baxter equation") {
  Params p22 = Params::symbolic(CaseId::r22);
  Params p12 = Params::symbolic(CaseId::r12);
  Params p11 = Params::symbolic(CaseId::r11);
  CHECK(ybe_check(RMatrix::builtin("r22", p22), p22).status == Status::PASS);
  CHECK(ybe_check(RMatrix::builtin("r12", p12), p12).status == Status::PASS);
  CHECK(ybe_check(RMatrix::builtin("r11", p11), p11).status == Status::PASS);
  CHECK(ybe_check(RMatrix::builtin("superidentity", p22), p22).status == Status::PASS);
  CHECK(ybe_check(RMatrix::identity(), p22).status == Status::PASS);

  // Changing the corner entry r of R12 to r + 1 is a relabelling of the free
  // parameter r, so the equation still holds; the (2,3) entry is not free.
  RMatrix corner = RMatrix::builtin("r12", p12);
  corner.m[0][3] += Scalar(1);
  CHECK(ybe_check(corner, p12).status == Status::PASS);
  RMatrix bad = RMatrix::builtin("r12", p12);
  bad.m[1][2] += Scalar(1);
  CheckReport rep = ybe_check(bad, p12);
  CHECK(rep.status == Status::FAIL);
  CHECK_FALSE(rep.residuals.empty());
}

TEST_CASE("FRT consistency for every case and framework") {
  for (CaseId c : kCases)
    for (Framework f : kFrameworks) {
      Params p = Params::symbolic(c);
      Presentation pres(c, f, p);
      CheckReport rep = check_frt_consistency(pres, case_rmatrix(c, p));
      INFO(to_string(c), " ", to_string(f), "\n", residual_dump(rep));
      CHECK(rep.status == Status::PASS);
    }
}

TEST_CASE("FRT with a mismatched R-matrix fails") {
  Params p = Params::symbolic(CaseId::r12);
  Presentation pres(CaseId::r12, Framework::unbraided, p);
  Params p11 = Params::symbolic(CaseId::r11);
  CheckReport rep = check_frt_consistency(pres, RMatrix::builtin("r11", p11));
  CHECK(rep.status == Status::FAIL);
  CHECK_FALSE(rep.residuals.empty());
}

TEST_CASE("identity R-matrix gives commutators") {
  Params p = Params::symbolic(CaseId::r22);
  auto rels = frt_relations(RMatrix::identity(), Framework::unbraided);
  for (const WordSum& rel : rels) {
    if (rel.is_zero()) continue;
    REQUIRE(rel.size() == 2);
    auto it = rel.begin();
    Word w1 = it->first;
    Scalar c1 = it->second;
    ++it;
    CHECK(it->first == Word{w1[1], w1[0]});
    CHECK(it->second == -c1);
  }
}

TEST_CASE("confluence probes") {
  for (CaseId c : {CaseId::r22, CaseId::r11})
    for (Framework f : kFrameworks) {
      Params p = Params::symbolic(c);
      Presentation pres(c, f, p);
      CheckReport rep = confluence_probe(pres, 60, 11);
      INFO(residual_dump(rep));
      CHECK(rep.status == Status::PASS);
    }
}

TEST_CASE("R-matrix JSON round trip") {
  Params p = Params::symbolic(CaseId::r22);
  RMatrix R = RMatrix::builtin("r22", p);
  RMatrix back = RMatrix::from_json(R.to_json(), p);
  CHECK(back.m == R.m);
  CHECK_THROWS(RMatrix::from_json("{\"entries\": [[1]]}", p));
}
