#include "doctest.h"
#include "gl11/enveloping.hpp"
#include "gl11/pairing.hpp"

using namespace gl11;

namespace {

std::string residual_dump(const CheckReport& r) {
  std::string s = r.message + "\n";
  for (const auto& x : r.residuals) s += x.context + " = " + x.value + "\n";
  return s;
}

const CaseId kDeformed[] = {CaseId::r22, CaseId::r12, CaseId::r11};
const Framework kFrameworks[] = {Framework::unbraided, Framework::braided};

}  // namespace

TEST_CASE("normal forms of short words") {
  EnvPresentation r22(CaseId::r22, Params::symbolic(CaseId::r22));
  CHECK(r22.parse("B*A") == r22.parse("A*B - B"));
  CHECK(r22.parse("eta*eta") == r22.parse("1"));
  CHECK(r22.parse("C*B") == r22.parse("-B*C + (K-1)/(q-1)"));
  CHECK(r22.to_string(r22.parse("B*eta*C")) == r22.to_string(r22.parse("-eta*B*C")));

  EnvPresentation r12(CaseId::r12, Params::symbolic(CaseId::r12));
  CHECK(r12.parse("C*C") == r12.parse("-r*q/((q^2-1)*(q-1))*(K-1)*(K-q)"));
  CHECK(r12.parse("C*A") == r12.parse("A*C + C + 2*r*q/(q^2-1)*(K-q)*B"));
  CHECK(r12.parse("B*B").is_zero());

  EnvPresentation r11(CaseId::r11, Params::symbolic(CaseId::r11));
  CHECK(r11.parse("B*A") ==
        r11.parse("A*B - B/2 - (q^-2*K^2+q^2*K^-2)*B/4 - (q^-2*K^2-q^2*K^-2)*C/4"));
}

TEST_CASE("K is central and eta grades") {
  for (CaseId c : kDeformed) {
    EnvPresentation pres(c, Params::symbolic(c));
    for (const char* x : {"A", "D", "B", "C", "eta"}) {
      std::string g(x);
      CHECK(pres.parse("K*" + g + " - " + g + "*K").is_zero());
    }
    CHECK(pres.parse("eta*B*eta") == pres.parse("-B"));
    CHECK(pres.parse("eta*A*eta") == pres.parse("A"));
  }
}

TEST_CASE("relation texts reproduce the rewrite rules") {
  for (CaseId c : {CaseId::classical, CaseId::r22, CaseId::r12, CaseId::r11}) {
    EnvPresentation pres(c, Params::symbolic(c));
    auto rels = theorem_relations(c);
    CHECK(rels.size() == 8);
    for (const auto& rel : rels) {
      INFO(rel.name);
      CHECK((pres.parse(rel.lhs) - pres.parse(rel.rhs)).is_zero());
    }
  }
}

TEST_CASE("relation texts agree with the pairing") {
  // The same text, read on the dual side, annihilates the function algebra.
  Params p = Params::symbolic(CaseId::r12);
  Presentation fun(CaseId::r12, Framework::unbraided, p);
  Pairing pg(fun);
  for (const auto& rel : theorem_relations(CaseId::r12)) {
    CheckReport rep = relation_check(pg, parse_dual(rel.lhs, p), parse_dual(rel.rhs, p), 3);
    INFO(rel.name << "\n" << residual_dump(rep));
    CHECK(rep.status == Status::PASS);
  }
}

TEST_CASE("confluence probe") {
  for (CaseId c : kDeformed) {
    EnvPresentation pres(c, Params::symbolic(c));
    CheckReport rep = env_confluence_probe(pres, 40, 7, 5);
    INFO(residual_dump(rep));
    CHECK(rep.status == Status::PASS);
  }
}

TEST_CASE("coproducts are algebra maps and coassociative") {
  for (CaseId c : kDeformed)
    for (Framework f : kFrameworks) {
      if (c == CaseId::r11 && f == Framework::braided) continue;
      Params params = Params::symbolic(c);
      CheckReport hom = hom_check(c, f, params);
      INFO(to_string(c) << " " << to_string(f) << "\n" << residual_dump(hom));
      CHECK(hom.status == Status::PASS);
      CheckReport co = coassoc_check(c, f, params);
      INFO(residual_dump(co));
      CHECK(co.status == Status::PASS);
    }
}

TEST_CASE("braided (1,1) table as printed") {
  // Delta(B - C) = 1 (x) (B-C) + (B-C) (x) K^-1 as printed, while the odd
  // part of Delta(A) pairs B - C with K(B+C): neither hom nor coassociativity
  // survive. Exchanging B+C and B-C repairs both.
  Params params = Params::symbolic(CaseId::r11);
  CHECK(hom_check(CaseId::r11, Framework::braided, params).status == Status::FAIL);
  CHECK(coassoc_check(CaseId::r11, Framework::braided, params).status == Status::FAIL);
  CheckReport hom = hom_check(CaseId::r11, Framework::braided, params, true,
                              TableVariant::swapped);
  INFO(residual_dump(hom));
  CHECK(hom.status == Status::PASS);
  CHECK(coassoc_check(CaseId::r11, Framework::braided, params, TableVariant::swapped).status ==
        Status::PASS);
  CHECK(coproduct_table(CaseId::r12, Framework::braided, TableVariant::swapped) ==
        coproduct_table(CaseId::r12, Framework::braided));
}

TEST_CASE("braided coproduct without the graded sign fails") {
  for (CaseId c : kDeformed) {
    CheckReport rep = hom_check(c, Framework::braided, Params::symbolic(c), false);
    INFO(to_string(c));
    CHECK(rep.status == Status::FAIL);
  }
  EnvHopf hopf(CaseId::r12, Framework::braided, Params::symbolic(CaseId::r12), false);
  EnvTensor bb = hopf.tensor_mul(hopf.delta_letter(kEB), hopf.delta_letter(kEB));
  EnvTensor expected(EnvTensorKey{EnvAlgebra::letter(kEB), EnvAlgebra::letter(kEB)}, 2);
  CHECK(bb == expected);
}

TEST_CASE("classical limits") {
  for (CaseId c : kDeformed) {
    CheckReport b = classical_limit_check(c, Framework::braided);
    INFO(to_string(c) << "\n" << residual_dump(b));
    CHECK(b.status == Status::PASS);
    CheckReport u = classical_limit_check(c, Framework::unbraided);
    INFO(residual_dump(u));
    CHECK(u.status == Status::OBSTRUCTION_CONFIRMED);
  }
}

TEST_CASE("change of basis") {
  Params p12 = Params::symbolic(CaseId::r12);
  CheckReport printed = basis_change_check(CaseId::r12, p12, BasisVariant::printed);
  INFO(residual_dump(printed));
  CHECK(printed.status == Status::PASS);
  // {B',C'} closes regardless of the (K-1)B coefficient since B^2 = 0.
  for (const auto& r : printed.residuals) CHECK(r.context.rfind("{B',C'}", 0) != 0);
  CHECK_FALSE(printed.residuals.empty());
  CheckReport corrected = basis_change_check(CaseId::r12, p12, BasisVariant::corrected);
  INFO(residual_dump(corrected));
  CHECK(corrected.status == Status::PASS);
  CHECK(corrected.residuals.empty());

  CheckReport r11 = basis_change_check(CaseId::r11, Params::symbolic(CaseId::r11));
  INFO(residual_dump(r11));
  CHECK(r11.status == Status::PASS);
  CHECK_THROWS_AS(basis_change_check(CaseId::r22, Params::symbolic(CaseId::r22)),
                  std::invalid_argument);
}
