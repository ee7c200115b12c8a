#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gl11/coproduct.hpp"
#include "gl11/params.hpp"
#include "gl11/report.hpp"

namespace gl11 {

/// A printed closed form, checked against the engine for all exponents up
/// to `max_degree`. Runs in the function algebra of `case_id` (unbraided).
struct ClosedFormCheck {
  std::string id;
  std::string anchor;
  CaseId case_id;
  int default_degree;
  std::function<CheckReport(const Params&, int max_degree)> run;
};

/// Closed forms in A(1,2) and A(1,1), including the coefficient polynomial
/// identities behind the U(1,1) pairings.
const std::vector<ClosedFormCheck>& closed_form_checks();
const ClosedFormCheck& closed_form_check(const std::string& id);

// Polynomials in the commuting variables a1, d1, a2, d2.
CoeffPoly cp_var(int v);
CoeffPoly cp_const(const Scalar& c);
CoeffPoly operator+(const CoeffPoly& x, const CoeffPoly& y);
CoeffPoly operator-(const CoeffPoly& x, const CoeffPoly& y);
CoeffPoly operator*(const CoeffPoly& x, const CoeffPoly& y);
CoeffPoly operator*(const Scalar& c, const CoeffPoly& x);
CoeffPoly cp_diff(const CoeffPoly& x, int v);
/// x(M_e1 (a1, d1), M_e2 (a2, d2)) with M_e = [[r, -e s], [e s, -r]].
CoeffPoly cp_twist(const CoeffPoly& x, int e1, int e2, const Scalar& r, const Scalar& s);

}  // namespace gl11
