#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>

#include "gl11/scalar.hpp"

namespace gl11 {

enum class CaseId { classical, r22, r12, r11 };
enum class Framework { unbraided, braided };

std::string_view to_string(CaseId c);
std::string_view to_string(Framework f);
std::optional<CaseId> parse_case(std::string_view name);
std::optional<Framework> parse_framework(std::string_view name);

using SymbolTable = std::map<std::string, Scalar, std::less<>>;

/// Values of the deformation parameters for one run.
///
/// In symbolic mode q, r, p are indeterminates (for r11, r and s are the
/// functions of q fixed by the case). In numeric mode they are random
/// rationals and `point` additionally assigns the indeterminates that remain
/// formal during construction (K, K1, ..., tau, rho), so that residuals can
/// be tested for vanishing by exact evaluation.
struct Params {
  CaseId case_id = CaseId::r22;
  bool numeric = false;
  Scalar q;
  Scalar r;
  Scalar s;
  Scalar p;
  Assignment point;

  static Params symbolic(CaseId c);
  static Params sample(CaseId c, std::mt19937_64& rng);

  /// Identifier table for parsing printed formulas: q, r, s, p resolve to the
  /// values above; K, Kr, tau, rho, ... stay formal; `sigma` is sigma.
  SymbolTable symbols() const;
  Scalar parse(std::string_view text) const;

  /// Zero test appropriate to the mode: syntactic in symbolic mode, exact
  /// evaluation at `point` in numeric mode.
  bool is_zero(const Scalar& x) const;
};

/// Random rational with numerator and denominator bounded by `bound`,
/// never 0, 1 or -1.
Rational random_parameter(std::mt19937_64& rng, long bound = 10000);

}  // namespace gl11
