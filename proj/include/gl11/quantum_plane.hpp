#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "gl11/params.hpp"
#include "gl11/pbw_algebra.hpp"
#include "gl11/report.hpp"

namespace gl11 {

// Generators of the function algebra in normal order a < d < b < c.
enum GroupLetter : int { kLa = 0, kLd = 1, kLb = 2, kLc = 3 };

using GroupAlgebra = PbwAlgebra<4>;
using GroupMonomial = GroupAlgebra::Mono;
using GroupElement = GroupAlgebra::Element;

inline constexpr std::array<char, 4> kGroupNames = {'a', 'd', 'b', 'c'};

/// a^k d^l b^m c^n.
GroupMonomial group_monomial(int k, int l, int m = 0, int n = 0);
WordSum group_words(std::initializer_list<std::pair<const char*, Scalar>> terms);
Word group_word(const std::string& letters);

struct RMatrix {
  std::string name;
  std::array<std::array<Scalar, 4>, 4> m;

  static RMatrix identity();
  /// Built-ins "r22", "r12", "r11", "superidentity", "identity", with the
  /// parameters taken from `params`.
  static RMatrix builtin(const std::string& name, const Params& params);
  /// {"name": ..., "entries": [[4 scalar strings] x 4]}; entries are parsed
  /// with the parameter table of `params`.
  static RMatrix from_json(const std::string& text, const Params& params);
  std::string to_json() const;
};

/// Oriented rewrite rules of one deformed function algebra.
class Presentation {
 public:
  Presentation(CaseId c, Framework f, Params params);

  CaseId case_id() const { return case_; }
  Framework framework() const { return framework_; }
  const Params& params() const { return params_; }
  const GroupAlgebra& algebra() const { return algebra_; }

  struct Rule {
    Word lhs;
    WordSum rhs;
  };
  const std::vector<Rule>& rules() const { return rules_; }
  std::string rule_text(const Rule& r) const;

  GroupElement normalize(const WordSum& s) const { return algebra_.normalize(s); }
  GroupElement mul(const GroupElement& x, const GroupElement& y) const {
    return algebra_.mul(x, y);
  }
  GroupElement element(const GroupMonomial& m) const { return GroupElement(m); }
  std::string to_string(const GroupElement& x) const { return algebra_.to_string(x); }

 private:
  void add(const char* lhs, WordSum rhs);

  CaseId case_;
  Framework framework_;
  Params params_;
  GroupAlgebra algebra_;
  std::vector<Rule> rules_;
};

/// The R-matrix a case's presentation is derived from.
RMatrix case_rmatrix(CaseId c, const Params& params);

/// Entries of R T1 T2 - T2 T1 R (T-hat = eta T in the braided framework),
/// indexed 4*row + column.
std::array<WordSum, 16> frt_relations(const RMatrix& R, Framework f);

CheckReport check_frt_consistency(const Presentation& pres, const RMatrix& R);
CheckReport ybe_check(const RMatrix& R, const Params& params);
CheckReport confluence_probe(const Presentation& pres, int samples,
                             std::uint64_t seed, int max_length = 8);

/// Residuals of x, with the zero test of `params` applied per coefficient.
template <class Algebra>
void collect_residuals(const Algebra& alg, const typename Algebra::Element& x,
                       const Params& params, const std::string& context,
                       std::vector<Residual>& out) {
  for (const auto& [m, c] : x)
    if (!params.is_zero(c))
      out.push_back({context + " @ " + alg.to_string(m), c.to_string()});
}

}  // namespace gl11
