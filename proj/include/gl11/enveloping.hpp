#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gl11/params.hpp"
#include "gl11/pbw_algebra.hpp"
#include "gl11/report.hpp"

namespace gl11 {

// Generators of the enveloping algebra in normal order eta < A < D < B < C,
// eta standing for (-1)^D.
enum EnvLetter : int { kEeta = 0, kEA = 1, kED = 2, kEB = 3, kEC = 4 };

using EnvAlgebra = PbwAlgebra<5>;
using EnvMonomial = EnvAlgebra::Mono;
using EnvElement = EnvAlgebra::Element;

inline constexpr std::array<char, 5> kEnvNames = {'e', 'A', 'D', 'B', 'C'};

/// A printed (anti)commutation relation: lhs = rhs in the text grammar of
/// parse_dual / EnvPresentation::parse.
struct RelationText {
  std::string name;
  std::string lhs;
  std::string rhs;
};

/// The defining relations of the deformed superalgebra of a case; the
/// classical case gives gl(1|1) with {B,C} = A+D.
std::vector<RelationText> theorem_relations(CaseId c);

/// Concatenation product of free words.
WordSum operator*(const WordSum& x, const WordSum& y);

/// Rewriting system of one enveloping algebra. K (and Kr) are central
/// Laurent indeterminates; `k` and `kr` choose which variables play their
/// role, so that tensor slots can carry independent copies.
class EnvPresentation {
 public:
  EnvPresentation(CaseId c, Params params, Var k = Var::K, Var kr = Var::Kr);

  CaseId case_id() const { return case_; }
  const Params& params() const { return params_; }
  const EnvAlgebra& algebra() const { return algebra_; }
  Var k_var() const { return k_; }

  struct Rule {
    Word lhs;
    WordSum rhs;
  };
  const std::vector<Rule>& rules() const { return rules_; }

  /// Words over eta, A, D, B, C with scalar coefficients; identifiers in
  /// `extra` expand to the given combinations.
  WordSum parse_words(std::string_view text,
                      const std::map<std::string, WordSum>& extra = {}) const;
  EnvElement parse(std::string_view text,
                   const std::map<std::string, WordSum>& extra = {}) const {
    return normalize(parse_words(text, extra));
  }

  EnvElement normalize(const WordSum& s) const { return algebra_.normalize(s); }
  EnvElement mul(const EnvElement& x, const EnvElement& y) const {
    return algebra_.mul(x, y);
  }
  std::string to_string(const EnvElement& x) const { return algebra_.to_string(x); }

 private:
  void add(const char* lhs, const WordSum& rhs);

  CaseId case_;
  Params params_;
  Var k_, kr_;
  EnvAlgebra algebra_;
  std::vector<Rule> rules_;
};

using EnvTensorKey = std::vector<EnvMonomial>;
using EnvTensor = LinearCombination<EnvTensorKey>;

/// Printed coproduct of each generator as (left, right) text pairs, in the
/// shared text grammar. Keys "A", "B", "C", "D" (and "K", "eta").
using CoproductTable = std::map<std::string, std::vector<std::pair<std::string, std::string>>>;

/// `swapped` exchanges B+C and B-C in the braided (1,1) Delta(B), Delta(C),
/// the form under which they agree with Delta(A) and the relations. Other
/// tables are unaffected.
enum class TableVariant { printed, swapped };
CoproductTable coproduct_table(CaseId c, Framework f,
                               TableVariant variant = TableVariant::printed);

/// Coproduct of an enveloping algebra as an algebra map into U (x) U (or
/// U (x) U (x) U after one more application). Slot i uses K_{i+1}; a
/// coefficient f(K) maps to f(K1 K2). When `graded`, tensor factors multiply
/// with the sign (-1)^(deg Y1 deg X2).
class EnvHopf {
 public:
  EnvHopf(CaseId c, Framework f, const Params& params, bool graded,
          TableVariant variant = TableVariant::printed);

  const EnvPresentation& presentation() const { return pres_; }
  const EnvPresentation& slot(std::size_t i) const { return slots_[i]; }
  bool graded() const { return graded_; }

  /// Delta of a generator letter, from the printed table.
  const EnvTensor& delta_letter(int letter) const { return table_[letter]; }
  const EnvTensor& delta(const EnvMonomial& m) const;
  EnvTensor delta(const EnvElement& x) const;
  /// Delta applied to tensor factor `slot` of an arity-2 tensor.
  EnvTensor delta_at(const EnvTensor& t, std::size_t slot) const;

  EnvTensor tensor_mul(const EnvTensor& x, const EnvTensor& y) const;
  std::string to_string(const EnvTensor& t) const;

 private:
  EnvPresentation pres_;
  std::vector<EnvPresentation> slots_;
  Framework framework_;
  bool graded_;
  std::array<EnvTensor, 5> table_;
  mutable std::map<EnvMonomial, EnvTensor> cache_;
};

/// Probe of env_normalize: leftmost and rightmost rewriting agree on random
/// words.
CheckReport env_confluence_probe(const EnvPresentation& pres, int samples,
                                 std::uint64_t seed, int max_length = 6);

/// Delta(x) Delta(y) = Delta(rhs) for every rewrite rule x y -> rhs.
CheckReport hom_check(CaseId c, Framework f, const Params& params, bool graded,
                      TableVariant variant = TableVariant::printed);
CheckReport hom_check(CaseId c, Framework f, const Params& params);
/// (Delta (x) id) Delta(X) = (id (x) Delta) Delta(X) for X in eta, A, D, B, C
/// and the group-like K.
CheckReport coassoc_check(CaseId c, Framework f, const Params& params,
                          TableVariant variant = TableVariant::printed);

/// Limits along the classical path. Braided: relations become gl(1|1) and
/// the coproducts primitive (PASS). Unbraided: an eta factor survives in the
/// limit coproduct (OBSTRUCTION_CONFIRMED).
CheckReport classical_limit_check(CaseId c, Framework f);

enum class BasisVariant { printed, corrected };

/// Section 6 change of basis. For r12 the printed coefficient of (K-1)B in
/// C' is r(p-1)/(2p^2); `corrected` uses r(1-q)/(2p^2). The relations
/// [A',C'], [D',C'] and {C',C'} are reported but not asserted under the
/// printed coefficient.
CheckReport basis_change_check(CaseId c, const Params& params,
                               BasisVariant variant = BasisVariant::printed);

}  // namespace gl11
