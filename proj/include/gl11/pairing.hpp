#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gl11/coproduct.hpp"

namespace gl11 {

/// Letters of enveloping-side words. GroupLike(u, v) is the character
/// a -> u, d -> v, b, c -> 0 of the function algebra.
struct DualLetter {
  enum class Kind { A, B, C, D, GroupLike };
  Kind kind = Kind::A;
  Scalar u;
  Scalar v;

  static DualLetter A() { return {Kind::A, {}, {}}; }
  static DualLetter B() { return {Kind::B, {}, {}}; }
  static DualLetter C() { return {Kind::C, {}, {}}; }
  static DualLetter D() { return {Kind::D, {}, {}}; }
  static DualLetter group_like(Scalar u, Scalar v) {
    return {Kind::GroupLike, std::move(u), std::move(v)};
  }

  bool odd() const { return kind == Kind::B || kind == Kind::C; }
  std::string to_string() const;

  bool operator==(const DualLetter& o) const {
    return kind == o.kind && u == o.u && v == o.v;
  }
};

bool operator<(const DualLetter& x, const DualLetter& y);

using DualWord = std::vector<DualLetter>;
using DualElement = LinearCombination<DualWord>;

/// Concatenation; adjacent group-likes merge pointwise and GroupLike(1, 1)
/// disappears.
DualWord concat(const DualWord& x, const DualWord& y);
DualElement operator*(const DualElement& x, const DualElement& y);

DualElement dual_letter(DualLetter l);
DualElement dual_scalar(const Scalar& c);
int parity(const DualWord& w);
std::string to_string(const DualElement& x);

/// Text form: sums of products of A, B, C, D, K (= GL(q,q)), Kr (= GL(r,r)),
/// eta (= GL(1,-1)), GL(u,v) and scalar expressions in q, r, s, p, sigma.
/// Negative powers are allowed for group-likes and scalars.
DualElement parse_dual(std::string_view text, const Params& params);

/// Table of the basic pairing on PBW monomials a^k d^l b^m c^n.
Scalar pair_letter(const DualLetter& letter, const GroupMonomial& mono);

/// Sum of left (x) right terms; the formula side of a coproduct check.
using DualTensor = std::vector<std::pair<DualElement, DualElement>>;

/// Sign of the tensor pairing <P1 (x) P2, x (x) y> in the braided framework:
/// `plain` has none, `graded` has (-1)^(deg P2 deg x). Only `plain` keeps the
/// braided relations equal to the unbraided ones.
enum class PairingSign { plain, graded };

/// The pairing of words with one function algebra, through iterated
/// coproducts.
class Pairing {
 public:
  explicit Pairing(const Presentation& pres, PairingSign sign = PairingSign::plain);

  const Presentation& presentation() const { return pres_; }
  const Coproduct& coproduct() const { return cop_; }
  bool graded() const { return graded_; }

  Scalar pair(const DualWord& w, const GroupMonomial& x) const;
  Scalar pair(const DualElement& P, const GroupMonomial& x) const;
  Scalar pair(const DualElement& P, const GroupElement& x) const;

  /// Throws std::invalid_argument for a group-like that is not a character
  /// of this algebra (u^2 != v^2 where b^2 or c^2 is a multiple of a^2-d^2).
  void validate(const DualElement& P) const;

 private:
  const Presentation& pres_;
  Coproduct cop_;
  bool graded_;
  mutable std::map<std::pair<DualWord, GroupMonomial>, Scalar> cache_;
};

/// PBW monomials a^k d^l b^m c^n with k + l <= n, m, n in {0, 1}.
std::vector<GroupMonomial> pbw_basis(int max_degree);

/// <lhs - rhs, x> = 0 for every PBW monomial of degree k + l <= N.
CheckReport relation_check(const Pairing& pg, const DualElement& lhs,
                           const DualElement& rhs, int N,
                           const std::string& label = "");

/// sum <P1, x><P2, y> (signed when pg.graded()) = <X, x y> for PBW x, y of
/// degree k + l <= N.
CheckReport coproduct_check(const Pairing& pg, const DualElement& X,
                            const DualTensor& formula, int N,
                            const std::string& label = "");

}  // namespace gl11
