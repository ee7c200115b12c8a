#pragma once

#include <array>
#include <map>
#include <vector>

#include "gl11/quantum_plane.hpp"

namespace gl11 {

using TensorKey = std::vector<GroupMonomial>;
using TensorElement = LinearCombination<TensorKey>;

/// Matrix comultiplication a -> a(x)a + b(x)c, b -> a(x)b + b(x)d,
/// c -> c(x)a + d(x)c, d -> c(x)b + d(x)d on a deformed function algebra,
/// extended multiplicatively. In the braided framework tensor factors
/// multiply with the sign (-1)^(deg y1 deg x2); `graded` can override that
/// (used by negative controls).
class Coproduct {
 public:
  explicit Coproduct(const Presentation& pres);
  Coproduct(const Presentation& pres, bool graded);

  const Presentation& presentation() const { return pres_; }
  bool graded() const { return graded_; }

  const TensorElement& delta(const GroupMonomial& m) const;
  TensorElement delta(const GroupElement& x) const;
  /// Delta applied n-1 times, always to the leftmost factor.
  TensorElement delta_n(const GroupElement& x, int n) const;
  /// Applies delta to tensor slot `slot`, increasing the arity by one.
  TensorElement delta_at(const TensorElement& t, std::size_t slot) const;

  TensorElement tensor_mul(const TensorElement& x, const TensorElement& y) const;
  TensorElement tensor(const std::vector<GroupElement>& factors) const;

  std::string to_string(const TensorElement& t) const;

 private:
  const Presentation& pres_;
  bool graded_;
  mutable std::map<GroupMonomial, TensorElement> cache_;
};

/// Coefficient polynomials in the commuting variables a1, d1, a2, d2.
/// Keys are exponent vectors (a1, d1, a2, d2).
using CoeffPoly = std::map<std::array<int, 4>, Scalar>;

enum class Family { plain, b, c, bc };

/// Tag (i j, i' j'): powers of b, c in the first and second tensor factor.
struct CoeffTag {
  int i = 0, j = 0, ip = 0, jp = 0;
  int index() const { return 8 * i + 4 * j + 2 * ip + jp; }
  int parity() const { return (i + j + ip + jp) & 1; }
  auto operator<=>(const CoeffTag&) const = default;
};

/// The 16 polynomials of Delta(a^k d^l t), t in {1, b, c, bc}, indexed by
/// CoeffTag::index(). Lossless: reassemble() gives back the tensor.
std::array<CoeffPoly, 16> extract_coeff_polys(const Coproduct& cop, int k, int l,
                                              Family family);
std::array<CoeffPoly, 16> coeff_polys_of(const TensorElement& t);
TensorElement reassemble(const std::array<CoeffPoly, 16>& polys);

struct EvalPoint {
  std::array<Scalar, 4> v;  // a1, d1, a2, d2

  static EvalPoint ones();
  /// (q^-e1, -q^-e1, q^-e2, -q^-e2) with e1, e2 in {+1, -1}.
  static EvalPoint meps(const Scalar& q, int e1, int e2);
};

/// Value at `pt` of the polynomial after applying d^n/dx^n for each
/// variable x with derivative order n = deriv[x].
Scalar eval_coeff(const CoeffPoly& poly, const EvalPoint& pt,
                  std::array<int, 4> deriv = {0, 0, 0, 0});

}  // namespace gl11
