#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gl11/linear_combination.hpp"
#include "gl11/scalar.hpp"

namespace gl11 {

/// Exponent vector over N letters, read in the fixed normal order
/// letter 0 < letter 1 < ... < letter N-1.
template <std::size_t N>
struct PbwMonomial {
  std::array<std::uint16_t, N> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const { return degree() == 0; }
  auto operator<=>(const PbwMonomial&) const = default;
  bool operator==(const PbwMonomial&) const = default;
};

using Word = std::vector<int>;
using WordSum = LinearCombination<Word>;

enum class Strategy { leftmost, rightmost };

class RewriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Associative algebra presented by generators in a fixed order and
/// rewrite rules for every out-of-order pair x*y (x > y) and for the squares
/// of "capped" generators (whose exponent in a normal monomial is at most 1).
///
/// Products are computed by appending one letter at a time to a normal
/// monomial and rewriting from the right; results are memoized per
/// (monomial, letter). The same rules also drive a plain word rewriter with
/// an explicit strategy, used to probe confluence.
template <std::size_t N>
class PbwAlgebra {
 public:
  using Mono = PbwMonomial<N>;
  using Element = LinearCombination<Mono>;

  PbwAlgebra(std::array<char, N> names, std::array<bool, N> capped,
             std::array<bool, N> odd)
      : names_(names), capped_(capped), odd_(odd) {
    for (std::size_t i = 0; i < N; ++i) display_[i] = std::string(1, names[i]);
  }

  /// Longer printed name for a letter (the one-character code stays the
  /// input form).
  void set_display(int x, std::string name) { display_[x] = std::move(name); }

  void set_rule(int x, int y, WordSum rhs) {
    rules_[x][y] = std::move(rhs);
    cache_.clear();
    mono_cache_.clear();
  }
  const std::optional<WordSum>& rule(int x, int y) const { return rules_[x][y]; }
  bool is_capped(int x) const { return capped_[x]; }
  bool is_odd(int x) const { return odd_[x]; }
  char name(int x) const { return names_[x]; }

  /// Pairs (x, y) whose product must be rewritten.
  bool needs_rule(int x, int y) const { return x > y || (x == y && capped_[x]); }

  bool is_normal(const Mono& m) const {
    for (std::size_t i = 0; i < N; ++i)
      if (capped_[i] && m.e[i] > 1) return false;
    return true;
  }

  int parity(const Mono& m) const {
    int p = 0;
    for (std::size_t i = 0; i < N; ++i)
      if (odd_[i]) p += m.e[i];
    return p & 1;
  }

  static Mono letter(int g) {
    Mono m;
    m.e[g] = 1;
    return m;
  }

  Word to_word(const Mono& m) const {
    Word w;
    for (std::size_t i = 0; i < N; ++i)
      for (int k = 0; k < m.e[i]; ++k) w.push_back(static_cast<int>(i));
    return w;
  }

  std::optional<Mono> word_monomial(const Word& w) const {
    Mono m;
    int last = -1;
    for (int g : w) {
      if (g < last || (g == last && capped_[g])) return std::nullopt;
      ++m.e[g];
      last = g;
    }
    return m;
  }

  std::string to_string(const Mono& m) const {
    std::string out;
    for (std::size_t i = 0; i < N; ++i) {
      if (m.e[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += display_[i];
      if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
    }
    return out.empty() ? "1" : out;
  }

  std::string to_string(const Element& x) const {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : x) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")*" + to_string(m);
    }
    return out;
  }

  /// Normal form of m * g.
  const Element& mul_letter(const Mono& m, int g) const {
    auto key = std::make_pair(m, g);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    if (++depth_ > kMaxDepth) {
      depth_ = 0;
      throw RewriteError("rewriting exceeded the recursion bound");
    }
    Element out = compute_mul_letter(m, g);
    --depth_;
    return cache_.emplace(key, std::move(out)).first->second;
  }

  Element mul_word(const Element& x, const Word& w) const {
    Element cur = x;
    for (int g : w) {
      Element next;
      for (const auto& [m, c] : cur) next.add(mul_letter(m, g), c);
      cur = std::move(next);
    }
    return cur;
  }

  Element mul(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [my, cy] : y) {
      Element part = mul_word(x, to_word(my));
      out.add(part, cy);
    }
    return out;
  }

  /// Normal form of x * y for normal monomials, memoized.
  const Element& mul_mono(const Mono& x, const Mono& y) const {
    auto key = std::make_pair(x, y);
    auto it = mono_cache_.find(key);
    if (it != mono_cache_.end()) return it->second;
    Element out = mul_word(Element(x), to_word(y));
    return mono_cache_.emplace(key, std::move(out)).first->second;
  }

  Element one() const { return Element(Mono{}); }
  Element gen(int g) const { return Element(letter(g)); }

  Element normalize(const Word& w) const { return mul_word(one(), w); }

  Element normalize(const WordSum& s) const {
    Element out;
    for (const auto& [w, c] : s) out.add(normalize(w), c);
    return out;
  }

  /// Rewrites a sum of words to normal form by repeatedly applying one rule
  /// at the leftmost or rightmost reducible position of each word. Normal
  /// forms of intermediate words are memoized for the duration of the call.
  Element rewrite(const WordSum& input, Strategy strategy,
                  std::size_t max_steps = 2000000) const {
    std::map<Word, Element> memo;
    std::size_t steps = 0;
    Element out;
    for (const auto& [w, c] : input)
      out.add(rewrite_word(w, strategy, memo, steps, max_steps, 0), c);
    return out;
  }

 private:
  static constexpr int kMaxDepth = 20000;

  const Element& rewrite_word(const Word& w, Strategy strategy,
                              std::map<Word, Element>& memo, std::size_t& steps,
                              std::size_t max_steps, int depth) const {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    Element out;
    std::optional<std::size_t> pos = redex(w, strategy);
    if (!pos) {
      out.add(*word_monomial(w), Scalar(1));
    } else {
      if (++steps > max_steps || depth > kMaxDepth)
        throw RewriteError("rewriting did not terminate");
      std::size_t i = *pos;
      const auto& rhs = rules_[w[i]][w[i + 1]];
      if (!rhs)
        throw RewriteError(std::string("no rule for ") + names_[w[i]] +
                           names_[w[i + 1]]);
      for (const auto& [r, rc] : *rhs) {
        Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        v.insert(v.end(), r.begin(), r.end());
        v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
        out.add(rewrite_word(v, strategy, memo, steps, max_steps, depth + 1), rc);
      }
    }
    return memo.emplace(w, std::move(out)).first->second;
  }

  std::optional<std::size_t> redex(const Word& w, Strategy s) const {
    if (w.size() < 2) return std::nullopt;
    if (s == Strategy::leftmost) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (needs_rule(w[i], w[i + 1])) return i;
    } else {
      for (std::size_t i = w.size() - 1; i-- > 0;)
        if (needs_rule(w[i], w[i + 1])) return i;
    }
    return std::nullopt;
  }

  Element compute_mul_letter(const Mono& m, int g) const {
    int x = -1;
    for (int i = static_cast<int>(N) - 1; i >= 0; --i) {
      if (m.e[i] != 0) {
        x = i;
        break;
      }
    }
    if (x < 0 || !needs_rule(x, g)) {
      Mono out = m;
      ++out.e[g];
      return Element(out);
    }
    const auto& rhs = rules_[x][g];
    if (!rhs)
      throw RewriteError(std::string("no rule for ") + names_[x] + names_[g]);
    Mono prefix = m;
    --prefix.e[x];
    Element base(prefix);
    Element out;
    for (const auto& [w, c] : *rhs) out.add(mul_word(base, w), c);
    return out;
  }

  std::array<char, N> names_;
  std::array<std::string, N> display_;
  std::array<bool, N> capped_;
  std::array<bool, N> odd_;
  std::array<std::array<std::optional<WordSum>, N>, N> rules_{};
  mutable std::map<std::pair<Mono, int>, Element> cache_;
  mutable std::map<std::pair<Mono, Mono>, Element> mono_cache_;
  mutable int depth_ = 0;
};

/// Builds a WordSum from (word text, coefficient) pairs, letters given by
/// their names in `names`.
template <std::size_t N>
WordSum words(const std::array<char, N>& names,
              std::initializer_list<std::pair<const char*, Scalar>> terms) {
  WordSum out;
  for (const auto& [text, c] : terms) {
    Word w;
    for (const char* p = text; *p; ++p) {
      int idx = -1;
      for (std::size_t i = 0; i < N; ++i)
        if (names[i] == *p) idx = static_cast<int>(i);
      if (idx < 0) throw std::invalid_argument(std::string("unknown letter ") + *p);
      w.push_back(idx);
    }
    out.add(w, c);
  }
  return out;
}

}  // namespace gl11
