#include "gl11/quantum_plane.hpp"

#include <chrono>

#include "json.hpp"

namespace gl11 {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string word_text(const Word& w) {
  std::string s;
  for (int g : w) s += kGroupNames[g];
  return s.empty() ? "1" : s;
}

// eta = diag(1, 1, 1, -1) on the basis index (ij) = 2i + j.
int eta(int i, int j) { return (i == 1 && j == 1) ? -1 : 1; }

// T = [[a, b], [c, d]].
int t_letter(int i, int j) {
  static const int t[2][2] = {{kLa, kLb}, {kLc, kLd}};
  return t[i][j];
}

const char* kMatrixSpecs[][5] = {
    {"r22", "r,0,0,0", "0,1,r*(1-q^-1),0", "0,0,r^2*q^-1,0", "0,0,0,-r*q^-1"},
    {"r12", "1,0,0,r", "0,1,1-q^-1,0", "0,0,q^-1,0", "0,0,0,-q^-1"},
    {"r11", "(s+1)/r,0,0,s/r", "0,1,s/r,0", "0,s/r,1,0", "s/r,0,0,(s-1)/r"},
    {"superidentity", "1,0,0,0", "0,1,0,0", "0,0,1,0", "0,0,0,-1"},
    {"identity", "1,0,0,0", "0,1,0,0", "0,0,1,0", "0,0,0,1"},
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out(1);
  for (char ch : s) {
    if (ch == ',') out.emplace_back();
    else out.back() += ch;
  }
  return out;
}

CheckReport make_report(std::string id, CaseId c, const std::string& fw,
                        const Params& params) {
  CheckReport r;
  r.id = std::move(id);
  r.case_name = std::string(to_string(c));
  r.framework = fw;
  r.params.mode = params.numeric ? "numeric" : "symbolic";
  return r;
}

}  // namespace

GroupMonomial group_monomial(int k, int l, int m, int n) {
  GroupMonomial g;
  g.e = {static_cast<std::uint16_t>(k), static_cast<std::uint16_t>(l),
         static_cast<std::uint16_t>(m), static_cast<std::uint16_t>(n)};
  return g;
}

WordSum group_words(std::initializer_list<std::pair<const char*, Scalar>> terms) {
  return words(kGroupNames, terms);
}

Word group_word(const std::string& letters) {
  return group_words({{letters.c_str(), Scalar(1)}}).begin()->first;
}

// ------------------------------------------------------------------ RMatrix

RMatrix RMatrix::identity() {
  RMatrix R;
  R.name = "identity";
  for (int i = 0; i < 4; ++i) R.m[i][i] = Scalar(1);
  return R;
}

RMatrix RMatrix::builtin(const std::string& name, const Params& params) {
  for (const auto& spec : kMatrixSpecs) {
    if (name != spec[0]) continue;
    RMatrix R;
    R.name = name;
    for (int i = 0; i < 4; ++i) {
      auto cells = split_commas(spec[i + 1]);
      for (int j = 0; j < 4; ++j) R.m[i][j] = params.parse(cells[j]);
    }
    return R;
  }
  throw std::invalid_argument("unknown R-matrix '" + name + "'");
}

RMatrix RMatrix::from_json(const std::string& text, const Params& params) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("R-matrix JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries"))
    throw std::invalid_argument("R-matrix JSON needs an \"entries\" array");
  const auto& rows = doc.at("entries");
  if (!rows.is_array() || rows.size() != 4)
    throw std::invalid_argument("R-matrix JSON: expected 4 rows");
  RMatrix R;
  R.name = doc.value("name", "custom");
  for (int i = 0; i < 4; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 4)
      throw std::invalid_argument("R-matrix JSON: expected 4 entries per row");
    for (int j = 0; j < 4; ++j) {
      if (!rows[i][j].is_string())
        throw std::invalid_argument("R-matrix JSON: entries must be strings");
      R.m[i][j] = params.parse(rows[i][j].get<std::string>());
    }
  }
  return R;
}

std::string RMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const Scalar& x : row) r.push_back(x.to_string());
    rows.push_back(r);
  }
  return nlohmann::json{{"name", name}, {"entries", rows}}.dump();
}

RMatrix case_rmatrix(CaseId c, const Params& params) {
  switch (c) {
    case CaseId::classical: return RMatrix::builtin("superidentity", params);
    case CaseId::r22: return RMatrix::builtin("r22", params);
    case CaseId::r12: return RMatrix::builtin("r12", params);
    case CaseId::r11: return RMatrix::builtin("r11", params);
  }
  throw std::invalid_argument("unknown case");
}

// ------------------------------------------------------------- Presentation

Presentation::Presentation(CaseId c, Framework f, Params params)
    : case_(c),
      framework_(f),
      params_(std::move(params)),
      algebra_(kGroupNames, {false, false, true, true}, {false, false, true, true}) {
  const Scalar& q = params_.q;
  const Scalar& r = params_.r;
  const Scalar& s = params_.s;
  const bool braided = f == Framework::braided;
  const Scalar sg = braided ? Scalar(-1) : Scalar(1);  // flips b,c past a,d
  switch (c) {
    case CaseId::classical:
      add("da", group_words({{"ad", 1}}));
      add("ba", group_words({{"ab", 1}}));
      add("ca", group_words({{"ac", 1}}));
      add("bd", group_words({{"db", -sg}}));
      add("cd", group_words({{"dc", -sg}}));
      add("cb", group_words({{"bc", sg}}));
      add("bb", {});
      add("cc", {});
      break;
    case CaseId::r22:
      add("ba", group_words({{"ab", r}}));
      add("ca", group_words({{"ac", q / r}}));
      add("bd", group_words({{"db", -sg * r}}));
      add("cd", group_words({{"dc", -sg * q / r}}));
      add("da", group_words({{"ad", 1}, {"bc", sg * (q - 1) / r}}));
      add("cb", group_words({{"bc", sg * q / (r * r)}}));
      add("bb", {});
      add("cc", {});
      break;
    case CaseId::r12:
      add("ba", group_words({{"ab", 1}, {"dc", -r * q}}));
      add("ca", group_words({{"ac", q}}));
      add("bd", group_words({{"db", -sg}, {"ac", sg * r * q}}));
      add("cd", group_words({{"dc", -sg * q}}));
      add("da", group_words({{"ad", 1}, {"bc", sg * (q - 1)}}));
      add("cb", group_words({{"bc", sg * q}}));
      add("bb", group_words({{"aa", r * q / (q + 1)}, {"dd", -r * q / (q + 1)}}));
      add("cc", {});
      break;
    case CaseId::r11: {
      Scalar half_s = s * Scalar::rational(1, 2);
      add("ba", group_words({{"ab", r}, {"dc", -s}}));
      add("ca", group_words({{"ac", r}, {"db", -s}}));
      add("bd", group_words({{"db", -sg * r}, {"ac", sg * s}}));
      add("cd", group_words({{"dc", -sg * r}, {"ab", sg * s}}));
      add("da", group_words({{"ad", 1}}));
      add("cb", group_words({{"bc", sg}}));
      add("bb", group_words({{"aa", half_s}, {"dd", -half_s}}));
      add("cc", group_words({{"aa", sg * half_s}, {"dd", -sg * half_s}}));
      break;
    }
  }
}

void Presentation::add(const char* lhs, WordSum rhs) {
  Word w = group_word(lhs);
  algebra_.set_rule(w[0], w[1], rhs);
  rules_.push_back({w, std::move(rhs)});
}

std::string Presentation::rule_text(const Rule& r) const {
  std::string out = word_text(r.lhs) + " -> ";
  if (r.rhs.is_zero()) return out + "0";
  bool first = true;
  for (const auto& [w, c] : r.rhs) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.to_string() + ")*" + word_text(w);
  }
  return out;
}

// ---------------------------------------------------------------------- FRT

std::array<WordSum, 16> frt_relations(const RMatrix& R, Framework f) {
  const bool braided = f == Framework::braided;
  std::array<WordSum, 16> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          WordSum& rel = out[4 * (2 * i + j) + (2 * k + l)];
          for (int m = 0; m < 2; ++m)
            for (int n = 0; n < 2; ++n) {
              // (R T1 T2): R_(ij),(mn) times (T1 T2)_(mn),(kl).
              const Scalar& left = R.m[2 * i + j][2 * m + n];
              if (!left.is_zero()) {
                int sign = braided ? eta(m, n) * eta(k, n) : 1;
                rel.add(Word{t_letter(m, k), t_letter(n, l)}, left * Scalar(sign));
              }
              // (T2 T1 R): (T2 T1)_(ij),(mn) times R_(mn),(kl).
              const Scalar& right = R.m[2 * m + n][2 * k + l];
              if (!right.is_zero()) {
                int sign = braided ? eta(i, j) * eta(i, n) : 1;
                rel.add(Word{t_letter(j, n), t_letter(i, m)}, -right * Scalar(sign));
              }
            }
        }
  return out;
}

CheckReport check_frt_consistency(const Presentation& pres, const RMatrix& R) {
  auto t0 = Clock::now();
  const Params& params = pres.params();
  CheckReport rep = make_report("frt", pres.case_id(),
                                std::string(to_string(pres.framework())), params);
  auto rels = frt_relations(R, pres.framework());

  // FRT relations vanish in the presented algebra.
  for (int idx = 0; idx < 16; ++idx) {
    GroupElement x = pres.normalize(rels[idx]);
    collect_residuals(pres.algebra(), x, params,
                      "FRT entry (" + std::to_string(idx / 4 + 1) + "," +
                          std::to_string(idx % 4 + 1) + ")",
                      rep.residuals);
  }

  // Presentation rules lie in the span of the FRT relations. All relations
  // are quadratic, so reducing by the row-echelon form of the 16 relations
  // (pivots preferably on words that need rewriting) is the rewriting system
  // they generate in degree 2.
  const GroupAlgebra& alg = pres.algebra();
  std::vector<int> columns;
  for (int pass = 0; pass < 2; ++pass)
    for (int x = 3; x >= 0; --x)
      for (int y = 3; y >= 0; --y)
        if (alg.needs_rule(x, y) == (pass == 0)) columns.push_back(4 * x + y);

  using Row = std::array<Scalar, 16>;
  std::vector<Row> rows;
  for (const WordSum& rel : rels) {
    Row row;
    for (const auto& [w, c] : rel) row[4 * w[0] + w[1]] += c;
    rows.push_back(row);
  }
  std::vector<std::pair<int, Row>> pivots;
  for (int col : columns) {
    auto it = std::find_if(rows.begin(), rows.end(),
                           [&](const Row& r) { return !r[col].is_zero(); });
    if (it == rows.end()) continue;
    Row piv = *it;
    rows.erase(it);
    Scalar inv = piv[col].inverse();
    for (Scalar& x : piv) x *= inv;
    for (Row& r : rows) {
      if (r[col].is_zero()) continue;
      Scalar f = r[col];
      for (int j = 0; j < 16; ++j)
        if (!piv[j].is_zero()) r[j] -= f * piv[j];
    }
    pivots.emplace_back(col, piv);
  }

  for (const auto& rule : pres.rules()) {
    Row v;
    v[4 * rule.lhs[0] + rule.lhs[1]] += Scalar(1);
    for (const auto& [w, c] : rule.rhs) v[4 * w[0] + w[1]] -= c;
    for (const auto& [col, piv] : pivots) {
      if (v[col].is_zero()) continue;
      Scalar f = v[col];
      for (int j = 0; j < 16; ++j)
        if (!piv[j].is_zero()) v[j] -= f * piv[j];
    }
    for (int j = 0; j < 16; ++j)
      if (!params.is_zero(v[j]))
        rep.residuals.push_back(
            {"rule " + word_text(rule.lhs) + " modulo FRT @ " +
                 word_text(Word{j / 4, j % 4}),
             v[j].to_string()});
  }

  rep.status = rep.residuals.empty() ? Status::PASS : Status::FAIL;
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

// ---------------------------------------------------------------------- YBE

CheckReport ybe_check(const RMatrix& R, const Params& params) {
  auto t0 = Clock::now();
  CheckReport rep;
  rep.id = "ybe";
  rep.case_name = R.name;
  rep.framework = "-";
  rep.params.mode = params.numeric ? "numeric" : "symbolic";

  using M8 = std::array<std::array<Scalar, 8>, 8>;
  auto bit = [](int x, int k) { return (x >> (2 - k)) & 1; };
  // R acting on tensor slots (s, t) of (C^2)^(x)3, identity on the third.
  auto embed = [&](int s, int t) {
    M8 out;
    int u = 3 - s - t;
    for (int row = 0; row < 8; ++row)
      for (int col = 0; col < 8; ++col) {
        if (bit(row, u) != bit(col, u)) continue;
        out[row][col] = R.m[2 * bit(row, s) + bit(row, t)][2 * bit(col, s) + bit(col, t)];
      }
    return out;
  };
  auto mul = [](const M8& x, const M8& y) {
    M8 out;
    for (int i = 0; i < 8; ++i)
      for (int k = 0; k < 8; ++k) {
        if (x[i][k].is_zero()) continue;
        for (int j = 0; j < 8; ++j)
          if (!y[k][j].is_zero()) out[i][j] += x[i][k] * y[k][j];
      }
    return out;
  };
  M8 r12 = embed(0, 1);
  M8 r13 = embed(0, 2);
  M8 r23 = embed(1, 2);
  M8 lhs = mul(mul(r12, r13), r23);
  M8 rhs = mul(mul(r23, r13), r12);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Scalar d = lhs[i][j] - rhs[i][j];
      if (!params.is_zero(d))
        rep.residuals.push_back({"entry (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ")",
                                 d.to_string()});
    }
  rep.status = rep.residuals.empty() ? Status::PASS : Status::FAIL;
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

// --------------------------------------------------------------- confluence

CheckReport confluence_probe(const Presentation& pres, int samples,
                             std::uint64_t seed, int max_length) {
  auto t0 = Clock::now();
  CheckReport rep = make_report("confluence", pres.case_id(),
                                std::string(to_string(pres.framework())),
                                pres.params());
  rep.params.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> letter(0, 3);
  const GroupAlgebra& alg = pres.algebra();
  for (int i = 0; i < samples; ++i) {
    Word w(static_cast<std::size_t>(len(rng)));
    for (int& g : w) g = letter(rng);
    WordSum input(w);
    GroupElement left = alg.rewrite(input, Strategy::leftmost);
    GroupElement right = alg.rewrite(input, Strategy::rightmost);
    GroupElement diff = left - right;
    collect_residuals(alg, diff, pres.params(), "word " + word_text(w), rep.residuals);
    if (!rep.residuals.empty()) break;  // first diverging word only
  }
  rep.status = rep.residuals.empty() ? Status::PASS : Status::FAIL;
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

}  // namespace gl11
