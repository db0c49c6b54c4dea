#include "vosa/codes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace vosa {

namespace {

int mod(int a, int q) { return ((a % q) + q) % q; }

int inverse_mod(int a, int q) {
  for (int x = 1; x < q; ++x)
    if (mod(a * x, q) == 1) return x;
  throw std::domain_error("not invertible");
}

// Reduced row echelon basis over F_q.
std::vector<Word> row_basis(std::vector<Word> rows, int q) {
  if (rows.empty()) return rows;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    rows[r] = scale_word(rows[r], inverse_mod(rows[r][col], q), q);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      rows[i] = add_words(rows[i], scale_word(rows[r], q - rows[i][col], q), q);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

using Poly3 = std::vector<int>;  // coefficients, lowest degree first

Poly3 poly_mod(Poly3 a, const Poly3& m) {
  while (a.size() >= m.size()) {
    int lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - m.size();
      for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = mod(a[shift + i] - lead * m[i], 3);
    }
    a.pop_back();
  }
  return a;
}

bool is_zero_poly(const Poly3& p) {
  return std::all_of(p.begin(), p.end(), [](int c) { return c == 0; });
}

TernaryCode cyclic_extended(const Poly3& g, int ext_sign) {
  const int n = 11;
  TernaryCode c;
  c.length = n + 1;
  for (int k = 0; k + static_cast<int>(g.size()) <= n; ++k) {
    Word w(n + 1, 0);
    for (std::size_t i = 0; i < g.size(); ++i) w[k + i] = g[i];
    int s = std::accumulate(w.begin(), w.end(), 0);
    w[n] = mod(ext_sign * s, 3);
    c.generators.push_back(w);
  }
  return c;
}

}  // namespace

Word add_words(const Word& a, const Word& b, int q) {
  Word r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] + b[i], q);
  return r;
}

Word scale_word(const Word& a, int s, int q) {
  Word r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] * s, q);
  return r;
}

int weight(const Word& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](int x) { return x != 0; }));
}

int dot_mod(const Word& a, const Word& b, int q) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = mod(s + a[i] * b[i], q);
  return s;
}

int rank_mod(std::vector<Word> rows, int q) { return static_cast<int>(row_basis(std::move(rows), q).size()); }

bool BinaryCode::contains(const Word& w) const { return std::binary_search(words.begin(), words.end(), w); }

DCodeFamily d_code_family(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  DCodeFamily f;
  f.code.length = 2 * n;
  for (std::uint32_t half = 0; half < (1u << n); ++half) {
    Word w(2 * n, 0);
    for (int i = 0; i < n; ++i) w[i] = w[n + i] = (half >> (n - 1 - i)) & 1u;
    if (weight(w) % 4 == 0) f.code.words.push_back(w);
  }
  std::sort(f.code.words.begin(), f.code.words.end());
  Word g0(2 * n, 0), g1(2 * n, 0), g2(2 * n, 0), g3(2 * n, 0);
  for (int i = 0; i < n; ++i) g1[i] = 1;
  g2[n - 1] = g2[2 * n - 1] = 1;
  for (int i = 0; i < n - 1; ++i) g3[i] = 1;
  g3[2 * n - 1] = 1;
  f.glue = {g0, g1, g2, g3};
  return f;
}

std::vector<Word> d_code_coset(const DCodeFamily& f, int i) {
  std::vector<Word> out;
  for (const auto& w : f.code.words) out.push_back(add_words(w, f.glue.at(i), 2));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> TernaryCode::words() const {
  auto basis = row_basis(generators, 3);
  std::vector<Word> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) total *= 3;
  out.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Word w(length, 0);
    std::size_t t = idx;
    for (const auto& b : basis) {
      int coef = static_cast<int>(t % 3);
      t /= 3;
      if (coef) w = add_words(w, scale_word(b, coef, 3), 3);
    }
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool TernaryCode::contains(const Word& w) const {
  auto rows = generators;
  int r = rank_mod(rows, 3);
  rows.push_back(w);
  return rank_mod(rows, 3) == r;
}

std::map<int, std::int64_t> weight_distribution(const TernaryCode& c) {
  std::map<int, std::int64_t> d;
  for (const auto& w : c.words()) ++d[weight(w)];
  return d;
}

int minimum_weight(const TernaryCode& c) {
  int best = c.length + 1;
  for (const auto& w : c.words()) {
    int wt = weight(w);
    if (wt > 0) best = std::min(best, wt);
  }
  return best;
}

bool self_orthogonal(const TernaryCode& c) {
  for (const auto& a : c.generators)
    for (const auto& b : c.generators)
      if (dot_mod(a, b, 3) != 0) return false;
  return true;
}

TernaryCode golay12() {
  // Monic degree-5 divisors of x^11 - 1 over F_3, in a fixed search order.
  Poly3 x11(12, 0);
  x11[0] = 2;
  x11[11] = 1;
  for (int idx = 0; idx < 243; ++idx) {
    Poly3 g(6, 0);
    int t = idx;
    for (int i = 0; i < 5; ++i) {
      g[i] = t % 3;
      t /= 3;
    }
    g[5] = 1;
    if (g[0] == 0 || !is_zero_poly(poly_mod(x11, g))) continue;
    for (int ext : {2, 1}) {
      TernaryCode c = cyclic_extended(g, ext);
      if (c.dimension() != 6 || !self_orthogonal(c) || minimum_weight(c) != 6) continue;
      // Flip signs along the first full-weight word.
      Word full;
      for (const auto& w : c.words())
        if (weight(w) == 12) {
          full = w;
          break;
        }
      TernaryCode n;
      n.length = 12;
      for (const auto& gen : c.generators) {
        Word v(12);
        for (int i = 0; i < 12; ++i) v[i] = mod(gen[i] * (full[i] == 1 ? 1 : -1), 3);
        n.generators.push_back(v);
      }
      n.generators = row_basis(n.generators, 3);
      if (!n.contains(Word(12, 1)) || !self_orthogonal(n) || minimum_weight(n) != 6)
        throw std::runtime_error("golay construction invalid");
      return n;
    }
  }
  throw std::runtime_error("golay construction invalid");
}

TernaryCode permute_code(const TernaryCode& c, const std::vector<int>& perm) {
  TernaryCode out;
  out.length = c.length;
  for (const auto& g : c.generators) {
    Word w(c.length);
    for (int j = 0; j < c.length; ++j) w[j] = g[perm[j]];
    out.generators.push_back(w);
  }
  return out;
}

std::vector<int> split_permutation(const TernaryCode& c) {
  for (const auto& w : c.words()) {
    if (std::count(w.begin(), w.end(), 1) != 6 || std::count(w.begin(), w.end(), 2) != 6) continue;
    std::vector<int> perm;
    for (int i = 0; i < c.length; ++i)
      if (w[i] == 1) perm.push_back(i);
    for (int i = 0; i < c.length; ++i)
      if (w[i] == 2) perm.push_back(i);
    return perm;
  }
  throw std::runtime_error("no balanced word");
}

std::vector<Word> golay_lambda_words(const TernaryCode& g) {
  std::vector<Word> out;
  for (const auto& w : g.words())
    if (w[0] == 1 && std::count(w.begin(), w.end(), 1) == 6 && std::count(w.begin(), w.end(), 2) == 6)
      out.push_back(w);
  if (out.size() != 11) throw std::runtime_error("lambda basis invalid");
  out.push_back(Word(g.length, 1));
  return out;
}

std::vector<RVec> golay_lambda_basis(const TernaryCode& g) {
  std::vector<RVec> basis;
  for (const auto& w : golay_lambda_words(g)) {
    RVec v(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) v[i] = Rational(w[i] == 1 ? 1 : -1, 2);
    basis.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (dot(basis[i], basis[j]) != (i == j ? 3 : 0)) throw std::runtime_error("lambda basis invalid");
  return basis;
}

Word MonomialMap::apply(const Word& w) const {
  Word r(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) r[j] = mod(sign[j] * w[perm[j]], 3);
  return r;
}

std::optional<MonomialMap> find_monomial_map(const TernaryCode& from, const TernaryCode& to, int pinned) {
  if (from.length != to.length) return std::nullopt;
  const int n = from.length;
  const auto src = from.words();
  const auto dst = to.words();
  if (src.size() != dst.size()) return std::nullopt;

  MonomialMap m;
  m.perm.assign(n, -1);
  m.sign.assign(n, 1);
  std::vector<bool> used(n, false);
  // Base-3 codes of each word restricted to the first j target coordinates.
  std::vector<long> src_key(src.size(), 0), dst_key(dst.size(), 0);

  std::function<bool(int)> rec = [&](int j) {
    if (j == n) return true;
    std::vector<long> dnext(dst.size());
    for (std::size_t k = 0; k < dst.size(); ++k) dnext[k] = dst_key[k] * 3 + dst[k][j];
    std::set<long> dset(dnext.begin(), dnext.end());
    for (int p = 0; p < n; ++p) {
      if (used[p] || (j < pinned && p != j)) continue;
      for (int sg : {1, -1}) {
        if (j == 0 && sg == -1) continue;  // negation is always an automorphism
        std::vector<long> snext(src.size());
        std::set<long> sset;
        for (std::size_t k = 0; k < src.size(); ++k) {
          snext[k] = src_key[k] * 3 + mod(sg * src[k][p], 3);
          sset.insert(snext[k]);
        }
        if (sset != dset) continue;
        auto saved_s = src_key;
        auto saved_d = dst_key;
        src_key = snext;
        dst_key = dnext;
        used[p] = true;
        m.perm[j] = p;
        m.sign[j] = sg;
        if (rec(j + 1)) return true;
        used[p] = false;
        src_key = saved_s;
        dst_key = saved_d;
      }
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  std::set<Word> image;
  for (const auto& w : src) image.insert(m.apply(w));
  if (!std::equal(image.begin(), image.end(), dst.begin(), dst.end())) return std::nullopt;
  return m;
}

std::int64_t MarkedEnumerator::coeff(const std::array<int, 6>& e) const {
  auto it = coeffs.find(e);
  return it == coeffs.end() ? 0 : it->second;
}

std::int64_t MarkedEnumerator::total() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : coeffs) s += c;
  return s;
}

MarkedEnumerator weight_enumerator(const TernaryCode& c, bool marked) {
  if (marked && c.length % 2 != 0) throw std::invalid_argument("marking needs even length");
  const int half = marked ? c.length / 2 : c.length;
  MarkedEnumerator m;
  for (const auto& w : c.words()) {
    std::array<int, 6> e{};
    for (int i = 0; i < c.length; ++i) ++e[(i < half ? 0 : 3) + w[i]];
    ++m.coeffs[e];
  }
  return m;
}

void to_json(nlohmann::json& j, const BinaryCode& c) {
  j = {{"q", 2}, {"n", c.length}, {"gens", row_basis(c.words, 2)}};
}

void to_json(nlohmann::json& j, const TernaryCode& c) {
  j = {{"q", 3}, {"n", c.length}, {"gens", row_basis(c.generators, 3)}};
}

}  // namespace vosa
