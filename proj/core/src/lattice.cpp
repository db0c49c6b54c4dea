#include "vosa/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace vosa {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("coefficient overflow");
  return static_cast<std::int64_t>(v);
}

// Solves A a = b for square invertible A; returns false if singular.
bool solve(RMat a, RVec b, RVec& out) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[i][k] -= f * a[col][k];
      b[i] -= f * b[col];
    }
  }
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = b[i] / a[i][i];
  return true;
}

Rational det(RMat a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      d = -d;
    }
    d *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      Rational f = a[i][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[i][k] -= f * a[col][k];
    }
  }
  return d;
}

std::int64_t common_den(const RMat& m) {
  std::int64_t d = 1;
  for (const auto& row : m)
    for (const auto& x : row) d = lcm64(d, x.denominator());
  return d;
}

RVec unit(int n, int i, Rational v = 1) {
  RVec e(n, Rational(0));
  e[i] = v;
  return e;
}

Lattice d_lattice(int n) {
  RMat rows;
  if (n == 1) {
    rows.push_back(unit(1, 0, 2));
  } else {
    for (int i = 0; i + 1 < n; ++i) {
      RVec r(n, Rational(0));
      r[i] = 1;
      r[i + 1] = -1;
      rows.push_back(r);
    }
    RVec r(n, Rational(0));
    r[n - 2] = 1;
    r[n - 1] = 1;
    rows.push_back(r);
  }
  return Lattice::from_basis(rows);
}

}  // namespace

Lattice Lattice::from_basis(RMat rows) {
  Lattice l;
  l.basis_ = std::move(rows);
  if (!l.basis_.empty() && det(l.gram()) == 0) throw std::invalid_argument("basis not independent");
  return l;
}

Lattice Lattice::from_generators(const RMat& gens) {
  if (gens.empty()) return Lattice();
  const std::int64_t d = common_den(gens);
  const std::size_t n = gens[0].size();
  std::vector<std::vector<std::int64_t>> m;
  for (const auto& g : gens) {
    std::vector<std::int64_t> row(n);
    for (std::size_t k = 0; k < n; ++k) row[k] = narrow(static_cast<i128>(g[k].numerator()) * (d / g[k].denominator()));
    m.push_back(row);
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m.size(); ++col) {
    while (true) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i)
        if (m[i][col] != 0 && (best == m.size() || std::llabs(m[i][col]) < std::llabs(m[best][col]))) best = i;
      if (best == m.size()) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        std::int64_t q = m[i][col] / m[r][col];
        for (std::size_t k = 0; k < n; ++k) m[i][k] = narrow(static_cast<i128>(m[i][k]) - static_cast<i128>(q) * m[r][k]);
        if (m[i][col] != 0) done = false;
      }
      if (done) {
        ++r;
        break;
      }
    }
  }
  RMat rows;
  for (std::size_t i = 0; i < r; ++i) {
    RVec v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = Rational(m[i][k], d);
    rows.push_back(v);
  }
  return from_basis(rows);
}

RMat Lattice::gram() const {
  RMat g(basis_.size(), RVec(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i; j < basis_.size(); ++j) g[i][j] = g[j][i] = dot(basis_[i], basis_[j]);
  return g;
}

Rational Lattice::determinant() const { return det(gram()); }

bool Lattice::is_integral() const {
  for (const auto& row : gram())
    for (const auto& x : row)
      if (x.denominator() != 1) return false;
  return true;
}

bool Lattice::is_even() const {
  if (!is_integral()) return false;
  auto g = gram();
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i][i].numerator() % 2 != 0) return false;
  return true;
}

bool Lattice::span_coordinates(const RVec& x, RVec& coords) const {
  if (static_cast<int>(x.size()) != dim()) throw std::invalid_argument("dimension mismatch");
  RVec rhs(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) rhs[i] = dot(basis_[i], x);
  if (!solve(gram(), rhs, coords)) return false;
  RVec back(x.size(), Rational(0));
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t k = 0; k < x.size(); ++k) back[k] += coords[i] * basis_[i][k];
  return back == x;
}

bool Lattice::contains(const RVec& x) const {
  RVec c;
  if (!span_coordinates(x, c)) return false;
  return std::all_of(c.begin(), c.end(), [](const Rational& r) { return r.denominator() == 1; });
}

bool Lattice::contains(const Lattice& sub) const {
  return std::all_of(sub.basis().begin(), sub.basis().end(), [&](const RVec& v) { return contains(v); });
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  RMat rows;
  const int n = a.dim() + b.dim();
  for (const auto& r : a.basis()) {
    RVec v(n, Rational(0));
    std::copy(r.begin(), r.end(), v.begin());
    rows.push_back(v);
  }
  for (const auto& r : b.basis()) {
    RVec v(n, Rational(0));
    std::copy(r.begin(), r.end(), v.begin() + a.dim());
    rows.push_back(v);
  }
  return Lattice::from_basis(rows);
}

bool Coset::contains(const RVec& x) const {
  RVec d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - shift[i];
  return lattice.contains(d);
}

Coset direct_sum(const Coset& a, const Coset& b) {
  Coset c{direct_sum(a.lattice, b.lattice), a.shift};
  c.shift.insert(c.shift.end(), b.shift.begin(), b.shift.end());
  return c;
}

Coset lattice_coset(const Lattice& l) { return Coset{l, RVec(l.dim(), Rational(0))}; }

RVec d_glue(int n, int i) {
  RVec v(n, Rational(0));
  switch (i) {
    case 0:
      break;
    case 1:
      std::fill(v.begin(), v.end(), Rational(1, 2));
      break;
    case 2:
      v[n - 1] = 1;
      break;
    case 3:
      std::fill(v.begin(), v.end(), Rational(1, 2));
      v[n - 1] = Rational(-1, 2);
      break;
    default:
      throw std::invalid_argument("glue index out of range");
  }
  return v;
}

Lattice a1_in_d(int n) {
  RMat rows;
  for (int sign : {1, -1})
    for (int i = 0; i < n; ++i) {
      RVec v(2 * n, Rational(0));
      v[i] = 1;
      v[n + i] = sign;
      rows.push_back(v);
    }
  return Lattice::from_basis(rows);
}

Coset make_lattice(const std::string& spec) {
  std::smatch m;
  static const std::regex z_re(R"(^Z\^?(\d+)$)"), d_re(R"(^D_?(\d+)$)"), dc_re(R"(^D_?(\d+)\+\[(\d)\]$)"),
      dp_re(R"(^D_?(\d+)\+$)"), a1_re(R"(^A1\^?(\d+)$)"), s3_re(R"(^sqrt3Z\^?(\d+)$)");
  auto num = [&](int k) {
    int v = std::stoi(m[k].str());
    if (v < 1 || v > 64) throw std::invalid_argument("rank out of range");
    return v;
  };
  if (std::regex_match(spec, m, z_re)) {
    int n = num(1);
    RMat rows;
    for (int i = 0; i < n; ++i) rows.push_back(unit(n, i));
    return lattice_coset(Lattice::from_basis(rows));
  }
  if (std::regex_match(spec, m, d_re)) return lattice_coset(d_lattice(num(1)));
  if (std::regex_match(spec, m, dc_re)) {
    int n = num(1);
    return Coset{d_lattice(n), d_glue(n, std::stoi(m[2].str()))};
  }
  if (spec == "E8" || std::regex_match(spec, m, dp_re)) {
    int n = spec == "E8" ? 8 : num(1);
    if (n % 4 != 0) throw std::domain_error("not integral");
    RMat gens = d_lattice(n).basis();
    gens.push_back(d_glue(n, 1));
    return lattice_coset(Lattice::from_generators(gens));
  }
  if (std::regex_match(spec, m, a1_re) || std::regex_match(spec, m, s3_re)) {
    int n = num(1);
    int block = spec.rfind("A1", 0) == 0 ? 2 : 3;
    RMat rows;
    for (int i = 0; i < n; ++i) {
      RVec v(block * n, Rational(0));
      for (int k = 0; k < block; ++k) v[block * i + k] = 1;
      rows.push_back(v);
    }
    return lattice_coset(Lattice::from_basis(rows));
  }
  throw std::invalid_argument("unknown lattice: " + spec);
}

Rational IntQuadForm::eval(const std::vector<std::int64_t>& y) const { return Rational(raw(y), den); }

std::int64_t IntQuadForm::raw(const std::vector<std::int64_t>& y) const {
  i128 s = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0) continue;
    i128 row = 0;
    for (std::size_t j = 0; j < y.size(); ++j) row += static_cast<i128>(m[i][j]) * y[j];
    s += row * y[i];
  }
  return narrow(s);
}

Rational IntLinForm::eval(const std::vector<std::int64_t>& y) const { return Rational(raw(y), den); }

std::int64_t IntLinForm::raw(const std::vector<std::int64_t>& y) const {
  i128 s = 0;
  for (std::size_t i = 0; i < y.size(); ++i) s += static_cast<i128>(c[i]) * y[i];
  return narrow(s);
}

CosetPoints::CosetPoints(const Coset& c) : coset_(c), rank_(c.lattice.rank()) {
  RVec sc;
  if (!c.lattice.span_coordinates(c.shift, sc)) throw std::invalid_argument("shift not in span");
  for (const auto& x : sc) yden_ = lcm64(yden_, x.denominator());
  for (const auto& x : sc) yshift_.push_back(x.numerator() * (yden_ / x.denominator()));
  RMat id(c.lattice.dim(), RVec(c.lattice.dim(), Rational(0)));
  for (int i = 0; i < c.lattice.dim(); ++i) id[i][i] = 1;
  norm_ = quad(id);

  const RMat g = c.lattice.gram();
  const int r = rank_;
  std::vector<std::vector<double>> gd(r, std::vector<double>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gd[i][j] = boost::rational_cast<double>(g[i][j]);
  chol_.assign(r, std::vector<double>(r, 0.0));
  diag_.assign(r, 0.0);
  for (int i = 0; i < r; ++i) {
    double s = gd[i][i];
    for (int k = 0; k < i; ++k) s -= diag_[k] * chol_[k][i] * chol_[k][i];
    diag_[i] = s;
    for (int j = i + 1; j < r; ++j) {
      double t = gd[i][j];
      for (int k = 0; k < i; ++k) t -= diag_[k] * chol_[k][i] * chol_[k][j];
      chol_[i][j] = t / s;
    }
  }
}

IntQuadForm CosetPoints::quad(const RMat& m) const {
  const auto& b = coset_.lattice.basis();
  RMat a(rank_, RVec(rank_, Rational(0)));
  for (int i = 0; i < rank_; ++i) {
    RVec mb(b[i].size(), Rational(0));
    for (std::size_t k = 0; k < b[i].size(); ++k)
      for (std::size_t l = 0; l < b[i].size(); ++l)
        if (m[k][l] != 0 && b[i][l] != 0) mb[k] += m[k][l] * b[i][l];
    for (int j = 0; j < rank_; ++j) a[j][i] = dot(b[j], mb);
  }
  IntQuadForm f;
  std::int64_t d = common_den(a);
  f.m.assign(rank_, std::vector<std::int64_t>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) f.m[i][j] = a[i][j].numerator() * (d / a[i][j].denominator());
  f.den = narrow(static_cast<i128>(d) * yden_ * yden_);
  return f;
}

IntLinForm CosetPoints::lin(const RVec& v) const {
  const auto& b = coset_.lattice.basis();
  RVec a(rank_);
  std::int64_t d = 1;
  for (int i = 0; i < rank_; ++i) {
    a[i] = dot(b[i], v);
    d = lcm64(d, a[i].denominator());
  }
  IntLinForm f;
  for (int i = 0; i < rank_; ++i) f.c.push_back(a[i].numerator() * (d / a[i].denominator()));
  f.den = narrow(static_cast<i128>(d) * yden_);
  return f;
}

RVec CosetPoints::point(const std::vector<std::int64_t>& y) const {
  const auto& b = coset_.lattice.basis();
  RVec x(coset_.lattice.dim(), Rational(0));
  for (int i = 0; i < rank_; ++i) {
    if (y[i] == 0) continue;
    Rational c(y[i], yden_);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += c * b[i][k];
  }
  return x;
}

void CosetPoints::for_each(const Rational& max_norm,
                           const std::function<void(const std::vector<std::int64_t>&)>& f) const {
  if (max_norm < 0 || rank_ == 0) {
    if (rank_ == 0 && max_norm >= 0) f({});
    return;
  }
  const double bound = boost::rational_cast<double>(max_norm);
  const double eps = 1e-9 * (1.0 + bound);
  const std::int64_t limit = narrow(static_cast<i128>(max_norm.numerator()) * norm_.den / max_norm.denominator());
  std::vector<double> x(rank_, 0.0);
  std::vector<std::int64_t> y(rank_, 0);
  std::vector<double> shift(rank_);
  for (int i = 0; i < rank_; ++i) shift[i] = static_cast<double>(yshift_[i]) / static_cast<double>(yden_);

  std::function<void(int, double)> rec = [&](int i, double budget) {
    double center = 0.0;
    for (int j = i + 1; j < rank_; ++j) center -= chol_[i][j] * x[j];
    double radius = std::sqrt(std::max(0.0, budget + eps) / diag_[i]);
    auto lo = static_cast<std::int64_t>(std::ceil(center - radius - shift[i] - 1e-9));
    auto hi = static_cast<std::int64_t>(std::floor(center + radius - shift[i] + 1e-9));
    for (std::int64_t a = lo; a <= hi; ++a) {
      x[i] = static_cast<double>(a) + shift[i];
      y[i] = a * yden_ + yshift_[i];
      double rest = budget - diag_[i] * (x[i] - center) * (x[i] - center);
      if (rest < -eps) continue;
      if (i == 0) {
        if (norm_.raw(y) <= limit) f(y);
      } else {
        rec(i - 1, rest);
      }
    }
  };
  rec(rank_ - 1, bound);
}

std::vector<RVec> short_vectors(const Coset& c, const Rational& max_norm) {
  CosetPoints pts(c);
  std::vector<RVec> out;
  pts.for_each(max_norm, [&](const std::vector<std::int64_t>& y) { out.push_back(pts.point(y)); });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
nlohmann::json rvec_json(const RVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back({x.numerator(), x.denominator()});
  return a;
}
}  // namespace

void to_json(nlohmann::json& j, const Lattice& l) {
  j = nlohmann::json::object();
  j["basis"] = nlohmann::json::array();
  for (const auto& r : l.basis()) j["basis"].push_back(rvec_json(r));
}

void to_json(nlohmann::json& j, const Coset& c) {
  to_json(j, c.lattice);
  j["shift"] = rvec_json(c.shift);
}

}  // namespace vosa
