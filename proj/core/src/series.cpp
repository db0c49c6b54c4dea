#include "vosa/series.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace vosa {
namespace {

std::int64_t key(int q, int z) {
  return (static_cast<std::int64_t>(q) << 32) ^ static_cast<std::uint32_t>(z);
}

bool term_less(const SeriesTerm& a, const SeriesTerm& b) {
  return a.q != b.q ? a.q < b.q : a.z < b.z;
}

// Brings two series onto a common z denominator.
std::pair<JacobiSeries, JacobiSeries> align(const JacobiSeries& a, const JacobiSeries& b) {
  if (a.zscale() == b.zscale()) return {a, b};
  int s = std::lcm(a.zscale(), b.zscale());
  return {a.with_zscale(s), b.with_zscale(s)};
}

}  // namespace

JacobiSeries JacobiSeries::zero(const Rational& trunc, int zscale) {
  return JacobiSeries(to_q24(trunc), zscale);
}

JacobiSeries JacobiSeries::constant(const CycNum& c, const Rational& trunc) {
  return from_terms({{0, 0, c}}, to_q24(trunc), 1);
}

JacobiSeries JacobiSeries::monomial(const CycNum& c, const Rational& qexp, int zexp,
                                    const Rational& trunc, int zscale) {
  return from_terms({{to_q24(qexp), zexp, c}}, to_q24(trunc), zscale);
}

JacobiSeries JacobiSeries::from_terms(std::vector<SeriesTerm> terms, int trunc24, int zscale) {
  if (zscale <= 0) throw std::invalid_argument("zscale must be positive");
  JacobiSeries s(trunc24, zscale);
  std::sort(terms.begin(), terms.end(), term_less);
  for (auto& t : terms) {
    if (t.q >= trunc24) break;
    if (!s.terms_.empty() && s.terms_.back().q == t.q && s.terms_.back().z == t.z) {
      s.terms_.back().c += t.c;
    } else {
      if (!s.terms_.empty() && s.terms_.back().c.is_zero()) s.terms_.pop_back();
      s.terms_.push_back(std::move(t));
    }
  }
  if (!s.terms_.empty() && s.terms_.back().c.is_zero()) s.terms_.pop_back();
  return s;
}

int JacobiSeries::qden() const {
  int g = std::gcd(kQRes, std::abs(trunc_));
  for (const auto& t : terms_) g = std::gcd(g, std::abs(t.q));
  if (g == 0) return 1;
  return kQRes / g;
}

int JacobiSeries::valuation24() const { return terms_.empty() ? trunc_ : terms_.front().q; }

CycNum JacobiSeries::coeff24(int q24, int z) const {
  if (q24 >= trunc_) throw std::out_of_range("coefficient beyond truncation");
  SeriesTerm probe{q24, z, CycNum()};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, term_less);
  if (it != terms_.end() && it->q == q24 && it->z == z) return it->c;
  return CycNum();
}

std::vector<std::pair<int, CycNum>> JacobiSeries::level(int q24) const {
  std::vector<std::pair<int, CycNum>> out;
  SeriesTerm probe{q24, INT32_MIN, CycNum()};
  for (auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, term_less);
       it != terms_.end() && it->q == q24; ++it)
    out.emplace_back(it->z, it->c);
  return out;
}

JacobiSeries JacobiSeries::with_zscale(int s) const {
  if (s % zscale_ != 0) throw std::invalid_argument("zscale must be a multiple");
  JacobiSeries r = *this;
  int f = s / zscale_;
  r.zscale_ = s;
  for (auto& t : r.terms_) t.z *= f;
  return r;
}

JacobiSeries JacobiSeries::normalized_zscale() const {
  int g = zscale_;
  for (const auto& t : terms_) g = std::gcd(g, std::abs(t.z));
  if (g <= 1) return *this;
  JacobiSeries r = *this;
  r.zscale_ = zscale_ / g;
  for (auto& t : r.terms_) t.z /= g;
  return r;
}

JacobiSeries JacobiSeries::truncated24(int t) const {
  JacobiSeries r(std::min(t, trunc_), zscale_);
  for (const auto& term : terms_) {
    if (term.q >= r.trunc_) break;
    r.terms_.push_back(term);
  }
  return r;
}

JacobiSeries JacobiSeries::truncated(const Rational& t) const { return truncated24(to_q24(t)); }

JacobiSeries JacobiSeries::specialize_z1() const {
  std::vector<SeriesTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.q, 0, t.c});
  return from_terms(std::move(out), trunc_, 1);
}

JacobiSeries JacobiSeries::twist_z_sign() const {
  JacobiSeries r = *this;
  for (auto& t : r.terms_) {
    if ((12 * t.z) % zscale_ != 0) throw std::domain_error("phase outside the coefficient field");
    t.c *= CycNum::zeta(12 * t.z / zscale_);
  }
  return r;
}

JacobiSeries JacobiSeries::conj_coeffs() const {
  JacobiSeries r = *this;
  for (auto& t : r.terms_) t.c = t.c.conj();
  return r;
}

JacobiSeries JacobiSeries::operator-() const {
  JacobiSeries r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

JacobiSeries& JacobiSeries::operator+=(const JacobiSeries& o) {
  auto [a, b] = align(*this, o);
  int t = std::min(a.trunc_, b.trunc_);
  std::vector<SeriesTerm> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    bool take_i = j == b.terms_.end() || (i != a.terms_.end() && term_less(*i, *j));
    bool take_j = i == a.terms_.end() || (j != b.terms_.end() && term_less(*j, *i));
    SeriesTerm next;
    if (take_i) next = *i++;
    else if (take_j) next = *j++;
    else {
      next = *i++;
      next.c += (j++)->c;
    }
    if (next.q >= t) continue;
    if (!next.c.is_zero()) out.push_back(std::move(next));
  }
  JacobiSeries r(t, a.zscale_);
  r.terms_ = std::move(out);
  return *this = std::move(r);
}

JacobiSeries& JacobiSeries::operator-=(const JacobiSeries& o) { return *this += -o; }

JacobiSeries operator*(const JacobiSeries& a0, const JacobiSeries& b0) {
  auto [a, b] = align(a0, b0);
  int va = a.valuation24(), vb = b.valuation24();
  int t = std::min(a.trunc_ + vb, b.trunc_ + va);
  std::unordered_map<std::int64_t, std::size_t> index;
  std::vector<SeriesTerm> acc;
  for (const auto& x : a.terms_) {
    if (x.q + vb >= t) break;
    for (const auto& y : b.terms_) {
      int q = x.q + y.q;
      if (q >= t) break;
      int z = x.z + y.z;
      auto [it, inserted] = index.try_emplace(key(q, z), acc.size());
      if (inserted) acc.push_back({q, z, x.c * y.c});
      else acc[it->second].c += x.c * y.c;
    }
  }
  return JacobiSeries::from_terms(std::move(acc), t, a.zscale_);
}

JacobiSeries operator*(const JacobiSeries& a, const CycNum& c) {
  if (c.is_zero()) return JacobiSeries(a.trunc_, a.zscale_);
  JacobiSeries r = a;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

JacobiSeries JacobiSeries::shifted(int q24, int z, const CycNum& c) const {
  if (c.is_zero()) return JacobiSeries(trunc_ + q24, zscale_);
  JacobiSeries r = *this;
  r.trunc_ += q24;
  for (auto& t : r.terms_) {
    t.q += q24;
    t.z += z;
    t.c *= c;
  }
  return r;
}

JacobiSeries JacobiSeries::inverse() const {
  if (terms_.empty()) throw std::domain_error("non-invertible series");
  int v = valuation24();
  auto lead = level(v);
  if (lead.size() != 1) throw std::domain_error("non-invertible series");
  auto [m, c] = lead.front();
  CycNum cinv = c.inverse();
  JacobiSeries u = shifted(-v, -m, cinv);  // 1 + (positive valuation)
  std::map<int, std::vector<std::pair<int, CycNum>>> rest;
  int g = 0;
  for (const auto& t : u.terms_) {
    if (t.q == 0) continue;
    rest[t.q].emplace_back(t.z, t.c);
    g = std::gcd(g, t.q);
  }
  std::map<int, std::map<int, CycNum>> w;
  w[0][0] = CycNum(1);
  if (g > 0) {
    for (int n = g; n < u.trunc_; n += g) {
      std::map<int, CycNum> wn;
      for (const auto& [k, rk] : rest) {
        if (k > n) break;
        auto it = w.find(n - k);
        if (it == w.end()) continue;
        for (const auto& [zr, cr] : rk)
          for (const auto& [zw, cw] : it->second) wn[zr + zw] -= cr * cw;
      }
      std::erase_if(wn, [](const auto& kv) { return kv.second.is_zero(); });
      if (!wn.empty()) w[n] = std::move(wn);
    }
  }
  std::vector<SeriesTerm> out;
  for (const auto& [q, zs] : w)
    for (const auto& [z, cc] : zs) out.push_back({q, z, cc});
  JacobiSeries winv = from_terms(std::move(out), u.trunc_, zscale_);
  return winv.shifted(-v, -m, cinv);
}

JacobiSeries JacobiSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  int v = valuation24();
  JacobiSeries result = from_terms({{0, 0, CycNum(1)}}, trunc_ - v, zscale_);
  if (e == 0) return result;
  JacobiSeries base = *this;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      result = first ? base : result * base;
      first = false;
    }
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

JacobiSeries JacobiSeries::qderiv() const {
  JacobiSeries r(trunc_, zscale_);
  for (const auto& t : terms_) {
    if (t.q == 0) continue;
    r.terms_.push_back({t.q, t.z, t.c * CycNum(Rational(t.q, kQRes))});
  }
  return r;
}

JacobiSeries JacobiSeries::scale_q(const Rational& r) const {
  if (r <= 0) throw std::invalid_argument("scale must be positive");
  std::vector<SeriesTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::int64_t num = static_cast<std::int64_t>(t.q) * r.numerator();
    if (num % r.denominator() != 0) throw std::domain_error("denominator overflow");
    out.push_back({static_cast<int>(num / r.denominator()), t.z, t.c});
  }
  std::int64_t tnum = static_cast<std::int64_t>(trunc_) * r.numerator();
  int t = static_cast<int>(tnum >= 0 ? tnum / r.denominator() : -((-tnum + r.denominator() - 1) / r.denominator()));
  return from_terms(std::move(out), t, zscale_);
}

JacobiSeries JacobiSeries::substitute_z_shift(const Rational& a, const Rational& index,
                                              const Rational& offset) const {
  std::vector<SeriesTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational shift = a * Rational(t.z, zscale_);
    out.push_back({t.q + to_q24(shift), t.z, t.c});
  }
  // Lowest exponent an unknown term (q >= trunc) can reach after the shift.
  double aa = std::abs(boost::rational_cast<double>(a));
  double m = boost::rational_cast<double>(index);
  double off = boost::rational_cast<double>(offset);
  double T = trunc_ / static_cast<double>(kQRes);
  double h = std::max(T, aa * aa * m - off);
  double reach = h - aa * std::sqrt(std::max(0.0, 4.0 * m * (h + off)));
  int t = static_cast<int>(std::floor(reach * kQRes - 1e-9));
  return from_terms(std::move(out), t, zscale_);
}

bool JacobiSeries::operator==(const JacobiSeries& o) const {
  JacobiSeries a = normalized_zscale(), b = o.normalized_zscale();
  if (a.trunc_ != b.trunc_ || a.zscale_ != b.zscale_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    const auto &x = a.terms_[k], &y = b.terms_[k];
    if (x.q != y.q || x.z != y.z || !(x.c == y.c)) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> JacobiSeries::first_difference(const JacobiSeries& o) const {
  auto [a, b] = align(*this, o);
  int t = std::min(a.trunc_, b.trunc_);
  JacobiSeries d = a.truncated24(t) - b.truncated24(t);
  if (d.terms_.empty()) return std::nullopt;
  return std::make_pair(d.terms_.front().q, d.terms_.front().z);
}

bool JacobiSeries::agrees_with(const JacobiSeries& o) const { return !first_difference(o).has_value(); }

std::string JacobiSeries::to_string(int max_terms) const {
  std::string s;
  int shown = 0;
  for (const auto& t : terms_) {
    if (shown == max_terms) {
      s += " + ...";
      break;
    }
    if (shown > 0) s += " + ";
    s += t.c.to_string();
    if (t.q != 0) s += "*q^(" + vosa::to_string(from_q24(t.q)) + ")";
    if (t.z != 0) s += "*z^(" + vosa::to_string(Rational(t.z, zscale_)) + ")";
    ++shown;
  }
  if (shown == 0) s = "0";
  s += " + O(q^(" + vosa::to_string(trunc()) + "))";
  return s;
}

JacobiSeries series_arith(ArithKind kind, const JacobiSeries& a, const ArithOperand& b) {
  switch (kind) {
    case ArithKind::kAdd:
      return a + std::get<JacobiSeries>(b);
    case ArithKind::kMul:
      return a * std::get<JacobiSeries>(b);
    case ArithKind::kPow:
      return a.pow(std::get<int>(b));
    case ArithKind::kQDeriv:
      return a.qderiv();
    case ArithKind::kScalar:
      if (std::holds_alternative<int>(b)) return a * CycNum(std::get<int>(b));
      return a * std::get<CycNum>(b);
  }
  throw std::invalid_argument("unknown arithmetic kind");
}

JacobiSeries euler_power(int e, const Rational& trunc) {
  int t24 = to_q24(trunc);
  int n_max = t24 <= 0 ? 0 : (t24 + kQRes - 1) / kQRes;  // integer exponents below trunc
  std::vector<std::int64_t> sigma(n_max + 1, 0);
  for (int d = 1; d <= n_max; ++d)
    for (int m = d; m <= n_max; m += d) sigma[m] += d;
  // n p_n = -e sum_{k=1}^n sigma(k) p_{n-k}
  std::vector<std::int64_t> p(n_max + 1, 0);
  if (n_max >= 1 || t24 > 0) p[0] = 1;
  for (int n = 1; n < n_max; ++n) {
    __int128 acc = 0;
    for (int k = 1; k <= n; ++k) acc += static_cast<__int128>(sigma[k]) * p[n - k];
    acc *= -e;
    if (acc % n != 0) throw std::logic_error("euler power recursion not integral");
    acc /= n;
    if (acc > INT64_MAX || acc < INT64_MIN) throw std::overflow_error("coefficient overflow");
    p[n] = static_cast<std::int64_t>(acc);
  }
  std::vector<SeriesTerm> out;
  for (int n = 0; n < n_max; ++n)
    if (p[n] != 0) out.push_back({n * kQRes, 0, CycNum(p[n])});
  return JacobiSeries::from_terms(std::move(out), t24, 1);
}

JacobiSeries eta_scaled(const Rational& r, const Rational& trunc) {
  if (r != Rational(1, 2) && r != 1 && r != 2 && r != 3) throw std::domain_error("unsupported eta scale");
  int pre = to_q24(r / kQRes);
  Rational inner = (trunc - r / kQRes) / r;
  // Integer upper bound on the exponents needed from the unscaled product.
  std::int64_t need = inner.numerator() / inner.denominator() + 1;
  JacobiSeries base = euler_power(1, Rational(std::max<std::int64_t>(need, 1)));
  return base.scale_q(r).shifted(pre, 0).truncated(trunc);
}

JacobiSeries eisenstein_e2(const Rational& trunc) {
  int t24 = to_q24(trunc);
  std::vector<SeriesTerm> out;
  if (t24 > 0) out.push_back({0, 0, CycNum(1)});
  for (int n = 1; n * kQRes < t24; ++n) {
    std::int64_t s = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) s += d;
    out.push_back({n * kQRes, 0, CycNum(-24 * s)});
  }
  return JacobiSeries::from_terms(std::move(out), t24, 1);
}

void to_json(nlohmann::json& j, const JacobiSeries& s) {
  j = nlohmann::json::object();
  j["qden"] = s.qden();
  Rational t = s.trunc();
  j["trunc"] = {t.numerator(), t.denominator()};
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& term : s.terms()) {
    Rational q = from_q24(term.q);
    terms.push_back({{"q", {q.numerator(), q.denominator()}}, {"z", term.z}, {"c", term.c}});
  }
  j["terms"] = std::move(terms);
}

JacobiSeries series_from_json(const nlohmann::json& j, int zscale) {
  Rational t(j.at("trunc").at(0).get<std::int64_t>(), j.at("trunc").at(1).get<std::int64_t>());
  std::vector<SeriesTerm> terms;
  for (const auto& e : j.at("terms")) {
    Rational q(e.at("q").at(0).get<std::int64_t>(), e.at("q").at(1).get<std::int64_t>());
    terms.push_back({to_q24(q), e.at("z").get<int>(), e.at("c").get<CycNum>()});
  }
  return JacobiSeries::from_terms(std::move(terms), to_q24(t), zscale);
}

}  // namespace vosa
