#include "vosa/n4.hpp"

#include <sstream>
#include <stdexcept>

namespace vosa {

namespace {

int levi_civita(int i, int j, int k) {
  if (i == 0 || j == 0 || k == 0 || i == j || j == k || i == k) return 0;
  // Sign of the permutation (i, j, k) of (1, 2, 3).
  return ((j - i) * (k - i) * (k - j)) > 0 ? 1 : -1;
}

Rational rpow(Rational b, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

int delta(int a, int b) { return a == b ? 1 : 0; }

const CycNum kI = CycNum::imag_unit();

}  // namespace

Rational alpha(int i, int a, int b) {
  if (i < 1 || i > 3 || a < 0 || a > 3 || b < 0 || b > 3) throw std::out_of_range("index out of range");
  return Rational(delta(a, i) * delta(b, 0) - delta(b, i) * delta(a, 0), 2) + Rational(levi_civita(i, a, b), 2);
}

bool Mode::valid() const {
  switch (kind) {
    case ModeKind::kL:
      return upper == 0 && twice_index % 2 == 0;
    case ModeKind::kJ:
      return upper >= 1 && upper <= 3 && twice_index % 2 == 0;
    case ModeKind::kG:
      return upper >= 0 && upper <= 3 && twice_index % 2 != 0;
  }
  return false;
}

std::string Mode::name() const {
  std::ostringstream os;
  switch (kind) {
    case ModeKind::kL:
      os << "L";
      break;
    case ModeKind::kJ:
      os << "J" << upper;
      break;
    case ModeKind::kG:
      os << "G" << upper;
      break;
  }
  os << "_" << to_string(index());
  return os.str();
}

ModeTerm ModeTerm::mode(const Mode& m, const CycNum& coeff) {
  if (!m.valid()) throw std::invalid_argument("invalid mode " + m.name());
  ModeTerm t;
  t.add_mode(m, coeff);
  return t;
}

ModeTerm ModeTerm::scalar(const CycNum& coeff, int c_power, int k_power) {
  ModeTerm t;
  t.add_central({c_power, k_power}, coeff);
  return t;
}

void ModeTerm::add_mode(const Mode& m, const CycNum& c) {
  if (c.is_zero()) return;
  auto& slot = modes_[m];
  slot += c;
  if (slot.is_zero()) modes_.erase(m);
}

void ModeTerm::add_central(const CentralMonomial& key, const CycNum& c) {
  if (c.is_zero()) return;
  auto& slot = central_[key];
  slot += c;
  if (slot.is_zero()) central_.erase(key);
}

CycNum ModeTerm::coeff(const Mode& m) const {
  auto it = modes_.find(m);
  return it == modes_.end() ? CycNum(0) : it->second;
}

CycNum ModeTerm::central_coeff(int c_power, int k_power) const {
  auto it = central_.find({c_power, k_power});
  return it == central_.end() ? CycNum(0) : it->second;
}

ModeTerm& ModeTerm::operator+=(const ModeTerm& o) {
  for (const auto& [m, c] : o.modes_) add_mode(m, c);
  for (const auto& [k, c] : o.central_) add_central(k, c);
  return *this;
}

ModeTerm& ModeTerm::operator-=(const ModeTerm& o) { return *this += -o; }

ModeTerm operator*(const CycNum& s, const ModeTerm& a) {
  ModeTerm r;
  for (const auto& [m, c] : a.modes_) r.add_mode(m, s * c);
  for (const auto& [k, c] : a.central_) r.add_central(k, s * c);
  return r;
}

ModeTerm ModeTerm::with_c_equal_6k() const {
  ModeTerm r;
  r.modes_ = modes_;
  for (const auto& [key, c] : central_) {
    CycNum f = c * CycNum(6).pow(key.first);
    r.add_central({0, key.first + key.second}, f);
  }
  return r;
}

ModeTerm ModeTerm::specialized(const Rational& cval, const Rational& kval) const {
  ModeTerm r;
  r.modes_ = modes_;
  for (const auto& [key, c] : central_)
    r.add_central({0, 0}, c * CycNum(rpow(cval, key.first) * rpow(kval, key.second)));
  return r;
}

std::string ModeTerm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() {
    if (!first) os << " + ";
    first = false;
  };
  for (const auto& [m, c] : modes_) {
    sep();
    os << "(" << c.to_string() << ")" << m.name();
  }
  for (const auto& [key, c] : central_) {
    sep();
    os << "(" << c.to_string() << ")";
    if (key.first) os << "c^" << key.first;
    if (key.second) os << "k^" << key.second;
  }
  return os.str();
}

ModeTerm bracket(const Mode& x, const Mode& y) {
  if (!x.valid() || !y.valid()) throw std::invalid_argument("invalid mode");
  const Rational m = x.index(), n = y.index();
  const int sum2 = x.twice_index + y.twice_index;
  const bool zero_sum = sum2 == 0;
  ModeTerm out;
  using K = ModeKind;

  // Reduce to a canonical ordering of kinds; the remaining cases follow
  // from graded antisymmetry.
  auto swap_sign = [&]() { return CycNum((x.odd() && y.odd()) ? 1 : -1); };
  if ((x.kind == K::kG && y.kind != K::kG) || (x.kind == K::kJ && y.kind == K::kL)) return swap_sign() * bracket(y, x);

  if (x.kind == K::kL && y.kind == K::kL) {
    out += ModeTerm::mode(Mode{K::kL, 0, sum2}, CycNum(m - n));
    if (zero_sum) out += ModeTerm::scalar(CycNum((m * m * m - m) / 12), 1, 0);
  } else if (x.kind == K::kL && y.kind == K::kG) {
    out += ModeTerm::mode(Mode{K::kG, y.upper, sum2}, CycNum(m / 2 - n));
  } else if (x.kind == K::kL && y.kind == K::kJ) {
    out += ModeTerm::mode(Mode{K::kJ, y.upper, sum2}, CycNum(-n));
  } else if (x.kind == K::kG && y.kind == K::kG) {
    const int a = x.upper, b = y.upper;
    if (a == b) out += ModeTerm::mode(Mode{K::kL, 0, sum2}, CycNum(2));
    for (int i = 1; i <= 3; ++i) {
      Rational coef = -4 * (m - n) * alpha(i, a, b);
      if (coef != 0) out += ModeTerm::mode(Mode{K::kJ, i, sum2}, CycNum(coef));
    }
    if (a == b && zero_sum) out += ModeTerm::scalar(CycNum((m * m - Rational(1, 4)) / 3), 1, 0);
  } else if (x.kind == K::kJ && y.kind == K::kG) {
    for (int b = 0; b <= 3; ++b) {
      Rational coef = alpha(x.upper, y.upper, b);
      if (coef != 0) out += ModeTerm::mode(Mode{K::kG, b, sum2}, CycNum(coef));
    }
  } else {  // J, J
    for (int k = 1; k <= 3; ++k) {
      int e = levi_civita(x.upper, y.upper, k);
      if (e) out += ModeTerm::mode(Mode{K::kJ, k, sum2}, CycNum(e));
    }
    if (x.upper == y.upper && zero_sum) out += ModeTerm::scalar(CycNum(-m / 2), 0, 1);
  }
  return out;
}

ModeTerm bracket(const ModeTerm& x, const ModeTerm& y) {
  ModeTerm out;
  for (const auto& [mx, cx] : x.modes())
    for (const auto& [my, cy] : y.modes()) out += (cx * cy) * bracket(mx, my);
  return out;
}

ModeTerm j_cartan(int m) { return ModeTerm::mode(Mode::J(1, m), CycNum(-2) * kI); }

ModeTerm j_raise(int sign, int m) {
  // J^+ = J^2 - i J^3, J^- = -J^2 - i J^3
  return ModeTerm::mode(Mode::J(2, m), CycNum(sign)) + ModeTerm::mode(Mode::J(3, m), -kI);
}

ModeTerm g_charged(int sign, int x, int twice_r) {
  auto g = [&](int a, const CycNum& c) { return ModeTerm::mode(Mode::G(a, twice_r), c); };
  if (x == 1 && sign < 0) return g(0, 1) + g(1, -kI);
  if (x == 1 && sign > 0) return g(2, -1) + g(3, kI);
  if (x == 2 && sign < 0) return g(2, 1) + g(3, kI);
  if (x == 2 && sign > 0) return g(0, 1) + g(1, kI);
  throw std::invalid_argument("x must be 1 or 2");
}

std::vector<Mode> mode_basis(int window) {
  std::vector<Mode> out;
  for (int m = -window; m <= window; ++m) {
    out.push_back(Mode::L(m));
    for (int i = 1; i <= 3; ++i) out.push_back(Mode::J(i, m));
  }
  for (int r2 = -2 * window + 1; r2 <= 2 * window - 1; r2 += 2)
    for (int a = 0; a <= 3; ++a) out.push_back(Mode::G(a, r2));
  return out;
}

ModeTerm jacobi_residual(const Mode& x, const Mode& y, const Mode& z) {
  ModeTerm mx = ModeTerm::mode(x), my = ModeTerm::mode(y), mz = ModeTerm::mode(z);
  CycNum s((x.odd() && y.odd()) ? -1 : 1);
  ModeTerm r = bracket(mx, bracket(my, mz)) - bracket(bracket(mx, my), mz) - s * bracket(my, bracket(mx, mz));
  return r.with_c_equal_6k();
}

JacobiReport jacobi_check(int window) {
  if (window < 1) throw std::invalid_argument("window must be positive");
  JacobiReport rep;
  rep.window = window;
  const auto basis = mode_basis(window);
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis) {
        ++rep.triples;
        ModeTerm r = jacobi_residual(x, y, z);
        if (!r.is_zero() && !rep.first_failure) rep.first_failure = JacobiResidual{x, y, z, r};
      }
  return rep;
}

ModeTerm spectral_flow(int ell, const ModeTerm& x) {
  const CycNum half_i = kI * CycNum(Rational(1, 2));
  ModeTerm out;
  for (const auto& [md, c] : x.modes()) {
    const int n = static_cast<int>(md.twice_index / 2);
    ModeTerm img;
    switch (md.kind) {
      case ModeKind::kG:
        throw std::invalid_argument("unsupported mode");
      case ModeKind::kL:
        img = ModeTerm::mode(md) + CycNum(Rational(ell, 2)) * j_cartan(n);
        if (n == 0) img += ModeTerm::scalar(CycNum(Rational(ell * ell, 4)), 0, 1);
        break;
      case ModeKind::kJ: {
        // Express J^i through J, J^+, J^- and flow those:
        // J_n -> J_n + delta ell k, J^(+-)_n -> J^(+-)_(n +- ell).
        ModeTerm flowed_j = j_cartan(n);
        if (n == 0) flowed_j += ModeTerm::scalar(CycNum(ell), 0, 1);
        ModeTerm jp = j_raise(1, n + ell), jm = j_raise(-1, n - ell);
        if (md.upper == 1) img = half_i * flowed_j;
        if (md.upper == 2) img = CycNum(Rational(1, 2)) * (jp - jm);
        if (md.upper == 3) img = half_i * (jp + jm);
        break;
      }
    }
    out += c * img;
  }
  for (const auto& [key, c] : x.central()) out += ModeTerm::scalar(c, key.first, key.second);
  return out;
}

LemmaReport lemma_g0_square() {
  LemmaReport rep;
  ModeTerm x = g_charged(1, 1, -1) + g_charged(-1, 2, 1);
  rep.square = (CycNum(Rational(1, 2)) * bracket(x, x)).with_c_equal_6k();
  rep.normalized_square = CycNum(Rational(1, 2)) * rep.square;
  // c / 24 = k / 4 once c = 6k.
  ModeTerm shifted = ModeTerm::mode(Mode::L(0)) - ModeTerm::scalar(CycNum(Rational(1, 4)), 0, 1);
  rep.flowed_shifted = CycNum(2) * spectral_flow(-1, shifted);
  ModeTerm target = CycNum(2) * ModeTerm::mode(Mode::L(0)) - j_cartan(0);
  rep.only_l0_j0 = rep.square.central().empty();
  for (const auto& [m, c] : rep.square.modes())
    if (m != Mode::L(0) && m != Mode::J(1, 0)) rep.only_l0_j0 = false;
  CycNum l0 = rep.square.coeff(Mode::L(0));
  if (rep.only_l0_j0 && l0.is_rational() && !l0.is_zero()) {
    Rational mult = l0.rational_value() / 2;
    if (rep.square == CycNum(mult) * target) {
      rep.multiple = mult;
      rep.sign_vs_2l0_minus_j0 = mult > 0 ? 1 : -1;
    }
  }
  rep.equals_flowed = rep.square == rep.flowed_shifted;
  return rep;
}

void to_json(nlohmann::json& j, const ModeTerm& t) {
  j = nlohmann::json::array();
  for (const auto& [m, c] : t.modes()) j.push_back({{"mode", m.name()}, {"coeff", c}});
  for (const auto& [key, c] : t.central()) {
    std::string name = "1";
    if (key.first || key.second) {
      name.clear();
      if (key.first) name += "c^" + std::to_string(key.first);
      if (key.second) name += "k^" + std::to_string(key.second);
    }
    j.push_back({{"mode", name}, {"coeff", c}});
  }
}

}  // namespace vosa
