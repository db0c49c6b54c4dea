#include "vosa/theta.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace vosa {

namespace {

int parity_sign(const Rational& e) {
  if (e.denominator() != 1) throw std::domain_error("sign character not integral");
  return e.numerator() % 2 == 0 ? 1 : -1;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SignCharacter SignCharacter::norm_parity(const Rational& factor, const Rational& offset) {
  SignCharacter s;
  s.kind = Kind::kNormParity;
  s.factor = factor;
  s.offset = offset;
  return s;
}

SignCharacter SignCharacter::linear(RVec w, const Rational& offset) {
  SignCharacter s;
  s.kind = Kind::kLinear;
  s.w = std::move(w);
  s.offset = offset;
  return s;
}

int SignCharacter::operator()(const RVec& x) const {
  switch (kind) {
    case Kind::kTrivial:
      return 1;
    case Kind::kNormParity:
      return parity_sign(factor * dot(x, x) - offset);
    case Kind::kLinear:
      return parity_sign(2 * dot(x, w) - offset);
  }
  return 1;
}

std::string SignCharacter::describe() const {
  switch (kind) {
    case Kind::kTrivial:
      return "trivial";
    case Kind::kNormParity:
      return "norm-parity(" + to_string(factor) + "," + to_string(offset) + ")";
    case Kind::kLinear:
      return "linear(offset " + to_string(offset) + ")";
  }
  return "";
}

JacobiSeries theta(const Coset& c, const std::optional<Marking>& m, const SignCharacter& s,
                   const Rational& trunc) {
  const int t24 = to_q24(trunc);
  const int zscale = m ? m->zscale : 1;
  CosetPoints pts(c);
  const IntQuadForm& nf = pts.norm();
  std::optional<IntLinForm> zf;
  if (m) zf = pts.lin(m->v);
  std::optional<IntLinForm> wf;
  if (s.kind == SignCharacter::Kind::kLinear) wf = pts.lin(s.w);

  std::map<std::pair<int, int>, std::int64_t> acc;
  // Points with norm/2 < trunc, i.e. norm <= 2 trunc (the boundary is
  // dropped by from_terms).
  pts.for_each(2 * trunc, [&](const std::vector<std::int64_t>& y) {
    Rational norm = nf.eval(y);
    int q24 = to_q24(norm / 2);
    int z = 0;
    if (zf) {
      Rational g = zf->eval(y) * zscale;
      if (g.denominator() != 1) throw std::domain_error("incompatible marking");
      z = static_cast<int>(g.numerator());
    }
    int sign = 1;
    switch (s.kind) {
      case SignCharacter::Kind::kTrivial:
        break;
      case SignCharacter::Kind::kNormParity:
        sign = parity_sign(s.factor * norm - s.offset);
        break;
      case SignCharacter::Kind::kLinear:
        sign = parity_sign(2 * wf->eval(y) - s.offset);
        break;
    }
    acc[{q24, z}] += sign;
  });
  std::vector<SeriesTerm> terms;
  terms.reserve(acc.size());
  for (const auto& [k, v] : acc)
    if (v != 0) terms.push_back({k.first, k.second, CycNum(v)});
  return JacobiSeries::from_terms(std::move(terms), t24, zscale);
}

JacobiSeries theta(const std::vector<Coset>& parts, const std::optional<Marking>& m, const SignCharacter& s,
                   const Rational& trunc) {
  JacobiSeries out = JacobiSeries::zero(trunc, m ? m->zscale : 1);
  for (const auto& c : parts) out += theta(c, m, s, trunc);
  return out;
}

GlueImage glue_image(const Coset& big, const Lattice& sub) {
  const RMat g = sub.gram();
  GlueImage out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j && g[i][j] != 0) throw std::invalid_argument("unsupported sublattice");
    if (g[i][i].denominator() != 1) throw std::invalid_argument("unsupported sublattice");
    out.moduli.push_back(static_cast<int>(g[i][i].numerator()));
  }
  if (sub.dim() != big.lattice.dim() || sub.rank() != big.lattice.rank() || !big.lattice.contains(sub))
    throw std::invalid_argument("not a sublattice");

  auto label = [&](const RVec& x) {
    Word w(sub.rank());
    for (int i = 0; i < sub.rank(); ++i) {
      Rational p = dot(x, sub.basis()[i]);
      if (p.denominator() != 1) throw std::invalid_argument("coset not in dual of sublattice");
      std::int64_t md = out.moduli[i];
      w[i] = static_cast<int>(p.numerator() - md * floor_div(p.numerator(), md));
    }
    return w;
  };
  auto add = [&](const Word& a, const Word& b) {
    Word r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % out.moduli[i];
    return r;
  };

  std::vector<Word> gens;
  for (const auto& b : big.lattice.basis()) gens.push_back(label(b));
  std::set<Word> group{Word(sub.rank(), 0)};
  std::vector<Word> frontier{Word(sub.rank(), 0)};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (const auto& gvec : gens) {
        Word v = add(w, gvec);
        if (group.insert(v).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  Word s = label(big.shift);
  std::set<Word> image;
  for (const auto& w : group) image.insert(add(w, s));
  out.labels.assign(image.begin(), image.end());

  Rational ratio = sub.determinant() / big.lattice.determinant();
  auto root = static_cast<std::int64_t>(std::llround(std::sqrt(boost::rational_cast<double>(ratio))));
  if (ratio.denominator() != 1 || root * root != ratio.numerator()) throw std::logic_error("index not integral");
  out.index = root;
  return out;
}

}  // namespace vosa
