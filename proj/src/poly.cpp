#include "toric/poly.hpp"

#include <algorithm>

#include "toric/error.hpp"

namespace toric {

std::string VarId::name() const {
  switch (kind) {
    case Kind::Base: return "T" + std::to_string(index);
    case Kind::Face: return "F" + std::to_string(index);
    case Kind::Chern: return "c" + std::to_string(index);
    case Kind::Param: return "y";
  }
  return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(VarId v, std::uint32_t e) {
  if (e != 0) factors_.emplace_back(v, e);
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v)
      factors_.back().second += e;
    else
      factors_.emplace_back(v, e);
  }
}

std::uint32_t Monomial::exponent(VarId v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::cohomological_degree() const {
  unsigned d = 0;
  for (const auto& [v, e] : factors_) d += v.degree() * e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it == other.factors_.end() || it->first != v || it->second < e)
      return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out;
  auto it = divisor.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != divisor.factors_.end() && it->first < v) ++it;
    std::uint32_t sub = (it != divisor.factors_.end() && it->first == v) ? it->second : 0;
    if (e > sub) out.factors_.emplace_back(v, e - sub);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::string Monomial::str() const {
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  // Equal total degree and equal prefix means equal monomials.
  return false;
}

// ---------------------------------------------------------------- MPoly

MPoly::MPoly(const Rat& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

MPoly::MPoly(const Monomial& m, const Rat& c) {
  if (c != 0) terms_.emplace(m, c);
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat MPoly::constant_term() const { return coefficient(Monomial()); }

Rat MPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

unsigned MPoly::cohomological_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.cohomological_degree());
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.begin()->first.cohomological_degree();
  for (const auto& t : terms_)
    if (t.first.cohomological_degree() != d) return false;
  return true;
}

std::set<VarId> MPoly::variables() const {
  std::set<VarId> out;
  for (const auto& t : terms_)
    for (const auto& f : t.first.factors()) out.insert(f.first);
  return out;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

// ---------------------------------------------------------------- free ops

MPoly pow(const MPoly& base, unsigned e) {
  MPoly result(1);
  MPoly sq = base;
  while (e != 0) {
    if (e & 1u) result *= sq;
    e >>= 1;
    if (e != 0) sq = sq * sq;
  }
  return result;
}

MPoly substitute(const MPoly& p, const std::map<VarId, MPoly>& assignment) {
  std::map<std::pair<VarId, std::uint32_t>, MPoly> powers;
  auto power_of = [&](VarId v, std::uint32_t e) -> const MPoly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, pow(assignment.at(v), e)).first;
    return it->second;
  };

  MPoly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> kept;
    MPoly image(Rat(1));
    for (const auto& [v, e] : m.factors()) {
      if (assignment.count(v)) {
        image = image * power_of(v, e);
        if (image.is_zero()) break;
      } else {
        kept.emplace_back(v, e);
      }
    }
    if (image.is_zero()) continue;
    Monomial rest(std::move(kept));
    for (const auto& [mi, ci] : image.terms()) out.add_term(mi * rest, ci * c);
  }
  return out;
}

MPoly homogeneous_component(const MPoly& p, unsigned degree) {
  MPoly out;
  for (const auto& [m, c] : p.terms())
    if (m.cohomological_degree() == degree) out.add_term(m, c);
  return out;
}

MPoly truncate_degree(const MPoly& p, unsigned max_degree) {
  MPoly out;
  for (const auto& [m, c] : p.terms())
    if (m.cohomological_degree() <= max_degree) out.add_term(m, c);
  return out;
}

MPoly exact_divide(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::NotDivisible, "division by the zero polynomial");
  const auto& [lead_m, lead_c] = den.leading_term();
  MPoly quotient;
  MPoly rest = num;
  while (!rest.is_zero()) {
    const auto [m, c] = rest.leading_term();
    if (!lead_m.divides(m))
      throw Error(ErrorKind::NotDivisible, render(num) + " is not a multiple of " + render(den));
    Monomial qm = m / lead_m;
    Rat qc = c / lead_c;
    quotient.add_term(qm, qc);
    for (const auto& [dm, dc] : den.terms()) rest.add_term(qm * dm, -qc * dc);
  }
  return quotient;
}

MPoly elementary_symmetric(const std::vector<VarId>& vars, unsigned i) {
  // e_i via the generating product prod(1 + t*v), tracked degree by degree.
  std::vector<MPoly> e(i + 1);
  e[0] = MPoly(1);
  for (VarId v : vars) {
    MPoly x = MPoly::var(v);
    for (unsigned d = i; d >= 1; --d) e[d] += e[d - 1] * x;
  }
  return e[i];
}

std::string render(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool negative = c < 0;
    Rat mag = abs(c);
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += to_string(mag);
    } else {
      if (mag != 1) s += to_string(mag) + '*';
      s += m.str();
    }
  }
  return s;
}

// ---------------------------------------------------------------- RatFun

RatFun::RatFun(MPoly n, MPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw Error(ErrorKind::NotDivisible, "rational function with zero denominator");
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den == b.den) return RatFun(a.num + b.num, a.den);
  return RatFun(a.num * b.den + b.num * a.den, a.den * b.den);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num * b.num, a.den * b.den);
}

bool operator==(const RatFun& a, const RatFun& b) {
  return a.num * b.den == b.num * a.den;
}

}  // namespace toric
