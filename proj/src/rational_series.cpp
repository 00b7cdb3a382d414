#include "sncd/rational_series.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sncd/errors.hpp"

namespace sncd {

// ---------------------------------------------------------------- RingElement

RingElement::RingElement(const Integer& c) {
  if (c != 0) terms_[Monomial{}] = c;
}

RingElement RingElement::l_power(std::int64_t l, const Integer& c) {
  RingElement r;
  r.add_term(Monomial{l, {}}, c);
  return r;
}

RingElement RingElement::abelian(AbSymbol genera) {
  std::erase_if(genera, [](std::int64_t g) { return g <= 0; });
  std::sort(genera.begin(), genera.end());
  RingElement r;
  Monomial m;
  if (!genera.empty()) m.ab.push_back(std::move(genera));
  r.add_term(m, 1);
  return r;
}

void RingElement::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElement RingElement::operator+(const RingElement& rhs) const {
  RingElement out = *this;
  out += rhs;
  return out;
}

RingElement& RingElement::operator+=(const RingElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

RingElement RingElement::operator-() const {
  RingElement out;
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

RingElement RingElement::operator-(const RingElement& rhs) const { return *this + (-rhs); }

RingElement RingElement::operator*(const RingElement& rhs) const {
  RingElement out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m;
      m.l_exp = ma.l_exp + mb.l_exp;
      m.ab = ma.ab;
      m.ab.insert(m.ab.end(), mb.ab.begin(), mb.ab.end());
      std::sort(m.ab.begin(), m.ab.end());
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

RingElement RingElement::shift_l(std::int64_t shift) const {
  RingElement out;
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    s.l_exp += shift;
    out.terms_[s] = c;
  }
  return out;
}

bool RingElement::divide_exact(const Integer& d, RingElement& out) const {
  out = RingElement();
  for (const auto& [m, c] : terms_) {
    if (c % d != 0) return false;
    out.terms_[m] = c / d;
  }
  return true;
}

Integer RingElement::euler_characteristic() const {
  Integer chi = 0;
  for (const auto& [m, c] : terms_) {
    if (m.ab.empty()) chi += c;
  }
  return chi;
}

std::string RingElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool bare = m.l_exp == 0 && m.ab.empty();
    Integer mag = boost::multiprecision::abs(c);
    if (c < 0) os << "-";
    else if (!first) os << "+";
    if (bare || mag != 1) os << mag;
    if (m.l_exp != 0) {
      os << "L";
      if (m.l_exp != 1) os << "^" << m.l_exp;
    }
    for (const auto& sym : m.ab) {
      os << "[B:";
      for (std::size_t i = 0; i < sym.size(); ++i) os << (i ? "," : "") << sym[i];
      os << "]";
    }
    first = false;
  }
  return os.str();
}

// ------------------------------------------------------------- RationalSeries

RationalSeries::RationalSeries(Numerator num, Denominator den)
    : num_(std::move(num)), den_(std::move(den)) {
  for (const auto& [f, mult] : den_) {
    if (f.t_exp < 1) throw InternalError("denominator factor needs a positive T exponent");
    if (mult < 0) throw InternalError("negative denominator multiplicity");
  }
  normalize();
}

void RationalSeries::normalize() {
  std::erase_if(num_, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(den_, [](const auto& kv) { return kv.second == 0; });
  if (num_.empty()) den_.clear();
}

RationalSeries RationalSeries::term(const RingElement& c, std::int64_t t_exp) {
  return RationalSeries({{t_exp, c}}, {});
}

namespace {

// num * (1 - L^a T^b)
RationalSeries::Numerator times_factor(const RationalSeries::Numerator& num,
                                       const DenominatorFactor& f) {
  RationalSeries::Numerator out = num;
  for (const auto& [n, c] : num) out[n + f.t_exp] += -c.shift_l(f.l_exp);
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

RationalSeries RationalSeries::operator+(const RationalSeries& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  Denominator common = den_;
  for (const auto& [f, mult] : rhs.den_) common[f] = std::max(common[f], mult);

  auto lift = [&](const RationalSeries& s) {
    Numerator num = s.num_;
    for (const auto& [f, mult] : common) {
      auto it = s.den_.find(f);
      std::int64_t have = it == s.den_.end() ? 0 : it->second;
      for (std::int64_t i = have; i < mult; ++i) num = times_factor(num, f);
    }
    return num;
  };
  Numerator sum = lift(*this);
  for (auto& [n, c] : lift(rhs)) sum[n] += c;
  return RationalSeries(std::move(sum), std::move(common));
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& rhs) {
  *this = *this + rhs;
  return *this;
}

RationalSeries RationalSeries::operator*(const RingElement& c) const {
  Numerator num;
  for (const auto& [n, coef] : num_) num[n] = coef * c;
  return RationalSeries(std::move(num), den_);
}

RationalSeries RationalSeries::divided_by(const DenominatorFactor& f, std::int64_t mult) const {
  Denominator den = den_;
  den[f] += mult;
  return RationalSeries(num_, std::move(den));
}

RationalSeries RationalSeries::substitute_power(std::int64_t a) const {
  if (a < 1) throw InternalError("substitute_power needs a >= 1");
  Numerator num;
  for (const auto& [n, c] : num_) num[n * a] = c;
  Denominator den;
  for (const auto& [f, mult] : den_) den[DenominatorFactor{f.l_exp, f.t_exp * a}] += mult;
  return RationalSeries(std::move(num), std::move(den));
}

namespace {

// Quotient of num by (1 - L^a T^b) when the division is exact.
bool try_divide(const RationalSeries::Numerator& num, const DenominatorFactor& f,
                RationalSeries::Numerator& quotient) {
  if (num.empty()) return false;
  const std::int64_t lo = num.begin()->first;
  const std::int64_t hi = num.rbegin()->first;
  if (hi - lo < f.t_exp) return false;
  // num = (1 - c T^b) q  <=>  q_n = num_n + c q_{n-b}
  std::map<std::int64_t, RingElement> q;
  for (std::int64_t n = lo; n <= hi; ++n) {
    RingElement v;
    if (auto it = num.find(n); it != num.end()) v = it->second;
    if (auto it = q.find(n - f.t_exp); it != q.end()) v += it->second.shift_l(f.l_exp);
    if (!v.is_zero()) {
      if (n > hi - f.t_exp) return false;
      q[n] = std::move(v);
    }
  }
  quotient = std::move(q);
  return true;
}

}  // namespace

RationalSeries RationalSeries::reduced() const {
  Numerator num = num_;
  Denominator den = den_;
  for (auto& [f, mult] : den) {
    while (mult > 0) {
      Numerator q;
      if (!try_divide(num, f, q)) break;
      num = std::move(q);
      --mult;
    }
  }
  return RationalSeries(std::move(num), std::move(den));
}

std::vector<RingElement> RationalSeries::expand_to(std::int64_t order) const {
  std::vector<RingElement> out(static_cast<std::size_t>(order + 1));
  for (const auto& [n, c] : num_) {
    if (n < 0) throw InternalError("numerator has a negative T exponent");
    if (n <= order) out[static_cast<std::size_t>(n)] = c;
  }
  for (const auto& [f, mult] : den_) {
    for (std::int64_t i = 0; i < mult; ++i) {
      for (std::int64_t n = f.t_exp; n <= order; ++n) {
        const auto& prev = out[static_cast<std::size_t>(n - f.t_exp)];
        if (!prev.is_zero()) out[static_cast<std::size_t>(n)] += prev.shift_l(f.l_exp);
      }
    }
  }
  return out;
}

std::int64_t RationalSeries::degree() const {
  if (num_.empty()) throw InternalError("degree of the zero series");
  std::int64_t d = num_.rbegin()->first;
  for (const auto& [f, mult] : den_) d -= f.t_exp * mult;
  return d;
}

RationalSeries RationalSeries::euler_specialization() const {
  Numerator num;
  for (const auto& [n, c] : num_) num[n] = RingElement(c.euler_characteristic());
  Denominator den;
  for (const auto& [f, mult] : den_) den[DenominatorFactor{0, f.t_exp}] += mult;
  return RationalSeries(std::move(num), std::move(den));
}

std::string RationalSeries::numerator_str() const {
  if (num_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : num_) {
    std::string r = c.str();
    const bool single = c.terms().size() == 1;
    const bool unit = single && (r == "1" || r == "-1");
    if (!first) os << ((single && r[0] == '-') ? "" : "+");
    if (n == 0) {
      os << (single ? r : "(" + r + ")");
    } else {
      if (unit) os << (r == "-1" ? "-" : "");
      else os << (single ? r : "(" + r + ")");
      os << "T";
      if (n != 1) os << "^" << n;
    }
    first = false;
  }
  return os.str();
}

std::string RationalSeries::denominator_str() const {
  if (den_.empty()) return "1";
  std::ostringstream os;
  for (const auto& [f, mult] : den_) {
    os << "(1-";
    if (f.l_exp != 0) {
      os << "L";
      if (f.l_exp != 1) os << "^" << f.l_exp;
      os << " ";
    }
    os << "T";
    if (f.t_exp != 1) os << "^" << f.t_exp;
    os << ")";
    if (mult != 1) os << "^" << mult;
  }
  return os.str();
}

std::string RationalSeries::str() const {
  if (den_.empty()) return numerator_str();
  std::string num = numerator_str();
  if (num_.size() > 1) num = "(" + num + ")";
  return num + " / " + denominator_str();
}

// ---------------------------------------------------------------- operations

RationalSeries series_theta(std::int64_t e, std::int64_t b, std::int64_t t, std::int64_t w) {
  if (e < 1 || b < 1 || t < 0) throw InternalError("series_theta needs e >= 1, b >= 1, t >= 0");
  const DenominatorFactor factor{w, e};
  // Current value: num / (1 - L^w T^e)^k.
  RationalSeries::Numerator num{{b, RingElement(1)}};
  std::int64_t k = 1;
  for (std::int64_t step = 0; step < t; ++step) {
    // theta(N D^-k) = (theta(N) D + k e L^w T^e N) / D^{k+1}
    RationalSeries::Numerator theta_n;
    for (const auto& [n, c] : num) theta_n[n] = c * RingElement(Integer(n));
    RationalSeries::Numerator next = theta_n;
    for (const auto& [n, c] : theta_n) next[n + e] += -c.shift_l(w);
    for (const auto& [n, c] : num) next[n + e] += (c * RingElement(Integer(k * e))).shift_l(w);
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    num = std::move(next);
    ++k;
  }
  return RationalSeries(std::move(num), {{factor, k}});
}

PoleInfo pole_at(const RationalSeries& s, const Rational& slope) {
  PoleInfo info;
  info.slope = slope;
  for (const auto& [f, mult] : s.denominator()) {
    if (Rational(f.l_exp, f.t_exp) == slope) info.denominator_multiplicity += mult;
  }
  // Along T = L^{-s}: a term c L^l [AB] T^n becomes c [AB] L^{l - n s}. The j-th
  // s-derivative, up to a common nonzero factor, is sum c n^j [AB] L^{l - n s}, and
  // distinct (AB, exponent) pairs are independent for generic L.
  using Key = std::pair<std::vector<AbSymbol>, Rational>;
  const std::size_t max_j = [&] {
    std::size_t count = 0;
    for (const auto& [n, c] : s.numerator()) count += c.terms().size();
    return count;
  }();
  std::int64_t vanishing = 0;
  for (std::size_t j = 0; j <= max_j; ++j) {
    std::map<Key, Integer> sums;
    for (const auto& [n, c] : s.numerator()) {
      Integer weight = ipow(Integer(n), static_cast<unsigned>(j));
      for (const auto& [m, coef] : c.terms()) {
        sums[Key{m.ab, Rational(m.l_exp) - Rational(n) * slope}] += coef * weight;
      }
    }
    bool all_zero = std::all_of(sums.begin(), sums.end(), [](const auto& kv) { return kv.second == 0; });
    if (!all_zero) break;
    ++vanishing;
  }
  info.numerator_vanishing = vanishing;
  info.order = std::max<std::int64_t>(0, info.denominator_multiplicity - vanishing);
  return info;
}

std::vector<PoleInfo> pole_report(const RationalSeries& s) {
  std::set<Rational> slopes;
  for (const auto& [f, mult] : s.denominator()) slopes.insert(Rational(f.l_exp, f.t_exp));
  std::vector<PoleInfo> out;
  for (const auto& slope : slopes) {
    PoleInfo info = pole_at(s, slope);
    if (info.numerator_vanishing >= info.denominator_multiplicity) {
      throw NonReducible("numerator vanishes to order " + std::to_string(info.numerator_vanishing) +
                         " at slope " + to_string(slope) + " against denominator multiplicity " +
                         std::to_string(info.denominator_multiplicity));
    }
    out.push_back(info);
  }
  return out;
}

}  // namespace sncd
