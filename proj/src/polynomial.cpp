#include "vpotts/polynomial.hpp"

#include <algorithm>

#include "compensated_sum.hpp"
#include "vpotts/error.hpp"

namespace vpotts {

Variable Variable::x(const WeightElement& w) {
  return Variable(VarKind::X, w.key(), std::make_shared<const WeightElement>(w));
}

Variable Variable::gamma(std::string edge_id) {
  return Variable(VarKind::Gamma, std::move(edge_id), nullptr);
}

Variable Variable::theta() { return Variable(VarKind::Theta, "theta", nullptr); }

Variable Variable::named(std::string name) {
  return Variable(VarKind::Named, std::move(name), nullptr);
}

std::string Variable::str() const {
  switch (kind_) {
    case VarKind::X:
      return "x{" + key_ + "}";
    case VarKind::Gamma:
      return "g{" + key_ + "}";
    case VarKind::Theta:
    case VarKind::Named:
      break;
  }
  return key_;
}

Monomial::Monomial(const Variable& v, unsigned exponent) {
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::exponent_of(const Variable& v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const Variable& x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

unsigned Monomial::degree_in(VarKind kind) const {
  unsigned d = 0;
  for (const auto& f : factors_)
    if (f.first.kind() == kind) d += f.second;
  return d;
}

Monomial Monomial::without(const Variable& v) const {
  Monomial out;
  out.factors_.reserve(factors_.size());
  for (const auto& f : factors_)
    if (!(f.first == v)) out.factors_.push_back(f);
  return out;
}

// Factors print in the byte order of their rendered names, so g{..} precedes
// theta and x{..}.
std::string Monomial::str() const {
  std::vector<std::pair<std::string, unsigned>> parts;
  for (const auto& [v, e] : factors_) parts.emplace_back(v.str(), e);
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '*';
    out += parts[i].first;
    if (parts[i].second != 1) out += '^' + std::to_string(parts[i].second);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first == j->first) {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    } else if (i->first < j->first) {
      out.factors_.push_back(*i++);
    } else {
      out.factors_.push_back(*j++);
    }
  }
  out.factors_.insert(out.factors_.end(), i, a.factors_.end());
  out.factors_.insert(out.factors_.end(), j, b.factors_.end());
  return out;
}

bool GradedDescending::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto i = fa.begin();
  auto j = fb.begin();
  while (i != fa.end() && j != fb.end()) {
    if (i->first == j->first) {
      if (i->second != j->second) return i->second > j->second;
      ++i;
      ++j;
    } else {
      // The earlier variable is present in one monomial only.
      return i->first < j->first;
    }
  }
  return i != fa.end() && j == fb.end();
}

namespace {

Rational canonical(const Rational& c) {
  Rational r = c;
  r.canonicalize();
  return r;
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{}, canonical(c));
}

Polynomial::Polynomial(const Variable& v, unsigned exponent) {
  terms_.emplace(Monomial(v, exponent), Rational(1));
}

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(m, canonical(c));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, canonical(c));
  if (inserted) return;
  it->second += canonical(c);
  if (sgn(it->second) == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  const Rational k = canonical(c);
  for (auto& [m, coeff] : terms_) coeff *= k;
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += Rational(abs(c)).get_str();
    if (!m.is_one()) out += '*' + m.str();
  }
  return out;
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::one();
  for (unsigned i = 0; i < exponent; ++i) result *= p;
  return result;
}

Polynomial coefficient_of(const Polynomial& p, const Variable& var, unsigned power) {
  Polynomial out;
  for (const auto& [m, c] : p.terms())
    if (m.exponent_of(var) == power) out.add_term(m.without(var), c);
  return out;
}

Polynomial substitute(const Polynomial& p, const std::function<bool(const Variable&)>& pred,
                      const Polynomial& replacement) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Monomial kept;
    unsigned replaced = 0;
    for (const auto& [v, e] : m.factors()) {
      if (pred(v))
        replaced += e;
      else
        kept = kept * Monomial(v, e);
    }
    out += Polynomial(kept, c) * pow(replacement, replaced);
  }
  return out;
}

EvalContext& EvalContext::bind(const Variable& v, Scalar value) {
  bindings_.insert_or_assign(v, std::move(value));
  return *this;
}

EvalContext& EvalContext::set_resolver(Resolver r) {
  resolver_ = std::move(r);
  return *this;
}

std::optional<Scalar> EvalContext::lookup(const Variable& v) const {
  if (auto it = bindings_.find(v); it != bindings_.end()) return it->second;
  if (resolver_) return resolver_(v);
  return std::nullopt;
}

namespace {

template <class T>
T power(const T& base, unsigned e) {
  T result(Rational(1));
  T b = base;
  while (e) {
    if (e & 1u) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

}  // namespace

Scalar evaluate(const Polynomial& p, const EvalContext& ctx) {
  std::map<Variable, Scalar> values;
  bool exact = true;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.factors()) {
      if (values.count(v)) continue;
      auto value = ctx.lookup(v);
      if (!value) throw EvaluationError("no binding for variable " + v.str());
      exact = exact && is_exact(*value);
      values.emplace(v, std::move(*value));
    }
  }

  if (exact) {
    ExactComplex total;
    for (const auto& [m, c] : p.terms()) {
      ExactComplex term(c);
      for (const auto& [v, e] : m.factors())
        term *= power(std::get<ExactComplex>(values.at(v)), e);
      total += term;
    }
    return total;
  }

  std::map<Variable, Complex> numeric;
  for (const auto& [v, s] : values) numeric.emplace(v, to_complex(s));
  detail::CompensatedSum total;
  for (const auto& [m, c] : p.terms()) {
    Complex term(c.get_d(), 0.0);
    for (const auto& [v, e] : m.factors()) {
      const Complex base = numeric.at(v);
      for (unsigned i = 0; i < e; ++i) term *= base;
    }
    total.add(term);
  }
  return total.value();
}

}  // namespace vpotts
