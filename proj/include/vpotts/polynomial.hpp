#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vpotts/scalar.hpp"
#include "vpotts/weight.hpp"

namespace vpotts {

/// Declaration order is the variable order used by the canonical text form.
enum class VarKind : std::uint8_t { X, Gamma, Theta, Named };

/// A polynomial indeterminate: x_s for a semigroup element s, gamma_e for an
/// edge, theta (which doubles as q), or a free name such as the Tutte x and y.
class Variable {
 public:
  static Variable x(const WeightElement& w);
  static Variable gamma(std::string edge_id);
  static Variable theta();
  static Variable named(std::string name);

  VarKind kind() const { return kind_; }
  const std::string& key() const { return key_; }

  /// The semigroup element behind an x-variable, null for other kinds.
  const WeightElement* weight() const { return weight_.get(); }

  /// x{a+b}, g{e1}, theta, or the bare name.
  std::string str() const;

  friend bool operator==(const Variable& a, const Variable& b) {
    return a.kind_ == b.kind_ && a.key_ == b.key_;
  }
  friend std::strong_ordering operator<=>(const Variable& a, const Variable& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    return a.key_.compare(b.key_) <=> 0;
  }

 private:
  Variable(VarKind kind, std::string key, std::shared_ptr<const WeightElement> w)
      : kind_(kind), key_(std::move(key)), weight_(std::move(w)) {}

  VarKind kind_;
  std::string key_;
  std::shared_ptr<const WeightElement> weight_;
};

/// Power product with factors sorted by variable and no zero exponents.
class Monomial {
 public:
  using Factor = std::pair<Variable, unsigned>;

  Monomial() = default;
  explicit Monomial(const Variable& v, unsigned exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  unsigned degree() const;
  unsigned exponent_of(const Variable& v) const;
  unsigned degree_in(VarKind kind) const;
  Monomial without(const Variable& v) const;

  std::string str() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<Factor> factors_;
};

/// Graded lexicographic order, larger monomials first.
struct GradedDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Exact sparse multivariate polynomial with rational coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedDescending>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const Variable& v, unsigned exponent = 1);
  Polynomial(const Monomial& m, const Rational& c);

  static Polynomial one() { return Polynomial(Rational(1)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of a given monomial, zero when absent.
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Canonical text, e.g. `1*x{a}*x{b} + 1*g{e1}*x{a+b}`; "0" for zero.
  std::string str() const;

 private:
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

/// [var^power] p: the monomials carrying exactly that power, with var removed.
Polynomial coefficient_of(const Polynomial& p, const Variable& var, unsigned power);

/// Replaces every occurrence of variables matching `pred` by `replacement`.
Polynomial substitute(const Polynomial& p, const std::function<bool(const Variable&)>& pred,
                      const Polynomial& replacement);

/// Variable bindings for evaluate(). Explicit bindings win over the resolver.
class EvalContext {
 public:
  using Resolver = std::function<std::optional<Scalar>(const Variable&)>;

  EvalContext& bind(const Variable& v, Scalar value);
  EvalContext& set_resolver(Resolver r);
  std::optional<Scalar> lookup(const Variable& v) const;

 private:
  std::map<Variable, Scalar> bindings_;
  Resolver resolver_;
};

/// Substitutes every variable. The result is exact iff every binding used was
/// exact. Throws EvaluationError naming the first unbound variable.
Scalar evaluate(const Polynomial& p, const EvalContext& ctx);

}  // namespace vpotts
