#include <doctest.h>

#include <random>

#include "support.hpp"
#include "vpotts/error.hpp"
#include "vpotts/polynomial.hpp"
#include "vpotts/weight.hpp"

using namespace vpotts;
using fixtures::g;
using fixtures::theta;
using fixtures::x;

TEST_CASE("weight_add on formal weights is multiset union") {
  CHECK(weight_add(WeightElement::formal("a"), WeightElement::formal("b")) ==
        WeightElement::formal(std::vector<std::string>{"a", "b"}));
  const auto aa = weight_add(WeightElement::formal("a"), WeightElement::formal("a"));
  CHECK(aa.key() == "a+a");
  CHECK(aa.as_formal().generators.size() == 2);
}

TEST_CASE("weight_add on field vectors is componentwise") {
  const auto s = weight_add(WeightElement::field(std::vector<ExactComplex>{Rational(1), Rational(0)}),
                            WeightElement::field(std::vector<ExactComplex>{Rational(2), Rational(5)}));
  CHECK(s == WeightElement::field(std::vector<ExactComplex>{Rational(3), Rational(5)}));
  CHECK(s.key() == "[3,5]");
}

TEST_CASE("weight_add rejects mixed realizations and lengths") {
  const auto f2 = WeightElement::field(std::vector<ExactComplex>{Rational(1), Rational(0)});
  const auto f3 = WeightElement::field(std::vector<ExactComplex>{Rational(1), Rational(0), Rational(0)});
  CHECK_THROWS_AS(weight_add(WeightElement::formal("a"), f2), WeightTypeError);
  CHECK_THROWS_AS(weight_add(f2, f3), WeightTypeError);
}

TEST_CASE("field keys distinguish complex components") {
  const auto z = WeightElement::field(std::vector<ExactComplex>{ExactComplex(Rational(1, 2), Rational(3))});
  CHECK(z.key() == "[1/2+3i]");
  CHECK_FALSE(z == WeightElement::field(std::vector<ExactComplex>{Rational(1, 2)}));
}

TEST_CASE("weight keys commute") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> gen(0, 3), num(-5, 5);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::string> a, b;
    for (int i = gen(rng); i >= 0; --i) a.push_back(std::string(1, char('a' + gen(rng))));
    for (int i = gen(rng); i >= 0; --i) b.push_back(std::string(1, char('a' + gen(rng))));
    const auto wa = WeightElement::formal(a), wb = WeightElement::formal(b);
    CHECK(weight_add(wa, wb).key() == weight_add(wb, wa).key());
    std::vector<ExactComplex> fa, fb;
    for (int i = 0; i < 3; ++i) {
      fa.emplace_back(Rational(num(rng), 3), Rational(num(rng)));
      fb.emplace_back(Rational(num(rng), 7), Rational(num(rng)));
    }
    CHECK(weight_add(WeightElement::field(fa), WeightElement::field(fb)).key() ==
          weight_add(WeightElement::field(fb), WeightElement::field(fa)).key());
  }
}

TEST_CASE("polynomial ring examples") {
  CHECK((x("a") + g("e1")) * x("b") == x("a") * x("b") + g("e1") * x("b"));
  const Polynomial p = x("a") * x("b") + g("e1") * x("a+b");
  CHECK(p + Polynomial() == p);
  CHECK((theta() + g("e")) * (theta() - g("e")) == theta() * theta() - g("e") * g("e"));
}

TEST_CASE("canonical text form") {
  CHECK((x("a") * x("b") + g("e1") * x("a+b")).str() == "1*x{a}*x{b} + 1*g{e1}*x{a+b}");
  CHECK((g("e1") * x("a+b") + x("b") * x("a")).str() == "1*x{a}*x{b} + 1*g{e1}*x{a+b}");
  CHECK(Polynomial().str() == "0");
  CHECK((theta() * theta() - Polynomial(Rational(1, 2)) * g("e")).str() == "1*theta^2 - 1/2*g{e}");
  CHECK((-theta()).str() == "-1*theta");
  CHECK(Polynomial(Rational(-3, 6)).str() == "-1/2");
}

TEST_CASE("no zero coefficients are stored") {
  Polynomial p = x("a") + g("e");
  p -= x("a");
  CHECK(p == g("e"));
  CHECK(p.term_count() == 1);
  CHECK((p - p).is_zero());
}

TEST_CASE("coefficient_of extracts a power of one variable") {
  const Variable th = Variable::theta();
  CHECK(coefficient_of(theta() * theta() + theta() * g("g"), th, 1) == g("g"));
  const Polynomial gg = g("g");
  const Polynomial zt = pow(theta(), 3) + Rational(3) * pow(theta(), 2) * gg +
                        Rational(3) * theta() * pow(gg, 2) + theta() * pow(gg, 3);
  CHECK(coefficient_of(zt, th, 1) == Rational(3) * pow(gg, 2) + pow(gg, 3));
  CHECK(coefficient_of(pow(gg, 2), th, 1).is_zero());
}

TEST_CASE("evaluate substitutes bindings") {
  EvalContext ctx;
  ctx.bind(Variable::x(WeightElement::formal("a")), ExactComplex(Rational(2)))
      .bind(Variable::x(WeightElement::formal("b")), ExactComplex(Rational(3)));
  const Scalar s = evaluate(x("a") * x("b"), ctx);
  REQUIRE(is_exact(s));
  CHECK(std::get<ExactComplex>(s) == ExactComplex(Rational(6)));

  const double beta = 0.7, j = 1.3;
  EvalContext num;
  num.bind(Variable::gamma("e"), Complex(std::expm1(beta * j), 0.0));
  const Complex v = to_complex(evaluate(g("e") + Polynomial(Rational(1)), num));
  CHECK(v.real() == doctest::Approx(std::exp(beta * j)).epsilon(1e-14));
  CHECK_FALSE(is_exact(evaluate(g("e"), num)));

  EvalContext partial;
  partial.bind(Variable::theta(), ExactComplex(Rational(2)));
  CHECK_THROWS_AS(evaluate(theta() * g("e"), partial), EvaluationError);
}

namespace {

Polynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4), terms(0, 4), var(0, 3), expo(0, 2);
  const Polynomial vars[] = {x("a"), x("a+b"), g("e1"), theta()};
  Polynomial p;
  for (int t = terms(rng); t > 0; --t) {
    Polynomial m(Rational(coeff(rng), 1 + std::abs(coeff(rng))));
    for (int i = 0; i < 3; ++i) m *= pow(vars[var(rng)], expo(rng));
    p += m;
  }
  return p;
}

EvalContext exact_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n(-6, 6);
  EvalContext ctx;
  ctx.bind(Variable::x(WeightElement::formal("a")), ExactComplex(Rational(n(rng), 5), Rational(n(rng))))
      .bind(Variable::x(WeightElement::formal(std::vector<std::string>{"a", "b"})), ExactComplex(Rational(n(rng))))
      .bind(Variable::gamma("e1"), ExactComplex(Rational(n(rng), 3)))
      .bind(Variable::theta(), ExactComplex(Rational(n(rng)), Rational(1, 2)));
  return ctx;
}

}  // namespace

TEST_CASE("ring laws hold on random polynomials") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).str() == (b * a).str());
  }
}

TEST_CASE("evaluate is a ring homomorphism") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int t = 0; t < 100; ++t) {
    const Polynomial a = random_poly(rng), b = random_poly(rng);
    const EvalContext ctx = exact_point(rng);
    const auto pa = std::get<ExactComplex>(evaluate(a, ctx));
    const auto pb = std::get<ExactComplex>(evaluate(b, ctx));
    CHECK(std::get<ExactComplex>(evaluate(a * b, ctx)) == pa * pb);
    CHECK(std::get<ExactComplex>(evaluate(a + b, ctx)) == pa + pb);

    EvalContext f;
    f.bind(Variable::x(WeightElement::formal("a")), Complex(u(rng), u(rng)))
        .bind(Variable::x(WeightElement::formal(std::vector<std::string>{"a", "b"})), Complex(u(rng), 0))
        .bind(Variable::gamma("e1"), Complex(u(rng), 0))
        .bind(Variable::theta(), Complex(u(rng), u(rng)));
    const Complex fa = to_complex(evaluate(a, f)), fb = to_complex(evaluate(b, f));
    const Complex fab = to_complex(evaluate(a * b, f));
    const double scale = std::max({std::abs(fab), std::abs(fa * fb), 1.0});
    CHECK(std::abs(fab - fa * fb) / scale <= 1e-12);
  }
}

TEST_CASE("rational_from_double is exact and rejects non-finite input") {
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_double(-3.25) == Rational(-13, 4));
  CHECK_THROWS_AS(rational_from_double(std::numeric_limits<double>::infinity()), InputError);
}
