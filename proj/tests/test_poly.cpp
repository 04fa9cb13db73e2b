#include <doctest.h>

#include "wdc/poly.hpp"

using namespace wdc;

TEST_CASE("grlex term order")
{
    GrlexLess less;
    const Monomial one{{0, 0}};
    const Monomial x1{{1, 0}};
    const Monomial x2{{0, 1}};
    const Monomial x1sq{{2, 0}};
    const Monomial x1x2{{1, 1}};
    const Monomial x2sq{{0, 2}};
    CHECK(less(one, x1));
    CHECK(less(x1, x2));   // within a degree, larger exponent vector first
    CHECK(less(x2, x1sq)); // degree beats lex
    CHECK(less(x1sq, x1x2));
    CHECK(less(x1x2, x2sq));
    CHECK_FALSE(less(x2, x1));
}

TEST_CASE("arithmetic and degree")
{
    const int n = 2;
    Poly p = Poly::variable(n, 0) + Poly::variable(n, 1); // x1 + x2
    Poly q = p;
    q -= Poly::constant(n, 2);
    Poly prod = p * q; // (x1+x2)(x1+x2-2)
    CHECK(prod.degree() == 2);
    CHECK(prod.eval(std::vector<long>{1, 1}) == 0);
    CHECK(prod.eval(std::vector<long>{2, 2}) == 8);
    CHECK(prod.eval(std::vector<long>{0, 0}) == 0);

    Poly zero = p - p;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.to_string() == "0");

    // cancellation drops terms entirely
    Poly c = p * p - p * p;
    CHECK(c.is_zero());
}

TEST_CASE("exact evaluation with large values")
{
    const int n = 1;
    Poly p = Poly::from_term(Monomial{{30}}, 1); // x^30
    const Rational v = p.eval(std::vector<long>{7});
    Int expect = 1;
    for (int i = 0; i < 30; ++i)
        expect *= 7;
    CHECK(v == Rational(expect));
}

TEST_CASE("primitive integer form")
{
    const int n = 1;
    Poly p = Poly::variable(n, 0);
    p.scale(Rational(1, 2));
    p += Poly::constant(n, Rational(1, 3));
    const Poly q = p.primitive_integer_form(); // 3x + 2
    CHECK(q.eval(std::vector<long>{0}) == 2);
    CHECK(q.eval(std::vector<long>{1}) == 5);

    // a negative leading coefficient flips
    Poly r = Poly::variable(n, 0).negated();
    const Poly s = r.primitive_integer_form();
    CHECK(s.eval(std::vector<long>{1}) == 1);
}

TEST_CASE("to_string is deterministic and leading-term-first")
{
    const int n = 2;
    Poly p = Poly::variable(n, 0) * Poly::variable(n, 0);
    p -= Poly::variable(n, 0) * Poly::variable(n, 1);
    p += Poly::constant(n, 2);
    CHECK(p.to_string() == "X1^2 - X1 X2 + 2");
}

TEST_CASE("linear forms")
{
    LinearForm f{{Int(1), Int(-1)}, Int(0)}; // x1 - x2
    CHECK(f.eval(std::vector<long>{2, 2}) == 0);
    CHECK(f.eval(std::vector<long>{2, 0}) == 2);
    CHECK_FALSE(f.is_constant());
    CHECK(f.to_poly().degree() == 1);
    CHECK(f.to_string() == "X1 - X2");

    LinearForm c{{Int(0), Int(0)}, Int(3)};
    CHECK(c.is_constant());
}
