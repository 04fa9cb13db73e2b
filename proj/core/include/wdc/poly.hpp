#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wdc/exact_matrix.hpp"

namespace wdc {

using Rational = mpq_class;

// Exponent vector of a monomial, one entry per axis.
struct Monomial {
    std::vector<int> exps;

    int total_degree() const;
    bool operator==(const Monomial& other) const = default;
};

// Graded lexicographic order: lower total degree first; within a degree the
// lexicographically larger exponent vector comes first, so x1^2 precedes
// x1 x2 precedes x2^2.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.  Zero
// coefficients are never stored.
class Poly {
public:
    explicit Poly(int nvars);
    static Poly constant(int nvars, const Rational& c);
    static Poly variable(int nvars, int axis);
    static Poly from_term(Monomial m, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    // Maximum total degree of a term; -1 for the zero polynomial.
    int degree() const;
    const std::map<Monomial, Rational, GrlexLess>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c);

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    Poly& scale(const Rational& c);
    Poly negated() const;

    Rational eval(std::span<const long> coords) const;

    // Integer-coefficient multiple with coprime coefficients and positive
    // leading (grlex-largest) term.
    Poly primitive_integer_form() const;

    bool operator==(const Poly& other) const = default;

    // Deterministic human-readable form like "X1^2 - X1 X2 + 2".
    std::string to_string() const;

private:
    int nvars_;
    std::map<Monomial, Rational, GrlexLess> terms_;
};

// Affine-linear integer form a.x + b; nonconstant forms represent
// hyperplanes.
struct LinearForm {
    std::vector<Int> coeffs;
    Int constant = 0;

    Int eval(std::span<const long> coords) const;
    bool is_constant() const;
    Poly to_poly() const;
    std::string to_string() const;

    bool operator==(const LinearForm& other) const = default;
};

// A finite family of hyperplanes given by their linear forms.
struct HyperplaneFamily {
    std::vector<LinearForm> forms;
};

} // namespace wdc
