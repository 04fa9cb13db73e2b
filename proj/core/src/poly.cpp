#include "wdc/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wdc {

int Monomial::total_degree() const
{
    return std::accumulate(exps.begin(), exps.end(), 0);
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const
{
    const int da = a.total_degree();
    const int db = b.total_degree();
    if (da != db)
        return da < db;
    return a.exps > b.exps; // larger exponent vector first within a degree
}

Poly::Poly(int nvars) : nvars_(nvars)
{
    if (nvars < 0)
        throw std::invalid_argument("Poly: negative variable count");
}

Poly Poly::constant(int nvars, const Rational& c)
{
    Poly p(nvars);
    p.add_term(Monomial{std::vector<int>(static_cast<std::size_t>(nvars), 0)}, c);
    return p;
}

Poly Poly::variable(int nvars, int axis)
{
    if (axis < 0 || axis >= nvars)
        throw std::out_of_range("Poly: variable index out of range");
    Monomial m{std::vector<int>(static_cast<std::size_t>(nvars), 0)};
    m.exps[static_cast<std::size_t>(axis)] = 1;
    return from_term(std::move(m), 1);
}

Poly Poly::from_term(Monomial m, const Rational& c)
{
    Poly p(static_cast<int>(m.exps.size()));
    p.add_term(m, c);
    return p;
}

int Poly::degree() const
{
    if (terms_.empty())
        return -1;
    return terms_.rbegin()->first.total_degree(); // grlex max is last
}

void Poly::add_term(const Monomial& m, const Rational& c)
{
    if (static_cast<int>(m.exps.size()) != nvars_)
        throw std::invalid_argument("Poly: monomial arity mismatch");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& other)
{
    if (other.nvars_ != nvars_)
        throw std::invalid_argument("Poly: arity mismatch");
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other)
{
    if (other.nvars_ != nvars_)
        throw std::invalid_argument("Poly: arity mismatch");
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& other)
{
    if (other.nvars_ != nvars_)
        throw std::invalid_argument("Poly: arity mismatch");
    Poly out(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            Monomial m{std::vector<int>(static_cast<std::size_t>(nvars_))};
            for (int i = 0; i < nvars_; ++i)
                m.exps[static_cast<std::size_t>(i)] =
                    ma.exps[static_cast<std::size_t>(i)] + mb.exps[static_cast<std::size_t>(i)];
            out.add_term(m, ca * cb);
        }
    }
    *this = std::move(out);
    return *this;
}

Poly& Poly::scale(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_)
        coef *= c;
    return *this;
}

Poly Poly::negated() const
{
    Poly p = *this;
    for (auto& [m, coef] : p.terms_)
        coef = -coef;
    return p;
}

Rational Poly::eval(std::span<const long> coords) const
{
    if (static_cast<int>(coords.size()) != nvars_)
        throw std::invalid_argument("Poly: evaluation arity mismatch");
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Int prod = 1;
        for (int i = 0; i < nvars_; ++i) {
            const int e = m.exps[static_cast<std::size_t>(i)];
            if (e == 0)
                continue;
            Int base(coords[static_cast<std::size_t>(i)]);
            Int power;
            mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
            prod *= power;
        }
        sum += c * Rational(prod);
    }
    return sum;
}

namespace {

// Conventional display order: higher total degree first, then the
// lexicographically larger exponent vector (X1-heavy terms lead).
bool display_before(const Monomial& a, const Monomial& b)
{
    const int da = a.total_degree();
    const int db = b.total_degree();
    if (da != db)
        return da > db;
    return a.exps > b.exps;
}

} // namespace

Poly Poly::primitive_integer_form() const
{
    if (terms_.empty())
        return *this;
    Int den_lcm = 1;
    for (const auto& [m, c] : terms_)
        den_lcm = lcm(den_lcm, c.get_den());
    Int content = 0;
    for (const auto& [m, c] : terms_) {
        Int num = c.get_num() * (den_lcm / c.get_den());
        content = content == 0 ? Int(abs(num)) : Int(gcd(content, num));
    }
    Rational factor = Rational(den_lcm) / Rational(content);
    const auto lead = std::min_element(
        terms_.begin(), terms_.end(),
        [](const auto& a, const auto& b) { return display_before(a.first, b.first); });
    if (lead->second < 0)
        factor = -factor;
    Poly out = *this;
    out.scale(factor);
    return out;
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return display_before(a.first, b.first); });
    std::string out;
    for (const auto& [m, c] : ordered) {
        Rational coef = c;
        if (out.empty()) {
            if (coef < 0) {
                out += "-";
                coef = -coef;
            }
        } else {
            out += coef < 0 ? " - " : " + ";
            if (coef < 0)
                coef = -coef;
        }
        std::string vars;
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            const int e = m.exps[i];
            if (e == 0)
                continue;
            if (!vars.empty())
                vars += ' ';
            vars += "X" + std::to_string(i + 1);
            if (e > 1)
                vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            out += coef.get_str();
        } else {
            if (coef != 1)
                out += coef.get_str() + " ";
            out += vars;
        }
    }
    return out;
}

Int LinearForm::eval(std::span<const long> coords) const
{
    if (coords.size() != coeffs.size())
        throw std::invalid_argument("LinearForm: evaluation arity mismatch");
    Int sum = constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        sum += coeffs[i] * Int(coords[i]);
    return sum;
}

bool LinearForm::is_constant() const
{
    for (const Int& a : coeffs)
        if (a != 0)
            return false;
    return true;
}

Poly LinearForm::to_poly() const
{
    const int n = static_cast<int>(coeffs.size());
    Poly p = Poly::constant(n, Rational(constant));
    for (int i = 0; i < n; ++i) {
        if (coeffs[static_cast<std::size_t>(i)] == 0)
            continue;
        Poly v = Poly::variable(n, i);
        v.scale(Rational(coeffs[static_cast<std::size_t>(i)]));
        p += v;
    }
    return p;
}

std::string LinearForm::to_string() const
{
    return to_poly().to_string();
}

} // namespace wdc
