#include "wdc/algebra_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "wdc/errors.hpp"

namespace wdc::algebra {

namespace {

void check_grid_cap(const Grid& g, const OracleLimits& limits)
{
    if (g.point_count() > static_cast<unsigned long>(limits.max_grid_points))
        throw limit_exceeded("algebra oracle: grid has " + g.point_count().get_str() +
                             " points, cap is " + std::to_string(limits.max_grid_points));
}

void check_degree(const Grid& g, int degree)
{
    if (degree < 0 || degree > g.top_weight())
        throw std::out_of_range("algebra oracle: degree " + std::to_string(degree) +
                                " outside [0," + std::to_string(g.top_weight()) + "]");
}

void check_points(const Grid& g, const PointSet& s)
{
    for (PointIndex p : s)
        if (p >= g.point_count())
            throw std::out_of_range("algebra oracle: point index out of range");
    if (!std::is_sorted(s.begin(), s.end()))
        throw std::invalid_argument("algebra oracle: point set must be sorted");
}

} // namespace

std::vector<Monomial> footprint_monomials(const Grid& g, int degree, const OracleLimits& limits)
{
    check_degree(g, degree);
    const int n = g.dimension();
    std::vector<Monomial> out;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);

    // Enumerate per total degree to get graded order directly.
    auto descend = [&](auto&& self, int axis, int remaining) -> void {
        if (axis == n) {
            if (remaining == 0)
                out.push_back(Monomial{exps});
            return;
        }
        const int cap = std::min(g.dims()[static_cast<std::size_t>(axis)] - 1, remaining);
        // Descending exponent on the most significant axis puts the
        // lexicographically larger vector first within a degree.
        for (int e = cap; e >= 0; --e) {
            exps[static_cast<std::size_t>(axis)] = e;
            self(self, axis + 1, remaining - e);
        }
        exps[static_cast<std::size_t>(axis)] = 0;
    };
    for (int d = 0; d <= degree; ++d)
        descend(descend, 0, d);

    if (out.size() > limits.max_monomials)
        throw limit_exceeded("algebra oracle: footprint has " + std::to_string(out.size()) +
                             " monomials, cap is " + std::to_string(limits.max_monomials));
    return out;
}

std::vector<Int> evaluation_row(const Grid& g, PointIndex p, const std::vector<Monomial>& monomials)
{
    const std::vector<long> coords = g.coords_at(p);
    std::vector<Int> row;
    row.reserve(monomials.size());
    for (const Monomial& m : monomials) {
        Int prod = 1;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            const int e = m.exps[i];
            if (e == 0)
                continue;
            Int base(coords[i]);
            Int power;
            mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
            prod *= power;
        }
        row.push_back(std::move(prod));
    }
    return row;
}

PointSet z_closure(const Grid& g, int degree, const PointSet& s, const OracleLimits& limits)
{
    check_grid_cap(g, limits);
    check_degree(g, degree);
    check_points(g, s);

    const std::vector<Monomial> monomials = footprint_monomials(g, degree, limits);
    RowSpace space(static_cast<int>(monomials.size()));
    for (PointIndex p : s)
        space.insert(evaluation_row(g, p, monomials));

    PointSet out;
    const std::uint64_t total = g.point_count().get_ui();
    for (PointIndex p = 0; p < total; ++p) {
        if (std::binary_search(s.begin(), s.end(), p)) {
            out.push_back(p);
            continue;
        }
        if (space.contains(evaluation_row(g, p, monomials)))
            out.push_back(p);
    }
    return out;
}

WeightSet z_star_closure(const Grid& g, int degree, const WeightSet& e, const OracleLimits& limits)
{
    if (e.n_max() != g.top_weight())
        throw std::invalid_argument("algebra oracle: weight set universe does not match the grid");
    const PointSet closure = z_closure(g, degree, g.weight_set_points(e), limits);

    // Keep exactly the weights whose full layer is inside the closure.
    std::vector<std::uint64_t> per_weight(static_cast<std::size_t>(g.top_weight()) + 1, 0);
    for (PointIndex p : closure)
        ++per_weight[static_cast<std::size_t>(g.weight_at(p))];
    WeightSet out(g.top_weight());
    for (int w = 0; w <= g.top_weight(); ++w)
        if (per_weight[static_cast<std::size_t>(w)] == g.layer_size(w))
            out.set(w);
    return out;
}

HilbertProfile::CubeClosedForm hilbert_cube_closed_form(int n, int degree, const WeightSet& e)
{
    if (e.n_max() != n)
        throw std::invalid_argument("hilbert closed form: weight set universe mismatch");
    if (degree < 0 || degree > n)
        throw std::out_of_range("hilbert closed form: degree out of range");

    HilbertProfile::CubeClosedForm out;
    for (int j = degree + 1; j <= n; ++j)
        if (e.test(j))
            out.jplus.push_back(j); // ascending
    for (int j = degree; j >= 0; --j)
        if (!e.test(j))
            out.jminus.push_back(j); // descending
    out.r = static_cast<int>(out.jplus.size());
    out.ell = static_cast<int>(out.jminus.size());

    auto binom = [n](int j) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
        return b;
    };
    Int value = 0;
    for (int j = 0; j <= degree; ++j)
        if (e.test(j))
            value += binom(j);
    const int pairs = std::min(out.r, out.ell);
    for (int t = 0; t < pairs; ++t)
        value += std::min(binom(out.jplus[static_cast<std::size_t>(t)]),
                          binom(out.jminus[static_cast<std::size_t>(t)]));
    out.value = value;
    return out;
}

HilbertProfile hilbert_fn(const Grid& g, int degree, const PointSet& s, const OracleLimits& limits)
{
    check_grid_cap(g, limits);
    check_degree(g, degree);
    check_points(g, s);

    const std::vector<Monomial> monomials = footprint_monomials(g, degree, limits);
    RowSpace space(static_cast<int>(monomials.size()));
    for (PointIndex p : s)
        space.insert(evaluation_row(g, p, monomials));

    HilbertProfile profile;
    profile.degree = degree;
    profile.value = space.rank();

    if (g.is_cube()) {
        // If s is a union of full layers, the closed form applies.
        std::vector<std::uint64_t> per_weight(static_cast<std::size_t>(g.top_weight()) + 1, 0);
        for (PointIndex p : s)
            ++per_weight[static_cast<std::size_t>(g.weight_at(p))];
        WeightSet weights(g.top_weight());
        bool weight_determined = true;
        for (int w = 0; w <= g.top_weight(); ++w) {
            const std::uint64_t c = per_weight[static_cast<std::size_t>(w)];
            if (c == g.layer_size(w))
                weights.set(w);
            else if (c != 0)
                weight_determined = false;
        }
        if (weight_determined)
            profile.cube_closed_form = hilbert_cube_closed_form(g.top_weight(), degree, weights);
    }
    return profile;
}

int epc_oracle(const Grid& g, const WeightSet& e, const OracleLimits& limits)
{
    if (e.n_max() != g.top_weight())
        throw std::invalid_argument("algebra oracle: weight set universe does not match the grid");
    if (e.is_full())
        throw std::invalid_argument("epc_oracle: the full interval has no exact cover");
    const PointSet pts = g.weight_set_points(e);
    for (int d = 0; d <= g.top_weight(); ++d) {
        if (z_closure(g, d, pts, limits) == pts)
            return d;
    }
    // At degree N the footprint basis spans all functions on G, so the
    // closure of any set is itself.
    throw std::logic_error("epc_oracle: no fixpoint degree found");
}

std::vector<Poly> vanishing_basis(const Grid& g, int degree, const PointSet& s,
                                  const OracleLimits& limits)
{
    check_grid_cap(g, limits);
    check_degree(g, degree);
    check_points(g, s);

    const std::vector<Monomial> monomials = footprint_monomials(g, degree, limits);
    ExactMatrix m(static_cast<int>(s.size()), static_cast<int>(monomials.size()));
    for (std::size_t r = 0; r < s.size(); ++r) {
        std::vector<Int> row = evaluation_row(g, s[r], monomials);
        for (std::size_t c = 0; c < row.size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = std::move(row[c]);
    }

    std::vector<Poly> basis;
    for (const std::vector<Int>& v : null_space(m)) {
        Poly p(g.dimension());
        for (std::size_t c = 0; c < monomials.size(); ++c)
            if (v[c] != 0)
                p.add_term(monomials[c], Rational(v[c]));
        basis.push_back(std::move(p));
    }
    return basis;
}

} // namespace wdc::algebra
