#include "wdc/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wdc/covers.hpp"
#include "wdc/errors.hpp"

namespace wdc::construct {

namespace {

void check_enumeration_cap(const Grid& g, const algebra::OracleLimits& limits)
{
    if (g.point_count() > static_cast<unsigned long>(limits.max_grid_points))
        throw limit_exceeded("constructions: grid has " + g.point_count().get_str() +
                             " points, verification cap is " +
                             std::to_string(limits.max_grid_points));
}

Poly sum_of_variables(int n)
{
    Poly p(n);
    for (int i = 0; i < n; ++i)
        p += Poly::variable(n, i);
    return p;
}

// Rank-space coordinates: constructions on uniform grids evaluate at the
// points' coordinates, which equal their ranks there.
std::vector<long> coords_of(const Grid& g, PointIndex p)
{
    return g.coords_at(p);
}

} // namespace

Poly level_product(const Grid& g, const WeightSet& e, const algebra::OracleLimits& limits)
{
    if (!g.is_uniform())
        throw unsupported_domain("level_product: level forms match weights only on uniform grids");
    if (e.n_max() != g.top_weight())
        throw std::invalid_argument("level_product: weight set universe does not match the grid");
    check_enumeration_cap(g, limits);

    const int n = g.dimension();
    Poly p = Poly::constant(n, 1);
    const Poly sum = sum_of_variables(n);
    for (int t : e.to_vector()) {
        Poly factor = sum;
        factor -= Poly::constant(n, t);
        p *= factor;
    }

    // Verify: zero exactly on the selected layers.
    const std::uint64_t total = g.point_count().get_ui();
    for (PointIndex q = 0; q < total; ++q) {
        const bool inside = e.test(g.weight_at(q));
        if ((p.eval(coords_of(g, q)) == 0) != inside)
            throw std::logic_error("level_product: verification failed");
    }
    if (p.degree() != e.count())
        throw std::logic_error("level_product: degree mismatch");
    return p;
}

Poly pairing_poly(int n, int i)
{
    if (n < 1 || i < 0 || 2 * i > n)
        throw std::invalid_argument("pairing_poly: need 0 <= 2i <= n");
    Poly p = Poly::constant(n, 1);
    for (int t = 0; t < i; ++t) {
        Poly factor = Poly::variable(n, 2 * t);
        factor -= Poly::variable(n, 2 * t + 1);
        p *= factor;
    }

    const Grid g = Grid::cube(n);
    const WeightSet tails = two_tails(n, i);
    // Verify: vanishes on the two tails; each middle layer keeps a nonzero
    // point.
    std::vector<bool> layer_nonzero(static_cast<std::size_t>(n) + 1, false);
    const std::uint64_t total = g.point_count().get_ui();
    for (PointIndex q = 0; q < total; ++q) {
        const int w = g.weight_at(q);
        const bool zero = p.eval(coords_of(g, q)) == 0;
        if (tails.test(w) && !zero)
            throw std::logic_error("pairing_poly: nonzero on a tail layer");
        if (!zero)
            layer_nonzero[static_cast<std::size_t>(w)] = true;
    }
    for (int w = i; w <= n - i; ++w)
        if (!layer_nonzero[static_cast<std::size_t>(w)])
            throw std::logic_error("pairing_poly: middle layer lost");
    return p;
}

Poly ppc_witness(const Grid& g, const WeightSet& e, const algebra::OracleLimits& limits)
{
    const int target_degree = covers::ppc(g, e); // carries the domain guards
    check_enumeration_cap(g, limits);

    const int n = g.top_weight();
    const PointSet pts = g.weight_set_points(e);
    const std::vector<Poly> basis = algebra::vanishing_basis(g, target_degree, pts, limits);

    const std::vector<int> off = e.complement().to_vector();

    // Pick, per missing layer, the first basis element that is nonzero
    // somewhere on it; the witness lives in the span of those.
    std::vector<std::size_t> reps;
    for (int j : off) {
        const PointSet layer = g.layer_points(j);
        bool found = false;
        for (std::size_t b = 0; b < basis.size() && !found; ++b) {
            for (PointIndex q : layer) {
                if (basis[b].eval(coords_of(g, q)) != 0) {
                    reps.push_back(b);
                    found = true;
                    break;
                }
            }
        }
        if (!found)
            throw std::logic_error("ppc_witness: a missing layer is unreachable at the target degree");
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

    const auto verify = [&](const Poly& p) -> bool {
        if (p.is_zero())
            return false;
        for (PointIndex q : pts)
            if (p.eval(coords_of(g, q)) != 0)
                throw std::logic_error("ppc_witness: candidate leaves the vanishing ideal");
        for (int j : off) {
            bool nonzero = false;
            for (PointIndex q : g.layer_points(j)) {
                if (p.eval(coords_of(g, q)) != 0) {
                    nonzero = true;
                    break;
                }
            }
            if (!nonzero)
                return false;
        }
        return true;
    };

    const auto finish = [&](Poly p) -> Poly {
        p = p.primitive_integer_form();
        if (p.degree() != target_degree)
            throw std::logic_error("ppc_witness: verified witness has the wrong degree");
        return p;
    };

    // Coefficient vectors over the selected basis elements, enumerated by
    // increasing max-norm and lexicographically within a shell.
    const std::size_t k = reps.size();
    for (int norm = 1; norm <= 2; ++norm) {
        const long shell = 2L * norm + 1;
        double size_estimate = 1;
        for (std::size_t i = 0; i < k; ++i)
            size_estimate *= static_cast<double>(shell);
        if (size_estimate > 300000.0)
            break; // box too large; fall through to the staged search below
        std::vector<int> lambda(k, -norm);
        for (;;) {
            int maxabs = 0;
            for (int v : lambda)
                maxabs = std::max(maxabs, std::abs(v));
            if (maxabs == norm) {
                Poly p(g.dimension());
                for (std::size_t i = 0; i < k; ++i) {
                    if (lambda[i] == 0)
                        continue;
                    Poly term = basis[reps[i]];
                    term.scale(lambda[i]);
                    p += term;
                }
                if (verify(p))
                    return finish(std::move(p));
            }
            std::size_t pos = k;
            while (pos-- > 0) {
                if (lambda[pos] < norm) {
                    ++lambda[pos];
                    for (std::size_t r = pos + 1; r < k; ++r)
                        lambda[r] = -norm;
                    break;
                }
                if (pos == 0) {
                    pos = std::size_t(-1);
                    break;
                }
            }
            if (pos == std::size_t(-1))
                break;
        }
    }

    // Staged fallback: geometric coefficients 1, t, t^2, ... separate the
    // layer representatives for all but finitely many t.
    for (long t = 1; t <= 8L * (n + 1) * static_cast<long>(k + 1); ++t) {
        Poly p(g.dimension());
        Rational power = 1;
        for (std::size_t i = 0; i < k; ++i) {
            Poly term = basis[reps[i]];
            term.scale(power);
            p += term;
            power *= t;
        }
        if (verify(p))
            return finish(std::move(p));
    }
    throw std::logic_error("ppc_witness: deterministic search exhausted");
}

HyperplaneFamily ehc_t2_family(int n)
{
    if (n < 4)
        throw std::invalid_argument("ehc_t2_family: needs n >= 4 so that T_{n,2} is proper");

    LinearForm h0{std::vector<Int>(static_cast<std::size_t>(n), Int(1)), Int(0)};
    h0.coeffs[0] = 0;
    h0.coeffs[1] = -(n - 2);
    LinearForm h1{std::vector<Int>(static_cast<std::size_t>(n), Int(1)), Int(-1)};
    h1.coeffs[0] = -(n - 3);

    const Grid g = Grid::cube(n);
    const WeightSet tails = two_tails(n, 2);
    const std::uint64_t total = g.point_count().get_ui();
    for (PointIndex q = 0; q < total; ++q) {
        const std::vector<long> c = g.coords_at(q);
        const bool zero = h0.eval(c) == 0 || h1.eval(c) == 0;
        if (zero != tails.test(g.weight_at(q)))
            throw std::logic_error("ehc_t2_family: trace mismatch");
    }
    return HyperplaneFamily{{std::move(h0), std::move(h1)}};
}

bool extreme_pair_form_exists(const Grid& g)
{
    if (!g.is_uniform())
        throw unsupported_domain("extreme-pair forms are defined for uniform grids");
    if (g.dimension() < 2)
        return false; // a single affine root cannot trace two points
    long d = 0;
    for (int k : g.dims())
        d = std::gcd(d, static_cast<long>(k - 1));
    return d == 1;
}

std::optional<LinearForm> try_ehc_t1_form(const Grid& g, const algebra::OracleLimits& limits)
{
    if (!extreme_pair_form_exists(g))
        return std::nullopt;
    check_enumeration_cap(g, limits);

    const int n = g.dimension();
    const std::uint64_t total = g.point_count().get_ui();
    std::vector<long> top(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        top[static_cast<std::size_t>(i)] = g.dims()[static_cast<std::size_t>(i)] - 1;

    const auto verify = [&](const LinearForm& form) -> bool {
        for (PointIndex q = 0; q < total; ++q) {
            const std::vector<long> c = g.coords_at(q);
            const bool corner =
                std::all_of(c.begin(), c.end(), [](long x) { return x == 0; }) || c == top;
            if ((form.eval(c) == 0) != corner)
                return false;
        }
        return true;
    };

    // Coefficients by increasing max-norm, lexicographic within a shell; the
    // last coordinate is forced by the corner constraint a . top = 0.
    for (int norm = 1; norm <= 1000; ++norm) {
        std::vector<long> prefix(static_cast<std::size_t>(n - 1), -norm);
        for (;;) {
            long dot = 0;
            for (int i = 0; i < n - 1; ++i)
                dot += prefix[static_cast<std::size_t>(i)] * top[static_cast<std::size_t>(i)];
            const long kn = top[static_cast<std::size_t>(n - 1)];
            if (dot % kn == 0) {
                const long last = -dot / kn;
                long maxabs = std::abs(last);
                for (long v : prefix)
                    maxabs = std::max(maxabs, std::abs(v));
                if (maxabs == norm) {
                    LinearForm form;
                    form.coeffs.reserve(static_cast<std::size_t>(n));
                    for (long v : prefix)
                        form.coeffs.emplace_back(v);
                    form.coeffs.emplace_back(last);
                    form.constant = 0;
                    if (!form.is_constant() && verify(form))
                        return form;
                }
            }
            std::size_t pos = static_cast<std::size_t>(n - 1);
            while (pos-- > 0) {
                if (prefix[pos] < norm) {
                    ++prefix[pos];
                    for (std::size_t r = pos + 1; r + 1 < static_cast<std::size_t>(n); ++r)
                        prefix[r] = -norm;
                    break;
                }
                if (pos == 0) {
                    pos = std::size_t(-1);
                    break;
                }
            }
            if (pos == std::size_t(-1))
                break;
        }
    }
    throw std::logic_error("try_ehc_t1_form: search box exhausted despite existence");
}

LinearForm ehc_t1_form(const Grid& g, const algebra::OracleLimits& limits)
{
    std::optional<LinearForm> form = try_ehc_t1_form(g, limits);
    if (!form) {
        if (g.dimension() < 2)
            throw unsupported_domain(
                "ehc_t1_form: no single hyperplane on a line traces two points");
        throw unsupported_domain(
            "ehc_t1_form: the corner segment passes through interior grid points");
    }
    return *std::move(form);
}

} // namespace wdc::construct
