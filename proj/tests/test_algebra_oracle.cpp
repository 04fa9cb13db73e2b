#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "wdc/algebra_oracle.hpp"
#include "wdc/errors.hpp"

using namespace wdc;
using namespace wdc::algebra;

namespace {

WeightSet from_bits(int n, std::uint64_t bits)
{
    WeightSet e(n);
    for (int w = 0; w <= n; ++w)
        if (bits & (std::uint64_t{1} << w))
            e.set(w);
    return e;
}

std::vector<int> exps_of(const std::vector<Monomial>& ms, std::size_t i)
{
    return ms[i].exps;
}

} // namespace

TEST_CASE("footprint monomials in graded-lex order")
{
    const std::vector<Monomial> cube_d1 = footprint_monomials(Grid::cube(2), 1);
    REQUIRE(cube_d1.size() == 3);
    CHECK(exps_of(cube_d1, 0) == std::vector<int>{0, 0});
    CHECK(exps_of(cube_d1, 1) == std::vector<int>{1, 0});
    CHECK(exps_of(cube_d1, 2) == std::vector<int>{0, 1});

    // the per-axis bound trims the square on the cube
    const std::vector<Monomial> cube_d2 = footprint_monomials(Grid::cube(2), 2);
    REQUIRE(cube_d2.size() == 4);
    CHECK(exps_of(cube_d2, 3) == std::vector<int>{1, 1});

    const std::vector<Monomial> grid_d2 = footprint_monomials(Grid::uniform({3, 3}), 2);
    REQUIRE(grid_d2.size() == 6);
    CHECK(exps_of(grid_d2, 3) == std::vector<int>{2, 0});
    CHECK(exps_of(grid_d2, 4) == std::vector<int>{1, 1});
    CHECK(exps_of(grid_d2, 5) == std::vector<int>{0, 2});
}

TEST_CASE("z-closure of the [0,2]^3 two-tails set gains exactly the center")
{
    const Grid g = Grid::uniform({3, 3, 3});
    const WeightSet tails = two_tails(6, 3);
    const PointSet base = g.weight_set_points(tails);
    const PointSet closure = z_closure(g, 3, base);

    PointSet expected = base;
    const int center[3] = {1, 1, 1};
    expected.push_back(g.index_of(center));
    std::sort(expected.begin(), expected.end());
    CHECK(closure == expected);

    CHECK(z_star_closure(g, 3, tails) == tails);
}

TEST_CASE("z-closure fixpoint on [0,2]^2 at degree 2")
{
    const Grid g = Grid::uniform({3, 3});
    const PointSet base = g.weight_set_points(two_tails(4, 2));
    CHECK(z_closure(g, 2, base) == base);
}

TEST_CASE("the whole grid is closed at every degree")
{
    for (const Grid& g : {Grid::cube(2), Grid::uniform({3, 3})}) {
        const PointSet all = g.all_points(64);
        for (int d = 0; d <= g.top_weight(); ++d)
            CHECK(z_closure(g, d, all) == all);
    }
}

TEST_CASE("small weight sets are already closed")
{
    // |E| <= d keeps the set fixed on strictly unimodal grids
    for (const Grid& g : {Grid::cube(3), Grid::uniform({3, 3})}) {
        const int n = g.top_weight();
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
            const WeightSet e = from_bits(n, bits);
            for (int d = e.count(); d <= n; ++d)
                CHECK(z_star_closure(g, d, e) == e);
        }
    }
}

TEST_CASE("nonuniform digression: levels {0,1,3}^2")
{
    const Grid h = Grid::with_levels({{0, 1, 3}, {0, 1, 3}});
    const Grid g = Grid::uniform({3, 3});
    const WeightSet middle = WeightSet::of(4, {2});
    CHECK(z_star_closure(h, 1, middle).is_full());
    CHECK(z_star_closure(g, 1, middle) == middle);
}

TEST_CASE("hilbert values")
{
    const Grid cube2 = Grid::cube(2);
    const HilbertProfile p = hilbert_fn(cube2, 1, cube2.all_points(16));
    CHECK(p.value == 3);
    REQUIRE(p.cube_closed_form.has_value());
    CHECK(p.cube_closed_form->value == 3);
    CHECK(p.cube_closed_form->r == 1);
    CHECK(p.cube_closed_form->ell == 0);

    // at degree N the footprint spans everything
    for (const Grid& g : {Grid::cube(3), Grid::uniform({3, 3})}) {
        const PointSet all = g.all_points(64);
        CHECK(hilbert_fn(g, g.top_weight(), all).value ==
              Int(static_cast<unsigned long>(all.size())));
    }

    // sets missing part of a layer carry no closed form
    const int e1[2] = {1, 0};
    const PointSet half_layer{cube2.index_of(e1)};
    CHECK_FALSE(hilbert_fn(cube2, 1, half_layer).cube_closed_form.has_value());
}

TEST_CASE("hilbert rank matches the closed form exhaustively, n <= 4")
{
    for (int n = 1; n <= 4; ++n) {
        const Grid g = Grid::cube(n);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
            const WeightSet e = from_bits(n, bits);
            const PointSet pts = g.weight_set_points(e);
            for (int d = 0; d <= n; ++d) {
                const auto closed = hilbert_cube_closed_form(n, d, e);
                CHECK(hilbert_fn(g, d, pts).value == closed.value);
            }
        }
    }
}

TEST_CASE("hilbert value is blind to the z-closure")
{
    std::mt19937_64 rng(0x5eed0200);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const Grid g = Grid::cube(n);
        const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
        PointSet a;
        for (PointIndex p = 0; p < g.point_count().get_ui(); ++p)
            if (rng() & 1)
                a.push_back(p);
        const PointSet closure = z_closure(g, d, a);
        CHECK(hilbert_fn(g, d, a).value == hilbert_fn(g, d, closure).value);
    }
}

TEST_CASE("exact polynomial cover degrees")
{
    CHECK(epc_oracle(Grid::cube(4), two_tails(4, 2)) == 2);
    CHECK(epc_oracle(Grid::uniform({3, 3}), WeightSet::empty(4)) == 0);
    CHECK(epc_oracle(Grid::uniform({3, 3}), two_tails(4, 2)) == 2);
    CHECK_THROWS_AS(epc_oracle(Grid::cube(3), WeightSet::full(3)), std::invalid_argument);
}

TEST_CASE("vanishing bases")
{
    // nothing of any degree vanishes on the whole grid
    for (const Grid& g : {Grid::cube(2), Grid::uniform({3, 3})})
        for (int d = 0; d <= g.top_weight(); ++d)
            CHECK(vanishing_basis(g, d, g.all_points(16)).empty());

    // the diagonal pair on the square: one dimension, x1 - x2 up to scale
    const Grid cube2 = Grid::cube(2);
    const int p00[2] = {0, 0};
    const int p11[2] = {1, 1};
    PointSet diag{cube2.index_of(p00), cube2.index_of(p11)};
    std::sort(diag.begin(), diag.end());
    const std::vector<Poly> basis = vanishing_basis(cube2, 1, diag);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].eval(std::vector<long>{0, 0}) == 0);
    CHECK(basis[0].eval(std::vector<long>{1, 1}) == 0);
    CHECK(basis[0].eval(std::vector<long>{1, 0}) != 0);

    // every degree-3 polynomial vanishing on the [0,2]^3 tails kills the center
    const Grid g = Grid::uniform({3, 3, 3});
    const PointSet tails = g.weight_set_points(two_tails(6, 3));
    const std::vector<Poly> big = vanishing_basis(g, 3, tails);
    CHECK(!big.empty());
    for (const Poly& p : big) {
        CHECK(p.eval(std::vector<long>{1, 1, 1}) == 0);
        for (PointIndex q : tails)
            CHECK(p.eval(g.coords_at(q)) == 0);
    }
}

TEST_CASE("closure operator axioms for the weight closure on [0,2]^2")
{
    const Grid g = Grid::uniform({3, 3});
    const int n = 4;
    for (std::uint64_t bits = 0; bits < (1u << 5); ++bits) {
        const WeightSet e = from_bits(n, bits);
        for (int d = 0; d <= n; ++d) {
            const WeightSet closed = z_star_closure(g, d, e);
            CHECK(closed.contains_all(e));
            CHECK(z_star_closure(g, d, closed) == closed);
            if (d < n)
                CHECK(closed.contains_all(z_star_closure(g, d + 1, e)));
            for (int w = 0; w <= n; ++w) {
                if (e.test(w))
                    continue;
                WeightSet bigger = e;
                bigger.set(w);
                CHECK(z_star_closure(g, d, bigger).contains_all(closed));
            }
        }
    }
}

TEST_CASE("prefix intervals at admissible degrees close to everything")
{
    for (const Grid& g : {Grid::cube(3), Grid::uniform({3, 3})}) {
        const int n = g.top_weight();
        for (int d = 0; d <= n; ++d)
            for (int r = d; r <= n; ++r)
                CHECK(z_star_closure(g, d, WeightSet::interval(n, 0, r)).is_full());
    }
}

TEST_CASE("closures of large sets reach both ends")
{
    for (const Grid& g : {Grid::cube(3), Grid::uniform({3, 3})}) {
        const int n = g.top_weight();
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
            const WeightSet e = from_bits(n, bits);
            for (int d = 0; d + 1 <= e.count(); ++d) {
                const WeightSet closed = z_star_closure(g, d, e);
                CHECK(closed.contains_all(WeightSet::interval(n, 0, e.min_element())));
                CHECK(closed.contains_all(WeightSet::interval(n, e.max_element(), n)));
            }
        }
    }
}

TEST_CASE("oracle caps")
{
    OracleLimits tight;
    tight.max_grid_points = 8;
    CHECK_THROWS_AS(z_closure(Grid::uniform({3, 3}), 1, {}, tight), limit_exceeded);
    tight.max_grid_points = 20000;
    tight.max_monomials = 2;
    CHECK_THROWS_AS(footprint_monomials(Grid::uniform({3, 3}), 2, tight), limit_exceeded);
}
