#include <doctest.h>

#include <stdexcept>

#include "wdc/constructions.hpp"
#include "wdc/covers.hpp"
#include "wdc/errors.hpp"

using namespace wdc;
using namespace wdc::construct;

namespace {

WeightSet from_bits(int n, std::uint64_t bits)
{
    WeightSet e(n);
    for (int w = 0; w <= n; ++w)
        if (bits & (std::uint64_t{1} << w))
            e.set(w);
    return e;
}

// Independent proper-cover check: vanishes on the chosen layers, nonzero
// somewhere on each remaining layer.
bool is_proper_cover(const Grid& g, const WeightSet& e, const Poly& p)
{
    std::vector<bool> layer_nonzero(static_cast<std::size_t>(g.top_weight()) + 1, false);
    for (PointIndex q = 0; q < g.point_count().get_ui(); ++q) {
        const bool zero = p.eval(g.coords_at(q)) == 0;
        const int w = g.weight_at(q);
        if (e.test(w) && !zero)
            return false;
        if (!zero)
            layer_nonzero[static_cast<std::size_t>(w)] = true;
    }
    for (int w = 0; w <= g.top_weight(); ++w)
        if (!e.test(w) && !layer_nonzero[static_cast<std::size_t>(w)])
            return false;
    return true;
}

} // namespace

TEST_CASE("level products")
{
    const Grid g = Grid::uniform({3, 3});
    const Poly one = level_product(g, WeightSet::empty(4));
    CHECK(one.degree() == 0);
    CHECK(one.eval(std::vector<long>{1, 2}) == 1);

    const Poly middle = level_product(g, WeightSet::of(4, {2}));
    CHECK(middle.degree() == 1);
    for (PointIndex q = 0; q < 9; ++q)
        CHECK((middle.eval(g.coords_at(q)) == 0) == (g.weight_at(q) == 2));

    const Poly all_positive = level_product(g, WeightSet::interval(4, 1, 4));
    CHECK(all_positive.degree() == 4);
    CHECK(all_positive.eval(std::vector<long>{0, 0}) != 0);

    CHECK_THROWS_AS(level_product(Grid::with_levels({{0, 1, 3}, {0, 1, 3}}), WeightSet(4)),
                    unsupported_domain);
}

TEST_CASE("pairing polynomials")
{
    const Poly p42 = pairing_poly(4, 2);
    CHECK(p42.degree() == 2);
    CHECK(p42.eval(std::vector<long>{1, 0, 1, 0}) == 1);
    CHECK(p42.eval(std::vector<long>{1, 1, 0, 0}) == 0);

    CHECK(pairing_poly(5, 0).degree() == 0);

    const Poly p63 = pairing_poly(6, 3);
    CHECK(p63.degree() == 3);
    const Grid cube6 = Grid::cube(6);
    const PointSet tails = cube6.weight_set_points(two_tails(6, 3));
    CHECK(tails.size() == 44);
    for (PointIndex q : tails)
        CHECK(p63.eval(cube6.coords_at(q)) == 0);

    CHECK_THROWS_AS(pairing_poly(3, 2), std::invalid_argument);
}

TEST_CASE("proper cover witnesses on frozen instances")
{
    // cube two-tails: degree i, same role as the pairing polynomial
    for (int i = 0; i <= 2; ++i) {
        const Grid g = Grid::cube(4);
        const WeightSet tails = two_tails(4, i);
        if (tails.is_full())
            continue;
        const Poly w = ppc_witness(g, tails);
        CHECK(w.degree() == i);
        CHECK(is_proper_cover(g, tails, w));
    }

    // [0,2]^2 double tails: degree 2, the role of X1^2 - X1X2 + X2^2 - X1 - X2
    const Grid g33 = Grid::uniform({3, 3});
    const Poly w33 = ppc_witness(g33, two_tails(4, 2));
    CHECK(w33.degree() == 2);
    CHECK(is_proper_cover(g33, two_tails(4, 2), w33));

    // empty set: a constant
    const Poly c = ppc_witness(g33, WeightSet::empty(4));
    CHECK(c.degree() == 0);
}

TEST_CASE("witness degree equals ppc exhaustively on small grids")
{
    for (const Grid& g : {Grid::uniform({3, 3}), Grid::cube(3), Grid::uniform({2, 3})}) {
        const int n = g.top_weight();
        for (std::uint64_t bits = 0; bits + 1 < (std::uint64_t{1} << (n + 1)); ++bits) {
            const WeightSet e = from_bits(n, bits);
            const Poly w = ppc_witness(g, e);
            CHECK(w.degree() == covers::ppc(g, e));
            CHECK(is_proper_cover(g, e, w));
        }
    }
}

TEST_CASE("two-hyperplane family for the double tails")
{
    for (int n = 4; n <= 6; ++n) {
        const HyperplaneFamily family = ehc_t2_family(n);
        REQUIRE(family.forms.size() == 2);
        const Grid g = Grid::cube(n);
        const WeightSet tails = two_tails(n, 2);
        for (PointIndex q = 0; q < g.point_count().get_ui(); ++q) {
            const std::vector<long> c = g.coords_at(q);
            const bool zero =
                family.forms[0].eval(c) == 0 || family.forms[1].eval(c) == 0;
            CHECK(zero == tails.test(g.weight_at(q)));
        }
    }
    CHECK_THROWS_AS(ehc_t2_family(3), std::invalid_argument);
}

TEST_CASE("corner-pair forms")
{
    CHECK(extreme_pair_form_exists(Grid::cube(2)));
    CHECK_FALSE(extreme_pair_form_exists(Grid::uniform({3, 3})));
    CHECK_FALSE(extreme_pair_form_exists(Grid::uniform({5})));
    CHECK(extreme_pair_form_exists(Grid::uniform({2, 3})));

    const LinearForm diag = ehc_t1_form(Grid::cube(2));
    CHECK(diag.eval(std::vector<long>{0, 0}) == 0);
    CHECK(diag.eval(std::vector<long>{1, 1}) == 0);
    CHECK(diag.eval(std::vector<long>{1, 0}) != 0);
    CHECK(diag.eval(std::vector<long>{0, 1}) != 0);

    const Grid mixed = Grid::uniform({2, 3});
    const LinearForm form = ehc_t1_form(mixed);
    for (PointIndex q = 0; q < mixed.point_count().get_ui(); ++q) {
        const std::vector<long> c = mixed.coords_at(q);
        const bool corner = (c == std::vector<long>{0, 0}) || (c == std::vector<long>{1, 2});
        CHECK((form.eval(c) == 0) == corner);
    }

    CHECK_THROWS_AS(ehc_t1_form(Grid::uniform({3, 3})), unsupported_domain);
    CHECK_THROWS_AS(ehc_t1_form(Grid::uniform({4})), unsupported_domain);
    CHECK_FALSE(try_ehc_t1_form(Grid::uniform({3, 3})).has_value());

    // three axes with coprime side lengths
    const Grid g = Grid::uniform({2, 2, 3});
    REQUIRE(extreme_pair_form_exists(g));
    const LinearForm f3 = ehc_t1_form(g);
    int zeros = 0;
    for (PointIndex q = 0; q < g.point_count().get_ui(); ++q)
        if (f3.eval(g.coords_at(q)) == 0)
            ++zeros;
    CHECK(zeros == 2);
}
