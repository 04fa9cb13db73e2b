#include <doctest.h>

#include <stdexcept>

#include <random>

#include "wdc/weightset.hpp"

using namespace wdc;

namespace {

WeightSet from_bits(int n, std::uint64_t bits)
{
    WeightSet e(n);
    for (int w = 0; w <= n; ++w)
        if (bits & (std::uint64_t{1} << w))
            e.set(w);
    return e;
}

// Straight-from-the-definition admitting scan, used as the oracle for the
// library's prefix-count implementation.
int least_admitting_index(int d, const WeightSet& e)
{
    const int n = e.n_max();
    for (int i = 0; i <= d && i <= n; ++i) {
        const WeightSet tails = two_tails(n, i);
        const WeightSet uni = e | tails;
        const WeightSet rest = e.minus(tails);
        if (!uni.is_full() && rest.count() <= d - i)
            return i;
    }
    return -1;
}

} // namespace

TEST_CASE("set basics, text form")
{
    WeightSet e = WeightSet::of(6, {1, 3, 5});
    CHECK(e.count() == 3);
    CHECK(e.test(3));
    CHECK_FALSE(e.test(2));
    CHECK(e.to_string() == "1,3,5");
    CHECK(WeightSet::parse(6, "1,3,5") == e);
    CHECK(WeightSet::parse(6, "0-1,3,5-6").to_string() == "0-1,3,5-6");
    CHECK(WeightSet::parse(6, "-").is_empty());
    CHECK(WeightSet::parse(6, "").is_empty());
    CHECK(WeightSet::full(6).to_string() == "0-6");
    CHECK_THROWS_AS(WeightSet::parse(6, "7"), std::out_of_range);
    CHECK_THROWS_AS(WeightSet::parse(6, "3-1"), std::invalid_argument);
    CHECK_THROWS_AS(WeightSet::parse(6, "a"), std::invalid_argument);

    CHECK(e.select(0) == 1);
    CHECK(e.select(2) == 5);
    CHECK(e.select(3) == -1);
    CHECK(e.min_element() == 1);
    CHECK(e.max_element() == 5);
    CHECK(e.count_in_range(2, 4) == 1);
    CHECK(e.count_in_range(4, 2) == 0);
}

TEST_CASE("text form round-trips exhaustively at N=9")
{
    for (std::uint64_t bits = 0; bits < (1u << 10); ++bits) {
        const WeightSet e = from_bits(9, bits);
        CHECK(WeightSet::parse(9, e.to_string()) == e);
    }
}

TEST_CASE("word boundaries at N=130")
{
    WeightSet e(130);
    e.set_range(60, 70);
    e.set(129);
    CHECK(e.count() == 12);
    CHECK(e.count_in_range(0, 63) == 4);
    CHECK(e.select(11) == 129);
    CHECK(e.to_string() == "60-70,129");
    CHECK(WeightSet::parse(130, "60-70,129") == e);
}

TEST_CASE("two-tails sets")
{
    CHECK(two_tails(6, 3) == WeightSet::of(6, {0, 1, 2, 4, 5, 6}));
    CHECK(two_tails(6, 0).is_empty());
    CHECK(two_tails(4, 2) == WeightSet::of(4, {0, 1, 3, 4}));
    CHECK(two_tails(4, 4).is_full()); // overlapping tails
    CHECK_THROWS_AS(two_tails(4, 5), std::out_of_range);
    CHECK(two_tails_clamped(4, -3).is_empty());
    CHECK(two_tails_clamped(4, 9).is_full());
}

TEST_CASE("fill step")
{
    CHECK(fill_step(2, WeightSet::of(6, {1, 3, 5})) == WeightSet::of(6, {0, 1, 3, 5, 6}));
    // at most d elements: fixed
    CHECK(fill_step(3, WeightSet::of(6, {1, 3, 5})) == WeightSet::of(6, {1, 3, 5}));
    CHECK(fill_step(2, WeightSet::of(6, {0, 1, 3, 5, 6})).is_full());
    CHECK(fill_step(0, WeightSet::empty(6)).is_empty());
    CHECK_THROWS_AS(fill_step(7, WeightSet::empty(6)), std::out_of_range);
}

TEST_CASE("fill closure examples")
{
    CHECK(fill_closure(2, WeightSet::of(6, {1, 3, 5})).is_full());
    // degree equal to the interval length fixes everything
    for (std::uint64_t bits = 0; bits < (1u << 8); ++bits) {
        const WeightSet e = from_bits(7, bits);
        CHECK(fill_closure(7, e) == e);
    }
    // degree 0 fills any nonempty set
    CHECK(fill_closure(0, WeightSet::of(9, {4})).is_full());
    CHECK(fill_closure(0, WeightSet::empty(9)).is_empty());
    // even-weight class at degree n/2 - 1 fills
    WeightSet evens(12);
    for (int j = 0; j <= 12; j += 2)
        evens.set(j);
    CHECK(fill_closure(5, evens).is_full());
}

TEST_CASE("stabilization index")
{
    CHECK(fill_stabilization_index(2, WeightSet::of(6, {1, 3, 5})) == 2);
    CHECK(fill_stabilization_index(3, WeightSet::of(6, {1, 3, 5})) == 0);

    // n = 12 parity class at degree n/2 - 1: value pinned by the naive
    // fixpoint iteration itself.
    WeightSet evens(12);
    for (int j = 0; j <= 12; j += 2)
        evens.set(j);
    int steps = 0;
    WeightSet cur = evens;
    for (;;) {
        WeightSet next = fill_step(5, cur);
        if (next == cur)
            break;
        cur = next;
        ++steps;
    }
    CHECK(fill_stabilization_index(5, evens) == steps);
    CHECK(cur.is_full());

    // bounded by ceil((N+1)/2)
    for (std::uint64_t bits = 0; bits < (1u << 11); ++bits) {
        const WeightSet e = from_bits(10, bits);
        for (int d = 0; d <= 10; ++d)
            CHECK(fill_stabilization_index(d, e) <= 6);
    }
}

TEST_CASE("admitting certificates")
{
    // d = 3: already (3,0)-admitting since |E| <= 3 and E is proper
    const WeightSet e = WeightSet::of(6, {1, 3, 5});
    const AdmittingCertificate c3 = admitting_certificate(3, e);
    CHECK(c3.witnessed);
    CHECK(c3.i == 0);
    // ... and (3,2) is a witness too, per the definition
    CHECK(e.minus(two_tails(6, 2)).count() <= 3 - 2);
    CHECK_FALSE((e | two_tails(6, 2)).is_full());

    const AdmittingCertificate c2 = admitting_certificate(2, e);
    CHECK_FALSE(c2.witnessed);
    CHECK(c2.i == -1);

    // two-tails sets admit at their own index
    for (int n = 1; n <= 9; ++n)
        for (int i = 0; i <= n / 2; ++i)
            for (int d = i; d <= n; ++d) {
                const WeightSet tails = two_tails(n, i);
                if (tails.is_full())
                    continue;
                CHECK(admitting_certificate(d, tails).witnessed);
            }
}

TEST_CASE("admitting scan matches the definition exhaustively")
{
    for (int n = 1; n <= 10; ++n)
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
            const WeightSet e = from_bits(n, bits);
            for (int d = 0; d <= n; ++d) {
                const AdmittingCertificate c = admitting_certificate(d, e);
                const int expect = least_admitting_index(d, e);
                CHECK(c.witnessed == (expect >= 0));
                CHECK(c.i == expect);
            }
        }
}

TEST_CASE("closure operator axioms, exhaustive N <= 10")
{
    for (int n = 1; n <= 10; ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
            const WeightSet e = from_bits(n, bits);
            for (int d = 0; d <= n; ++d) {
                const WeightSet closed = fill_closure(d, e);
                CHECK(closed.contains_all(e));                     // extensive
                CHECK(fill_closure(d, closed) == closed);          // idempotent
                if (d < n)                                         // antitone in d
                    CHECK(fill_closure(d, e).contains_all(fill_closure(d + 1, e)));
                for (int w = 0; w <= n; ++w) {                     // monotone
                    if (e.test(w))
                        continue;
                    WeightSet bigger = e;
                    bigger.set(w);
                    CHECK(fill_closure(d, bigger).contains_all(closed));
                }
            }
        }
    }
}

TEST_CASE("recursion equals the naive fixpoint, exhaustive N <= 14")
{
    for (int n = 0; n <= 14; ++n)
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
            const WeightSet e = from_bits(n, bits);
            for (int d = 0; d <= n; ++d)
                CHECK(fill_closure(d, e) == fill_closure_naive(d, e));
        }
}

TEST_CASE("recursion equals the naive fixpoint on random large instances")
{
    std::mt19937_64 rng(0x5eedbeef);
    for (int trial = 0; trial < 10000; ++trial) {
        // log-uniform sizes up to 10^6
        const double scale = std::uniform_real_distribution<double>(0.0, 6.0)(rng);
        const int n = std::max(1, static_cast<int>(std::pow(10.0, scale)));
        const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
        WeightSet e(n);
        for (int w = 0; w <= n; ++w)
            if (rng() & 1)
                e.set(w);
        REQUIRE(fill_closure(d, e) == fill_closure_naive(d, e));
    }
}

TEST_CASE("fixpoint shape characterizations, exhaustive N <= 12")
{
    for (int n = 1; n <= 12; ++n)
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
            const WeightSet e = from_bits(n, bits);
            for (int d = 0; d <= n; ++d) {
                const WeightSet closed = fill_closure(d, e);
                // stops short of the full interval exactly when admitting
                CHECK((!closed.is_full()) == admitting_certificate(d, e).witnessed);
                // fixpoint exactly when the tails T_{N,|E|-d} sit inside E
                const bool fix = closed == e;
                CHECK(fix == e.contains_all(two_tails_clamped(n, e.count() - d)));
            }
        }
}

TEST_CASE("two-tails closure shape, all i and d, N <= 14")
{
    for (int n = 1; n <= 14; ++n)
        for (int i = 0; i <= n; ++i)
            for (int d = 0; d <= n; ++d) {
                const WeightSet tails = two_tails(n, i);
                const WeightSet closed = fill_closure(d, tails);
                if (i <= d)
                    CHECK(closed == tails);
                else
                    CHECK(closed.is_full());
            }
}

TEST_CASE("residue classes fill at degree floor(N/m)-1, N <= 14")
{
    for (int n = 1; n <= 14; ++n)
        for (int m = 1; m <= n; ++m)
            for (int i = 0; i < m; ++i) {
                WeightSet e(n);
                for (int j = i; j <= n; j += m)
                    e.set(j);
                CHECK(fill_closure(n / m - 1, e).is_full());
            }
}

TEST_CASE("shifted operators agree with manual translation")
{
    for (int a = 0; a <= 3; ++a)
        for (int b = a; b <= 7; ++b)
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (b - a + 1)); ++bits)
                for (int d = 0; d <= b - a; ++d) {
                    WeightSet e(10);
                    WeightSet inner(b - a);
                    for (int w = 0; w <= b - a; ++w)
                        if (bits & (std::uint64_t{1} << w)) {
                            e.set(w + a);
                            inner.set(w);
                        }
                    const WeightSet shifted = fill_closure_within(a, b, d, e);
                    const WeightSet plain = fill_closure(d, inner);
                    WeightSet expect(10);
                    for (int w : plain.to_vector())
                        expect.set(w + a);
                    CHECK(shifted == expect);
                    CHECK(fill_step_within(a, b, d, e).contains_all(e));
                }
    CHECK_THROWS_AS(fill_closure_within(2, 5, 1, WeightSet::of(10, {1})),
                    std::invalid_argument);
}

TEST_CASE("empty set conventions")
{
    for (int d = 0; d <= 5; ++d) {
        CHECK(fill_step(d, WeightSet::empty(5)).is_empty());
        CHECK(fill_closure(d, WeightSet::empty(5)).is_empty());
        CHECK(fill_stabilization_index(d, WeightSet::empty(5)) == 0);
    }
}
