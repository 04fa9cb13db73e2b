#include "wdc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "wdc/algebra_oracle.hpp"
#include "wdc/constructions.hpp"
#include "wdc/covers.hpp"
#include "wdc/errors.hpp"
#include "wdc/grid.hpp"
#include "wdc/hyperplane_oracle.hpp"
#include "wdc/parallel.hpp"
#include "wdc/weightset.hpp"

namespace wdc::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Grid> suite_grids()
{
    std::vector<Grid> out;
    for (int n = 1; n <= 6; ++n)
        out.push_back(Grid::cube(n));
    out.push_back(Grid::uniform({3, 3}));
    out.push_back(Grid::uniform({3, 3, 3}));
    out.push_back(Grid::uniform({4, 4}));
    out.push_back(Grid::uniform({2, 3}));
    out.push_back(Grid::uniform({2, 2, 3}));
    out.push_back(Grid::uniform({4, 3}));
    return out;
}

WeightSet set_from_bits(int n_max, std::uint64_t bits)
{
    WeightSet e(n_max);
    for (int w = 0; w <= n_max; ++w)
        if (bits & (std::uint64_t{1} << w))
            e.set(w);
    return e;
}

// Failure sink for exhaustive sweeps: counts checks, keeps the first
// mismatch message.  merge() keeps reports deterministic under parallel
// sweeps by combining per-slot results in index order.
struct Sweep {
    long long checked = 0;
    std::string failure;

    void fail(const std::string& msg)
    {
        if (failure.empty())
            failure = msg;
    }
    void merge(const Sweep& other)
    {
        checked += other.checked;
        if (failure.empty() && !other.failure.empty())
            failure = other.failure;
    }
};

// Sections are reused across criteria; enumerating them once per grid is
// the expensive part of the hyperplane oracle.
struct SectionCache {
    std::map<std::string, hyper::SectionSet> store;

    const hyper::SectionSet& get(const Grid& g)
    {
        const std::string key = g.spec_string();
        auto it = store.find(key);
        if (it == store.end())
            it = store.emplace(key, hyper::enumerate_sections(g)).first;
        return it->second;
    }
};

std::string describe_set(const WeightSet& e)
{
    return "{" + e.to_string() + "}";
}

int min_degree_nontrivial(const Grid& g, const WeightSet& e)
{
    for (int d = 0; d <= g.top_weight(); ++d)
        if (!algebra::z_star_closure(g, d, e).is_full())
            return d;
    return -1;
}

int min_degree_fixpoint(const Grid& g, const WeightSet& e)
{
    for (int d = 0; d <= g.top_weight(); ++d)
        if (algebra::z_star_closure(g, d, e) == e)
            return d;
    return -1;
}

CriterionResult criterion_closure_characterization(const Options& options)
{
    CriterionResult res{1, "Z*-closure equals the interval-fill closure on the small-grid suite",
                        false, "", 0};
    const auto start = Clock::now();
    Sweep total;
    for (const Grid& g : suite_grids()) {
        const int n = g.top_weight();
        const std::uint64_t sets = std::uint64_t{1} << (n + 1);
        std::vector<Sweep> slots(sets);
        parallel_for(sets, options.threads, [&](std::size_t bits) {
            Sweep& sweep = slots[bits];
            const WeightSet e = set_from_bits(n, bits);
            for (int d = 0; d <= n; ++d) {
                const WeightSet lhs = algebra::z_star_closure(g, d, e);
                const WeightSet rhs = fill_closure(d, e);
                ++sweep.checked;
                if (lhs != rhs)
                    sweep.fail("grid " + g.spec_string() + ", E=" + describe_set(e) +
                               ", d=" + std::to_string(d) + ": closure " + lhs.to_string() +
                               " vs fill " + rhs.to_string());
            }
        });
        for (const Sweep& s : slots)
            total.merge(s);
    }
    res.pass = total.failure.empty();
    res.detail = total.failure.empty()
                     ? std::to_string(total.checked) + " (grid,E,d) closure pairs agree"
                     : total.failure;
    res.seconds = seconds_since(start);
    return res;
}

CriterionResult criterion_center_point_counterexample()
{
    CriterionResult res{2, "degree-3 closure of the [0,2]^3 two-tails set gains only the center",
                        false, "", 0};
    const auto start = Clock::now();
    const Grid g = Grid::uniform({3, 3, 3});
    const WeightSet tails = two_tails(6, 3);
    const PointSet base = g.weight_set_points(tails);

    PointSet expected = base;
    const int center_ranks[3] = {1, 1, 1};
    expected.push_back(g.index_of(center_ranks));
    std::sort(expected.begin(), expected.end());

    const PointSet closure = algebra::z_closure(g, 3, base);
    const WeightSet star = algebra::z_star_closure(g, 3, tails);

    if (closure != expected)
        res.detail = "point closure is not the two-tails set plus (1,1,1)";
    else if (star != tails)
        res.detail = "weight closure moved although no full layer was gained";
    else {
        res.pass = true;
        res.detail = "closure = two-tails trace plus (1,1,1); weight closure is a fixpoint";
    }
    res.seconds = seconds_since(start);
    return res;
}

CriterionResult criterion_h_vs_z_plane_counterexample(SectionCache& sections)
{
    CriterionResult res{3, "[0,2]^2 two-tails set: polynomial closure fixes, hyperplane closure fills",
                        false, "", 0};
    const auto start = Clock::now();
    const Grid g = Grid::uniform({3, 3});
    const WeightSet tails = two_tails(4, 2);
    const PointSet base = g.weight_set_points(tails);

    const PointSet zcl = algebra::z_closure(g, 2, base);
    const PointSet hcl = hyper::h_closure(sections.get(g), 2, base);
    const PointSet everything = g.all_points(64);

    if (zcl != base)
        res.detail = "polynomial closure is not a fixpoint";
    else if (hcl != everything)
        res.detail = "hyperplane closure does not fill the grid";
    else {
        res.pass = true;
        res.detail = "degree-2 closures split: fixpoint under polynomials, full grid under lines";
    }
    res.seconds = seconds_since(start);
    return res;
}

CriterionResult criterion_h_closure_matches_z(const Options& options, SectionCache& sections)
{
    CriterionResult res{4, "hyperplane closure equals polynomial closure for symmetric cube sets",
                        false, "", 0};
    const auto start = Clock::now();
    Sweep total;
    const int max_n = options.slow ? 5 : 4;
    for (int n = 1; n <= max_n; ++n) {
        const Grid g = Grid::cube(n);
        const hyper::SectionSet& ss = sections.get(g);
        const std::uint64_t sets = std::uint64_t{1} << (n + 1);
        std::vector<Sweep> slots(sets);
        parallel_for(sets, options.threads, [&](std::size_t bits) {
            Sweep& sweep = slots[bits];
            const WeightSet e = set_from_bits(n, bits);
            const PointSet pts = g.weight_set_points(e);
            for (int d = 0; d <= n; ++d) {
                const PointSet hcl = hyper::h_closure(ss, d, pts);
                const PointSet zcl = algebra::z_closure(g, d, pts);
                ++sweep.checked;
                if (hcl != zcl)
                    sweep.fail("cube n=" + std::to_string(n) + ", E=" + describe_set(e) +
                               ", d=" + std::to_string(d) + ": h-closure differs from Z-closure");
            }
        });
        for (const Sweep& s : slots)
            total.merge(s);
    }
    res.pass = total.failure.empty();
    res.detail = total.failure.empty()
                     ? std::to_string(total.checked) + " (n,E,d) closure pairs agree" +
                           (options.slow ? " (n<=5)" : " (n<=4)")
                     : total.failure;
    res.seconds = seconds_since(start);
    return res;
}

CriterionResult criterion_formulas_vs_oracles(const Options& options, SectionCache& sections)
{
    CriterionResult res{5, "cover formulas match the oracle minima", false, "", 0};
    const auto start = Clock::now();
    Sweep total;
    for (const Grid& g : suite_grids()) {
        const int n = g.top_weight();
        const bool small_cube = g.is_cube() && g.dimension() <= 4;
        const hyper::SectionSet* ss = small_cube ? &sections.get(g) : nullptr;
        const std::uint64_t sets = std::uint64_t{1} << (n + 1);
        std::vector<Sweep> slots(sets);
        parallel_for(sets, options.threads, [&](std::size_t bits) {
            Sweep& sweep = slots[bits];
            const WeightSet e = set_from_bits(n, bits);
            if (e.is_full())
                return;
            const int pc_formula = covers::pc(g, e);
            const int ppc_formula = covers::ppc(g, e);

            ++sweep.checked;
            if (covers::cert_deg(g, e) != pc_formula)
                sweep.fail("certifying degree differs from pc on " + g.spec_string());

            const int d_nontrivial = min_degree_nontrivial(g, e);
            ++sweep.checked;
            if (d_nontrivial != pc_formula)
                sweep.fail("grid " + g.spec_string() + ", E=" + describe_set(e) +
                           ": pc formula " + std::to_string(pc_formula) + " vs oracle " +
                           std::to_string(d_nontrivial));

            const int d_fix = min_degree_fixpoint(g, e);
            ++sweep.checked;
            if (d_fix != ppc_formula)
                sweep.fail("grid " + g.spec_string() + ", E=" + describe_set(e) +
                           ": ppc formula " + std::to_string(ppc_formula) + " vs oracle " +
                           std::to_string(d_fix));

            if (ss != nullptr) {
                ++sweep.checked;
                if (hyper::hc_oracle(*ss, e) != pc_formula)
                    sweep.fail("cube n=" + std::to_string(g.dimension()) + ", E=" +
                               describe_set(e) + ": hyperplane-cover oracle differs from pc");
                ++sweep.checked;
                if (hyper::phc_oracle(*ss, e) != ppc_formula)
                    sweep.fail("cube n=" + std::to_string(g.dimension()) + ", E=" +
                               describe_set(e) + ": proper-cover oracle differs from ppc");
            }
        });
        for (const Sweep& s : slots)
            total.merge(s);
    }
    res.pass = total.failure.empty();
    res.detail = total.failure.empty() ? std::to_string(total.checked) + " formula/oracle values agree"
                                       : total.failure;
    res.seconds = seconds_since(start);
    return res;
}

CriterionResult criterion_full_positive_part(SectionCache& sections)
{
    CriterionResult res{6, "every cover number equals N for the complement of the zero layer",
                        false, "", 0};
    const auto start = Clock::now();
    Sweep total;
    for (const Grid& g : suite_grids()) {
        const int n = g.top_weight();
        const WeightSet positive = WeightSet::interval(n, 1, n);

        ++total.checked;
        if (covers::pc(g, positive) != n || covers::ppc(g, positive) != n ||
            covers::cert_deg(g, positive) != n) {
            total.fail("grid " + g.spec_string() + ": formula value differs from N");
            continue;
        }
        if (g.is_cube()) {
            ++total.checked;
            if (covers::hc(g, positive) != n || covers::phc(g, positive) != n ||
                covers::epc(g, positive) != n) {
                total.fail("cube n=" + std::to_string(n) + ": cube formula differs from N");
                continue;
            }
        }
        ++total.checked;
        if (min_degree_nontrivial(g, positive) != n || min_degree_fixpoint(g, positive) != n) {
            total.fail("grid " + g.spec_string() + ": algebra oracle differs from N");
            continue;
        }
        // The minimality refutations behind hc/phc blow up past ~27 points;
        // the larger cubes are covered by the closure-based routes above.
        if (g.point_count() <= 27) {
            const hyper::SectionSet& ss = sections.get(g);
            ++total.checked;
            if (hyper::hc_oracle(ss, positive) != n) {
                total.fail("grid " + g.spec_string() + ": hyperplane oracle hc differs from N");
                continue;
            }
            ++total.checked;
            if (hyper::phc_oracle(ss, positive) != n) {
                total.fail("grid " + g.spec_string() + ": hyperplane oracle phc differs from N");
                continue;
            }
        }
    }
    res.pass = total.failure.empty();
    res.detail = total.failure.empty()
                     ? "all routes give N on every suite grid (hyperplane oracle within its cap)"
                     : total.failure;
    res.seconds = seconds_since(start);
    return res;
}

CriterionResult criterion_hilbert(const Options& options)
{
    CriterionResult res{7, "Hilbert function rank matches the cube closed form", false, "", 0};
    const auto start = Clock::now();
    Sweep total;
    for (int n = 1; n <= 6; ++n) {
        const Grid g = Grid::cube(n);
        const std::uint64_t sets = std::uint64_t{1} << (n + 1);
        std::vector<Sweep> slots(sets);
        parallel_for(sets, options.threads, [&](std::size_t bits) {
            Sweep& sweep = slots[bits];
            const WeightSet e = set_from_bits(n, bits);
            const PointSet pts = g.weight_set_points(e);
            for (int d = 0; d <= n; ++d) {
                const algebra::HilbertProfile profile = algebra::hilbert_fn(g, d, pts);
                const auto closed = algebra::hilbert_cube_closed_form(n, d, e);
                ++sweep.checked;
                if (profile.value != closed.value)
                    sweep.fail("cube n=" + std::to_string(n) + ", E=" + describe_set(e) +
                               ", d=" + std::to_string(d) + ": rank " + profile.value.get_str() +
                               " vs closed form " + closed.value.get_str());
                if (!profile.cube_closed_form || profile.cube_closed_form->value != closed.value)
                    sweep.fail("cube n=" + std::to_string(n) +
                               ": hilbert_fn did not attach the closed form");
            }
        });
        for (const Sweep& s : slots)
            total.merge(s);
    }

    // Hilbert function is blind to the Z-closure: random sets.
    std::mt19937_64 rng(0x5eed0001);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Grid g = Grid::cube(n);
        const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
        PointSet a;
        const std::uint64_t totalpts = g.point_count().get_ui();
        for (PointIndex p = 0; p < totalpts; ++p)
            if (rng() & 1)
                a.push_back(p);
        const PointSet closure = algebra::z_closure(g, d, a);
        ++total.checked;
        if (algebra::hilbert_fn(g, d, a).value != algebra::hilbert_fn(g, d, closure).value) {
            total.fail("random cube set changed Hilbert value under closure (n=" +
                       std::to_string(n) + ", d=" + std::to_string(d) + ")");
            break;
        }
    }

    res.pass = total.failure.empty();
    res.detail = total.failure.empty() ? std::to_string(total.checked) + " Hilbert values agree"
                                       : total.failure;
    res.seconds = seconds_since(start);
    return res;
}

CriterionResult criterion_residue_classes()
{
    CriterionResult res{8, "residue classes fill completely under the interval-fill closure",
                        false, "", 0};
    const auto start = Clock::now();
    Sweep total;
    for (int n = 2; n <= 12; n += 2) {
        for (int parity = 0; parity <= 1; ++parity) {
            WeightSet e(n);
            for (int j = parity; j <= n; j += 2)
                e.set(j);
            ++total.checked;
            if (!fill_closure(n / 2 - 1, e).is_full())
                total.fail("parity class " + std::to_string(parity) + " at n=" +
                           std::to_string(n) + " did not fill");
        }
    }
    for (int n = 1; n <= 14; ++n) {
        for (int m = 1; m <= n; ++m) {
            const int d = n / m - 1;
            for (int i = 0; i < m; ++i) {
                WeightSet e(n);
                for (int j = i; j <= n; j += m)
                    e.set(j);
                ++total.checked;
                if (!fill_closure(d, e).is_full())
                    total.fail("residue class " + std::to_string(i) + " mod " +
                               std::to_string(m) + " at N=" + std::to_string(n) +
                               " did not fill at degree " + std::to_string(d));
            }
        }
    }
    res.pass = total.failure.empty();
    res.detail = total.failure.empty() ? std::to_string(total.checked) + " residue classes filled"
                                       : total.failure;
    res.seconds = seconds_since(start);
    return res;
}

CriterionResult criterion_exact_covers(const Options& options, SectionCache& sections)
{
    CriterionResult res{9, "exact-cover values match oracles and constructions", false, "", 0};
    const auto start = Clock::now();
    Sweep total;
    std::string observations;

    // Exact polynomial covers: oracle fixpoint degree equals the cube formula.
    for (int n = 1; n <= 5; ++n) {
        const Grid g = Grid::cube(n);
        const std::uint64_t sets = std::uint64_t{1} << (n + 1);
        std::vector<Sweep> slots(sets);
        parallel_for(sets, options.threads, [&](std::size_t bits) {
            Sweep& sweep = slots[bits];
            const WeightSet e = set_from_bits(n, bits);
            if (e.is_full())
                return;
            ++sweep.checked;
            if (algebra::epc_oracle(g, e) != covers::epc(g, e))
                sweep.fail("cube n=" + std::to_string(n) + ", E=" + describe_set(e) +
                           ": exact-cover degree oracle differs from the formula");
        });
        for (const Sweep& s : slots)
            total.merge(s);
    }

    // Exact hyperplane covers against the proved cases and bounds.
    std::vector<Grid> ehc_grids;
    for (int n = 1; n <= 4; ++n)
        ehc_grids.push_back(Grid::cube(n));
    ehc_grids.push_back(Grid::uniform({3, 3}));
    for (const Grid& g : ehc_grids) {
        const int n = g.top_weight();
        const hyper::SectionSet& ss = sections.get(g);
        for (std::uint64_t bits = 0; bits + 1 < (std::uint64_t{1} << (n + 1)); ++bits) {
            const WeightSet e = set_from_bits(n, bits);
            const covers::EhcBounds bounds = covers::ehc_bounds(g, e);
            const int oracle = hyper::ehc_oracle(ss, e);
            ++total.checked;
            if (oracle < bounds.lower || oracle > bounds.upper) {
                total.fail("grid " + g.spec_string() + ", E=" + describe_set(e) +
                           ": oracle " + std::to_string(oracle) + " outside [" +
                           std::to_string(bounds.lower) + "," + std::to_string(bounds.upper) + "]");
                continue;
            }
            if (bounds.exact) {
                ++total.checked;
                if (oracle != *bounds.exact)
                    total.fail("grid " + g.spec_string() + ", E=" + describe_set(e) +
                               ": oracle " + std::to_string(oracle) + " differs from exact " +
                               std::to_string(*bounds.exact));
            } else if (!g.is_cube() && e.contains_all(two_tails_clamped(n, 1)) &&
                       !e.contains_all(two_tails_clamped(n, 2)) && observations.empty()) {
                observations = "; [0,2]^2 tails-without-T2 classes sit at the upper bound " +
                               std::to_string(oracle) + "=" + std::to_string(e.count()) +
                               " (no corner-pair hyperplane exists there)";
            }
        }
    }

    // The explicit two-hyperplane family for the double tails, n <= 8.
    for (int n = 4; n <= 8; ++n) {
        ++total.checked;
        if (construct::ehc_t2_family(n).forms.size() != 2) {
            total.fail("two-tails family at n=" + std::to_string(n) + " has the wrong size");
        }
    }

    res.pass = total.failure.empty();
    res.detail = total.failure.empty()
                     ? std::to_string(total.checked) + " exact-cover checks passed" + observations
                     : total.failure;
    res.seconds = seconds_since(start);
    return res;
}

CriterionResult criterion_nonuniform_digression()
{
    CriterionResult res{10, "nonuniform grid: the weight-2 layer closes to everything at degree 1",
                        false, "", 0};
    const auto start = Clock::now();
    const Grid h = Grid::with_levels({{0, 1, 3}, {0, 1, 3}});
    const Grid g = Grid::uniform({3, 3});
    const WeightSet middle = WeightSet::of(4, {2});

    const WeightSet closed_h = algebra::z_star_closure(h, 1, middle);
    const WeightSet closed_g = algebra::z_star_closure(g, 1, middle);

    if (!closed_h.is_full())
        res.detail = "levels {0,1,3}^2: closure is " + closed_h.to_string() + ", expected 0-4";
    else if (closed_g != middle)
        res.detail = "uniform [0,2]^2: closure is " + closed_g.to_string() + ", expected {2}";
    else {
        res.pass = true;
        res.detail = "levels {0,1,3}^2 close to 0-4 while [0,2]^2 stays at {2}";
    }
    res.seconds = seconds_since(start);
    return res;
}

CriterionResult criterion_performance(const Options& options)
{
    CriterionResult res{11, "interval-fill closure is near-linear time and matches the naive fixpoint",
                        false, "", 0};
    const auto start = Clock::now();
    if (!options.perf) {
        res.pass = true;
        res.detail = "skipped by request";
        return res;
    }

    std::mt19937_64 rng(0x5eed0002);
    Sweep total;
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10000);
        const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
        WeightSet e(n);
        for (int w = 0; w <= n; ++w)
            if (rng() & 1)
                e.set(w);
        ++total.checked;
        if (fill_closure(d, e) != fill_closure_naive(d, e)) {
            total.fail("recursion differs from the naive fixpoint at N=" + std::to_string(n) +
                       ", d=" + std::to_string(d));
            break;
        }
    }

    const auto random_set = [&rng](int n) {
        WeightSet e(n);
        for (int w = 0; w <= n; ++w)
            if (rng() & 1)
                e.set(w);
        return e;
    };

    // Per-instance step counts swing with the draw, so the scaling check
    // averages many random (E, d) instances per size.
    const auto time_closures = [&](int n, int draws, int reps) {
        double total = 0;
        for (int i = 0; i < draws; ++i) {
            const WeightSet e = random_set(n);
            const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
            const auto t0 = Clock::now();
            for (int r = 0; r < reps; ++r) {
                const WeightSet c = fill_closure(d, e);
                if (c.n_max() != e.n_max())
                    throw std::logic_error("fill_closure: universe changed");
            }
            total += std::chrono::duration<double>(Clock::now() - t0).count() /
                     static_cast<double>(reps);
        }
        return total / static_cast<double>(draws);
    };

    const double t_big_once = time_closures(1000000, 1, 1);
    const double t_mid = time_closures(100000, 16, 8);
    const double t_big = time_closures(1000000, 16, 2);
    const double ratio = t_big / t_mid;

    if (!total.failure.empty()) {
        res.detail = total.failure;
    } else if (t_big_once >= 1.0) {
        res.detail = "closure at N=10^6 took " + std::to_string(t_big_once) + " s (>= 1 s)";
    } else if (ratio >= 20.0) {
        res.detail = "scaling ratio t(10^6)/t(10^5) = " + std::to_string(ratio) + " (>= 20)";
    } else {
        res.pass = true;
        std::ostringstream out;
        out.precision(3);
        out << total.checked << " random fixpoints agree; N=10^6 closure in " << t_big * 1e3
            << " ms; scaling ratio " << ratio;
        res.detail = out.str();
    }
    res.seconds = seconds_since(start);
    return res;
}

CriterionResult criterion_conjecture_sweep(SectionCache& sections)
{
    CriterionResult res{12, "exact hyperplane cover conjecture sweep (report, non-gating)",
                        false, "", 0};
    const auto start = Clock::now();
    std::ostringstream report;
    long cases = 0;
    long agreements = 0;
    std::string counterexample;
    for (int n = 2; n <= 5; ++n) {
        const WeightSet tails = two_tails_clamped(n, 2);
        if (tails.is_full())
            continue; // no proper superset to examine
        const Grid g = Grid::cube(n);
        const hyper::SectionSet& ss = sections.get(g);
        // Every proper E containing the double tails.
        const std::vector<int> free_weights = tails.complement().to_vector();
        const std::uint64_t combos = std::uint64_t{1} << free_weights.size();
        for (std::uint64_t bits = 0; bits < combos; ++bits) {
            WeightSet e = tails;
            for (std::size_t i = 0; i < free_weights.size(); ++i)
                if (bits & (std::uint64_t{1} << i))
                    e.set(free_weights[static_cast<std::size_t>(i)]);
            if (e.is_full())
                continue;
            const int oracle = hyper::ehc_oracle(ss, e);
            ++cases;
            if (oracle == e.count() - 2)
                ++agreements;
            else if (counterexample.empty())
                counterexample = "n=" + std::to_string(n) + ", E=" + describe_set(e) +
                                 ": oracle " + std::to_string(oracle) + " != |E|-2 = " +
                                 std::to_string(e.count() - 2);
        }
    }
    report << cases << " sets containing the double tails examined (cubes n<=5): ";
    if (counterexample.empty())
        report << "all match |E|-2";
    else
        report << agreements << " match, counterexample " << counterexample;
    res.pass = true; // the report itself is the deliverable
    res.detail = report.str();
    res.seconds = seconds_since(start);
    return res;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const Options& options)
{
    SectionCache sections;
    std::vector<CriterionResult> out;
    out.push_back(criterion_closure_characterization(options));
    out.push_back(criterion_center_point_counterexample());
    out.push_back(criterion_h_vs_z_plane_counterexample(sections));
    out.push_back(criterion_h_closure_matches_z(options, sections));
    out.push_back(criterion_formulas_vs_oracles(options, sections));
    out.push_back(criterion_full_positive_part(sections));
    out.push_back(criterion_hilbert(options));
    out.push_back(criterion_residue_classes());
    out.push_back(criterion_exact_covers(options, sections));
    out.push_back(criterion_nonuniform_digression());
    out.push_back(criterion_performance(options));
    out.push_back(criterion_conjecture_sweep(sections));
    return out;
}

bool all_passed(const std::vector<CriterionResult>& results)
{
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.pass; });
}

} // namespace wdc::verify
