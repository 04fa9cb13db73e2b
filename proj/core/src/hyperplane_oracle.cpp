#include "wdc/hyperplane_oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "wdc/errors.hpp"
#include "wdc/exact_matrix.hpp"

namespace wdc::hyper {

namespace {

constexpr int kInfeasible = std::numeric_limits<int>::max() / 2;

std::size_t effective_cap(const SectionLimits& limits)
{
    return std::min<std::size_t>(limits.max_grid_points, 64);
}

void check_cap(const Grid& g, const SectionLimits& limits)
{
    if (g.point_count() > static_cast<unsigned long>(effective_cap(limits)))
        throw limit_exceeded("hyperplane oracle: grid has " + g.point_count().get_str() +
                             " points, cap is " + std::to_string(effective_cap(limits)));
}

std::uint64_t bit(PointIndex p)
{
    return std::uint64_t{1} << p;
}

std::uint64_t mask_of(const PointSet& s)
{
    std::uint64_t m = 0;
    for (PointIndex p : s)
        m |= bit(p);
    return m;
}

PointSet points_of(std::uint64_t mask)
{
    PointSet out;
    while (mask) {
        out.push_back(static_cast<PointIndex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

std::vector<Int> difference_row(const std::vector<long>& x, const std::vector<long>& base)
{
    std::vector<Int> row(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        row[i] = Int(x[i]) - Int(base[i]);
    return row;
}

// Residuals from RowSpace::reduced are content-normalized with a positive
// leading entry, so parallel residuals serialize identically.
std::string residual_key(const std::vector<Int>& v)
{
    std::string key;
    for (const Int& x : v) {
        key += x.get_str();
        key += ',';
    }
    return key;
}

// Exact minimum cover of `target` by the candidate masks, branch and bound
// with memoized lower bounds.  Candidates are intersected with the target
// and reduced to the maximal ones first.  `cutoff` is an exclusive upper
// bound: covers of that size or larger are not pursued, and the return
// value is only meaningful when it is below the cutoff.  Returns
// kInfeasible when no cover exists at all.
int min_cover(std::uint64_t target, std::vector<std::uint64_t> cands,
              int cutoff = kInfeasible)
{
    if (target == 0)
        return 0;
    for (std::uint64_t& c : cands)
        c &= target;
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    if (!cands.empty() && cands.front() == 0)
        cands.erase(cands.begin());
    // Keep only set-maximal candidates.
    std::vector<std::uint64_t> maximal;
    for (std::uint64_t c : cands) {
        bool dominated = false;
        for (std::uint64_t d : cands)
            if (d != c && (c & ~d) == 0) {
                dominated = true;
                break;
            }
        if (!dominated)
            maximal.push_back(c);
    }
    for (std::uint64_t b = target; b;) {
        const std::uint64_t bit2 = b & (~b + 1);
        b &= b - 1;
        bool covered = false;
        for (std::uint64_t c : maximal)
            if (c & bit2) {
                covered = true;
                break;
            }
        if (!covered)
            return kInfeasible;
    }

    int max_size = 0;
    for (std::uint64_t c : maximal)
        max_size = std::max(max_size, std::popcount(c));

    // Per-point candidate lists; a candidate through p stays usable as long
    // as p is uncovered, so the static lists double as branching counts.
    std::vector<std::vector<std::uint32_t>> by_point(64);
    for (std::uint32_t i = 0; i < maximal.size(); ++i) {
        std::uint64_t c = maximal[i];
        while (c) {
            by_point[static_cast<std::size_t>(std::countr_zero(c))].push_back(i);
            c &= c - 1;
        }
    }

    // Greedy cover for the initial upper bound.
    int best = cutoff;
    {
        std::uint64_t uncovered = target;
        int used = 0;
        while (uncovered) {
            std::uint64_t pick = 0;
            int gain = 0;
            for (std::uint64_t c : maximal) {
                const int g = std::popcount(c & uncovered);
                if (g > gain) {
                    gain = g;
                    pick = c;
                }
            }
            uncovered &= ~pick;
            ++used;
        }
        best = std::min(best, used);
    }

    struct Dfs {
        const std::vector<std::uint64_t>& maximal;
        const std::vector<std::vector<std::uint32_t>>& by_point;
        int max_size;
        int best;
        std::unordered_map<std::uint64_t, int> floor; // proven lower bounds

        void run(std::uint64_t uncovered, int used)
        {
            if (!uncovered) {
                best = std::min(best, used);
                return;
            }
            int need = (std::popcount(uncovered) + max_size - 1) / max_size;
            const auto it = floor.find(uncovered);
            if (it != floor.end())
                need = std::max(need, it->second);
            if (used + need >= best)
                return;

            // Branch on the uncovered point with the fewest candidates.
            std::uint64_t branch_bit = 0;
            std::size_t fewest = std::numeric_limits<std::size_t>::max();
            std::uint64_t scan = uncovered;
            while (scan) {
                const std::uint64_t b = scan & (~scan + 1);
                scan &= scan - 1;
                const std::size_t cnt = by_point[static_cast<std::size_t>(std::countr_zero(b))].size();
                if (cnt < fewest) {
                    fewest = cnt;
                    branch_bit = b;
                    if (cnt <= 1)
                        break;
                }
            }
            std::vector<std::uint64_t> options;
            for (std::uint32_t i : by_point[static_cast<std::size_t>(std::countr_zero(branch_bit))])
                options.push_back(maximal[i]);
            std::sort(options.begin(), options.end(),
                      [uncovered](std::uint64_t a, std::uint64_t b) {
                          return std::popcount(a & uncovered) > std::popcount(b & uncovered);
                      });
            const int entry_best = best;
            const int rem = std::popcount(uncovered);
            for (std::uint64_t c : options) {
                // Options are sorted by gain, so once one child is hopeless
                // by the counting bound the rest are too.
                const int child_rem = rem - std::popcount(c & uncovered);
                if (used + 1 + (child_rem + max_size - 1) / max_size >= best)
                    break;
                run(uncovered & ~c, used + 1);
            }
            // Everything below this node was explored or pruned against the
            // running best, so no completion beats best - used sets.
            const int proven = std::min(entry_best, best) - used;
            int& slot = floor[uncovered];
            slot = std::max(slot, proven);
        }
    };
    Dfs dfs{maximal, by_point, max_size, best, {}};
    dfs.run(target, 0);
    return dfs.best;
}

} // namespace

SectionSet enumerate_sections(const Grid& g, const SectionLimits& limits)
{
    check_cap(g, limits);
    const int n = g.dimension();
    const std::uint64_t total = g.point_count().get_ui();

    std::vector<std::vector<long>> coords(total);
    for (PointIndex p = 0; p < total; ++p)
        coords[p] = g.coords_at(p);

    struct Flat {
        std::uint64_t mask;
        PointIndex base;
        RowSpace dirs;
    };

    std::unordered_set<std::uint64_t> seen;
    std::vector<Flat> level;
    SectionSet out{g, {}};

    for (PointIndex p = 0; p < total; ++p) {
        level.push_back(Flat{bit(p), p, RowSpace(n)});
        seen.insert(bit(p));
        out.sections.push_back(FlatSection{{p}, 0, bit(p)});
    }

    for (int rank = 0; rank < n - 1 && !level.empty(); ++rank) {
        std::vector<Flat> next;
        for (const Flat& f : level) {
            // Group the outside points by the direction of their residual
            // modulo the flat; each group extends f to one distinct flat of
            // the next rank.
            std::map<std::string, std::vector<PointIndex>> classes;
            for (PointIndex q = 0; q < total; ++q) {
                if (f.mask & bit(q))
                    continue;
                const std::vector<Int> residual =
                    f.dirs.reduced(difference_row(coords[q], coords[f.base]));
                const bool in_span =
                    std::all_of(residual.begin(), residual.end(),
                                [](const Int& x) { return x == 0; });
                if (!in_span)
                    classes[residual_key(residual)].push_back(q);
            }
            for (const auto& [key, members] : classes) {
                std::uint64_t mask = f.mask;
                for (PointIndex q : members)
                    mask |= bit(q);
                if (!seen.insert(mask).second)
                    continue;
                Flat ext{mask, f.base, f.dirs};
                ext.dirs.insert(difference_row(coords[members.front()], coords[f.base]));
                if (ext.dirs.rank() != rank + 1)
                    throw std::logic_error("enumerate_sections: rank bookkeeping failed");
                out.sections.push_back(FlatSection{points_of(mask), rank + 1, mask});
                next.push_back(std::move(ext));
            }
        }
        level = std::move(next);
    }

    std::sort(out.sections.begin(), out.sections.end(),
              [](const FlatSection& a, const FlatSection& b) { return a.mask < b.mask; });
    return out;
}

LinearForm realize_form(const SectionSet& ss, const FlatSection& section)
{
    const Grid& g = ss.grid;
    const int n = g.dimension();
    const std::uint64_t total = g.point_count().get_ui();
    if (section.points.empty())
        throw std::invalid_argument("realize_form: empty section");

    const std::vector<long> base = g.coords_at(section.points.front());
    RowSpace dirs(n);
    for (PointIndex p : section.points)
        dirs.insert(difference_row(g.coords_at(p), base));
    if (dirs.rank() != section.dim)
        throw std::invalid_argument("realize_form: section dimension mismatch");

    ExactMatrix dm(dirs.rank(), n);
    for (int r = 0; r < dirs.rank(); ++r)
        for (int c = 0; c < n; ++c)
            dm.at(r, c) = dirs.rows()[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    const std::vector<std::vector<Int>> normals = null_space(dm);
    if (normals.empty())
        throw std::invalid_argument("realize_form: section spans the whole space");

    auto try_normal = [&](const std::vector<Int>& a) -> bool {
        for (PointIndex q = 0; q < total; ++q) {
            Int dot = 0;
            const std::vector<long> qc = g.coords_at(q);
            for (int i = 0; i < n; ++i)
                dot += a[static_cast<std::size_t>(i)] * (Int(qc[static_cast<std::size_t>(i)]) -
                                                         Int(base[static_cast<std::size_t>(i)]));
            const bool inside = (section.mask & bit(q)) != 0;
            if (inside != (dot == 0))
                return false;
        }
        return true;
    };

    // For a hull of full hyperplane dimension the normal is forced; below
    // that, walk integer combinations of the normal basis until one avoids
    // every grid point off the section.
    for (Int t = 0;; ++t) {
        std::vector<Int> a(static_cast<std::size_t>(n), Int(0));
        Int power = 1;
        for (const std::vector<Int>& u : normals) {
            for (int i = 0; i < n; ++i)
                a[static_cast<std::size_t>(i)] += power * u[static_cast<std::size_t>(i)];
            power *= t;
        }
        bool zero = std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
        if (!zero && try_normal(a)) {
            Int b = 0;
            for (int i = 0; i < n; ++i)
                b -= a[static_cast<std::size_t>(i)] * Int(base[static_cast<std::size_t>(i)]);
            return LinearForm{std::move(a), std::move(b)};
        }
        if (normals.size() == 1 && t >= 1)
            throw std::logic_error("realize_form: hyperplane normal failed verification");
    }
}

namespace {

struct OracleContext {
    const SectionSet& ss;
    std::uint64_t all_mask = 0;
    std::vector<std::uint64_t> section_masks;

    explicit OracleContext(const SectionSet& s) : ss(s)
    {
        const std::uint64_t total = ss.grid.point_count().get_ui();
        all_mask = total == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << total) - 1;
        section_masks.reserve(ss.sections.size());
        for (const FlatSection& f : ss.sections)
            section_masks.push_back(f.mask);
    }
};

} // namespace

PointSet h_closure(const SectionSet& ss, int degree, const PointSet& s)
{
    const Grid& g = ss.grid;
    const std::uint64_t total = g.point_count().get_ui();
    OracleContext ctx(ss);
    const std::uint64_t target = mask_of(s);

    PointSet out;
    for (PointIndex a = 0; a < total; ++a) {
        if (target & bit(a)) {
            out.push_back(a);
            continue;
        }
        std::vector<std::uint64_t> cands;
        for (std::uint64_t m : ctx.section_masks)
            if (!(m & bit(a)))
                cands.push_back(m);
        if (min_cover(target, std::move(cands)) > degree)
            out.push_back(a);
    }
    return out;
}

PointSet h_closure(const Grid& g, int degree, const PointSet& s, const SectionLimits& limits)
{
    check_cap(g, limits);
    if (degree < 0 || degree > limits.max_cover_degree)
        throw limit_exceeded("h_closure: degree " + std::to_string(degree) +
                             " beyond the configured search depth " +
                             std::to_string(limits.max_cover_degree));
    return h_closure(enumerate_sections(g, limits), degree, s);
}

int hc_oracle(const SectionSet& ss, const WeightSet& e)
{
    const Grid& g = ss.grid;
    if (e.is_full())
        throw std::invalid_argument("hc_oracle: no nontrivial cover of the full interval");
    OracleContext ctx(ss);
    const std::uint64_t target = mask_of(g.weight_set_points(e));
    const std::uint64_t total = g.point_count().get_ui();

    int best = kInfeasible;
    for (PointIndex a = 0; a < total; ++a) {
        if (target & bit(a))
            continue;
        std::vector<std::uint64_t> cands;
        for (std::uint64_t m : ctx.section_masks)
            if (!(m & bit(a)))
                cands.push_back(m);
        best = std::min(best, min_cover(target, std::move(cands), best));
    }
    if (best >= kInfeasible)
        throw std::logic_error("hc_oracle: no avoiding cover found");
    return best;
}

int phc_oracle(const SectionSet& ss, const WeightSet& e)
{
    const Grid& g = ss.grid;
    if (e.is_full())
        throw std::invalid_argument("phc_oracle: no proper cover of the full interval");
    OracleContext ctx(ss);
    const std::uint64_t target = mask_of(g.weight_set_points(e));

    std::vector<std::uint64_t> off_layers;
    for (int j = 0; j <= g.top_weight(); ++j)
        if (!e.test(j))
            off_layers.push_back(mask_of(g.layer_points(j)));

    // Pareto filter: a section is dominated when another one covers at least
    // as much of the target while spilling onto no more outside points.
    std::vector<std::uint64_t> cands;
    {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> gs; // (gain, spill)
        for (std::uint64_t m : ctx.section_masks)
            if (m & target)
                gs.emplace_back(m & target, m & ~target);
        std::sort(gs.begin(), gs.end());
        gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
        for (const auto& [gain, spill] : gs) {
            bool dominated = false;
            for (const auto& [gain2, spill2] : gs) {
                if (gain2 == gain && spill2 == spill)
                    continue;
                if ((gain & ~gain2) == 0 && (spill2 & ~spill) == 0) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated)
                cands.push_back(gain | spill);
        }
    }

    int max_gain = 1;
    for (std::uint64_t c : cands)
        max_gain = std::max(max_gain, std::popcount(c & target));

    const int upper = static_cast<int>(g.weight_set_points(e).size()); // singleton cover
    // Proper covers are nontrivial covers, so the nontrivial minimum floors
    // the deepening.
    const int lower = target == 0 ? 0 : hc_oracle(ss, e);

    struct ProperDfs {
        const std::vector<std::uint64_t>& cands;
        const std::vector<std::uint64_t>& off_layers;
        std::uint64_t target;
        int max_gain;
        int budget;
        bool found = false;

        void run(std::uint64_t uncovered, std::uint64_t covered_union, int used)
        {
            if (found)
                return;
            if (!uncovered) {
                found = true;
                return;
            }
            const int need = (std::popcount(uncovered) + max_gain - 1) / max_gain;
            if (used + need > budget)
                return;
            const std::uint64_t branch_bit = uncovered & (~uncovered + 1);
            for (std::uint64_t c : cands) {
                if (!(c & branch_bit))
                    continue;
                const std::uint64_t next_union = covered_union | c;
                bool kills_layer = false;
                for (std::uint64_t lm : off_layers)
                    if ((lm & ~next_union) == 0) {
                        kills_layer = true;
                        break;
                    }
                if (kills_layer)
                    continue;
                run(uncovered & ~c, next_union, used + 1);
                if (found)
                    return;
            }
        }
    };

    for (int budget = lower; budget <= upper; ++budget) {
        ProperDfs dfs{cands, off_layers, target, max_gain, budget};
        dfs.run(target, 0, 0);
        if (dfs.found)
            return budget;
    }
    if (target == 0)
        return 0;
    throw std::logic_error("phc_oracle: exhausted budgets without a proper cover");
}

int ehc_oracle(const SectionSet& ss, const WeightSet& e)
{
    const Grid& g = ss.grid;
    if (e.is_full())
        throw std::invalid_argument("ehc_oracle: no exact cover of the full interval");
    OracleContext ctx(ss);
    const std::uint64_t target = mask_of(g.weight_set_points(e));

    std::vector<std::uint64_t> cands;
    for (std::uint64_t m : ctx.section_masks)
        if ((m & ~target) == 0)
            cands.push_back(m);
    const int best = min_cover(target, std::move(cands));
    if (best >= kInfeasible)
        throw std::logic_error("ehc_oracle: no exact cover found"); // singletons make this unreachable
    return best;
}

int hc_oracle(const Grid& g, const WeightSet& e, const SectionLimits& limits)
{
    check_cap(g, limits);
    return hc_oracle(enumerate_sections(g, limits), e);
}

int phc_oracle(const Grid& g, const WeightSet& e, const SectionLimits& limits)
{
    check_cap(g, limits);
    return phc_oracle(enumerate_sections(g, limits), e);
}

int ehc_oracle(const Grid& g, const WeightSet& e, const SectionLimits& limits)
{
    check_cap(g, limits);
    return ehc_oracle(enumerate_sections(g, limits), e);
}

} // namespace wdc::hyper
