#include "wdc/covers.hpp"

#include <numeric>
#include <stdexcept>

#include "wdc/constructions.hpp"
#include "wdc/errors.hpp"

namespace wdc::covers {

namespace {

void require_su2(const Grid& g)
{
    if (!g.is_uniform())
        throw unsupported_domain("cover formulas need a uniform grid");
    if (!g.is_strictly_unimodal())
        throw unsupported_domain("cover formulas need a strictly unimodal grid");
}

void require_proper(const Grid& g, const WeightSet& e)
{
    if (e.n_max() != g.top_weight())
        throw std::invalid_argument("cover formulas: weight set universe does not match the grid");
    if (e.is_full())
        throw std::invalid_argument("cover formulas: the full interval has no nontrivial cover");
}

void require_cube(const Grid& g)
{
    if (!g.is_cube())
        throw unsupported_domain("no hyperplane-cover formula is known beyond the Boolean cube");
}

} // namespace

int pc(const Grid& g, const WeightSet& e)
{
    require_su2(g);
    require_proper(g, e);
    const int n = g.top_weight();
    for (int d = 0; d <= n; ++d)
        if (admitting_certificate(d, e).witnessed)
            return d;
    // d = N always admits a proper set at index 0.
    throw std::logic_error("pc: no admitting degree found");
}

int ppc(const Grid& g, const WeightSet& e)
{
    require_su2(g);
    require_proper(g, e);
    const int n = g.top_weight();
    for (int i = n / 2; i >= 0; --i)
        if (e.contains_all(two_tails(n, i)))
            return e.count() - i;
    throw std::logic_error("ppc: unreachable, T_{N,0} is empty");
}

int cert_deg(const Grid& g, const WeightSet& e)
{
    return pc(g, e);
}

int hc(const Grid& g, const WeightSet& e)
{
    require_cube(g);
    return pc(g, e);
}

int phc(const Grid& g, const WeightSet& e)
{
    require_cube(g);
    return ppc(g, e);
}

int epc(const Grid& g, const WeightSet& e)
{
    require_cube(g);
    return ppc(g, e);
}

EhcBounds ehc_bounds(const Grid& g, const WeightSet& e)
{
    require_su2(g);
    require_proper(g, e);
    const int n = g.top_weight();
    const int size = e.count();

    EhcBounds out;
    if (!e.contains_all(two_tails_clamped(n, 1))) {
        // Exact covers are proper covers, so |E| is forced from below, and
        // the level hyperplanes of E attain it.
        out.lower = out.upper = size;
        out.exact = size;
        return out;
    }
    if (!e.contains_all(two_tails_clamped(n, 2))) {
        out.lower = size - 1;
        if (construct::extreme_pair_form_exists(g)) {
            // One hyperplane through the two extreme corners plus level
            // hyperplanes for the rest.
            out.upper = size - 1;
            out.exact = size - 1;
        } else {
            // No single hyperplane can trace exactly the two corners; the
            // level construction still gives |E|.
            out.upper = size;
        }
        return out;
    }

    // Both tails T_{N,2} lie in E.
    out.lower = ppc(g, e);
    if (g.is_cube()) {
        out.upper = size - 2; // two-hyperplane tail family plus levels
        if (e == two_tails(n, 2))
            out.exact = 2;
        else
            out.conjectured = size - 2;
    } else {
        out.upper = construct::extreme_pair_form_exists(g) ? size - 1 : size;
    }
    return out;
}

} // namespace wdc::covers
