#pragma once

#include <optional>

#include "wdc/grid.hpp"
#include "wdc/weightset.hpp"

namespace wdc::covers {

// Closed-form covering numbers for weight-determined sets of strictly
// unimodal uniform grids.  Every operation here hard-fails outside its
// proven domain instead of silently falling back to an oracle.

// Minimum degree of a nontrivial polynomial cover: the least d at which e
// is d-admitting.  Requires a strictly unimodal uniform grid and a proper
// weight set.
int pc(const Grid& g, const WeightSet& e);

// Minimum degree of a proper polynomial cover:
// |E| - max{ i : the two-tails set T_{N,i} is contained in E }.
int ppc(const Grid& g, const WeightSet& e);

// Least degree of a certifying polynomial (nonconstant on the grid,
// constant on the set).  Coincides with pc.
int cert_deg(const Grid& g, const WeightSet& e);

// Boolean-cube hyperplane covering numbers; they equal pc/ppc there.
// Refused on non-cube grids, where no formula is known.
int hc(const Grid& g, const WeightSet& e);
int phc(const Grid& g, const WeightSet& e);

// Minimum degree of an exact polynomial cover on the Boolean cube (equals
// ppc).  Refused on non-cube grids; use the algebra oracle there.
int epc(const Grid& g, const WeightSet& e);

// Bounds for the minimum size of an exact hyperplane cover.  `exact` is set
// only for the proved cases; `conjectured` carries the cube conjecture value
// |E| - 2 when the tails T_{N,2} lie in E but no proof applies.  The two are
// never both set, and absent fields mean the value is open.
struct EhcBounds {
    int lower = 0;
    int upper = 0;
    std::optional<int> exact;
    std::optional<int> conjectured;
};
EhcBounds ehc_bounds(const Grid& g, const WeightSet& e);

} // namespace wdc::covers
