#pragma once

#include <cstdint>
#include <vector>

#include "wdc/grid.hpp"
#include "wdc/poly.hpp"
#include "wdc/weightset.hpp"

namespace wdc::hyper {

// The hyperplane oracle reduces hyperplanes to their grid traces: every
// trace of a hyperplane equals the grid intersection of the affine hull of
// some grid points, and conversely every such proper intersection is the
// trace of a hyperplane (for hull dimension below n-1, a generic hyperplane
// through the hull misses the finitely many grid points off it).  Covering
// questions about hyperplane families therefore become exact set-cover
// questions over these flat sections.
struct SectionLimits {
    std::size_t max_grid_points = 40; // masks are 64-bit wide, so <= 64 regardless
    int max_cover_degree = 6;
};

// Grid trace of an affine flat spanned by grid points: points equals the
// hull intersected with the grid, and dim (the affine dimension of the
// hull) stays below the ambient dimension.
struct FlatSection {
    PointSet points;
    int dim = 0;
    std::uint64_t mask = 0; // bit per canonical point index
};

// All flat sections of a grid, deduplicated, sorted by mask.
struct SectionSet {
    Grid grid;
    std::vector<FlatSection> sections;
};

SectionSet enumerate_sections(const Grid& g, const SectionLimits& limits = {});

// Integer linear form whose grid trace is exactly the section, verified by
// enumeration before being returned.
LinearForm realize_form(const SectionSet& ss, const FlatSection& section);

// Degree-d h-closure of s: the common zero set, in G, of all products of
// at-most-degree-1 polynomials that vanish on s and have degree at most d.
// A point stays out exactly when some family of at most d sections covers s
// while avoiding the point.
PointSet h_closure(const SectionSet& ss, int degree, const PointSet& s);
PointSet h_closure(const Grid& g, int degree, const PointSet& s,
                   const SectionLimits& limits = {});

// Minimum sizes of hyperplane families for the weight-determined set of e:
// nontrivial (covers it, misses at least one grid point), proper (covers
// it, misses at least one point in every layer off e), and exact (the
// union traces exactly the set).
int hc_oracle(const SectionSet& ss, const WeightSet& e);
int phc_oracle(const SectionSet& ss, const WeightSet& e);
int ehc_oracle(const SectionSet& ss, const WeightSet& e);
int hc_oracle(const Grid& g, const WeightSet& e, const SectionLimits& limits = {});
int phc_oracle(const Grid& g, const WeightSet& e, const SectionLimits& limits = {});
int ehc_oracle(const Grid& g, const WeightSet& e, const SectionLimits& limits = {});

} // namespace wdc::hyper
