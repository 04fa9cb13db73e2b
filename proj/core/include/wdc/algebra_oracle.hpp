#pragma once

#include <optional>
#include <vector>

#include "wdc/grid.hpp"
#include "wdc/poly.hpp"
#include "wdc/weightset.hpp"

namespace wdc::algebra {

// Size guard for the brute-force oracles: this is a desk-scale ground-truth
// engine, not a production solver.
struct OracleLimits {
    std::size_t max_grid_points = 20000;
    std::size_t max_monomials = 20000;
};

// All monomials with per-axis exponent at most k_i - 1 and total degree at
// most `degree`, in graded lexicographic order.  These induce linearly
// independent functions on the grid, so the degree-bounded function space
// is exactly their span.
std::vector<Monomial> footprint_monomials(const Grid& g, int degree,
                                          const OracleLimits& limits = {});

// Evaluation row of a point over a monomial list.
std::vector<Int> evaluation_row(const Grid& g, PointIndex p,
                                const std::vector<Monomial>& monomials);

// Degree-d Zariski closure of s within the grid: the common zero set, in G,
// of every polynomial of degree at most d vanishing on s.  A point belongs
// to the closure exactly when its evaluation row lies in the row space of
// the evaluation matrix of s, decided by exact rank comparison.
PointSet z_closure(const Grid& g, int degree, const PointSet& s,
                   const OracleLimits& limits = {});

// The maximal weight-determined set contained in the Z-closure of the
// weight-determined set of e: keeps exactly the weights whose whole layer
// landed in the closure.
WeightSet z_star_closure(const Grid& g, int degree, const WeightSet& e,
                         const OracleLimits& limits = {});

// Affine Hilbert function data of a point set at one degree.  `value` is
// the dimension of the space of functions on the set that polynomials of
// degree <= d induce (an exact evaluation-matrix rank).  For
// weight-determined sets of the Boolean cube there is an independent closed
// form computed from the weight set alone; hilbert_fn fills it in whenever
// it applies so the two routes can be compared.
struct HilbertProfile {
    int degree = 0;
    Int value = 0;

    struct CubeClosedForm {
        int r = 0;                // |E \ [0,d]|
        int ell = 0;              // |[0,d] \ E|
        std::vector<int> jplus;   // E \ [0,d], ascending
        std::vector<int> jminus;  // [0,d] \ E, descending
        Int value = 0;
    };
    std::optional<CubeClosedForm> cube_closed_form;
};

HilbertProfile hilbert_fn(const Grid& g, int degree, const PointSet& s,
                          const OracleLimits& limits = {});

// The closed form for weight-determined sets of {0,1}^n, computed without
// any linear algebra.
HilbertProfile::CubeClosedForm hilbert_cube_closed_form(int n, int degree, const WeightSet& e);

// Least degree d at which the Z-closure of the weight-determined set of e
// is a fixpoint; this is the minimum degree of a polynomial whose zero set
// on the grid is exactly that set.
int epc_oracle(const Grid& g, const WeightSet& e, const OracleLimits& limits = {});

// Exact integer basis of the degree-bounded vanishing ideal of s on the
// grid, in footprint coordinates.
std::vector<Poly> vanishing_basis(const Grid& g, int degree, const PointSet& s,
                                  const OracleLimits& limits = {});

} // namespace wdc::algebra
