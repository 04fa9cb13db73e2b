#pragma once

#include <optional>

#include "wdc/algebra_oracle.hpp"
#include "wdc/grid.hpp"
#include "wdc/poly.hpp"
#include "wdc/weightset.hpp"

namespace wdc::construct {

// Explicit witnesses attaining the covering bounds.  Every construction is
// verified by exhaustive evaluation on the grid before it is returned; an
// unverified witness is a hard error, never a result.

// Product of the level forms of the weights in e: degree |E|, vanishing
// exactly on the layers of e.
Poly level_product(const Grid& g, const WeightSet& e,
                   const algebra::OracleLimits& limits = {});

// (X1 - X2)(X3 - X4)...(X_{2i-1} - X_{2i}) on the n-cube: degree i, vanishes
// on the two-tails set T_{n,i} and is nonzero somewhere on every layer in
// between.
Poly pairing_poly(int n, int i);

// A proper polynomial cover of the weight-determined set of e with degree
// exactly ppc(e): vanishes on the set, nonzero somewhere on every layer off
// it.  Built from the degree-bounded vanishing ideal by a deterministic
// search over small integer coefficient combinations.
Poly ppc_witness(const Grid& g, const WeightSet& e,
                 const algebra::OracleLimits& limits = {});

// Two hyperplanes whose cube trace is exactly the two-tails set T_{n,2},
// n >= 4.
HyperplaneFamily ehc_t2_family(int n);

// Integer linear form through the origin whose grid trace is exactly the
// two extreme corners {0^n, (k_1-1, ..., k_n-1)}.  Such a form exists
// precisely when n >= 2 and gcd(k_1-1, ..., k_n-1) = 1; otherwise the
// segment between the corners passes through further grid points, which any
// hyperplane containing both corners must also contain.
bool extreme_pair_form_exists(const Grid& g);
std::optional<LinearForm> try_ehc_t1_form(const Grid& g,
                                          const algebra::OracleLimits& limits = {});
LinearForm ehc_t1_form(const Grid& g, const algebra::OracleLimits& limits = {});

} // namespace wdc::construct
