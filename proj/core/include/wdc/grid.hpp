#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wdc/weightset.hpp"

namespace wdc {

// A grid point: actual coordinates plus its weight, the sum of the per-axis
// rank indices.  On a uniform grid ranks and coordinates coincide, so the
// weight is simply the coordinate sum.
struct GridPoint {
    std::vector<long> coords;
    int weight = 0;
};

// Canonical point order is mixed-radix lexicographic with axis 0 most
// significant; a PointIndex is the position in that order.  PointSets are
// kept sorted, which makes them lexicographically ordered point lists.
using PointIndex = std::uint64_t;
using PointSet = std::vector<PointIndex>;

// A finite product grid.  Uniform grids are [0,k_1-1] x ... x [0,k_n-1];
// general grids carry explicit strictly increasing integer levels per axis
// and exist only to feed the brute-force oracles.  The top weight is
// N = sum (k_i - 1) either way.
class Grid {
public:
    static Grid uniform(std::vector<int> dims);
    static Grid cube(int n);
    static Grid with_levels(std::vector<std::vector<long>> levels);

    // Spec strings: "k1,k2,...,kn" (uniform), "cube:n", or per-axis levels
    // separated by '|', e.g. "0,1,3|0,1,3".
    static Grid parse(const std::string& spec);
    std::string spec_string() const;

    int dimension() const { return static_cast<int>(dims_.size()); }
    int top_weight() const { return top_weight_; } // N
    const std::vector<int>& dims() const { return dims_; }
    bool is_uniform() const { return !levels_.has_value(); }
    bool is_cube() const;
    long level(int axis, int rank) const;

    const mpz_class& point_count() const { return point_count_; }
    // Point indexing only works while the index space fits comfortably in
    // 64 bits; layer sizes and the unimodality test work regardless.
    bool indexable() const { return indexable_; }

    const mpz_class& layer_size(int weight) const;
    const std::vector<mpz_class>& layer_profile() const { return profile_; }

    // Strict unimodality of the layer-size sequence.  Only defined for
    // uniform grids; general grids are refused.  Checked both directly and
    // through the dimension inequality 2 max(k_i - 1) <= N + 1; the two
    // must agree.
    bool is_strictly_unimodal() const;

    PointIndex index_of(std::span<const int> ranks) const;
    std::vector<int> ranks_at(PointIndex idx) const;
    std::vector<long> coords_at(PointIndex idx) const;
    int weight_at(PointIndex idx) const;
    GridPoint point_at(PointIndex idx) const;

    // All points of the given weight, in canonical order.
    PointSet layer_points(int weight) const;
    // Union of the layers selected by the weight set, in canonical order.
    PointSet weight_set_points(const WeightSet& e) const;
    // All points, canonical order.  Requires point_count() <= cap.
    PointSet all_points(std::size_t cap) const;

    bool operator==(const Grid& other) const;

private:
    Grid(std::vector<int> dims, std::optional<std::vector<std::vector<long>>> levels);

    std::vector<int> dims_;
    std::optional<std::vector<std::vector<long>>> levels_;
    int top_weight_ = 0;
    mpz_class point_count_;
    bool indexable_ = false;
    std::vector<std::uint64_t> strides_;
    std::vector<mpz_class> profile_;
};

} // namespace wdc
