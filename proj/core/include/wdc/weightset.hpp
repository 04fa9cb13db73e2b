#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace wdc {

// A subset of the integer interval [0, n_max], packed 64 bits per word.
//
// Weight-determined sets of a grid with top weight N are identified with
// their weight sets in [0, N]; everything in this header manipulates that
// interval picture.  Values are immutable in spirit: all operators below
// return fresh sets, and a constructed set is safe to share across threads.
class WeightSet {
public:
    explicit WeightSet(int n_max);

    static WeightSet empty(int n_max) { return WeightSet(n_max); }
    static WeightSet full(int n_max);
    // Inclusive interval [lo, hi] clipped to [0, n_max]; lo > hi gives the
    // empty set.
    static WeightSet interval(int n_max, int lo, int hi);
    static WeightSet of(int n_max, std::initializer_list<int> ws);
    static WeightSet of(int n_max, const std::vector<int>& ws);

    int n_max() const { return n_max_; }
    // Number of representable weights, n_max + 1.
    int universe_size() const { return n_max_ + 1; }

    bool test(int w) const;
    void set(int w);
    void reset(int w);
    void set_range(int lo, int hi); // inclusive, no-op when lo > hi

    int count() const;
    int count_in_range(int lo, int hi) const;
    bool is_empty() const { return count() == 0; }
    bool is_full() const { return count() == universe_size(); }
    bool contains(int w) const { return test(w); }
    bool contains_all(const WeightSet& other) const; // superset test
    // k-th smallest element, 0-based; -1 when k >= count().
    int select(int k) const;
    int min_element() const; // -1 when empty
    int max_element() const; // -1 when empty

    bool operator==(const WeightSet& other) const = default;

    WeightSet operator|(const WeightSet& other) const;
    WeightSet operator&(const WeightSet& other) const;
    WeightSet minus(const WeightSet& other) const;
    WeightSet complement() const;

    std::vector<int> to_vector() const;

    // Canonical run form, e.g. "0-1,3,5-6"; the empty set prints as "-".
    std::string to_string() const;
    // Accepts comma-separated weights and inclusive ranges: "0,2,4",
    // "0-2,4-6", or a mix.  "-" and "" denote the empty set.
    static WeightSet parse(int n_max, const std::string& text);

private:
    void check_weight(int w) const;
    int n_max_;
    std::vector<std::uint64_t> words_;
};

// The two-tails set T_{N,i} = [0, i-1] ∪ [N-i+1, N] inside [0, N].
// Requires 0 <= i <= N; the tails overlap into the full interval once
// 2i >= N+1.
WeightSet two_tails(int n_max, int i);
// Same, but i <= 0 yields the empty set and i > n_max the full interval.
WeightSet two_tails_clamped(int n_max, long i);

// One step of the interval-filling operator at the given degree: a set with
// at most `degree` elements is fixed; otherwise, with elements
// t_1 < ... < t_s, the result is [0, t_{s-degree}] ∪ E ∪ [t_{degree+1}, N].
WeightSet fill_step(int degree, const WeightSet& e);

// Fixpoint of fill_step, computed by the linear-time end-stripping
// recursion.  fill_closure_naive iterates fill_step until it stabilizes and
// is kept as the in-repo oracle for the recursive version.
WeightSet fill_closure(int degree, const WeightSet& e);
WeightSet fill_closure_naive(int degree, const WeightSet& e);

// Least k such that the (k+1)-st application of fill_step changes nothing.
int fill_stabilization_index(int degree, const WeightSet& e);

// Shifted operators acting on subsets of [a, b] within [0, n_max]: the
// slice is translated to [0, b-a], transformed there, and translated back.
// The input must be contained in [a, b].
WeightSet fill_step_within(int a, int b, int degree, const WeightSet& e);
WeightSet fill_closure_within(int a, int b, int degree, const WeightSet& e);

// A ( d, i ) admitting witness: E ∪ T_{N,i} ≠ [0, N] and |E \ T_{N,i}| <= d-i.
// `i` is the least witnessing index, or -1 when none exists.
struct AdmittingCertificate {
    int d = 0;
    int i = -1;
    bool witnessed = false;
};

// Scans i = 0..degree and returns the least witnessing index.
AdmittingCertificate admitting_certificate(int degree, const WeightSet& e);

} // namespace wdc
