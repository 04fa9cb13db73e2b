#include "wdc/weightset.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace wdc {

namespace {

constexpr std::uint64_t kAllOnes = ~std::uint64_t{0};

// Mask with bits [lo, hi] of a single word set, 0 <= lo <= hi <= 63.
std::uint64_t word_mask(int lo, int hi)
{
    std::uint64_t m = kAllOnes >> (63 - (hi - lo));
    return m << lo;
}

} // namespace

WeightSet::WeightSet(int n_max) : n_max_(n_max)
{
    if (n_max < 0)
        throw std::invalid_argument("WeightSet: n_max must be nonnegative");
    words_.assign(static_cast<std::size_t>(n_max) / 64 + 1, 0);
}

WeightSet WeightSet::full(int n_max)
{
    WeightSet s(n_max);
    s.set_range(0, n_max);
    return s;
}

WeightSet WeightSet::interval(int n_max, int lo, int hi)
{
    WeightSet s(n_max);
    lo = std::max(lo, 0);
    hi = std::min(hi, n_max);
    if (lo <= hi)
        s.set_range(lo, hi);
    return s;
}

WeightSet WeightSet::of(int n_max, std::initializer_list<int> ws)
{
    WeightSet s(n_max);
    for (int w : ws)
        s.set(w);
    return s;
}

WeightSet WeightSet::of(int n_max, const std::vector<int>& ws)
{
    WeightSet s(n_max);
    for (int w : ws)
        s.set(w);
    return s;
}

void WeightSet::check_weight(int w) const
{
    if (w < 0 || w > n_max_)
        throw std::out_of_range("WeightSet: weight " + std::to_string(w) +
                                " outside [0," + std::to_string(n_max_) + "]");
}

bool WeightSet::test(int w) const
{
    check_weight(w);
    return (words_[static_cast<std::size_t>(w) / 64] >> (w % 64)) & 1u;
}

void WeightSet::set(int w)
{
    check_weight(w);
    words_[static_cast<std::size_t>(w) / 64] |= std::uint64_t{1} << (w % 64);
}

void WeightSet::reset(int w)
{
    check_weight(w);
    words_[static_cast<std::size_t>(w) / 64] &= ~(std::uint64_t{1} << (w % 64));
}

void WeightSet::set_range(int lo, int hi)
{
    if (lo > hi)
        return;
    check_weight(lo);
    check_weight(hi);
    std::size_t wl = static_cast<std::size_t>(lo) / 64;
    std::size_t wh = static_cast<std::size_t>(hi) / 64;
    if (wl == wh) {
        words_[wl] |= word_mask(lo % 64, hi % 64);
        return;
    }
    words_[wl] |= word_mask(lo % 64, 63);
    for (std::size_t i = wl + 1; i < wh; ++i)
        words_[i] = kAllOnes;
    words_[wh] |= word_mask(0, hi % 64);
}

int WeightSet::count() const
{
    int c = 0;
    for (std::uint64_t w : words_)
        c += std::popcount(w);
    return c;
}

int WeightSet::count_in_range(int lo, int hi) const
{
    if (lo > hi)
        return 0;
    check_weight(lo);
    check_weight(hi);
    std::size_t wl = static_cast<std::size_t>(lo) / 64;
    std::size_t wh = static_cast<std::size_t>(hi) / 64;
    if (wl == wh)
        return std::popcount(words_[wl] & word_mask(lo % 64, hi % 64));
    int c = std::popcount(words_[wl] & word_mask(lo % 64, 63));
    for (std::size_t i = wl + 1; i < wh; ++i)
        c += std::popcount(words_[i]);
    c += std::popcount(words_[wh] & word_mask(0, hi % 64));
    return c;
}

bool WeightSet::contains_all(const WeightSet& other) const
{
    if (other.n_max_ != n_max_)
        throw std::invalid_argument("WeightSet: mismatched universes");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (other.words_[i] & ~words_[i])
            return false;
    return true;
}

int WeightSet::select(int k) const
{
    if (k < 0)
        return -1;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        int c = std::popcount(w);
        if (k < c) {
            while (k-- > 0)
                w &= w - 1; // clear lowest set bit
            return static_cast<int>(i * 64) + std::countr_zero(w);
        }
        k -= c;
    }
    return -1;
}

int WeightSet::min_element() const
{
    return select(0);
}

int WeightSet::max_element() const
{
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (words_[i])
            return static_cast<int>(i * 64) + 63 - std::countl_zero(words_[i]);
    }
    return -1;
}

WeightSet WeightSet::operator|(const WeightSet& other) const
{
    if (other.n_max_ != n_max_)
        throw std::invalid_argument("WeightSet: mismatched universes");
    WeightSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i)
        r.words_[i] |= other.words_[i];
    return r;
}

WeightSet WeightSet::operator&(const WeightSet& other) const
{
    if (other.n_max_ != n_max_)
        throw std::invalid_argument("WeightSet: mismatched universes");
    WeightSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i)
        r.words_[i] &= other.words_[i];
    return r;
}

WeightSet WeightSet::minus(const WeightSet& other) const
{
    if (other.n_max_ != n_max_)
        throw std::invalid_argument("WeightSet: mismatched universes");
    WeightSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i)
        r.words_[i] &= ~other.words_[i];
    return r;
}

WeightSet WeightSet::complement() const
{
    return full(n_max_).minus(*this);
}

std::vector<int> WeightSet::to_vector() const
{
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(count()));
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            v.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return v;
}

std::string WeightSet::to_string() const
{
    std::vector<int> v = to_vector();
    if (v.empty())
        return "-";
    std::string out;
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t j = i;
        while (j + 1 < v.size() && v[j + 1] == v[j] + 1)
            ++j;
        if (!out.empty())
            out += ',';
        out += std::to_string(v[i]);
        if (j > i) {
            out += '-';
            out += std::to_string(v[j]);
        }
        i = j + 1;
    }
    return out;
}

namespace {

int parse_int(std::string_view tok)
{
    int value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("WeightSet: bad number '" + std::string(tok) + "'");
    return value;
}

} // namespace

WeightSet WeightSet::parse(int n_max, const std::string& text)
{
    WeightSet s(n_max);
    std::string_view rest = text;
    // strip surrounding spaces
    while (!rest.empty() && rest.front() == ' ')
        rest.remove_prefix(1);
    while (!rest.empty() && rest.back() == ' ')
        rest.remove_suffix(1);
    if (rest.empty() || rest == "-")
        return s;
    while (!rest.empty()) {
        std::size_t comma = rest.find(',');
        std::string_view tok = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        if (tok.empty())
            throw std::invalid_argument("WeightSet: empty element in '" + text + "'");
        // a token is "w" or "lo-hi"; weights are nonnegative, so any '-' is a
        // range separator
        std::size_t dash = tok.find('-');
        if (dash == std::string_view::npos) {
            int w = parse_int(tok);
            if (w < 0 || w > n_max)
                throw std::out_of_range("WeightSet: weight " + std::to_string(w) +
                                        " outside [0," + std::to_string(n_max) + "]");
            s.set(w);
        } else {
            int lo = parse_int(tok.substr(0, dash));
            int hi = parse_int(tok.substr(dash + 1));
            if (lo > hi)
                throw std::invalid_argument("WeightSet: empty range in '" + std::string(tok) + "'");
            if (lo < 0 || hi > n_max)
                throw std::out_of_range("WeightSet: range '" + std::string(tok) +
                                        "' outside [0," + std::to_string(n_max) + "]");
            s.set_range(lo, hi);
        }
    }
    return s;
}

WeightSet two_tails(int n_max, int i)
{
    if (i < 0 || i > n_max)
        throw std::out_of_range("two_tails: index " + std::to_string(i) +
                                " outside [0," + std::to_string(n_max) + "]");
    WeightSet s(n_max);
    if (i == 0)
        return s;
    s.set_range(0, i - 1);
    s.set_range(n_max - i + 1, n_max);
    return s;
}

WeightSet two_tails_clamped(int n_max, long i)
{
    if (i <= 0)
        return WeightSet(n_max);
    if (i > n_max)
        return WeightSet::full(n_max);
    return two_tails(n_max, static_cast<int>(i));
}

namespace {

void check_degree(int degree, const WeightSet& e)
{
    if (degree < 0 || degree > e.n_max())
        throw std::out_of_range("fill operator: degree " + std::to_string(degree) +
                                " outside [0," + std::to_string(e.n_max()) + "]");
}

} // namespace

WeightSet fill_step(int degree, const WeightSet& e)
{
    check_degree(degree, e);
    const int s = e.count();
    if (s <= degree)
        return e;
    const int low_anchor = e.select(s - degree - 1); // t_{s-d}
    const int high_anchor = e.select(degree);        // t_{d+1}
    WeightSet r = e;
    r.set_range(0, low_anchor);
    r.set_range(high_anchor, e.n_max());
    return r;
}

WeightSet fill_closure(int degree, const WeightSet& e)
{
    check_degree(degree, e);
    const int n = e.n_max();
    int a = 0, b = n, d = degree;
    int w = e.count();
    for (;;) {
        // Inner sets of size <= d are fixed, as is every set when the degree
        // equals the interval length.
        if (w <= d || d == b - a) {
            WeightSet r = e;
            if (a > 0)
                r.set_range(0, a - 1);
            if (b < n)
                r.set_range(b + 1, n);
            return r;
        }
        if (d == 0) // nonempty inner set at degree 0 fills everything
            return WeightSet::full(n);
        // Strip the endpoints: they join the closure, and the inner interval
        // recurses with degree one lower.
        w -= (e.test(a) ? 1 : 0) + (e.test(b) ? 1 : 0);
        ++a;
        --b;
        --d;
    }
}

WeightSet fill_closure_naive(int degree, const WeightSet& e)
{
    check_degree(degree, e);
    WeightSet cur = e;
    for (;;) {
        WeightSet next = fill_step(degree, cur);
        if (next == cur)
            return cur;
        cur = std::move(next);
    }
}

int fill_stabilization_index(int degree, const WeightSet& e)
{
    check_degree(degree, e);
    WeightSet cur = e;
    int k = 0;
    for (;;) {
        WeightSet next = fill_step(degree, cur);
        if (next == cur)
            return k;
        cur = std::move(next);
        ++k;
    }
}

namespace {

WeightSet extract_slice(int a, int b, const WeightSet& e)
{
    WeightSet inner(b - a);
    for (int w = a; w <= b; ++w)
        if (e.test(w))
            inner.set(w - a);
    return inner;
}

WeightSet implant_slice(int a, int n_max, const WeightSet& inner)
{
    WeightSet out(n_max);
    for (int w : inner.to_vector())
        out.set(w + a);
    return out;
}

void check_slice(int a, int b, const WeightSet& e)
{
    if (a < 0 || b > e.n_max() || a > b)
        throw std::out_of_range("fill operator: bad interval");
    if (e.count() != e.count_in_range(a, b))
        throw std::invalid_argument("fill operator: set leaves the interval [a,b]");
}

} // namespace

WeightSet fill_step_within(int a, int b, int degree, const WeightSet& e)
{
    check_slice(a, b, e);
    return implant_slice(a, e.n_max(), fill_step(degree, extract_slice(a, b, e)));
}

WeightSet fill_closure_within(int a, int b, int degree, const WeightSet& e)
{
    check_slice(a, b, e);
    return implant_slice(a, e.n_max(), fill_closure(degree, extract_slice(a, b, e)));
}

AdmittingCertificate admitting_certificate(int degree, const WeightSet& e)
{
    check_degree(degree, e);
    const int n = e.n_max();
    for (int i = 0; i <= degree; ++i) {
        if (2 * i > n)
            break; // tails overlap: E ∪ T = [0, N], no witness possible
        const int in_middle = e.count_in_range(i, n - i);
        const int gaps = (n - 2 * i + 1) - in_middle;
        if (gaps >= 1 && in_middle <= degree - i)
            return AdmittingCertificate{degree, i, true};
    }
    return AdmittingCertificate{degree, -1, false};
}

} // namespace wdc
