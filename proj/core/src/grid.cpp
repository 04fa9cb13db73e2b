#include "wdc/grid.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "wdc/errors.hpp"

namespace wdc {

namespace {

long parse_long(std::string_view tok)
{
    long value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("Grid: bad number '" + std::string(tok) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    for (;;) {
        std::size_t pos = text.find(sep);
        parts.push_back(text.substr(0, pos));
        if (pos == std::string_view::npos)
            return parts;
        text = text.substr(pos + 1);
    }
}

} // namespace

Grid::Grid(std::vector<int> dims, std::optional<std::vector<std::vector<long>>> levels)
    : dims_(std::move(dims)), levels_(std::move(levels))
{
    if (dims_.empty())
        throw std::invalid_argument("Grid: needs at least one axis");
    top_weight_ = 0;
    point_count_ = 1;
    for (int k : dims_) {
        if (k < 2)
            throw std::invalid_argument("Grid: every axis needs at least two levels");
        top_weight_ += k - 1;
        point_count_ *= k;
    }
    if (levels_) {
        if (levels_->size() != dims_.size())
            throw std::invalid_argument("Grid: level lists do not match axes");
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            const auto& lv = (*levels_)[i];
            if (static_cast<int>(lv.size()) != dims_[i])
                throw std::invalid_argument("Grid: level list length mismatch");
            for (std::size_t j = 1; j < lv.size(); ++j)
                if (lv[j] <= lv[j - 1])
                    throw std::invalid_argument("Grid: levels must be strictly increasing");
        }
    }

    indexable_ = point_count_ <= mpz_class(std::uint64_t{1} << 62);
    if (indexable_) {
        strides_.assign(dims_.size(), 1);
        for (std::size_t i = dims_.size(); i-- > 1;)
            strides_[i - 1] = strides_[i] * static_cast<std::uint64_t>(dims_[i]);
    }

    // Layer sizes by exact integer convolution with a running window sum.
    profile_.assign(1, mpz_class(1));
    for (int k : dims_) {
        std::vector<mpz_class> next(profile_.size() + static_cast<std::size_t>(k) - 1);
        mpz_class window = 0;
        for (std::size_t j = 0; j < next.size(); ++j) {
            if (j < profile_.size())
                window += profile_[j];
            if (j >= static_cast<std::size_t>(k) && j - k < profile_.size())
                window -= profile_[j - k];
            next[j] = window;
        }
        profile_ = std::move(next);
    }
}

Grid Grid::uniform(std::vector<int> dims)
{
    return Grid(std::move(dims), std::nullopt);
}

Grid Grid::cube(int n)
{
    if (n < 1)
        throw std::invalid_argument("Grid: cube dimension must be positive");
    return Grid(std::vector<int>(static_cast<std::size_t>(n), 2), std::nullopt);
}

Grid Grid::with_levels(std::vector<std::vector<long>> levels)
{
    std::vector<int> dims;
    dims.reserve(levels.size());
    bool plain = true;
    for (const auto& lv : levels) {
        dims.push_back(static_cast<int>(lv.size()));
        for (std::size_t j = 0; j < lv.size(); ++j)
            if (lv[j] != static_cast<long>(j))
                plain = false;
    }
    if (plain) // levels 0..k-1 on every axis: this is just the uniform grid
        return Grid(std::move(dims), std::nullopt);
    return Grid(std::move(dims), std::move(levels));
}

Grid Grid::parse(const std::string& spec)
{
    std::string_view text = spec;
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    if (text.empty())
        throw std::invalid_argument("Grid: empty spec");
    if (text.starts_with("cube:"))
        return cube(static_cast<int>(parse_long(text.substr(5))));
    if (text.find('|') != std::string_view::npos) {
        std::vector<std::vector<long>> levels;
        for (std::string_view axis : split(text, '|')) {
            std::vector<long> lv;
            for (std::string_view tok : split(axis, ','))
                lv.push_back(parse_long(tok));
            levels.push_back(std::move(lv));
        }
        return with_levels(std::move(levels));
    }
    std::vector<int> dims;
    for (std::string_view tok : split(text, ','))
        dims.push_back(static_cast<int>(parse_long(tok)));
    return uniform(std::move(dims));
}

std::string Grid::spec_string() const
{
    std::string out;
    if (is_uniform()) {
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(dims_[i]);
        }
        return out;
    }
    for (std::size_t i = 0; i < levels_->size(); ++i) {
        if (i)
            out += '|';
        const auto& lv = (*levels_)[i];
        for (std::size_t j = 0; j < lv.size(); ++j) {
            if (j)
                out += ',';
            out += std::to_string(lv[j]);
        }
    }
    return out;
}

bool Grid::is_cube() const
{
    if (!is_uniform())
        return false;
    return std::all_of(dims_.begin(), dims_.end(), [](int k) { return k == 2; });
}

long Grid::level(int axis, int rank) const
{
    if (axis < 0 || axis >= dimension() || rank < 0 || rank >= dims_[static_cast<std::size_t>(axis)])
        throw std::out_of_range("Grid: level index out of range");
    if (levels_)
        return (*levels_)[static_cast<std::size_t>(axis)][static_cast<std::size_t>(rank)];
    return rank;
}

const mpz_class& Grid::layer_size(int weight) const
{
    if (weight < 0 || weight > top_weight_)
        throw std::out_of_range("Grid: weight " + std::to_string(weight) + " outside [0," +
                                std::to_string(top_weight_) + "]");
    return profile_[static_cast<std::size_t>(weight)];
}

bool Grid::is_strictly_unimodal() const
{
    if (!is_uniform())
        throw unsupported_domain("strict unimodality is only defined for uniform grids");
    const int n = top_weight_;
    bool scan = true;
    for (int j = 1; j <= n / 2; ++j)
        if (profile_[static_cast<std::size_t>(j)] <= profile_[static_cast<std::size_t>(j - 1)])
            scan = false;
    for (int j = (n + 1) / 2 + 1; j <= n; ++j)
        if (profile_[static_cast<std::size_t>(j)] >= profile_[static_cast<std::size_t>(j - 1)])
            scan = false;

    int max_side = 0;
    for (int k : dims_)
        max_side = std::max(max_side, k - 1);
    const bool dimension_test = 2 * max_side <= n + 1;

    if (scan != dimension_test)
        throw std::logic_error("Grid: unimodality scan disagrees with the dimension test");
    return scan;
}

PointIndex Grid::index_of(std::span<const int> ranks) const
{
    if (!indexable_)
        throw limit_exceeded("Grid: too many points for indexing");
    if (static_cast<int>(ranks.size()) != dimension())
        throw std::invalid_argument("Grid: rank vector has wrong length");
    PointIndex idx = 0;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (ranks[i] < 0 || ranks[i] >= dims_[i])
            throw std::out_of_range("Grid: rank out of range");
        idx += static_cast<std::uint64_t>(ranks[i]) * strides_[i];
    }
    return idx;
}

std::vector<int> Grid::ranks_at(PointIndex idx) const
{
    if (!indexable_)
        throw limit_exceeded("Grid: too many points for indexing");
    std::vector<int> ranks(dims_.size());
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        ranks[i] = static_cast<int>((idx / strides_[i]) % static_cast<std::uint64_t>(dims_[i]));
    }
    return ranks;
}

std::vector<long> Grid::coords_at(PointIndex idx) const
{
    std::vector<int> ranks = ranks_at(idx);
    std::vector<long> coords(ranks.size());
    for (std::size_t i = 0; i < ranks.size(); ++i)
        coords[i] = level(static_cast<int>(i), ranks[i]);
    return coords;
}

int Grid::weight_at(PointIndex idx) const
{
    std::vector<int> ranks = ranks_at(idx);
    int w = 0;
    for (int r : ranks)
        w += r;
    return w;
}

GridPoint Grid::point_at(PointIndex idx) const
{
    return GridPoint{coords_at(idx), weight_at(idx)};
}

PointSet Grid::layer_points(int weight) const
{
    if (weight < 0 || weight > top_weight_)
        throw std::out_of_range("Grid: weight " + std::to_string(weight) + " outside [0," +
                                std::to_string(top_weight_) + "]");
    if (!indexable_)
        throw limit_exceeded("Grid: too many points for enumeration");
    PointSet out;
    const int n = dimension();
    std::vector<int> ranks(static_cast<std::size_t>(n), 0);
    // Residual top weights over the remaining axes, for pruning.
    std::vector<int> tail_max(static_cast<std::size_t>(n) + 1, 0);
    for (int i = n; i-- > 0;)
        tail_max[static_cast<std::size_t>(i)] =
            tail_max[static_cast<std::size_t>(i) + 1] + dims_[static_cast<std::size_t>(i)] - 1;

    // Lexicographic descent over rank vectors with the target weight.
    auto descend = [&](auto&& self, int axis, int remaining) -> void {
        if (axis == n) {
            out.push_back(index_of(ranks));
            return;
        }
        const int lo = std::max(0, remaining - tail_max[static_cast<std::size_t>(axis) + 1]);
        const int hi = std::min(dims_[static_cast<std::size_t>(axis)] - 1, remaining);
        for (int r = lo; r <= hi; ++r) {
            ranks[static_cast<std::size_t>(axis)] = r;
            self(self, axis + 1, remaining - r);
        }
    };
    descend(descend, 0, weight);
    return out; // ascending: lexicographic enumeration emits sorted indices
}

PointSet Grid::weight_set_points(const WeightSet& e) const
{
    if (e.n_max() != top_weight_)
        throw std::invalid_argument("Grid: weight set universe does not match the grid");
    PointSet out;
    for (int w : e.to_vector()) {
        PointSet layer = layer_points(w);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

PointSet Grid::all_points(std::size_t cap) const
{
    if (point_count_ > static_cast<unsigned long>(cap))
        throw limit_exceeded("Grid: point count " + point_count_.get_str() +
                             " exceeds the cap of " + std::to_string(cap));
    PointSet out(point_count_.get_ui());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = i;
    return out;
}

bool Grid::operator==(const Grid& other) const
{
    return dims_ == other.dims_ && levels_ == other.levels_;
}

} // namespace wdc
