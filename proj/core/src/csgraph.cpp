#include "mcsp/csgraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string_view>
#include <unordered_map>

namespace mcsp {

void OccupancyState::occupy(const Block& b) {
    if (b.first < 0 || b.last >= size() || b.first > b.last) {
        throw std::invalid_argument("occupy: block out of range " + to_string(b));
    }
    if (!is_free(b)) {
        throw std::invalid_argument("occupy: position already occupied in " + to_string(b));
    }
    for (int p = b.first; p <= b.last; ++p) occupied_[static_cast<std::size_t>(p)] = 1;
    consumed_ += b.length();
}

CommonSubstringGraph::CommonSubstringGraph(std::string x, std::string y)
    : n_(static_cast<int>(x.size())), x_(std::move(x)), y_(std::move(y)) {
    if (n_ == 0) {
        throw std::invalid_argument("common substring graph: empty input strings");
    }
    if (!related(x_, y_)) {
        throw std::invalid_argument("common substring graph: unrelated strings");
    }

    const std::size_t stride = static_cast<std::size_t>(n_) + 1;
    lce_.assign(stride * stride, 0);
    for (int i = n_ - 1; i >= 0; --i) {
        for (int p = n_ - 1; p >= 0; --p) {
            if (x_[static_cast<std::size_t>(i)] == y_[static_cast<std::size_t>(p)]) {
                lce_[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(p)] =
                    1 + lce_[(static_cast<std::size_t>(i) + 1) * stride + static_cast<std::size_t>(p) + 1];
            }
        }
    }

    out_length_.assign(static_cast<std::size_t>(n_), 0);
    y_match_length_.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
        for (int p = 0; p < n_; ++p) {
            const int l = lce(i, p);
            out_length_[static_cast<std::size_t>(i)] = std::max(out_length_[static_cast<std::size_t>(i)], l);
            y_match_length_[static_cast<std::size_t>(p)] = std::max(y_match_length_[static_cast<std::size_t>(p)], l);
        }
        // Relatedness guarantees every character of X occurs in Y.
        if (out_length_[static_cast<std::size_t>(i)] == 0) {
            throw std::logic_error("common substring graph: vertex without edges");
        }
    }
    max_edge_length_ = *std::max_element(out_length_.begin(), out_length_.end());

    edge_offset_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int i = 0; i < n_; ++i) {
        edge_offset_[static_cast<std::size_t>(i) + 1] =
            edge_offset_[static_cast<std::size_t>(i)] + static_cast<std::size_t>(out_length_[static_cast<std::size_t>(i)]);
    }

    // One match list per distinct common substring, shared between edge
    // blocks that induce the same text.
    match_list_id_.assign(edge_count(), -1);
    std::unordered_map<std::string_view, int> list_of;
    const std::string_view xv{x_};
    for (int v = 0; v < n_; ++v) {
        for (int len = 1; len <= out_length(v); ++len) {
            const std::string_view key = xv.substr(static_cast<std::size_t>(v), static_cast<std::size_t>(len));
            auto [it, inserted] = list_of.try_emplace(key, static_cast<int>(match_lists_.size()));
            if (inserted) {
                std::vector<int> starts;
                for (int p = 0; p + len <= n_; ++p) {
                    if (lce(v, p) >= len) starts.push_back(p);
                }
                match_lists_.push_back(std::move(starts));
            }
            match_list_id_[dense_index(v, len)] = it->second;
        }
    }
}

std::size_t CommonSubstringGraph::edge_index(const Block& b) const {
    if (!is_edge(b)) {
        throw std::invalid_argument("edge_index: not an edge block: " + to_string(b));
    }
    return dense_index(b.first, b.length());
}

Block CommonSubstringGraph::edge_at(std::size_t index) const {
    if (index >= edge_count()) {
        throw std::invalid_argument("edge_at: index out of range");
    }
    const auto row = std::upper_bound(edge_offset_.begin(), edge_offset_.end(), index) -
                     edge_offset_.begin() - 1;
    const int v = static_cast<int>(row);
    const int len = static_cast<int>(index - edge_offset_[static_cast<std::size_t>(v)]) + 1;
    return Block{kIdX, v, v + len - 1};
}

std::span<const int> CommonSubstringGraph::match_starts(int v, int len) const {
    const int id = match_list_id_[dense_index(v, len)];
    return match_lists_[static_cast<std::size_t>(id)];
}

std::vector<Block> CommonSubstringGraph::match_list(const Block& b) const {
    const std::size_t idx = edge_index(b);
    const int len = b.length();
    std::vector<Block> out;
    const auto& starts = match_lists_[static_cast<std::size_t>(match_list_id_[idx])];
    out.reserve(starts.size());
    for (int p : starts) out.push_back(Block{kIdY, p, p + len - 1});
    return out;
}

std::vector<Block> available_edges(const CommonSubstringGraph& g, const OccupancyState& occ,
                                   int v, int v_start) {
    if (occ.full()) {
        throw std::invalid_argument("available_edges: construction already complete");
    }
    if (v < 0 || v >= g.size() || v_start < 0 || v_start >= g.size()) {
        throw std::invalid_argument("available_edges: vertex out of range");
    }
    // The walk covers the cyclic segment v_start..v_start-1; a block taken at
    // v may not cross position v_start-1 (mod n), so that the walk can land
    // back on v_start exactly.
    const int allowed_end = v < v_start ? v_start - 1 : g.size() - 1;
    const int limit = std::min(g.out_length(v), allowed_end - v + 1);

    std::vector<Block> out;
    out.reserve(static_cast<std::size_t>(limit));
    for (int len = 1; len <= limit; ++len) {
        for (int p : g.match_starts(v, len)) {
            if (occ.is_free(Block{kIdY, p, p + len - 1})) {
                out.push_back(Block{kIdX, v, v + len - 1});
                break;
            }
        }
    }
    return out;
}

std::vector<Block> free_matches(const CommonSubstringGraph& g, const OccupancyState& occ,
                                const Block& b) {
    const int len = b.length();
    std::vector<Block> out;
    for (int p : g.match_starts(b.first, len)) {
        const Block m{kIdY, p, p + len - 1};
        if (occ.is_free(m)) out.push_back(m);
    }
    return out;
}

int free_span(const CommonSubstringGraph& g, const OccupancyState& occ, const Block& m) {
    if (!occ.is_free(m)) {
        throw std::invalid_argument("free_span: match block is occupied: " + to_string(m));
    }
    // Maximal unoccupied run around m.
    int lo = m.first;
    while (lo > 0 && occ.is_free(lo - 1)) --lo;
    int hi = m.last;
    while (hi + 1 < g.size() && occ.is_free(hi + 1)) ++hi;

    // Any containing block starts at a in [lo, m.first]; its longest usable
    // extension is capped by the run end and by occurrence in X.
    int best = 0;
    for (int a = lo; a <= m.first; ++a) {
        const int len = std::min(g.y_match_length(a), hi - a + 1);
        if (a + len - 1 >= m.last) best = std::max(best, len);
    }
    return best;
}

int min_span(const CommonSubstringGraph& g, const OccupancyState& occ, const Block& b) {
    const int len = b.length();
    int best = 0;
    for (int p : g.match_starts(b.first, len)) {
        const Block m{kIdY, p, p + len - 1};
        if (!occ.is_free(m)) continue;
        const int s = free_span(g, occ, m);
        if (best == 0 || s < best) best = s;
        if (best == len) break;  // cannot go lower than the block's own length
    }
    if (best == 0) {
        throw std::invalid_argument("min_span: edge block has no free match: " + to_string(b));
    }
    return best;
}

}  // namespace mcsp
