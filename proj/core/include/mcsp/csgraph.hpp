#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mcsp/block.hpp"

namespace mcsp {

/// Which positions of Y are already consumed by the mapped blocks of a
/// partial construction. Cheap per-ant value; the graph itself stays
/// immutable and shared.
class OccupancyState {
  public:
    explicit OccupancyState(int n) : occupied_(static_cast<std::size_t>(n), 0) {}

    int size() const { return static_cast<int>(occupied_.size()); }
    int consumed_count() const { return consumed_; }
    bool full() const { return consumed_ == size(); }

    bool is_free(int pos) const { return occupied_[static_cast<std::size_t>(pos)] == 0; }

    /// True iff every position of b is unoccupied.
    bool is_free(const Block& b) const {
        for (int p = b.first; p <= b.last; ++p) {
            if (!is_free(p)) return false;
        }
        return true;
    }

    /// Marks b.first..b.last occupied. Throws std::invalid_argument if any
    /// position is already taken.
    void occupy(const Block& b);

  private:
    std::vector<std::uint8_t> occupied_;
    int consumed_ = 0;
};

/// Common substring graph of X with respect to Y. Vertices are the positions
/// of X; the edge blocks from vertex v are exactly [0, v, v+len-1] for
/// len = 1..out_length(v), i.e. the prefixes of X[v..] that occur somewhere
/// in Y (common substrings are closed under taking substrings). Each edge
/// block carries the list of matching Y blocks; edge blocks that induce the
/// same substring share one list.
///
/// Built once per instance in O(n^2) time and space via a longest-common-
/// extension table; immutable afterwards and safe to share across threads.
class CommonSubstringGraph {
  public:
    /// Throws std::invalid_argument when the strings are not related or empty.
    CommonSubstringGraph(std::string x, std::string y);

    int size() const { return n_; }
    const std::string& x() const { return x_; }
    const std::string& y() const { return y_; }

    /// Length of the longest edge block starting at vertex v (>= 1). This is
    /// also the out-degree of v, since edge lengths from v form 1..out_length.
    int out_length(int v) const { return out_length_[static_cast<std::size_t>(v)]; }

    int max_edge_length() const { return max_edge_length_; }

    std::size_t edge_count() const { return edge_offset_.back(); }

    bool is_edge(const Block& b) const {
        return b.id == kIdX && b.first >= 0 && b.first <= b.last && b.last < n_ &&
               b.length() <= out_length(b.first);
    }

    /// Dense index of an edge block in [0, edge_count); used to key the
    /// pheromone table. Throws std::invalid_argument for non-edges.
    std::size_t edge_index(const Block& b) const;

    Block edge_at(std::size_t index) const;

    /// Start positions in Y of the matches of edge block (v, len), ascending.
    std::span<const int> match_starts(int v, int len) const;

    /// All Y blocks whose substring equals substring(b); b must be an edge.
    std::vector<Block> match_list(const Block& b) const;

    /// Longest common prefix of X[i..] and Y[p..].
    int lce(int i, int p) const { return lce_[static_cast<std::size_t>(i) * (n_ + 1u) + static_cast<std::size_t>(p)]; }

    /// Longest substring of Y starting at p that occurs in X.
    int y_match_length(int p) const { return y_match_length_[static_cast<std::size_t>(p)]; }

  private:
    std::size_t dense_index(int v, int len) const {
        return edge_offset_[static_cast<std::size_t>(v)] + static_cast<std::size_t>(len - 1);
    }

    int n_ = 0;
    std::string x_;
    std::string y_;
    std::vector<int> lce_;             // (n+1) x (n+1), row-major
    std::vector<int> out_length_;      // per X position
    std::vector<int> y_match_length_;  // per Y position
    std::vector<std::size_t> edge_offset_;  // prefix sums of out_length_, size n+1
    int max_edge_length_ = 0;
    std::vector<int> match_list_id_;   // per edge, index into match_lists_
    std::vector<std::vector<int>> match_lists_;  // shared per distinct substring
};

/// Edge blocks from vertex v an ant may take next: the block must stay inside
/// the cyclic segment [v .. v_start-1 mod n] still to be covered, and at
/// least one of its matches must be fully unoccupied. Never empty at a legal
/// construction point (character counting between the rest of X and the free
/// positions of Y guarantees a single-character fallback).
/// Throws std::invalid_argument when occ is already full.
std::vector<Block> available_edges(const CommonSubstringGraph& g, const OccupancyState& occ,
                                   int v, int v_start);

/// Members of match_list(b) with no occupied position. May be empty.
std::vector<Block> free_matches(const CommonSubstringGraph& g, const OccupancyState& occ,
                                const Block& b);

/// Length of the longest fully-unoccupied Y block that contains m and whose
/// substring occurs in X. m itself qualifies, so the result is >= length(m).
/// m must be fully unoccupied.
int free_span(const CommonSubstringGraph& g, const OccupancyState& occ, const Block& m);

/// Minimum free_span over the free matches of edge block b. Throws
/// std::invalid_argument when b has no free match.
int min_span(const CommonSubstringGraph& g, const OccupancyState& occ, const Block& b);

}  // namespace mcsp
