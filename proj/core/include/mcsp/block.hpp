#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcsp {

inline constexpr int kIdX = 0;
inline constexpr int kIdY = 1;

/// Contiguous interval of one input string: positions [first, last], both
/// inclusive. id selects the string (0 for X, 1 for Y). Real blocks are
/// never empty; "no block" is expressed with std::optional or an empty list.
struct Block {
    int id = kIdX;
    int first = 0;
    int last = 0;

    int length() const { return last - first + 1; }

    bool contains(const Block& other) const {
        return id == other.id && first <= other.first && other.last <= last;
    }

    bool overlaps(const Block& other) const {
        return id == other.id && first <= other.last && other.first <= last;
    }

    friend auto operator<=>(const Block&, const Block&) = default;
};

std::string to_string(const Block& b);

/// Substring of s induced by b. The caller passes the string b refers to.
std::string_view substring(const Block& b, std::string_view s);

/// Selects x or y by b.id and returns substring(b, ...).
std::string_view substring_in(const Block& b, std::string_view x, std::string_view y);

/// True iff x and y contain every character the same number of times
/// (equal multisets; implies equal length). Empty strings are related.
bool related(std::string_view x, std::string_view y) noexcept;

/// Interval intersection of two blocks with the same id; nullopt when
/// disjoint. Commutative and idempotent. Throws std::invalid_argument on
/// mismatched ids.
std::optional<Block> intersect(const Block& a, const Block& b);

/// Union of two blocks with the same id: a single merged block when they
/// overlap, otherwise both blocks ordered by start position. Adjacent but
/// non-overlapping blocks stay split here; unite_into coalesces adjacency
/// when accumulating a cover.
std::vector<Block> unite(const Block& a, const Block& b);

/// Inserts b into a sorted, pairwise-disjoint list, merging with neighbours
/// it touches (adjacent or met through a chain of adjacencies). The result
/// collapses to a single block once the list becomes contiguous. Throws
/// std::invalid_argument if b overlaps an existing member or ids mismatch.
std::vector<Block> unite_into(std::vector<Block> list, const Block& b);

/// Length of the longest member of list that contains b (a block contains
/// itself). Throws std::invalid_argument when no member contains b.
int span_in(const Block& b, std::span<const Block> list);

/// A candidate common partition: paired block lists over X and Y.
/// partition[k] and mapped[k] are supposed to induce the same substring.
struct CommonPartition {
    std::vector<Block> partition;  // blocks of X
    std::vector<Block> mapped;     // blocks of Y, position-aligned

    std::size_t size() const { return partition.size(); }
};

enum class ValidationFailure {
    none,
    overlap,
    gap,
    substring_mismatch,
    length_mismatch,
};

std::string_view to_string(ValidationFailure f);

struct ValidationResult {
    bool valid = false;
    ValidationFailure reason = ValidationFailure::none;

    explicit operator bool() const { return valid; }
};

/// Checks that cp is a common partition of (x, y): partition tiles X,
/// mapped blocks are pairwise disjoint and cover Y, and each pair induces
/// the same substring. Never throws; failures carry a reason code.
/// Blocks with bad bounds or ids are reported as gap.
ValidationResult validate_common_partition(const CommonPartition& cp,
                                           std::string_view x,
                                           std::string_view y);

}  // namespace mcsp
