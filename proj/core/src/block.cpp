#include "mcsp/block.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace mcsp {

namespace {

void require_same_id(const Block& a, const Block& b, const char* op) {
    if (a.id != b.id) {
        throw std::invalid_argument(std::string(op) + ": blocks refer to different strings");
    }
}

bool in_range(const Block& b, std::size_t n) {
    return b.first >= 0 && b.first <= b.last && static_cast<std::size_t>(b.last) < n;
}

}  // namespace

std::string to_string(const Block& b) {
    return "[" + std::to_string(b.id) + "," + std::to_string(b.first) + "," +
           std::to_string(b.last) + "]";
}

std::string_view substring(const Block& b, std::string_view s) {
    return s.substr(static_cast<std::size_t>(b.first), static_cast<std::size_t>(b.length()));
}

std::string_view substring_in(const Block& b, std::string_view x, std::string_view y) {
    return substring(b, b.id == kIdX ? x : y);
}

bool related(std::string_view x, std::string_view y) noexcept {
    if (x.size() != y.size()) return false;
    std::array<long, 256> counts{};
    for (unsigned char c : x) ++counts[c];
    for (unsigned char c : y) --counts[c];
    return std::all_of(counts.begin(), counts.end(), [](long c) { return c == 0; });
}

std::optional<Block> intersect(const Block& a, const Block& b) {
    require_same_id(a, b, "intersect");
    const int first = std::max(a.first, b.first);
    const int last = std::min(a.last, b.last);
    if (first > last) return std::nullopt;
    return Block{a.id, first, last};
}

std::vector<Block> unite(const Block& a, const Block& b) {
    require_same_id(a, b, "unite");
    const Block& lo = a.first <= b.first ? a : b;
    const Block& hi = a.first <= b.first ? b : a;
    if (hi.first <= lo.last) {
        return {Block{lo.id, lo.first, std::max(lo.last, hi.last)}};
    }
    return {lo, hi};
}

std::vector<Block> unite_into(std::vector<Block> list, const Block& b) {
    for (const Block& member : list) {
        require_same_id(member, b, "unite_into");
        if (member.overlaps(b)) {
            throw std::invalid_argument("unite_into: " + to_string(b) + " overlaps existing member " +
                                        to_string(member));
        }
    }
    auto pos = std::lower_bound(list.begin(), list.end(), b,
                                [](const Block& lhs, const Block& rhs) { return lhs.first < rhs.first; });
    pos = list.insert(pos, b);

    // Coalesce the inserted block with adjacent neighbours on either side.
    std::size_t i = static_cast<std::size_t>(pos - list.begin());
    if (i + 1 < list.size() && list[i].last + 1 == list[i + 1].first) {
        list[i].last = list[i + 1].last;
        list.erase(list.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    }
    if (i > 0 && list[i - 1].last + 1 == list[i].first) {
        list[i - 1].last = list[i].last;
        list.erase(list.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return list;
}

int span_in(const Block& b, std::span<const Block> list) {
    int best = 0;
    for (const Block& member : list) {
        if (member.contains(b)) best = std::max(best, member.length());
    }
    if (best == 0) {
        throw std::invalid_argument("span_in: no member of the list contains " + to_string(b));
    }
    return best;
}

std::string_view to_string(ValidationFailure f) {
    switch (f) {
        case ValidationFailure::none: return "none";
        case ValidationFailure::overlap: return "overlap";
        case ValidationFailure::gap: return "gap";
        case ValidationFailure::substring_mismatch: return "substring-mismatch";
        case ValidationFailure::length_mismatch: return "length-mismatch";
    }
    return "unknown";
}

ValidationResult validate_common_partition(const CommonPartition& cp,
                                           std::string_view x,
                                           std::string_view y) {
    auto fail = [](ValidationFailure reason) { return ValidationResult{false, reason}; };

    if (cp.partition.size() != cp.mapped.size()) return fail(ValidationFailure::length_mismatch);
    if (x.size() != y.size()) return fail(ValidationFailure::length_mismatch);

    for (const Block& b : cp.partition) {
        if (b.id != kIdX || !in_range(b, x.size())) return fail(ValidationFailure::gap);
    }
    for (const Block& b : cp.mapped) {
        if (b.id != kIdY || !in_range(b, y.size())) return fail(ValidationFailure::gap);
    }

    // Order pairs by X start; the pairing must survive the sort.
    std::vector<std::size_t> order(cp.partition.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return cp.partition[a].first < cp.partition[b].first;
    });

    // partition must tile X: consecutive, no overlap, no gap, full cover.
    int expected = 0;
    for (std::size_t k : order) {
        const Block& b = cp.partition[k];
        if (b.first < expected) return fail(ValidationFailure::overlap);
        if (b.first > expected) return fail(ValidationFailure::gap);
        expected = b.last + 1;
    }
    if (static_cast<std::size_t>(expected) != x.size()) return fail(ValidationFailure::gap);

    // mapped must tile Y as well: pairwise disjoint and covering.
    std::vector<Block> mapped_sorted = cp.mapped;
    std::sort(mapped_sorted.begin(), mapped_sorted.end(),
              [](const Block& a, const Block& b) { return a.first < b.first; });
    expected = 0;
    for (const Block& b : mapped_sorted) {
        if (b.first < expected) return fail(ValidationFailure::overlap);
        if (b.first > expected) return fail(ValidationFailure::gap);
        expected = b.last + 1;
    }
    if (static_cast<std::size_t>(expected) != y.size()) return fail(ValidationFailure::gap);

    for (std::size_t k = 0; k < cp.partition.size(); ++k) {
        if (substring(cp.partition[k], x) != substring(cp.mapped[k], y)) {
            return fail(ValidationFailure::substring_mismatch);
        }
    }
    return ValidationResult{true, ValidationFailure::none};
}

}  // namespace mcsp
