#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mcsp {

struct Instance {
    std::string id;
    std::string x;
    std::string y;
};

// Uniform string over {A,C,G,T} paired with a seeded shuffle of itself, so the
// two sides are related by construction. Deterministic for a fixed seed.
Instance generate_instance(std::string id, int length, std::uint64_t seed);

// Pairs an existing sequence with a seeded shuffle of itself.
Instance shuffled_instance(std::string id, std::string sequence, std::uint64_t seed);

struct FastaRecord {
    std::string id;  // first whitespace-delimited token after '>'
    std::string sequence;
};

// Parses FASTA text: '>' headers, sequence lines concatenated and upper-cased.
// Malformed input throws std::runtime_error naming the offending line; input
// without any record returns an empty list and warns on stderr.
std::vector<FastaRecord> parse_fasta(std::istream& in);
std::vector<FastaRecord> load_fasta(const std::string& path);

// Keeps records whose sequence length lies in [min_length, max_length].
std::vector<FastaRecord> filter_by_length(std::vector<FastaRecord> records,
                                          std::size_t min_length, std::size_t max_length);

// Instance file format: two newline-terminated lines, X then Y.
void write_instance(std::ostream& out, const Instance& instance);
Instance read_instance(std::istream& in, std::string id);

Instance load_instance(const std::string& path);
void save_instance(const std::string& path, const Instance& instance);

}  // namespace mcsp
