#include "mcsp/instances.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "mcsp/rng.hpp"

namespace mcsp {

namespace {

void strip_carriage_return(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

[[noreturn]] void fasta_error(int line_no, const std::string& what) {
    std::ostringstream msg;
    msg << "fasta line " << line_no << ": " << what;
    throw std::runtime_error(msg.str());
}

}  // namespace

Instance generate_instance(std::string id, int length, std::uint64_t seed) {
    if (length <= 0) throw std::invalid_argument("instance length must be positive");
    static constexpr char kBases[] = {'A', 'C', 'G', 'T'};
    Rng rng(seed);
    std::string x(static_cast<std::size_t>(length), '\0');
    for (char& c : x) c = kBases[rng.below(4)];
    std::string y = x;
    rng.shuffle(y);
    return {std::move(id), std::move(x), std::move(y)};
}

Instance shuffled_instance(std::string id, std::string sequence, std::uint64_t seed) {
    if (sequence.empty()) throw std::invalid_argument("instance length must be positive");
    Rng rng(seed);
    std::string y = sequence;
    rng.shuffle(y);
    return {std::move(id), std::move(sequence), std::move(y)};
}

std::vector<FastaRecord> parse_fasta(std::istream& in) {
    std::vector<FastaRecord> records;
    bool in_record = false;
    int header_line = 0;
    std::string line;
    int line_no = 0;

    auto flush = [&] {
        if (in_record && records.back().sequence.empty()) {
            fasta_error(header_line, "record '" + records.back().id + "' has no sequence");
        }
    };

    while (std::getline(in, line)) {
        ++line_no;
        strip_carriage_return(line);
        if (line.empty()) continue;
        if (line.front() == '>') {
            flush();
            std::istringstream header(line.substr(1));
            std::string id;
            header >> id;
            if (id.empty()) fasta_error(line_no, "empty header");
            records.push_back({std::move(id), ""});
            in_record = true;
            header_line = line_no;
            continue;
        }
        if (!in_record) fasta_error(line_no, "sequence data before any '>' header");
        for (char c : line) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (!std::isalpha(static_cast<unsigned char>(c))) {
                fasta_error(line_no, std::string("invalid character '") + c + "' in sequence");
            }
            records.back().sequence.push_back(
                static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        }
    }
    flush();
    if (records.empty()) std::cerr << "warning: no FASTA records found\n";
    return records;
}

std::vector<FastaRecord> load_fasta(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open FASTA file: " + path);
    return parse_fasta(in);
}

std::vector<FastaRecord> filter_by_length(std::vector<FastaRecord> records,
                                          std::size_t min_length, std::size_t max_length) {
    if (min_length > max_length) throw std::invalid_argument("empty length range");
    std::erase_if(records, [&](const FastaRecord& r) {
        return r.sequence.size() < min_length || r.sequence.size() > max_length;
    });
    return records;
}

void write_instance(std::ostream& out, const Instance& instance) {
    out << instance.x << '\n' << instance.y << '\n';
}

Instance read_instance(std::istream& in, std::string id) {
    std::string x;
    std::string y;
    if (!std::getline(in, x) || !std::getline(in, y)) {
        throw std::runtime_error("instance file must contain two lines");
    }
    strip_carriage_return(x);
    strip_carriage_return(y);
    return {std::move(id), upper(std::move(x)), upper(std::move(y))};
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    return read_instance(in, path);
}

void save_instance(const std::string& path, const Instance& instance) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write instance file: " + path);
    write_instance(out, instance);
    if (!out.flush()) throw std::runtime_error("failed writing instance file: " + path);
}

}  // namespace mcsp
