#include "mcsp/config.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "mcsp/mmas.hpp"

namespace mcsp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

[[noreturn]] void config_error(int line_no, const std::string& what) {
    std::ostringstream msg;
    msg << "config line " << line_no << ": " << what;
    throw std::runtime_error(msg.str());
}

double to_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size()) {
        throw std::invalid_argument("config value for " + key + " is not a number: " + value);
    }
    return v;
}

int to_int(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || v < INT32_MIN || v > INT32_MAX) {
        throw std::invalid_argument("config value for " + key + " is not an integer: " + value);
    }
    return static_cast<int>(v);
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || (!value.empty() && value.front() == '-')) {
        throw std::invalid_argument("config value for " + key +
                                    " is not an unsigned integer: " + value);
    }
    return v;
}

bool to_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw std::invalid_argument("config value for " + key + " is not a boolean: " + value);
}

}  // namespace

ConfigMap parse_config(std::istream& in) {
    ConfigMap config;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body{line};
        if (const auto hash = body.find('#'); hash != std::string_view::npos) {
            body = body.substr(0, hash);
        }
        body = trim(body);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) config_error(line_no, "expected key = value");
        const std::string_view key = trim(body.substr(0, eq));
        const std::string_view value = trim(body.substr(eq + 1));
        if (key.empty()) config_error(line_no, "expected key = value");
        if (value.empty()) config_error(line_no, "empty value for '" + std::string(key) + "'");
        config[std::string(key)] = std::string(value);
    }
    return config;
}

ConfigMap load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse_config(in);
}

void apply_mmas_config(const ConfigMap& config, MmasParams& params) {
    for (const auto& [key, value] : config) {
        if (key == "mmas.alpha") {
            params.alpha = to_double(key, value);
        } else if (key == "mmas.beta") {
            params.beta = to_double(key, value);
        } else if (key == "mmas.epsilon") {
            params.epsilon = to_double(key, value);
        } else if (key == "mmas.n_ants") {
            params.n_ants = to_int(key, value);
        } else if (key == "mmas.p_best") {
            params.p_best = to_double(key, value);
        } else if (key == "mmas.init_pheromone") {
            params.init_pheromone = to_double(key, value);
        } else if (key == "mmas.max_time_secs") {
            params.max_time_secs = to_double(key, value);
        } else if (key == "mmas.max_stale_iters") {
            params.max_stale_iters = to_int(key, value);
        } else if (key == "mmas.max_iterations") {
            params.max_iterations = to_int(key, value);
        } else if (key == "mmas.n_runs") {
            params.n_runs = to_int(key, value);
        } else if (key == "mmas.seed") {
            params.seed = to_u64(key, value);
        } else if (key == "mmas.n_threads") {
            params.n_threads = to_int(key, value);
        } else if (key == "mmas.random_start") {
            params.random_start = to_bool(key, value);
        } else if (key == "mmas.avg_choices") {
            params.avg_choices_override = to_double(key, value);
        } else if (key == "heuristic.a") {
            params.weights.a = to_double(key, value);
        } else if (key == "heuristic.b") {
            params.weights.b = to_double(key, value);
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
}

}  // namespace mcsp
