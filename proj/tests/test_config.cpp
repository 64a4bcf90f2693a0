#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "mcsp/config.hpp"
#include "mcsp/mmas.hpp"

using namespace mcsp;

TEST_CASE("parse_config") {
    SUBCASE("keys, comments and whitespace") {
        std::istringstream in(
            "# solver settings\n"
            "mmas.alpha = 2\n"
            "  mmas.beta=10   # inline comment\n"
            "\n"
            "heuristic.a = 1.5\n");
        const ConfigMap config = parse_config(in);
        REQUIRE(config.size() == 3);
        CHECK(config.at("mmas.alpha") == "2");
        CHECK(config.at("mmas.beta") == "10");
        CHECK(config.at("heuristic.a") == "1.5");
    }
    SUBCASE("later occurrence wins") {
        std::istringstream in("mmas.alpha = 1\nmmas.alpha = 3\n");
        CHECK(parse_config(in).at("mmas.alpha") == "3");
    }
    SUBCASE("malformed lines name their line number") {
        std::istringstream missing_eq("mmas.alpha = 1\nnonsense\n");
        CHECK_THROWS_WITH_AS(parse_config(missing_eq), "config line 2: expected key = value",
                             std::runtime_error);
        std::istringstream empty_key(" = 3\n");
        CHECK_THROWS_WITH_AS(parse_config(empty_key), "config line 1: expected key = value",
                             std::runtime_error);
        std::istringstream empty_value("mmas.alpha =   # nothing\n");
        CHECK_THROWS_WITH_AS(parse_config(empty_value),
                             "config line 1: empty value for 'mmas.alpha'", std::runtime_error);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_config("/nonexistent/solver.conf"), std::runtime_error);
    }
}

TEST_CASE("apply_mmas_config") {
    SUBCASE("every recognized key lands in its field") {
        std::istringstream in(
            "mmas.alpha = 3\n"
            "mmas.beta = 5\n"
            "mmas.epsilon = 0.02\n"
            "mmas.n_ants = 60\n"
            "mmas.p_best = 0.5\n"
            "mmas.init_pheromone = 8\n"
            "mmas.max_time_secs = 30\n"
            "mmas.max_stale_iters = 250\n"
            "mmas.max_iterations = 1000\n"
            "mmas.n_runs = 3\n"
            "mmas.seed = 12345\n"
            "mmas.n_threads = 4\n"
            "mmas.random_start = true\n"
            "mmas.avg_choices = 7.5\n"
            "heuristic.a = 2\n"
            "heuristic.b = 0\n");
        MmasParams params;
        apply_mmas_config(parse_config(in), params);
        CHECK(params.alpha == 3.0);
        CHECK(params.beta == 5.0);
        CHECK(params.epsilon == 0.02);
        CHECK(params.n_ants == 60);
        CHECK(params.p_best == 0.5);
        CHECK(params.init_pheromone == 8.0);
        CHECK(params.max_time_secs == 30.0);
        CHECK(params.max_stale_iters == 250);
        CHECK(params.max_iterations == 1000);
        CHECK(params.n_runs == 3);
        CHECK(params.seed == 12345);
        CHECK(params.n_threads == 4);
        CHECK(params.random_start);
        CHECK(params.avg_choices_override == 7.5);
        CHECK(params.weights.a == 2.0);
        CHECK(params.weights.b == 0.0);
        CHECK_NOTHROW(params.validate());
    }
    SUBCASE("untouched fields keep their defaults") {
        MmasParams params;
        apply_mmas_config({{"mmas.alpha", "4"}}, params);
        CHECK(params.alpha == 4.0);
        CHECK(params.beta == 10.0);
        CHECK(params.n_ants == 100);
    }
    SUBCASE("unknown key") {
        MmasParams params;
        CHECK_THROWS_WITH_AS(apply_mmas_config({{"mmas.gamma", "1"}}, params),
                             "unknown config key: mmas.gamma", std::invalid_argument);
    }
    SUBCASE("unparsable values") {
        MmasParams params;
        CHECK_THROWS_AS(apply_mmas_config({{"mmas.alpha", "fast"}}, params),
                        std::invalid_argument);
        CHECK_THROWS_AS(apply_mmas_config({{"mmas.n_ants", "3.5"}}, params),
                        std::invalid_argument);
        CHECK_THROWS_AS(apply_mmas_config({{"mmas.n_ants", "10x"}}, params),
                        std::invalid_argument);
        CHECK_THROWS_AS(apply_mmas_config({{"mmas.seed", "-1"}}, params), std::invalid_argument);
        CHECK_THROWS_AS(apply_mmas_config({{"mmas.random_start", "maybe"}}, params),
                        std::invalid_argument);
    }
    SUBCASE("range checking stays with validate") {
        MmasParams params;
        apply_mmas_config({{"mmas.epsilon", "2.0"}}, params);
        CHECK(params.epsilon == 2.0);
        CHECK_THROWS_AS(params.validate(), std::invalid_argument);
    }
}
