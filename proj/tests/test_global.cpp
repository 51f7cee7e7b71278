#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <diagdensity/global.hpp>

#include "oracles.hpp"

#include <cmath>

using namespace diagdensity;
using local::FormSpec;

TEST_CASE("prime_cutoff spec examples")
{
    CHECK(global::prime_cutoff(40, 3, 4.0) ==
          doctest::Approx(std::pow(40.0, 1.5) / 4.0).epsilon(1e-12));
    CHECK(global::prime_cutoff(7, 2, 1.0) == doctest::Approx(49.0).epsilon(1e-12));
    CHECK(global::prime_cutoff(100, 3, 10.0) == doctest::Approx(100.0).epsilon(1e-9));
}

TEST_CASE("bound_alpha: k = 40 keeps only p = 41 under the default cutoff")
{
    global::GlobalBoundConfig cfg; // R = 4, cutoff on
    cfg.prime_limit = 1000;
    auto rep = global::bound_alpha(40, 3, cfg);
    REQUIRE(rep.contributing.size() == 1);
    CHECK(rep.contributing[0].first == 41);
    CHECK(rep.log_inv_density_lower == doctest::Approx(std::log(41.0 / 8.0)).epsilon(1e-12));
    CHECK(rep.density_upper == doctest::Approx(8.0 / 41.0).epsilon(1e-12));
}

TEST_CASE("bound_alpha: k = 6 has no primes below its cutoff")
{
    global::GlobalBoundConfig cfg;
    cfg.prime_limit = 1000;
    auto rep = global::bound_alpha(6, 3, cfg);
    CHECK(rep.contributing.empty());
    CHECK(rep.log_inv_density_lower == 0.0);
    CHECK(rep.density_upper == 1.0);
}

TEST_CASE("bound_alpha without cutoff: k = 10 keeps exactly p = 11")
{
    global::GlobalBoundConfig cfg;
    cfg.prime_limit = 1000;
    cfg.apply_cutoff = false;
    auto rep = global::bound_alpha(10, 3, cfg);
    REQUIRE(rep.contributing.size() == 1);
    CHECK(rep.contributing[0].first == 11);
    CHECK(rep.log_inv_density_lower == doctest::Approx(std::log(11.0 / 8.0)).epsilon(1e-12));
}

TEST_CASE("bound_exact: the p = 41 term of k = 40 beats its alpha term")
{
    global::GlobalBoundConfig cfg;
    cfg.prime_limit = 50;
    auto rep = global::bound_exact(FormSpec({1, 1, 1}, 40), cfg);
    auto it = std::find_if(rep.contributing.begin(), rep.contributing.end(),
                           [](const auto& e) { return e.first == 41; });
    REQUIRE(it != rep.contributing.end());
    CHECK(it->second == doctest::Approx(std::log(41.0 / 4.0)).epsilon(1e-12));
    CHECK(it->second > std::log(41.0 / 8.0));
}

TEST_CASE("bound_exact: surjective forms contribute nothing")
{
    global::GlobalBoundConfig cfg;
    cfg.prime_limit = 100;
    CHECK(global::bound_exact(FormSpec({1, 1, -1}, 2), cfg).log_inv_density_lower == 0.0);
    CHECK(global::bound_exact(FormSpec({1, 1, 1}, 1), cfg).log_inv_density_lower == 0.0);
}

TEST_CASE("conditional_reference spec examples")
{
    CHECK(global::conditional_reference(40, 3) ==
          doctest::Approx(std::sqrt(40.0) / std::log(40.0)).epsilon(1e-12));
    CHECK(global::conditional_reference(8, 2) ==
          doctest::Approx(8.0 / std::log(8.0)).epsilon(1e-12));
    CHECK(global::conditional_reference(3, 3) ==
          doctest::Approx(std::sqrt(3.0) / std::log(3.0)).epsilon(1e-12));
    CHECK(global::conditional_reference(40, 3) == doctest::Approx(1.7145).epsilon(1e-4));
    CHECK_THROWS_AS(global::conditional_reference(2, 3), std::invalid_argument);
}

TEST_CASE("report: density_upper is exp(-lower), terms positive")
{
    global::GlobalBoundConfig cfg;
    cfg.prime_limit = 300;
    cfg.apply_cutoff = false;
    for (std::uint64_t k : {10, 12, 40, 100}) {
        auto rep = global::bound_alpha(k, 3, cfg);
        CHECK(std::abs(rep.density_upper - std::exp(-rep.log_inv_density_lower)) <= 1e-12);
        for (const auto& [p, term] : rep.contributing) {
            CHECK(term > 0.0);
            CHECK((p - 1) % k == 0);
        }
        CHECK(rep.exact_zero == false);
    }
}

TEST_CASE("monotonicity in prime_limit")
{
    double prev = -1.0;
    for (std::uint64_t limit : {20, 50, 100, 300, 600}) {
        global::GlobalBoundConfig cfg;
        cfg.prime_limit = limit;
        auto rep = global::bound_exact(FormSpec({1, 1, 1}, 40), cfg);
        CHECK(rep.log_inv_density_lower >= prev);
        prev = rep.log_inv_density_lower;
    }
}

TEST_CASE("exact bound dominates the alpha bound term by term")
{
    global::GlobalBoundConfig cfg;
    cfg.prime_limit = 200;
    cfg.apply_cutoff = false;
    for (std::uint64_t k : {10, 12, 40}) {
        auto alpha = global::bound_alpha(k, 3, cfg);
        auto exact = global::bound_exact(FormSpec({1, 1, 1}, k), cfg);
        for (const auto& [p, term] : alpha.contributing) {
            auto it = std::find_if(exact.contributing.begin(), exact.contributing.end(),
                                   [p = p](const auto& e) { return e.first == p; });
            REQUIRE(it != exact.contributing.end());
            CHECK(it->second >= term - 1e-12);
        }
    }
}

TEST_CASE("density_upper at k = p-1 obeys the 2^s/p observation")
{
    for (std::uint64_t p : {13, 41, 97, 199}) {
        for (unsigned s : {3u, 4u}) {
            std::vector<std::int64_t> ones(s, 1);
            global::GlobalBoundConfig cfg;
            cfg.prime_limit = p;
            auto rep = global::bound_exact(FormSpec(ones, p - 1), cfg);
            CHECK(rep.density_upper <= std::pow(2.0, s) / static_cast<double>(p) + 1e-12);
        }
    }
}

TEST_CASE("config validation")
{
    global::GlobalBoundConfig cfg;
    cfg.R = 0.5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.R = 4.0;
    cfg.prime_limit = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
