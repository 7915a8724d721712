#include <doctest.h>

#include "paving/combinatorics.hpp"
#include "paving/errors.hpp"
#include "paving/subsets.hpp"

using namespace paving;

TEST_CASE("binomial basics and conventions") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
    CHECK_THROWS_AS(binomial(-1, 0), validation_error);
}

TEST_CASE("Pascal recurrence, exact integers") {
    for (int n = 1; n <= 64; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("central binomial bounds hold on the whole grid") {
    for (int n = 1; n <= 64; ++n) {
        auto rep = check_central_bounds(n);
        CAPTURE(n);
        CHECK(rep.lower.ok);
        CHECK(rep.upper.ok);
    }
}

TEST_CASE("central bounds: upper side values") {
    // upper bound = C + margin; reference values from extended-precision
    // evaluation of sqrt(2/pi) 2^n / sqrt(n)
    auto rep2 = check_central_bounds(2);
    CHECK(2.0 + rep2.upper.margin == doctest::Approx(2.2568).epsilon(1e-4));
    auto rep5 = check_central_bounds(5);
    CHECK(10.0 + rep5.upper.margin == doctest::Approx(11.4186).epsilon(1e-4));
    // n=1: the lower bound degenerates to 0 <= 1
    auto rep1 = check_central_bounds(1);
    CHECK(rep1.lower.ok);
    CHECK(rep1.lower.margin == doctest::Approx(1.0));
}

TEST_CASE("comparison bound for shrunken central binomials") {
    auto rep = check_compare_bound(4, 2);
    CHECK(rep.ok);
    CHECK(2.0 + rep.margin == doctest::Approx(2.8284).epsilon(1e-4));
    rep = check_compare_bound(3, 1);
    CHECK(rep.ok);
    CHECK(2.0 + rep.margin == doctest::Approx(2.7557).epsilon(1e-4));
    CHECK(check_compare_bound(5, 0).ok);
    CHECK_THROWS_AS(check_compare_bound(5, 5), validation_error);
    CHECK_THROWS_AS(check_compare_bound(5, -1), validation_error);

    for (int n = 2; n <= 64; ++n)
        for (int m = 0; m < n; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(check_compare_bound(n, m).ok);
        }
}

TEST_CASE("deviation ratio near 1 for small k") {
    CHECK(deviation_ratio(64, 0) > 0.95);
    CHECK(deviation_ratio(64, 0) < 1.05);
    CHECK(deviation_ratio(64, 1) > 0.95);
    CHECK(deviation_ratio(64, 1) < 1.05);
    CHECK(deviation_ratio(64, 4) > 0.90);
    CHECK(deviation_ratio(64, 4) < 1.10);
    CHECK_THROWS_AS(deviation_ratio(8, 100), validation_error);
}

TEST_CASE("f_kappa under base-2 logarithms") {
    CHECK(f_kappa(1.0 / 5) < 1.0);
    CHECK(f_kappa(1.0 / 13) < 0.48);
    CHECK(f_kappa(1.0 / 5) == doctest::Approx(0.9532).epsilon(1e-3));
    CHECK_THROWS_AS(f_kappa(0.0), validation_error);
    CHECK_THROWS_AS(f_kappa(-1.0), validation_error);
    // increasing on (0, 2e)
    double prev = 0.0;
    for (double kappa = 0.05; kappa < 2 * 2.71828; kappa += 0.05) {
        CHECK(f_kappa(kappa) > prev);
        prev = f_kappa(kappa);
    }
}

TEST_CASE("rank window") {
    auto w = rank_window(16, 1.0);
    CHECK(w.lo == 4);
    CHECK(w.hi == 12);
    w = rank_window(4, 1.0);
    CHECK(w.lo == 0);
    CHECK(w.hi == 4);
    w = rank_window(100, 1.0);
    CHECK(w.lo == 40);
    CHECK(w.hi == 60);
    w = rank_window(8, 0.6);
    CHECK(w.lo == 3);
    CHECK(w.hi == 5);
    CHECK(w.contains(4));
    CHECK(!w.contains(2));
}

TEST_CASE("subset mask helpers") {
    CHECK(format_subset(0) == "{}");
    CHECK(format_subset(make_subset(4, {1, 3}).bits) == "{1,3}");
    CHECK(elements_of(make_subset(7, {2, 7}).bits) == std::vector<int>{2, 7});
    CHECK(all_r_subsets(4, 2).size() == 6);
    CHECK(all_r_subsets(4, 0) == std::vector<Mask>{0});
    CHECK(all_r_subsets(4, 5).empty());
    auto subs = all_r_subsets(5, 3);
    CHECK(subs.size() == 10);
    CHECK(std::is_sorted(subs.begin(), subs.end()));
    for (Mask m : subs) CHECK(card(m) == 3);
}
