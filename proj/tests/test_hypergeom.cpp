#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rulelab/hypergeom.hpp"
#include "rulelab/rng.hpp"

#include "oracle.hpp"

using namespace rulelab;

TEST_CASE("pmf on a fully enumerable case") {
    // cX=2, cY=3, m=5: all C(5,2)=10 placements, 6 of which overlap once.
    const HyperGeom h(2, 3, 5);
    CHECK(h.pmf(1) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(h.pmf(0) == doctest::Approx(oracle::hyper_pmf(0, 2, 3, 5)).epsilon(1e-12));
    CHECK(h.pmf(2) == doctest::Approx(oracle::hyper_pmf(2, 2, 3, 5)).epsilon(1e-12));
}

TEST_CASE("degenerate margins") {
    const HyperGeom none(0, 57, 100);
    CHECK(none.pmf(0) == doctest::Approx(1.0));
    CHECK(none.cdf(0) == 1.0);
    const HyperGeom all(10, 10, 10);
    CHECK(all.lower_bound() == 10);
    CHECK(all.pmf(10) == doctest::Approx(1.0));
    CHECK(all.quantile(0.5) == 10);
}

TEST_CASE("invalid margins are rejected") {
    CHECK_THROWS(HyperGeom(-1, 2, 5));
    CHECK_THROWS(HyperGeom(6, 2, 5));
    CHECK_THROWS(HyperGeom(2, 2, -1));
}

TEST_CASE("tail boundaries") {
    const HyperGeom h(100, 100, 10000);
    CHECK(h.tail_gt(-1) == 1.0);
    CHECK(h.tail_gt(100) == 0.0);
    CHECK(h.tail_gt(1) == doctest::Approx(0.2642163456525709).epsilon(1e-10));
}

TEST_CASE("pmf sums to one across scales") {
    for (const auto& [c_x, c_y, m] :
         {std::tuple<long long, long long, long long>{7, 5, 12},
          {100, 100, 10000},
          {2500, 1300, 9835},
          {49999, 30000, 50000}}) {
        const HyperGeom h(c_x, c_y, m);
        double sum = 0.0;
        for (long long r = h.lower_bound(); r <= h.upper_bound(); ++r)
            sum += h.pmf(r);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("cdf and tail match the long double oracle") {
    Rng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const long long m = 1 + static_cast<long long>(rng.uniform_below(200));
        const long long c_x = static_cast<long long>(rng.uniform_below(m + 1));
        const long long c_y = static_cast<long long>(rng.uniform_below(m + 1));
        const HyperGeom h(c_x, c_y, m);
        for (long long r = h.lower_bound(); r <= h.upper_bound(); ++r) {
            const double want_cdf =
                static_cast<double>(oracle::hyper_cdf(r, c_x, c_y, m));
            const double want_tail =
                static_cast<double>(oracle::hyper_tail_gt(r, c_x, c_y, m));
            if (want_cdf == 0.0)
                CHECK(h.cdf(r) == 0.0);
            else
                CHECK(h.cdf(r) ==
                      doctest::Approx(want_cdf).epsilon(1e-9).scale(want_cdf));
            if (want_tail == 0.0)
                CHECK(h.tail_gt(r) == 0.0);
            else
                CHECK(h.tail_gt(r) ==
                      doctest::Approx(want_tail).epsilon(1e-9).scale(want_tail));
        }
    }
}

TEST_CASE("tiny upper tails keep relative precision") {
    // Deep upper tail where 1 - cdf would cancel to zero.
    const HyperGeom h(200, 200, 50000);
    const double tail = h.tail_gt(30);
    CHECK(tail > 0.0);
    CHECK(tail < 1e-20);
    const double direct =
        static_cast<double>(oracle::hyper_tail_gt(30, 200, 200, 50000));
    CHECK(tail == doctest::Approx(direct).epsilon(1e-9).scale(direct));
}

TEST_CASE("quantile: frozen value and oracle agreement") {
    const HyperGeom h(100, 100, 10000);
    CHECK(h.quantile(0.99) == 4);  // frozen from a 50-digit CDF scan
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const long long m = 1 + static_cast<long long>(rng.uniform_below(150));
        const long long c_x = static_cast<long long>(rng.uniform_below(m + 1));
        const long long c_y = static_cast<long long>(rng.uniform_below(m + 1));
        const double delta = 0.01 + 0.98 * rng.uniform();
        CHECK(HyperGeom(c_x, c_y, m).quantile(delta) ==
              oracle::hyper_quantile(delta, c_x, c_y, m));
    }
}

TEST_CASE("quantile is non-decreasing in delta") {
    const HyperGeom h(80, 120, 900);
    long long prev = h.lower_bound();
    for (double delta = 0.05; delta < 1.0; delta += 0.05) {
        const long long q = h.quantile(delta);
        CHECK(q >= prev);
        prev = q;
    }
    CHECK_THROWS(h.quantile(0.0));
    CHECK_THROWS(h.quantile(1.0));
}

TEST_CASE("quantile satisfies both defining inequalities") {
    Rng rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const long long m = 1 + static_cast<long long>(rng.uniform_below(300));
        const long long c_x = static_cast<long long>(rng.uniform_below(m + 1));
        const long long c_y = static_cast<long long>(rng.uniform_below(m + 1));
        const double delta = 0.01 + 0.98 * rng.uniform();
        const HyperGeom h(c_x, c_y, m);
        const long long q = h.quantile(delta);
        CHECK(h.cdf(q - 1) <= delta);           // P(C < q) <= delta
        CHECK(h.tail_gt(q) <= 1.0 - delta + 1e-12);  // P(C > q) <= 1 - delta
    }
}
