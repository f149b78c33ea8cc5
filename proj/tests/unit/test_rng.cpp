#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "gcrop/core/rng.hpp"

using gcrop::RngStream;

TEST_CASE("same seed reproduces the sequence exactly") {
    RngStream a(1234), b(1234);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("different seeds diverge") {
    RngStream a(1), b(2);
    int differing = 0;
    for (int i = 0; i < 32; ++i)
        if (a.next_u64() != b.next_u64()) ++differing;
    CHECK(differing > 28);
}

TEST_CASE("fork does not advance the parent and children are distinct") {
    RngStream parent(7);
    RngStream before = parent;
    RngStream c0 = parent.fork(0);
    RngStream c1 = parent.fork(1);
    CHECK(parent.next_u64() == before.next_u64());
    CHECK(c0.next_u64() != c1.next_u64());

    // Same id twice gives the same child.
    RngStream again = RngStream(7).fork(0);
    RngStream c0b = RngStream(7).fork(0);
    CHECK(again.next_u64() == c0b.next_u64());
}

TEST_CASE("uniform stays in [0, 1) and covers the range") {
    RngStream rng(42);
    double lo = 1.0, hi = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    CHECK(lo < 0.01);
    CHECK(hi > 0.99);
}

TEST_CASE("uniform_int hits every value of a small range") {
    RngStream rng(5);
    std::set<std::int64_t> seen;
    for (int i = 0; i < 1000; ++i) {
        const auto v = rng.uniform_int(-2, 3);
        CHECK(v >= -2);
        CHECK(v <= 3);
        seen.insert(v);
    }
    CHECK(seen.size() == 6);
}

TEST_CASE("uniform_int degenerate range") {
    RngStream rng(9);
    for (int i = 0; i < 10; ++i) CHECK(rng.uniform_int(4, 4) == 4);
}

TEST_CASE("normal moments match a standard Gaussian") {
    RngStream rng(2024);
    const int n = 100000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        sum += z;
        sum_sq += z * z;
    }
    const double mean = sum / n;
    const double var = sum_sq / n - mean * mean;
    CHECK(std::abs(mean) < 5.0 / std::sqrt(static_cast<double>(n)));
    CHECK(var == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("normal_pair components are uncorrelated") {
    RngStream rng(77);
    const int n = 100000;
    double sum_xy = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto [x, y] = rng.normal_pair();
        sum_xy += x * y;
    }
    CHECK(std::abs(sum_xy / n) < 0.02);
}
