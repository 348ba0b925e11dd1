#include <doctest.h>

#include "sixstate/rates.hpp"

using namespace sixstate;

TEST_CASE("binary entropy") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.110028) == doctest::Approx(0.5).epsilon(1e-4));
    CHECK(binary_entropy(0.3) == doctest::Approx(binary_entropy(0.7)).epsilon(1e-15));
    CHECK_THROWS_AS(binary_entropy(-0.1), DomainError);
    CHECK_THROWS_AS(binary_entropy(1.1), DomainError);
}

TEST_CASE("h12") {
    CHECK(h12(0.0) == 0.0);
    CHECK(h12(1.0 / 3.0) == doctest::Approx(0.874185).epsilon(1e-6));
    const double root =
        bisect_root([](double e) { return h12(e) - (1.0 - binary_entropy(e)); }, 0.05, 0.3,
                    1e-10);
    CHECK(root == doctest::Approx(0.12619).epsilon(5e-4));
    CHECK_THROWS_AS(h12(0.6), DomainError);
}

TEST_CASE("h3") {
    CHECK(h3(0.2, 0.2) == doctest::Approx(h12(0.2)).epsilon(1e-13));
    CHECK(h3(0.25, 1.0 / 3.0) == doctest::Approx(0.802728).epsilon(1e-6));
    CHECK(h3(0.75, 0.5) == doctest::Approx(0.688722).epsilon(1e-6));
    CHECK(h3(0.75, 0.5) == doctest::Approx(0.75 * binary_entropy(2.0 / 3.0)).epsilon(1e-13));
    for (int i = 1; i < 100; ++i) {
        const double e = 0.005 * i;
        CHECK(h3(e, e) == doctest::Approx(h12(e)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(h3(0.1, 0.9), DomainError);
}

TEST_CASE("region") {
    const SquashResult sq = construct_squash_y();
    const ErrorPoint v1 = region_map({1.0, 1.0, -1.0}, sq);
    CHECK(v1.e_b == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(v1.e_y == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    const ErrorPoint v2 = region_map({1.0, 1.0, 1.0}, sq);
    CHECK(v2.e_b == doctest::Approx(7.0 / 12.0).epsilon(1e-12));
    CHECK(v2.e_y == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    const ErrorPoint v3 = region_map({1.0, 0.0, 0.5}, sq);
    CHECK(v3.e_b == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(v3.e_y == doctest::Approx(0.5).epsilon(1e-12));
    const ErrorPoint interior = region_map({0.0, 0.3, 0.3}, sq);
    CHECK(interior.e_b == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(interior.e_y == doctest::Approx(0.5).epsilon(1e-12));

    // image stays inside the triangle
    for (double u = 0.0; u <= 1.0; u += 0.25)
        for (double t = 0.0; t <= 1.0; t += 0.25)
            for (double s = -1.0; s <= 1.0; s += 0.5) {
                const ErrorPoint pt = region_map({u, t, s}, sq);
                const auto [lo, hi] = region_bounds(pt.e_b);
                CHECK(pt.e_y >= lo - 1e-12);
                CHECK(pt.e_y <= hi + 1e-12);
            }

    const auto pinch_low = region_bounds(0.25);
    CHECK(pinch_low.first == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(pinch_low.second == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    const auto mid = region_bounds(7.0 / 12.0);
    CHECK(mid.first == doctest::Approx(7.0 / 36.0 + 0.25).epsilon(1e-14));
    CHECK(mid.second == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    const auto pinch_high = region_bounds(0.75);
    CHECK(pinch_high.first == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(pinch_high.second == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(region_bounds(0.1), DomainError);
}

TEST_CASE("max of h3 over the feasible slice") {
    CHECK(max_h3_at(0.25) == doctest::Approx(0.802728).epsilon(1e-6));
    CHECK(max_h3_at(0.75) == doctest::Approx(0.688722).epsilon(1e-6));
    const Envelope env = tangent_envelope();
    CHECK(max_h3_at(0.26) <= env.slope * 0.26 + env.intercept + 1e-3);
}

TEST_CASE("tangent at B and point C") {
    const TangentB b = tangent_at_b();
    CHECK(b.e_b == doctest::Approx(0.12619).epsilon(5e-4));
    CHECK(b.e_c == doctest::Approx(0.25677).epsilon(5e-4));
    CHECK(1.0 - binary_entropy(b.e_b) == doctest::Approx(h12(b.e_b)).epsilon(1e-9));
    CHECK(binary_entropy(b.e_b) == doctest::Approx(0.54690).epsilon(1e-4));
}

TEST_CASE("tangent envelope") {
    const Envelope env = tangent_envelope();
    CHECK(env.e_d >= 0.1150);
    CHECK(env.e_d <= 0.1165);
    CHECK(env.slope == doctest::Approx(2.82).epsilon(0.01 / 2.82));
    CHECK(env.intercept == doctest::Approx(0.0976).epsilon(0.001 / 0.0976));
    CHECK(h12(env.e_d) == doctest::Approx(0.42407).epsilon(5e-4 / 0.42407));
    CHECK(env.v3 == doctest::Approx(h3(0.25, 1.0 / 3.0)).epsilon(1e-14));

    // continuity, tangency, and anchoring
    CHECK(h12(env.e_d) == doctest::Approx(env.slope * env.e_d + env.intercept).epsilon(1e-9));
    CHECK(h12_prime(env.e_d) == doctest::Approx(env.slope).epsilon(1e-7));
    CHECK(env.slope * 0.25 + env.intercept == doctest::Approx(env.v3).epsilon(1e-9));
}

TEST_CASE("piecewise upper bound and key rate") {
    const Envelope env = tangent_envelope();
    CHECK(hzx_upper(0.05, env) == doctest::Approx(h12(0.05)).epsilon(1e-14));
    CHECK(hzx_upper(0.2, env) == doctest::Approx(0.6616).epsilon(2e-3 / 0.6616));
    CHECK_THROWS_AS(hzx_upper(0.3, env), DomainError);

    CHECK(keyrate(0.0, env, 2.5).rate == doctest::Approx(2.5).epsilon(1e-12));
    const double tt = threshold(Protocol::SixStateThreshold);
    CHECK(std::abs(keyrate(tt, env, 1.0).rate) <= 1e-6);
    CHECK(keyrate(0.11, env, 1.0).rate > 0.0);
    // monotone nonincreasing
    double prev = keyrate(0.0, env, 1.0).rate;
    for (double e = 0.005; e <= 0.25 + 1e-12; e += 0.005) {
        const double cur = keyrate(std::min(e, 0.25), env, 1.0).rate;
        CHECK(cur <= prev + 1e-12);
        prev = cur;
    }
}

TEST_CASE("thresholds") {
    CHECK(threshold(Protocol::SixStateThreshold) == doctest::Approx(0.126112).epsilon(5e-6));
    CHECK(threshold(Protocol::SixStateQubit) == doctest::Approx(0.12619).epsilon(5e-4));
    CHECK(threshold(Protocol::Bb84) == doctest::Approx(0.110028).epsilon(5e-4));
    CHECK(threshold(Protocol::Bb84) < threshold(Protocol::SixStateThreshold));
    CHECK(threshold(Protocol::SixStateThreshold) < threshold(Protocol::SixStateQubit));
}

TEST_CASE("envelope oracle") {
    const Envelope env = tangent_envelope();
    const auto hull = envelope_oracle(1e-4);
    CHECK(hull_value(hull, 0.05) == doctest::Approx(h12(0.05)).epsilon(1e-5 / h12(0.05)));
    CHECK(hull_value(hull, 0.2) ==
          doctest::Approx(env.slope * 0.2 + env.intercept).epsilon(1e-4));
    for (double e = 0.0; e <= 0.25 + 1e-12; e += 1e-3)
        CHECK(std::abs(hull_value(hull, std::min(e, 0.25)) - hzx_upper(std::min(e, 0.25), env)) <=
              1e-4);
    // hull vertices are concave
    for (std::size_t k = 1; k + 1 < hull.size(); ++k) {
        const auto [x0, y0] = hull[k - 1];
        const auto [x1, y1] = hull[k];
        const auto [x2, y2] = hull[k + 1];
        CHECK((y1 - y0) / (x1 - x0) >= (y2 - y1) / (x2 - x1) - 1e-9);
    }
}

TEST_CASE("neglect rule") {
    const NeglectReport rep = neglect_check(5);
    CHECK(rep.pass);
    CHECK(rep.worst_margin >= 0.0);
    for (double m : rep.min_bit_errors) CHECK(m > 0.25677);

    const Envelope env = tangent_envelope();
    CHECK(env.slope * 0.3 + env.intercept >= binary_entropy(0.3));
}
