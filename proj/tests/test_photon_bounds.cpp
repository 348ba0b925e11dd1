#include <doctest.h>

#include "sixstate/photon_bounds.hpp"

using namespace sixstate;

TEST_CASE("minimum bit error rates") {
    const auto table = min_error_table(5);
    REQUIRE(table.size() == 5);

    CHECK(std::abs(table[0].min_e_b) <= 1e-12);
    CHECK(table[1].min_e_b > 1e-4);
    CHECK(table[2].min_e_b == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(table[3].min_e_b > 0.25677);
    CHECK(table[4].min_e_b > 0.25677);

    for (const MinErrorRow& row : table) {
        CHECK(std::abs(row.min_e_b - row.reduced_check) <= 1e-10);
        CHECK(row.min_e_b >= 0.0);
        CHECK(row.min_e_b <= 0.5 + 1e-12);
    }
}

TEST_CASE("determinism and errors") {
    const MinErrorRow a = min_bit_error(4);
    const MinErrorRow b = min_bit_error(4);
    CHECK(a.min_e_b == b.min_e_b);

    CHECK_THROWS_AS(min_bit_error(0), BadPhotonNumberError);
    CHECK_THROWS_AS(min_bit_error(kNMaxDefault + 1), BadPhotonNumberError);
    CHECK_THROWS_AS(min_error_table(kNMaxDefault + 3), BadPhotonNumberError);
}
