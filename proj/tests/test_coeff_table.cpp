#include <doctest.h>

#include "nanoban/coeff_table.hpp"
#include "nanoban/qforms.hpp"

using namespace nanoban;

namespace {

const CoeffTable& table12() {
    static const CoeffTable t = build_coeff_table(12, 16);
    return t;
}

} // namespace

TEST_CASE("calibration picks the conifold orientation uniquely") {
    const auto& t = table12();
    CHECK(t.sigma() == 1);
    const auto bm1 = t.b_row(-1);
    REQUIRE(bm1.size() == 1);
    CHECK(bm1.at(0) == -1); // b(-1,.) supported on {0} only
}

TEST_CASE("conifold layer c(-1,m) = -m and the a=0 layer") {
    const auto& t = table12();
    for (std::int64_t m = 1; m <= 16; ++m) CHECK(t.c(-1, m) == -m);
    for (std::int64_t m = -16; m <= 0; ++m) CHECK(t.c(-1, m) == 0);
    CHECK(t.c(0, 0) == 1);
    for (std::int64_t m = 1; m <= 16; ++m) CHECK(t.c(0, m) == 2 * m);
    for (std::int64_t m = -16; m < 0; ++m) CHECK(t.c(0, m) == 0);
}

TEST_CASE("c(a,m) = 0 for a < -1 and for a = 1,2 mod 4") {
    const auto& t = table12();
    CHECK(t.c(-2, 3) == 0);
    CHECK(t.c(-7, 1) == 0);
    for (std::int64_t a : {1, 2, 5, 6, 9, 10}) {
        for (std::int64_t m = -16; m <= 16; ++m) CHECK(t.c(a, m) == 0);
    }
}

TEST_CASE("window contract: outside requests throw, inside-a small-m return 0") {
    const auto& t = table12();
    CHECK_THROWS_AS(t.c(13, 0), TableWindowExceeded);
    CHECK_THROWS_AS(t.c(3, 17), TableWindowExceeded);
    CHECK_THROWS_AS(t.b_row(13), TableWindowExceeded);
    CHECK_NOTHROW(t.c(12, 16));
}

TEST_CASE("b-table: symmetry record and support bound") {
    const auto& t = table12();
    CHECK(t.b_symmetric());
    CHECK(!t.c_symmetric()); // one-sided kernel expansion
    for (const auto& [key, v] : t.b_map()) {
        CHECK(v != 0);
        CHECK(key.second <= key.first + 2);
        CHECK(key.second >= -(key.first + 2));
    }
}

TEST_CASE("b-table refactorization reproduces the c-table") {
    const auto& t = table12();
    // c(a,m) = sum_{m'} b(a,m') * max(m - m', 0): independent finite
    // convolution against the stored rows
    for (std::int64_t a = -1; a <= 12; ++a) {
        const auto row = t.b_row(a);
        for (std::int64_t m = -16; m <= 16; ++m) {
            Int acc(0);
            for (const auto& [mp, bv] : row)
                if (m - mp >= 1) acc += bv * (m - mp);
            CHECK(acc == t.c(a, m));
        }
    }
}

TEST_CASE("resum_lambda on the conifold layer: 1/(2 sin(lambda/2))^2") {
    const auto& t = table12();
    auto r = resum_lambda(t, -1, 5);
    CHECK(r[0] == Rat(1));
    CHECK(r[1] == Rat(1, 12));
    CHECK(r[2] == Rat(1, 240));
    CHECK(r[3] == Rat(1, 6048));
    CHECK(r[4] == Rat(1, 172800));
}

TEST_CASE("resum_lambda == extract_cdisc(psi) two-way identity (the core oracle)") {
    const auto& t = table12();
    for (int g = 0; g <= 5; ++g) {
        const auto cd = extract_cdisc(psi(g, 12, 16));
        const auto cols = [&](std::int64_t d) { return resum_lambda(t, d, 5)[static_cast<std::size_t>(g)]; };
        for (std::int64_t d = -1; d <= 12; ++d) CHECK(cols(d) == cd.at(d));
    }
}

TEST_CASE("resum_lambda: outside the table window errors, never silent zero") {
    const auto& t = table12();
    CHECK_THROWS_AS(resum_lambda(t, 13, 3), TableWindowExceeded);
    CHECK_THROWS_AS(resum_lambda(t, -2, 3), TableWindowExceeded);
}
