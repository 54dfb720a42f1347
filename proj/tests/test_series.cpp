#include <doctest.h>

#include <random>

#include "nanoban/json_io.hpp"
#include "nanoban/series.hpp"

using namespace nanoban;

namespace {

MultiSeries qser(std::int64_t lo, std::int64_t hi) {
    return MultiSeries({var("q", lo, hi)});
}

// random Laurent polynomial well inside the window so products stay exact
MultiSeries random_series(std::mt19937_64& rng, const std::vector<VarSpec>& vars,
                          int terms, std::int64_t spread) {
    MultiSeries s(vars);
    std::uniform_int_distribution<std::int64_t> ed(-spread, spread);
    std::uniform_int_distribution<long> cd(-9, 9);
    for (int t = 0; t < terms; ++t) {
        MultiSeries::Exponents e;
        for (const auto& v : vars) {
            std::int64_t lo = std::max(v.min_exp, -spread), hi = std::min(v.max_exp, spread);
            std::uniform_int_distribution<std::int64_t> d(lo, hi);
            e.push_back(d(rng));
        }
        Rat c(cd(rng), 1 + static_cast<long>(rng() % 4));
        c.canonicalize();
        s.add_term(e, c);
    }
    return s;
}

} // namespace

TEST_CASE("add: cancellation, identity, doubling") {
    auto v = qser(0, 8);
    MultiSeries one_plus = MultiSeries::constant(v.vars(), Rat(1));
    one_plus.add_term({1}, Rat(1));
    MultiSeries one_minus = MultiSeries::constant(v.vars(), Rat(1));
    one_minus.add_term({1}, Rat(-1));
    CHECK(add(one_plus, one_minus) == MultiSeries::constant(v.vars(), Rat(2)));

    auto x = MultiSeries::monomial(v.vars(), {3}, Rat(5));
    CHECK(add(x, MultiSeries::zero(v.vars())) == x);

    MultiSeries qy({var("q", -4, 4), var("y", -4, 4)});
    auto m = MultiSeries::monomial(qy.vars(), {-1, 1});
    CHECK(coeff(add(m, m), {-1, 1}) == Rat(2));
}

TEST_CASE("add: VarMismatch") {
    auto a = MultiSeries::constant(qser(0, 4).vars(), Rat(1));
    auto b = MultiSeries::constant(qser(0, 5).vars(), Rat(1));
    CHECK_THROWS_AS(add(a, b), VarMismatch);
}

TEST_CASE("mul: geometric identity within window") {
    auto v = qser(0, 10);
    MultiSeries one_minus = MultiSeries::constant(v.vars(), Rat(1));
    one_minus.add_term({1}, Rat(-1));
    MultiSeries geo(v.vars());
    for (std::int64_t k = 0; k <= 10; ++k) geo.add_term({k}, Rat(1));
    CHECK(mul(one_minus, geo) == MultiSeries::constant(v.vars(), Rat(1)));
}

TEST_CASE("mul: (y^1/2 - y^-1/2)^2 = y - 2 + 1/y on the half-integer lattice") {
    MultiSeries ys({var("y", -4, 4, 2)}); // denom 2: exponent 1 means y^{1/2}
    MultiSeries f(ys.vars());
    f.add_term({1}, Rat(1));
    f.add_term({-1}, Rat(-1));
    auto sq = mul(f, f);
    CHECK(coeff(sq, {2}) == Rat(1));
    CHECK(coeff(sq, {0}) == Rat(-2));
    CHECK(coeff(sq, {-2}) == Rat(1));
    CHECK(sq.size() == 3);
}

TEST_CASE("mul: denom-24 bookkeeping q^{1/24}^24 = q") {
    MultiSeries qf({var("q", 0, 48, 24)});
    auto x = MultiSeries::monomial(qf.vars(), {1});
    auto acc = MultiSeries::constant(qf.vars(), Rat(1));
    for (int i = 0; i < 24; ++i) acc = mul(acc, x);
    CHECK(coeff(acc, {24}) == Rat(1)); // q^{24/24} = q^1
    CHECK(acc.size() == 1);
}

TEST_CASE("inverse: geometric series") {
    auto v = qser(0, 9);
    MultiSeries one_minus = MultiSeries::constant(v.vars(), Rat(1));
    one_minus.add_term({1}, Rat(-1));
    auto inv = inverse(one_minus, {0});
    for (std::int64_t k = 0; k <= 9; ++k) CHECK(coeff(inv, {k}) == Rat(1));
    CHECK(mul(one_minus, inv) == MultiSeries::constant(v.vars(), Rat(1)));
}

TEST_CASE("inverse: pivot shift q(1-y)^2 -> q^-1 sum (k+1) y^k") {
    MultiSeries qy({var("q", -2, 2), var("y", 0, 8)});
    MultiSeries a(qy.vars());
    a.add_term({1, 0}, Rat(1));
    a.add_term({1, 1}, Rat(-2));
    a.add_term({1, 2}, Rat(1));
    auto inv = inverse(a, {1, 0});
    for (std::int64_t k = 0; k <= 8; ++k) CHECK(coeff(inv, {-1, k}) == Rat(k + 1));
    CHECK(mul(a, inv) == MultiSeries::constant(qy.vars(), Rat(1)));
}

TEST_CASE("inverse: scalar and NotAUnit") {
    auto v = qser(0, 4);
    CHECK(inverse(MultiSeries::constant(v.vars(), Rat(2)), {0}) ==
          MultiSeries::constant(v.vars(), Rat(1, 2)));
    CHECK_THROWS_AS(inverse(MultiSeries::zero(v.vars()), {0}), NotAUnit);
    // 1 - y - 1/y has no window-nilpotent nonconstant part
    MultiSeries bad({var("y", -3, 3)});
    bad.add_term({0}, Rat(1));
    bad.add_term({1}, Rat(-1));
    bad.add_term({-1}, Rat(-1));
    CHECK_THROWS_AS(inverse(bad, {0}), NotAUnit);
}

TEST_CASE("log1p_neg: basic values and round trip") {
    auto v = qser(0, 6);
    auto q = MultiSeries::monomial(v.vars(), {1});
    auto lg = log1p_neg(q, Int(1));
    CHECK(coeff(lg, {1}) == Rat(-1));
    CHECK(coeff(lg, {2}) == Rat(-1, 2));
    CHECK(coeff(lg, {3}) == Rat(-1, 3));
    CHECK(log1p_neg(q, Int(0)).is_zero());

    // exp(log(1-q)) = 1 - q
    auto back = exp(lg);
    MultiSeries expect = MultiSeries::constant(v.vars(), Rat(1));
    expect.add_term({1}, Rat(-1));
    CHECK(back == expect);

    CHECK_THROWS_AS(log1p_neg(MultiSeries::constant(v.vars(), Rat(1)), Int(1)),
                    ConstantTermPresent);
}

TEST_CASE("exp/pow/coeff basics") {
    auto v = qser(0, 7);
    CHECK(exp(MultiSeries::zero(v.vars())) == MultiSeries::constant(v.vars(), Rat(1)));

    MultiSeries one_minus = MultiSeries::constant(v.vars(), Rat(1));
    one_minus.add_term({1}, Rat(-1));
    auto inv = pow(one_minus, -1);
    for (std::int64_t k = 0; k <= 7; ++k) CHECK(coeff(inv, {k}) == Rat(1));

    CHECK_THROWS_AS(coeff(inv, {99}), OutsideWindow);
    CHECK(coeff(inv, {5}) == Rat(1));
    CHECK_THROWS_AS(exp(MultiSeries::constant(v.vars(), Rat(1))), ConstantTermPresent);
}

TEST_CASE("substitute_monomial: q -> q^2 and lattice maps") {
    auto v = qser(0, 8);
    MultiSeries f = MultiSeries::constant(v.vars(), Rat(1));
    f.add_term({1}, Rat(1));
    auto g = substitute_monomial(f, "q", {2});
    CHECK(coeff(g, {0}) == Rat(1));
    CHECK(coeff(g, {2}) == Rat(1));
    CHECK(g.size() == 2);
}

TEST_CASE("substitute: Q3 -> y^N and invertible lattice swap") {
    MultiSeries src({var("Q3", 0, 3)});
    auto x = MultiSeries::monomial(src.vars(), {1});
    std::vector<VarSpec> tgt{var("y", -20, 20)};
    auto img = substitute(x, tgt, {{9}});
    CHECK(coeff(img, {9}) == Rat(1));

    // q -> q^{1/N} then N-fold rescale is a bijection of lattices
    MultiSeries qn({var("q", 0, 30)});
    MultiSeries f(qn.vars());
    f.add_term({3}, Rat(7));
    std::vector<VarSpec> frac{var("q", 0, 30, 5)}; // denom 5 lattice
    auto down = substitute(f, frac, {{1}});        // q -> q^{1/5}
    CHECK(coeff(down, {3}) == Rat(7));             // scaled exponent 3 means q^{3/5}
    auto up = substitute(down, qn.vars(), {{5}});  // q -> q^5 ... (1/5 lattice unit)
    CHECK(up == f);
}

TEST_CASE("substitute: DenomOverflow for unrepresentable fractional exponents") {
    MultiSeries src({var("q", 0, 8, 2)});
    auto x = MultiSeries::monomial(src.vars(), {1}); // q^{1/2}
    std::vector<VarSpec> tgt{var("q", 0, 8, 1)};
    CHECK_THROWS_AS(substitute(x, tgt, {{1}}), DenomOverflow);
}

TEST_CASE("property: ring axioms on random truncated series") {
    std::mt19937_64 rng(20250810);
    std::vector<VarSpec> vars{var("q", -6, 6), var("y", -6, 6)};
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_series(rng, vars, 4, 2);
        auto b = random_series(rng, vars, 4, 2);
        auto c = random_series(rng, vars, 4, 2);
        CHECK(add(a, b) == add(b, a));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    }
}

TEST_CASE("property: mul(a, inverse(a)) = 1 for random units") {
    std::mt19937_64 rng(7);
    std::vector<VarSpec> vars{var("q", 0, 6), var("y", 0, 6)};
    for (int trial = 0; trial < 25; ++trial) {
        auto a = random_series(rng, vars, 5, 3);
        MultiSeries u = add(MultiSeries::constant(vars, Rat(1 + static_cast<long>(rng() % 3))),
                            mul(a, MultiSeries::monomial(vars, {1, 0})));
        auto inv = inverse(u, {0, 0});
        CHECK(mul(u, inv) == MultiSeries::constant(vars, Rat(1)));
    }
}

TEST_CASE("property: exp/log round trip on random no-constant-term series") {
    std::mt19937_64 rng(99);
    std::vector<VarSpec> vars{var("q", 0, 7)};
    for (int trial = 0; trial < 20; ++trial) {
        MultiSeries x(vars);
        for (std::int64_t e = 1; e <= 4; ++e) {
            Rat c(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
            c.canonicalize();
            x.add_term({e}, c);
        }
        // exp(e log(1-x_series)) with e = -1 equals 1/(1-x_series)
        MultiSeries one_minus = sub(MultiSeries::constant(vars, Rat(1)), x);
        CHECK(exp(log1p_neg(x, Int(-1))) == inverse(one_minus, {0}));
        CHECK(exp(log1p_neg(x, Int(1))) == one_minus);
    }
}

TEST_CASE("property: truncation soundness (large window restricted = small window)") {
    std::mt19937_64 rng(4242);
    std::vector<VarSpec> small{var("q", 0, 5), var("y", -5, 5)};
    std::vector<VarSpec> large{var("q", 0, 9), var("y", -9, 9)};
    for (int trial = 0; trial < 20; ++trial) {
        auto a_small = random_series(rng, small, 5, 3);
        auto b_small = random_series(rng, small, 5, 3);
        auto a_large = rewindow(a_small, large);
        auto b_large = rewindow(b_small, large);
        // single products/sums are window-local: restriction commutes
        CHECK(rewindow(mul(a_large, b_large), small) == mul(a_small, b_small));
        CHECK(rewindow(add(a_large, b_large), small) == add(a_small, b_small));
    }
    // iterated operations (exp, log, inverse) commute with restriction on
    // one-sided supports, where no partial product can leave and re-enter;
    // the DT engine pads its windows precisely because mixed-sign Laurent
    // supports lack this property
    std::vector<VarSpec> small1{var("q", 0, 6), var("y", 0, 6)};
    std::vector<VarSpec> large1{var("q", 0, 11), var("y", 0, 11)};
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_series(rng, small1, 5, 3);
        MultiSeries x = mul(a, MultiSeries::monomial(small1, {1, 0}));
        MultiSeries x_large = rewindow(x, large1);
        CHECK(rewindow(exp(x_large), small1) == exp(x));
        CHECK(rewindow(log1p_neg(x_large, Int(2)), small1) == log1p_neg(x, Int(2)));
        MultiSeries u = add(MultiSeries::constant(small1, Rat(1)), x);
        MultiSeries u_large = rewindow(u, large1);
        CHECK(rewindow(inverse(u_large, {0, 0}), small1) == inverse(u, {0, 0}));
    }
}

TEST_CASE("serialization: canonical JSON is stable and sorted") {
    MultiSeries s({var("q", 0, 4), var("y", -2, 2)});
    s.add_term({2, -1}, Rat(3, 7));
    s.add_term({0, 1}, Rat(-5));
    const std::string j1 = series_to_json(s);
    const std::string j2 = series_to_json(s);
    CHECK(j1 == j2);
    CHECK(j1.find("\"vars\"") != std::string::npos);
    // lexicographic term order: (0,1) before (2,-1)
    CHECK(j1.find("-5") < j1.find("3"));
}
