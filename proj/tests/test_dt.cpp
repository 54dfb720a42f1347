#include <doctest.h>

#include "nanoban/dt.hpp"
#include "nanoban/json_io.hpp"

using namespace nanoban;

namespace {

const CoeffTable& table() {
    static const CoeffTable t = build_coeff_table(16, 48);
    return t;
}

bool all_integer(const MultiSeries& s) {
    for (const auto& [e, c] : s.terms())
        if (!is_integer(c)) return false;
    return true;
}

} // namespace

TEST_CASE("z_banana_local: pure-p factors at Q = 0") {
    LocalCaps lc{4, 0, 0, 0};
    auto z = z_banana_local(table(), lc);
    // prod_{m>0} (1-p^m)^{-c(0,m)}: p^1 coefficient = c(0,1) = 2
    CHECK(coeff(z, {0, 0, 0, 0}) == Rat(1));
    CHECK(coeff(z, {1, 0, 0, 0}) == Rat(2));
    CHECK(all_integer(z));
}

TEST_CASE("z_banana_local: conifold layer at Q3^1") {
    LocalCaps lc{5, 0, 0, 1};
    auto z = z_banana_local(table(), lc);
    // coefficient of Q3 p^m comes from (1-p^m Q3)^{-c(-1,m)} = (1-p^m Q3)^{m}
    // against the pure-p background: at Q3^1 the single-factor expansion gives
    // -(-c(-1,m)) ... i.e. the layer sum_m c(-1,m) p^m * (pure-p part)
    // spot check the lowest p-order: [p^1 Q3^1] = c(-1,1)*1 = -1
    CHECK(coeff(z, {1, 0, 0, 1}) == Rat(-1));
    CHECK(all_integer(z));
}

TEST_CASE("z_banana_local: Q1 <-> Q2 exchange symmetry") {
    LocalCaps lc{4, 2, 2, 2};
    auto z = z_banana_local(table(), lc);
    for (const auto& [e, c] : z.terms())
        CHECK(z.coeff_at({e[0], e[2], e[1], e[3]}) == c);
}

TEST_CASE("z_nano: normalization and integrality for all N") {
    for (int N : all_N()) {
        TruncationCaps caps{4, 2, 2, 6 + 3 * (N == 9)};
        auto z = z_nano(model_for(N), table(), caps);
        CHECK(coeff(z, {0, 0, 0, 0}) == Rat(1));
        CHECK(all_integer(z));
        // pure-p layer: four fibers contribute c(0,1) each
        CHECK(coeff(z, {1, 0, 0, 0}) == Rat(8));
    }
}

TEST_CASE("z_nano: degree-0 part for N=9 is the 4th power of one factor family") {
    TruncationCaps caps{6, 0, 0, 9};
    auto z4 = z_nano(model_for(9), table(), caps);
    // one fiber alone: take the local factor with d = 0 only, i.e. the pure-p
    // + t-direction family; exponentiate its log once vs. four times
    LocalCaps lc{6 + 18, 0, 0, 1}; // padded p for the cross products
    auto z1 = z_banana_local(table(), lc);
    // substitute Q3 -> y^9 and raise to the 4th power
    std::vector<VarSpec> tgt{var("p", -6 - 18, 6 + 18), var("q", 0, 0), var("Q", 0, 0),
                             var("y", -9, 9)};
    auto s = substitute(z1, tgt, {{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 9}});
    auto p4 = mul(mul(s, s), mul(s, s));
    CHECK(rewindow(p4, nano_vars(caps).vars()) == z4);
}

TEST_CASE("z_nano equals the product of substituted local factors (all N)") {
    for (int N : all_N()) {
        TruncationCaps caps{4, 2, 2, N};
        auto direct = z_nano(model_for(N), table(), caps);
        auto via = z_nano_via_local(model_for(N), table(), caps);
        CHECK(direct == via);
    }
}

namespace {

// independent oracle: expand prod (1 - p^m X)^{-c} by direct binomial series,
// never touching the log/exp path of the engine
MultiSeries oracle_product(const NanoModel& m, const CoeffTable& t,
                           const TruncationCaps& caps, std::int64_t pad_p,
                           std::int64_t pad_y) {
    std::vector<VarSpec> wide{var("p", -caps.p - pad_p, caps.p + pad_p), var("q", 0, caps.q),
                              var("Q", 0, caps.Q), var("y", -caps.y - pad_y, caps.y + pad_y)};
    auto binom = [](long n, long k) {
        Int out;
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                     static_cast<unsigned long>(k));
        return out;
    };
    MultiSeries z = MultiSeries::constant(wide, Rat(1));
    auto apply_factor = [&](std::int64_t pm, std::int64_t eq, std::int64_t eQ, std::int64_t ey,
                            const Int& c) {
        const long ci = static_cast<long>(c.get_si());
        MultiSeries f(wide);
        if (ci < 0) {
            // (1 - X)^{|c|}: finite binomial sum
            for (long n = 0; n <= -ci; ++n) {
                MultiSeries::Exponents e{n * pm, n * eq, n * eQ, n * ey};
                Rat coef{binom(-ci, n)};
                if (n % 2) coef = -coef;
                f.add_term(e, coef);
            }
        } else {
            // (1 - X)^{-c} = sum C(n+c-1, n) X^n, truncated by the window
            for (long n = 0;; ++n) {
                MultiSeries::Exponents e{n * pm, n * eq, n * eQ, n * ey};
                const bool fits = f.in_window(e);
                if (!fits && n > 0) break;
                if (fits) f.add_term(e, Rat(binom(n + ci - 1, n)));
                if (n > 4000) break;
            }
        }
        if (!f.is_zero()) z = mul(z, f);
    };
    const std::int64_t m_hi = caps.p + pad_p;
    for (int k : m.theta) {
        const std::int64_t l = m.cofactor(k);
        for (std::int64_t pm = 1; pm <= m_hi; ++pm)
            if (t.c(0, pm) != 0) apply_factor(pm, 0, 0, 0, t.c(0, pm));
        for (std::int64_t pm = 1; pm <= m_hi; ++pm)
            if (t.c(-1, pm) != 0) apply_factor(pm, 0, 0, m.N, t.c(-1, pm));
        for (std::int64_t r = 0; l * r <= caps.q; ++r) {
            for (std::int64_t s = 0; std::int64_t(k) * s <= caps.Q; ++s) {
                if (r == 0 && s == 0) continue;
                for (std::int64_t tt = -2 * r * s - 1; tt <= 2 * r * s + 1; ++tt) {
                    const std::int64_t a = 4 * r * s - tt * tt;
                    if (a < -1) continue;
                    for (std::int64_t pm = -(a + 1); pm <= m_hi; ++pm)
                        if (t.c(a, pm) != 0)
                            apply_factor(pm, l * r, k * s, m.N * tt, t.c(a, pm));
                }
            }
        }
    }
    return rewindow(z, nano_vars(caps).vars());
}

} // namespace

TEST_CASE("z_nano agrees with a direct binomial product expansion (no log/exp)") {
    for (int N : all_N()) {
        TruncationCaps caps{3, 1, 1, N};
        // generous pads; the engine's own knapsack pads are at most this
        auto direct = oracle_product(model_for(N), table(), caps, 24, 4 * N);
        auto engine = z_nano(model_for(N), table(), caps);
        CHECK(direct == engine);
    }
    // wider q,Q windows on one model to reach the rs > 0 factor families
    TruncationCaps caps{3, 2, 2, 6};
    CHECK(oracle_product(model_for(6), table(), caps, 24, 24) ==
          z_nano(model_for(6), table(), caps));
}

TEST_CASE("z_nano: truncation soundness (enlarging caps never changes coefficients)") {
    const auto& m = model_for(6);
    TruncationCaps small{3, 2, 2, 6};
    TruncationCaps big{5, 3, 3, 12};
    auto zs = z_nano(m, table(), small);
    auto zb = z_nano(m, table(), big);
    CHECK(rewindow(zb, nano_vars(small).vars()) == zs);
}

TEST_CASE("z_nano: caps exceeding the table window throw with a named entry") {
    CoeffTable tiny = build_coeff_table(3, 6);
    TruncationCaps caps{8, 6, 6, 12};
    CHECK_THROWS_AS(z_nano(model_for(6), tiny, caps), TableWindowExceeded);
}

TEST_CASE("log_z_nano matches log of the expanded product") {
    const auto& m = model_for(9);
    TruncationCaps caps{4, 2, 2, 9};
    auto lz = log_z_nano(m, table(), caps);
    // exp is inverse of the log sum within the shared padded assembly, so
    // exp(restrict(log)) need not equal z; instead verify through series exp
    // at matching windows: z = exp(S) computed internally, so compare the
    // other way round via a fresh exp of the restricted log on a wide window.
    CHECK(coeff(lz, {0, 0, 0, 0}) == Rat(0));
    // t-direction factor (1 - p y^9)^{c(-1,1)} contributes c(-1,1) = -1 per
    // fiber at p^1 y^9; four fibers
    CHECK(coeff(lz, {1, 0, 0, 9}) == Rat(-4));
    // no p-free curve-class terms exist in the log
    CHECK(coeff(lz, {0, 0, 0, 9}) == Rat(0));
}

TEST_CASE("thread count does not affect results") {
    TruncationCaps caps{4, 2, 2, 6};
    setenv("NANOBAN_THREADS", "1", 1);
    auto z1 = z_nano(model_for(6), table(), caps);
    setenv("NANOBAN_THREADS", "4", 1);
    auto z4 = z_nano(model_for(6), table(), caps);
    unsetenv("NANOBAN_THREADS");
    CHECK(z1 == z4);
    CHECK(series_to_json(z1) == series_to_json(z4));
}

TEST_CASE("determinism: identical runs give identical JSON") {
    TruncationCaps caps{3, 1, 1, 6};
    auto a = series_to_json(z_nano(model_for(6), table(), caps));
    auto b = series_to_json(z_nano(model_for(6), table(), caps));
    CHECK(a == b);
}
