#include "nanoban/dt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>
#include <vector>

namespace nanoban {

namespace {

std::int64_t isqrt64(std::int64_t v) {
    if (v < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// one product factor (1 - p^m X)^{-c}, X = q^{lr} Q^{ks} y^{Nt}
struct Factor {
    std::int64_t m, eq, eQ, ey;
    Int c;
};

// realized lower end of the m-support of row a (0 when the row is empty)
std::int64_t row_min_m(const CoeffTable& t, std::int64_t a) {
    std::int64_t lo = 0;
    for (auto it = t.c_map().lower_bound({a, INT64_MIN});
         it != t.c_map().end() && it->first.first == a; ++it)
        if (it->second != 0) { lo = std::min<std::int64_t>(lo, it->first.second); break; }
    return lo;
}

// unbounded knapsack over (q,Q)-weights: the largest total `value` any
// feasible factor multiset can accumulate within the caps
std::int64_t knapsack_bound(const std::vector<std::array<std::int64_t, 3>>& items,
                            std::int64_t A, std::int64_t B) {
    std::vector<std::vector<std::int64_t>> dp(
        static_cast<std::size_t>(A) + 1,
        std::vector<std::int64_t>(static_cast<std::size_t>(B) + 1, 0));
    for (std::int64_t qa = 0; qa <= A; ++qa) {
        for (std::int64_t qb = 0; qb <= B; ++qb) {
            for (const auto& [wq, wQ, val] : items) {
                if (wq > qa || wQ > qb) continue;
                dp[qa][qb] = std::max(dp[qa][qb],
                                      dp[qa - wq][qb - wQ] + val);
            }
        }
    }
    return dp[static_cast<std::size_t>(A)][static_cast<std::size_t>(B)];
}

struct FactorSet {
    std::vector<Factor> factors;
    std::int64_t pad_p = 0, pad_y = 0;
};

// enumerate the Thm-1.2 factors for one model within caps, plus the padded
// internal windows everything must be assembled in
FactorSet enumerate_factors(const NanoModel& model, const CoeffTable& table,
                            const TruncationCaps& caps) {
    const std::int64_t A = caps.q, B = caps.Q, C = caps.y, P = caps.p;
    if (A < 0 || B < 0 || C < 1 || P < 1) throw Error("z_nano: caps must be positive");

    // first pass: index families and their negative reach
    std::vector<std::array<std::int64_t, 3>> drop_p_items, drop_y_items;
    std::int64_t a_needed = -1;
    for (int k : model.theta) {
        const std::int64_t l = model.cofactor(k);
        for (std::int64_t r = 0; l * r <= A; ++r) {
            for (std::int64_t s = 0; std::int64_t(k) * s <= B; ++s) {
                if (r == 0 && s == 0) continue;
                const std::int64_t tb = isqrt64(4 * r * s + 1);
                for (std::int64_t t = -tb; t <= tb; ++t) {
                    const std::int64_t a = 4 * r * s - t * t;
                    if (a < -1) continue;
                    a_needed = std::max(a_needed, a);
                    const std::int64_t neg = -row_min_m(table, a);
                    if (neg > 0) drop_p_items.push_back({l * r, k * s, neg});
                    if (t != 0) drop_y_items.push_back({l * r, k * s, model.N * std::abs(t)});
                }
            }
        }
    }
    if (a_needed > table.a_max())
        throw TableWindowExceeded("z_nano needs c(" + std::to_string(a_needed) +
                                  ",.) beyond table a_max=" + std::to_string(table.a_max()));
    // the negative m-support of row a reaches down to -(a+1); a narrower
    // table would clip it and silently corrupt the window padding
    if (table.m_max() < a_needed + 1)
        throw TableWindowExceeded("z_nano needs m_max >= " + std::to_string(a_needed + 1) +
                                  " to cover the negative m-support of row " +
                                  std::to_string(a_needed));

    FactorSet out;
    out.pad_p = knapsack_bound(drop_p_items, A, B);
    out.pad_y = knapsack_bound(drop_y_items, A, B);
    const std::int64_t m_hi = P + out.pad_p;
    if (m_hi > table.m_max())
        throw TableWindowExceeded("z_nano needs c(.,m) up to m=" + std::to_string(m_hi) +
                                  " beyond table m_max=" + std::to_string(table.m_max()));

    for (int k : model.theta) {
        const std::int64_t l = model.cofactor(k);
        // pure-p factors: r = s = t = 0, m > 0
        for (std::int64_t m = 1; m <= m_hi; ++m) {
            const Int& c = table.c(0, m);
            if (c != 0) out.factors.push_back({m, 0, 0, 0, c});
        }
        // t-only factors: r = s = 0, t = 1 (t^2 <= 1 since c vanishes below -1)
        for (std::int64_t m = row_min_m(table, -1); m <= m_hi; ++m) {
            const Int& c = table.c(-1, m);
            if (c != 0) out.factors.push_back({m, 0, 0, model.N, c});
        }
        for (std::int64_t r = 0; l * r <= A; ++r) {
            for (std::int64_t s = 0; std::int64_t(k) * s <= B; ++s) {
                if (r == 0 && s == 0) continue;
                const std::int64_t tb = isqrt64(4 * r * s + 1);
                for (std::int64_t t = -tb; t <= tb; ++t) {
                    const std::int64_t a = 4 * r * s - t * t;
                    if (a < -1) continue;
                    for (std::int64_t m = row_min_m(table, a); m <= m_hi; ++m) {
                        const Int& c = table.c(a, m);
                        if (c != 0)
                            out.factors.push_back({m, l * r, k * s, model.N * t, c});
                    }
                }
            }
        }
    }
    return out;
}

std::vector<VarSpec> padded_nano_vars(const TruncationCaps& caps, std::int64_t pad_p,
                                      std::int64_t pad_y) {
    return {var("p", -caps.p - pad_p, caps.p + pad_p), var("q", 0, caps.q),
            var("Q", 0, caps.Q), var("y", -caps.y - pad_y, caps.y + pad_y)};
}

MultiSeries sum_factor_logs(const std::vector<Factor>& factors,
                            const std::vector<VarSpec>& vars) {
    auto chunk_log = [&vars](const Factor* begin, const Factor* end) {
        MultiSeries acc((std::vector<VarSpec>(vars)));
        for (const Factor* f = begin; f != end; ++f) {
            MultiSeries x = MultiSeries::zero(vars);
            x.add_term({f->m, f->eq, f->eQ, f->ey}, Rat(1));
            if (x.is_zero()) continue; // monomial entirely outside the padded window
            acc = add(acc, log1p_neg(x, -f->c));
        }
        return acc;
    };
    const unsigned nt = std::min<unsigned>(dt_thread_count(),
                                           std::max<std::size_t>(factors.size() / 64, 1));
    if (nt <= 1 || factors.size() < 128) return chunk_log(factors.data(), factors.data() + factors.size());
    std::vector<std::future<MultiSeries>> parts;
    const std::size_t step = (factors.size() + nt - 1) / nt;
    for (unsigned i = 0; i < nt; ++i) {
        const std::size_t lo = i * step, hi = std::min(factors.size(), lo + step);
        if (lo >= hi) break;
        parts.push_back(std::async(std::launch::async, chunk_log, factors.data() + lo,
                                   factors.data() + hi));
    }
    MultiSeries acc((std::vector<VarSpec>(vars)));
    for (auto& p : parts) acc = add(acc, p.get());
    return acc;
}

} // namespace

unsigned dt_thread_count() {
    if (const char* env = std::getenv("NANOBAN_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? std::min(hw, 8u) : 1u;
}

MultiSeries nano_vars(const TruncationCaps& caps) {
    return MultiSeries({var("p", -caps.p, caps.p), var("q", 0, caps.q), var("Q", 0, caps.Q),
                        var("y", -caps.y, caps.y)});
}

MultiSeries local_vars(const LocalCaps& caps) {
    return MultiSeries({var("p", -caps.p, caps.p), var("Q1", 0, caps.d1),
                        var("Q2", 0, caps.d2), var("Q3", 0, caps.d3)});
}

MultiSeries log_z_nano(const NanoModel& model, const CoeffTable& table,
                       const TruncationCaps& caps) {
    const FactorSet fs = enumerate_factors(model, table, caps);
    const MultiSeries s = sum_factor_logs(fs.factors, padded_nano_vars(caps, fs.pad_p, fs.pad_y));
    return rewindow(s, nano_vars(caps).vars());
}

MultiSeries z_nano(const NanoModel& model, const CoeffTable& table,
                   const TruncationCaps& caps) {
    const FactorSet fs = enumerate_factors(model, table, caps);
    const MultiSeries s = sum_factor_logs(fs.factors, padded_nano_vars(caps, fs.pad_p, fs.pad_y));
    return rewindow(exp(s), nano_vars(caps).vars());
}

MultiSeries z_banana_local(const CoeffTable& table, const LocalCaps& caps) {
    if (caps.p < 1 || caps.d1 < 0 || caps.d2 < 0 || caps.d3 < 0)
        throw Error("z_banana_local: caps must be positive");

    // negative-m reach: loose sum bound (the d-grids are small)
    std::int64_t pad_p = 0, a_needed = -1;
    for (std::int64_t d1 = 0; d1 <= caps.d1; ++d1)
        for (std::int64_t d2 = 0; d2 <= caps.d2; ++d2)
            for (std::int64_t d3 = 0; d3 <= caps.d3; ++d3) {
                const std::int64_t a =
                    2 * (d1 * d2 + d2 * d3 + d3 * d1) - d1 * d1 - d2 * d2 - d3 * d3;
                if (a < -1 || (d1 == 0 && d2 == 0 && d3 == 0)) continue;
                a_needed = std::max(a_needed, a);
                std::int64_t n_max = INT64_MAX;
                if (d1) n_max = caps.d1 / d1;
                if (d2) n_max = std::min(n_max, caps.d2 / d2);
                if (d3) n_max = std::min(n_max, caps.d3 / d3);
                pad_p += -row_min_m(table, a) * n_max;
            }
    if (a_needed > table.a_max())
        throw TableWindowExceeded("z_banana_local needs c(" + std::to_string(a_needed) +
                                  ",.) beyond table a_max=" + std::to_string(table.a_max()));
    if (table.m_max() < a_needed + 1)
        throw TableWindowExceeded("z_banana_local needs m_max >= " +
                                  std::to_string(a_needed + 1) +
                                  " to cover the negative m-support of row " +
                                  std::to_string(a_needed));
    const std::int64_t m_hi = caps.p + pad_p;
    if (m_hi > table.m_max())
        throw TableWindowExceeded("z_banana_local needs c(.,m) up to m=" +
                                  std::to_string(m_hi) + " beyond table m_max=" +
                                  std::to_string(table.m_max()));

    const std::vector<VarSpec> padded{var("p", -caps.p - pad_p, caps.p + pad_p),
                                      var("Q1", 0, caps.d1), var("Q2", 0, caps.d2),
                                      var("Q3", 0, caps.d3)};
    std::vector<Factor> factors;
    for (std::int64_t m = 1; m <= m_hi; ++m) {
        const Int& c = table.c(0, m);
        if (c != 0) factors.push_back({m, 0, 0, 0, c});
    }
    for (std::int64_t d1 = 0; d1 <= caps.d1; ++d1)
        for (std::int64_t d2 = 0; d2 <= caps.d2; ++d2)
            for (std::int64_t d3 = 0; d3 <= caps.d3; ++d3) {
                if (d1 == 0 && d2 == 0 && d3 == 0) continue;
                const std::int64_t a =
                    2 * (d1 * d2 + d2 * d3 + d3 * d1) - d1 * d1 - d2 * d2 - d3 * d3;
                if (a < -1) continue;
                for (std::int64_t m = row_min_m(table, a); m <= m_hi; ++m) {
                    const Int& c = table.c(a, m);
                    if (c != 0) factors.push_back({m, d1, d2, d3, c});
                }
            }
    const MultiSeries s = sum_factor_logs(factors, padded);
    return rewindow(exp(s), local_vars(caps).vars());
}

MultiSeries z_nano_via_local(const NanoModel& model, const CoeffTable& table,
                             const TruncationCaps& caps) {
    // padded target so that cross-fiber products may leave and re-enter
    const FactorSet fs = enumerate_factors(model, table, caps);
    const std::vector<VarSpec> padded = padded_nano_vars(caps, fs.pad_p, fs.pad_y);
    const std::int64_t P_int = caps.p + fs.pad_p;
    const std::int64_t C_int = caps.y + fs.pad_y;

    MultiSeries z = MultiSeries::constant(padded, Rat(1));
    for (int k : model.theta) {
        const std::int64_t l = model.cofactor(k);
        LocalCaps lc;
        lc.p = P_int;
        lc.d1 = caps.q / l;
        lc.d2 = caps.Q / k;
        // y^{N(d3-d1-d2)} must cover the padded y-window
        lc.d3 = C_int / model.N + lc.d1 + lc.d2;
        const MultiSeries local = z_banana_local(table, lc);
        // Q1 -> q^l y^-N, Q2 -> Q^k y^-N, Q3 -> y^N
        const std::vector<MultiSeries::Exponents> images{
            {1, 0, 0, 0},
            {0, l, 0, -model.N},
            {0, 0, k, -model.N},
            {0, 0, 0, model.N},
        };
        z = mul(z, substitute(local, padded, images));
    }
    return rewindow(z, nano_vars(caps).vars());
}

} // namespace nanoban
