#include "nanoban/qforms.hpp"

#include <algorithm>

namespace nanoban {

namespace {

Int binom(unsigned n, unsigned k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Int factorial(unsigned n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

} // namespace

Rat bernoulli(int n) {
    if (n < 0) throw Error("bernoulli: n >= 0 required");
    static std::vector<Rat> cache{Rat(1)};
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    while (static_cast<int>(cache.size()) <= n) {
        const unsigned m = static_cast<unsigned>(cache.size());
        Rat s(0);
        for (unsigned j = 0; j < m; ++j) s += Rat(binom(m + 1, j)) * cache[j];
        Rat b = -s / Rat(static_cast<long>(m) + 1);
        b.canonicalize();
        cache.push_back(b);
    }
    return cache[static_cast<std::size_t>(n)];
}

Rat alpha_weight(int g) {
    if (g < 2) throw Error("alpha_weight: g >= 2 required");
    Rat b = bernoulli(2 * g);
    if (b < 0) b = -b;
    Rat out = b / (Rat(2 * g) * Rat(factorial(static_cast<unsigned>(2 * g - 2))));
    out.canonicalize();
    return out;
}

IntQSeries intq_mul(const IntQSeries& x, const IntQSeries& y) {
    IntQSeries out;
    out.cap = std::min(x.cap, y.cap);
    out.a.assign(static_cast<std::size_t>(out.cap) + 1, Int(0));
    // stream the sparser operand through the denser one, accumulating in
    // place (mpz_addmul avoids per-term temporaries)
    auto nnz = [](const IntQSeries& s) {
        std::size_t n = 0;
        for (const auto& c : s.a) n += (c != 0);
        return n;
    };
    const bool x_sparse = nnz(x) <= nnz(y);
    const IntQSeries& sp = x_sparse ? x : y;
    const IntQSeries& de = x_sparse ? y : x;
    std::vector<std::int64_t> idx;
    for (std::int64_t i = 0; i <= sp.cap; ++i)
        if (sp.a[static_cast<std::size_t>(i)] != 0) idx.push_back(i);
    for (std::int64_t i : idx) {
        const Int& ci = sp.a[static_cast<std::size_t>(i)];
        const std::int64_t jmax = std::min(de.cap, out.cap - i);
        for (std::int64_t j = 0; j <= jmax; ++j) {
            const Int& cj = de.a[static_cast<std::size_t>(j)];
            if (cj == 0) continue;
            mpz_addmul(out.a[static_cast<std::size_t>(i + j)].get_mpz_t(), ci.get_mpz_t(),
                       cj.get_mpz_t());
        }
    }
    return out;
}

IntQSeries euler_product(std::int64_t scale, std::int64_t cap) {
    IntQSeries out;
    out.cap = cap;
    out.a.assign(static_cast<std::size_t>(cap) + 1, Int(0));
    out.a[0] = 1;
    for (std::int64_t j = 1;; ++j) {
        const std::int64_t e1 = scale * j * (3 * j - 1) / 2;
        const std::int64_t e2 = scale * j * (3 * j + 1) / 2;
        if (e1 > cap && e2 > cap) break;
        const int s = (j % 2 == 0) ? 1 : -1;
        if (e1 <= cap) out.a[static_cast<std::size_t>(e1)] += s;
        if (e2 <= cap) out.a[static_cast<std::size_t>(e2)] += s;
    }
    return out;
}

MultiSeries eta(std::int64_t q_cap) {
    if (q_cap < 1) throw Error("eta: q_cap >= 1 required");
    // window in denom-24 units: [1, 24*q_cap + 1]
    const VarSpec q = var("q", 0, 24 * q_cap + 1, 24);
    IntQSeries p = euler_product(1, q_cap);
    MultiSeries out((std::vector<VarSpec>{q}));
    for (std::int64_t n = 0; n <= p.cap; ++n) {
        const Int& c = p.a[static_cast<std::size_t>(n)];
        if (c != 0) out.add_term({24 * n + 1}, Rat(c));
    }
    return out;
}

IntQSeries eta_product(const std::vector<std::pair<std::int64_t, std::int64_t>>& spec,
                       std::int64_t cap) {
    std::int64_t weight24 = 0;
    for (const auto& [k, e] : spec) {
        if (k < 1 || e < 1) throw Error("eta_product: k >= 1 and e >= 1 required");
        weight24 += k * e;
    }
    if (weight24 % 24 != 0)
        throw FractionalLeadingExponent("eta_product: sum k*e = " + std::to_string(weight24) +
                                        " is not divisible by 24");
    const std::int64_t lead = weight24 / 24;
    IntQSeries acc;
    acc.cap = cap;
    acc.a.assign(static_cast<std::size_t>(cap) + 1, Int(0));
    acc.a[0] = 1;
    for (const auto& [k, e] : spec) {
        IntQSeries factor = euler_product(k, cap);
        for (std::int64_t i = 0; i < e; ++i) acc = intq_mul(acc, factor);
    }
    // shift by the leading power
    IntQSeries out;
    out.cap = cap;
    out.a.assign(static_cast<std::size_t>(cap) + 1, Int(0));
    for (std::int64_t n = 0; n + lead <= cap; ++n)
        out.a[static_cast<std::size_t>(n + lead)] = acc.a[static_cast<std::size_t>(n)];
    return out;
}

MultiSeries eisenstein(int g, std::int64_t q_cap) {
    if (g < 1) throw Error("eisenstein: g >= 1 required");
    const VarSpec q = var("q", 0, q_cap, 1);
    MultiSeries out((std::vector<VarSpec>{q}));
    out.add_term({0}, Rat(1));
    const Rat c0 = Rat(-4 * g) / bernoulli(2 * g);
    for (std::int64_t n = 1; n <= q_cap; ++n) {
        Int sigma(0);
        for (std::int64_t d = 1; d * d <= n; ++d) {
            if (n % d) continue;
            sigma += ipow(Int(d), static_cast<unsigned long>(2 * g - 1));
            if (d != n / d) sigma += ipow(Int(n / d), static_cast<unsigned long>(2 * g - 1));
        }
        out.add_term({n}, c0 * Rat(sigma));
    }
    return out;
}

MultiSeries qy_vars_series(std::int64_t q_cap, std::int64_t y_cap) {
    return MultiSeries({var("q", 0, q_cap), var("y", -y_cap, y_cap)});
}

namespace {

// lift a one-variable q series into the (q,y) lattice
MultiSeries lift_q(const MultiSeries& qs, std::int64_t q_cap, std::int64_t y_cap) {
    MultiSeries out = qy_vars_series(q_cap, y_cap);
    for (const auto& [e, c] : qs.terms()) out.add_term({e[0], 0}, c);
    return out;
}

// phi_{-2,1} on a padded internal y-window; factors lowering y can otherwise
// pull dropped boundary terms back inside
MultiSeries phi_raw(std::int64_t q_cap, std::int64_t y_cap) {
    const std::int64_t w = y_cap + q_cap + 2;
    MultiSeries f = qy_vars_series(q_cap, w);
    f.add_term({0, 1}, Rat(1));
    f.add_term({0, 0}, Rat(-2));
    f.add_term({0, -1}, Rat(1));
    for (std::int64_t n = 1; n <= q_cap; ++n) {
        for (int y0 : {1, -1}) {
            MultiSeries base = MultiSeries::constant(f.vars(), Rat(1));
            base.add_term({n, y0}, Rat(-1));
            f = mul(f, base);
            f = mul(f, base);
        }
        MultiSeries inv = MultiSeries::zero(f.vars());
        for (std::int64_t k = 0; n * k <= q_cap; ++k) inv.add_term({n * k, 0}, Rat(1));
        for (int rep = 0; rep < 4; ++rep) f = mul(f, inv);
    }
    return f;
}

} // namespace

JacobiSeries phi_neg2_1(std::int64_t q_cap, std::int64_t y_cap) {
    if (q_cap < 1 || y_cap < 1) throw Error("phi_neg2_1: caps >= 1 required");
    MultiSeries f = rewindow(phi_raw(q_cap, y_cap), qy_vars_series(q_cap, y_cap).vars());
    return JacobiSeries{std::move(f), -2, 1};
}

MultiSeries weierstrass_p(std::int64_t q_cap, std::int64_t y_cap) {
    if (q_cap < 1 || y_cap < 1) throw Error("weierstrass_p: caps >= 1 required");
    MultiSeries f = qy_vars_series(q_cap, y_cap);
    f.add_term({0, 0}, Rat(1, 12));
    // y/(1-y)^2 in non-negative powers of y (global branch convention)
    for (std::int64_t k = 1; k <= y_cap; ++k) f.add_term({0, k}, Rat(static_cast<long>(k)));
    for (std::int64_t n = 1; n <= q_cap; ++n) {
        for (std::int64_t d = 1; d <= n; ++d) {
            if (n % d) continue;
            f.add_term({n, d}, Rat(static_cast<long>(d)));
            f.add_term({n, 0}, Rat(-2 * static_cast<long>(d)));
            f.add_term({n, -d}, Rat(static_cast<long>(d)));
        }
    }
    return f;
}

JacobiSeries psi(int g, std::int64_t q_cap, std::int64_t y_cap) {
    if (g < 0) throw Error("psi: g >= 0 required");
    if (g == 0) {
        JacobiSeries out = phi_neg2_1(q_cap, y_cap);
        out.weight = -2;
        return out;
    }
    const std::int64_t w = y_cap + q_cap + 2;
    MultiSeries phi = phi_raw(q_cap, y_cap);
    MultiSeries other =
        g == 1 ? weierstrass_p(q_cap, w)
               : scale(lift_q(eisenstein(g, q_cap), q_cap, w), alpha_weight(g));
    MultiSeries f = rewindow(mul(phi, other), qy_vars_series(q_cap, y_cap).vars());
    return JacobiSeries{std::move(f), 2 * g - 2, 1};
}

std::optional<std::pair<MultiSeries::Exponents, MultiSeries::Exponents>>
jacobi_property_violation(const JacobiSeries& f) {
    std::map<std::int64_t, std::pair<MultiSeries::Exponents, Rat>> seen;
    for (const auto& [e, c] : f.series.terms()) {
        const std::int64_t d = 4 * f.index * e[0] - e[1] * e[1];
        auto it = seen.find(d);
        if (it == seen.end()) {
            seen.emplace(d, std::make_pair(e, c));
        } else if (it->second.second != c) {
            return std::make_pair(it->second.first, e);
        }
    }
    // absent tuples are zero coefficients: check them against stored values
    const auto& vs = f.series.vars();
    for (std::int64_t n = vs[0].min_exp; n <= vs[0].max_exp; ++n) {
        for (std::int64_t t = vs[1].min_exp; t <= vs[1].max_exp; ++t) {
            MultiSeries::Exponents e{n, t};
            if (f.series.terms().count(e)) continue;
            const std::int64_t d = 4 * f.index * n - t * t;
            auto it = seen.find(d);
            if (it != seen.end() && it->second.second != 0)
                return std::make_pair(it->second.first, e);
        }
    }
    return std::nullopt;
}

CoeffByDiscriminant extract_cdisc(const JacobiSeries& f) {
    if (auto v = jacobi_property_violation(f)) {
        throw InconsistentDiscriminant(
            "coefficients at (" + std::to_string(v->first[0]) + "," +
            std::to_string(v->first[1]) + ") and (" + std::to_string(v->second[0]) + "," +
            std::to_string(v->second[1]) + ") share 4n-t^2 but disagree");
    }
    CoeffByDiscriminant out;
    out.genus = (f.weight + 2) / 2;
    for (const auto& [e, c] : f.series.terms())
        out.c[4 * f.index * e[0] - e[1] * e[1]] = c;
    return out;
}

} // namespace nanoban
