#include "nanoban/coeff_table.hpp"

#include <string>

namespace nanoban {

namespace {

// core = N(q,y) * H(q,y)^{-2} on the (q, y) lattice, q-exponent shifted so
// that index a sits at q^{a+1}
MultiSeries quotient_core(std::int64_t a_max, std::int64_t y_win) {
    const std::int64_t q_cap = a_max + 1;
    MultiSeries::Exponents zero{0, 0};
    std::vector<VarSpec> vs{var("q", 0, q_cap), var("y", -y_win, y_win)};

    MultiSeries num(vs);
    num.add_term({0, 0}, Rat(1));
    for (std::int64_t m = 1; m * m <= q_cap; ++m) {
        const Rat s((m % 2) ? -1 : 1);
        num.add_term({m * m, m}, s);
        num.add_term({m * m, -m}, s);
    }

    MultiSeries h(vs);
    for (std::int64_t j = 0; 2 * j * (j + 1) <= q_cap; ++j) {
        const Rat s((j % 2) ? -1 : 1);
        for (std::int64_t i = -j; i <= j; ++i) h.add_term({2 * j * (j + 1), i}, s);
    }

    MultiSeries hinv = inverse(h, zero);
    return mul(num, mul(hinv, hinv));
}

} // namespace

const Int& CoeffTable::c(std::int64_t a, std::int64_t m) const {
    static const Int zero(0);
    if (a < -1) return zero; // c(d,m) = 0 for d < -1, table-independent
    if (a > a_max_ || m < -m_max_ || m > m_max_)
        throw TableWindowExceeded("c(" + std::to_string(a) + "," + std::to_string(m) +
                                  ") outside table window (a_max=" + std::to_string(a_max_) +
                                  ", m_max=" + std::to_string(m_max_) + ")");
    auto it = c_.find({a, m});
    return it == c_.end() ? zero : it->second;
}

std::map<std::int64_t, Int> CoeffTable::b_row(std::int64_t a) const {
    if (a < -1 || a > a_max_)
        throw TableWindowExceeded("b row " + std::to_string(a) + " outside table window");
    std::map<std::int64_t, Int> row;
    for (auto it = b_.lower_bound({a, INT64_MIN}); it != b_.end() && it->first.first == a; ++it)
        row[it->first.second] = it->second;
    return row;
}

CoeffTable build_coeff_table(std::int64_t a_max, std::int64_t m_max) {
    if (a_max < 0 || m_max < 2) throw Error("build_coeff_table: a_max >= 0, m_max >= 2");

    // intermediate y-window: wide enough for the b-support (|m| <= a+2) plus
    // the kernel convolution reach up to m_max
    const std::int64_t y_win = a_max + m_max + 4;
    const MultiSeries core = quotient_core(a_max, y_win);

    CoeffTable out;
    out.a_max_ = a_max;
    out.m_max_ = m_max;

    // calibration over the two sign choices: quotient = sigma * (-1) * core
    // * q^{-1} * kernel; the conifold layer must give b(-1,0) = -1
    int chosen = 0;
    for (int sigma : {+1, -1}) {
        const long lead = (sigma == +1) ? -1 : +1; // sign of b(-1,0) candidate
        Rat b_m1_0 = core.coeff_at({0, 0}) * Rat(lead);
        if (b_m1_0 == Rat(-1)) {
            if (chosen != 0)
                throw CalibrationFailure("both sign choices match the conifold orientation");
            chosen = sigma;
        }
    }
    if (chosen == 0)
        throw CalibrationFailure("no sign choice matches the conifold orientation");
    out.sigma_ = chosen;

    const Rat sgn(-chosen);
    for (const auto& [e, v] : core.terms()) {
        const Rat bv = v * sgn;
        if (!is_integer(bv)) throw TableBuildError("non-integer b coefficient");
        const std::int64_t a = e[0] - 1, m = e[1];
        out.b_.emplace(std::make_pair(a, m), Int(bv.get_num()));
    }

    // realized-support bound: supp b(a,.) within [-(a+2), a+2]
    for (const auto& [key, v] : out.b_) {
        if (v != 0 && (key.second > key.first + 2 || key.second < -(key.first + 2)))
            throw TableBuildError("b(" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ") violates the support bound");
    }

    // c rows: series product of the core with the kernel sum_{k>=1} k y^k,
    // i.e. (y^{1/2}-y^{-1/2})^{-2} in the non-negative-y branch
    MultiSeries kernel(core.vars());
    for (std::int64_t k = 1; k <= y_win; ++k) kernel.add_term({0, k}, Rat(static_cast<long>(k)));
    const MultiSeries cser = mul(scale(core, sgn), kernel);
    for (const auto& [e, v] : cser.terms()) {
        const std::int64_t a = e[0] - 1, m = e[1];
        if (m < -m_max || m > m_max) continue;
        if (!is_integer(v)) throw TableBuildError("non-integer c coefficient");
        out.c_.emplace(std::make_pair(a, m), Int(v.get_num()));
    }

    auto symmetric = [](const std::map<std::pair<std::int64_t, std::int64_t>, Int>& t) {
        for (const auto& [key, v] : t) {
            auto it = t.find({key.first, -key.second});
            if (it == t.end() ? v != 0 : it->second != v) return false;
        }
        return true;
    };
    out.b_symmetric_ = symmetric(out.b_);
    out.c_symmetric_ = symmetric(out.c_);
    return out;
}

std::vector<Rat> resum_lambda(const CoeffTable& table, std::int64_t d, int G) {
    const auto row = table.b_row(d); // throws for d outside the window
    const int L = 2 * G + 2;

    // numerator sum_m b(d,m) e^{im lambda}: coefficient of lambda^j is
    // (i^j / j!) sum_m b m^j; odd j vanish since b(d,.) is m-symmetric
    std::vector<Rat> num(static_cast<std::size_t>(L) + 1, Rat(0));
    Int fact(1);
    for (int j = 0; j <= L; ++j) {
        if (j > 0) fact *= j;
        if (j % 2) continue;
        Int s(0);
        for (const auto& [m, v] : row) s += v * ipow(Int(m), static_cast<unsigned long>(j));
        Rat c{(j / 2) % 2 ? -s : s};
        num[static_cast<std::size_t>(j)] = c / Rat(fact);
    }

    // denominator (e^{i lambda/2} - e^{-i lambda/2})^2 = 2 cos(lambda) - 2
    //            = -lambda^2 (1 - lambda^2/12 + ...); den[j] holds the
    // coefficient of lambda^{j+2}
    std::vector<Rat> den(static_cast<std::size_t>(L) + 1, Rat(0));
    fact = 1;
    for (int j = 2; j <= L + 2; ++j) {
        fact *= j;
        if (j % 2) continue;
        Rat c(((j / 2) % 2) ? -2 : 2);
        den[static_cast<std::size_t>(j - 2)] = c / Rat(fact);
    }

    // Laurent division: quotient q with q * den = num; q[j] is the
    // coefficient of lambda^{j-2}
    std::vector<Rat> q(static_cast<std::size_t>(L) + 1, Rat(0));
    for (int j = 0; j <= L; ++j) {
        Rat acc = num[static_cast<std::size_t>(j)];
        for (int i = 0; i < j; ++i)
            acc -= q[static_cast<std::size_t>(i)] * den[static_cast<std::size_t>(j - i)];
        q[static_cast<std::size_t>(j)] = acc / den[0];
    }
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(G) + 1);
    for (int g = 0; g <= G; ++g) out.push_back(q[static_cast<std::size_t>(2 * g)]);
    return out;
}

} // namespace nanoban
