#include "nanoban/models.hpp"

#include <numeric>

#include "nanoban/errors.hpp"

namespace nanoban {

namespace {

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    b %= p;
    if (b < 0) b += p;
    while (e) {
        if (e & 1) r = (__int128)r * b % p;
        b = (__int128)b * b % p;
        e >>= 1;
    }
    return r;
}

} // namespace

const std::array<int, 4>& all_N() {
    static const std::array<int, 4> ns{5, 6, 8, 9};
    return ns;
}

const NanoModel& model_for(int N) {
    static const NanoModel m5{5, {5, 5, 1, 1}, 1};
    static const NanoModel m6{6, {6, 3, 2, 1}, 1};
    static const NanoModel m8{8, {4, 4, 2, 2}, 2};
    static const NanoModel m9{9, {3, 3, 3, 3}, 3};
    switch (N) {
        case 5: return m5;
        case 6: return m6;
        case 8: return m8;
        case 9: return m9;
        default: throw Error("N must be one of 5,6,8,9");
    }
}

std::int64_t TriPoly::eval_mod(std::int64_t x, std::int64_t y, std::int64_t z,
                               std::int64_t p, std::int64_t omega) const {
    std::int64_t acc = 0;
    for (const auto& t : terms) {
        std::int64_t c = t.a % p;
        if (t.b) c = (c + (__int128)t.b * omega) % p;
        std::int64_t v = (__int128)c * pow_mod(x, t.e[0], p) % p;
        v = (__int128)v * pow_mod(y, t.e[1], p) % p;
        v = (__int128)v * pow_mod(z, t.e[2], p) % p;
        acc = (acc + v) % p;
    }
    acc %= p;
    return acc < 0 ? acc + p : acc;
}

TriPoly TriPoly::derivative(int variable) const {
    TriPoly out;
    for (const auto& t : terms) {
        if (t.e[variable] == 0) continue;
        TriTerm d = t;
        d.a *= t.e[variable];
        d.b *= t.e[variable];
        d.e[variable] -= 1;
        out.terms.push_back(d);
    }
    return out;
}

int TriPoly::degree() const {
    int d = 0;
    for (const auto& t : terms) d = std::max(d, t.e[0] + t.e[1] + t.e[2]);
    return d;
}

namespace {

TriPoly tp(std::vector<TriTerm> ts) { return TriPoly{std::move(ts)}; }

PencilModel make_pencil(int N) {
    PencilModel p;
    p.N = N;
    switch (N) {
        case 5:
            // f5 = mu x(x-z)(y-z) - lambda zy(x-y)   (Beauville Gamma_1(5))
            p.A = tp({{{2, 1, 0}, 1}, {{2, 0, 1}, -1}, {{1, 1, 1}, -1}, {{1, 0, 2}, 1}});
            p.B = tp({{{1, 1, 1}, 1}, {{0, 2, 1}, -1}});
            p.generators.push_back({{tp({{{1, 1, 0}, 1}, {{0, 1, 1}, -1}}),   // y(x-z)
                                     tp({{{0, 1, 1}, -1}}),                   // -yz
                                     tp({{{1, 0, 1}, 1}, {{0, 1, 1}, -1}})},  // z(x-y)
                                    5});
            p.mw_group = "Z5";
            break;
        case 6:
            // f6 = mu (x+y+z)(xy+yz+zx) - lambda xyz
            p.A = tp({{{2, 1, 0}, 1},
                      {{2, 0, 1}, 1},
                      {{1, 2, 0}, 1},
                      {{0, 2, 1}, 1},
                      {{0, 1, 2}, 1},
                      {{1, 0, 2}, 1},
                      {{1, 1, 1}, 3}});
            p.B = tp({{{1, 1, 1}, 1}});
            p.generators.push_back(
                {{tp({{{1, 1, 0}, 1}}), tp({{{0, 1, 1}, 1}}), tp({{{1, 0, 1}, 1}})}, 6});
            p.mw_group = "Z6";
            break;
        case 8:
            // f8 = mu x(x^2+z^2+2zy) - lambda z(x^2-y^2)
            p.A = tp({{{3, 0, 0}, 1}, {{1, 0, 2}, 1}, {{1, 1, 1}, 2}});
            p.B = tp({{{2, 0, 1}, 1}, {{0, 2, 1}, -1}});
            // order-4 generator
            p.generators.push_back(
                {{tp({{{5, 0, 0}, 1}, {{4, 1, 0}, -1}, {{4, 0, 1}, -2}, {{3, 1, 1}, 4},
                      {{3, 0, 2}, 2}, {{2, 2, 1}, -2}, {{2, 1, 2}, -6}, {{2, 0, 3}, -2},
                      {{1, 2, 2}, 4}, {{1, 1, 3}, 4}, {{1, 0, 4}, 1}, {{0, 2, 3}, -2},
                      {{0, 1, 4}, -1}}),
                  tp({{{5, 0, 0}, 1}, {{4, 1, 0}, -1}, {{4, 0, 1}, -2}, {{3, 1, 1}, 4},
                      {{3, 0, 2}, 2}, {{2, 1, 2}, -2}, {{1, 3, 1}, -2}, {{1, 2, 2}, -2},
                      {{1, 1, 3}, -2}, {{1, 0, 4}, -1}, {{0, 3, 2}, 2}, {{0, 2, 3}, 2},
                      {{0, 1, 4}, 1}}),
                  tp({{{5, 0, 0}, -1}, {{4, 1, 0}, -1}, {{3, 1, 1}, -4}, {{3, 0, 2}, -2},
                      {{2, 2, 1}, -4}, {{2, 1, 2}, -2}, {{1, 2, 2}, -4}, {{1, 1, 3}, -4},
                      {{1, 0, 4}, -1}, {{0, 3, 2}, -4}, {{0, 2, 3}, -4}, {{0, 1, 4}, -1}})},
                 4});
            // order-2 generator
            p.generators.push_back(
                {{tp({{{7, 1, 0}, 1}, {{7, 0, 1}, 1}, {{5, 2, 1}, 4}, {{5, 1, 2}, 5},
                      {{5, 0, 3}, 1}, {{3, 3, 2}, 5}, {{3, 2, 3}, 7}, {{3, 1, 4}, 2},
                      {{1, 4, 3}, 2}, {{1, 3, 4}, 3}, {{1, 2, 5}, 1}}),
                  tp({{{8, 0, 0}, 1}, {{6, 1, 1}, 4}, {{4, 3, 1}, 1}, {{4, 2, 2}, 9},
                      {{4, 1, 3}, 3}, {{4, 0, 4}, 1}, {{2, 4, 2}, 1}, {{2, 3, 3}, 7},
                      {{2, 2, 4}, 3}, {{2, 1, 5}, 1}, {{0, 4, 4}, 1}}),
                  tp({{{4, 3, 1}, -1}, {{4, 2, 2}, -3}, {{4, 1, 3}, -3}, {{4, 0, 4}, -1},
                      {{2, 4, 2}, -2}, {{2, 3, 3}, -7}, {{2, 2, 4}, -9}, {{2, 1, 5}, -5},
                      {{2, 0, 6}, -1}})},
                 2});
            p.two_generator = true;
            p.mw_group = "Z4xZ2";
            break;
        case 9:
            // f9 = mu (x^3+y^3+z^3) - lambda xyz
            p.A = tp({{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 3}, 1}});
            p.B = tp({{{1, 1, 1}, 1}});
            p.generators.push_back(
                {{tp({{{0, 1, 0}, 1}}), tp({{{0, 0, 1}, 1}}), tp({{{1, 0, 0}, 1}})}, 3});
            // (x, w y, w^2 z) with w^2 = -1 - w
            p.generators.push_back({{tp({{{1, 0, 0}, 1}}),
                                     tp({{{0, 1, 0}, 0, 1}}),
                                     tp({{{0, 0, 1}, -1, -1}})},
                                    3});
            p.two_generator = true;
            p.mw_group = "Z3xZ3";
            break;
        default:
            throw Error("N must be one of 5,6,8,9");
    }
    return p;
}

} // namespace

const PencilModel& pencil_for(int N) {
    static const PencilModel p5 = make_pencil(5);
    static const PencilModel p6 = make_pencil(6);
    static const PencilModel p8 = make_pencil(8);
    static const PencilModel p9 = make_pencil(9);
    switch (N) {
        case 5: return p5;
        case 6: return p6;
        case 8: return p8;
        case 9: return p9;
        default: throw Error("N must be one of 5,6,8,9");
    }
}

std::uint64_t generator_checksum(const PencilModel& p) {
    std::uint64_t h = 1469598103934665603ull; // FNV-1a
    auto feed = [&h](std::int64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= static_cast<std::uint64_t>(v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    feed(p.N);
    for (const auto& g : p.generators) {
        feed(g.order);
        for (const auto& comp : g.map) {
            for (const auto& t : comp.terms) {
                feed(t.e[0]);
                feed(t.e[1]);
                feed(t.e[2]);
                feed(t.a);
                feed(t.b);
            }
        }
    }
    return h;
}

Int WeierstrassCurve::c4() const {
    const Int b2 = 4 * Int(a2);
    const Int b4 = 2 * Int(a4);
    return b2 * b2 - 24 * b4;
}

Int WeierstrassCurve::c6() const {
    const Int b2 = 4 * Int(a2);
    const Int b4 = 2 * Int(a4);
    const Int b6 = 4 * Int(a6);
    return -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
}

Int WeierstrassCurve::discriminant() const {
    const Int c4v = c4(), c6v = c6();
    Int num = c4v * c4v * c4v - c6v * c6v;
    return num / 1728;
}

const WeierstrassCurve& curve_for(int N) {
    static const WeierstrassCurve e5{1, -41, -116, "20.a1"};
    static const WeierstrassCurve e6{-1, -24, -36, "24.a3"};
    static const WeierstrassCurve e8{0, -1, 0, "32.a3"};
    static const WeierstrassCurve e9{0, 0, -27, "36.a3"};
    switch (N) {
        case 5: return e5;
        case 6: return e6;
        case 8: return e8;
        case 9: return e9;
        default: throw Error("N must be one of 5,6,8,9");
    }
}

std::vector<std::pair<std::int64_t, std::int64_t>> eta_spec_weight4(const NanoModel& m) {
    std::vector<std::pair<std::int64_t, std::int64_t>> spec;
    for (int k : m.theta) spec.emplace_back(k, 2);
    return spec;
}

std::vector<std::pair<std::int64_t, std::int64_t>> eta_spec_weight2(const NanoModel& m) {
    std::vector<std::pair<std::int64_t, std::int64_t>> spec;
    for (int k : m.theta) spec.emplace_back(2 * k, 1);
    return spec;
}

} // namespace nanoban
