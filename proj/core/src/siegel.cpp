#include "nanoban/siegel.hpp"

#include <algorithm>
#include <string>

namespace nanoban {

namespace {

// J = [[0, I2], [-I2, 0]]
constexpr int J_sign(int i, int j) {
    if (i == 0 && j == 2) return 1;
    if (i == 1 && j == 3) return 1;
    if (i == 2 && j == 0) return -1;
    if (i == 3 && j == 1) return -1;
    return 0;
}

bool is_int(const Rat& r) { return r.get_den() == 1; }

Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// value lies in alpha * Z
bool in_ideal(const Rat& value, const Rat& alpha) {
    Rat q = value / alpha;
    q.canonicalize();
    return is_int(q);
}

} // namespace

QuadField::QuadField(int N) : n_(N) {
    for (int r = 0; r * r <= N; ++r)
        if (r * r == N) root_ = r;
}

Quad QuadField::make(Rat a, Rat b) const {
    if (root_ >= 0 && b != 0) {
        a += b * root_;
        b = 0;
    }
    return Quad{std::move(a), std::move(b)};
}

Quad QuadField::add(const Quad& x, const Quad& y) const { return make(x.a + y.a, x.b + y.b); }
Quad QuadField::sub(const Quad& x, const Quad& y) const { return make(x.a - y.a, x.b - y.b); }
Quad QuadField::neg(const Quad& x) const { return make(-x.a, -x.b); }

Quad QuadField::mul(const Quad& x, const Quad& y) const {
    return make(x.a * y.a + Rat(n_) * x.b * y.b, x.a * y.b + x.b * y.a);
}

bool SpMatrix::rational() const {
    for (const auto& row : e)
        for (const auto& q : row)
            if (!q.rational()) return false;
    return true;
}

SpMatrix sp_identity(const QuadField& f) {
    SpMatrix m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = f.make(Rat(i == j ? 1 : 0));
    return m;
}

SpMatrix sp_mul(const QuadField& f, const SpMatrix& x, const SpMatrix& y) {
    SpMatrix out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            Quad acc = f.make(Rat(0));
            for (int k = 0; k < 4; ++k) acc = f.add(acc, f.mul(x(i, k), y(k, j)));
            out(i, j) = acc;
        }
    }
    return out;
}

SpMatrix sp_from_rational(const QuadField& f, const std::array<std::array<Rat, 4>, 4>& m) {
    SpMatrix out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out(i, j) = f.make(m[i][j]);
    return out;
}

bool is_symplectic(const QuadField& f, const SpMatrix& m) {
    // (M^T J M)_{ij} = sum_{k,l} M_{ki} J_{kl} M_{lj}
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            Quad acc = f.make(Rat(0));
            for (int k = 0; k < 4; ++k) {
                for (int l = 0; l < 4; ++l) {
                    const int s = J_sign(k, l);
                    if (!s) continue;
                    Quad t = f.mul(m(k, i), m(l, j));
                    acc = f.add(acc, s > 0 ? t : f.neg(t));
                }
            }
            if (!(acc == f.make(Rat(J_sign(i, j))))) return false;
        }
    }
    return true;
}

SpMatrix sp_inverse(const QuadField& f, const SpMatrix& m) {
    // M^{-1} = J^{-1} M^T J for symplectic M; J^{-1} = -J
    SpMatrix out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            Quad acc = f.make(Rat(0));
            for (int k = 0; k < 4; ++k) {
                for (int l = 0; l < 4; ++l) {
                    const int s = -J_sign(i, k) * J_sign(l, j);
                    if (!s) continue;
                    Quad t = f.mul(m(l, k), f.make(Rat(s)));
                    acc = f.add(acc, t);
                }
            }
            out(i, j) = acc;
        }
    }
    return out;
}

namespace {

// the fractional-ideal multipliers of the P_N lattice pattern
std::array<std::array<Rat, 4>, 4> pn_pattern(const NanoModel& model) {
    const long N = model.N, d = model.d;
    return {{{frac(1, 1), frac(N, d), frac(1, d), frac(1, N)},
             {frac(1, d), frac(1, 1), frac(1, N), frac(1, N * d)},
             {frac(N, d), frac(N, 1), frac(1, 1), frac(1, d)},
             {frac(N, 1), frac(N * N, d), frac(N, d), frac(1, 1)}}};
}

std::array<std::array<Rat, 4>, 4> lnk_pattern(const NanoModel& model, int k) {
    const long N = model.N, K = k;
    return {{{frac(1, 1), frac(K, 1), frac(K, N), frac(1, N)},
             {frac(1, K), frac(1, 1), frac(1, N), frac(1, N * K)},
             {frac(N, K), frac(N, 1), frac(1, 1), frac(1, K)},
             {frac(N, 1), frac(N * K, 1), frac(K, 1), frac(1, 1)}}};
}

bool matches_pattern(const QuadField& f, const SpMatrix& m,
                     const std::array<std::array<Rat, 4>, 4>& pattern) {
    if (!m.rational()) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!in_ideal(m(i, j).a, pattern[i][j])) return false;
    return is_symplectic(f, m);
}

} // namespace

bool in_PN(const NanoModel& model, const SpMatrix& m) {
    const QuadField f(model.N);
    return matches_pattern(f, m, pn_pattern(model));
}

bool in_LNk(const NanoModel& model, int k, const SpMatrix& m) {
    const QuadField f(model.N);
    if (!m.rational()) return false;
    // g M g^{-1} integral with g = diag(N, Nk, k, 1)
    const std::array<Rat, 4> g{Rat(model.N), Rat(model.N * k), Rat(k), Rat(1)};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            Rat v = m(i, j).a * g[static_cast<std::size_t>(i)] / g[static_cast<std::size_t>(j)];
            v.canonicalize();
            if (!is_int(v)) return false;
        }
    }
    return is_symplectic(f, m);
}

bool in_LNk_pattern(const NanoModel& model, int k, const SpMatrix& m) {
    const QuadField f(model.N);
    return matches_pattern(f, m, lnk_pattern(model, k));
}

SpMatrix iota(const NanoModel& model, const QuadField& f) {
    SpMatrix m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = f.make(Rat(0));
    const Rat invN(1, model.N);
    m(0, 1) = f.make(Rat(0), Rat(1));       // sqrt(N)
    m(1, 0) = f.make(Rat(0), invN);         // 1/sqrt(N) = sqrt(N)/N
    m(2, 3) = f.make(Rat(0), invN);
    m(3, 2) = f.make(Rat(0), Rat(1));
    return m;
}

SpMatrix sample_PN(const NanoModel& model, const QuadField& f, std::mt19937_64& rng) {
    const long N = model.N, d = model.d;
    std::uniform_int_distribution<long> small(-3, 3);
    auto rnd = [&]() { return small(rng); };

    SpMatrix acc = sp_identity(f);
    std::uniform_int_distribution<int> pick(0, 3);
    const int steps = 4 + static_cast<int>(rng() % 4);
    for (int s = 0; s < steps; ++s) {
        std::array<std::array<Rat, 4>, 4> g{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) g[i][j] = Rat(i == j ? 1 : 0);
        switch (pick(rng)) {
            case 0: { // upper translation [[I,B],[0,I]], B symmetric in the lattice
                g[0][2] = frac(rnd(), d);
                g[0][3] = g[1][2] = frac(rnd(), N);
                g[1][3] = frac(rnd(), N * d);
                break;
            }
            case 1: { // lower translation [[I,0],[C,I]]
                g[2][0] = frac(rnd() * N, d);
                g[2][1] = g[3][0] = frac(rnd() * N, 1);
                g[3][1] = frac(rnd() * N * N, d);
                break;
            }
            case 2: { // GL block diag(A, (A^T)^{-1}), A = [[1, b],[0,1]], b in (N/d)Z
                const long b = rnd();
                g[0][1] = frac(b * N, d);
                g[3][2] = frac(-b * N, d);
                break;
            }
            case 3: { // A = [[1,0],[c,1]], c in (1/d)Z
                const long c = rnd();
                g[1][0] = frac(c, d);
                g[2][3] = frac(-c, d);
                break;
            }
        }
        acc = sp_mul(f, acc, sp_from_rational(f, g));
    }
    return acc;
}

CheckReport conj_preserves_PN(const NanoModel& model, int samples, std::uint64_t seed) {
    CheckReport rep;
    rep.title = "iota conjugation closure, N=" + std::to_string(model.N);
    const QuadField f(model.N);
    const SpMatrix io = iota(model, f);

    rep.add("iota^2 = I", sp_mul(f, io, io) == sp_identity(f) ? true : false);
    rep.add("iota symplectic", is_symplectic(f, io));

    std::mt19937_64 rng(seed);
    int ok = 0, irrational = 0, outside = 0;
    for (int s = 0; s < samples; ++s) {
        const SpMatrix m = sample_PN(model, f, rng);
        if (!in_PN(model, m)) {
            rep.add("sample generator", false, "sampled matrix not in P_N");
            return rep;
        }
        const SpMatrix conj = sp_mul(f, sp_mul(f, io, m), sp_inverse(f, io));
        if (!conj.rational()) {
            ++irrational;
            throw IrrationalConjugate("iota M iota^{-1} has a sqrt(" +
                                      std::to_string(model.N) + ") part");
        }
        if (in_PN(model, conj)) ++ok;
        else ++outside;
    }
    rep.add("conjugates rational (" + std::to_string(samples) + " samples)", irrational == 0);
    rep.add("conjugates in P_N", outside == 0,
            std::to_string(ok) + "/" + std::to_string(samples));
    return rep;
}

CheckReport check_PN_intersection(const NanoModel& model, int samples, std::uint64_t seed) {
    CheckReport rep;
    rep.title = "P_N = intersection of L_{N,k}, N=" + std::to_string(model.N);
    const QuadField f(model.N);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> denpick(1, 2 * model.N);
    std::uniform_int_distribution<long> numpick(-4, 4);

    int agree = 0, members = 0;
    for (int s = 0; s < samples; ++s) {
        SpMatrix m = sp_identity(f);
        switch (s % 3) {
            case 0:
                m = sample_PN(model, f, rng);
                break;
            case 1: { // random symplectic translation with arbitrary denominators
                std::array<std::array<Rat, 4>, 4> g{};
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) g[i][j] = Rat(i == j ? 1 : 0);
                Rat b00(numpick(rng), denpick(rng));
                Rat b01(numpick(rng), denpick(rng));
                Rat b11(numpick(rng), denpick(rng));
                b00.canonicalize(); b01.canonicalize(); b11.canonicalize();
                g[0][2] = b00; g[0][3] = g[1][2] = b01; g[1][3] = b11;
                m = sp_from_rational(f, g);
                break;
            }
            case 2: { // member times a translation
                m = sample_PN(model, f, rng);
                std::array<std::array<Rat, 4>, 4> g{};
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) g[i][j] = Rat(i == j ? 1 : 0);
                Rat b(numpick(rng), denpick(rng));
                b.canonicalize();
                g[0][2] = b;
                m = sp_mul(f, m, sp_from_rational(f, g));
                break;
            }
        }
        const bool pn = in_PN(model, m);
        bool lnk = true;
        for (int k : model.theta) lnk = lnk && in_LNk(model, k, m);
        if (pn == lnk) ++agree;
        if (pn) ++members;
    }
    rep.add("in_PN == AND_k in_LNk on " + std::to_string(samples) + " candidates",
            agree == samples, std::to_string(members) + " members among candidates");
    rep.add("candidate pool contains members and non-members",
            members > 0 && members < samples);
    return rep;
}

CheckReport check_PN_group_closure(const NanoModel& model, int samples, std::uint64_t seed) {
    CheckReport rep;
    rep.title = "P_N group closure, N=" + std::to_string(model.N);
    const QuadField f(model.N);
    std::mt19937_64 rng(seed);
    int mul_ok = 0, inv_ok = 0;
    for (int s = 0; s < samples; ++s) {
        const SpMatrix a = sample_PN(model, f, rng);
        const SpMatrix b = sample_PN(model, f, rng);
        if (in_PN(model, sp_mul(f, a, b))) ++mul_ok;
        if (in_PN(model, sp_inverse(f, a))) ++inv_ok;
    }
    rep.add("closed under multiplication", mul_ok == samples,
            std::to_string(mul_ok) + "/" + std::to_string(samples));
    rep.add("closed under inverse", inv_ok == samples,
            std::to_string(inv_ok) + "/" + std::to_string(samples));
    return rep;
}

CheckReport check_swap_symmetry(const NanoModel& model, int g, const PotentialCaps& caps) {
    CheckReport rep;
    rep.title = "swap symmetry of the lifted potential, N=" + std::to_string(model.N) +
                ", g=" + std::to_string(g);
    if (g < 2) throw Error("check_swap_symmetry: g >= 2 required");

    const MultiSeries ban = f_ban(g, caps);
    const std::int64_t N = model.N;

    // multiplicity of k equals multiplicity of N/k (the multiset identity)
    auto multiplicity = [&model](int k) {
        int c = 0;
        for (int kk : model.theta) c += (kk == k);
        return c;
    };
    bool multiset_ok = true;
    for (int k : model.theta) multiset_ok &= multiplicity(k) == multiplicity(model.cofactor(k));
    rep.add("{N/k : k in Theta} = Theta as multisets", multiset_ok);

    // S_k = F^ban_g(Q^{Nk}, q^{N/k}, y^N) on its exact window; the induced
    // map (e_Q,e_q,e_y) -> (N e_q, e_Q/N, e_y) must carry S_k onto S_{N/k}
    std::size_t mismatches = 0, compared = 0;
    for (int k : model.theta) {
        const int l = model.cofactor(k);
        const std::vector<VarSpec> wk{var("Q", 0, N * k * caps.Q), var("q", 0, l * caps.q),
                                      var("y", -N * caps.y, N * caps.y)};
        const std::vector<VarSpec> wl{var("Q", 0, N * l * caps.Q), var("q", 0, k * caps.q),
                                      var("y", -N * caps.y, N * caps.y)};
        const MultiSeries sk = substitute(ban, wk, {{N * k, 0, 0}, {0, l, 0}, {0, 0, N}});
        const MultiSeries sl = substitute(ban, wl, {{N * l, 0, 0}, {0, k, 0}, {0, 0, N}});
        // swap image of sk
        MultiSeries image(wl);
        for (const auto& [e, c] : sk.terms()) {
            if (e[0] % N != 0) {
                ++mismatches;
                continue;
            }
            image.add_term({N * e[1], e[0] / N, e[2]}, c);
        }
        compared += sk.size();
        if (!(image == sl)) ++mismatches;
    }
    rep.add("swap(S_k) = S_{N/k} for all k (" + std::to_string(compared) + " terms)",
            mismatches == 0);
    return rep;
}

} // namespace nanoban
