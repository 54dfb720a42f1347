// Exact matrix predicates for the discrete subgroups P_N < Sp_4(Q), the
// sqrt(N) involution iota_N, the conjugated lattices L_{N,k}, and the
// Fourier-coefficient shadow of the (Q,q,y) -> (q^{1/N}, Q^N, y) symmetry of
// the lifted potentials.

#ifndef NANOBAN_SIEGEL_HPP
#define NANOBAN_SIEGEL_HPP

#include <array>
#include <cstdint>
#include <random>

#include "nanoban/gwgv.hpp"
#include "nanoban/models.hpp"
#include "nanoban/rational.hpp"
#include "nanoban/report.hpp"

namespace nanoban {

// element of Q(sqrt(N)): a + b sqrt(N); for square N the surd part is folded
// into the rational part so b is always 0
struct Quad {
    Rat a, b;

    bool rational() const { return b == 0; }
    bool operator==(const Quad&) const = default;
};

class QuadField {
public:
    explicit QuadField(int N);

    int N() const { return n_; }
    bool square() const { return root_ >= 0; }

    Quad make(Rat a, Rat b = Rat(0)) const;
    Quad from_rat(const Rat& a) const { return make(a); }
    Quad sqrtN() const { return make(Rat(0), Rat(1)); }

    Quad add(const Quad& x, const Quad& y) const;
    Quad sub(const Quad& x, const Quad& y) const;
    Quad mul(const Quad& x, const Quad& y) const;
    Quad neg(const Quad& x) const;

private:
    int n_ = 0;
    int root_ = -1; // sqrt(N) when N is a perfect square, else -1
};

struct SpMatrix {
    std::array<std::array<Quad, 4>, 4> e;

    const Quad& operator()(int i, int j) const { return e[i][j]; }
    Quad& operator()(int i, int j) { return e[i][j]; }
    bool rational() const;
    bool operator==(const SpMatrix&) const = default;
};

SpMatrix sp_identity(const QuadField& f);
SpMatrix sp_mul(const QuadField& f, const SpMatrix& x, const SpMatrix& y);
SpMatrix sp_from_rational(const QuadField& f,
                          const std::array<std::array<Rat, 4>, 4>& m);

// M^T J M = J with J = [[0, I2], [-I2, 0]]
bool is_symplectic(const QuadField& f, const SpMatrix& m);

// symplectic inverse J^{-1} M^T J (valid only for symplectic m)
SpMatrix sp_inverse(const QuadField& f, const SpMatrix& m);

// membership in P_N: rational, symplectic, and the 16 fractional-ideal entry
// conditions of the defining lattice pattern
bool in_PN(const NanoModel& model, const SpMatrix& m);

// membership in L_{N,k} = Sp_4(Q) n g^{-1} Sp_4(Z) g, g = diag(N, Nk, k, 1)
bool in_LNk(const NanoModel& model, int k, const SpMatrix& m);

// the same group cut out by its explicit fractional-ideal entry pattern;
// agrees with in_LNk (tested, not assumed)
bool in_LNk_pattern(const NanoModel& model, int k, const SpMatrix& m);

// the involution with sqrt(N) entries; iota^2 = I
SpMatrix iota(const NanoModel& model, const QuadField& f);

// deterministic random elements of P_N (products of lattice generators)
SpMatrix sample_PN(const NanoModel& model, const QuadField& f, std::mt19937_64& rng);

// conjugation closure iota M iota^{-1} in P_N on random samples; throws
// IrrationalConjugate if a conjugate picks up a surd part
CheckReport conj_preserves_PN(const NanoModel& model, int samples, std::uint64_t seed);

// P_N = intersection of L_{N,k} over k in Theta_N, tested on random
// symplectic candidates (members and near-members)
CheckReport check_PN_intersection(const NanoModel& model, int samples, std::uint64_t seed);

// closure of in_PN under multiplication and inverse on sampled pairs
CheckReport check_PN_group_closure(const NanoModel& model, int samples, std::uint64_t seed);

// coefficient-level check that Fcal_g = sum_k F^ban_g(Q^{Nk}, q^{N/k}, y^N)
// is invariant under (e_Q, e_q, e_y) -> (N e_q, e_Q / N, e_y)
CheckReport check_swap_symmetry(const NanoModel& model, int g, const PotentialCaps& caps);

} // namespace nanoban

#endif
