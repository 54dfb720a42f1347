// Arithmetic verification layer: naive point counts on the Weierstrass
// models, a_p comparison against the weight-2 eta products, group-action
// sampling on the explicit pencils, singular-fiber location over several
// primes with CRT + rational reconstruction, and the j-invariant pipeline.

#ifndef NANOBAN_ARITH_HPP
#define NANOBAN_ARITH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "nanoban/models.hpp"
#include "nanoban/qforms.hpp"
#include "nanoban/rational.hpp"
#include "nanoban/report.hpp"

namespace nanoban {

std::vector<std::int64_t> primes_below(std::int64_t bound);

// the eta-product cusp forms with level metadata; throws TableBuildError-free
// Error unless a_1 = 1 and all coefficients are integers
CuspForm cusp_form_weight4(const NanoModel& model, std::int64_t cap);
CuspForm cusp_form_weight2(const NanoModel& model, std::int64_t cap);

// #E(F_p) = 1 + sum_x (1 + chi(x^3 + a2 x^2 + a4 x + a6)); BadReduction when
// p divides the discriminant
std::int64_t count_points_ec(const WeierstrassCurve& curve, std::int64_t p);

// a_p(f_{E_N}) = p + 1 - #E_N(F_p) for every good prime p < p_max
CheckReport verify_ap(const NanoModel& model, std::int64_t p_max);

// weight-4 side: f_{E_N}(q)^2 = f_{X_N}(q^2) to the given order, plus a_1 = 1
// and integrality
CheckReport verify_eta_square_identity(const NanoModel& model, std::int64_t order);

// Hecke multiplicativity a_{mn} = a_m a_n for coprime m, n <= bound
CheckReport verify_multiplicativity(const NanoModel& model, std::int64_t bound);

// sampled generator checks over F_p: invariance f(gamma P) = 0, exact orders,
// commutation for the two-generator groups; DegenerateSample if the resample
// budget is exhausted
CheckReport verify_group_action(const NanoModel& model, std::int64_t p, int trials,
                                std::uint64_t seed);

struct MonicCubic {
    // X^3 + c[2] X^2 + c[1] X + c[0]
    std::array<Rat, 3> c;

    Rat discriminant() const;
    bool operator==(const MonicCubic&) const = default;
};

struct SingularFiberResult {
    MonicCubic cubic;                    // product over the three finite singular lambdas
    std::vector<std::int64_t> used;      // CRT primes
    std::int64_t held_out = 0;           // verification prime
    std::vector<std::int64_t> skipped;   // primes with a wrong finite fiber count
};

// locate the finite singular members of the pencil over each prime, CRT the
// monic cubic prod (X - lambda_i) and rationally reconstruct it; the last
// usable prime is held out for verification
SingularFiberResult singular_lambdas(const NanoModel& model,
                                     const std::vector<std::int64_t>& primes);

// j of y^2 = m(x) via c4, c6 (root-free); SingularQuartic <=> disc(m) = 0 is
// reported through WrongFiberCount-free errors: throws Error on zero disc
Rat j_invariant(const MonicCubic& m);

// when m splits over Q: the cross-ratio lambda of {inf, p2, p3, p4} and the
// classical j(lambda) = 2^8 (l^2-l+1)^3 / (l^2 (1-l)^2) as a cross-check
std::optional<Rat> j_via_cross_ratio(const MonicCubic& m);

// j of the tabulated Weierstrass model equals the pipeline j
CheckReport match_curve(const NanoModel& model, const Rat& pipeline_j);

// CRT + rational reconstruction helpers (standard half-modulus bound)
Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2);
std::optional<Rat> rational_reconstruct(const Int& r, const Int& modulus);

} // namespace nanoban

#endif
