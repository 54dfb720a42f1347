// Per-N constants for the four banana nano-manifolds: the singular-fiber
// tuples Theta_N, the explicit cubic pencils f_N = mu*A - lambda*B over Q with
// their Mordell-Weil translation generators, and the Weierstrass models of
// the associated elliptic curves E_N.
//
// The N=5 pencil is Beauville's Gamma_1(5) family mu x(x-z)(y-z) - lambda
// zy(x-y); it is the unique member of Beauville's list that the printed
// order-5 generator (x,y,z) -> (y(x-z), -yz, z(x-y)) preserves, and it
// reproduces j_5 = 488095744/125 through the singular-fiber pipeline.

#ifndef NANOBAN_MODELS_HPP
#define NANOBAN_MODELS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nanoban/rational.hpp"

namespace nanoban {

struct NanoModel {
    int N = 0;
    std::array<int, 4> theta{};
    int d = 0; // gcd of theta

    int cofactor(int k) const { return N / k; } // l = N/k
};

// N in {5,6,8,9}; throws Error otherwise
const NanoModel& model_for(int N);
const std::array<int, 4>& all_N();

// ---- trivariate integer polynomials, coefficients in Z[w]/(w^2+w+1) ----
// (w only appears in the second N=9 generator; everything else has b = 0)
struct TriTerm {
    std::array<int, 3> e{}; // exponents of x, y, z
    std::int64_t a = 0;     // coefficient a + b*w
    std::int64_t b = 0;
};

struct TriPoly {
    std::vector<TriTerm> terms;

    bool needs_cube_root() const {
        for (const auto& t : terms)
            if (t.b != 0) return true;
        return false;
    }
    // evaluation over F_p; omega = a cube root of unity mod p (ignored when
    // no term uses w)
    std::int64_t eval_mod(std::int64_t x, std::int64_t y, std::int64_t z,
                          std::int64_t p, std::int64_t omega = 0) const;
    TriPoly derivative(int variable) const;
    int degree() const;
};

struct PencilGenerator {
    std::array<TriPoly, 3> map; // (x,y,z) -> (map[0], map[1], map[2])
    int order = 0;
};

struct PencilModel {
    int N = 0;
    TriPoly A, B; // f_N = mu*A - lambda*B
    std::vector<PencilGenerator> generators;
    bool two_generator = false; // commutation is part of the claim
    std::string mw_group;       // "Z5", "Z6", "Z4xZ2", "Z3xZ3"
};

const PencilModel& pencil_for(int N);

// FNV-1a over a canonical dump of the generator polynomials; the N=8 maps
// are long enough that transcription slips are a real risk
std::uint64_t generator_checksum(const PencilModel& p);

struct WeierstrassCurve {
    std::int64_t a2 = 0, a4 = 0, a6 = 0; // y^2 = x^3 + a2 x^2 + a4 x + a6
    std::string label;                   // LMFDB label of the model

    Int c4() const;
    Int c6() const;
    Int discriminant() const;
};

const WeierstrassCurve& curve_for(int N);

// eta-product exponent specs: f_X = prod eta(q^k)^2, f_E = prod eta(q^{2k});
// the weight-4 form lives on Gamma_0(N), the weight-2 form at level 4N
std::vector<std::pair<std::int64_t, std::int64_t>> eta_spec_weight4(const NanoModel& m);
std::vector<std::pair<std::int64_t, std::int64_t>> eta_spec_weight2(const NanoModel& m);

} // namespace nanoban

#endif
