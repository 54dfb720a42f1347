// Classical q-series building blocks: Dedekind eta and eta products,
// Eisenstein series, the weak Jacobi form phi_{-2,1}, the Weierstrass
// p-function expansion, the index-1 forms psi_{2g-2}, and extraction of
// their discriminant-indexed Fourier coefficients c_{2g-2}(4n-t^2).

#ifndef NANOBAN_QFORMS_HPP
#define NANOBAN_QFORMS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nanoban/series.hpp"

namespace nanoban {

// ---- Bernoulli numbers and the alpha_g = |B_{2g}| / (2g (2g-2)!) weights ----
Rat bernoulli(int n);          // B_n, n >= 0 (B_1 = -1/2)
Rat alpha_weight(int g);       // g >= 2

// ---- dense integer q-series (univariate, exponents 0..cap) ----
struct IntQSeries {
    std::int64_t cap = 0;        // inclusive truncation order
    std::vector<Int> a;          // a[n] = coefficient of q^n

    Int at(std::int64_t n) const {
        return (n >= 0 && n <= cap) ? a[static_cast<std::size_t>(n)] : Int(0);
    }
};

IntQSeries intq_mul(const IntQSeries& x, const IntQSeries& y);
// prod_{n>=1} (1 - q^{scale n}) by Euler's pentagonal-number theorem
IntQSeries euler_product(std::int64_t scale, std::int64_t cap);

// eta(q) = q^{1/24} prod (1-q^n) as a MultiSeries over q with denom 24
MultiSeries eta(std::int64_t q_cap);

// prod_k eta(q^k)^{e_k} for spec = {(k, e_k)}; requires sum k*e_k = 0 mod 24
// (FractionalLeadingExponent otherwise); returns an integer q-series whose
// leading term is q^{sum k e_k / 24}
IntQSeries eta_product(const std::vector<std::pair<std::int64_t, std::int64_t>>& spec,
                       std::int64_t cap);

// an eta-product cusp form with its level/weight metadata; a_1 = 1 always
struct CuspForm {
    IntQSeries series;
    int level = 0;
    int weight = 0;
};

// ---- Eisenstein series E_{2g} = 1 - (4g/B_{2g}) sum sigma_{2g-1}(n) q^n ----
MultiSeries eisenstein(int g, std::int64_t q_cap);

// ---- two-variable (q, y) forms ----
struct JacobiSeries {
    MultiSeries series;  // vars (q, y), integer exponents
    int weight = 0;
    int index = 1;
};

// map d -> c(d) read off from qⁿy^t coefficients via d = 4n - t²
struct CoeffByDiscriminant {
    std::map<std::int64_t, Rat> c;
    int genus = 0;

    Rat at(std::int64_t d) const {
        auto it = c.find(d);
        return it == c.end() ? Rat(0) : it->second;
    }
};

MultiSeries qy_vars_series(std::int64_t q_cap, std::int64_t y_cap);

JacobiSeries phi_neg2_1(std::int64_t q_cap, std::int64_t y_cap);
MultiSeries weierstrass_p(std::int64_t q_cap, std::int64_t y_cap);
JacobiSeries psi(int g, std::int64_t q_cap, std::int64_t y_cap);

// first (n,t) pair violating the index-1 property, if any
std::optional<std::pair<MultiSeries::Exponents, MultiSeries::Exponents>>
jacobi_property_violation(const JacobiSeries& f);

// throws InconsistentDiscriminant when two pairs with equal 4n-t² disagree
CoeffByDiscriminant extract_cdisc(const JacobiSeries& f);

} // namespace nanoban

#endif
