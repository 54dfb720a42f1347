// Fiber-class Donaldson-Thomas partition functions: the local banana factor
// Z(p,Q1,Q2,Q3) and the full Z_{X_N}(p,y,q,Q) product
//
//   Z = prod_{k in Theta_N} prod_{m,r,s,t} (1 - p^m q^{Nr/k} Q^{ks} y^{Nt})^{-c(4rs-t^2,m)}
//
// with r,s >= 0, t > 0 when r = s = 0, m > 0 when r = s = t = 0.
//
// Products are evaluated in log space (sums of log1p_neg) and exponentiated
// once. Factors with m < 0 exist, so in-window coefficients receive
// contributions passing through exponents outside the requested p- and
// y-windows; all assembly therefore runs in internally padded windows (pads
// bounded by a knapsack over the enumerated factors' negative reach) and the
// result is restricted to the caps at the end.

#ifndef NANOBAN_DT_HPP
#define NANOBAN_DT_HPP

#include <cstdint>

#include "nanoban/coeff_table.hpp"
#include "nanoban/models.hpp"
#include "nanoban/series.hpp"

namespace nanoban {

struct TruncationCaps {
    std::int64_t p = 8;  // symmetric window |e_p| <= p
    std::int64_t q = 4;  // 0 <= e_q <= q
    std::int64_t Q = 4;  // 0 <= e_Q <= Q
    std::int64_t y = 12; // symmetric window |e_y| <= y
};

struct LocalCaps {
    std::int64_t p = 6;
    std::int64_t d1 = 2, d2 = 2, d3 = 2;
};

// variable layouts
MultiSeries nano_vars(const TruncationCaps& caps);   // (p, q, Q, y)
MultiSeries local_vars(const LocalCaps& caps);       // (p, Q1, Q2, Q3)

// Z_{X_N} truncated to caps; every coefficient is an exact integer
MultiSeries z_nano(const NanoModel& model, const CoeffTable& table,
                   const TruncationCaps& caps);

// log Z_{X_N} restricted to caps (used by the GW/GV cross-checks)
MultiSeries log_z_nano(const NanoModel& model, const CoeffTable& table,
                       const TruncationCaps& caps);

// local banana factor over (p, Q1, Q2, Q3)
MultiSeries z_banana_local(const CoeffTable& table, const LocalCaps& caps);

// Z_{X_N} assembled as prod_k z_banana_local under Q1 = q^{N/k} y^{-N},
// Q2 = Q^k y^{-N}, Q3 = y^N; equals z_nano coefficient-for-coefficient
MultiSeries z_nano_via_local(const NanoModel& model, const CoeffTable& table,
                             const TruncationCaps& caps);

// thread count for parallel factor logs (NANOBAN_THREADS overrides)
unsigned dt_thread_count();

} // namespace nanoban

#endif
