// The coefficient table c(a,m) of the theta quotient
//
//   sum_{a>=-1} sum_m c(a,m) q^a y^m
//     = (sum_{m in Z} q^{m^2} (-y)^m) / (sum_{m in Z+1/2} q^{2m^2} (-y)^m)^2
//
// together with its finite-support companion b(a,m), defined by factoring
// (y^{1/2} - y^{-1/2})^2 out of the quotient:
//
//   sum_m c(a,m) y^m  =  [sum_m b(a,m) y^m] * (y^{1/2} - y^{-1/2})^{-2},
//
// the inverse kernel expanded in non-negative powers of y.
//
// The half-integer powers (-y)^m are never evaluated: the denominator is the
// branch-independent square  -q (y^{1/2}-y^{-1/2})^2 H(q,y)^2  with
// H(q,y) = sum_{j>=0} (-1)^j q^{2j(j+1)} (y^{-j} + ... + y^j), up to an
// overall sign that is calibrated, not guessed: the resolved-conifold
// orientation forces b(-1,0) = -1 (equivalently n^0 at a = -1 equals +1).

#ifndef NANOBAN_COEFF_TABLE_HPP
#define NANOBAN_COEFF_TABLE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "nanoban/series.hpp"

namespace nanoban {

class CoeffTable {
public:
    std::int64_t a_max() const { return a_max_; }
    std::int64_t m_max() const { return m_max_; }
    int sigma() const { return sigma_; }
    bool b_symmetric() const { return b_symmetric_; }
    bool c_symmetric() const { return c_symmetric_; }

    // c(a,m): zero outside the realized support; throws TableWindowExceeded
    // when (a,m) is outside the built window
    const Int& c(std::int64_t a, std::int64_t m) const;
    // b(a,.) as a finite row; a in [-1, a_max]
    std::map<std::int64_t, Int> b_row(std::int64_t a) const;

    const std::map<std::pair<std::int64_t, std::int64_t>, Int>& c_map() const { return c_; }
    const std::map<std::pair<std::int64_t, std::int64_t>, Int>& b_map() const { return b_; }

    friend CoeffTable build_coeff_table(std::int64_t a_max, std::int64_t m_max);

private:
    std::int64_t a_max_ = 0, m_max_ = 0;
    int sigma_ = 0;
    bool b_symmetric_ = false, c_symmetric_ = false;
    std::map<std::pair<std::int64_t, std::int64_t>, Int> c_, b_;
};

// Builds both tables on the window -1 <= a <= a_max, |m| <= m_max, with the
// sign calibrated as above. Throws CalibrationFailure if no (or both) sign
// choice matches the conifold orientation, TableBuildError if the b-support
// bound |m| <= a+2 fails.
CoeffTable build_coeff_table(std::int64_t a_max, std::int64_t m_max);

// lambda-resummation of the d-layer through the b-table kernel:
//   sum_g out[g] lambda^{2g-2} = [sum_m b(d,m) e^{im lambda}]
//                                  / (e^{i lambda/2} - e^{-i lambda/2})^2,
// exact rationals (all powers of i cancel); out has entries for g = 0..G.
// Throws TableWindowExceeded for d outside the table window.
std::vector<Rat> resum_lambda(const CoeffTable& table, std::int64_t d, int G);

} // namespace nanoban

#endif
