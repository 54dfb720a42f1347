// Truncated multivariate Laurent series with exact rational coefficients.
//
// Exponents are stored as scaled integers: a variable with denom d represents
// the exponent e/d by the integer e, so fractional powers such as q^{1/24} or
// y^{1/2} are exact. Each variable carries a truncation window [min_exp,
// max_exp] in scaled units; every operation discards exponents outside the
// window of the result.

#ifndef NANOBAN_SERIES_HPP
#define NANOBAN_SERIES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nanoban/errors.hpp"
#include "nanoban/rational.hpp"

namespace nanoban {

struct VarSpec {
    std::string name;
    std::int64_t denom = 1;
    std::int64_t min_exp = 0; // scaled
    std::int64_t max_exp = 0; // scaled

    bool operator==(const VarSpec&) const = default;
};

VarSpec var(std::string name, std::int64_t min_exp, std::int64_t max_exp,
            std::int64_t denom = 1);

class MultiSeries {
public:
    using Exponents = std::vector<std::int64_t>;
    using TermMap = std::map<Exponents, Rat>;

    MultiSeries() = default;
    explicit MultiSeries(std::vector<VarSpec> vars);

    static MultiSeries zero(std::vector<VarSpec> vars);
    static MultiSeries constant(std::vector<VarSpec> vars, Rat value);
    static MultiSeries monomial(std::vector<VarSpec> vars, Exponents expo,
                                Rat coeff = Rat(1));

    const std::vector<VarSpec>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool in_window(const Exponents& e) const;
    // accumulate into a term; silently drops exponents outside the window
    void add_term(const Exponents& e, const Rat& c);
    // coefficient lookup: 0 for absent in-window tuples, OutsideWindow otherwise
    Rat coeff_at(const Exponents& e) const;

    bool same_vars(const MultiSeries& o) const { return vars_ == o.vars_; }

    bool operator==(const MultiSeries& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }

private:
    std::vector<VarSpec> vars_;
    TermMap terms_;
};

// ---- arithmetic (throws VarMismatch unless both operands share vars) ----
MultiSeries add(const MultiSeries& a, const MultiSeries& b);
MultiSeries sub(const MultiSeries& a, const MultiSeries& b);
MultiSeries neg(const MultiSeries& a);
MultiSeries scale(const MultiSeries& a, const Rat& c);
MultiSeries mul(const MultiSeries& a, const MultiSeries& b);

inline MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) { return add(a, b); }
inline MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) { return sub(a, b); }
inline MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) { return mul(a, b); }

// Multiplicative inverse with respect to the pivot monomial: a must equal
// pivot * (unit), where the unit has a nonzero constant term and its
// nonconstant part is nilpotent in the (window-shifted) truncated ring.
// Throws NotAUnit otherwise.
MultiSeries inverse(const MultiSeries& a, const MultiSeries::Exponents& pivot);

// e * log(1-x) = -e * sum_{n>=1} x^n / n, truncated. x must have no constant
// term and its powers must leave the window (ConstantTermPresent / NotAUnit).
MultiSeries log1p_neg(const MultiSeries& x, const Int& e);

MultiSeries exp(const MultiSeries& x);
MultiSeries pow(const MultiSeries& x, long e);

// coefficient of the exponent tuple t (scaled); errors outside the window
Rat coeff(const MultiSeries& x, const MultiSeries::Exponents& t);

// Map every source variable to a monomial in the target variable set:
// images[i][j] is the scaled target-j exponent of the image of one whole unit
// of source variable i (i.e. of x_i^1). A source term with scaled exponent e_i
// contributes (e_i / denom_i) * images[i] to the target tuple; throws
// DenomOverflow when that is not integral in the target lattice.
MultiSeries substitute(const MultiSeries& x, std::vector<VarSpec> target,
                       const std::vector<MultiSeries::Exponents>& images);

// single-variable convenience: var -> image (in the same variable set)
MultiSeries substitute_monomial(const MultiSeries& x, const std::string& var_name,
                                const MultiSeries::Exponents& image);

// copy into new windows (same names/denoms), dropping exponents that no
// longer fit; used to restrict internally padded computations
MultiSeries rewindow(const MultiSeries& x, std::vector<VarSpec> target);

} // namespace nanoban

#endif
