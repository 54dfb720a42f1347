#include "nanoban/series.hpp"

#include <algorithm>
#include <sstream>

namespace nanoban {

namespace {

std::string tuple_str(const MultiSeries::Exponents& e) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << ")";
    return os.str();
}

void require_same_vars(const MultiSeries& a, const MultiSeries& b) {
    if (!a.same_vars(b)) throw VarMismatch("variable specs differ");
}

// iteration guard for geometric loops: one more than the number of lattice
// points in the window, so a strictly window-graded sequence must die first
std::uint64_t window_volume(const std::vector<VarSpec>& vars) {
    std::uint64_t v = 1;
    for (const auto& s : vars) {
        std::uint64_t extent = static_cast<std::uint64_t>(s.max_exp - s.min_exp) + 1;
        if (extent == 0 || v > (UINT64_MAX / 2) / extent) return UINT64_MAX / 2;
        v *= extent;
    }
    return v;
}

} // namespace

VarSpec var(std::string name, std::int64_t min_exp, std::int64_t max_exp,
            std::int64_t denom) {
    if (denom < 1) throw Error("VarSpec: denom must be >= 1");
    if (min_exp > max_exp) throw Error("VarSpec: min_exp > max_exp");
    return VarSpec{std::move(name), denom, min_exp, max_exp};
}

MultiSeries::MultiSeries(std::vector<VarSpec> vars) : vars_(std::move(vars)) {
    for (const auto& s : vars_) {
        if (s.denom < 1) throw Error("VarSpec: denom must be >= 1");
        if (s.min_exp > s.max_exp) throw Error("VarSpec: min_exp > max_exp");
    }
}

MultiSeries MultiSeries::zero(std::vector<VarSpec> vars) {
    return MultiSeries(std::move(vars));
}

MultiSeries MultiSeries::constant(std::vector<VarSpec> vars, Rat value) {
    MultiSeries s(std::move(vars));
    s.add_term(Exponents(s.vars_.size(), 0), value);
    return s;
}

MultiSeries MultiSeries::monomial(std::vector<VarSpec> vars, Exponents expo, Rat coeff) {
    MultiSeries s(std::move(vars));
    if (expo.size() != s.vars_.size()) throw Error("monomial: exponent arity mismatch");
    if (!s.in_window(expo))
        throw OutsideWindow("monomial exponent " + tuple_str(expo) + " outside window");
    s.add_term(expo, coeff);
    return s;
}

bool MultiSeries::in_window(const Exponents& e) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (e[i] < vars_[i].min_exp || e[i] > vars_[i].max_exp) return false;
    return true;
}

void MultiSeries::add_term(const Exponents& e, const Rat& c) {
    if (c == 0) return;
    if (!in_window(e)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat MultiSeries::coeff_at(const Exponents& e) const {
    if (e.size() != vars_.size()) throw Error("coeff: exponent arity mismatch");
    if (!in_window(e))
        throw OutsideWindow("coefficient request " + tuple_str(e) + " outside window");
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

MultiSeries add(const MultiSeries& a, const MultiSeries& b) {
    require_same_vars(a, b);
    MultiSeries out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, c);
    return out;
}

MultiSeries sub(const MultiSeries& a, const MultiSeries& b) {
    require_same_vars(a, b);
    MultiSeries out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, -c);
    return out;
}

MultiSeries neg(const MultiSeries& a) {
    MultiSeries out(a.vars());
    for (const auto& [e, c] : a.terms()) out.add_term(e, -c);
    return out;
}

MultiSeries scale(const MultiSeries& a, const Rat& c) {
    MultiSeries out(a.vars());
    if (c == 0) return out;
    for (const auto& [e, v] : a.terms()) out.add_term(e, v * c);
    return out;
}

MultiSeries mul(const MultiSeries& a, const MultiSeries& b) {
    require_same_vars(a, b);
    MultiSeries out(a.vars());
    const std::size_t n = a.vars().size();
    MultiSeries::Exponents e(n);
    // iterate the smaller operand outermost so the inner loop streams the map
    const MultiSeries& outer = a.size() <= b.size() ? a : b;
    const MultiSeries& inner = a.size() <= b.size() ? b : a;
    for (const auto& [ea, ca] : outer.terms()) {
        for (const auto& [eb, cb] : inner.terms()) {
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiSeries inverse(const MultiSeries& a, const MultiSeries::Exponents& pivot) {
    if (pivot.size() != a.vars().size()) throw Error("inverse: pivot arity mismatch");
    auto it = a.terms().find(pivot);
    if (it == a.terms().end() || it->second == 0)
        throw NotAUnit("pivot coefficient is zero at " + tuple_str(pivot));
    const Rat c0 = it->second;
    const std::size_t n = a.vars().size();

    // u = a / monomial(pivot) lives in a shifted window; its inverse is
    // (1/c0) * sum (-E)^k with E = u/c0 - 1
    std::vector<VarSpec> shifted = a.vars();
    for (std::size_t i = 0; i < n; ++i) {
        shifted[i].min_exp -= pivot[i];
        shifted[i].max_exp -= pivot[i];
    }
    MultiSeries E(shifted);
    for (const auto& [e, c] : a.terms()) {
        MultiSeries::Exponents se(n);
        for (std::size_t i = 0; i < n; ++i) se[i] = e[i] - pivot[i];
        if (se == MultiSeries::Exponents(n, 0)) continue;
        E.add_term(se, c / c0);
    }

    MultiSeries inv_u = MultiSeries::constant(shifted, Rat(1));
    MultiSeries p = MultiSeries::constant(shifted, Rat(1));
    const std::uint64_t guard = window_volume(shifted) + 2;
    for (std::uint64_t k = 0; !p.is_zero(); ++k) {
        if (k > guard)
            throw NotAUnit("nonconstant part is not nilpotent in the window "
                           "(wrong expansion branch?)");
        p = mul(p, E);
        p = scale(p, Rat(-1));
        inv_u = add(inv_u, p);
    }

    // shift back by -pivot into the original window
    MultiSeries out(a.vars());
    for (const auto& [e, c] : inv_u.terms()) {
        MultiSeries::Exponents oe(n);
        for (std::size_t i = 0; i < n; ++i) oe[i] = e[i] - pivot[i];
        out.add_term(oe, c / c0);
    }
    return out;
}

MultiSeries log1p_neg(const MultiSeries& x, const Int& e) {
    const std::size_t n = x.vars().size();
    if (x.terms().count(MultiSeries::Exponents(n, 0)))
        throw ConstantTermPresent("log1p_neg: x has a constant term");
    MultiSeries out(x.vars());
    if (e == 0 || x.is_zero()) return out;
    MultiSeries p = x;
    const std::uint64_t guard = window_volume(x.vars()) + 2;
    Rat me(-e);
    for (std::uint64_t k = 1; !p.is_zero(); ++k) {
        if (k > guard) throw NotAUnit("log1p_neg: x is not nilpotent in the window");
        out = add(out, scale(p, me / Rat(static_cast<long>(k))));
        p = mul(p, x);
    }
    return out;
}

MultiSeries exp(const MultiSeries& x) {
    const std::size_t n = x.vars().size();
    if (x.terms().count(MultiSeries::Exponents(n, 0)))
        throw ConstantTermPresent("exp: x has a constant term");
    MultiSeries out = MultiSeries::constant(x.vars(), Rat(1));
    MultiSeries term = MultiSeries::constant(x.vars(), Rat(1));
    const std::uint64_t guard = window_volume(x.vars()) + 2;
    for (std::uint64_t k = 1; ; ++k) {
        if (k > guard) throw NotAUnit("exp: x is not nilpotent in the window");
        term = mul(term, x);
        term = scale(term, Rat(1, static_cast<long>(k)));
        if (term.is_zero()) break;
        out = add(out, term);
    }
    return out;
}

MultiSeries pow(const MultiSeries& x, long e) {
    if (e < 0) {
        MultiSeries::Exponents zero(x.vars().size(), 0);
        return pow(inverse(x, zero), -e);
    }
    MultiSeries out = MultiSeries::constant(x.vars(), Rat(1));
    MultiSeries base = x;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) out = mul(out, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return out;
}

Rat coeff(const MultiSeries& x, const MultiSeries::Exponents& t) {
    return x.coeff_at(t);
}

MultiSeries substitute(const MultiSeries& x, std::vector<VarSpec> target,
                       const std::vector<MultiSeries::Exponents>& images) {
    const std::size_t ns = x.vars().size();
    const std::size_t nt = target.size();
    if (images.size() != ns) throw Error("substitute: one image per source variable required");
    for (const auto& im : images)
        if (im.size() != nt) throw Error("substitute: image arity mismatch");

    MultiSeries out(std::move(target));
    MultiSeries::Exponents te(nt);
    for (const auto& [e, c] : x.terms()) {
        bool ok = true;
        for (std::size_t j = 0; j < nt && ok; ++j) {
            // sum_i (e_i / denom_i) * images[i][j], exact
            std::int64_t acc = 0;
            for (std::size_t i = 0; i < ns; ++i) {
                const std::int64_t num = e[i] * images[i][j];
                const std::int64_t den = x.vars()[i].denom;
                if (num % den != 0) {
                    throw DenomOverflow("substitute: fractional exponent not representable "
                                        "for target variable " + out.vars()[j].name);
                }
                acc += num / den;
            }
            te[j] = acc;
            if (acc < out.vars()[j].min_exp || acc > out.vars()[j].max_exp) ok = false;
        }
        if (ok) out.add_term(te, c);
    }
    return out;
}

MultiSeries substitute_monomial(const MultiSeries& x, const std::string& var_name,
                                const MultiSeries::Exponents& image) {
    const std::size_t n = x.vars().size();
    std::vector<MultiSeries::Exponents> images(n, MultiSeries::Exponents(n, 0));
    bool found = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (x.vars()[i].name == var_name) {
            images[i] = image;
            found = true;
        } else {
            images[i][i] = x.vars()[i].denom; // identity: one unit of x_i
        }
    }
    if (!found) throw Error("substitute_monomial: unknown variable " + var_name);
    return substitute(x, x.vars(), images);
}

MultiSeries rewindow(const MultiSeries& x, std::vector<VarSpec> target) {
    if (target.size() != x.vars().size()) throw VarMismatch("rewindow: arity mismatch");
    for (std::size_t i = 0; i < target.size(); ++i) {
        if (target[i].name != x.vars()[i].name || target[i].denom != x.vars()[i].denom)
            throw VarMismatch("rewindow: name/denom mismatch for " + target[i].name);
    }
    MultiSeries out(std::move(target));
    for (const auto& [e, c] : x.terms()) out.add_term(e, c);
    return out;
}

} // namespace nanoban
