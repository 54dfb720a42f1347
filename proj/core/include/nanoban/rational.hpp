#ifndef NANOBAN_RATIONAL_HPP
#define NANOBAN_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace nanoban {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// exact r / (a/b), asserting nothing; callers test is_integer on the result
inline Rat rat(long num, long den = 1) { Rat r(num, den); r.canonicalize(); return r; }

inline Int ipow(Int base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rat rpow(const Rat& base, long e) {
    if (e >= 0) {
        Rat out(ipow(base.get_num(), static_cast<unsigned long>(e)),
                ipow(base.get_den(), static_cast<unsigned long>(e)));
        out.canonicalize();
        return out;
    }
    Rat out(ipow(base.get_den(), static_cast<unsigned long>(-e)),
            ipow(base.get_num(), static_cast<unsigned long>(-e)));
    out.canonicalize();
    return out;
}

} // namespace nanoban

#endif
