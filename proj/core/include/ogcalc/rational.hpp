#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ogcalc {

using Rat = mpq_class;

/// 2^e as an exact rational, e may be negative.
inline Rat pow2(long e) {
    Rat r(1);
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline long rat_to_long(const Rat& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p()) throw std::domain_error("rational is not a small integer");
    return r.get_num().get_si();
}

}  // namespace ogcalc
