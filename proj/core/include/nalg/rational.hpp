#pragma once

#include <gmpxx.h>

#include <string>

namespace nalg {

// Exact scalars. The ground field is Q throughout; Int is used for the
// fraction-free elimination kernels.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1)
{
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace nalg
