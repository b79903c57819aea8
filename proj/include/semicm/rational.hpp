#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace semicm {

using Int = mpz_class;
using Rat = mpq_class;

// A point of Q^d in the coordinates of the simplicial basis e_1..e_d.
using RatVec = std::vector<Rat>;
// A point of Z^n (ambient coordinates) or an exponent vector.
using IntVec = std::vector<Int>;

// mpq_class(n, d) does not canonicalize; this does.
inline Rat rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Fractional part in [0, 1).
inline Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

inline RatVec frac_vector(const RatVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (const Rat& q : v) out.push_back(rat_frac(q));
    return out;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline bool is_integral(const RatVec& v) {
    for (const Rat& q : v)
        if (!is_integral(q)) return false;
    return true;
}

// lcm of the (positive) denominators of the entries; 1 for the empty vector.
inline Int denominator_lcm(const RatVec& v) {
    Int m = 1;
    for (const Rat& q : v) m = lcm(m, Int(q.get_den()));
    return m;
}

inline RatVec to_rational(const IntVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (const Int& x : v) out.emplace_back(x);
    return out;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline std::string to_string(const RatVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s + ")";
}

inline std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s + ")";
}

} // namespace semicm
