#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

// Arbitrary-precision integers and rationals.  mpq_class keeps values
// canonical (gcd(|num|,den)=1, den>=1) through arithmetic; the parsing
// helpers below canonicalize explicitly.
using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<Int>;
using RVec = std::vector<Rat>;
using CVec = std::vector<std::complex<double>>;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// "p/q" or "p".  Inverse of rat_to_string.
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);

std::string ivec_to_string(const IVec& v);

inline double to_double(const Rat& q) { return q.get_d(); }

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Exact integer n-th root when it exists.
bool nth_root_exact(const Int& a, unsigned n, Int& out);

inline IVec ivec_of(std::initializer_list<long> xs) {
    IVec v;
    v.reserve(xs.size());
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace toric
