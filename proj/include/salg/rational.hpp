#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace salg {

// Exact rational scalar. mpq_class keeps fractions canonicalized
// (lowest terms, positive denominator) after arithmetic.
using Rational = mpq_class;

inline Rational rat_parse(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

// "p" or "p/q", canonical form.
inline std::string rat_str(const Rational& q)
{
    return q.get_str();
}

inline Rational rat(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational binom(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    Rational r = 1;
    for (long i = 1; i <= k; ++i)
        r *= rat(n - k + i, i);
    return r;
}

}  // namespace salg
