#pragma once

#include "salg/rational.hpp"

namespace salg {

// Element a + b*sqrt(2) of the quadratic extension Q(sqrt 2).
struct QuadExt {
    Rational a;
    Rational b;

    QuadExt() = default;
    QuadExt(Rational a_, Rational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}

    static QuadExt sqrt2() { return QuadExt(0, 1); }
    static QuadExt inv_sqrt2() { return QuadExt(0, rat(1, 2)); }  // 1/sqrt(2) = sqrt(2)/2

    bool is_zero() const { return a == 0 && b == 0; }

    QuadExt operator+(const QuadExt& o) const { return {a + o.a, b + o.b}; }
    QuadExt operator-(const QuadExt& o) const { return {a - o.a, b - o.b}; }
    QuadExt operator-() const { return {-a, -b}; }
    QuadExt operator*(const QuadExt& o) const
    {
        // (a + b s)(c + d s) = ac + 2bd + (ad + bc) s,  s^2 = 2
        return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
    }
    QuadExt& operator+=(const QuadExt& o)
    {
        a += o.a;
        b += o.b;
        return *this;
    }
    bool operator==(const QuadExt& o) const { return a == o.a && b == o.b; }
};

inline std::string quad_str(const QuadExt& q)
{
    return "{" + rat_str(q.a) + "," + rat_str(q.b) + "}";
}

}  // namespace salg
