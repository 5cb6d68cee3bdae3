#pragma once

#include "salg/algebra.hpp"
#include "salg/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace salg {

// The two hard-coded Lie conformal superalgebras: the rank-(2+1) algebra on
// {L, W, G} and the Neveu-Schwarz algebra on {L, G}.
enum class ConformalAlgebra { S, SVir };

enum class CGen { L, W, G };

const char* cgen_name(CGen g);
inline Parity cgen_parity(CGen g)
{
    return g == CGen::G ? Parity::Odd : Parity::Even;
}

// One monomial d^dpow * gen of the free C[d]-module (d is the translation
// generator, written "∂" in math).
struct CTerm {
    CGen gen;
    int dpow = 0;

    auto operator<=>(const CTerm&) const = default;
};

// Element of C[d]L + C[d]W + C[d]G; zero coefficients never stored.
class ConformalElement {
  public:
    std::map<CTerm, Rational> terms;

    ConformalElement() = default;
    static ConformalElement unit(CGen g, int dpow = 0);

    bool is_zero() const { return terms.empty(); }
    void add_term(const CTerm& t, const Rational& c);
    ConformalElement& operator+=(const ConformalElement& o);
    ConformalElement operator*(const Rational& c) const;
    ConformalElement operator-() const { return *this * Rational(-1); }
    bool operator==(const ConformalElement& o) const { return terms == o.terms; }

    ConformalElement der() const;  // apply d once

    std::string str() const;
};

// Polynomial in lambda with ConformalElement coefficients.
class LambdaPolynomial {
  public:
    std::map<int, ConformalElement> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    void add(int lpow, const ConformalElement& e);
    LambdaPolynomial& operator+=(const LambdaPolynomial& o);
    LambdaPolynomial operator*(const Rational& c) const;
    LambdaPolynomial operator-() const { return *this * Rational(-1); }
    bool operator==(const LambdaPolynomial& o) const { return coeffs == o.coeffs; }

    std::string str() const;
};

LambdaPolynomial lambda_bracket(const ConformalElement& x, const ConformalElement& y,
                                ConformalAlgebra alg);

// j! times the lambda^j coefficient of the bracket.
ConformalElement jth_product(const ConformalElement& x, const ConformalElement& y, int j,
                             ConformalAlgebra alg);

// Sesquilinearity, skew-symmetry and Jacobi with lambda, mu formal, on all
// generator pairs/triples with d-powers <= max_deg.
CheckReport conformal_axiom_check(int max_deg, ConformalAlgebra alg);

// Basis element a_(n) of the annihilation superalgebra, n >= 0.
struct AnnGen {
    CGen gen;
    long n = 0;

    auto operator<=>(const AnnGen&) const = default;
};

std::string ann_str(const AnnGen& a);

using AnnVector = std::map<AnnGen, Rational>;

std::string ann_vec_str(const AnnVector& v);

// [a_(m), b_(n)] = sum_j C(m,j) (a_(j) b)_(m+n-j), normalized to pure
// generators via (d a)_(n) = -n a_(n-1).
AnnVector annihilation_bracket(const AnnGen& a, const AnnGen& b, ConformalAlgebra alg);

// Action of the extra even generator d of the extended annihilation
// superalgebra C d |x Lie(R): [d, a_(n)] = -n a_(n-1).
AnnVector ext_derivation(const AnnGen& a);

// Relabeling L_(n) -> L_{1-n}, W_(n) -> W_{-n-1}, G_(n) -> G_{-n} of the
// annihilation superalgebra of S onto (part of) the Sbar0 preset.
GenIndex relabel_ann(const AnnGen& a);

// Verifies that annihilation_bracket, after relabel_ann on both sides, agrees
// with the Sbar0 structure constants for all indices 0..window+2.
CheckReport relabel_to_sbar0_check(long window);

}  // namespace salg
