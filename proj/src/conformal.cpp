#include "salg/conformal.hpp"

#include <sstream>

namespace salg {

const char* cgen_name(CGen g)
{
    switch (g) {
        case CGen::L: return "L";
        case CGen::W: return "W";
        case CGen::G: return "G";
    }
    return "?";
}

ConformalElement ConformalElement::unit(CGen g, int dpow)
{
    ConformalElement e;
    e.add_term({g, dpow}, 1);
    return e;
}

void ConformalElement::add_term(const CTerm& t, const Rational& c)
{
    if (c == 0)
        return;
    auto it = terms.find(t);
    if (it == terms.end()) {
        terms.emplace(t, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

ConformalElement& ConformalElement::operator+=(const ConformalElement& o)
{
    for (const auto& [t, c] : o.terms)
        add_term(t, c);
    return *this;
}

ConformalElement ConformalElement::operator*(const Rational& c) const
{
    ConformalElement r;
    if (c == 0)
        return r;
    for (const auto& [t, v] : terms)
        r.terms.emplace(t, v * c);
    return r;
}

ConformalElement ConformalElement::der() const
{
    ConformalElement r;
    for (const auto& [t, c] : terms)
        r.terms.emplace(CTerm{t.gen, t.dpow + 1}, c);
    return r;
}

std::string ConformalElement::str() const
{
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms) {
        if (!first)
            os << " + ";
        os << rat_str(c) << "*";
        for (int i = 0; i < t.dpow; ++i)
            os << "d";
        os << cgen_name(t.gen);
        first = false;
    }
    return os.str();
}

void LambdaPolynomial::add(int lpow, const ConformalElement& e)
{
    if (e.is_zero())
        return;
    auto it = coeffs.find(lpow);
    if (it == coeffs.end()) {
        coeffs.emplace(lpow, e);
    } else {
        it->second += e;
        if (it->second.is_zero())
            coeffs.erase(it);
    }
}

LambdaPolynomial& LambdaPolynomial::operator+=(const LambdaPolynomial& o)
{
    for (const auto& [k, e] : o.coeffs)
        add(k, e);
    return *this;
}

LambdaPolynomial LambdaPolynomial::operator*(const Rational& c) const
{
    LambdaPolynomial r;
    if (c == 0)
        return r;
    for (const auto& [k, e] : coeffs)
        r.coeffs.emplace(k, e * c);
    return r;
}

std::string LambdaPolynomial::str() const
{
    if (coeffs.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, e] : coeffs) {
        if (!first)
            os << " + ";
        os << "l^" << k << "*(" << e.str() << ")";
        first = false;
    }
    return os.str();
}

namespace {

// Nontrivial brackets of pure generators, canonical order L < W < G only.
LambdaPolynomial gen_table(CGen a, CGen b, ConformalAlgebra alg)
{
    LambdaPolynomial p;
    if (alg == ConformalAlgebra::S) {
        if (a == CGen::L && b == CGen::L) {
            p.add(0, ConformalElement::unit(CGen::L, 1));
            p.add(1, ConformalElement::unit(CGen::L) * 2);
        } else if (a == CGen::L && b == CGen::W) {
            p.add(0, ConformalElement::unit(CGen::W, 1));
        } else if (a == CGen::L && b == CGen::G) {
            p.add(0, ConformalElement::unit(CGen::G, 1));
            p.add(1, ConformalElement::unit(CGen::G));
        } else if (a == CGen::G && b == CGen::G) {
            p.add(0, ConformalElement::unit(CGen::W, 1));
        }
        return p;
    }
    // SVir: no W generator.
    if (a == CGen::L && b == CGen::L) {
        p.add(0, ConformalElement::unit(CGen::L, 1));
        p.add(1, ConformalElement::unit(CGen::L) * 2);
    } else if (a == CGen::L && b == CGen::G) {
        p.add(0, ConformalElement::unit(CGen::G, 1));
        p.add(1, ConformalElement::unit(CGen::G) * rat(3, 2));
    } else if (a == CGen::G && b == CGen::G) {
        p.add(0, ConformalElement::unit(CGen::L) * 2);
    }
    return p;
}

// Substitution lambda -> -lambda - d, the d acting on the coefficients from
// the left: lambda^k e -> sum_i C(k,i) (-1)^k lambda^i d^{k-i} e.
LambdaPolynomial subst_neg(const LambdaPolynomial& p)
{
    LambdaPolynomial r;
    for (const auto& [k, e] : p.coeffs) {
        ConformalElement de = e;
        // i descending so we can apply der() incrementally: at i, need d^{k-i} e.
        for (int i = k; i >= 0; --i) {
            Rational c = binom(k, i) * ((k % 2 == 0) ? 1 : -1);
            r.add(i, de * c);
            if (i > 0)
                de = de.der();
        }
    }
    return r;
}

}  // namespace

LambdaPolynomial lambda_bracket(const ConformalElement& x, const ConformalElement& y,
                                ConformalAlgebra alg)
{
    LambdaPolynomial out;
    for (const auto& [tx, cx] : x.terms)
        for (const auto& [ty, cy] : y.terms) {
            LambdaPolynomial base = gen_table(tx.gen, ty.gen, alg);
            if (base.is_zero()) {
                // Reversed-order pair: derive from skew-symmetry.
                LambdaPolynomial rev = gen_table(ty.gen, tx.gen, alg);
                if (rev.is_zero())
                    continue;
                bool both_odd = cgen_parity(tx.gen) == Parity::Odd &&
                                cgen_parity(ty.gen) == Parity::Odd;
                base = subst_neg(rev) * Rational(both_odd ? 1 : -1);
            }
            // [d^p a _l d^q b] = (-l)^p (d+l)^q [a_l b]
            LambdaPolynomial cur;
            int sign = (tx.dpow % 2 == 0) ? 1 : -1;
            for (const auto& [k, e] : base.coeffs)
                cur.add(k + tx.dpow, e * Rational(sign));
            for (int q = 0; q < ty.dpow; ++q) {
                LambdaPolynomial next;
                for (const auto& [k, e] : cur.coeffs) {
                    next.add(k, e.der());
                    next.add(k + 1, e);
                }
                cur = next;
            }
            out += cur * (cx * cy);
        }
    return out;
}

ConformalElement jth_product(const ConformalElement& x, const ConformalElement& y, int j,
                             ConformalAlgebra alg)
{
    LambdaPolynomial p = lambda_bracket(x, y, alg);
    auto it = p.coeffs.find(j);
    if (it == p.coeffs.end())
        return {};
    Rational fact = 1;
    for (int i = 2; i <= j; ++i)
        fact *= i;
    return it->second * fact;
}

namespace {

// Polynomial in lambda and mu with ConformalElement coefficients, for the
// Jacobi identity.
using TwoVar = std::map<std::pair<int, int>, ConformalElement>;

void tv_add(TwoVar& p, int lpow, int mpow, const ConformalElement& e)
{
    if (e.is_zero())
        return;
    auto key = std::make_pair(lpow, mpow);
    auto it = p.find(key);
    if (it == p.end()) {
        p.emplace(key, e);
    } else {
        it->second += e;
        if (it->second.is_zero())
            p.erase(it);
    }
}

std::vector<CGen> alg_gens(ConformalAlgebra alg)
{
    if (alg == ConformalAlgebra::S)
        return {CGen::L, CGen::W, CGen::G};
    return {CGen::L, CGen::G};
}

}  // namespace

CheckReport conformal_axiom_check(int max_deg, ConformalAlgebra alg)
{
    CheckReport rep;
    std::vector<ConformalElement> elems;
    std::vector<Parity> pars;
    for (CGen g : alg_gens(alg))
        for (int p = 0; p <= max_deg; ++p) {
            elems.push_back(ConformalElement::unit(g, p));
            pars.push_back(cgen_parity(g));
        }

    // sesquilinearity: [da_l b] = -l [a_l b], [a_l db] = (d+l)[a_l b]
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j) {
            LambdaPolynomial base = lambda_bracket(elems[i], elems[j], alg);
            LambdaPolynomial want_left;
            for (const auto& [k, e] : base.coeffs)
                want_left.add(k + 1, -e);
            LambdaPolynomial want_right;
            for (const auto& [k, e] : base.coeffs) {
                want_right.add(k, e.der());
                want_right.add(k + 1, e);
            }
            ++rep.checked;
            if (lambda_bracket(elems[i].der(), elems[j], alg) != want_left)
                rep.fail("sesquilinearity (left) fails at " + elems[i].str() + ", " +
                         elems[j].str());
            if (lambda_bracket(elems[i], elems[j].der(), alg) != want_right)
                rep.fail("sesquilinearity (right) fails at " + elems[i].str() + ", " +
                         elems[j].str());
        }

    // skew-symmetry
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j) {
            bool both_odd = pars[i] == Parity::Odd && pars[j] == Parity::Odd;
            LambdaPolynomial lhs = lambda_bracket(elems[i], elems[j], alg);
            LambdaPolynomial rhs = subst_neg(lambda_bracket(elems[j], elems[i], alg)) *
                                   Rational(both_odd ? 1 : -1);
            ++rep.checked;
            if (lhs != rhs)
                rep.fail("skew fails at " + elems[i].str() + ", " + elems[j].str() + ": " +
                         lhs.str() + " vs " + rhs.str());
        }

    // Jacobi: [a_l [b_m c]] = [[a_l b]_{l+m} c] + (-1)^{|a||b|} [b_m [a_l c]]
    for (size_t ia = 0; ia < elems.size(); ++ia)
        for (size_t ib = 0; ib < elems.size(); ++ib)
            for (size_t ic = 0; ic < elems.size(); ++ic) {
                TwoVar lhs, rhs;
                LambdaPolynomial bc = lambda_bracket(elems[ib], elems[ic], alg);
                for (const auto& [k, e] : bc.coeffs) {
                    LambdaPolynomial ae = lambda_bracket(elems[ia], e, alg);
                    for (const auto& [j, f] : ae.coeffs)
                        tv_add(lhs, j, k, f);
                }
                LambdaPolynomial ab = lambda_bracket(elems[ia], elems[ib], alg);
                for (const auto& [k, e] : ab.coeffs) {
                    LambdaPolynomial ec = lambda_bracket(e, elems[ic], alg);
                    for (const auto& [j, f] : ec.coeffs)
                        for (int i = 0; i <= j; ++i)
                            tv_add(rhs, k + i, j - i, f * binom(j, i));
                }
                int sign =
                    (pars[ia] == Parity::Odd && pars[ib] == Parity::Odd) ? -1 : 1;
                LambdaPolynomial ac = lambda_bracket(elems[ia], elems[ic], alg);
                for (const auto& [j, e] : ac.coeffs) {
                    LambdaPolynomial be = lambda_bracket(elems[ib], e, alg);
                    for (const auto& [k, f] : be.coeffs)
                        tv_add(rhs, j, k, f * Rational(sign));
                }
                ++rep.checked;
                if (lhs != rhs)
                    rep.fail("Jacobi fails at " + elems[ia].str() + ", " + elems[ib].str() +
                             ", " + elems[ic].str());
            }
    return rep;
}

std::string ann_str(const AnnGen& a)
{
    std::ostringstream os;
    os << cgen_name(a.gen) << "_(" << a.n << ")";
    return os.str();
}

std::string ann_vec_str(const AnnVector& v)
{
    if (v.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : v) {
        if (!first)
            os << " + ";
        os << rat_str(c) << "*" << ann_str(g);
        first = false;
    }
    return os.str();
}

namespace {

void ann_add(AnnVector& v, const AnnGen& g, const Rational& c)
{
    if (c == 0)
        return;
    auto it = v.find(g);
    if (it == v.end()) {
        v.emplace(g, c);
    } else {
        it->second += c;
        if (it->second == 0)
            v.erase(it);
    }
}

// (d^p g)_(k) = (-1)^p k(k-1)...(k-p+1) g_(k-p)
void ann_add_derived(AnnVector& v, CGen g, int p, long k, const Rational& coeff)
{
    Rational c = coeff * ((p % 2 == 0) ? 1 : -1);
    for (int i = 0; i < p; ++i)
        c *= (k - i);
    if (c == 0)
        return;
    if (k - p < 0)
        throw std::logic_error("negative annihilation index with nonzero coefficient");
    ann_add(v, {g, k - p}, c);
}

}  // namespace

AnnVector annihilation_bracket(const AnnGen& a, const AnnGen& b, ConformalAlgebra alg)
{
    AnnVector out;
    for (long j = 0; j <= a.n; ++j) {
        ConformalElement prod = jth_product(ConformalElement::unit(a.gen),
                                            ConformalElement::unit(b.gen), (int)j, alg);
        if (prod.is_zero())
            continue;
        Rational c = binom(a.n, j);
        for (const auto& [t, v] : prod.terms)
            ann_add_derived(out, t.gen, t.dpow, a.n + b.n - j, c * v);
    }
    return out;
}

AnnVector ext_derivation(const AnnGen& a)
{
    AnnVector out;
    if (a.n > 0)
        out.emplace(AnnGen{a.gen, a.n - 1}, Rational(-(long)a.n));
    return out;
}

GenIndex relabel_ann(const AnnGen& a)
{
    switch (a.gen) {
        case CGen::L: return {Family::L, 2 * (1 - a.n)};
        case CGen::W: return {Family::W, 2 * (-a.n - 1)};
        case CGen::G: return {Family::G, 2 * (-a.n)};
    }
    return {Family::L, 0};
}

CheckReport relabel_to_sbar0_check(long window)
{
    CheckReport rep;
    const auto& sbar0 = AlgebraPreset::by_name("Sbar0");
    const std::vector<CGen> gens = {CGen::L, CGen::W, CGen::G};
    for (CGen ga : gens)
        for (CGen gb : gens)
            for (long m = 0; m <= window + 2; ++m)
                for (long n = 0; n <= window + 2; ++n) {
                    AnnGen a{ga, m}, b{gb, n};
                    AnnVector br = annihilation_bracket(a, b, ConformalAlgebra::S);
                    SuperVector got;
                    for (const auto& [g, c] : br)
                        got.add_term(relabel_ann(g), c);
                    SuperVector want = sbar0.bracket_basis(relabel_ann(a), relabel_ann(b));
                    ++rep.checked;
                    if (!(got == want))
                        rep.fail("[" + ann_str(a) + "," + ann_str(b) + "] relabels to " +
                                 got.str() + " but Sbar0 gives " + want.str());
                }
    return rep;
}

}  // namespace salg
