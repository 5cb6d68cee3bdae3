// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Oracles here are written independently of the library internals.
#include "salg/cohomology.hpp"
#include "salg/conformal.hpp"
#include "salg/modules.hpp"
#include "salg/whittaker.hpp"

#include <array>
#include <iostream>
#include <random>

using namespace salg;

namespace {

int failures = 0;

void line(int n, bool pass, const std::string& what)
{
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << n << ": " << what << "\n";
    if (!pass)
        ++failures;
}

// Independent closed-form oracle for the S bracket, canonical family order.
SuperVector s_oracle(const GenIndex& x, const GenIndex& y)
{
    SuperVector out;
    long a = x.mode2, b = y.mode2;  // doubled modes
    auto add = [&](Family f, long mode2, Rational c) {
        if (c != 0)
            out.add_term({f, mode2}, c);
    };
    if (x.fam == Family::L && y.fam == Family::L) {
        add(Family::L, a + b, rat(b - a, 2));
        if (a + b == 0) {
            Rational m = rat(a, 2);
            add(Family::C1, 0, (m * m * m - m) / 12);
        }
    } else if (x.fam == Family::L && y.fam == Family::W) {
        add(Family::W, a + b, rat(a + b, 2));
        if (a + b == 0)
            add(Family::C2, 0, 1);
    } else if (x.fam == Family::L && y.fam == Family::G) {
        add(Family::G, a + b, rat(b, 2));
    } else if (x.fam == Family::G && y.fam == Family::G) {
        add(Family::W, a + b, rat(a + b, 2));
        if (a + b == 0)
            add(Family::C2, 0, 1);
    }
    // W-W, W-G and anything central: zero
    return out;
}

bool criterion1()
{
    const AlgebraPreset& S = AlgebraPreset::by_name("S");
    auto basis = S.basis_window(10);
    for (const auto& x : basis)
        for (const auto& y : basis) {
            SuperVector got = bracket(SuperVector::unit(x), SuperVector::unit(y), S);
            SuperVector want;
            bool both_odd = x.fam == Family::G && y.fam == Family::G;
            if ((int)x.fam <= (int)y.fam)
                want = s_oracle(x, y);
            else
                want = s_oracle(y, x) * Rational(both_odd ? 1 : -1);
            if (!(got == want))
                return false;
        }
    return true;
}

bool criterion2()
{
    for (const auto& name : AlgebraPreset::names()) {
        const AlgebraPreset& alg = AlgebraPreset::by_name(name);
        if (!super_skew_check(alg, 8).pass || !super_jacobi_check(alg, 8).pass)
            return false;
    }
    return true;
}

bool criterion4()
{
    std::vector<Cocycle> alphas, betas;
    for (int k = 1; k <= 4; ++k)
        alphas.push_back(alpha_cocycle(k, 8));
    for (int k = 1; k <= 2; ++k)
        betas.push_back(beta_cocycle(k, 8));
    for (const auto& c : alphas)
        if (!cocycle_check(c, 8).pass)
            return false;
    for (const auto& c : betas)
        if (!cocycle_check(c, 8).pass)
            return false;
    if (!independence_check(alphas, 8).pass || !independence_check(betas, 8).pass)
        return false;
    for (long window : {6L, 8L, 10L}) {
        if (solve_h2(0, window).dimension != 4)
            return false;
        if (solve_h2(1, window).dimension != 2)
            return false;
    }
    return true;
}

// Independent level-count oracle: product over m of (1+q^{2m-1})(1-q^{2m})^{-2}.
std::vector<long> level_oracle(long nmax)
{
    std::vector<long> c(nmax + 1, 0);
    c[0] = 1;
    for (long m = 1; 2 * m - 1 <= nmax; ++m)
        for (long n = nmax; n >= 2 * m - 1; --n)
            c[n] += c[n - (2 * m - 1)];
    for (int rep = 0; rep < 2; ++rep)
        for (long m = 1; 2 * m <= nmax; ++m)
            for (long n = 2 * m; n <= nmax; ++n)
                c[n] += c[n - 2 * m];
    return c;
}

bool criterion6()
{
    auto oracle = level_oracle(4);
    if (oracle != std::vector<long>{1, 1, 2, 3, 6})
        return false;
    std::vector<std::array<Rational, 3>> samples = {
        {rat(0), rat(0), rat(0)},
        {rat(1), rat(2), rat(3)},
        {rat(-1, 2), rat(1, 3), rat(5)},
        {rat(7), rat(-2), rat(1)},
        {rat(2, 3), rat(4), rat(-1)},
    };
    for (const auto& [h1, h2, c1] : samples) {
        InducedModule M(verma_line(h1, h2, c1), 8);
        for (long w2 = 0; w2 <= 4; ++w2)
            if ((long)M.basis_at_weight2(w2, 0).size() != oracle[w2])
                return false;
        auto sing = find_singular_vectors(M, 1, 4, 0);
        if (sing.size() != 1)
            return false;
        InducedVector gv = M.act({Family::G, -1}, M.vacuum({0}));
        Rational scale = sing[0].begin()->second / gv.begin()->second;
        if (!(sing[0] == ind_scale(gv, scale)))
            return false;
        if (!(M.act({Family::L, 0}, sing[0]) == ind_scale(sing[0], h1 - rat(1, 2))))
            return false;
    }
    return true;
}

WhittakerData psi1()
{
    WhittakerData data;
    data.k = 1;
    data.psi[{Family::W, 2}] = 1;
    return data;
}

bool criterion7()
{
    auto b = build_induced(std::make_shared<WhittakerCoeffModule>(psi1()), 8, 4, 3, 4);
    if (!b.conditions.certified())
        return false;
    CheckReport rep = simplicity_probe(b.M, 50, 20250825, 4, 2);
    return rep.pass && rep.checked == 50;
}

bool criterion8()
{
    InducedModule M = build_whittaker(psi1(), 8);
    auto N = top_space(M, 1, 1, 2, 4, 2, 5);
    long vacuum_count = 0;
    for (long w2 = 0; w2 <= 4; ++w2)
        for (const auto& [m, key] : M.basis_at_weight2(w2, 2))
            if (m.is_zero())
                ++vacuum_count;
    if ((long)N.size() != vacuum_count)
        return false;
    for (const auto& sol : N)
        for (const auto& [term, c] : sol)
            if (!term.first.is_zero())
                return false;
    return true;
}

bool criterion9()
{
    std::mt19937_64 rng(20250825);
    const int scan_cap = 6;
    std::vector<InducedModule> modules;
    modules.push_back(InducedModule(verma_line(2, 3, 1), 8));
    modules.push_back(build_whittaker(psi1(), 8));
    for (const auto& M : modules) {
        std::vector<std::vector<InducedTerm>> slices;
        for (long w2 = 0; w2 <= 4; ++w2) {
            auto basis = M.basis_at_weight2(w2, 2);
            if (!basis.empty())
                slices.push_back(std::move(basis));
        }
        for (int s = 0; s < 20; ++s) {
            const auto& slice = slices[rng() % slices.size()];
            InducedVector v;
            ind_add(v, slice[rng() % slice.size()], 1 + (long)(rng() % 5));
            Restriction r = restrictedness_probe(M, v, scan_cap);
            // finite window, and it really annihilates up to the scan cap
            if (r.r1 > scan_cap + 1 || r.r2 > scan_cap + 1 || r.r3 > scan_cap + 1)
                return false;
            for (int i = r.r1; i <= scan_cap; ++i)
                if (!M.act({Family::L, 2L * i}, v).empty())
                    return false;
            for (int i = r.r2; i <= scan_cap; ++i)
                if (!M.act({Family::W, 2L * i}, v).empty())
                    return false;
            for (int i = std::max(r.r3, 1); i <= scan_cap; ++i)
                if (!M.act({Family::G, 2L * i - 1}, v).empty())
                    return false;
        }
    }
    return true;
}

bool criterion10()
{
    for (int d = 0; d <= 3; ++d)
        for (int t = 0; t <= 3; ++t)
            if (derived_series(QuotientAlgebra(d, t)).back() != 0)
                return false;
    return true;
}

bool criterion11()
{
    for (long c2 : {1L, -1L, 7L}) {
        FiniteModule V(0, 0, 1);
        V.set_central(0, c2);
        V.set_action({Family::L, 0}, {{rat(1, 2)}});
        V.set_action({Family::W, 0}, {{3}});
        if (validate_module(V).pass)
            return false;
    }
    return validate_module(*verma_line(rat(1, 2), 3, 0)).pass;
}

}  // namespace

int main()
{
    line(1, criterion1(), "S bracket matches the closed-form table, window 10");
    line(2, criterion2(), "skew-symmetry and Jacobi for all eight presets, window 8");
    line(3, relabel_to_sbar0_check(8).pass,
         "annihilation superalgebra relabels onto the integer-mode preset, window 8");
    line(4, criterion4(),
         "explicit cocycles, independence, and H^2 dimensions 4/2 at windows 6, 8, 10");
    line(5, phi_embedding_check(5).pass,
         "half-integer embedding homomorphism over Q(sqrt 2), window 5");
    line(6, criterion6(),
         "Verma levels [1,1,2,3,6] and the singular vector at level 1/2");
    line(7, criterion7(), "degree-reduction and simplicity probe, 50 seeded vectors");
    line(8, criterion8(), "top space at (1,1,2) recovers the coefficient module");
    line(9, criterion9(), "restrictedness windows finite for 20 vectors per module");
    line(10, criterion10(), "derived series of q^(d,t) reach zero for d, t <= 3");
    line(11, criterion11(), "one-dimensional modules with c2 != 0 are rejected");
    return failures == 0 ? 0 : 1;
}
