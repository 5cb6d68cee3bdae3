#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "salg/cohomology.hpp"

using namespace salg;

namespace {

void check_pass(const CheckReport& rep)
{
    CHECK_MESSAGE(rep.pass, (rep.witnesses.empty() ? std::string() : rep.witnesses[0]));
}

// psi_f for f supported on the given generators.
Cocycle coboundary_of(const std::string& alg_name, long window,
                      const std::map<GenIndex, Rational>& f)
{
    Cocycle c(alg_name, window);
    const AlgebraPreset& alg = c.alg();
    auto basis = alg.basis_window(window);
    for (const auto& x : basis)
        for (const auto& y : basis) {
            if (y < x || !c.in_domain(x, y))
                continue;
            Rational v = 0;
            for (const auto& [g, coeff] : alg.bracket_basis(x, y).terms) {
                auto it = f.find(g);
                if (it != f.end())
                    v += coeff * it->second;
            }
            c.set(x, y, v);
        }
    return c;
}

}  // namespace

TEST_CASE("explicit cocycles satisfy the cocycle identity")
{
    for (int k = 1; k <= 4; ++k)
        check_pass(cocycle_check(alpha_cocycle(k, 8), 8));
    for (int k = 1; k <= 2; ++k)
        check_pass(cocycle_check(beta_cocycle(k, 8), 8));
    check_pass(cocycle_check(Cocycle("Sbar0", 6), 6));  // zero cocycle
}

TEST_CASE("coboundaries are cocycles and normalize to zero")
{
    std::map<GenIndex, Rational> f;
    f[{Family::L, 4}] = rat(3, 2);
    f[{Family::W, -6}] = 5;
    f[{Family::G, 2}] = -2;
    Cocycle c = coboundary_of("Sbar0", 6, f);
    check_pass(cocycle_check(c, 6));
    CHECK(normalize_by_coboundary(c).table().empty());
}

TEST_CASE("normalize_by_coboundary")
{
    // alpha1 is already normalized
    Cocycle a1 = alpha_cocycle(1, 6);
    CHECK(normalize_by_coboundary(a1).table() == a1.table());

    // a lone (L_0, W_3) entry is pure gauge
    Cocycle c(a1.alg().name(), 6);
    c.set({Family::L, 0}, {Family::W, 6}, 3);
    Cocycle n = normalize_by_coboundary(c);
    CHECK(n.eval({Family::L, 0}, {Family::W, 6}) == 0);

    // idempotence
    Cocycle m = normalize_by_coboundary(n);
    CHECK(m.table() == n.table());
}

TEST_CASE("windowed H^2 dimensions")
{
    H2Result r0 = solve_h2(0, 6);
    CHECK(r0.raw_dimension == 5);
    CHECK(r0.dimension == 4);
    for (const auto& b : r0.basis)
        check_pass(cocycle_check(b, 6));

    H2Result r1 = solve_h2(1, 6);
    CHECK(r1.raw_dimension == 3);
    CHECK(r1.dimension == 2);
    for (const auto& b : r1.basis)
        check_pass(cocycle_check(b, 6));
}

TEST_CASE("gauge-fixed solutions reproduce the closed forms")
{
    H2Result r0 = solve_h2(0, 6);
    for (const auto& b : r0.basis) {
        auto LL = [&](long m) { return b.eval({Family::L, 2 * m}, {Family::L, -2 * m}); };
        auto LW = [&](long m) { return b.eval({Family::L, 2 * m}, {Family::W, -2 * m}); };
        auto LG = [&](long m) { return b.eval({Family::L, 2 * m}, {Family::G, -2 * m}); };
        auto WG = [&](long m) { return b.eval({Family::W, 2 * m}, {Family::G, -2 * m}); };
        auto GG = [&](long m) { return b.eval({Family::G, 2 * m}, {Family::G, -2 * m}); };
        // g(m) = c1 (m^3 - m)/12 + c0 m,  fitted at m = 1, 2
        Rational c0 = LL(1);
        Rational c1 = (LL(2) - 2 * c0) * 2;
        Rational c3 = LW(0);
        Rational c4 = LG(1) / 2;
        Rational c5 = WG(0);
        for (long m = -6; m <= 6; ++m) {
            Rational mm(m);
            CHECK(LL(m) == c1 * (mm * mm * mm - mm) / 12 + c0 * mm);
            CHECK(LW(m) == c3);
            CHECK(LG(m) == c4 * (mm * mm + mm));
            CHECK(WG(m) == c5);
            CHECK(GG(m) == c3);  // coupled to the (L, W) constant
        }
        // off-diagonal sectors vanish
        for (long m = -3; m <= 3; ++m)
            for (long n = -3; n <= 3; ++n) {
                if (m + n == 0)
                    continue;
                CHECK(b.eval({Family::L, 2 * m}, {Family::L, 2 * n}) == 0);
                CHECK(b.eval({Family::L, 2 * m}, {Family::W, 2 * n}) == 0);
                CHECK(b.eval({Family::W, 2 * m}, {Family::G, 2 * n}) == 0);
            }
    }
}

TEST_CASE("NS solutions carry no (L,G) or (W,G) sector")
{
    H2Result r1 = solve_h2(1, 6);
    for (const auto& b : r1.basis)
        for (const auto& [key, v] : b.table()) {
            bool lg = key.first.fam == Family::L && key.second.fam == Family::G;
            bool wg = key.first.fam == Family::W && key.second.fam == Family::G;
            CHECK_FALSE(lg);
            CHECK_FALSE(wg);
        }
}

TEST_CASE("explicit cocycles lie in the solver's solution space mod coboundaries")
{
    for (int eps2 : {0, 1}) {
        H2Result r = solve_h2(eps2, 6);
        const AlgebraPreset& alg = r.basis.front().alg();
        auto pairs = canonical_pairs(alg, 6);
        auto vectorize = [&](const Cocycle& c) {
            SparseRow row;
            for (size_t i = 0; i < pairs.size(); ++i) {
                Rational v = c.eval(pairs[i].first, pairs[i].second);
                if (v != 0)
                    row.emplace((long)i, v);
            }
            return row;
        };
        RowEchelon span;
        for (const auto& b : r.basis)
            span.insert(vectorize(b));
        int top = eps2 == 0 ? 4 : 2;
        for (int k = 1; k <= top; ++k) {
            Cocycle c = eps2 == 0 ? alpha_cocycle(k, 6) : beta_cocycle(k, 6);
            CHECK(span.contains(vectorize(c)));
        }
    }
}

TEST_CASE("independence of the explicit cocycles")
{
    std::vector<Cocycle> as;
    for (int k = 1; k <= 4; ++k)
        as.push_back(alpha_cocycle(k, 8));
    check_pass(independence_check(as, 8));

    std::vector<Cocycle> bs;
    for (int k = 1; k <= 2; ++k)
        bs.push_back(beta_cocycle(k, 8));
    check_pass(independence_check(bs, 8));

    Cocycle twice = alpha_cocycle(1, 8);
    std::vector<Cocycle> dep = {alpha_cocycle(1, 8), twice};
    CHECK_FALSE(independence_check(dep, 8).pass);

    // a coboundary alone is dependent (it is zero in H^2)
    std::map<GenIndex, Rational> f;
    f[{Family::L, 2}] = 1;
    std::vector<Cocycle> cb = {coboundary_of("Sbar0", 8, f)};
    CHECK_FALSE(independence_check(cb, 8).pass);
}
