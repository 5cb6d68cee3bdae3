#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "salg/induced.hpp"

#include <random>

using namespace salg;

namespace {

// Highest-weight line: L_0 -> h1, W_0 -> h2, everything of positive mode -> 0.
struct VermaCoeff : CoeffModule {
    Rational h1, h2, cc1;

    VermaCoeff(Rational h1_, Rational h2_, Rational c1_) : h1(h1_), h2(h2_), cc1(c1_) {}

    int d() const override { return 0; }
    int t() const override { return 0; }
    Rational c1() const override { return cc1; }
    Rational c2() const override { return 0; }
    int key_parity(const CoeffKey&) const override { return 0; }
    long key_weight2(const CoeffKey&) const override { return 0; }
    CoeffVec act(const GenIndex& g, const CoeffKey& key) const override
    {
        CoeffVec out;
        if (g.fam == Family::L && g.mode2 == 0)
            out.emplace(key, h1);
        else if (g.fam == Family::W && g.mode2 == 0)
            out.emplace(key, h2);
        return out;
    }
    std::vector<CoeffKey> keys(long, int) const override { return {{0}}; }
};

InducedModule make_verma(Rational h1, Rational h2, Rational c1, long bound = 12)
{
    return InducedModule(std::make_shared<VermaCoeff>(h1, h2, c1), bound);
}

const CoeffKey kv = {0};

InducedVector term_of(const InducedModule& M, std::vector<GenIndex> gens)
{
    InducedVector v = M.vacuum(kv);
    for (auto it = gens.rbegin(); it != gens.rend(); ++it)
        v = M.act(*it, v);
    return v;
}

}  // namespace

TEST_CASE("straightening examples on the highest-weight line")
{
    Rational h1 = rat(5, 2), h2 = rat(-1, 3), c1 = 7;
    InducedModule M = make_verma(h1, h2, c1);
    InducedVector v = M.vacuum(kv);

    // L_0 . (L_{-1} v) = (h1 - 1) L_{-1} v
    InducedVector lv = M.act({Family::L, -2}, v);
    CHECK(M.act({Family::L, 0}, lv) == ind_scale(lv, h1 - 1));

    // G_{1/2} . (G_{-1/2} v) = C_2 v = 0 here
    InducedVector gv = M.act({Family::G, -1}, v);
    CHECK(M.act({Family::G, 1}, gv).empty());

    // G_{-1/2} . (G_{-1/2} v) = -1/2 W_{-1} v
    InducedVector wv = M.act({Family::W, -2}, v);
    CHECK(M.act({Family::G, -1}, gv) == ind_scale(wv, rat(-1, 2)));

    // centrals act by their scalars
    CHECK(M.act({Family::C1, 0}, lv) == ind_scale(lv, c1));
    CHECK(M.act({Family::C2, 0}, lv).empty());

    // L_0 eigenvalues: every pure monomial is an eigenvector
    InducedVector u = term_of(M, {{Family::W, -4}, {Family::G, -3}, {Family::L, -2}});
    CHECK(M.act({Family::L, 0}, u) == ind_scale(u, h1 - rat(9, 2)));
}

TEST_CASE("normal form and principal degree")
{
    InducedModule M = make_verma(1, 2, 0);

    // independent of the application order up to the Koszul sign bookkeeping:
    // W_{-2} L_{-1} v computed two ways
    InducedVector a = term_of(M, {{Family::W, -4}, {Family::L, -2}});
    InducedVector b = M.act({Family::L, -2}, M.act({Family::W, -4}, M.vacuum(kv)));
    SuperVector br = AlgebraPreset::by_name("S").bracket_basis({Family::L, -2}, {Family::W, -4});
    InducedVector diff = b;
    for (const auto& [t, c] : a)
        ind_add(diff, t, -c);
    InducedVector expect;
    for (const auto& [g, c] : br.terms)
        for (const auto& [t, c2] : M.act(g, M.vacuum(kv)))
            ind_add(expect, t, c * c2);
    CHECK(diff == expect);

    CHECK(M.deg(M.vacuum(kv)) == ExponentTriple{});
    CHECK_FALSE(M.deg(InducedVector{}).has_value());
    auto du = M.deg(term_of(M, {{Family::G, -1}, {Family::L, -2}}));
    ExponentTriple want{{}, unit_vector(1, true), unit_vector(1)};
    CHECK(du == want);
}

TEST_CASE("monomial bases per weight")
{
    InducedModule M = make_verma(0, 0, 0);
    std::vector<size_t> dims;
    for (long w2 = 0; w2 <= 4; ++w2)
        dims.push_back(M.monomials_at_weight2(w2).size());
    CHECK(dims == std::vector<size_t>{1, 1, 2, 3, 6});
    CHECK(M.basis_at_weight2(4, 0).size() == 6);

    // monomial weights agree with the letter bookkeeping
    for (long w2 = 0; w2 <= 6; ++w2)
        for (const auto& m : M.monomials_at_weight2(w2))
            CHECK(M.weight2({m, kv}) == w2);
}

TEST_CASE("weight bound enforcement")
{
    InducedModule M = make_verma(1, 1, 1, 4);
    InducedVector v = term_of(M, {{Family::L, -2}, {Family::L, -2}});  // weight 2
    CHECK_THROWS_AS(M.act({Family::L, -2}, v), WeightBoundExceeded);
    CHECK_NOTHROW(M.act({Family::W, 0}, v));
}

TEST_CASE("supercommutator property on random vectors")
{
    InducedModule M = make_verma(rat(3, 4), rat(-2, 5), rat(1, 2), 14);
    const AlgebraPreset& S = AlgebraPreset::by_name("S");

    std::vector<GenIndex> pool;
    for (long m = -2; m <= 2; ++m) {
        pool.push_back({Family::L, 2 * m});
        pool.push_back({Family::W, 2 * m});
    }
    for (long r2 : {-3L, -1L, 1L, 3L})
        pool.push_back({Family::G, r2});
    pool.push_back({Family::C1, 0});
    pool.push_back({Family::C2, 0});

    std::vector<GenIndex> letters = {{Family::L, -2}, {Family::L, -4}, {Family::W, -2},
                                     {Family::G, -1}, {Family::G, -3}};

    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        InducedVector v = M.vacuum(kv);
        int n = (int)(rng() % 3);
        for (int s = 0; s < n; ++s)
            v = M.act(letters[rng() % letters.size()], v);
        if (v.empty())
            continue;
        GenIndex x = pool[rng() % pool.size()];
        GenIndex y = pool[rng() % pool.size()];

        InducedVector lhs = M.act(x, M.act(y, v));
        int px = x.fam == Family::G ? 1 : 0;
        int py = y.fam == Family::G ? 1 : 0;
        Rational sign = (px && py) ? -1 : 1;
        for (const auto& [t, c] : M.act(y, M.act(x, v)))
            ind_add(lhs, t, -sign * c);

        InducedVector rhs;
        for (const auto& [g, c] : S.bracket_basis(x, y).terms)
            for (const auto& [t, c2] : M.act(g, v))
                ind_add(rhs, t, c * c2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("degree compatibility of the grading")
{
    InducedModule M = make_verma(2, 3, 1, 16);
    std::mt19937_64 rng(7);
    std::vector<GenIndex> letters = {{Family::L, -2}, {Family::W, -4}, {Family::G, -1},
                                     {Family::G, -3}, {Family::L, -4}};
    for (int trial = 0; trial < 25; ++trial) {
        InducedVector v = M.vacuum(kv);
        long w2 = 0;
        for (int s = 0, n = (int)(rng() % 4); s < n; ++s) {
            GenIndex g = letters[rng() % letters.size()];
            v = M.act(g, v);
            w2 -= g.mode2;
        }
        for (const auto& [t, c] : v)
            CHECK(M.weight2(t) == w2);
    }
}
