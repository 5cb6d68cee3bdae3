#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "salg/exponents.hpp"

#include <vector>

using namespace salg;

namespace {

ExponentVector ev(std::initializer_list<std::pair<int, int>> es)
{
    ExponentVector v;
    for (auto [s, e] : es)
        v.add(s, e);
    return v;
}

}  // namespace

TEST_CASE("weight and degree count")
{
    ExponentVector i = ev({{3, 1}, {1, 2}});  // e3 + 2 e1
    CHECK(i.weight() == 5);
    CHECK(i.degree_count() == 3);

    ExponentVector z;
    CHECK(z.weight() == 0);
    CHECK(z.degree_count() == 0);
    CHECK(z.is_zero());

    CHECK(i.min_pos() == 1);
    CHECK(i.max_pos() == 3);
    CHECK(unit_vector(4).prime().is_zero());
    CHECK(unit_vector(4).dprime().is_zero());
    CHECK(i.prime() == ev({{1, 2}}));
    CHECK(i.dprime() == ev({{3, 1}, {1, 1}}));
}

TEST_CASE("exponent bounds")
{
    ExponentVector v;
    CHECK_THROWS(v.add(2, -1));
    ExponentVector j = unit_vector(2, true);
    CHECK_THROWS(j.add(2, 1));
    j.add(3, 1);
    CHECK(j.get(3) == 1);
}

TEST_CASE("lex and revlex orders")
{
    CHECK(lex_greater(unit_vector(2), unit_vector(1)));
    CHECK_FALSE(lex_greater(unit_vector(1), unit_vector(2)));

    ExponentVector a = ev({{1, 1}, {2, 1}});  // e1 + e2
    ExponentVector b = ev({{2, 2}});          // 2 e2
    CHECK(revlex_greater(a, b));
    CHECK_FALSE(revlex_greater(b, a));
    CHECK(lex_greater(b, a));

    CHECK_FALSE(lex_greater(a, a));
    CHECK_FALSE(revlex_greater(a, a));

    ExponentVector z;
    CHECK(lex_greater(a, z));
    CHECK(revlex_greater(a, z));
    CHECK_FALSE(lex_greater(z, a));
    CHECK_FALSE(revlex_greater(z, a));
}

TEST_CASE("principal order clauses")
{
    ExponentVector z;
    ExponentTriple a{z, z, unit_vector(1)};
    ExponentTriple b{z, z, z};
    CHECK(principal_greater(a, b));
    CHECK_FALSE(principal_greater(b, a));

    // equal k: decided by the (j, w(j)) clause
    ExponentTriple c{z, unit_vector(2), unit_vector(1)};
    ExponentTriple d{z, unit_vector(1), unit_vector(1)};
    CHECK(principal_greater(c, d));

    // k weight dominates the tie-break: w(k) compared before the vector itself
    ExponentTriple e{z, z, ev({{1, 1}, {2, 1}})};  // w = 3
    ExponentTriple f{z, z, ev({{2, 2}})};          // w = 4
    CHECK(principal_greater(f, e));

    // equal k and j: i compared by lex
    ExponentTriple g{unit_vector(2), z, z};
    ExponentTriple h{unit_vector(1), z, z};
    CHECK(principal_greater(g, h));

    ExponentTriple id{unit_vector(1), unit_vector(1), unit_vector(1)};
    CHECK_FALSE(principal_greater(id, id));
}

TEST_CASE("strict total order properties, exhaustive on a small set")
{
    std::vector<ExponentVector> vs;
    vs.push_back({});
    for (int s = 1; s <= 3; ++s)
        vs.push_back(unit_vector(s));
    vs.push_back(ev({{1, 2}}));
    vs.push_back(ev({{1, 1}, {2, 1}}));
    vs.push_back(ev({{2, 2}}));
    vs.push_back(ev({{1, 1}, {3, 1}}));

    for (auto order : {lex_greater, revlex_greater}) {
        for (const auto& x : vs)
            for (const auto& y : vs) {
                if (x == y) {
                    CHECK_FALSE(order(x, y));
                    continue;
                }
                CHECK(order(x, y) != order(y, x));  // totality + antisymmetry
                for (const auto& w : vs)
                    if (order(x, y) && order(y, w))
                        CHECK(order(x, w));  // transitivity
            }
    }

    std::vector<ExponentTriple> ts;
    std::vector<ExponentVector> small = {{}, unit_vector(1), unit_vector(2), ev({{1, 1}, {2, 1}})};
    for (const auto& i : small)
        for (const auto& j : small)
            for (const auto& k : small)
                ts.push_back({i, j, k});

    for (const auto& x : ts)
        for (const auto& y : ts) {
            if (x == y) {
                CHECK_FALSE(principal_greater(x, y));
                continue;
            }
            CHECK(principal_greater(x, y) != principal_greater(y, x));
            for (const auto& w : ts)
                if (principal_greater(x, y) && principal_greater(y, w))
                    CHECK(principal_greater(x, w));
        }
}
