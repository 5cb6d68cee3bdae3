#include "salg/whittaker.hpp"

namespace salg {

namespace {

const AlgebraPreset& ambient()
{
    return AlgebraPreset::by_name("S");
}

// Key slot of a letter, left to right: W_{-1} | W_0..W_{k-1} | G_{1/2}..
// G_{k-1/2} | L_0..L_{k-1}.  Generators without a slot lie in S^(k) and reach
// the cyclic vector via psi.
int gen_slot(const GenIndex& g, int k)
{
    switch (g.fam) {
        case Family::W:
            if (g.mode2 == -2)
                return 0;
            if (g.mode2 >= 0 && g.mode2 <= 2 * (k - 1))
                return 1 + (int)(g.mode2 / 2);
            return -1;
        case Family::G:
            if (g.mode2 >= 1 && g.mode2 <= 2 * k - 1)
                return k + (int)((g.mode2 + 1) / 2);
            return -1;
        case Family::L:
            if (g.mode2 >= 0 && g.mode2 <= 2 * (k - 1))
                return 2 * k + 1 + (int)(g.mode2 / 2);
            return -1;
        default:
            return -1;
    }
}

GenIndex slot_gen(int p, int k)
{
    if (p == 0)
        return {Family::W, -2};
    if (p <= k)
        return {Family::W, 2L * (p - 1)};
    if (p <= 2 * k)
        return {Family::G, 2L * (p - k) - 1};
    return {Family::L, 2L * (p - 2 * k - 1)};
}

bool slot_odd(int p, int k)
{
    return p > k && p <= 2 * k;
}

void cv_add(CoeffVec& v, const CoeffKey& key, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = v.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            v.erase(it);
    }
}

}  // namespace

Rational WhittakerData::psi_of(const GenIndex& g) const
{
    auto it = psi.find(g);
    return it == psi.end() ? Rational(0) : it->second;
}

CheckReport validate_whittaker(const WhittakerData& data, long window)
{
    if (data.k < 1)
        throw InvalidWhittakerData("k must be positive");
    const int k = data.k;
    for (const auto& [g, v] : data.psi) {
        if (v == 0)
            continue;
        bool ok = (g.fam == Family::L && g.mode2 >= 2 * k && g.mode2 <= 4 * k) ||
                  (g.fam == Family::W && g.mode2 >= 2 * k && g.mode2 <= 2 * (2 * k - 1));
        if (!ok)
            throw InvalidWhittakerData("psi must vanish on " + gen_str(g));
    }
    if (data.psi_of({Family::W, 2L * (2 * k - 1)}) == 0)
        throw InvalidWhittakerData("psi(W_{2k-1}) must be nonzero");

    // psi must kill every bracket of S^(k) elements (abelian target)
    CheckReport rep;
    std::vector<GenIndex> gens;
    for (long m = k; m <= window; ++m) {
        gens.push_back({Family::L, 2 * m});
        gens.push_back({Family::W, 2 * m});
        gens.push_back({Family::G, 2 * m + 1});
    }
    for (const auto& x : gens)
        for (const auto& y : gens) {
            Rational v = 0;
            for (const auto& [g, c] : ambient().bracket_basis(x, y).terms) {
                if (g.fam == Family::C1)
                    v += c * data.c1;
                else if (g.fam == Family::C2)
                    v += c * data.c2;
                else
                    v += c * data.psi_of(g);
            }
            ++rep.checked;
            if (v != 0)
                rep.fail("psi([" + gen_str(x) + "," + gen_str(y) + "]) != 0");
        }
    return rep;
}

WhittakerCoeffModule::WhittakerCoeffModule(WhittakerData data, long window)
    : data_(std::move(data))
{
    CheckReport rep = validate_whittaker(data_, window);
    if (!rep.pass)
        throw InvalidWhittakerData(rep.witnesses.front());
}

int WhittakerCoeffModule::key_parity(const CoeffKey& key) const
{
    const int k = data_.k;
    int p = data_.w_parity;
    for (int s = k + 1; s <= 2 * k; ++s)
        p += key[s];
    return p % 2;
}

long WhittakerCoeffModule::key_weight2(const CoeffKey& key) const
{
    return 2L * key[0];
}

CoeffVec WhittakerCoeffModule::mul(const GenIndex& g, const CoeffKey& key) const
{
    auto memo_key = std::make_pair(g, key);
    auto hit = memo_.find(memo_key);
    if (hit != memo_.end())
        return hit->second;

    const int k = data_.k;
    CoeffVec out;

    int gslot = gen_slot(g, k);
    int lead = -1;
    for (int p = 0; p < (int)key.size(); ++p)
        if (key[p] > 0) {
            lead = p;
            break;
        }

    if (gslot < 0 && lead < 0) {
        cv_add(out, key, data_.psi_of(g));
        memo_.emplace(std::move(memo_key), out);
        return out;
    }

    if (gslot >= 0 && (lead < 0 || gslot <= lead)) {
        if (slot_odd(gslot, k) && gslot == lead) {
            // odd square: G_r G_r = r W_{2r}
            CoeffKey rest = key;
            --rest[gslot];
            Rational r = rat(g.mode2, 2);
            for (const auto& [k2, c] : mul({Family::W, 2 * g.mode2}, rest))
                cv_add(out, k2, c * r);
        } else {
            CoeffKey grown = key;
            ++grown[gslot];
            cv_add(out, grown, 1);
        }
        memo_.emplace(std::move(memo_key), out);
        return out;
    }

    // cross the leading letter
    GenIndex h = slot_gen(lead, k);
    CoeffKey rest = key;
    --rest[lead];
    Rational sign = (g.fam == Family::G && slot_odd(lead, k)) ? -1 : 1;

    for (const auto& [k2, c] : mul(g, rest))
        for (const auto& [k3, c2] : mul(h, k2))
            cv_add(out, k3, sign * c * c2);

    for (const auto& [x, c] : ambient().bracket_basis(g, h).terms) {
        if (x.fam == Family::C1) {
            cv_add(out, rest, c * data_.c1);
        } else if (x.fam == Family::C2) {
            cv_add(out, rest, c * data_.c2);
        } else {
            for (const auto& [k2, c2] : mul(x, rest))
                cv_add(out, k2, c * c2);
        }
    }

    memo_.emplace(std::move(memo_key), out);
    return out;
}

CoeffVec WhittakerCoeffModule::act(const GenIndex& g, const CoeffKey& key) const
{
    if (!in_td(g, 1))
        throw std::invalid_argument(gen_str(g) + " is not in T_1");
    if ((int)key.size() != 3 * data_.k + 1)
        throw std::invalid_argument("key length mismatch");
    return mul(g, key);
}

namespace {

void enum_keys(CoeffKey& cur, size_t p, int budget, int k, std::vector<CoeffKey>& out)
{
    if (p == cur.size()) {
        out.push_back(cur);
        return;
    }
    int cap = budget;
    if (p >= (size_t)k + 1 && p <= (size_t)(2 * k))
        cap = std::min(cap, 1);
    for (int e = 0; e <= cap; ++e) {
        cur[p] = e;
        enum_keys(cur, p + 1, budget - e, k, out);
    }
    cur[p] = 0;
}

}  // namespace

std::vector<CoeffKey> WhittakerCoeffModule::keys(long weight2_bound, int degree_bound) const
{
    const int k = data_.k;
    std::vector<CoeffKey> out;
    CoeffKey cur(3 * k + 1, 0);
    int c_max = (int)std::min<long>(weight2_bound / 2, degree_bound);
    for (int c = 0; c <= c_max; ++c) {
        cur[0] = c;
        enum_keys(cur, 1, degree_bound - c, k, out);
    }
    return out;
}

InducedModule build_whittaker(const WhittakerData& data, long weight2_bound)
{
    return InducedModule(std::make_shared<WhittakerCoeffModule>(data), weight2_bound);
}

}  // namespace salg
