#include "salg/induced.hpp"

#include <sstream>

namespace salg {

namespace {

const AlgebraPreset& ambient()
{
    return AlgebraPreset::by_name("S");
}

// Normal-form slot of a letter: W block, then G, then L; within a block the
// larger position stands further left.
struct Slot {
    int block;  // 0 = W, 1 = G, 2 = L
    int s;      // position within the block

    bool left_of_or_equal(const Slot& o) const
    {
        if (block != o.block)
            return block < o.block;
        return s >= o.s;
    }
    bool operator==(const Slot&) const = default;
};

// Letters are the generators outside T_d: W modes <= -d-1, G <= -1/2, L <= -1.
std::optional<Slot> letter_slot(const GenIndex& g, int d)
{
    switch (g.fam) {
        case Family::W:
            if (g.mode2 <= -2 * (d + 1))
                return Slot{0, (int)(-g.mode2 / 2) - d};
            return std::nullopt;
        case Family::G:
            if (g.mode2 <= -1)
                return Slot{1, (int)((1 - g.mode2) / 2)};
            return std::nullopt;
        case Family::L:
            if (g.mode2 <= -2)
                return Slot{2, (int)(-g.mode2 / 2)};
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

std::optional<Slot> leading_slot(const ExponentTriple& m)
{
    if (!m.i.is_zero())
        return Slot{0, m.i.max_pos()};
    if (!m.j.is_zero())
        return Slot{1, m.j.max_pos()};
    if (!m.k.is_zero())
        return Slot{2, m.k.max_pos()};
    return std::nullopt;
}

void triple_add(ExponentTriple& m, const Slot& slot, int delta)
{
    ExponentVector& v = slot.block == 0 ? m.i : slot.block == 1 ? m.j : m.k;
    v.odd_part = slot.block == 1;
    v.add(slot.s, delta);
}

int slot_parity(const Slot& slot)
{
    return slot.block == 1 ? 1 : 0;
}

}  // namespace

bool in_td(const GenIndex& g, int d)
{
    switch (g.fam) {
        case Family::L:
            return g.mode2 >= 0;
        case Family::W:
            return g.mode2 >= -2 * d;
        case Family::G:
            return g.mode2 >= 1;
        case Family::C1:
        case Family::C2:
            return true;
        default:
            return false;
    }
}

void ind_add(InducedVector& v, const InducedTerm& t, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = v.emplace(t, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            v.erase(it);
    }
}

InducedVector ind_scale(const InducedVector& v, const Rational& c)
{
    InducedVector out;
    if (c == 0)
        return out;
    for (const auto& [t, a] : v)
        out.emplace(t, a * c);
    return out;
}

std::string ind_str(const InducedVector& v, const CoeffModule&)
{
    if (v.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : v) {
        if (!first)
            os << " + ";
        os << rat_str(c) << "*" << t.first.str() << "(x)[";
        for (size_t s = 0; s < t.second.size(); ++s)
            os << (s ? "," : "") << t.second[s];
        os << "]";
        first = false;
    }
    return os.str();
}

InducedModule::InducedModule(std::shared_ptr<const CoeffModule> V, long weight2_bound)
    : V_(std::move(V)), bound_(weight2_bound)
{
}

InducedVector InducedModule::vacuum(const CoeffKey& key) const
{
    InducedVector v;
    v.emplace(InducedTerm{ExponentTriple{}, key}, 1);
    return v;
}

long InducedModule::letter_mode2(Family block, int s) const
{
    switch (block) {
        case Family::W:
            return -2L * (d() + s);
        case Family::G:
            return 1 - 2L * s;
        case Family::L:
            return -2L * s;
        default:
            throw std::invalid_argument("letter_mode2: not a letter family");
    }
}

long InducedModule::weight2(const InducedTerm& term) const
{
    const ExponentTriple& m = term.first;
    long w = 2 * m.k.weight() + (2 * m.j.weight() - m.j.degree_count()) +
             2 * (m.i.weight() + (long)d() * m.i.degree_count());
    return w + V_->key_weight2(term.second);
}

int InducedModule::parity(const InducedTerm& term) const
{
    return (int)((term.first.j.degree_count() + V_->key_parity(term.second)) % 2);
}

// g . (W^i G^j L^k (x) key), straightened.  Structure: if g stands left of (or
// merges with) the leading letter it is absorbed directly; otherwise peel the
// leading letter h and use g h = +-h g + [g, h] recursively.
InducedVector InducedModule::mul(const GenIndex& g, const ExponentTriple& m,
                                 const CoeffKey& key) const
{
    auto memo_key = std::make_tuple(g, m, key);
    auto hit = memo_.find(memo_key);
    if (hit != memo_.end())
        return hit->second;

    InducedVector out;
    const int dd = d();

    if (g.fam == Family::C1 || g.fam == Family::C2) {
        Rational c = g.fam == Family::C1 ? V_->c1() : V_->c2();
        ind_add(out, {m, key}, c);
        memo_.emplace(std::move(memo_key), out);
        return out;
    }

    std::optional<Slot> gslot = letter_slot(g, dd);
    std::optional<Slot> lead = leading_slot(m);

    if (!lead && !gslot) {
        // bare coefficient vector hit by a T_d generator
        for (const auto& [k2, c] : V_->act(g, key))
            ind_add(out, {ExponentTriple{}, k2}, c);
        memo_.emplace(std::move(memo_key), out);
        return out;
    }

    if (gslot && (!lead || gslot->left_of_or_equal(*lead))) {
        if (slot_parity(*gslot) == 1 && lead && *gslot == *lead) {
            // odd square: G_r G_r = r W_{2r}
            ExponentTriple rest = m;
            triple_add(rest, *gslot, -1);
            Rational r = rat(g.mode2, 2);
            for (const auto& [term, c] : mul({Family::W, 2 * g.mode2}, rest, key))
                ind_add(out, term, c * r);
        } else {
            ExponentTriple grown = m;
            triple_add(grown, *gslot, 1);
            InducedTerm term{grown, key};
            if (weight2(term) > bound_)
                throw WeightBoundExceeded("monomial above the weight bound: " +
                                          grown.str());
            ind_add(out, term, 1);
        }
        memo_.emplace(std::move(memo_key), out);
        return out;
    }

    // g must cross the leading letter h
    ExponentTriple rest = m;
    triple_add(rest, *lead, -1);
    Family hf = lead->block == 0 ? Family::W : lead->block == 1 ? Family::G : Family::L;
    GenIndex h{hf, letter_mode2(hf, lead->s)};

    int gpar = g.fam == Family::G ? 1 : 0;
    Rational sign = (gpar == 1 && slot_parity(*lead) == 1) ? -1 : 1;

    for (const auto& [term, c] : mul(g, rest, key))
        for (const auto& [term2, c2] : mul(h, term.first, term.second))
            ind_add(out, term2, sign * c * c2);

    for (const auto& [x, c] : ambient().bracket_basis(g, h).terms) {
        if (x.fam == Family::C1) {
            ind_add(out, {rest, key}, c * V_->c1());
        } else if (x.fam == Family::C2) {
            ind_add(out, {rest, key}, c * V_->c2());
        } else {
            for (const auto& [term, c2] : mul(x, rest, key))
                ind_add(out, term, c * c2);
        }
    }

    memo_.emplace(std::move(memo_key), out);
    return out;
}

InducedVector InducedModule::act(const GenIndex& g, const InducedVector& v) const
{
    ambient().require_lattice(g);
    InducedVector out;
    for (const auto& [term, c] : v)
        for (const auto& [term2, c2] : mul(g, term.first, term.second))
            ind_add(out, term2, c * c2);
    return out;
}

std::optional<ExponentTriple> InducedModule::deg(const InducedVector& v) const
{
    std::optional<ExponentTriple> best;
    for (const auto& [term, c] : v)
        if (!best || principal_greater(term.first, *best))
            best = term.first;
    return best;
}

namespace {

// Exponent vectors with exact doubled weight: position s carries weight
// w2(s) = step * s + off, exponent capped when zero_one is set.
void enum_vectors(long budget, int s, long step, long off, bool zero_one,
                  ExponentVector& cur, std::vector<ExponentVector>& out)
{
    if (budget == 0) {
        out.push_back(cur);
        return;
    }
    long w = step * s + off;
    if (w > budget)
        return;
    enum_vectors(budget, s + 1, step, off, zero_one, cur, out);
    int emax = zero_one ? 1 : (int)(budget / w);
    for (int e = 1; e <= emax; ++e) {
        cur.add(s, e);
        if (budget - w * e == 0)
            out.push_back(cur);
        else
            enum_vectors(budget - w * e, s + 1, step, off, zero_one, cur, out);
        cur.add(s, -e);
    }
}

std::vector<ExponentVector> vectors_of_weight(long budget, long step, long off, bool zero_one)
{
    std::vector<ExponentVector> out;
    ExponentVector cur;
    cur.odd_part = zero_one;
    enum_vectors(budget, 1, step, off, zero_one, cur, out);
    return out;
}

}  // namespace

std::vector<ExponentTriple> InducedModule::monomials_at_weight2(long w2) const
{
    std::vector<ExponentTriple> out;
    for (long wi = 0; wi <= w2; ++wi)
        for (const auto& i : vectors_of_weight(wi, 2, 2L * d(), false))
            for (long wj = 0; wj + wi <= w2; ++wj)
                for (const auto& j : vectors_of_weight(wj, 2, -1, true))
                    for (const auto& k : vectors_of_weight(w2 - wi - wj, 2, 0, false))
                        out.push_back({i, j, k});
    return out;
}

std::vector<InducedTerm> InducedModule::basis_at_weight2(long w2, int key_degree_bound) const
{
    std::vector<InducedTerm> out;
    auto keys = V_->keys(w2, key_degree_bound);
    for (const auto& key : keys) {
        long kw = V_->key_weight2(key);
        if (kw > w2)
            continue;
        for (const auto& m : monomials_at_weight2(w2 - kw))
            out.push_back({m, key});
    }
    return out;
}

}  // namespace salg
