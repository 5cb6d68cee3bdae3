#include "salg/cohomology.hpp"

namespace salg {

namespace {

struct CanonPair {
    std::pair<GenIndex, GenIndex> key;
    Rational sign;     // psi(x, y) = sign * stored(key)
    bool forced_zero;  // even diagonal
};

CanonPair canonical(const AlgebraPreset& alg, const GenIndex& x, const GenIndex& y)
{
    bool both_odd =
        alg.parity(x.fam) == Parity::Odd && alg.parity(y.fam) == Parity::Odd;
    if (x == y && !both_odd)
        return {{x, y}, 1, true};
    if (y < x)
        return {{y, x}, Rational(both_odd ? 1 : -1), false};
    return {{x, y}, 1, false};
}

}  // namespace

Cocycle::Cocycle(const std::string& alg_name, long window)
    : alg_(&AlgebraPreset::by_name(alg_name)), window_(window)
{
}

bool Cocycle::in_domain(const GenIndex& x, const GenIndex& y) const
{
    if (!alg_->in_lattice(x) || !alg_->in_lattice(y))
        return false;
    long a = grading_degree2(x), b = grading_degree2(y);
    return std::abs(a) <= 2 * window_ && std::abs(b) <= 2 * window_ &&
           std::abs(a + b) <= 2 * window_;
}

void Cocycle::set(const GenIndex& x, const GenIndex& y, const Rational& c)
{
    if (!in_domain(x, y))
        throw WindowTooSmall("pair (" + gen_str(x) + "," + gen_str(y) +
                             ") outside window " + std::to_string(window_));
    CanonPair p = canonical(*alg_, x, y);
    if (p.forced_zero) {
        if (c != 0)
            throw std::invalid_argument("even diagonal pair must vanish");
        return;
    }
    if (c == 0)
        table_.erase(p.key);
    else
        table_[p.key] = c * p.sign;
}

Rational Cocycle::eval(const GenIndex& x, const GenIndex& y) const
{
    if (!in_domain(x, y))
        throw WindowTooSmall("pair (" + gen_str(x) + "," + gen_str(y) +
                             ") outside window " + std::to_string(window_));
    CanonPair p = canonical(*alg_, x, y);
    if (p.forced_zero)
        return 0;
    auto it = table_.find(p.key);
    if (it == table_.end())
        return 0;
    return it->second * p.sign;
}

Rational Cocycle::eval_vec(const GenIndex& x, const SuperVector& y) const
{
    Rational r = 0;
    for (const auto& [g, c] : y.terms)
        r += c * eval(x, g);
    return r;
}

CheckReport cocycle_check(const Cocycle& c, long window)
{
    CheckReport rep;
    const AlgebraPreset& alg = c.alg();
    auto basis = alg.basis_window(window);
    const long w2 = 2 * c.window();
    for (const auto& x : basis)
        for (const auto& y : basis)
            for (const auto& z : basis) {
                long a = grading_degree2(x), b = grading_degree2(y),
                     d = grading_degree2(z);
                if (std::abs(a + b) > w2 || std::abs(b + d) > w2 ||
                    std::abs(a + d) > w2 || std::abs(a + b + d) > w2)
                    continue;
                Rational lhs = c.eval_vec(x, alg.bracket_basis(y, z));
                Rational rhs = 0;
                for (const auto& [g, v] : alg.bracket_basis(x, y).terms)
                    rhs += v * c.eval(g, z);
                bool xy_odd = alg.parity(x.fam) == Parity::Odd &&
                              alg.parity(y.fam) == Parity::Odd;
                Rational mid = c.eval_vec(y, alg.bracket_basis(x, z));
                rhs += (xy_odd ? -mid : mid);
                ++rep.checked;
                if (lhs != rhs)
                    rep.fail("Jacobi fails at (" + gen_str(x) + "," + gen_str(y) + "," +
                             gen_str(z) + "): " + rat_str(lhs) + " vs " + rat_str(rhs));
            }
    return rep;
}

Cocycle normalize_by_coboundary(const Cocycle& c)
{
    const AlgebraPreset& alg = c.alg();
    const long w = c.window();
    std::map<GenIndex, Rational> f;
    for (const auto& g : alg.basis_window(w)) {
        if (is_central(g.fam))
            continue;
        if (g.mode2 != 0) {
            // f(X_n) = c(L_0, X_n) / n
            f[g] = c.eval({Family::L, 0}, g) * 2 / g.mode2;
        } else {
            f[g] = 0;
        }
    }
    GenIndex g0{Family::G, 0};
    if (alg.in_lattice(g0) && w >= 1)
        f[g0] = c.eval({Family::L, -2}, {Family::G, 2});

    Cocycle out(alg.name(), w);
    auto basis = alg.basis_window(w);
    for (const auto& x : basis)
        for (const auto& y : basis) {
            if (y < x || !c.in_domain(x, y))
                continue;
            Rational v = c.eval(x, y);
            for (const auto& [g, coeff] : alg.bracket_basis(x, y).terms)
                v -= coeff * f.at(g);
            out.set(x, y, v);
        }
    return out;
}

namespace {

Cocycle delta_family(const std::string& alg_name, int k, long window)
{
    Cocycle c(alg_name, window);
    const AlgebraPreset& alg = c.alg();
    for (long m = -window; m <= window; ++m) {
        Rational mm(m);
        switch (k) {
            case 1:
                if (m > 0)
                    c.set({Family::L, 2 * m}, {Family::L, -2 * m},
                          (mm * mm * mm - mm) / 12);
                break;
            case 2:
                c.set({Family::L, 2 * m}, {Family::W, -2 * m}, 1);
                break;
            case 3:
                c.set({Family::L, 2 * m}, {Family::G, -2 * m}, mm * mm + mm);
                break;
            case 4:
                c.set({Family::W, 2 * m}, {Family::G, -2 * m}, 1);
                break;
            default:
                throw std::invalid_argument("bad cocycle index");
        }
    }
    if (k == 2) {
        // psi(G_r, G_{-r}) = 1; enumerate r >= 0 from the lattice
        for (long r2 = 0; r2 <= 2 * window; ++r2)
            if (alg.in_lattice({Family::G, r2}))
                c.set({Family::G, -r2}, {Family::G, r2}, 1);
    }
    return c;
}

}  // namespace

Cocycle alpha_cocycle(int k, long window)
{
    if (k < 1 || k > 4)
        throw std::invalid_argument("alpha index must be 1..4");
    return delta_family("Sbar0", k, window);
}

Cocycle beta_cocycle(int k, long window)
{
    if (k < 1 || k > 2)
        throw std::invalid_argument("beta index must be 1..2");
    return delta_family("Sbar12", k, window);
}

std::vector<std::pair<GenIndex, GenIndex>> canonical_pairs(const AlgebraPreset& alg,
                                                           long window)
{
    std::vector<std::pair<GenIndex, GenIndex>> pairs;
    auto basis = alg.basis_window(window);
    for (const auto& x : basis)
        for (const auto& y : basis) {
            if (y < x)
                continue;
            if (std::abs(grading_degree2(x) + grading_degree2(y)) > 2 * window)
                continue;
            bool both_odd = alg.parity(x.fam) == Parity::Odd &&
                            alg.parity(y.fam) == Parity::Odd;
            if (x == y && !both_odd)
                continue;
            pairs.emplace_back(x, y);
        }
    return pairs;
}

namespace {

using PairIndex = std::map<std::pair<GenIndex, GenIndex>, long>;

PairIndex index_pairs(const std::vector<std::pair<GenIndex, GenIndex>>& pairs)
{
    PairIndex idx;
    for (size_t i = 0; i < pairs.size(); ++i)
        idx.emplace(pairs[i], (long)i);
    return idx;
}

// Adds coeff * psi(x, y) to the row; returns false if the pair escapes the
// unknown set (caller must then drop the whole constraint).
bool row_add(SparseRow& row, const AlgebraPreset& alg, const PairIndex& idx,
             const GenIndex& x, const GenIndex& y, const Rational& coeff)
{
    if (coeff == 0)
        return true;
    CanonPair p = canonical(alg, x, y);
    if (p.forced_zero)
        return true;
    auto it = idx.find(p.key);
    if (it == idx.end())
        return false;
    Rational c = coeff * p.sign;
    auto [jt, inserted] = row.emplace(it->second, c);
    if (!inserted) {
        jt->second += c;
        if (jt->second == 0)
            row.erase(jt);
    }
    return true;
}

// Row of the coboundary psi_f, f the delta function at generator g.
SparseRow coboundary_row(const AlgebraPreset& alg,
                         const std::vector<std::pair<GenIndex, GenIndex>>& pairs,
                         const GenIndex& g)
{
    SparseRow row;
    for (size_t i = 0; i < pairs.size(); ++i) {
        SuperVector b = alg.bracket_basis(pairs[i].first, pairs[i].second);
        auto it = b.terms.find(g);
        if (it != b.terms.end() && it->second != 0)
            row.emplace((long)i, it->second);
    }
    return row;
}

Cocycle row_to_cocycle(const AlgebraPreset& alg, long window,
                       const std::vector<std::pair<GenIndex, GenIndex>>& pairs,
                       const SparseRow& v)
{
    Cocycle c(alg.name(), window);
    for (const auto& [i, val] : v)
        c.set(pairs[i].first, pairs[i].second, val);
    return c;
}

}  // namespace

H2Result solve_h2(int eps2, long window)
{
    if (window < 4)
        throw std::invalid_argument("window must be >= 4");
    const AlgebraPreset& alg = AlgebraPreset::by_name(eps2 == 0 ? "Sbar0" : "Sbar12");
    auto pairs = canonical_pairs(alg, window);
    PairIndex idx = index_pairs(pairs);
    RowEchelon sys;

    // Gauge rows from the normalization: alphabar(L_0, X_n) = 0 for n != 0,
    // and alphabar(L_{-1}, G_1) = 0 in the Ramond case.
    GenIndex l0{Family::L, 0};
    for (const auto& g : alg.basis_window(window)) {
        if (g.mode2 == 0)
            continue;
        SparseRow row;
        row_add(row, alg, idx, l0, g, 1);
        sys.insert(std::move(row));
    }
    if (eps2 == 0) {
        SparseRow row;
        row_add(row, alg, idx, {Family::L, -2}, {Family::G, 2}, 1);
        sys.insert(std::move(row));
    }

    // Jacobi rows for every triple whose pair evaluations close in-window.
    auto basis = alg.basis_window(window);
    const long w2 = 2 * window;
    for (const auto& x : basis)
        for (const auto& y : basis)
            for (const auto& z : basis) {
                long a = grading_degree2(x), b = grading_degree2(y),
                     d = grading_degree2(z);
                if (std::abs(a + b) > w2 || std::abs(b + d) > w2 ||
                    std::abs(a + d) > w2 || std::abs(a + b + d) > w2)
                    continue;
                SparseRow row;
                bool ok = true;
                for (const auto& [g, c] : alg.bracket_basis(y, z).terms)
                    ok = ok && row_add(row, alg, idx, x, g, c);
                for (const auto& [g, c] : alg.bracket_basis(x, y).terms)
                    ok = ok && row_add(row, alg, idx, g, z, -c);
                bool xy_odd = alg.parity(x.fam) == Parity::Odd &&
                              alg.parity(y.fam) == Parity::Odd;
                Rational s = xy_odd ? 1 : -1;
                for (const auto& [g, c] : alg.bracket_basis(x, z).terms)
                    ok = ok && row_add(row, alg, idx, y, g, c * s);
                if (ok)
                    sys.insert(std::move(row));
            }

    H2Result res;
    res.window = window;
    auto sol = sys.nullspace((long)pairs.size());
    res.raw_dimension = (long)sol.size();

    // Residual coboundary directions compatible with the gauge: f supported
    // at L_0 and W_0 (f(G_0) is pinned by the Ramond gauge row).
    RowEchelon eb;
    eb.insert(coboundary_row(alg, pairs, {Family::L, 0}));
    eb.insert(coboundary_row(alg, pairs, {Family::W, 0}));
    long rb = eb.rank();
    RowEchelon esb = eb;
    for (const auto& v : sol)
        esb.insert(v);
    res.dimension = esb.rank() - rb;

    for (const auto& v : sol)
        res.basis.push_back(row_to_cocycle(alg, window, pairs, v));
    return res;
}

CheckReport independence_check(const std::vector<Cocycle>& cs, long window)
{
    CheckReport rep;
    if (cs.empty())
        return rep;
    const AlgebraPreset& alg = cs.front().alg();
    auto pairs = canonical_pairs(alg, window);
    RowEchelon eb;
    for (const auto& g : alg.basis_window(window))
        eb.insert(coboundary_row(alg, pairs, g));
    long rb = eb.rank();
    RowEchelon all = eb;
    for (const auto& c : cs) {
        SparseRow row;
        for (size_t i = 0; i < pairs.size(); ++i) {
            Rational v = c.eval(pairs[i].first, pairs[i].second);
            if (v != 0)
                row.emplace((long)i, v);
        }
        all.insert(std::move(row));
        ++rep.checked;
    }
    if (all.rank() - rb != (long)cs.size())
        rep.fail("only " + std::to_string(all.rank() - rb) + " of " +
                 std::to_string(cs.size()) + " cocycles independent modulo coboundaries");
    return rep;
}

}  // namespace salg
