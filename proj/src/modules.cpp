#include "salg/modules.hpp"

#include "salg/linalg.hpp"

#include <random>

namespace salg {

namespace {

const AlgebraPreset& ambient()
{
    return AlgebraPreset::by_name("S");
}

int gen_parity(const GenIndex& g)
{
    return g.fam == Family::G ? 1 : 0;
}

}  // namespace

bool in_truncation_ideal(const GenIndex& g, int r1, int r2, int r3)
{
    switch (g.fam) {
        case Family::L:
            return g.mode2 >= 2 * r1;
        case Family::W:
            return g.mode2 >= 2 * r2;
        case Family::G:
            return g.mode2 >= 2 * std::max(r3, 1) - 1;
        default:
            return false;
    }
}

QuotientAlgebra::QuotientAlgebra(int d, int t) : d_(d), t_(t)
{
    if (d < 0 || t < 0)
        throw std::invalid_argument("d, t must be nonnegative");
    for (int m = 0; m <= t + d; ++m)
        basis_.push_back({Family::L, 2L * m});
    for (int m = -d; m <= t; ++m)
        basis_.push_back({Family::W, 2L * m});
    for (int i = 1; i <= t; ++i)
        basis_.push_back({Family::G, 2L * i - 1});
    basis_.push_back({Family::C1, 0});
    basis_.push_back({Family::C2, 0});
}

bool QuotientAlgebra::contains(const GenIndex& g) const
{
    if (is_central(g.fam))
        return g.fam == Family::C1 || g.fam == Family::C2;
    return in_td(g, d_) && !in_truncation_ideal(g, t_ + d_ + 1, t_ + 1, t_ + 1);
}

SuperVector QuotientAlgebra::bracket(const GenIndex& x, const GenIndex& y) const
{
    SuperVector out;
    for (const auto& [g, c] : ambient().bracket_basis(x, y).terms)
        if (contains(g))
            out.add_term(g, c);
    return out;
}

CheckReport QuotientAlgebra::ideal_check(long window) const
{
    CheckReport rep;
    std::vector<GenIndex> td, ideal;
    for (long m = 0; m <= window; ++m)
        td.push_back({Family::L, 2 * m});
    for (long m = -d_; m <= window; ++m)
        td.push_back({Family::W, 2 * m});
    for (long i = 1; i <= window; ++i)
        td.push_back({Family::G, 2 * i - 1});
    for (const auto& g : td)
        if (in_truncation_ideal(g, t_ + d_ + 1, t_ + 1, t_ + 1))
            ideal.push_back(g);

    for (const auto& x : td)
        for (const auto& y : ideal) {
            for (const auto& [g, c] : ambient().bracket_basis(x, y).terms) {
                ++rep.checked;
                if (!in_truncation_ideal(g, t_ + d_ + 1, t_ + 1, t_ + 1))
                    rep.fail("[" + gen_str(x) + "," + gen_str(y) + "] leaks " + gen_str(g));
            }
        }
    return rep;
}

std::vector<long> derived_series(const QuotientAlgebra& q)
{
    const auto& basis = q.basis();
    std::map<GenIndex, long> col;
    for (size_t i = 0; i < basis.size(); ++i)
        col.emplace(basis[i], (long)i);

    std::vector<SparseRow> span;
    for (size_t i = 0; i < basis.size(); ++i)
        span.push_back({{(long)i, 1}});

    std::vector<long> dims;
    dims.push_back((long)span.size());
    while (dims.back() > 0) {
        RowEchelon next;
        for (const auto& u : span)
            for (const auto& v : span) {
                SparseRow w;
                for (const auto& [iu, cu] : u)
                    for (const auto& [iv, cv] : v)
                        for (const auto& [g, c] :
                             q.bracket(basis[iu], basis[iv]).terms) {
                            auto it = w.find(col.at(g));
                            if (it == w.end())
                                w.emplace(col.at(g), cu * cv * c);
                            else if ((it->second += cu * cv * c) == 0)
                                w.erase(it);
                        }
                next.insert(w);
            }
        long r = next.rank();
        if (r == dims.back())
            break;  // stable without reaching zero
        dims.push_back(r);
        span.clear();
        for (const auto& [pivot, row] : next.rows())
            span.push_back(row);
    }
    return dims;
}

FiniteModule::FiniteModule(int d, int t, long dim)
    : d_(d), t_(t), dim_(dim), parities_(dim, 0)
{
}

void FiniteModule::set_central(Rational c1, Rational c2)
{
    c1_ = std::move(c1);
    c2_ = std::move(c2);
}

void FiniteModule::set_action(const GenIndex& g, Matrix m)
{
    if ((long)m.size() != dim_)
        throw std::invalid_argument("matrix dimension mismatch");
    for (const auto& row : m)
        if ((long)row.size() != dim_)
            throw std::invalid_argument("matrix dimension mismatch");
    actions_[g] = std::move(m);
}

CoeffVec FiniteModule::act(const GenIndex& g, const CoeffKey& key) const
{
    CoeffVec out;
    auto it = actions_.find(g);
    if (it == actions_.end())
        return out;
    long j = key.at(0);
    for (long i = 0; i < dim_; ++i) {
        const Rational& c = it->second[i][j];
        if (c != 0)
            out.emplace(CoeffKey{(int)i}, c);
    }
    return out;
}

std::vector<CoeffKey> FiniteModule::keys(long, int) const
{
    std::vector<CoeffKey> out;
    for (long i = 0; i < dim_; ++i)
        out.push_back({(int)i});
    return out;
}

namespace {

using Matrix = FiniteModule::Matrix;

Matrix zero_matrix(long n)
{
    return Matrix(n, std::vector<Rational>(n, 0));
}

Matrix scalar_matrix(long n, const Rational& c)
{
    Matrix m = zero_matrix(n);
    for (long i = 0; i < n; ++i)
        m[i][i] = c;
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b)
{
    long n = (long)a.size();
    Matrix out = zero_matrix(n);
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < n; ++k) {
            if (a[i][k] == 0)
                continue;
            for (long j = 0; j < n; ++j)
                out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

void mat_axpy(Matrix& a, const Rational& c, const Matrix& b)
{
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            a[i][j] += c * b[i][j];
}

Matrix action_matrix(const FiniteModule& V, const GenIndex& g)
{
    if (g.fam == Family::C1)
        return scalar_matrix(V.dim(), V.c1());
    if (g.fam == Family::C2)
        return scalar_matrix(V.dim(), V.c2());
    auto it = V.actions().find(g);
    return it == V.actions().end() ? zero_matrix(V.dim()) : it->second;
}

}  // namespace

CheckReport validate_module(const FiniteModule& V)
{
    CheckReport rep;
    QuotientAlgebra q(V.d(), V.t());

    for (const auto& [g, m] : V.actions()) {
        if (!q.contains(g) || is_central(g.fam)) {
            rep.fail("action given for " + gen_str(g) + " outside the quotient basis");
            continue;
        }
        int pg = gen_parity(g);
        for (long i = 0; i < V.dim(); ++i)
            for (long j = 0; j < V.dim(); ++j) {
                ++rep.checked;
                if (m[i][j] != 0 &&
                    V.key_parity({(int)i}) != (V.key_parity({(int)j}) + pg) % 2)
                    rep.fail("parity violation in " + gen_str(g));
            }
    }

    for (const auto& x : q.basis()) {
        if (is_central(x.fam))
            continue;
        for (const auto& y : q.basis()) {
            if (is_central(y.fam))
                continue;
            Matrix lhs = mat_mul(action_matrix(V, x), action_matrix(V, y));
            Rational sign = (gen_parity(x) && gen_parity(y)) ? -1 : 1;
            mat_axpy(lhs, -sign, mat_mul(action_matrix(V, y), action_matrix(V, x)));
            Matrix rhs = zero_matrix(V.dim());
            for (const auto& [g, c] : q.bracket(x, y).terms)
                mat_axpy(rhs, c, action_matrix(V, g));
            ++rep.checked;
            if (lhs != rhs)
                rep.fail("module axiom fails on (" + gen_str(x) + "," + gen_str(y) + ")");
        }
    }
    return rep;
}

ConditionReport check_conditions(const CoeffModule& V, long key_weight2_bound,
                                 int key_degree_bound, int mode_window)
{
    ConditionReport rep;
    const int t = V.t(), d = V.d();
    auto keys = V.keys(key_weight2_bound, key_degree_bound);

    rep.b = true;
    rep.g_part = true;
    for (const auto& key : keys) {
        for (int i = t + 1; i <= t + mode_window; ++i) {
            ++rep.detail.checked;
            if (!V.act({Family::W, 2L * i}, key).empty()) {
                rep.b = false;
                rep.detail.fail("W_" + std::to_string(i) + " does not kill V");
            }
        }
        for (int j = t + d + 1; j <= t + d + mode_window; ++j) {
            ++rep.detail.checked;
            if (!V.act({Family::L, 2L * j}, key).empty()) {
                rep.b = false;
                rep.detail.fail("L_" + std::to_string(j) + " does not kill V");
            }
        }
        for (int i = t + 1; i <= t + mode_window; ++i) {
            ++rep.detail.checked;
            if (!V.act({Family::G, 2L * i - 1}, key).empty()) {
                rep.g_part = false;
                rep.detail.fail("G_" + std::to_string(i) + "-1/2 does not kill V");
            }
        }
    }

    if (t == 0) {
        rep.a = V.c2() != 0;
        if (!rep.a)
            rep.detail.fail("t = 0 and c2 = 0");
    } else {
        // injectivity of W_t on the truncated span
        std::map<CoeffKey, long> col;
        auto col_of = [&](const CoeffKey& k) {
            return col.emplace(k, (long)col.size()).first->second;
        };
        RowEchelon images;
        long r = 0;
        for (const auto& key : keys) {
            SparseRow row;
            for (const auto& [k2, c] : V.act({Family::W, 2L * t}, key))
                row.emplace(col_of(k2), c);
            if (images.insert(row))
                ++r;
        }
        rep.a = r == (long)keys.size();
        if (!rep.a)
            rep.detail.fail("W_t is not injective on the truncated span");
    }
    rep.detail.pass = rep.certified() && rep.detail.pass;
    return rep;
}

InducedBuild build_induced(std::shared_ptr<const CoeffModule> V, long weight2_bound,
                           long key_weight2_bound, int key_degree_bound, int mode_window)
{
    ConditionReport cond =
        check_conditions(*V, key_weight2_bound, key_degree_bound, mode_window);
    return InducedBuild{InducedModule(std::move(V), weight2_bound), std::move(cond)};
}

std::shared_ptr<FiniteModule> verma_line(const Rational& h1, const Rational& h2,
                                         const Rational& c1)
{
    auto V = std::make_shared<FiniteModule>(0, 0, 1);
    V->set_central(c1, 0);
    V->set_action({Family::L, 0}, {{h1}});
    V->set_action({Family::W, 0}, {{h2}});
    return V;
}

namespace {

std::vector<InducedVector> solve_annihilated(const InducedModule& M,
                                             const std::vector<InducedTerm>& cand,
                                             const std::vector<GenIndex>& gens)
{
    std::map<std::pair<GenIndex, InducedTerm>, SparseRow> rows;
    for (size_t c = 0; c < cand.size(); ++c) {
        InducedVector unit;
        unit.emplace(cand[c], 1);
        for (const auto& g : gens)
            for (const auto& [term, v] : M.act(g, unit))
                rows[{g, term}].emplace((long)c, v);
    }
    RowEchelon system;
    for (const auto& [key, row] : rows)
        system.insert(row);
    std::vector<InducedVector> out;
    for (const auto& sol : system.nullspace((long)cand.size())) {
        InducedVector v;
        for (const auto& [c, coeff] : sol)
            ind_add(v, cand[c], coeff);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::vector<InducedVector> find_singular_vectors(const InducedModule& M, long weight2,
                                                 int mode_window, int key_degree_bound)
{
    std::vector<GenIndex> gens;
    for (int i = 1; i <= mode_window; ++i) {
        gens.push_back({Family::L, 2L * i});
        gens.push_back({Family::W, 2L * i});
        gens.push_back({Family::G, 2L * i - 1});
    }
    return solve_annihilated(M, M.basis_at_weight2(weight2, key_degree_bound), gens);
}

Claim1Step claim1_reduce(const InducedModule& M, const InducedVector& v)
{
    auto dv = M.deg(v);
    if (!dv)
        throw DegenerateInput("claim1_reduce on the zero vector");
    if (dv->is_zero())
        throw DegenerateInput("claim1_reduce on a coefficient-part vector");

    Claim1Step step;
    const int t = M.t(), d = M.d();
    const ExponentTriple& m = *dv;
    if (!m.k.is_zero()) {
        step.g = {Family::W, 2L * (m.k.min_pos() + t)};
        step.predicted = {m.i, m.j, m.k.dprime()};
    } else if (!m.j.is_zero()) {
        step.g = {Family::G, 2L * (m.j.min_pos() + t) - 1};
        step.predicted = {m.i, m.j.dprime(), {}};
    } else {
        step.g = {Family::L, 2L * (m.i.max_pos() + t + d)};
        step.predicted = {m.i.prime(), {}, {}};
    }
    step.image = M.act(step.g, v);
    step.degree_matches = M.deg(step.image) == step.predicted;
    return step;
}

CheckReport simplicity_probe(const InducedModule& M, int samples, unsigned long seed,
                             long weight2_cap, int key_degree_bound)
{
    CheckReport rep;
    std::mt19937_64 rng(seed);

    std::vector<std::vector<InducedTerm>> slices;
    for (long w2 = 0; w2 <= weight2_cap; ++w2) {
        auto b = M.basis_at_weight2(w2, key_degree_bound);
        if (!b.empty())
            slices.push_back(std::move(b));
    }

    for (int s = 0; s < samples; ++s) {
        const auto& slice = slices[rng() % slices.size()];
        InducedVector v;
        int nterms = 1 + (int)(rng() % 3);
        for (int n = 0; n < nterms; ++n) {
            long num = 1 + (long)(rng() % 5);
            if (rng() % 2)
                num = -num;
            ind_add(v, slice[rng() % slice.size()], num);
        }
        if (v.empty())
            continue;
        ++rep.checked;

        int guard = 0;
        while (true) {
            auto dv = M.deg(v);
            if (!dv) {
                rep.fail("sample " + std::to_string(s) + " collapsed to zero");
                break;
            }
            if (dv->is_zero())
                break;  // reached a nonzero coefficient-part vector
            if (++guard > 1000) {
                rep.fail("sample " + std::to_string(s) + " did not terminate");
                break;
            }
            Claim1Step step = claim1_reduce(M, v);
            if (!step.degree_matches) {
                rep.fail("degree prediction failed at sample " + std::to_string(s));
                break;
            }
            v = std::move(step.image);
        }
    }
    return rep;
}

std::vector<InducedVector> top_space(const InducedModule& M, int a, int b, int c,
                                     long weight2_cap, int key_degree_bound,
                                     int mode_window)
{
    std::vector<InducedTerm> cand;
    for (long w2 = 0; w2 <= weight2_cap; ++w2)
        for (auto& term : M.basis_at_weight2(w2, key_degree_bound))
            cand.push_back(std::move(term));

    std::vector<GenIndex> gens;
    for (int i = a + 1; i <= a + mode_window; ++i)
        gens.push_back({Family::W, 2L * i});
    for (int j = b + 1; j <= b + mode_window; ++j)
        gens.push_back({Family::G, 2L * j - 1});
    for (int k = c + 1; k <= c + mode_window; ++k)
        gens.push_back({Family::L, 2L * k});
    return solve_annihilated(M, cand, gens);
}

Restriction restrictedness_probe(const InducedModule& M, const InducedVector& v,
                                 int scan_cap)
{
    if (v.empty())
        throw DegenerateInput("restrictedness_probe on the zero vector");
    // r3 = 0 and r3 = 1 cut the same ideal (the G sum skips i = 0); report the
    // canonical representative 1.
    Restriction r{0, 0, 1};
    for (int i = 0; i <= scan_cap; ++i) {
        if (!M.act({Family::L, 2L * i}, v).empty())
            r.r1 = i + 1;
        if (!M.act({Family::W, 2L * i}, v).empty())
            r.r2 = i + 1;
        if (i >= 1 && !M.act({Family::G, 2L * i - 1}, v).empty())
            r.r3 = i + 1;
    }
    return r;
}

}  // namespace salg
