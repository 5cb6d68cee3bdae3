#include "salg/linalg.hpp"

namespace salg {

namespace {

// r -= c * s.  The multiplier is taken by value: callers pass references
// into r itself, and the loop may erase that entry.
void axpy(SparseRow& r, const Rational c, const SparseRow& s)
{
    for (const auto& [col, v] : s) {
        auto it = r.find(col);
        if (it == r.end()) {
            r.emplace(col, -c * v);
        } else {
            it->second -= c * v;
            if (it->second == 0)
                r.erase(it);
        }
    }
}

}  // namespace

SparseRow RowEchelon::reduce(SparseRow r) const
{
    while (!r.empty()) {
        auto lead = r.begin();
        auto it = rows_.find(lead->first);
        if (it == rows_.end())
            break;
        axpy(r, lead->second, it->second);
    }
    return r;
}

bool RowEchelon::insert(SparseRow r)
{
    r = reduce(r);
    if (r.empty())
        return false;
    Rational inv = 1 / r.begin()->second;
    for (auto& [col, v] : r)
        v *= inv;
    long pivot = r.begin()->first;
    rows_.emplace(pivot, std::move(r));
    return true;
}

void RowEchelon::to_rref()
{
    // Walk pivots from largest to smallest, eliminating each from all
    // earlier rows.
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        long pivot = it->first;
        for (auto jt = rows_.begin(); jt->first != pivot; ++jt) {
            auto hit = jt->second.find(pivot);
            if (hit != jt->second.end())
                axpy(jt->second, hit->second, it->second);
        }
    }
}

std::vector<SparseRow> RowEchelon::nullspace(long ncols)
{
    to_rref();
    std::vector<SparseRow> basis;
    for (long f = 0; f < ncols; ++f) {
        if (rows_.count(f))
            continue;
        SparseRow v;
        v.emplace(f, 1);
        for (const auto& [pivot, row] : rows_) {
            auto it = row.find(f);
            if (it != row.end())
                v.emplace(pivot, -it->second);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

long rank_of(const std::vector<SparseRow>& rows)
{
    RowEchelon e;
    for (const auto& r : rows)
        e.insert(r);
    return e.rank();
}

}  // namespace salg
