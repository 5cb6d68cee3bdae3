#include "salg/exponents.hpp"

#include <sstream>
#include <stdexcept>

namespace salg {

int ExponentVector::get(int s) const
{
    auto it = entries.find(s);
    return it == entries.end() ? 0 : it->second;
}

void ExponentVector::add(int s, int delta)
{
    if (s < 1)
        throw std::invalid_argument("exponent positions start at 1");
    int v = get(s) + delta;
    if (v < 0)
        throw std::invalid_argument("negative exponent");
    if (odd_part && v > 1)
        throw std::invalid_argument("odd exponent above 1");
    if (v == 0)
        entries.erase(s);
    else
        entries[s] = v;
}

long ExponentVector::weight() const
{
    long w = 0;
    for (const auto& [s, e] : entries)
        w += (long)s * e;
    return w;
}

long ExponentVector::degree_count() const
{
    long d = 0;
    for (const auto& [s, e] : entries)
        d += e;
    return d;
}

int ExponentVector::min_pos() const
{
    if (entries.empty())
        throw std::logic_error("min_pos of zero vector");
    return entries.begin()->first;
}

int ExponentVector::max_pos() const
{
    if (entries.empty())
        throw std::logic_error("max_pos of zero vector");
    return entries.rbegin()->first;
}

ExponentVector ExponentVector::prime() const
{
    ExponentVector r = *this;
    r.add(max_pos(), -1);
    return r;
}

ExponentVector ExponentVector::dprime() const
{
    ExponentVector r = *this;
    r.add(min_pos(), -1);
    return r;
}

std::string ExponentVector::str() const
{
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        if (!first)
            os << ",";
        os << it->second << "@" << it->first;
        first = false;
    }
    os << ")";
    return os.str();
}

ExponentVector unit_vector(int s, bool odd_part)
{
    ExponentVector v;
    v.odd_part = odd_part;
    v.add(s, 1);
    return v;
}

bool lex_greater(const ExponentVector& j, const ExponentVector& i)
{
    // walk positions from the largest down; first difference decides
    auto jt = j.entries.rbegin();
    auto it = i.entries.rbegin();
    while (jt != j.entries.rend() && it != i.entries.rend()) {
        if (jt->first != it->first)
            return jt->first > it->first;
        if (jt->second != it->second)
            return jt->second > it->second;
        ++jt;
        ++it;
    }
    return jt != j.entries.rend();
}

bool revlex_greater(const ExponentVector& j, const ExponentVector& i)
{
    // walk positions from the smallest up; first difference decides
    auto jt = j.entries.begin();
    auto it = i.entries.begin();
    while (jt != j.entries.end() && it != i.entries.end()) {
        if (jt->first != it->first)
            return jt->first < it->first;
        if (jt->second != it->second)
            return jt->second > it->second;
        ++jt;
        ++it;
    }
    return jt != j.entries.end();
}

std::string ExponentTriple::str() const
{
    return "[" + i.str() + "," + j.str() + "," + k.str() + "]";
}

namespace {

// (x, w(x)) with weight compared first, ties by revlex.
int weighted_revlex_cmp(const ExponentVector& a, const ExponentVector& b)
{
    long wa = a.weight(), wb = b.weight();
    if (wa != wb)
        return wa > wb ? 1 : -1;
    if (revlex_greater(a, b))
        return 1;
    if (revlex_greater(b, a))
        return -1;
    return 0;
}

}  // namespace

bool principal_greater(const ExponentTriple& a, const ExponentTriple& b)
{
    int c = weighted_revlex_cmp(a.k, b.k);
    if (c != 0)
        return c > 0;
    if (a.k == b.k) {
        c = weighted_revlex_cmp(a.j, b.j);
        if (c != 0)
            return c > 0;
        if (a.j == b.j && lex_greater(a.i, b.i))
            return true;
    }
    return false;
}

}  // namespace salg
