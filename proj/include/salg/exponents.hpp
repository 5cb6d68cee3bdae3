#pragma once

#include <compare>
#include <map>
#include <string>

namespace salg {

// Finitely supported exponent vector (..., i_2, i_1), positions s >= 1.
class ExponentVector {
  public:
    std::map<int, int> entries;  // position -> exponent > 0
    bool odd_part = false;       // M_1 variant: entries restricted to {0, 1}

    bool is_zero() const { return entries.empty(); }
    int get(int s) const;
    void add(int s, int delta);  // throws on negative result (or > 1 for M_1)

    long weight() const;        // w(i) = sum s * i_s
    long degree_count() const;  // d(i) = sum i_s

    int min_pos() const;  // smallest s with i_s != 0 (q); requires nonzero
    int max_pos() const;  // largest s with i_s != 0 (p); requires nonzero

    ExponentVector prime() const;   // i' = i - e_p
    ExponentVector dprime() const;  // i'' = i - e_q

    // the variant flag does not participate in comparisons
    bool operator==(const ExponentVector& o) const { return entries == o.entries; }
    // arbitrary but total, for use as a map key
    auto operator<=>(const ExponentVector& o) const { return entries <=> o.entries; }

    std::string str() const;
};

ExponentVector unit_vector(int s, bool odd_part = false);  // e_s

// j > i: compare at the largest differing position.
bool lex_greater(const ExponentVector& j, const ExponentVector& i);
// j ≻ i: compare at the smallest differing position.
bool revlex_greater(const ExponentVector& j, const ExponentVector& i);

struct ExponentTriple {
    ExponentVector i;  // M (W part)
    ExponentVector j;  // M_1, all entries 0/1 (G part)
    ExponentVector k;  // M (L part)

    bool is_zero() const { return i.is_zero() && j.is_zero() && k.is_zero(); }
    bool operator==(const ExponentTriple&) const = default;
    auto operator<=>(const ExponentTriple& o) const
    {
        return std::tie(i, j, k) <=> std::tie(o.i, o.j, o.k);
    }

    std::string str() const;
};

// The principal total order: compare (k, w(k)) weight-first then by ≻, then
// (j, w(j)) likewise, then i by lex >.
bool principal_greater(const ExponentTriple& a, const ExponentTriple& b);

}  // namespace salg
