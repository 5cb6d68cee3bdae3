#pragma once

#include "salg/algebra.hpp"
#include "salg/exponents.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace salg {

// Label of a basis vector of a coefficient module; the meaning of the entries
// is up to the concrete module (a single index for a finite module, a packed
// exponent list for a Whittaker module).
using CoeffKey = std::vector<int>;
using CoeffVec = std::map<CoeffKey, Rational>;

// A module over T_d: L modes >= 0, W modes >= -d, G modes >= 1/2, plus the
// central scalars c1, c2.
class CoeffModule {
  public:
    virtual ~CoeffModule() = default;

    virtual int d() const = 0;
    virtual int t() const = 0;
    virtual Rational c1() const = 0;
    virtual Rational c2() const = 0;

    virtual int key_parity(const CoeffKey&) const = 0;   // 0 even, 1 odd
    virtual long key_weight2(const CoeffKey&) const = 0;  // doubled L_0-degree label

    // Action of a T_d generator (centrals excluded; the scalars handle those).
    virtual CoeffVec act(const GenIndex& g, const CoeffKey& key) const = 0;

    // All keys with key_weight2 <= weight2_bound and letter count <= degree_bound.
    virtual std::vector<CoeffKey> keys(long weight2_bound, int degree_bound) const = 0;
};

bool in_td(const GenIndex& g, int d);

struct WeightBoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A basis vector W^i G^j L^k (x) key and finite linear combinations of them.
using InducedTerm = std::pair<ExponentTriple, CoeffKey>;
using InducedVector = std::map<InducedTerm, Rational>;

void ind_add(InducedVector& v, const InducedTerm& t, const Rational& c);
InducedVector ind_scale(const InducedVector& v, const Rational& c);
std::string ind_str(const InducedVector& v, const CoeffModule& V);

// Ind(V) = U(S) (x)_{U(T_d)} V, materialized up to a doubled weight bound.
// Generators act by straightening into the normal form with the W letters
// leftmost (largest position first), then G, then L.
class InducedModule {
  public:
    InducedModule(std::shared_ptr<const CoeffModule> V, long weight2_bound);

    const CoeffModule& coeff() const { return *V_; }
    int d() const { return V_->d(); }
    int t() const { return V_->t(); }
    long weight2_bound() const { return bound_; }

    InducedVector vacuum(const CoeffKey& key) const;  // 1 (x) key

    long weight2(const InducedTerm& term) const;
    int parity(const InducedTerm& term) const;  // 0 even, 1 odd

    // g . v for any generator of S; throws WeightBoundExceeded if a monomial
    // above the bound would be materialized.
    InducedVector act(const GenIndex& g, const InducedVector& v) const;

    // Largest monomial triple among the nonzero terms, in the principal order;
    // absent for v = 0.
    std::optional<ExponentTriple> deg(const InducedVector& v) const;

    // All normal-form monomial triples of the given doubled weight.
    std::vector<ExponentTriple> monomials_at_weight2(long w2) const;

    // Full basis slice: monomial weight plus key weight equal to w2, key
    // letter count capped by key_degree_bound.
    std::vector<InducedTerm> basis_at_weight2(long w2, int key_degree_bound) const;

    // Mode (doubled) of the letter at position s of the given block.
    long letter_mode2(Family block, int s) const;

  private:
    InducedVector mul(const GenIndex& g, const ExponentTriple& m, const CoeffKey& key) const;

    std::shared_ptr<const CoeffModule> V_;
    long bound_;
    mutable std::map<std::tuple<GenIndex, ExponentTriple, CoeffKey>, InducedVector> memo_;
};

}  // namespace salg
