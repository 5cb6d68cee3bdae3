#pragma once

#include "salg/algebra.hpp"
#include "salg/linalg.hpp"

#include <optional>
#include <utility>

namespace salg {

struct WindowTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 2-cocycle on Sbar0 or Sbar12, stored on canonical generator pairs (x <= y)
// whose modes and mode-sum both lie within the window.  Values at swapped
// pairs follow from super skew-symmetry.
class Cocycle {
  public:
    Cocycle(const std::string& alg_name, long window);

    const AlgebraPreset& alg() const { return *alg_; }
    long window() const { return window_; }

    bool in_domain(const GenIndex& x, const GenIndex& y) const;
    void set(const GenIndex& x, const GenIndex& y, const Rational& c);
    Rational eval(const GenIndex& x, const GenIndex& y) const;  // throws WindowTooSmall
    Rational eval_vec(const GenIndex& x, const SuperVector& y) const;

    const std::map<std::pair<GenIndex, GenIndex>, Rational>& table() const { return table_; }

  private:
    const AlgebraPreset* alg_;
    long window_;
    std::map<std::pair<GenIndex, GenIndex>, Rational> table_;
};

// Super skew-symmetry is structural; verifies the cocycle Jacobi identity on
// every windowed triple whose pair evaluations close within c's domain.
CheckReport cocycle_check(const Cocycle& c, long window);

// Subtracts the coboundary of f(X_n) = c(L_0, X_n)/n (nonzero modes; plus
// f(G_0) = c(L_{-1}, G_1) in the Ramond case), killing the (L_0, X_n) row.
Cocycle normalize_by_coboundary(const Cocycle& c);

// The explicit cocycles: k=1 (L,L) Virasoro; k=2 (L,W)+(G,G) delta;
// k=3 (L,G) m^2+m; k=4 (W,G) delta.
Cocycle alpha_cocycle(int k, long window);  // on Sbar0, k = 1..4
Cocycle beta_cocycle(int k, long window);   // on Sbar12, k = 1..2

// Canonical unknown pairs of the windowed solver, in index order.
std::vector<std::pair<GenIndex, GenIndex>> canonical_pairs(const AlgebraPreset& alg,
                                                           long window);

struct H2Result {
    long window = 0;
    long raw_dimension = 0;  // gauge-fixed cocycle space, before the quotient
    long dimension = 0;      // after quotienting by residual coboundaries
    std::vector<Cocycle> basis;  // of the gauge-fixed space
};

// Windowed linear solver for the second cohomology; eps2 is the doubled
// epsilon (0 for Ramond, 1 for Neveu-Schwarz).
H2Result solve_h2(int eps2, long window);

// Verifies no nonzero linear combination of cs is a coboundary on the window.
CheckReport independence_check(const std::vector<Cocycle>& cs, long window);

}  // namespace salg
