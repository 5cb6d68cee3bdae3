#pragma once

#include "salg/induced.hpp"

#include <memory>

namespace salg {

// Membership in S^(r1,r2,r3) = span{L_i : i >= r1} + {W_i : i >= r2} +
// {G_{i-1/2} : i >= max(r3, 1)}.
bool in_truncation_ideal(const GenIndex& g, int r1, int r2, int r3);

// q^(d,t) = T_d / S^(t+d+1, t+1, t+1), a finite-dimensional quotient.
class QuotientAlgebra {
  public:
    QuotientAlgebra(int d, int t);

    int d() const { return d_; }
    int t() const { return t_; }
    const std::vector<GenIndex>& basis() const { return basis_; }
    long dim() const { return (long)basis_.size(); }
    bool contains(const GenIndex& g) const;

    // Ambient bracket with the truncation ideal projected away.
    SuperVector bracket(const GenIndex& x, const GenIndex& y) const;

    // [T_d, ideal] stays in the ideal with no central leakage, over a window.
    CheckReport ideal_check(long window) const;

  private:
    int d_, t_;
    std::vector<GenIndex> basis_;
};

// Dimensions of q >= [q,q] >= [[q,q],[q,q]] >= ... until stable.
std::vector<long> derived_series(const QuotientAlgebra& q);

// Finite-dimensional module over q^(d,t), viewed as a T_d-module with the
// truncation ideal acting by zero.  Generators with no matrix act by zero.
class FiniteModule : public CoeffModule {
  public:
    using Matrix = std::vector<std::vector<Rational>>;  // row-major, act on columns

    FiniteModule(int d, int t, long dim);

    int d() const override { return d_; }
    int t() const override { return t_; }
    Rational c1() const override { return c1_; }
    Rational c2() const override { return c2_; }
    int key_parity(const CoeffKey& key) const override { return parities_.at(key.at(0)); }
    long key_weight2(const CoeffKey&) const override { return 0; }
    CoeffVec act(const GenIndex& g, const CoeffKey& key) const override;
    std::vector<CoeffKey> keys(long, int) const override;

    long dim() const { return dim_; }
    void set_central(Rational c1, Rational c2);
    void set_parity(long i, int p) { parities_.at(i) = p; }
    void set_action(const GenIndex& g, Matrix m);
    const std::map<GenIndex, Matrix>& actions() const { return actions_; }

  private:
    int d_, t_;
    long dim_;
    std::vector<int> parities_;
    Rational c1_ = 0, c2_ = 0;
    std::map<GenIndex, Matrix> actions_;
};

// Brute-force super-module axiom check over all generator pairs of q^(d,t),
// plus parity compatibility of every matrix.
CheckReport validate_module(const FiniteModule& V);

// Conditions for simplicity of Ind(V): (a) W_t injective (t > 0) or c2 != 0
// (t = 0); (b) W_i V = 0 for i > t and L_j V = 0 for j > t + d; the G-part
// consequence G_{i-1/2} V = 0 for i > t is checked alongside.
struct ConditionReport {
    bool a = false;
    bool b = false;
    bool g_part = false;
    CheckReport detail;

    bool certified() const { return a && b && g_part; }
};

ConditionReport check_conditions(const CoeffModule& V, long key_weight2_bound,
                                 int key_degree_bound, int mode_window);

struct InducedBuild {
    InducedModule M;
    ConditionReport conditions;
};

InducedBuild build_induced(std::shared_ptr<const CoeffModule> V, long weight2_bound,
                           long key_weight2_bound, int key_degree_bound, int mode_window);

// Verma coefficient line: d = t = 0, L_0 -> h1, W_0 -> h2, C2 forced to 0.
std::shared_ptr<FiniteModule> verma_line(const Rational& h1, const Rational& h2,
                                         const Rational& c1);

// Basis of {u at the given weight : all positive modes up to the window kill u}.
std::vector<InducedVector> find_singular_vectors(const InducedModule& M, long weight2,
                                                 int mode_window, int key_degree_bound);

struct DegenerateInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One step of the degree-reduction sweep: picks the generator prescribed by
// deg(v) = (i, j, k), applies it, and compares against the predicted degree.
struct Claim1Step {
    GenIndex g;
    InducedVector image;
    ExponentTriple predicted;
    bool degree_matches = false;
};

Claim1Step claim1_reduce(const InducedModule& M, const InducedVector& v);

// Iterates claim1_reduce from seeded random vectors; passes when every sample
// reaches a nonzero element of the coefficient part.
CheckReport simplicity_probe(const InducedModule& M, int samples, unsigned long seed,
                             long weight2_cap, int key_degree_bound);

// N_{a,b,c} inside the truncation: W_i v = G_{j-1/2} v = L_k v = 0 for
// i > a, j > b, k > c (modes tested up to the window above each threshold).
std::vector<InducedVector> top_space(const InducedModule& M, int a, int b, int c,
                                     long weight2_cap, int key_degree_bound,
                                     int mode_window);

struct Restriction {
    int r1 = 0, r2 = 0, r3 = 0;

    bool operator==(const Restriction&) const = default;
};

// Least (r1, r2, r3) with S^(r1,r2,r3) v = 0 among modes up to scan_cap.
Restriction restrictedness_probe(const InducedModule& M, const InducedVector& v,
                                 int scan_cap);

}  // namespace salg
