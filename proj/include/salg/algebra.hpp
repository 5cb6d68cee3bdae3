#pragma once

#include "salg/quadext.hpp"
#include "salg/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace salg {

enum class Family { L, W, G, C1, C2, C3, C4 };

const char* family_name(Family f);

inline bool is_central(Family f)
{
    return f == Family::C1 || f == Family::C2 || f == Family::C3 || f == Family::C4;
}

enum class Parity { Even, Odd };

// Basis generator of one of the algebra presets.  Modes are stored doubled so
// half-integers (G modes in the Neveu-Schwarz lattices) stay integral: mode2 =
// 2m for L_m / W_m, 2r for G_r.  Central generators carry mode2 = 0.
struct GenIndex {
    Family fam;
    long mode2 = 0;

    auto operator<=>(const GenIndex&) const = default;
};

std::string gen_str(const GenIndex& g);  // "L2", "G-1/2", "C1", ...
GenIndex gen_parse(const std::string& s);

struct IndexLatticeViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite linear combination of generators; zero coefficients are never stored.
class SuperVector {
  public:
    std::map<GenIndex, Rational> terms;

    SuperVector() = default;
    static SuperVector unit(GenIndex g) { return single(g, 1); }
    static SuperVector single(GenIndex g, Rational c);

    bool is_zero() const { return terms.empty(); }
    void add_term(const GenIndex& g, const Rational& c);
    SuperVector& operator+=(const SuperVector& o);
    SuperVector operator*(const Rational& c) const;
    SuperVector operator-() const { return *this * Rational(-1); }
    bool operator==(const SuperVector& o) const { return terms == o.terms; }

    std::string str() const;
};

// Structure-constant table for one algebra from the preset family.  Brackets
// are closed-form rule functions, so results never truncate at a window edge.
class AlgebraPreset {
  public:
    enum class Id { S, Sbar0, Sbar12, Stilde0, Stilde12, L1, SVir0, SVir12 };

    static const AlgebraPreset& by_name(const std::string& name);
    static const std::vector<std::string>& names();

    const std::string& name() const { return name_; }
    Id id() const { return id_; }

    bool in_lattice(const GenIndex& g) const;
    void require_lattice(const GenIndex& g) const;
    Parity parity(Family f) const;

    // Bracket of two basis generators, from the closed-form table.
    SuperVector bracket_basis(const GenIndex& x, const GenIndex& y) const;

    // All basis generators with |mode| <= window (centrals included).
    std::vector<GenIndex> basis_window(long window) const;

    AlgebraPreset(Id id, std::string name) : id_(id), name_(std::move(name)) {}

  private:
    SuperVector table(const GenIndex& x, const GenIndex& y) const;

    Id id_;
    std::string name_;
};

// Bilinear extension of the preset table.
SuperVector bracket(const SuperVector& x, const SuperVector& y, const AlgebraPreset& alg);

struct CheckReport {
    bool pass = true;
    long checked = 0;
    std::vector<std::string> witnesses;  // first few failures, human-readable

    void fail(std::string w);
};

CheckReport super_skew_check(const AlgebraPreset& alg, long window);
CheckReport super_jacobi_check(const AlgebraPreset& alg, long window);

// Grading degree of a generator, doubled (deg L_m = m, deg G_r = r, deg C_i = 0).
inline long grading_degree2(const GenIndex& g)
{
    return is_central(g.fam) ? 0 : g.mode2;
}

// Checks that L_m -> (1/2) L_{2m}, W_m -> W_{2m}, G_{m+1/2} -> (1/sqrt2) G_{2m+1}
// is an injective homomorphism Sbar12 -> Sbar0, over Q(sqrt 2).
CheckReport phi_embedding_check(long window);

}  // namespace salg
