#include "salg/algebra.hpp"

#include <array>
#include <sstream>

namespace salg {

const char* family_name(Family f)
{
    switch (f) {
        case Family::L: return "L";
        case Family::W: return "W";
        case Family::G: return "G";
        case Family::C1: return "C1";
        case Family::C2: return "C2";
        case Family::C3: return "C3";
        case Family::C4: return "C4";
    }
    return "?";
}

std::string gen_str(const GenIndex& g)
{
    if (is_central(g.fam))
        return family_name(g.fam);
    std::ostringstream os;
    os << family_name(g.fam);
    if (g.mode2 % 2 == 0)
        os << g.mode2 / 2;
    else
        os << g.mode2 << "/2";
    return os.str();
}

GenIndex gen_parse(const std::string& s)
{
    if (s == "C1") return {Family::C1, 0};
    if (s == "C2") return {Family::C2, 0};
    if (s == "C3") return {Family::C3, 0};
    if (s == "C4") return {Family::C4, 0};
    if (s.empty())
        throw std::invalid_argument("empty generator name");
    Family f;
    switch (s[0]) {
        case 'L': f = Family::L; break;
        case 'W': f = Family::W; break;
        case 'G': f = Family::G; break;
        default: throw std::invalid_argument("bad generator name: " + s);
    }
    std::string rest = s.substr(1);
    auto slash = rest.find('/');
    try {
        if (slash == std::string::npos)
            return {f, 2 * std::stol(rest)};
        if (rest.substr(slash + 1) != "2")
            throw std::invalid_argument("");
        long num = std::stol(rest.substr(0, slash));
        if (num % 2 == 0)
            throw std::invalid_argument("");
        return {f, num};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad generator mode: " + s);
    }
}

SuperVector SuperVector::single(GenIndex g, Rational c)
{
    SuperVector v;
    v.add_term(g, c);
    return v;
}

void SuperVector::add_term(const GenIndex& g, const Rational& c)
{
    if (c == 0)
        return;
    auto it = terms.find(g);
    if (it == terms.end()) {
        terms.emplace(g, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

SuperVector& SuperVector::operator+=(const SuperVector& o)
{
    for (const auto& [g, c] : o.terms)
        add_term(g, c);
    return *this;
}

SuperVector SuperVector::operator*(const Rational& c) const
{
    SuperVector r;
    if (c == 0)
        return r;
    for (const auto& [g, v] : terms)
        r.terms.emplace(g, v * c);
    return r;
}

std::string SuperVector::str() const
{
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms) {
        if (!first)
            os << " + ";
        os << rat_str(c) << "*" << gen_str(g);
        first = false;
    }
    return os.str();
}

void CheckReport::fail(std::string w)
{
    pass = false;
    if (witnesses.size() < 8)
        witnesses.push_back(std::move(w));
}

namespace {

const std::vector<std::string> kPresetNames = {"S",        "Sbar0", "Sbar12", "Stilde0",
                                               "Stilde12", "L1",    "SVir0",  "SVir12"};

std::vector<AlgebraPreset>& presets()
{
    using Id = AlgebraPreset::Id;
    static std::vector<AlgebraPreset>* v = new std::vector<AlgebraPreset>{
        {Id::S, "S"},           {Id::Sbar0, "Sbar0"},   {Id::Sbar12, "Sbar12"},
        {Id::Stilde0, "Stilde0"}, {Id::Stilde12, "Stilde12"}, {Id::L1, "L1"},
        {Id::SVir0, "SVir0"},   {Id::SVir12, "SVir12"}};
    return *v;
}

}  // namespace

const std::vector<std::string>& AlgebraPreset::names()
{
    return kPresetNames;
}

const AlgebraPreset& AlgebraPreset::by_name(const std::string& name)
{
    for (const auto& p : presets())
        if (p.name() == name)
            return p;
    throw std::invalid_argument("unknown algebra preset: " + name);
}

bool AlgebraPreset::in_lattice(const GenIndex& g) const
{
    const bool even_mode = (g.mode2 % 2 == 0);
    const bool odd_mode = !even_mode;
    switch (g.fam) {
        case Family::L:
            return even_mode;
        case Family::W:
            return even_mode && id_ != Id::SVir0 && id_ != Id::SVir12;
        case Family::G:
            switch (id_) {
                case Id::S:
                case Id::Sbar12:
                case Id::Stilde12:
                case Id::SVir12:
                    return odd_mode;
                case Id::Sbar0:
                case Id::Stilde0:
                case Id::SVir0:
                    return even_mode;
                case Id::L1:
                    return false;
            }
            return false;
        case Family::C1:
        case Family::C2:
            if (g.mode2 != 0)
                return false;
            return id_ == Id::S || id_ == Id::Stilde0 || id_ == Id::Stilde12 || id_ == Id::L1;
        case Family::C3:
            return g.mode2 == 0 &&
                   (id_ == Id::Stilde0 || id_ == Id::Stilde12 || id_ == Id::L1);
        case Family::C4:
            return g.mode2 == 0 && (id_ == Id::Stilde0 || id_ == Id::Stilde12);
    }
    return false;
}

void AlgebraPreset::require_lattice(const GenIndex& g) const
{
    if (!in_lattice(g))
        throw IndexLatticeViolation(gen_str(g) + " is not in the " + name_ + " lattice");
}

Parity AlgebraPreset::parity(Family f) const
{
    if (f == Family::G)
        return Parity::Odd;
    if ((f == Family::C3 || f == Family::C4) && (id_ == Id::Stilde0 || id_ == Id::Stilde12))
        return Parity::Odd;
    return Parity::Even;
}

// Table for canonically ordered family pairs (L < W < G < centrals).
SuperVector AlgebraPreset::table(const GenIndex& x, const GenIndex& y) const
{
    SuperVector out;
    if (is_central(x.fam) || is_central(y.fam))
        return out;
    const long m2 = x.mode2, n2 = y.mode2;
    const bool sum0 = (m2 + n2 == 0);

    if (x.fam == Family::L && y.fam == Family::L) {
        if (id_ == Id::SVir0 || id_ == Id::SVir12) {
            out.add_term({Family::L, m2 + n2}, rat(m2 - n2, 2));
            return out;
        }
        out.add_term({Family::L, m2 + n2}, rat(n2 - m2, 2));
        if (sum0 && id_ != Id::Sbar0 && id_ != Id::Sbar12) {
            const Rational m = rat(m2, 2);
            out.add_term({Family::C1, 0}, (m * m * m - m) / 12);
        }
        return out;
    }
    if (x.fam == Family::L && y.fam == Family::W) {
        out.add_term({Family::W, m2 + n2}, rat(m2 + n2, 2));
        if (sum0) {
            if (id_ == Id::S || id_ == Id::Stilde0 || id_ == Id::Stilde12)
                out.add_term({Family::C2, 0}, 1);
            if (id_ == Id::L1) {
                out.add_term({Family::C2, 0}, rat(m2, 2));
                out.add_term({Family::C3, 0}, 1);
            }
        }
        return out;
    }
    if (x.fam == Family::L && y.fam == Family::G) {
        if (id_ == Id::SVir0 || id_ == Id::SVir12) {
            // [L_m, G_r] = (m/2 - r) G_{m+r}
            out.add_term({Family::G, m2 + n2}, rat(m2 - 2 * n2, 4));
            return out;
        }
        out.add_term({Family::G, m2 + n2}, rat(n2, 2));
        if (sum0 && (id_ == Id::Stilde0 || id_ == Id::Stilde12)) {
            const Rational m = rat(m2, 2);
            out.add_term({Family::C3, 0}, m * m + m);
        }
        return out;
    }
    if (x.fam == Family::W && y.fam == Family::G) {
        if (sum0 && (id_ == Id::Stilde0 || id_ == Id::Stilde12))
            out.add_term({Family::C4, 0}, 1);
        return out;
    }
    if (x.fam == Family::G && y.fam == Family::G) {
        if (id_ == Id::SVir0 || id_ == Id::SVir12) {
            out.add_term({Family::L, m2 + n2}, 2);
            return out;
        }
        out.add_term({Family::W, m2 + n2}, rat(m2 + n2, 2));
        if (sum0 && (id_ == Id::S || id_ == Id::Stilde0 || id_ == Id::Stilde12))
            out.add_term({Family::C2, 0}, 1);
        return out;
    }
    // (W, W) and anything else without a listed rule
    return out;
}

SuperVector AlgebraPreset::bracket_basis(const GenIndex& x, const GenIndex& y) const
{
    require_lattice(x);
    require_lattice(y);
    if (static_cast<int>(x.fam) <= static_cast<int>(y.fam))
        return table(x, y);
    // [x,y] = -(-1)^{|x||y|} [y,x]
    const bool both_odd = parity(x.fam) == Parity::Odd && parity(y.fam) == Parity::Odd;
    SuperVector r = table(y, x);
    return both_odd ? r : -r;
}

SuperVector bracket(const SuperVector& x, const SuperVector& y, const AlgebraPreset& alg)
{
    SuperVector out;
    for (const auto& [gx, cx] : x.terms)
        for (const auto& [gy, cy] : y.terms)
            out += alg.bracket_basis(gx, gy) * (cx * cy);
    return out;
}

std::vector<GenIndex> AlgebraPreset::basis_window(long window) const
{
    std::vector<GenIndex> out;
    for (long m2 = -2 * window; m2 <= 2 * window; ++m2)
        for (Family f : {Family::L, Family::W, Family::G}) {
            GenIndex g{f, m2};
            if (in_lattice(g))
                out.push_back(g);
        }
    for (Family f : {Family::C1, Family::C2, Family::C3, Family::C4}) {
        GenIndex g{f, 0};
        if (in_lattice(g))
            out.push_back(g);
    }
    return out;
}

CheckReport super_skew_check(const AlgebraPreset& alg, long window)
{
    CheckReport rep;
    auto basis = alg.basis_window(window);
    for (const auto& x : basis)
        for (const auto& y : basis) {
            const bool both_odd = alg.parity(x.fam) == Parity::Odd &&
                                  alg.parity(y.fam) == Parity::Odd;
            SuperVector lhs = alg.bracket_basis(x, y);
            SuperVector rhs = alg.bracket_basis(y, x) * Rational(both_odd ? 1 : -1);
            ++rep.checked;
            if (!(lhs == rhs))
                rep.fail("[" + gen_str(x) + "," + gen_str(y) + "] = " + lhs.str() +
                         " vs " + rhs.str());
        }
    return rep;
}

CheckReport super_jacobi_check(const AlgebraPreset& alg, long window)
{
    CheckReport rep;
    auto basis = alg.basis_window(window);
    for (const auto& x : basis)
        for (const auto& y : basis) {
            const bool xy_odd = alg.parity(x.fam) == Parity::Odd &&
                                alg.parity(y.fam) == Parity::Odd;
            const Rational sign(xy_odd ? -1 : 1);
            for (const auto& z : basis) {
                SuperVector lhs =
                    bracket(SuperVector::unit(x), alg.bracket_basis(y, z), alg);
                SuperVector rhs =
                    bracket(alg.bracket_basis(x, y), SuperVector::unit(z), alg);
                rhs += bracket(SuperVector::unit(y), alg.bracket_basis(x, z), alg) * sign;
                ++rep.checked;
                if (!(lhs == rhs))
                    rep.fail("jacobi(" + gen_str(x) + "," + gen_str(y) + "," +
                             gen_str(z) + "): " + lhs.str() + " vs " + rhs.str());
            }
        }
    return rep;
}

namespace {

using ExtVector = std::map<GenIndex, QuadExt>;

void ext_add(ExtVector& v, const GenIndex& g, const QuadExt& c)
{
    if (c.is_zero())
        return;
    auto [it, fresh] = v.emplace(g, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            v.erase(it);
    }
}

std::string ext_str(const ExtVector& v)
{
    if (v.empty())
        return "0";
    std::string s;
    for (const auto& [g, c] : v)
        s += (s.empty() ? "" : " + ") + quad_str(c) + "*" + gen_str(g);
    return s;
}

// phi on a single Sbar12 generator: doubled image mode, scaled coefficient.
std::pair<GenIndex, QuadExt> phi_gen(const GenIndex& g)
{
    GenIndex img{g.fam, 2 * g.mode2};
    switch (g.fam) {
        case Family::L: return {img, QuadExt(rat(1, 2))};
        case Family::W: return {img, QuadExt(1)};
        case Family::G: return {img, QuadExt::inv_sqrt2()};
        default: throw std::logic_error("phi: unexpected family");
    }
}

ExtVector phi_apply(const SuperVector& v)
{
    ExtVector out;
    for (const auto& [g, c] : v.terms) {
        auto [img, scale] = phi_gen(g);
        ext_add(out, img, scale * QuadExt(c));
    }
    return out;
}

}  // namespace

CheckReport phi_embedding_check(long window)
{
    CheckReport rep;
    const auto& src = AlgebraPreset::by_name("Sbar12");
    const auto& dst = AlgebraPreset::by_name("Sbar0");
    auto basis = src.basis_window(window);

    // injectivity on the basis: distinct images
    std::map<GenIndex, GenIndex> seen;
    for (const auto& g : basis) {
        GenIndex img = phi_gen(g).first;
        auto [it, fresh] = seen.emplace(img, g);
        if (!fresh)
            rep.fail("phi collision: " + gen_str(g) + " and " + gen_str(it->second));
    }

    for (const auto& x : basis)
        for (const auto& y : basis) {
            ExtVector lhs = phi_apply(src.bracket_basis(x, y));
            auto [ix, cx] = phi_gen(x);
            auto [iy, cy] = phi_gen(y);
            ExtVector rhs;
            for (const auto& [g, c] : dst.bracket_basis(ix, iy).terms)
                ext_add(rhs, g, cx * cy * QuadExt(c));
            ++rep.checked;
            if (lhs != rhs)
                rep.fail("phi[" + gen_str(x) + "," + gen_str(y) + "]: " + ext_str(lhs) +
                         " vs " + ext_str(rhs));
        }
    return rep;
}

}  // namespace salg
