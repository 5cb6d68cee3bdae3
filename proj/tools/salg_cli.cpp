#include "CLI11.hpp"

#include "salg/cohomology.hpp"
#include "salg/conformal.hpp"
#include "salg/json_io.hpp"
#include "salg/whittaker.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace salg;

namespace {

struct Global {
    unsigned long seed = 20250825;
    long window = 6;
    long weight_bound = 8;
    std::string format = "json";
};

int emit(const json& out, const Global& g, int status = 0)
{
    if (g.format == "text")
        std::cout << json_to_text(out);
    else
        std::cout << out.dump(2) << "\n";
    return status;
}

long parse_half(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return 2 * std::stol(s);
    if (s.substr(slash + 1) != "2")
        throw std::invalid_argument("bad half-integer: " + s);
    return std::stol(s.substr(0, slash));
}

AnnGen ann_from_arg(const std::string& s)
{
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("annihilation generator must look like L:3");
    std::string fam = s.substr(0, colon);
    long n = std::stol(s.substr(colon + 1));
    if (n < 0)
        throw std::invalid_argument("annihilation index must be nonnegative");
    if (fam == "L")
        return {CGen::L, n};
    if (fam == "W")
        return {CGen::W, n};
    if (fam == "G")
        return {CGen::G, n};
    throw std::invalid_argument("unknown family: " + fam);
}

json conditions_to_json(const ConditionReport& c)
{
    return {{"a", c.a},
            {"b", c.b},
            {"g_part", c.g_part},
            {"certified", c.certified()},
            {"detail", report_to_json(c.detail)}};
}

// Shared --module flags for the representation verbs.
struct ModuleFlags {
    std::string kind = "whittaker";
    std::string h1 = "2", h2 = "3", c1 = "0";
    int k = 1;
    std::vector<std::string> psi;
    std::string wc1 = "0", wc2 = "0";
    int key_degree = 2;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--module", kind, "verma or whittaker")
            ->check(CLI::IsMember({"verma", "whittaker"}));
        cmd->add_option("--h1", h1, "Verma L_0 eigenvalue");
        cmd->add_option("--h2", h2, "Verma W_0 eigenvalue");
        cmd->add_option("--c1", c1, "Verma central charge");
        cmd->add_option("--k", k, "Whittaker level k");
        cmd->add_option("--psi", psi, "Whittaker value, e.g. W:1=1 (repeatable)");
        cmd->add_option("--whittaker-c1", wc1, "Whittaker C1 scalar");
        cmd->add_option("--whittaker-c2", wc2, "Whittaker C2 scalar");
        cmd->add_option("--key-degree", key_degree, "coefficient key letter cap");
    }

    WhittakerData whittaker_data() const
    {
        WhittakerData data;
        data.k = k;
        data.c1 = rat_parse(wc1);
        data.c2 = rat_parse(wc2);
        if (psi.empty()) {
            data.psi[{Family::W, 2L * (2 * k - 1)}] = 1;
        } else {
            for (const auto& entry : psi) {
                auto eq = entry.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("--psi needs GEN=VALUE");
                data.psi[gen_from_arg(entry.substr(0, eq))] =
                    rat_parse(entry.substr(eq + 1));
            }
        }
        return data;
    }

    InducedBuild build(const Global& g) const
    {
        if (kind == "verma")
            return build_induced(verma_line(rat_parse(h1), rat_parse(h2), rat_parse(c1)),
                                 g.weight_bound, 0, 0, (int)g.window);
        return build_induced(std::make_shared<WhittakerCoeffModule>(whittaker_data()),
                             g.weight_bound, g.weight_bound, key_degree, (int)g.window);
    }

    CoeffKey vacuum_key() const
    {
        return kind == "verma" ? CoeffKey{0} : CoeffKey(3 * k + 1, 0);
    }
};

json dims_json(const InducedModule& M, long cap, int key_degree)
{
    json dims = json::array();
    for (long w2 = 0; w2 <= cap; ++w2)
        dims.push_back(M.basis_at_weight2(w2, key_degree).size());
    return dims;
}

int run(int argc, char** argv)
{
    CLI::App app{"exact structure constants, cohomology and modules for the "
                 "super extended conformal current family"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--seed", g.seed, "PRNG seed for sampled probes");
    app.add_option("--window", g.window, "mode window for identity checks");
    app.add_option("--weight-bound", g.weight_bound, "doubled weight truncation");
    app.add_option("--format", g.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    // bracket
    auto* bracket_cmd = app.add_subcommand("bracket", "bracket of two basis generators");
    std::string alg_name = "S", xs, ys;
    bracket_cmd->add_option("--alg", alg_name, "algebra preset");
    bracket_cmd->add_option("--x", xs, "first generator, e.g. L:2")->required();
    bracket_cmd->add_option("--y", ys, "second generator")->required();

    // jacobi-check
    auto* jacobi_cmd =
        app.add_subcommand("jacobi-check", "super skew-symmetry and Jacobi suite");
    std::string jalg = "S";
    jacobi_cmd->add_option("--alg", jalg, "algebra preset, or 'all'");

    // annihilation
    auto* ann_cmd = app.add_subcommand(
        "annihilation", "annihilation-superalgebra bracket or relabeling check");
    std::string ann_x, ann_y, ann_alg = "S";
    ann_cmd->add_option("--x", ann_x, "generator a_(n), e.g. L:3");
    ann_cmd->add_option("--y", ann_y, "generator b_(n)");
    ann_cmd->add_option("--alg", ann_alg, "S or SVir");

    // phi-check
    app.add_subcommand("phi-check", "integer-to-half-integer embedding identity");

    // h2
    auto* h2_cmd = app.add_subcommand("h2", "windowed second-cohomology solve");
    std::string eps = "0";
    h2_cmd->add_option("--epsilon", eps, "0 or 1/2")->check(CLI::IsMember({"0", "1/2"}));

    // verma
    auto* verma_cmd = app.add_subcommand("verma", "Verma module level data");
    std::string vh1 = "0", vh2 = "0", vc1 = "0";
    long max_level = 2;
    bool dims_only = false;
    verma_cmd->add_option("--h1", vh1);
    verma_cmd->add_option("--h2", vh2);
    verma_cmd->add_option("--c1", vc1);
    verma_cmd->add_option("--max-level", max_level, "top level (integer)");
    verma_cmd->add_flag("--dims", dims_only, "print the dimension list only");

    // singular
    auto* sing_cmd = app.add_subcommand("singular", "singular vectors at one level");
    std::string sh1 = "0", sh2 = "0", sc1 = "0", slevel = "1/2";
    sing_cmd->add_option("--h1", sh1);
    sing_cmd->add_option("--h2", sh2);
    sing_cmd->add_option("--c1", sc1);
    sing_cmd->add_option("--level", slevel, "level, e.g. 1/2");

    // induce
    auto* induce_cmd =
        app.add_subcommand("induce", "induce from a finite coefficient module");
    std::string module_file;
    induce_cmd->add_option("--module-file", module_file, "FiniteModule JSON file")
        ->required();

    // whittaker
    auto* wh_cmd = app.add_subcommand("whittaker", "Whittaker induction data");
    ModuleFlags wh_flags;
    wh_flags.attach(wh_cmd);

    // claim1
    auto* claim_cmd =
        app.add_subcommand("claim1", "degree-reduction sweep or sampled probe");
    ModuleFlags claim_flags;
    claim_flags.attach(claim_cmd);
    std::string letters;
    int samples = 0;
    long weight_cap = 4;
    claim_cmd->add_option("--letters", letters,
                          "comma-separated letters applied to the vacuum");
    claim_cmd->add_option("--samples", samples, "sampled probe instead of one sweep");
    claim_cmd->add_option("--weight-cap", weight_cap, "sampling weight cap (doubled)");

    // top-space
    auto* top_cmd = app.add_subcommand("top-space", "annihilated subspace N_{a,b,c}");
    ModuleFlags top_flags;
    top_flags.attach(top_cmd);
    int ta = -1, tb = -1, tc = -1;
    long top_cap = 4;
    top_cmd->add_option("--a", ta, "W threshold (default t)");
    top_cmd->add_option("--b", tb, "G threshold (default t)");
    top_cmd->add_option("--c", tc, "L threshold (default t+d)");
    top_cmd->add_option("--weight-cap", top_cap, "candidate weight cap (doubled)");

    // restricted-probe
    auto* rest_cmd =
        app.add_subcommand("restricted-probe", "least annihilating windows, sampled");
    ModuleFlags rest_flags;
    rest_flags.attach(rest_cmd);
    int rest_samples = 20, scan_cap = 6;
    long rest_cap = 4;
    rest_cmd->add_option("--samples", rest_samples);
    rest_cmd->add_option("--scan-cap", scan_cap);
    rest_cmd->add_option("--weight-cap", rest_cap, "sampling weight cap (doubled)");

    // derived-series
    auto* der_cmd = app.add_subcommand("derived-series", "solvability of q^(d,t)");
    int qd = 0, qt = 0;
    der_cmd->add_option("--d", qd)->required();
    der_cmd->add_option("--t", qt)->required();

    // let global flags appear after the verb too
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad flags are input errors
    }

    if (bracket_cmd->parsed()) {
        const AlgebraPreset& alg = AlgebraPreset::by_name(alg_name);
        SuperVector r = alg.bracket_basis(gen_from_arg(xs), gen_from_arg(ys));
        return emit({{"result", sv_to_json(r)}}, g);
    }

    if (jacobi_cmd->parsed()) {
        std::vector<std::string> names =
            jalg == "all" ? AlgebraPreset::names() : std::vector<std::string>{jalg};
        json out = json::object();
        bool pass = true;
        for (const auto& name : names) {
            const AlgebraPreset& alg = AlgebraPreset::by_name(name);
            CheckReport skew = super_skew_check(alg, g.window);
            CheckReport jac = super_jacobi_check(alg, g.window);
            pass = pass && skew.pass && jac.pass;
            out[name] = {{"skew", report_to_json(skew)},
                         {"jacobi", report_to_json(jac)}};
        }
        return emit({{"pass", pass}, {"window", g.window}, {"algebras", out}}, g,
                    pass ? 0 : 1);
    }

    if (ann_cmd->parsed()) {
        if (!ann_x.empty() || !ann_y.empty()) {
            if (ann_x.empty() || ann_y.empty())
                throw std::invalid_argument("--x and --y go together");
            ConformalAlgebra ca =
                ann_alg == "SVir" ? ConformalAlgebra::SVir : ConformalAlgebra::S;
            AnnVector r = annihilation_bracket(ann_from_arg(ann_x), ann_from_arg(ann_y), ca);
            json terms = json::array();
            for (const auto& [a, c] : r)
                terms.push_back({{"gen", cgen_name(a.gen)},
                                 {"n", a.n},
                                 {"coeff", rat_str(c)}});
            return emit({{"result", terms}}, g);
        }
        CheckReport rep = relabel_to_sbar0_check(g.window);
        return emit({{"window", g.window}, {"report", report_to_json(rep)}}, g,
                    rep.pass ? 0 : 1);
    }

    if (app.get_subcommand("phi-check")->parsed()) {
        CheckReport rep = phi_embedding_check(g.window);
        return emit({{"window", g.window}, {"report", report_to_json(rep)}}, g,
                    rep.pass ? 0 : 1);
    }

    if (h2_cmd->parsed()) {
        H2Result r = solve_h2(eps == "0" ? 0 : 1, g.window);
        return emit({{"epsilon", eps},
                     {"window", r.window},
                     {"raw_dimension", r.raw_dimension},
                     {"dimension", r.dimension}},
                    g);
    }

    if (verma_cmd->parsed()) {
        InducedModule M(verma_line(rat_parse(vh1), rat_parse(vh2), rat_parse(vc1)),
                        2 * max_level);
        json dims = dims_json(M, 2 * max_level, 0);
        if (dims_only)
            return emit(dims, g);
        return emit({{"max_level", max_level}, {"dims", dims}}, g);
    }

    if (sing_cmd->parsed()) {
        long level2 = parse_half(slevel);
        if (level2 < 0 || level2 > g.weight_bound)
            throw std::invalid_argument("level outside the weight bound");
        InducedModule M(verma_line(rat_parse(sh1), rat_parse(sh2), rat_parse(sc1)),
                        g.weight_bound);
        auto sing = find_singular_vectors(M, level2, (int)g.window, 0);
        json vecs = json::array();
        for (const auto& v : sing)
            vecs.push_back(ind_to_json(v));
        return emit({{"level", slevel}, {"count", sing.size()}, {"vectors", vecs}}, g);
    }

    if (induce_cmd->parsed()) {
        std::ifstream in(module_file);
        if (!in)
            throw std::invalid_argument("cannot open " + module_file);
        json desc = json::parse(in);
        auto V = finite_module_from_json(desc);
        CheckReport valid = validate_module(*V);
        if (!valid.pass)
            return emit({{"validation", report_to_json(valid)}}, g, 1);
        InducedBuild b = build_induced(V, g.weight_bound, 0, 0, (int)g.window);
        return emit({{"validation", report_to_json(valid)},
                     {"conditions", conditions_to_json(b.conditions)},
                     {"dims", dims_json(b.M, g.weight_bound, 0)}},
                    g);
    }

    if (wh_cmd->parsed()) {
        WhittakerData data = wh_flags.whittaker_data();
        CheckReport valid = validate_whittaker(data, g.window);
        InducedBuild b =
            build_induced(std::make_shared<WhittakerCoeffModule>(data), g.weight_bound,
                          g.weight_bound, wh_flags.key_degree, (int)g.window);
        return emit({{"k", data.k},
                     {"t", 2 * data.k - 1},
                     {"d", 1},
                     {"validation", report_to_json(valid)},
                     {"conditions", conditions_to_json(b.conditions)},
                     {"dims", dims_json(b.M, g.weight_bound, wh_flags.key_degree)}},
                    g, valid.pass ? 0 : 1);
    }

    if (claim_cmd->parsed()) {
        InducedBuild b = claim_flags.build(g);
        if (samples > 0) {
            CheckReport rep =
                simplicity_probe(b.M, samples, g.seed, weight_cap, claim_flags.key_degree);
            return emit({{"seed", g.seed},
                         {"samples", samples},
                         {"certified", b.conditions.certified()},
                         {"report", report_to_json(rep)}},
                        g, rep.pass ? 0 : 1);
        }
        InducedVector v = b.M.vacuum(claim_flags.vacuum_key());
        std::stringstream ss(letters);
        std::vector<std::string> parts;
        for (std::string part; std::getline(ss, part, ',');)
            parts.push_back(part);
        for (auto it = parts.rbegin(); it != parts.rend(); ++it)
            v = b.M.act(gen_from_arg(*it), v);
        json steps = json::array();
        bool ok = true;
        while (true) {
            auto dv = b.M.deg(v);
            if (!dv || dv->is_zero())
                break;
            Claim1Step step = claim1_reduce(b.M, v);
            ok = ok && step.degree_matches;
            steps.push_back({{"generator", gen_str(step.g)},
                             {"predicted", step.predicted.str()},
                             {"degree_matches", step.degree_matches}});
            if (!step.degree_matches)
                break;
            v = std::move(step.image);
        }
        return emit({{"steps", steps},
                     {"reached_coefficient_part", !v.empty()},
                     {"final", ind_to_json(v)}},
                    g, ok ? 0 : 1);
    }

    if (top_cmd->parsed()) {
        InducedBuild b = top_flags.build(g);
        int a = ta >= 0 ? ta : b.M.t();
        int bb = tb >= 0 ? tb : b.M.t();
        int c = tc >= 0 ? tc : b.M.t() + b.M.d();
        auto N = top_space(b.M, a, bb, c, top_cap, top_flags.key_degree, (int)g.window);
        bool coeff_only = true;
        for (const auto& sol : N)
            for (const auto& [term, coeff] : sol)
                coeff_only = coeff_only && term.first.is_zero();
        return emit({{"a", a},
                     {"b", bb},
                     {"c", c},
                     {"dimension", N.size()},
                     {"coefficient_part_only", coeff_only}},
                    g);
    }

    if (rest_cmd->parsed()) {
        InducedBuild b = rest_flags.build(g);
        std::mt19937_64 rng(g.seed);
        std::vector<std::vector<InducedTerm>> slices;
        for (long w2 = 0; w2 <= rest_cap; ++w2) {
            auto basis = b.M.basis_at_weight2(w2, rest_flags.key_degree);
            if (!basis.empty())
                slices.push_back(std::move(basis));
        }
        json out = json::array();
        for (int s = 0; s < rest_samples; ++s) {
            const auto& slice = slices[rng() % slices.size()];
            InducedVector v;
            int nterms = 1 + (int)(rng() % 3);
            for (int n = 0; n < nterms; ++n) {
                long num = 1 + (long)(rng() % 5);
                ind_add(v, slice[rng() % slice.size()], rng() % 2 ? num : -num);
            }
            if (v.empty())
                continue;
            Restriction r = restrictedness_probe(b.M, v, scan_cap);
            out.push_back({{"r1", r.r1}, {"r2", r.r2}, {"r3", r.r3}});
        }
        return emit({{"seed", g.seed}, {"scan_cap", scan_cap}, {"samples", out}}, g);
    }

    if (der_cmd->parsed()) {
        QuotientAlgebra q(qd, qt);
        auto dims = derived_series(q);
        bool solvable = dims.back() == 0;
        return emit({{"d", qd}, {"t", qt}, {"dims", dims}, {"solvable", solvable}}, g,
                    solvable ? 0 : 1);
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const IndexLatticeViolation& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidWhittakerData& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const WeightBoundExceeded& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const WindowTooSmall& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
