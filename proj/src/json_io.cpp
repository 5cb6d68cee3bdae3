#include "salg/json_io.hpp"

#include <sstream>

namespace salg {

json mode2_to_json(long mode2)
{
    if (mode2 % 2 == 0)
        return json(mode2 / 2);
    return json(std::to_string(mode2) + "/2");
}

long mode2_from_json(const json& j)
{
    if (j.is_number_integer())
        return 2 * j.get<long>();
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        auto slash = s.find('/');
        if (slash == std::string::npos || s.substr(slash + 1) != "2")
            throw std::invalid_argument("bad mode: " + s);
        return std::stol(s.substr(0, slash));
    }
    throw std::invalid_argument("bad mode value");
}

GenIndex gen_from_arg(const std::string& s)
{
    auto colon = s.find(':');
    if (colon == std::string::npos)
        return gen_parse(s);  // "C1", "C2"
    std::string fam = s.substr(0, colon);
    std::string mode = s.substr(colon + 1);
    auto slash = mode.find('/');
    long mode2;
    if (slash == std::string::npos) {
        mode2 = 2 * std::stol(mode);
    } else {
        if (mode.substr(slash + 1) != "2")
            throw std::invalid_argument("bad mode: " + mode);
        mode2 = std::stol(mode.substr(0, slash));
    }
    return gen_parse(fam + (mode2 % 2 == 0 ? std::to_string(mode2 / 2)
                                           : std::to_string(mode2) + "/2"));
}

json sv_to_json(const SuperVector& v)
{
    json out = json::array();
    for (const auto& [g, c] : v.terms)
        out.push_back({{"gen", family_name(g.fam)},
                       {"mode", mode2_to_json(g.mode2)},
                       {"coeff", rat_str(c)}});
    return out;
}

json report_to_json(const CheckReport& rep)
{
    return {{"pass", rep.pass}, {"checked", rep.checked}, {"witnesses", rep.witnesses}};
}

json ind_to_json(const InducedVector& v)
{
    json out = json::array();
    for (const auto& [term, c] : v)
        out.push_back({{"monomial", term.first.str()},
                       {"key", term.second},
                       {"coeff", rat_str(c)}});
    return out;
}

json finite_module_to_json(const FiniteModule& V)
{
    json actions = json::object();
    for (const auto& [g, m] : V.actions()) {
        json rows = json::array();
        for (const auto& row : m) {
            json r = json::array();
            for (const auto& c : row)
                r.push_back(rat_str(c));
            rows.push_back(r);
        }
        actions[gen_str(g)] = rows;
    }
    json parities = json::array();
    for (long i = 0; i < V.dim(); ++i)
        parities.push_back(V.key_parity({(int)i}) ? "odd" : "even");
    return {{"dim", V.dim()},     {"d", V.d()},
            {"t", V.t()},         {"parities", parities},
            {"c1", rat_str(V.c1())}, {"c2", rat_str(V.c2())},
            {"actions", actions}};
}

std::shared_ptr<FiniteModule> finite_module_from_json(const json& j)
{
    long dim = j.at("dim").get<long>();
    int d = j.value("d", 0);
    int t = j.value("t", 0);
    auto V = std::make_shared<FiniteModule>(d, t, dim);
    V->set_central(rat_parse(j.at("c1").get<std::string>()),
                   rat_parse(j.at("c2").get<std::string>()));
    if (j.contains("parities")) {
        const json& ps = j.at("parities");
        if ((long)ps.size() != dim)
            throw std::invalid_argument("parities length mismatch");
        for (long i = 0; i < dim; ++i)
            V->set_parity(i, ps[i].get<std::string>() == "odd" ? 1 : 0);
    }
    for (const auto& [name, rows] : j.at("actions").items()) {
        FiniteModule::Matrix m;
        for (const auto& row : rows) {
            std::vector<Rational> r;
            for (const auto& c : row)
                r.push_back(rat_parse(c.get<std::string>()));
            m.push_back(std::move(r));
        }
        V->set_action(gen_parse(name), std::move(m));
    }
    return V;
}

namespace {

void render(const json& j, const std::string& prefix, std::ostringstream& os)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_structured() && !v.empty()) {
                os << prefix << k << ":\n";
                render(v, prefix + "  ", os);
            } else {
                os << prefix << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        bool scalars = true;
        for (const auto& v : j)
            if (v.is_structured())
                scalars = false;
        if (scalars) {
            os << prefix;
            for (size_t i = 0; i < j.size(); ++i)
                os << (i ? " " : "")
                   << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
            os << "\n";
        } else {
            for (const auto& v : j) {
                os << prefix << "-\n";
                render(v, prefix + "  ", os);
            }
        }
    } else {
        os << prefix << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

std::string json_to_text(const json& j)
{
    std::ostringstream os;
    render(j, "", os);
    return os.str();
}

}  // namespace salg
