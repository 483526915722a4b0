#include "isharp/spec_io.hpp"

#include <json.hpp>

namespace isharp {

using nlohmann::json;

namespace {

json parse_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

template <typename T>
T field(const json& j, const std::string& key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(where + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ParseError(where + ": field '" + key + "' has the wrong type");
    }
}

Laurent parse_alexander(const json& arr)
{
    if (!arr.is_array())
        throw ParseError("alexander: expected a list of [coef, power] pairs");
    Laurent p;
    for (size_t k = 0; k < arr.size(); ++k) {
        const auto& t = arr[k];
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() ||
            !t[1].is_number_integer())
            throw ParseError("alexander[" + std::to_string(k) +
                             "]: expected [coef, power] with integer entries");
        p.add(t[1].get<int>(), t[0].get<long>());
    }
    for (auto& [e, c] : p.terms())
        if (p.coef(-e) != c)
            throw ParseError("alexander: not symmetric: coefficient of t^" + std::to_string(e) +
                             " is " + std::to_string(c) + " but coefficient of t^" +
                             std::to_string(-e) + " is " + std::to_string(p.coef(-e)));
    return p;
}

void parse_arrows(const json& j, const std::string& key, SparseExactMap& d)
{
    if (!j.contains(key))
        return;
    const auto& arr = j.at(key);
    if (!arr.is_array())
        throw ParseError(key + ": expected a list");
    for (size_t k = 0; k < arr.size(); ++k) {
        const auto& a = arr[k];
        std::string where = key + "[" + std::to_string(k) + "]";
        if (!a.is_array() || a.size() != 4 || !a[0].is_string() || !a[1].is_string() ||
            !a[2].is_number_integer() || !a[3].is_number_integer())
            throw ParseError(where + ": expected [src, tgt, num, den]");
        long den = a[3].get<long>();
        if (den == 0)
            throw ParseError(where + ": zero denominator");
        try {
            d.add(a[1].get<std::string>(), a[0].get<std::string>(),
                  make_scalar(a[2].get<long>(), den));
        } catch (const StructuralError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
}

json result_json(const SurgeryResult& r)
{
    json j;
    j["knot"] = r.knot;
    j["slope"] = r.p == 0 ? std::string("0") : std::to_string(r.p) + "/" + std::to_string(r.q);
    j["p"] = r.p;
    j["q"] = r.q;
    j["dimension"] = r.dimension ? json(*r.dimension) : json(nullptr);
    j["pathway"] = to_string(r.pathway);
    j["mirrored"] = r.mirrored;
    json t = json::array();
    for (auto& e : r.table)
        t.push_back({{"s", e.s}, {"dim", e.dim ? json(*e.dim) : json(nullptr)}});
    j["table"] = t;
    return j;
}

SurgeryResult result_from(const json& j)
{
    SurgeryResult r;
    r.knot = field<std::string>(j, "knot", "result");
    r.p = field<long>(j, "p", "result");
    r.q = field<long>(j, "q", "result");
    if (j.contains("dimension") && !j["dimension"].is_null())
        r.dimension = field<long>(j, "dimension", "result");
    try {
        r.pathway = pathway_from_string(field<std::string>(j, "pathway", "result"));
    } catch (const StructuralError& e) {
        throw ParseError(std::string("result: ") + e.what());
    }
    r.mirrored = j.value("mirrored", false);
    if (j.contains("table"))
        for (auto& e : j["table"]) {
            GradingEntry g;
            g.s = field<int>(e, "s", "table entry");
            if (e.contains("dim") && !e["dim"].is_null())
                g.dim = field<long>(e, "dim", "table entry");
            r.table.push_back(g);
        }
    return r;
}

}  // namespace

KnotComplex parse_knot_spec(const std::string& text)
{
    json j = parse_text(text);
    if (!j.is_object())
        throw ParseError("knot spec must be a JSON object");
    std::string name = j.value("name", std::string());

    if (j.contains("alexander") && !j.contains("generators")) {
        Laurent delta = parse_alexander(j["alexander"]);
        int tau = field<int>(j, "tau", "knot spec");
        try {
            return thin_from_alexander(delta, tau, name);
        } catch (const PreconditionError& e) {
            throw ParseError(std::string("knot spec: ") + e.what());
        }
    }
    if (!j.contains("generators"))
        throw ParseError("knot spec: needs either 'alexander' or 'generators'");

    auto space = std::make_shared<GradedSpace>();
    const auto& gens = j["generators"];
    if (!gens.is_array())
        throw ParseError("generators: expected a list");
    for (size_t k = 0; k < gens.size(); ++k) {
        std::string where = "generators[" + std::to_string(k) + "]";
        Generator g;
        g.id = field<std::string>(gens[k], "id", where);
        g.alex2 = 2 * field<int>(gens[k], "alex", where);
        g.z2 = field<int>(gens[k], "z2", where);
        try {
            space->add(g);
        } catch (const StructuralError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    KnotComplex k;
    k.space = space;
    k.d_plus = SparseExactMap(space, space);
    k.d_minus = SparseExactMap(space, space);
    parse_arrows(j, "d_plus", k.d_plus);
    parse_arrows(j, "d_minus", k.d_minus);
    k.genus = field<int>(j, "genus", "knot spec");
    k.tau = field<int>(j, "tau", "knot spec");
    k.name = name;
    k.source = "explicit";
    if (j.contains("alexander"))
        k.alexander = parse_alexander(j["alexander"]);
    return k;
}

std::string knot_spec_to_json(const KnotComplex& k)
{
    json j;
    j["name"] = k.name;
    json gens = json::array();
    for (auto& g : k.space->generators())
        gens.push_back({{"id", g.id}, {"alex", g.alex2 / 2}, {"z2", g.z2}});
    j["generators"] = gens;
    auto arrows = [](const SparseExactMap& d) {
        json a = json::array();
        for (auto& [tgt, src, x] : d.entries())
            a.push_back({src, tgt, x.get_num().get_si(), x.get_den().get_si()});
        return a;
    };
    j["d_plus"] = arrows(k.d_plus);
    j["d_minus"] = arrows(k.d_minus);
    j["genus"] = k.genus;
    j["tau"] = k.tau;
    if (k.alexander) {
        json a = json::array();
        for (auto& [e, c] : k.alexander->terms())
            a.push_back({c, e});
        j["alexander"] = a;
    }
    return j.dump(2);
}

SutureDimProfile parse_companion_profile(const std::string& text)
{
    json j = parse_text(text);
    SutureDimProfile p;
    p.tau = field<int>(j, "tau", "companion profile");
    p.base_dim = field<long>(j, "base_dim", "companion profile");
    if (p.base_dim < 0)
        throw ParseError("companion profile: field 'base_dim' must be nonnegative");
    if (j.contains("gamma0") && !j["gamma0"].is_null())
        p.gamma0 = field<long>(j, "gamma0", "companion profile");
    return p;
}

std::string to_json(const SurgeryResult& r)
{
    return result_json(r).dump(2);
}

std::string to_json(const std::vector<SurgeryResult>& rs)
{
    json a = json::array();
    for (auto& r : rs)
        a.push_back(result_json(r));
    return a.dump(2);
}

SurgeryResult surgery_result_from_json(const std::string& text)
{
    return result_from(parse_text(text));
}

std::vector<SurgeryResult> surgery_results_from_json(const std::string& text)
{
    json a = parse_text(text);
    if (!a.is_array())
        throw ParseError("expected a list of results");
    std::vector<SurgeryResult> out;
    for (auto& j : a)
        out.push_back(result_from(j));
    return out;
}

}  // namespace isharp
