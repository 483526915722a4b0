#include "crosscheck.hpp"

#include "isharp/isharp.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace isharp;
using nlohmann::json;

namespace {

enum Exit { OK = 0, USAGE = 1, PRECONDITION = 2, MISMATCH = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct KnotArgs {
    std::string knot;
    std::string spec;
};

void add_knot_args(CLI::App* sub, KnotArgs& a)
{
    auto* k = sub->add_option("--knot", a.knot, "catalog knot name");
    auto* s = sub->add_option("--spec", a.spec, "knot spec JSON file");
    k->excludes(s);
}

KnotComplex load_knot(const KnotArgs& a)
{
    if (!a.spec.empty()) {
        auto k = parse_knot_spec(read_file(a.spec));
        if (k.name.empty())
            k.name = a.spec;
        return k;
    }
    if (a.knot.empty())
        throw UsageError("one of --knot or --spec is required");
    return catalog_knot(a.knot);
}

std::pair<long, long> parse_slope(const std::string& text)
{
    auto bad = [&] { return UsageError("slope '" + text + "' is not of the form p/q"); };
    auto num = [&](const std::string& s) {
        size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(s, &pos);
        } catch (const std::exception&) {
            throw bad();
        }
        if (pos != s.size())
            throw bad();
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return {num(text), 1};
    long p = num(text.substr(0, slash));
    long q = num(text.substr(slash + 1));
    if (q == 0)
        throw bad();
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

SeifertPair parse_pair(const std::string& text)
{
    auto [r, v] = parse_slope(text);
    return {r, v};
}

// aligned text table
void print_table(const std::vector<std::string>& head,
                 const std::vector<std::vector<std::string>>& rows)
{
    std::vector<size_t> w(head.size());
    for (size_t c = 0; c < head.size(); ++c) {
        w[c] = head[c].size();
        for (auto& r : rows)
            w[c] = std::max(w[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& r) {
        for (size_t c = 0; c < r.size(); ++c) {
            std::cout << (c ? "  " : "");
            if (c + 1 < r.size())
                std::cout << std::left << std::setw(static_cast<int>(w[c]));
            std::cout << r[c];
        }
        std::cout << "\n";
    };
    line(head);
    for (auto& r : rows)
        line(r);
}

std::string slope_label(const SurgeryResult& r)
{
    return r.p == 0 ? "0" : std::to_string(r.p) + "/" + std::to_string(r.q);
}

void emit_zero(const SurgeryResult& r, bool as_json)
{
    if (as_json) {
        std::cout << to_json(r) << "\n";
        return;
    }
    std::cout << "0-surgery on " << r.knot << (r.mirrored ? " (computed on the mirror)" : "")
              << "\n";
    std::vector<std::vector<std::string>> rows;
    for (auto& e : r.table)
        rows.push_back({std::to_string(e.s), e.dim ? std::to_string(*e.dim)
                                                   : "undetermined (tau = 0)"});
    print_table({"s", "dim"}, rows);
}

void emit_results(const std::vector<SurgeryResult>& rs, bool as_json)
{
    if (as_json) {
        std::cout << to_json(rs) << "\n";
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (auto& r : rs)
        rows.push_back({r.knot, slope_label(r),
                        r.dimension ? std::to_string(*r.dimension) : r.p == 0 ? "table" : "-",
                        to_string(r.pathway)});
    print_table({"knot", "slope", "dim", "pathway"}, rows);
    for (auto& r : rs)
        if (r.p == 0) {
            std::cout << "\n";
            emit_zero(r, false);
        }
}

SutureDimProfile load_profile(const std::string& file, std::optional<int> tau,
                              std::optional<long> base, std::optional<long> gamma0)
{
    if (!file.empty())
        return parse_companion_profile(read_file(file));
    SutureDimProfile p;
    p.tau = tau.value_or(0);
    p.base_dim = base.value_or(0);
    p.gamma0 = gamma0;
    return p;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dimensions of framed instanton homology of Dehn surgeries"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON");

    // surgery
    auto* surgery = app.add_subcommand("surgery", "dimension of p/q surgery on a knot");
    KnotArgs surgery_knot;
    std::vector<std::string> slopes;
    std::string pathway = "auto";
    int window = 0;
    add_knot_args(surgery, surgery_knot);
    surgery->add_option("--slope", slopes, "slope p/q (repeatable); 0 gives the 0-surgery table")
        ->required();
    surgery->add_option("--pathway", pathway, "auto | cone | large-surgery | closed-form")
        ->check(CLI::IsMember({"auto", "cone", "large-surgery", "closed-form"}));
    surgery->add_option("--window", window, "extra truncation window for the cone");
    surgery->add_flag("--json", as_json, "emit JSON");

    auto* zero = app.add_subcommand("zero-surgery", "per-grading 0-surgery dimensions");
    KnotArgs zero_knot;
    add_knot_args(zero, zero_knot);
    zero->add_flag("--json", as_json, "emit JSON");

    auto* scan = app.add_subcommand("scan", "L-space / almost L-space scan");
    KnotArgs scan_knot;
    add_knot_args(scan, scan_knot);
    scan->add_flag("--json", as_json, "emit JSON");

    auto* cb = app.add_subcommand("circle-bundle", "circle bundle over a genus-g surface");
    int cb_genus = 0;
    long cb_euler = 0;
    std::string cb_method = "module";
    cb->add_option("--genus", cb_genus, "base genus g")->required();
    cb->add_option("--euler", cb_euler, "Euler number m")->required();
    cb->add_option("--method", cb_method, "module | closed-form | cone | all")
        ->check(CLI::IsMember({"module", "closed-form", "cone", "all"}));
    cb->add_flag("--json", as_json, "emit JSON");

    auto* sf = app.add_subcommand("seifert", "Seifert fibred space with nonzero orbifold degree");
    int sf_genus = 0;
    long sf_euler = 0;
    std::vector<std::string> sf_pairs;
    sf->add_option("--genus", sf_genus, "base genus g")->required();
    sf->add_option("--euler", sf_euler, "integer part m")->required();
    sf->add_option("--pair", sf_pairs, "singular fibre r/v (repeatable)");
    sf->add_flag("--json", as_json, "emit JSON");

    auto* wh = app.add_subcommand("whitehead", "+-1 surgeries on a twisted Whitehead double");
    long wh_t = 0;
    std::string wh_file;
    std::optional<int> wh_tau;
    std::optional<long> wh_base;
    bool wh_negative = false;
    wh->add_option("--twist", wh_t, "number of twists t")->required();
    wh->add_option("--companion", wh_file, "companion profile JSON file");
    wh->add_option("--companion-tau", wh_tau, "companion tau");
    wh->add_option("--companion-base", wh_base, "companion base dimension");
    wh->add_flag("--negative", wh_negative, "negatively clasped double");
    wh->add_flag("--json", as_json, "emit JSON");

    auto* sp = app.add_subcommand("splice", "splice of a twist-knot complement with a companion");
    long sp_n = 0;
    std::string sp_file;
    std::optional<int> sp_tau;
    std::optional<long> sp_base, sp_gamma0;
    sp->add_option("--n", sp_n, "twist parameter n")->required();
    sp->add_option("--companion", sp_file, "companion profile JSON file");
    sp->add_option("--companion-tau", sp_tau, "companion tau");
    sp->add_option("--companion-base", sp_base, "companion base dimension");
    sp->add_option("--gamma0", sp_gamma0, "companion dim at suture 0");
    sp->add_flag("--json", as_json, "emit JSON");

    auto* cl = app.add_subcommand("classify", "genus-one nearly fibred classification");
    KnotArgs cl_knot;
    std::optional<long> cl_dim;
    std::vector<long> cl_alex;
    add_knot_args(cl, cl_knot);
    cl->add_option("--dim", cl_dim, "total dimension of the knot homology");
    cl->add_option("--alexander", cl_alex, "coefficients from t^g down to t^-g")->delimiter(',');
    cl->add_flag("--json", as_json, "emit JSON");

    auto* cat = app.add_subcommand("catalog", "list catalog knots");
    cat->add_flag("--json", as_json, "emit JSON");

    auto* cc = app.add_subcommand("crosscheck", "compare every pathway");
    KnotArgs cc_knot;
    bool cc_all = false;
    add_knot_args(cc, cc_knot);
    cc->add_flag("--all", cc_all, "catalog, circle bundles, Seifert gate and doubles");
    cc->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? OK : USAGE;
    }

    try {
        if (*surgery) {
            auto k = load_knot(surgery_knot);
            std::vector<std::pair<long, long>> ps;
            for (auto& s : slopes)
                ps.push_back(parse_slope(s));
            std::sort(ps.begin(), ps.end(), [](auto a, auto b) {
                return a.first * b.second < b.first * a.second;
            });
            std::vector<SurgeryResult> rs;
            for (auto [p, q] : ps) {
                if (p == 0) {
                    rs.push_back(zero_surgery_dims(k));
                    continue;
                }
                SurgeryOptions opt;
                opt.extra_window = window;
                if (pathway == "auto") {
                    rs.push_back(surgery_dim(k, p, q, opt));
                } else if (pathway == "cone") {
                    opt.allow_shortcut = false;
                    rs.push_back(surgery_dim(k, p, q, opt));
                } else if (pathway == "large-surgery") {
                    if (q != 1)
                        throw PreconditionError("large-surgery pathway needs an integral slope");
                    require_valid(k);
                    rs.push_back({p, q, large_surgery_dim(k, p), Pathway::LargeSurgery, k.name,
                                  {}, false});
                } else {
                    require_valid(k);
                    if (!k.alexander || k.source != "thin")
                        throw PreconditionError("closed-form pathway needs a thin model");
                    rs.push_back({p, q, thin_surgery_formula(k.alexander->norm(), k.tau, p, q),
                                  Pathway::ClosedForm, k.name, {}, false});
                }
            }
            if (rs.size() == 1 && rs[0].p == 0)
                emit_zero(rs[0], as_json);
            else
                emit_results(rs, as_json);
        } else if (*zero) {
            emit_zero(zero_surgery_dims(load_knot(zero_knot)), as_json);
        } else if (*scan) {
            auto k = load_knot(scan_knot);
            auto r = almost_lspace_scan(k);
            if (as_json) {
                std::cout << json{{"knot", k.name},
                                  {"verdict", to_string(r.verdict)},
                                  {"witness", r.witness},
                                  {"dims", r.dims}}
                                 .dump(2)
                          << "\n";
            } else if (r.verdict == Verdict::LSpace) {
                std::cout << "L-space, witness n=" << r.witness << "\n";
            } else if (r.verdict == Verdict::Almost) {
                std::cout << "almost L-space, witness n=" << r.witness << "\n";
            } else {
                std::cout << "neither\n";
            }
        } else if (*cb) {
            std::map<std::string, long> v;
            if (cb_method == "module" || cb_method == "all")
                v["module"] = circle_bundle_dim_module(cb_genus, cb_euler);
            if (cb_method == "closed-form" || cb_method == "all")
                v["closed-form"] = circle_bundle_dim_formula(cb_genus, cb_euler);
            if (cb_method == "cone" || cb_method == "all")
                v["cone"] = circle_bundle_dim_cone(cb_genus, cb_euler);
            bool agree = std::all_of(v.begin(), v.end(),
                                     [&](auto& kv) { return kv.second == v.begin()->second; });
            if (as_json) {
                std::cout << json{{"genus", cb_genus}, {"euler", cb_euler}, {"dims", v}}.dump(2)
                          << "\n";
            } else if (v.size() == 1) {
                std::cout << v.begin()->second << "\n";
            } else {
                for (auto& [name, d] : v)
                    std::cout << name << ": " << d << "\n";
            }
            if (!agree)
                return MISMATCH;
        } else if (*sf) {
            std::vector<SeifertPair> pairs;
            for (auto& s : sf_pairs)
                pairs.push_back(parse_pair(s));
            long d = seifert_dim(sf_genus, sf_euler, pairs);
            if (as_json)
                std::cout << json{{"genus", sf_genus}, {"euler", sf_euler}, {"dim", d},
                                  {"pathway", "cone"}, {"experimental", true}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << d << "\n";
        } else if (*wh) {
            auto prof = load_profile(wh_file, wh_tau, wh_base, std::nullopt);
            WhDoubleSpec spec{wh_t, prof};
            auto r = wh_negative ? whitehead_double_negative_pm1(spec) : whitehead_double_pm1(spec);
            if (as_json)
                std::cout << json{{"twist", wh_t}, {"plus_one", r.plus_one},
                                  {"minus_one", r.minus_one},
                                  {"top_grading_dim", r.top_grading_dim}, {"tau", r.tau}}
                                 .dump(2)
                          << "\n";
            else
                print_table({"quantity", "value"}, {{"+1", std::to_string(r.plus_one)},
                                               {"-1", std::to_string(r.minus_one)},
                                               {"top", std::to_string(r.top_grading_dim)},
                                               {"tau", std::to_string(r.tau)}});
        } else if (*sp) {
            auto prof = load_profile(sp_file, sp_tau, sp_base, sp_gamma0);
            long d = splice_dim(sp_n, prof);
            if (as_json)
                std::cout << json{{"n", sp_n}, {"dim", d}}.dump(2) << "\n";
            else
                std::cout << d << "\n";
        } else if (*cl) {
            long dim = 0;
            Laurent delta;
            if (!cl_knot.knot.empty() || !cl_knot.spec.empty()) {
                auto k = load_knot(cl_knot);
                dim = static_cast<long>(k.dim());
                if (!k.alexander)
                    throw PreconditionError("knot model carries no Alexander polynomial");
                delta = *k.alexander;
            } else {
                if (!cl_dim || cl_alex.empty())
                    throw UsageError("classify needs --knot/--spec or both --dim and --alexander");
                if (cl_alex.size() % 2 == 0)
                    throw UsageError("--alexander needs an odd number of coefficients");
                dim = *cl_dim;
                delta = Laurent::symmetric(cl_alex);
                if (!delta.is_symmetric())
                    throw UsageError("--alexander: coefficients are not symmetric");
            }
            auto names = nearly_fibered_classify(dim, delta);
            if (as_json) {
                std::cout << json{{"dim", dim}, {"alexander", delta.str()}, {"candidates", names}}
                                 .dump(2)
                          << "\n";
            } else {
                for (auto& n : names)
                    std::cout << n << "\n";
            }
        } else if (*cat) {
            if (as_json) {
                json a = json::array();
                for (auto& e : catalog())
                    a.push_back({{"name", e.name}, {"aliases", e.aliases},
                                 {"alexander", e.alexander.str()}, {"tau", e.tau},
                                 {"genus", e.alexander.max_degree()},
                                 {"dim", e.alexander.norm()}});
                std::cout << a.dump(2) << "\n";
            } else {
                std::vector<std::vector<std::string>> rows;
                for (auto& e : catalog())
                    rows.push_back({e.name, e.alexander.str(), std::to_string(e.tau),
                                    std::to_string(e.alexander.max_degree()),
                                    std::to_string(e.alexander.norm())});
                print_table({"name", "alexander", "tau", "genus", "dim"}, rows);
            }
        } else if (*cc) {
            std::vector<tool::CheckRow> rows;
            if (cc_all) {
                rows = tool::crosscheck_all();
            } else {
                auto k = load_knot(cc_knot);
                rows = tool::crosscheck_knot(k.name, k);
            }
            bool ok = std::all_of(rows.begin(), rows.end(), [](auto& r) { return r.agree; });
            if (as_json) {
                json a = json::array();
                for (auto& r : rows)
                    a.push_back({{"check", r.check}, {"subject", r.subject},
                                 {"values", r.values}, {"agree", r.agree}});
                std::cout << json{{"ok", ok}, {"rows", a}}.dump(2) << "\n";
            } else {
                std::vector<std::vector<std::string>> t;
                for (auto& r : rows) {
                    std::string vals;
                    for (auto& [k, v] : r.values)
                        vals += (vals.empty() ? "" : "  ") + k + "=" + std::to_string(v);
                    t.push_back({r.check, r.subject, vals, r.agree ? "ok" : "MISMATCH"});
                }
                print_table({"check", "subject", "values", "status"}, t);
                std::cout << rows.size() << " checks, "
                          << std::count_if(rows.begin(), rows.end(),
                                           [](auto& r) { return !r.agree; })
                          << " mismatches\n";
            }
            return ok ? OK : MISMATCH;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return USAGE;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return USAGE;
    } catch (const LookupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return USAGE;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return PRECONDITION;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return PRECONDITION;
    }
    return OK;
}
