#include "k3iso/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <set>
#include <sstream>

#include "k3iso/certificate_check.hpp"
#include "k3iso/errors.hpp"
#include "k3iso/intfactor.hpp"
#include "k3iso/obstruction.hpp"
#include "k3iso/polyparse.hpp"
#include "k3iso/rootloc.hpp"
#include "k3iso/salem_table.hpp"
#include "k3iso/zfactor.hpp"

namespace k3iso {

using nlohmann::json;

namespace {

std::pair<int, int> parse_signature(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::InvalidQuery, "signature must be R,S");
    try {
        std::size_t a = 0, b = 0;
        const int r = std::stoi(text.substr(0, comma), &a);
        const int s = std::stoi(text.substr(comma + 1), &b);
        if (a != comma || b != text.size() - comma - 1) throw std::invalid_argument("trailing");
        return {r, s};
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidQuery, "signature must be R,S with integers, got " + text);
    }
}

std::vector<IrrEntry> find_label(const ZPoly& F, const std::string& label) {
    std::vector<IrrEntry> out;
    for (const auto& e : irr_real(F))
        if (handle_label(e) == label) out.push_back(e);
    return out;
}

IrrEntry handle_by_label(const ZPoly& F, const std::string& label) {
    auto v = find_label(F, label);
    if (v.empty()) throw Error(ErrorKind::InvalidQuery, "no handle " + label + " in Irr_R(F)");
    return v.front();
}

// The unique factor with a root outside the unit circle, for builders on complemented polynomials.
ZPoly salem_factor(const ZPoly& F) {
    std::vector<ZPoly> found;
    for (const auto& [g, n] : factor_over_z(F).factors)
        if (!cyclotomic_index(g)) found.push_back(g);
    if (found.size() != 1) throw Error(ErrorKind::InvalidQuery, "F needs exactly one non-cyclotomic factor");
    return found.front();
}

json c1_json(const ZPoly& F) {
    C1Evidence c1 = check_c1(F);
    json j = {{"ok", c1.ok}, {"F(1)", zint_json(c1.f1)}, {"F(-1)", zint_json(c1.fm1)}, {"twisted", zint_json(c1.twisted)}};
    bool z2 = false;
    std::string z2err;
    try {
        z2 = even_unimodular_z2_check(F);
    } catch (const Error& e) {
        z2err = e.what();
    }
    j["z2"] = z2;
    if (!z2err.empty()) j["z2_error"] = z2err;
    std::set<ZInt> primes{ZInt(2)};
    for (const ZInt& v : {c1.f1, c1.fm1})
        if (v != 0)
            for (const auto& pe : factor_integer(v)) primes.insert(pe.first);
    json local = json::array();
    for (const auto& p : primes) local.push_back({{"p", zint_json(p)}, {"ok", local_unimodular_check(F, p)}});
    j["local"] = local;
    return j;
}

json c2_json(const ZPoly& F, int r, int s) {
    C2Evidence c2 = check_c2(F, r, s);
    return {{"ok", c2.ok}, {"m", c2.m}, {"parity_required", c2.parity_required}};
}

json entry_json(const SalemInfo& info) {
    return {{"poly", info.S.str()},
            {"coeffs", poly_json(info.S)},
            {"degree", info.degree},
            {"S(1)", zint_json(info.s1)},
            {"S(-1)", zint_json(info.sm1)},
            {"dominant_root", decimal_string((info.dominant_root.lo + info.dominant_root.hi) / 2, 12)},
            {"quads", static_cast<int>(info.handles.size())}};
}

struct Options {
    bool verify = false;
    bool error_json = false;
    bool timing = false;
};

json error_json(const Error& e) {
    json j = {{"kind", kind_name(e.kind())}, {"message", e.what()}};
    if (auto* p = dynamic_cast<const ParseFailure*>(&e)) j["offset"] = p->offset();
    return j;
}

}  // namespace

MilnorIndex parse_tau_spec(const std::string& spec, const ZPoly& F, int r, int s) {
    if (spec == "one") {
        const ZPoly S = salem_factor(F);
        return make_tau_one(S, F);
    }
    if (spec == "definite") return make_tau_definite(F, r, s);
    if (spec.rfind("delta:", 0) == 0) {
        IrrEntry e = handle_by_label(F, spec.substr(6));
        if (e.handle.kind != HandleKind::Quad) throw Error(ErrorKind::InvalidQuery, "delta needs a quadratic handle");
        return make_tau_delta(e.handle.parent, F, e.handle.ordinal);
    }
    if (spec.rfind("zeta:", 0) == 0) {
        IrrEntry e = handle_by_label(F, spec.substr(5));
        return make_tau_zeta(F, key_of(e.handle));
    }
    MilnorIndex t;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::InvalidQuery, "tau item without '=': " + item);
        const std::string label = item.substr(0, eq);
        int value = 0;
        try {
            std::size_t used = 0;
            value = std::stoi(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::InvalidQuery, "tau value is not an integer: " + item);
        }
        IrrEntry e = handle_by_label(F, label);
        if (!t.values.emplace(key_of(e.handle), value).second)
            throw Error(ErrorKind::InvalidQuery, "handle given twice: " + label);
    }
    for (const auto& e : irr_real(F))
        if (!t.has(key_of(e.handle))) throw Error(ErrorKind::InvalidQuery, "tau has no value for " + handle_label(e));
    return t;
}

json tau_labels(const ZPoly& F, const MilnorIndex& tau) {
    json j = json::object();
    for (const auto& e : irr_real(F)) {
        HandleKey k = key_of(e.handle);
        if (tau.has(k)) j[handle_label(e)] = tau.at(k);
    }
    return j;
}

json factorization_json(const ZPoly& F) {
    FactorDecomposition d = factor_over_z(F);
    json fs = json::array();
    int idx = 0;
    for (const auto& [g, n] : d.factors) {
        ++idx;
        std::string type;
        if (g == ZPoly{-1, 1} || g == ZPoly{1, 1}) type = "0";
        else if (is_palindromic(g) && g.degree() % 2 == 0) type = "1";
        else type = "2";
        json f = {{"index", idx}, {"poly", g.str()}, {"coeffs", poly_json(g)}, {"exponent", n}, {"type", type}};
        if (auto m = cyclotomic_index(g)) f["cyclotomic"] = *m;
        fs.push_back(f);
    }
    return {{"unit", zint_json(d.unit)}, {"factors", fs}};
}

json sha_json(const ZPoly& F) {
    ShaGroup sha = sha_group(F);
    json comps = json::array();
    for (const auto& c : sha.components) {
        json a = json::array();
        for (int v : c) a.push_back(sha.vertices[v].str());
        comps.push_back(a);
    }
    json edges = json::array();
    for (const auto& e : sha.edges) {
        json ps = json::array();
        for (const auto& w : e.pi) {
            json fs = json::array();
            for (const auto& f : w.factors) fs.push_back(f.str());
            ps.push_back({{"p", zint_json(w.p)}, {"factors", fs}});
        }
        edges.push_back({{"a", sha.vertices[e.a].str()}, {"b", sha.vertices[e.b].str()}, {"pi", ps}});
    }
    return {{"rank", sha.rank}, {"components", comps}, {"edges", edges}};
}

json verdict_json(const RealizabilityVerdict& v) {
    json w = json::array();
    for (const auto& x : v.witnesses) {
        json j = {{"F", x.F.str()}, {"coeffs", poly_json(x.F)}, {"rule", x.rule}};
        if (x.tau) j["tau"] = tau_labels(x.F, *x.tau);
        if (x.certificate) j["certificate"] = certificate_json(*x.certificate);
        if (!x.note.empty()) j["note"] = x.note;
        w.push_back(j);
    }
    return {{"status", realizability_name(v.status)}, {"reason", v.reason}, {"notes", v.notes}, {"witnesses", w}};
}

namespace {

// Appends replay results of every embedded certificate; false if one fails.
bool verify_embedded(json& j) {
    bool ok = true;
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() == "certificate" && it->is_object() && it->contains("verdict")) {
                ReplayResult r = replay_certificate(*it);
                ok = ok && r.ok;
                (*it)["replay"] = {{"ok", r.ok}, {"nodes", r.nodes}, {"errors", r.errors}};
            } else {
                ok = verify_embedded(*it) && ok;
            }
        }
    } else if (j.is_array()) {
        for (auto& x : j) ok = verify_embedded(x) && ok;
    }
    return ok;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CommandResult res;
    Options opt;
    CLI::App app{"Exact decisions on isometries of even unimodular lattices and Salem realizability", "k3iso"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--verify", opt.verify, "replay every certificate through the independent checker");
    app.add_flag("--error-json", opt.error_json, "report errors as JSON on stdout");
    app.add_flag("--timing", opt.timing, "add timing_ms to the report");

    std::string poly, poly2, sig, tau_spec, file;
    bool any_tau = false;
    int delta = 1;
    unsigned kmax = 8;

    auto* classify = app.add_subcommand("classify", "factor and classify a polynomial");
    classify->add_option("POLY", poly)->required();
    auto* c1 = app.add_subcommand("check-c1", "condition C1 and the finite-place checks");
    c1->add_option("POLY", poly)->required();
    auto* c2 = app.add_subcommand("check-c2", "condition C2 at a signature");
    c2->add_option("POLY", poly)->required();
    c2->add_option("--signature", sig, "R,S")->required();
    auto* pi = app.add_subcommand("pi", "primes with a common symmetric factor");
    pi->add_option("POLY1", poly)->required();
    pi->add_option("POLY2", poly2)->required();
    auto* sha = app.add_subcommand("sha", "obstruction group");
    sha->add_option("POLY", poly)->required();
    auto* dec = app.add_subcommand("decide", "existence of a semi-simple isometry");
    dec->add_option("POLY", poly)->required();
    dec->add_option("--signature", sig, "R,S")->required();
    auto* tau_opt = dec->add_option("--tau", tau_spec, "Milnor index: labels, delta:LABEL, zeta:LABEL, one, definite");
    auto* any_opt = dec->add_flag("--any-tau", any_tau, "no prescribed Milnor index");
    tau_opt->excludes(any_opt);

    auto* salem = app.add_subcommand("salem", "Salem number realizability");
    salem->require_subcommand(1);
    auto* k3 = salem->add_subcommand("k3", "the complement S(X-1)^(22-d)");
    k3->add_option("POLY", poly)->required();
    k3->add_option("--delta", delta, "quad ordinal of delta")->check(CLI::PositiveNumber);
    auto* real = salem->add_subcommand("realizable", "case analysis over F0, F+, F-");
    real->add_option("POLY", poly)->required();
    real->add_option("--delta", delta, "quad ordinal of delta")->check(CLI::PositiveNumber);
    auto* powers = salem->add_subcommand("powers", "certificates for powers alpha^k");
    powers->add_option("POLY", poly)->required();
    powers->add_option("--max", kmax, "largest k")->required()->check(CLI::Range(1u, 1000u));
    powers->add_option("--delta", delta, "quad ordinal of delta")->check(CLI::PositiveNumber);
    auto* square = salem->add_subcommand("square", "realizability of alpha^2");
    square->add_option("POLY", poly)->required();
    square->add_option("--delta", delta, "quad ordinal of delta")->check(CLI::PositiveNumber);
    auto* deg18 = salem->add_subcommand("deg18", "unramified degree 18 workflow");
    deg18->add_option("POLY", poly)->required();
    auto* table = salem->add_subcommand("table", "Salem table tools");
    table->require_subcommand(1);
    auto* validate = table->add_subcommand("validate", "validate a JSON-lines table");
    validate->add_option("FILE", file)->required();

    std::ostringstream out, err;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        res.exit_code = app.exit(e, out, err) == 0 ? 0 : 1;
        res.out = out.str();
        res.err = err.str();
        return res;
    }

    const auto t0 = std::chrono::steady_clock::now();
    json rep = {{"schema", 1}};
    int code = 0;
    try {
        if (classify->parsed()) {
            const ZPoly F = parse_poly(poly);
            rep["command"] = "classify";
            rep["query"] = {{"poly", F.str()}};
            rep["factorization"] = factorization_json(F);
            const bool sym = F.is_monic() && F.constant_term() != 0 && is_symmetric(F);
            rep["symmetric"] = sym;
            if (sym) {
                rep["m"] = m_of(F);
                json hs = json::array();
                for (const auto& e : irr_real(F))
                    hs.push_back({{"label", handle_label(e)}, {"kind", handle_kind_name(e.handle.kind)},
                                  {"weight", e.weight}, {"c_lo", decimal_string(e.handle.lo, 6)},
                                  {"c_hi", decimal_string(e.handle.hi, 6)}});
                rep["handles"] = hs;
                TypedFactors t = classify_factors(F);
                json pairs = json::array();
                for (const auto& p : t.type2) pairs.push_back({{"g", p.g.str()}, {"g*", p.gstar.str()}, {"n", p.n}});
                json i1 = json::array();
                for (const auto& [f, n] : t.i1) i1.push_back({{"f", f.str()}, {"n", n}});
                rep["types"] = {{"xm1", t.n_xm1}, {"xp1", t.n_xp1}, {"type1", i1}, {"type2", pairs}};
            }
        } else if (c1->parsed()) {
            const ZPoly F = parse_poly(poly);
            rep["command"] = "check-c1";
            rep["query"] = {{"poly", F.str()}};
            rep["c1"] = c1_json(F);
        } else if (c2->parsed()) {
            const ZPoly F = parse_poly(poly);
            auto [r, s] = parse_signature(sig);
            rep["command"] = "check-c2";
            rep["query"] = {{"poly", F.str()}, {"signature", {r, s}}};
            rep["c2"] = c2_json(F, r, s);
        } else if (pi->parsed()) {
            const ZPoly f = parse_poly(poly), g = parse_poly(poly2);
            rep["command"] = "pi";
            rep["query"] = {{"f", f.str()}, {"g", g.str()}};
            rep["resultant"] = zint_json(resultant(f, g));
            json ws = json::array();
            for (const auto& w : pi_set(f, g)) {
                json fs = json::array();
                for (const auto& x : w.factors) fs.push_back(x.str());
                ws.push_back({{"p", zint_json(w.p)}, {"factors", fs}});
            }
            rep["pi"] = ws;
        } else if (sha->parsed()) {
            const ZPoly F = parse_poly(poly);
            rep["command"] = "sha";
            rep["query"] = {{"poly", F.str()}};
            rep["sha"] = sha_json(F);
        } else if (dec->parsed()) {
            const ZPoly F = parse_poly(poly);
            auto [r, s] = parse_signature(sig);
            rep["command"] = "decide";
            std::optional<MilnorIndex> tau;
            if (!tau_spec.empty()) tau = parse_tau_spec(tau_spec, F, r, s);
            rep["query"] = {{"poly", F.str()}, {"signature", {r, s}}};
            if (tau) {
                rep["query"]["tau_spec"] = tau_spec;
                rep["query"]["tau"] = tau_labels(F, *tau);
            }
            DecisionCertificate c = decide_exists(F, r, s, tau);
            rep["factorization"] = factorization_json(F);
            rep["c1"] = c1_json(F);
            rep["c2"] = c2_json(F, r, s);
            rep["sha"] = sha_json(F);
            json d = {{"verdict", verdict_name(c.verdict)}, {"rule", rule_name(c.rule)},
                      {"certificate", certificate_json(c)}};
            if (c.tau_witness) d["tau_witness"] = tau_labels(F, *c.tau_witness);
            rep["decision"] = d;
            if (c.verdict == Verdict::Undetermined) code = 2;
        } else if (salem->parsed()) {
            if (validate->parsed()) {
                rep["command"] = "salem table validate";
                rep["query"] = {{"file", file}};
                auto entries = load_salem_table(file);
                TableReport tr = validate_table(entries);
                json checks = json::array();
                for (const auto& c : tr.checks)
                    checks.push_back({{"entry", c.entry}, {"check", c.check}, {"ok", c.ok},
                                      {"expected", c.expected}, {"computed", c.computed}});
                json fails = json::array();
                for (const auto& c : tr.failures())
                    fails.push_back({{"entry", c.entry}, {"check", c.check}, {"expected", c.expected},
                                     {"computed", c.computed}});
                rep["entries"] = entries.size();
                rep["checks"] = checks;
                rep["failures"] = fails;
                rep["valid"] = tr.ok();
                if (!tr.ok()) code = 1;
            } else {
                const ZPoly S = parse_poly(poly);
                SalemInfo info = SalemInfo::from(S);
                rep["salem"] = entry_json(info);
                rep["query"] = {{"poly", S.str()}, {"delta", delta}};
                if (k3->parsed() || real->parsed() || square->parsed()) {
                    RealizabilityVerdict v = k3->parsed()     ? complemented_realizable(info, delta)
                                             : real->parsed() ? salem_realizable(info, delta)
                                                              : square_realizable(info, delta);
                    rep["command"] = k3->parsed() ? "salem k3" : real->parsed() ? "salem realizable" : "salem square";
                    rep["result"] = verdict_json(v);
                    if (v.status == Realizability::Unknown) code = 2;
                } else if (powers->parsed()) {
                    rep["command"] = "salem powers";
                    rep["query"]["max"] = kmax;
                    json ps = json::array();
                    for (const auto& e : power_scan(info, delta, kmax)) {
                        json cy = json::array();
                        for (const auto& [j, v] : e.res_cyclotomic) cy.push_back({{"m", j}, {"res", zint_json(v)}});
                        json x = {{"k", e.k}, {"certified", e.certified}, {"res_power", zint_json(e.res_power)},
                                  {"res_cyclotomic", cy}};
                        if (!e.rule.empty()) x["rule"] = e.rule;
                        if (!e.note.empty()) x["note"] = e.note;
                        if (e.witness) x["witness"] = verdict_json(*e.witness);
                        ps.push_back(x);
                    }
                    rep["powers"] = ps;
                } else if (deg18->parsed()) {
                    rep["command"] = "salem deg18";
                    rep["query"].erase("delta");
                    Deg18Report d = degree18_workflow(info);
                    json cs = json::array();
                    for (const auto& c : d.complements) {
                        cs.push_back({{"cyclotomic", c.cyclotomic}, {"c1", c.c1},
                                      {"verdict", verdict_name(c.decision.verdict)},
                                      {"rule", rule_name(c.decision.rule)},
                                      {"certificate", certificate_json(c.decision)}});
                    }
                    json common = json::array();
                    for (const auto& [p, fs] : d.phi12_common) {
                        json a = json::array();
                        for (const auto& f : fs) a.push_back({{"factor", f.factor.str()}, {"symmetric", f.symmetric}});
                        common.push_back({{"p", p}, {"factors", a}});
                    }
                    json deltas = json::array();
                    for (std::size_t i = 0; i < d.phi12_tau_delta.size(); ++i)
                        deltas.push_back({{"delta", i + 1}, {"verdict", verdict_name(d.phi12_tau_delta[i].verdict)},
                                          {"rule", rule_name(d.phi12_tau_delta[i].rule)},
                                          {"certificate", certificate_json(d.phi12_tau_delta[i])}});
                    rep["complements"] = cs;
                    rep["phi12"] = {{"rank", d.phi12_rank},
                                    {"resultant", zint_json(d.phi12_resultant)},
                                    {"common_factors", common},
                                    {"tau_delta", deltas},
                                    {"tau_zeta", {{"verdict", verdict_name(d.phi12_tau_zeta->verdict)},
                                                  {"rule", rule_name(d.phi12_tau_zeta->rule)},
                                                  {"certificate", certificate_json(*d.phi12_tau_zeta)}}}};
                    rep["overall"] = realizability_name(d.overall);
                    if (d.overall == Realizability::Unknown) code = 2;
                }
            }
        }
        if (opt.verify) {
            const bool ok = verify_embedded(rep);
            rep["verified"] = ok;
            if (!ok) code = 1;
        }
    } catch (const Error& e) {
        res.exit_code = 1;
        if (opt.error_json) {
            res.out = json{{"schema", 1}, {"error", error_json(e)}}.dump(2) + "\n";
        } else {
            res.err = std::string("error: ") + kind_name(e.kind()) + ": " + e.what() + "\n";
        }
        return res;
    }
    if (opt.timing) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
        rep["timing_ms"] = ms.count();
    }
    res.exit_code = code;
    res.out = rep.dump(2) + "\n";
    return res;
}

}  // namespace k3iso
