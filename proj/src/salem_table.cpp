#include "k3iso/salem_table.hpp"

#include <json.hpp>

#include <fstream>

#include "k3iso/errors.hpp"
#include "k3iso/rootloc.hpp"

namespace k3iso {

SalemTableEntry parse_table_line(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("table line is not JSON: ") + e.what());
    }
    SalemTableEntry e;
    try {
        e.name = j.at("name").get<std::string>();
        std::vector<ZInt> c;
        for (const auto& x : j.at("coeffs")) {
            if (x.is_string()) c.emplace_back(x.get<std::string>());
            else if (x.is_number_integer()) c.emplace_back(x.get<long>());
            else throw Error(ErrorKind::NonIntegerCoefficient, "coefficient " + x.dump() + " in " + e.name);
        }
        e.S = ZPoly(std::move(c));
        e.approx_root = j.at("approx_root").get<std::string>();
        e.provenance = j.value("provenance", "");
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::ParseError, std::string("malformed table entry: ") + ex.what());
    }
    return e;
}

std::vector<SalemTableEntry> load_salem_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidQuery, "cannot open " + path);
    std::vector<SalemTableEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse_table_line(line));
    }
    return out;
}

std::string default_table_path() { return std::string(K3ISO_DATA_DIR) + "/salem_table.jsonl"; }

const SalemTableEntry& find_entry(const std::vector<SalemTableEntry>& t, const std::string& name) {
    for (const auto& e : t)
        if (e.name == name) return e;
    throw Error(ErrorKind::InvalidQuery, "no table entry named " + name);
}

QNum parse_decimal(const std::string& s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    std::string digits;
    int frac = 0;
    bool dot = false, any = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '.' && !dot) {
            dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i];
            any = true;
            if (dot) ++frac;
        } else {
            throw Error(ErrorKind::ParseError, "bad decimal " + s);
        }
    }
    if (!any) throw Error(ErrorKind::ParseError, "bad decimal " + s);
    ZInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    QNum q(ZInt(digits), den);
    q.canonicalize();
    return neg ? QNum(-q) : q;
}

bool TableReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

std::vector<TableCheck> TableReport::failures() const {
    std::vector<TableCheck> f;
    for (const auto& c : checks)
        if (!c.ok) f.push_back(c);
    return f;
}

namespace {

void check_value(TableReport& r, const std::string& entry, const std::string& check, const ZInt& expected,
                 const ZInt& computed) {
    r.checks.push_back({entry, check, expected == computed, expected.get_str(), computed.get_str()});
}

}  // namespace

TableReport validate_table(const std::vector<SalemTableEntry>& entries) {
    TableReport rep;
    for (const auto& e : entries) {
        const bool salem = is_salem(e.S);
        rep.checks.push_back({e.name, "is_salem", salem, "true", salem ? "true" : "false"});
        if (salem) {
            ZInt bound = 1;
            for (const auto& c : e.S.coeffs()) bound = std::max(bound, ZInt(abs(c)));
            QInterval iv = real_root_approx(e.S, QNum(1), QNum(bound + 1), QNum(1, 1000000000) / 1000000);
            QNum mid = (iv.lo + iv.hi) / 2;
            bool ok = false;
            std::string expected = e.approx_root;
            try {
                QNum a = parse_decimal(e.approx_root);
                QNum diff = abs(mid - a);
                ok = diff <= QNum(1, 1000000000);
            } catch (const Error&) {
                expected = "decimal literal, got " + e.approx_root;
            }
            rep.checks.push_back({e.name, "approx_root", ok, expected, decimal_string(mid, 15)});
        }
        if (e.name == "lambda_18") {
            for (unsigned m : {1u, 2u, 3u, 4u, 6u})
                check_value(rep, e.name, "|Res(S, Phi_" + std::to_string(m) + ")|", ZInt(1),
                            abs(resultant(e.S, cyclotomic(m))));
            check_value(rep, e.name, "|Res(S, Phi_12)|", ZInt(169), abs(resultant(e.S, cyclotomic(12))));
        }
        if (e.name == "lambda_18_3") {
            check_value(rep, e.name, "S(1)", ZInt(-5), e.S.eval(ZInt(1)));
            check_value(rep, e.name, "S(-1)", ZInt(1), e.S.eval(ZInt(-1)));
        }
    }
    return rep;
}

}  // namespace k3iso
