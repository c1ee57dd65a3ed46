#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "k3iso/milnor.hpp"
#include "k3iso/obstruction.hpp"
#include "k3iso/zpoly.hpp"

namespace k3iso {

struct C1Evidence {
    bool ok = false;
    ZInt f1, fm1;   // F(1), F(-1)
    ZInt twisted;   // (-1)^n F(1) F(-1), deg F = 2n
};

struct C2Evidence {
    bool ok = false;
    int m = 0;
    bool parity_required = false;
};

C1Evidence check_c1(const ZPoly& F);
C2Evidence check_c2(const ZPoly& F, int r, int s);
// Parity of the valuation at p of F(1) and F(-1) (p odd) or of F(1)F(-1) (p = 2); v(0) = 0.
bool local_unimodular_check(const ZPoly& F, const ZInt& p);
// Necessary conditions at 2 for an even unimodular Z_2-lattice; F(0) must be 1.
bool even_unimodular_z2_check(const ZPoly& F);

// Difference of the real Hasse-Witt contributions between tau and tau0 for the class c
// (a 0/1 vector over the vertices of sha_group(F)).
int archimedean_w2_delta(const ZPoly& F, int r, int s, const MilnorIndex& tau, const MilnorIndex& tau0,
                         const std::vector<int>& c);

enum class Verdict { Yes, No, Undetermined };
enum class Rule { C1Fail, C2Fail, ShaZeroHasse, PartitionSum, ForcedSplitExhausted, ArchimedeanDelta, SpecialTheorem, None };

const char* verdict_name(Verdict v);
const char* rule_name(Rule r);

struct DecisionCertificate {
    Verdict verdict = Verdict::Undetermined;
    Rule rule = Rule::None;
    ZPoly block;
    int r = 0, s = 0;
    std::optional<MilnorIndex> tau;          // the prescribed index (restricted to the block)
    std::optional<MilnorIndex> tau_witness;  // an index realizing a YES
    nlohmann::json data = nlohmann::json::object();
    std::vector<DecisionCertificate> children;
};

// F monic symmetric, even degree, F(0) = 1, r + s = deg F, r = s (mod 8).
DecisionCertificate decide_exists(const ZPoly& F, int r, int s, const std::optional<MilnorIndex>& tau);

// JSON forms shared by reports and the certificate checker.
nlohmann::json zint_json(const ZInt& z);
ZInt zint_from_json(const nlohmann::json& j);
nlohmann::json poly_json(const ZPoly& f);
ZPoly poly_from_json(const nlohmann::json& j);
nlohmann::json tau_json(const MilnorIndex& t);
MilnorIndex tau_from_json(const nlohmann::json& j);
nlohmann::json certificate_json(const DecisionCertificate& c);

}  // namespace k3iso
