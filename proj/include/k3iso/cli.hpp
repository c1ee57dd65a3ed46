#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "k3iso/decide.hpp"
#include "k3iso/milnor.hpp"
#include "k3iso/salem.hpp"

namespace k3iso {

struct CommandResult {
    int exit_code = 0;
    std::string out;  // JSON report or help text
    std::string err;
};

// args excludes the program name.
CommandResult run_command(const std::vector<std::string>& args);

// Accepted forms: "fI.qJ=INT,...,xm1=INT,xp1=INT" or "delta:fI.qJ", "zeta:fI.qJ", "one", "definite".
MilnorIndex parse_tau_spec(const std::string& spec, const ZPoly& F, int r, int s);

// Index keyed by the stable labels (fI.qJ, xm1, xp1).
nlohmann::json tau_labels(const ZPoly& F, const MilnorIndex& tau);

nlohmann::json factorization_json(const ZPoly& F);
nlohmann::json sha_json(const ZPoly& F);
nlohmann::json verdict_json(const RealizabilityVerdict& v);

}  // namespace k3iso
