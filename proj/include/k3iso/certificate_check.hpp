#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace k3iso {

struct ReplayResult {
    bool ok = true;
    int nodes = 0;
    std::vector<std::string> errors;
};

// Re-derives every node of a certificate in its JSON form from the raw polynomial data:
// local conditions, Milnor sums, obstruction rank, block products, resultants and the
// full list of signature splits of a forced split.
ReplayResult replay_certificate(const nlohmann::json& cert);

}  // namespace k3iso
