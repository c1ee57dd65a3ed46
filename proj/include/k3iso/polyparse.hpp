#pragma once

#include <string_view>

#include "k3iso/zpoly.hpp"

namespace k3iso {

// Integer literals, x, + - * ^, parentheses, unary minus; juxtaposition multiplies ("2x^3",
// "(x-1)(x+1)"). U+2212 is read as '-'. Failures are ParseFailure with a byte offset.
ZPoly parse_poly(std::string_view text);

}  // namespace k3iso
