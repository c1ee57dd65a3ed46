#pragma once

#include <string>
#include <vector>

#include "k3iso/zpoly.hpp"

namespace k3iso {

enum class HandleKind { XminusOne, XplusOne, Quad };

const char* handle_kind_name(HandleKind k);

// A real irreducible symmetric factor of a Z-irreducible parent: X-1, X+1, or the
// quadratic X^2 - cX + 1 whose c = 2cos(theta) lies in the open interval (lo, hi).
struct RealQuadHandle {
    ZPoly parent;
    HandleKind kind = HandleKind::Quad;
    QNum lo, hi;
    int ordinal = 1;  // 1-based, quads sorted by c descending
};

struct QInterval {
    QNum lo, hi;
};

ZPoly squarefree_part(const ZPoly& f);
std::vector<ZPoly> sturm_sequence(const ZPoly& f);

// Distinct real roots in (a, b].
int count_real_roots_in(const ZPoly& f, const QNum& a, const QNum& b);
// Distinct real roots in (a, +inf) and (-inf, b).
int count_real_roots_above(const ZPoly& f, const QNum& a);
int count_real_roots_below(const ZPoly& f, const QNum& b);
int count_real_roots(const ZPoly& f);

// With multiplicity; f symmetric.
int count_unit_circle_roots(const ZPoly& f);
int m_of(const ZPoly& F);
bool is_salem(const ZPoly& f);

std::vector<RealQuadHandle> quad_handles(const ZPoly& f);
// Returns a handle whose interval has width <= width.
RealQuadHandle refine_handle(const RealQuadHandle& h, const QNum& width);

// Exactly one root of f in (lo, hi) is required; returns an interval of width <= width
// containing it (degenerate when the root is rational and hit exactly).
QInterval real_root_approx(const ZPoly& f, const QNum& lo, const QNum& hi, const QNum& width);

// Decimal string of a rational, truncated to the given number of digits after the point.
std::string decimal_string(const QNum& q, int digits);

}  // namespace k3iso
