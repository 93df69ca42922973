#pragma once

// Evaluation of w2 and w1^2 of a 4-manifold on the Z/2 class of an embedded
// surface, from mod 2 invariants of the surface and its normal bundle.

#include <cstdint>
#include <span>

namespace pinlef {

/// Mod 2 invariants of an embedded surface sigma in a 4-manifold M.
/// Every field must be 0 or 1.
struct EmbeddedSurfaceData {
    std::uint8_t euler_char = 0;         // chi(sigma)
    std::uint8_t self_intersection = 0;  // [sigma]^2
    std::uint8_t cup_term = 0;           // (w1(sigma) u w1(nu sigma))[sigma]
    std::uint8_t w1sq_sigma = 0;         // w1^2(sigma)
    std::uint8_t w1sq_normal = 0;        // w1^2(nu sigma)

    friend bool operator==(const EmbeddedSurfaceData&, const EmbeddedSurfaceData&) = default;
};

/// Throws InputError if a field is not a residue mod 2.
void validate(const EmbeddedSurfaceData& d);

/// <w2(M), [sigma]> = chi(sigma) + (w1(sigma) u w1(nu sigma))[sigma] + [sigma]^2.
std::uint8_t eval_w2(const EmbeddedSurfaceData& d);

/// <w1^2(M), [sigma]> = w1^2(sigma) + w1^2(nu sigma).
std::uint8_t eval_w1sq(const EmbeddedSurfaceData& d);

struct ObstructionSummary {
    bool pin_plus_obstructed = false;   // some <w2, a> != 0
    bool pin_minus_obstructed = false;  // some <w2 + w1^2, a> != 0
    /// Set when no surfaces were supplied: nothing was checked.
    bool no_surfaces = false;
};

/// The caller asserts that the surfaces generate H2(M; Z/2).
ObstructionSummary pin_obstruction_summary(std::span<const EmbeddedSurfaceData> surfaces);

}  // namespace pinlef
