#include "pinlef/charclasses.hpp"

#include <string>

#include "pinlef/errors.hpp"

namespace pinlef {

void validate(const EmbeddedSurfaceData& d) {
    auto check = [](std::uint8_t v, const char* field) {
        if (v > 1) throw InputError(std::string("embedded surface: ") + field + " must be 0 or 1");
    };
    check(d.euler_char, "euler_char");
    check(d.self_intersection, "self_intersection");
    check(d.cup_term, "cup_term");
    check(d.w1sq_sigma, "w1sq_sigma");
    check(d.w1sq_normal, "w1sq_normal");
}

std::uint8_t eval_w2(const EmbeddedSurfaceData& d) {
    validate(d);
    return static_cast<std::uint8_t>(d.euler_char ^ d.cup_term ^ d.self_intersection);
}

std::uint8_t eval_w1sq(const EmbeddedSurfaceData& d) {
    validate(d);
    return static_cast<std::uint8_t>(d.w1sq_sigma ^ d.w1sq_normal);
}

ObstructionSummary pin_obstruction_summary(std::span<const EmbeddedSurfaceData> surfaces) {
    ObstructionSummary out;
    out.no_surfaces = surfaces.empty();
    for (const auto& d : surfaces) {
        const std::uint8_t w2 = eval_w2(d);
        if (w2 != 0) out.pin_plus_obstructed = true;
        if ((w2 ^ eval_w1sq(d)) != 0) out.pin_minus_obstructed = true;
    }
    return out;
}

}  // namespace pinlef
