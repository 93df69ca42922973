#pragma once

// Line-oriented input documents:
//
//   # comment
//   [surface]
//   kind = non-orientable        # or orientable
//   crosscaps = 1                # genus = g for orientable surfaces
//   boundary = 1
//
//   [cycles]                     # one vanishing cycle per line, Z/4 coordinates
//   2
//
//   [threefold]                  # instead of [cycles]
//   genus = 1
//   attaching = 1, 1             # repeated genus times
//   belt = 0, 0                  # repeated genus times
//
//   [embedded-surface]           # repeatable
//   euler_char = 1
//   self_intersection = 1
//   cup_term = 0
//   w1sq_sigma = 1
//   w1sq_normal = 0
//   role = generator             # or dual (surface dual to the fiber, at most one)

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pinlef/charclasses.hpp"
#include "pinlef/errors.hpp"
#include "pinlef/lefschetz.hpp"
#include "pinlef/surfaces.hpp"
#include "pinlef/threefolds.hpp"

namespace pinlef {

enum class SurfaceRole { generator, dual };

struct EmbeddedSurfaceBlock {
    EmbeddedSurfaceData data;
    SurfaceRole role = SurfaceRole::generator;

    friend bool operator==(const EmbeddedSurfaceBlock&, const EmbeddedSurfaceBlock&) = default;
};

struct InputDocument {
    SurfaceModel surface;
    std::vector<HomologyClass> cycles;  // Z/4
    std::optional<HandlebodyDecomposition3> threefold;
    std::vector<EmbeddedSurfaceBlock> embedded_surfaces;

    LefschetzFibration fibration() const { return LefschetzFibration(surface, cycles); }
    std::vector<EmbeddedSurfaceData> generator_surfaces() const;
    std::optional<EmbeddedSurfaceData> dual_surface() const;

    friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

class ParseError : public InputError {
public:
    /// line == 0 refers to the document as a whole.
    ParseError(std::size_t line, const std::string& reason);
    std::size_t line() const { return line_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

InputDocument parse_document(std::string_view text);
std::string serialize_document(const InputDocument& doc);

}  // namespace pinlef
