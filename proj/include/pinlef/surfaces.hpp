#pragma once

// Compact surfaces, their first homology over Z/2 and Z/4, and the two kinds
// of quadratic enhancement that encode Pin structures:
//
//   q-: H1(S; Z/2) -> Z/4,  q(x + y) = q(x) + q(y) + 2 x.y
//   q+: H1(S; Z/4) -> Z/2,  q(x + y) = q(x) + q(y) + x.y
//
// An enhancement is stored by its values on the generators of the surface's
// standard presentation.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pinlef/finite_linalg.hpp"

namespace pinlef {

enum class Orientability { orientable, non_orientable };

/// Sigma_{g,b} (orientable, genus g) or N_{k,b} (non-orientable, k crosscaps),
/// with b boundary circles.
///
/// Generator order of the standard presentation:
///   orientable:     a1, b1, ..., ag, bg, d1, ..., d_{b-1}
///   non-orientable: e1, ..., ek, d1, ..., d_{b-1}
/// where the d's are boundary-parallel classes (null under the intersection
/// form), the a/b pairs form a symplectic basis and the crosscap cores e_i
/// satisfy e_i.e_j = delta_ij.
class SurfaceModel {
public:
    /// Largest supported Z/2 rank; keeps structure counts inside 64 bits.
    static constexpr std::size_t kMaxRank = 62;

    static SurfaceModel orientable(std::size_t genus, std::size_t boundary = 0);
    static SurfaceModel non_orientable(std::size_t crosscaps, std::size_t boundary = 0);

    Orientability kind() const { return kind_; }
    bool is_orientable() const { return kind_ == Orientability::orientable; }
    std::size_t genus_or_crosscaps() const { return count_; }
    std::size_t boundary_components() const { return boundary_; }
    bool is_closed() const { return boundary_ == 0; }

    int euler_characteristic() const;
    std::size_t z2_rank() const;
    std::size_t boundary_class_count() const { return boundary_ > 0 ? boundary_ - 1 : 0; }

    /// Z/2 intersection number of generators i and j.
    bool generator_dot(std::size_t i, std::size_t j) const;
    /// Z/2 intersection number of two Z/2 classes.
    bool dot(const VecGF2& x, const VecGF2& y) const;

    /// "Sigma_{1,1}" / "N_{2,0}"
    std::string name() const;

    friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

private:
    SurfaceModel(Orientability kind, std::size_t count, std::size_t boundary);

    Orientability kind_ = Orientability::orientable;
    std::size_t count_ = 0;
    std::size_t boundary_ = 0;
};

struct HomologyPresentation {
    std::vector<std::string> generators;
    std::size_t z2_rank = 0;
    MatGF2 z2_intersection;
    /// Rows span the relation submodule of the free Z/4 module on the generators.
    /// Empty unless the surface is closed and non-orientable, where the single
    /// relation is twice the sum of the crosscap generators.
    MatZ4 z4_relations;
};

HomologyPresentation homology_presentation(const SurfaceModel& s);

enum class Coefficients { z2, z4 };

/// Coordinates of a homology class in the standard generators.
class HomologyClass {
public:
    HomologyClass() = default;
    static HomologyClass z2(VecZ4 coords);
    static HomologyClass z4(VecZ4 coords);
    static HomologyClass zero(Coefficients ring, std::size_t length);
    static HomologyClass generator(Coefficients ring, std::size_t length, std::size_t index);

    Coefficients ring() const { return ring_; }
    std::size_t size() const { return coords_.size(); }
    std::uint8_t operator[](std::size_t i) const { return coords_[i]; }
    const VecZ4& coords() const { return coords_; }

    VecGF2 reduce_mod2() const { return pinlef::reduce_mod2(coords_); }
    HomologyClass as_z2() const { return z2(coords_); }

    friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

private:
    HomologyClass(Coefficients ring, VecZ4 coords);

    Coefficients ring_ = Coefficients::z2;
    VecZ4 coords_;
};

/// Equality in H1(S; Z/4): coordinates agree modulo the relation submodule.
bool same_z4_class(const HomologyPresentation& p, const HomologyClass& x, const HomologyClass& y);

/// Z/2 self-intersection of a class (computed on its mod 2 reduction).
bool self_intersection(const SurfaceModel& s, const HomologyClass& x);

/// False exactly for closed non-orientable surfaces with an odd number of crosscaps.
bool pin_plus_exists_surface(const SurfaceModel& s);

class EnhancementMinus {
public:
    /// Throws InvariantViolation unless values[i] = e_i.e_i (mod 2) for every generator.
    EnhancementMinus(SurfaceModel surface, VecZ4 values);

    /// Minimal representative: q(e_i) = e_i.e_i in {0, 1}.
    static EnhancementMinus base(const SurfaceModel& s);

    const SurfaceModel& surface() const { return surface_; }
    const VecZ4& values() const { return values_; }

    friend bool operator==(const EnhancementMinus&, const EnhancementMinus&) = default;
    friend auto operator<=>(const EnhancementMinus& a, const EnhancementMinus& b) { return a.values_ <=> b.values_; }

private:
    SurfaceModel surface_;
    VecZ4 values_;
};

class EnhancementPlus {
public:
    /// Values are taken mod 2. Consistency with the Z/4 relations is not
    /// enforced here (see is_well_defined); evaluation refuses ill-defined forms.
    EnhancementPlus(SurfaceModel surface, VecZ4 values);

    /// q(e_i) = 0 on every generator.
    static EnhancementPlus base(const SurfaceModel& s);

    const SurfaceModel& surface() const { return surface_; }
    const VecZ4& values() const { return values_; }

    friend bool operator==(const EnhancementPlus&, const EnhancementPlus&) = default;
    friend auto operator<=>(const EnhancementPlus& a, const EnhancementPlus& b) { return a.values_ <=> b.values_; }

private:
    SurfaceModel surface_;
    VecZ4 values_;
};

/// q-(sum a_i e_i) = sum a_i q(e_i) + 2 sum_{i<j} a_i a_j e_i.e_j  (mod 4).
/// x may be given over Z/2 or Z/4; only its mod 2 reduction is used.
std::uint8_t eval_qminus(const EnhancementMinus& q, const HomologyClass& x);

/// q+(sum a_i g_i) = sum a_i q(g_i) + sum C(a_i, 2) g_i.g_i + sum_{i<j} a_i a_j g_i.g_j  (mod 2).
/// Throws InvariantViolation when q is not constant on Z/4 relation cosets.
std::uint8_t eval_qplus(const EnhancementPlus& q, const HomologyClass& x);

/// True when q vanishes on every Z/4 relation row, i.e. its value does not
/// depend on the chosen coordinate representative.
bool is_well_defined(const EnhancementPlus& q);

/// H^1(S; Z/2) action: q-_g(x) = q-(x) + 2 g(x),  q+_g(x) = q+(x) + g(x).
/// gamma is given in the dual basis of the generators.
EnhancementMinus act_h1(const EnhancementMinus& q, const VecGF2& gamma);
EnhancementPlus act_h1(const EnhancementPlus& q, const VecGF2& gamma);

/// Enumeration refuses surfaces above this rank.
inline constexpr std::size_t kMaxEnumerationRank = 20;

/// All 2^r enhancements, lexicographic in their generator values.
std::vector<EnhancementMinus> enumerate_minus_enhancements(const SurfaceModel& s);

struct PlusEnumeration {
    std::vector<EnhancementPlus> enhancements;
    /// Non-empty exactly when the surface carries no Pin+ structure.
    std::string obstruction;
};
PlusEnumeration enumerate_plus_enhancements(const SurfaceModel& s);

}  // namespace pinlef
