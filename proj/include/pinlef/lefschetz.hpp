#pragma once

// Pin structures on Lefschetz fibrations over the disk.
//
// A Pin- structure on the total space is a q- on the fiber with q-(c) = 2 on
// every vanishing cycle c; a Pin+ structure is a q+ with q+(c) = 1. Writing
// q = q0 + (linear correction) turns both conditions into affine systems over
// Z/2 in the correction coefficients, which are decided and solved exactly.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pinlef/charclasses.hpp"
#include "pinlef/finite_linalg.hpp"
#include "pinlef/surfaces.hpp"

namespace pinlef {

enum class PinKind { minus, plus };

std::string to_string(PinKind kind);  // "Pin-" / "Pin+"

class LefschetzFibration {
public:
    /// Cycles are stored over Z/4. Throws InputError on a length mismatch and
    /// InvariantViolation on a one-sided cycle (odd Z/2 self-intersection).
    LefschetzFibration(SurfaceModel fiber, std::vector<HomologyClass> cycles);

    const SurfaceModel& fiber() const { return fiber_; }
    const std::vector<HomologyClass>& cycles() const { return cycles_; }

    /// Mod 2 reductions of the cycles, one row per cycle.
    MatGF2 z2_cycle_matrix() const;

private:
    SurfaceModel fiber_;
    std::vector<HomologyClass> cycles_;
};

/// Cycles c_0, c_1..c_k with [c_0] = sum [c_i] in H1(fiber; Z/2) and
/// k + sum_{i<j} c_i.c_j = 0 (mod 2). Such a tuple forbids Pin- structures.
struct CycleRelationWitness {
    std::size_t base = 0;             // index of c_0
    std::vector<std::size_t> others;  // indices of c_1..c_k, ascending

    std::size_t k() const { return others.size(); }
    friend bool operator==(const CycleRelationWitness&, const CycleRelationWitness&) = default;
};

struct Certificate {
    std::string summary;
    /// Constraint indices whose left-hand sides cancel mod 2 while their
    /// right-hand sides sum to one. Empty for a surface obstruction.
    std::vector<std::size_t> combination;
    bool surface_obstruction = false;
    std::optional<CycleRelationWitness> witness;
};

struct DecisionReport {
    PinKind kind = PinKind::minus;
    bool exists = false;
    std::uint64_t structure_count = 0;
    std::size_t h1_annihilator_dim = 0;

    /// Every solution, lexicographic in generator values, unless the count
    /// exceeds 2^kMaxEnumerationRank; then only the smallest one is kept and
    /// structures_truncated is set. Exactly one of the two lists is used.
    std::vector<EnhancementMinus> minus_structures;
    std::vector<EnhancementPlus> plus_structures;
    bool structures_truncated = false;

    std::optional<Certificate> certificate;

    /// The decided system C x = A (one row per constraint) and its ranks.
    MatGF2 system;
    VecGF2 rhs;
    std::size_t rank_system = 0;
    std::size_t rank_augmented = 0;
};

/// Enhancements q- on s with q-(c) = target for every listed class. Solutions
/// are parametrised as q(e_i) = q0(e_i) + 2 s_i with q0 the base enhancement.
/// Labels name the classes in certificates; defaults to c1, c2, ...
DecisionReport solve_minus_constraints(const SurfaceModel& s, std::span<const HomologyClass> classes,
                                       std::uint8_t target, std::span<const std::string> labels = {});

/// Enhancements q+ on s with q+(c) = target for every listed class, as q0 + l
/// with q0 the all-zero base enhancement and l linear.
DecisionReport solve_plus_constraints(const SurfaceModel& s, std::span<const HomologyClass> classes,
                                      std::uint8_t target, std::span<const std::string> labels = {});

DecisionReport decide_pin_minus(const LefschetzFibration& f);
DecisionReport decide_pin_plus(const LefschetzFibration& f);

/// Refuses (InputError) fibrations with more than this many cycles.
inline constexpr std::size_t kMaxWitnessSearchCycles = 22;

/// Exhaustive search over (c_0, subset) pairs. Candidates are visited with c_0
/// ascending, then by subset bitmask ascending; the first hit is returned.
std::optional<CycleRelationWitness> find_cycle_relation_witness(const LefschetzFibration& f);

/// Basis of the classes gamma in H^1(fiber; Z/2) vanishing on every cycle.
std::vector<VecGF2> fibration_h1_annihilator(const LefschetzFibration& f);

struct SphereVerdicts {
    bool pin_minus = false;
    bool pin_plus = false;
    /// Mod 2 values of the dual-surface terms; zero means unobstructed.
    std::uint8_t minus_surface_term = 0;  // [s]^2 + (w1(s) u w1(nu s))[s] + w1^2(nu s)
    std::uint8_t plus_surface_term = 0;   // chi(s) + [s]^2 + (w1(s) u w1(nu s))[s]
};

/// Lefschetz fibration over the sphere: f describes the complement of a regular
/// fiber, `dual` an embedded surface dual to the fiber.
SphereVerdicts decide_pin_over_s2(const LefschetzFibration& f, const EmbeddedSurfaceData& dual);

/// Exhaustive oracles: every candidate enhancement on s, kept when it takes
/// `target` on all classes (q+ candidates must also pass the relation check).
std::vector<EnhancementMinus> exhaustive_minus_solutions(const SurfaceModel& s, std::span<const HomologyClass> classes,
                                                         std::uint8_t target);
std::vector<EnhancementPlus> exhaustive_plus_solutions(const SurfaceModel& s, std::span<const HomologyClass> classes,
                                                       std::uint8_t target);

/// "c" + subscript digits, 1-based: cycle_label(0) == "c₁".
std::string subscript_label(const std::string& stem, std::size_t one_based);

}  // namespace pinlef
