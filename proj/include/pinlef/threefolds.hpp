#pragma once

// Pin structures on closed 3-manifolds M = H u H', where H is a genus-g
// non-orientable handlebody. Everything is decided on the closed surface
// dH = N_{2g}: a structure on M is an enhancement on dH vanishing on the
// attaching circles a_j of the 2-handles and the belt circles b_j of the
// 1-handles.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pinlef/lefschetz.hpp"
#include "pinlef/surfaces.hpp"

namespace pinlef {

class HandlebodyDecomposition3 {
public:
    /// Throws InputError unless genus >= 1 and there are exactly `genus`
    /// attaching and belt classes of length 2g; throws InvariantViolation when
    /// a class has odd self-intersection on N_{2g}.
    HandlebodyDecomposition3(std::size_t genus, std::vector<HomologyClass> attaching, std::vector<HomologyClass> belt);

    std::size_t genus() const { return genus_; }
    const SurfaceModel& boundary() const { return boundary_; }
    const std::vector<HomologyClass>& attaching() const { return attaching_; }
    const std::vector<HomologyClass>& belt() const { return belt_; }

    /// a_1..a_g followed by b_1..b_g.
    std::vector<HomologyClass> constraint_classes() const;
    /// Labels matching constraint_classes(): a₁..a_g, b₁..b_g.
    std::vector<std::string> constraint_labels() const;

    friend bool operator==(const HandlebodyDecomposition3&, const HandlebodyDecomposition3&) = default;

private:
    std::size_t genus_;
    SurfaceModel boundary_;
    std::vector<HomologyClass> attaching_;
    std::vector<HomologyClass> belt_;
};

/// Rank test on the 2g x 2g system C x = A with rows a_1..a_g, b_1..b_g and
/// A = (q0+(a_j), q0+(b_j)). On success every q+ vanishing on all listed
/// classes is reported.
DecisionReport decide_pin_plus_3mfd(const HandlebodyDecomposition3& d);

/// The full solution set of q-(a_j) = q-(b_j) = 0.
DecisionReport solve_pin_minus_3mfd(const HandlebodyDecomposition3& d);

/// Data that cannot come from a closed 3-manifold: the vanishing system for
/// q- has no solution.
class InvalidDecomposition : public std::runtime_error {
public:
    InvalidDecomposition(const std::string& what, Certificate certificate)
        : std::runtime_error(what), certificate_(std::move(certificate)) {}
    const Certificate& certificate() const { return certificate_; }

private:
    Certificate certificate_;
};

/// The lexicographically smallest q- vanishing on every a_j and b_j.
/// Throws InvalidDecomposition when none exists.
EnhancementMinus construct_pin_minus_3mfd(const HandlebodyDecomposition3& d);

}  // namespace pinlef
