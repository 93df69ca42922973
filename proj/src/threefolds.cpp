#include "pinlef/threefolds.hpp"

#include "pinlef/errors.hpp"

namespace pinlef {

namespace {

std::vector<HomologyClass> as_z4(std::vector<HomologyClass> classes) {
    for (auto& c : classes) c = HomologyClass::z4(c.coords());
    return classes;
}

}  // namespace

HandlebodyDecomposition3::HandlebodyDecomposition3(std::size_t genus, std::vector<HomologyClass> attaching,
                                                   std::vector<HomologyClass> belt)
    : genus_(genus),
      boundary_(SurfaceModel::non_orientable(genus == 0 ? 1 : 2 * genus, 0)),
      attaching_(as_z4(std::move(attaching))),
      belt_(as_z4(std::move(belt))) {
    if (genus == 0) throw InputError("handlebody genus must be at least 1");
    if (attaching_.size() != genus || belt_.size() != genus)
        throw InputError("genus " + std::to_string(genus) + " needs " + std::to_string(genus) +
                         " attaching and belt classes, got " + std::to_string(attaching_.size()) + " and " +
                         std::to_string(belt_.size()));
    const auto labels = constraint_labels();
    const auto classes = constraint_classes();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].size() != 2 * genus)
            throw InputError(labels[i] + " has " + std::to_string(classes[i].size()) + " coordinates, expected " +
                             std::to_string(2 * genus));
        if (self_intersection(boundary_, classes[i]))
            throw InvariantViolation(labels[i] + " has odd self-intersection on " + boundary_.name() +
                                     " but bounds a disk on one side of the splitting surface");
    }
}

std::vector<HomologyClass> HandlebodyDecomposition3::constraint_classes() const {
    std::vector<HomologyClass> out = attaching_;
    out.insert(out.end(), belt_.begin(), belt_.end());
    return out;
}

std::vector<std::string> HandlebodyDecomposition3::constraint_labels() const {
    std::vector<std::string> out;
    for (std::size_t j = 1; j <= genus_; ++j) out.push_back(subscript_label("a", j));
    for (std::size_t j = 1; j <= genus_; ++j) out.push_back(subscript_label("b", j));
    return out;
}

DecisionReport decide_pin_plus_3mfd(const HandlebodyDecomposition3& d) {
    // N_{2g} has an even number of crosscaps, so q0+ = 0 passes the relation
    // check; solve_plus_constraints still verifies it.
    return solve_plus_constraints(d.boundary(), d.constraint_classes(), 0, d.constraint_labels());
}

DecisionReport solve_pin_minus_3mfd(const HandlebodyDecomposition3& d) {
    return solve_minus_constraints(d.boundary(), d.constraint_classes(), 0, d.constraint_labels());
}

EnhancementMinus construct_pin_minus_3mfd(const HandlebodyDecomposition3& d) {
    DecisionReport report = solve_pin_minus_3mfd(d);
    if (!report.exists)
        throw InvalidDecomposition("no q- vanishes on every attaching and belt circle (" +
                                       report.certificate->summary +
                                       "); the data does not describe a closed 3-manifold",
                                   *report.certificate);
    return report.minus_structures.front();
}

}  // namespace pinlef
