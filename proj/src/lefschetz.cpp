#include "pinlef/lefschetz.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "pinlef/errors.hpp"

namespace pinlef {

namespace {

std::vector<std::string> resolve_labels(std::span<const std::string> labels, std::size_t count) {
    if (!labels.empty()) {
        if (labels.size() != count) throw InputError("label count does not match constraint count");
        return {labels.begin(), labels.end()};
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(subscript_label("c", i + 1));
    return out;
}

std::vector<std::size_t> set_bits(const VecGF2& v) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) out.push_back(i);
    return out;
}

MatGF2 reduction_matrix(const SurfaceModel& s, std::span<const HomologyClass> classes) {
    std::vector<VecGF2> rows;
    for (const auto& c : classes) {
        if (c.size() != s.z2_rank())
            throw InputError("class has " + std::to_string(c.size()) + " coordinates but " + s.name() + " has " +
                             std::to_string(s.z2_rank()) + " generators");
        rows.push_back(c.reduce_mod2());
    }
    return MatGF2::from_rows(s.z2_rank(), std::move(rows));
}

void check_two_sided(const SurfaceModel& s, std::span<const HomologyClass> classes,
                     const std::vector<std::string>& labels) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (self_intersection(s, classes[i]))
            throw InvariantViolation(labels[i] + " has odd self-intersection on " + s.name() +
                                     " (one-sided curves cannot be vanishing cycles)");
    }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// Fills in count, annihilator dimension, structures and ranks once the
// solution set (or its absence) is known.
template <class Enhancement, class Realize>
void finish_report(DecisionReport& report, std::vector<Enhancement>& sink,
                   const std::optional<AffineSolutionGF2>& solution, Realize realize) {
    report.rank_system = rank_gf2(report.system);
    report.rank_augmented = rank_gf2(report.system.augmented(report.rhs));
    report.h1_annihilator_dim = report.system.cols() - report.rank_system;
    report.exists = solution.has_value();
    if (!solution) return;
    report.structure_count = std::uint64_t{1} << solution->kernel_dim();
    if (solution->kernel_dim() > kMaxEnumerationRank) {
        sink.push_back(realize(lex_min_solution(*solution)));
        report.structures_truncated = true;
        return;
    }
    for (const auto& x : enumerate_affine_solutions(*solution, kMaxEnumerationRank)) sink.push_back(realize(x));
    std::sort(sink.begin(), sink.end());
}

}  // namespace

std::string to_string(PinKind kind) { return kind == PinKind::minus ? "Pin-" : "Pin+"; }

std::string subscript_label(const std::string& stem, std::size_t one_based) {
    static const char* const digits[] = {"₀", "₁", "₂", "₃", "₄",
                                         "₅", "₆", "₇", "₈", "₉"};
    std::string out = stem;
    for (char ch : std::to_string(one_based)) out += digits[ch - '0'];
    return out;
}

// ---------------------------------------------------------------------------

LefschetzFibration::LefschetzFibration(SurfaceModel fiber, std::vector<HomologyClass> cycles)
    : fiber_(std::move(fiber)) {
    for (auto& c : cycles) cycles_.push_back(HomologyClass::z4(c.coords()));
    const auto labels = resolve_labels({}, cycles_.size());
    reduction_matrix(fiber_, cycles_);  // length check
    check_two_sided(fiber_, cycles_, labels);
}

MatGF2 LefschetzFibration::z2_cycle_matrix() const { return reduction_matrix(fiber_, cycles_); }

// ---------------------------------------------------------------------------

DecisionReport solve_minus_constraints(const SurfaceModel& s, std::span<const HomologyClass> classes,
                                       std::uint8_t target, std::span<const std::string> labels_in) {
    if (target % 2 != 0) throw InputError("q- takes even values on two-sided classes; target must be 0 or 2");
    const auto labels = resolve_labels(labels_in, classes.size());
    check_two_sided(s, classes, labels);

    DecisionReport report;
    report.kind = PinKind::minus;
    report.system = reduction_matrix(s, classes);
    report.rhs = VecGF2(classes.size());

    // q(c) = q0(c) + 2 s.c, so q(c) = target  <=>  s.c = (target - q0(c)) / 2 (mod 2).
    const EnhancementMinus base = EnhancementMinus::base(s);
    std::vector<std::uint8_t> q0(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        q0[i] = eval_qminus(base, classes[i]);
        report.rhs.set(i, (((target + 4 - q0[i]) % 4) / 2) != 0);
    }

    const auto solution = solve_affine_gf2(report.system, report.rhs);
    finish_report(report, report.minus_structures, solution, [&](const VecGF2& x) {
        VecZ4 v = base.values();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (x.get(i)) v[i] = static_cast<std::uint8_t>((v[i] + 2) % 4);
        return EnhancementMinus(s, std::move(v));
    });
    if (report.exists) return report;

    Certificate cert;
    cert.combination = set_bits(*inconsistent_row_combination(report.system, report.rhs));
    const std::size_t c0 = cert.combination.front();
    const std::vector<std::size_t> rest(cert.combination.begin() + 1, cert.combination.end());

    std::ostringstream out;
    if (rest.empty()) {
        out << "q⁻(" << labels[c0] << ")=0≠" << int(target);
    } else {
        int pair_sum = 0;
        for (std::size_t i = 0; i < rest.size(); ++i)
            for (std::size_t j = i + 1; j < rest.size(); ++j)
                pair_sum += s.dot(report.system.row(rest[i]), report.system.row(rest[j])) ? 1 : 0;
        const int forced = (static_cast<int>(rest.size()) * target + 2 * pair_sum) % 4;
        std::vector<std::string> terms;
        std::vector<std::string> values;
        for (auto i : rest) {
            terms.push_back("[" + labels[i] + "]");
            values.push_back("q⁻(" + labels[i] + ")");
        }
        out << "[" << labels[c0] << "]=" << join(terms, "+") << " in H₁(Σ;Z₂), so q⁻("
            << labels[c0] << ")=" << join(values, "+") << "+2·" << (pair_sum % 2) << "=" << forced << "≠"
            << int(target);
    }
    cert.summary = out.str();
    if (target == 2) cert.witness = CycleRelationWitness{c0, rest};
    report.certificate = std::move(cert);
    return report;
}

DecisionReport solve_plus_constraints(const SurfaceModel& s, std::span<const HomologyClass> classes,
                                      std::uint8_t target, std::span<const std::string> labels_in) {
    if (target > 1) throw InputError("q+ takes values in Z/2; target must be 0 or 1");
    const auto labels = resolve_labels(labels_in, classes.size());
    check_two_sided(s, classes, labels);

    DecisionReport report;
    report.kind = PinKind::plus;
    report.system = reduction_matrix(s, classes);
    report.rhs = VecGF2(classes.size());

    if (!pin_plus_exists_surface(s)) {
        finish_report(report, report.plus_structures, std::nullopt, [&](const VecGF2&) { return EnhancementPlus::base(s); });
        Certificate cert;
        cert.surface_obstruction = true;
        cert.summary = s.name() + " is closed non-orientable with odd Euler characteristic " +
                       std::to_string(s.euler_characteristic()) + "; it carries no Pin+ structure";
        report.certificate = std::move(cert);
        return report;
    }

    const EnhancementPlus base = EnhancementPlus::base(s);
    if (!is_well_defined(base)) throw InvariantViolation("base q+ fails the relation check on " + s.name());

    // q(c) = q0(c) + l(c), so q(c) = target  <=>  l(c) = target + q0(c) (mod 2).
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const HomologyClass c = HomologyClass::z4(classes[i].coords());
        report.rhs.set(i, ((target + eval_qplus(base, c)) & 1u) != 0);
    }

    const auto solution = solve_affine_gf2(report.system, report.rhs);
    finish_report(report, report.plus_structures, solution, [&](const VecGF2& x) {
        VecZ4 v(x.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = x.get(i) ? 1 : 0;
        return EnhancementPlus(s, std::move(v));
    });
    if (report.exists) return report;

    Certificate cert;
    cert.combination = set_bits(*inconsistent_row_combination(report.system, report.rhs));
    std::vector<std::string> names;
    std::vector<std::string> rhs_names;
    for (auto i : cert.combination) {
        names.push_back(labels[i]);
        rhs_names.push_back(subscript_label("A", i + 1));
    }
    std::ostringstream out;
    out << join(names, "+") << "≡0 mod 2 but " << join(rhs_names, "+") << "=1, so rank(C)=" << report.rank_system
        << "≠rank(C|A)=" << report.rank_augmented;
    cert.summary = out.str();
    report.certificate = std::move(cert);
    return report;
}

DecisionReport decide_pin_minus(const LefschetzFibration& f) { return solve_minus_constraints(f.fiber(), f.cycles(), 2); }

DecisionReport decide_pin_plus(const LefschetzFibration& f) { return solve_plus_constraints(f.fiber(), f.cycles(), 1); }

// ---------------------------------------------------------------------------

namespace {

// Z/2 intersection of classes packed into single words (rank <= 62).
struct PackedForm {
    std::uint64_t crosscaps = 0;  // mask of self-intersecting generators
    std::uint64_t symplectic = 0; // mask of generators paired with their neighbour
    bool orientable = true;

    explicit PackedForm(const SurfaceModel& s) : orientable(s.is_orientable()) {
        if (orientable)
            for (std::size_t i = 0; i < 2 * s.genus_or_crosscaps(); ++i) symplectic |= std::uint64_t{1} << i;
        else
            for (std::size_t i = 0; i < s.genus_or_crosscaps(); ++i) crosscaps |= std::uint64_t{1} << i;
    }

    bool dot(std::uint64_t x, std::uint64_t y) const {
        if (!orientable) return (std::popcount(x & y & crosscaps) & 1) != 0;
        const std::uint64_t even = 0x5555555555555555ull;
        const std::uint64_t ys = y & symplectic;
        const std::uint64_t swapped = ((ys & even) << 1) | ((ys >> 1) & even);
        return (std::popcount(x & swapped) & 1) != 0;
    }
};

}  // namespace

std::optional<CycleRelationWitness> find_cycle_relation_witness(const LefschetzFibration& f) {
    const std::size_t n = f.cycles().size();
    if (n > kMaxWitnessSearchCycles)
        throw InputError("witness search refused: " + std::to_string(n) + " cycles (limit " +
                         std::to_string(kMaxWitnessSearchCycles) + ")");
    if (n == 0) return std::nullopt;

    const PackedForm form(f.fiber());
    std::vector<std::uint64_t> cls(n);
    for (std::size_t i = 0; i < n; ++i) {
        const VecGF2 v = f.cycles()[i].reduce_mod2();
        cls[i] = v.words().empty() ? 0 : v.words()[0];
    }

    // For each subset S: sum[S] = sum of its classes, parity[S] = |S| + sum_{i<j in S} c_i.c_j (mod 2).
    // Adding the lowest member m to S' = S - m changes the parity by 1 + c_m.sum[S'].
    const std::size_t total = std::size_t{1} << n;
    std::vector<std::uint64_t> sum(total, 0);
    std::vector<std::uint8_t> parity(total, 0);
    for (std::size_t mask = 1; mask < total; ++mask) {
        const std::size_t m = static_cast<std::size_t>(std::countr_zero(mask));
        const std::size_t prev = mask & (mask - 1);
        sum[mask] = sum[prev] ^ cls[m];
        parity[mask] = static_cast<std::uint8_t>(parity[prev] ^ 1u ^ (form.dot(cls[m], sum[prev]) ? 1u : 0u));
    }

    for (std::size_t base = 0; base < n; ++base) {
        const std::size_t bit = std::size_t{1} << base;
        for (std::size_t mask = 0; mask < total; ++mask) {
            if ((mask & bit) || sum[mask] != cls[base] || parity[mask] != 0) continue;
            CycleRelationWitness w{base, {}};
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) w.others.push_back(i);
            return w;
        }
    }
    return std::nullopt;
}

std::vector<VecGF2> fibration_h1_annihilator(const LefschetzFibration& f) { return annihilator_gf2(f.z2_cycle_matrix()); }

SphereVerdicts decide_pin_over_s2(const LefschetzFibration& f, const EmbeddedSurfaceData& dual) {
    validate(dual);
    SphereVerdicts v;
    v.minus_surface_term = static_cast<std::uint8_t>(dual.self_intersection ^ dual.cup_term ^ dual.w1sq_normal);
    v.plus_surface_term = static_cast<std::uint8_t>(dual.euler_char ^ dual.self_intersection ^ dual.cup_term);
    v.pin_minus = decide_pin_minus(f).exists && v.minus_surface_term == 0;
    v.pin_plus = decide_pin_plus(f).exists && v.plus_surface_term == 0;
    return v;
}

// ---------------------------------------------------------------------------

std::vector<EnhancementMinus> exhaustive_minus_solutions(const SurfaceModel& s, std::span<const HomologyClass> classes,
                                                         std::uint8_t target) {
    std::vector<EnhancementMinus> out;
    for (auto& q : enumerate_minus_enhancements(s)) {
        const bool ok = std::all_of(classes.begin(), classes.end(),
                                    [&](const HomologyClass& c) { return eval_qminus(q, c) == target; });
        if (ok) out.push_back(std::move(q));
    }
    return out;
}

std::vector<EnhancementPlus> exhaustive_plus_solutions(const SurfaceModel& s, std::span<const HomologyClass> classes,
                                                       std::uint8_t target) {
    std::vector<EnhancementPlus> out;
    if (s.z2_rank() > kMaxEnumerationRank) throw InputError("exhaustive search refused: rank above the enumeration limit");
    const std::size_t r = s.z2_rank();
    // Candidates are generated directly so surfaces without Pin+ are still
    // searched (and every candidate then fails the relation check).
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << r); ++bits) {
        VecZ4 v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = (bits >> (r - 1 - i)) & 1u;
        EnhancementPlus q(s, std::move(v));
        if (!is_well_defined(q)) continue;
        const bool ok = std::all_of(classes.begin(), classes.end(), [&](const HomologyClass& c) {
            return eval_qplus(q, HomologyClass::z4(c.coords())) == target;
        });
        if (ok) out.push_back(std::move(q));
    }
    return out;
}

}  // namespace pinlef
