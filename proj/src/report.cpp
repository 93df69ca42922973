#include "pinlef/report.hpp"

#include <algorithm>
#include <sstream>

#include "pinlef/errors.hpp"

namespace pinlef {

namespace {

struct Problem {
    const SurfaceModel* surface;
    std::vector<HomologyClass> classes;
    std::vector<std::string> labels;
    bool threefold;
};

Problem problem_of(const InputDocument& doc) {
    if (doc.threefold) {
        const auto& d = *doc.threefold;
        return {&d.boundary(), d.constraint_classes(), d.constraint_labels(), true};
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < doc.cycles.size(); ++i) labels.push_back(subscript_label("c", i + 1));
    return {&doc.surface, doc.cycles, labels, false};
}

std::uint8_t target_of(const Problem& p, PinKind kind) {
    if (p.threefold) return 0;
    return kind == PinKind::minus ? 2 : 1;
}

std::vector<PinKind> kinds_of(KindSelection sel) {
    switch (sel) {
        case KindSelection::minus: return {PinKind::minus};
        case KindSelection::plus: return {PinKind::plus};
        case KindSelection::both: break;
    }
    return {PinKind::plus, PinKind::minus};
}

DecisionReport decide(const Problem& p, PinKind kind) {
    return kind == PinKind::minus ? solve_minus_constraints(*p.surface, p.classes, target_of(p, kind), p.labels)
                                  : solve_plus_constraints(*p.surface, p.classes, target_of(p, kind), p.labels);
}

std::string plural(std::uint64_t n, const std::string& word) {
    return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

std::string join_values(const VecZ4& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(int(v[i]));
    }
    return out;
}

std::string bits(const VecGF2& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v.get(i) ? '1' : '0';
    }
    return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string kind_key(PinKind kind) { return kind == PinKind::minus ? "pin-minus" : "pin-plus"; }

// Generator values of the listed structures, smallest first.
std::vector<VecZ4> structure_values(const DecisionReport& r) {
    std::vector<VecZ4> out;
    for (const auto& q : r.minus_structures) out.push_back(q.values());
    for (const auto& q : r.plus_structures) out.push_back(q.values());
    return out;
}

std::string describe_object(const InputDocument& doc, const Problem& p) {
    if (p.threefold)
        return "closed 3-manifold from a genus-" + std::to_string(doc.threefold->genus()) +
               " non-orientable handlebody, boundary " + p.surface->name();
    return "Lefschetz fibration over D² with fiber " + p.surface->name() + ", " +
           plural(p.classes.size(), "vanishing cycle");
}

// An unsolvable Pin- system on a 3-manifold means the data is not a decomposition.
bool invalid_threefold(const Problem& p, const DecisionReport& r) {
    return p.threefold && r.kind == PinKind::minus && !r.exists;
}

std::string summary_item(const Problem& p, const DecisionReport& r) {
    std::string out = to_string(r.kind) + ": ";
    if (invalid_threefold(p, r)) return out + "INVALID INPUT (certificate: " + r.certificate->summary + ")";
    if (r.exists) return out + "YES (" + plural(r.structure_count, "structure") + ")";
    return out + "NO (certificate: " + r.certificate->summary + ")";
}

std::string witness_text(const CycleRelationWitness& w, const std::vector<std::string>& labels) {
    std::string out = "c₀ = " + labels[w.base] + ", {";
    for (std::size_t i = 0; i < w.others.size(); ++i) out += (i ? ", " : "") + labels[w.others[i]];
    return out + "}, k = " + std::to_string(w.k());
}

void text_system(std::ostringstream& out, const Problem& p, const DecisionReport& r,
                 const std::vector<std::string>& generators) {
    std::size_t width = 0;
    for (const auto& l : p.labels) width = std::max(width, l.size());
    out << "  system C | A over " << (generators.empty() ? "(no generators)" : "");
    for (std::size_t i = 0; i < generators.size(); ++i) out << (i ? " " : "") << generators[i];
    out << "\n";
    if (r.system.rows() == 0) out << "    (no constraints)\n";
    for (std::size_t i = 0; i < r.system.rows(); ++i) {
        out << "    " << p.labels[i] << std::string(width - p.labels[i].size(), ' ') << "  "
            << bits(r.system.row(i), " ") << (r.system.cols() ? " " : "") << "| " << (r.rhs.get(i) ? 1 : 0) << "\n";
    }
}

void text_kind_block(std::ostringstream& out, const Problem& p, const DecisionReport& r,
                     const std::vector<std::string>& generators) {
    out << "\n" << to_string(r.kind) << "\n";
    if (invalid_threefold(p, r))
        out << "  verdict: INVALID INPUT (no q⁻ vanishes on every attaching and belt circle)\n";
    else
        out << "  verdict: " << (r.exists ? "YES" : "NO") << "\n";
    out << "  structures: " << r.structure_count << "\n";
    out << "  annihilator dimension: " << r.h1_annihilator_dim << "\n";
    out << "  rank(C) = " << r.rank_system << ", rank(C|A) = " << r.rank_augmented << "\n";
    text_system(out, p, r, generators);
    if (r.exists) {
        const auto values = structure_values(r);
        out << "  canonical structure:";
        for (std::size_t i = 0; i < generators.size(); ++i) out << " q(" << generators[i] << ")=" << int(values.front()[i]);
        if (generators.empty()) out << " (empty)";
        out << "\n";
        if (r.structures_truncated) out << "  (structure list truncated to the canonical one)\n";
    }
    if (r.certificate) {
        out << "  certificate: " << r.certificate->summary << "\n";
        if (!r.certificate->combination.empty()) {
            out << "  inconsistent rows:";
            for (auto i : r.certificate->combination) out << " " << p.labels[i];
            out << "\n";
        }
        if (r.certificate->witness) out << "  cycle relation: " << witness_text(*r.certificate->witness, p.labels) << "\n";
    }
}

void text_surfaces(std::ostringstream& out, const InputDocument& doc, const std::optional<bool>& minus_disk,
                   const std::optional<bool>& plus_disk) {
    const auto gens = doc.generator_surfaces();
    if (!gens.empty()) {
        out << "\nembedded surfaces (taken to generate H₂(M;Z₂))\n";
        for (std::size_t i = 0; i < gens.size(); ++i)
            out << "  " << subscript_label("σ", i + 1) << ": <w₂,σ> = " << int(eval_w2(gens[i]))
                << ", <w₁²,σ> = " << int(eval_w1sq(gens[i])) << "\n";
        const auto s = pin_obstruction_summary(gens);
        out << "  summary: Pin⁺ " << (s.pin_plus_obstructed ? "obstructed" : "unobstructed") << ", Pin⁻ "
            << (s.pin_minus_obstructed ? "obstructed" : "unobstructed") << "\n";
    }
    if (const auto dual = doc.dual_surface()) {
        const auto v = decide_pin_over_s2(doc.fibration(), *dual);
        out << "\nclosed up over S² along the dual surface\n";
        if (plus_disk)
            out << "  Pin+: " << (v.pin_plus ? "YES" : "NO") << " (disk part " << (*plus_disk ? "YES" : "NO")
                << ", surface term " << int(v.plus_surface_term) << ")\n";
        if (minus_disk)
            out << "  Pin-: " << (v.pin_minus ? "YES" : "NO") << " (disk part " << (*minus_disk ? "YES" : "NO")
                << ", surface term " << int(v.minus_surface_term) << ")\n";
    }
}

void machine_kind_block(std::ostringstream& out, const Problem& p, const DecisionReport& r) {
    out << "\n[" << kind_key(r.kind) << "]\n";
    out << "exists = " << yes_no(r.exists) << "\n";
    if (invalid_threefold(p, r)) out << "invalid_input = yes\n";
    out << "structure_count = " << r.structure_count << "\n";
    out << "annihilator_dim = " << r.h1_annihilator_dim << "\n";
    out << "rank_system = " << r.rank_system << "\n";
    out << "rank_augmented = " << r.rank_augmented << "\n";
    for (std::size_t i = 0; i < r.system.rows(); ++i)
        out << "row = " << p.labels[i] << " : " << bits(r.system.row(i), ", ") << " | " << (r.rhs.get(i) ? 1 : 0)
            << "\n";
    if (r.exists) out << "canonical = " << join_values(structure_values(r).front(), ", ") << "\n";
    if (r.certificate) {
        out << "certificate = " << r.certificate->summary << "\n";
        out << "surface_obstruction = " << yes_no(r.certificate->surface_obstruction) << "\n";
        if (!r.certificate->combination.empty()) {
            out << "combination =";
            for (auto i : r.certificate->combination) out << " " << p.labels[i];
            out << "\n";
        }
        if (const auto& w = r.certificate->witness) {
            out << "witness_base = " << p.labels[w->base] << "\nwitness_others =";
            for (auto i : w->others) out << " " << p.labels[i];
            out << "\nwitness_k = " << w->k() << "\n";
        }
    }
}

void machine_surfaces(std::ostringstream& out, const InputDocument& doc, const std::optional<bool>& minus_disk,
                      const std::optional<bool>& plus_disk) {
    const auto gens = doc.generator_surfaces();
    if (!gens.empty()) {
        out << "\n[charclasses]\n";
        for (const auto& g : gens) out << "surface = " << int(eval_w2(g)) << ", " << int(eval_w1sq(g)) << "\n";
        const auto s = pin_obstruction_summary(gens);
        out << "pin_plus_obstructed = " << yes_no(s.pin_plus_obstructed) << "\n";
        out << "pin_minus_obstructed = " << yes_no(s.pin_minus_obstructed) << "\n";
    }
    if (const auto dual = doc.dual_surface()) {
        const auto v = decide_pin_over_s2(doc.fibration(), *dual);
        out << "\n[sphere]\n";
        if (plus_disk) out << "pin_plus = " << yes_no(v.pin_plus) << "\nplus_surface_term = " << int(v.plus_surface_term) << "\n";
        if (minus_disk)
            out << "pin_minus = " << yes_no(v.pin_minus) << "\nminus_surface_term = " << int(v.minus_surface_term) << "\n";
    }
}

RunResult run_decide(const InputDocument& doc, KindSelection sel, OutputFormat format) {
    const Problem p = problem_of(doc);
    const auto generators = homology_presentation(*p.surface).generators;
    std::vector<DecisionReport> reports;
    for (auto k : kinds_of(sel)) reports.push_back(decide(p, k));

    int exit_code = 0;
    std::optional<bool> minus_disk, plus_disk;
    for (const auto& r : reports) {
        if (invalid_threefold(p, r)) exit_code = 2;
        else if (!r.exists && exit_code == 0) exit_code = 1;
        (r.kind == PinKind::minus ? minus_disk : plus_disk) = r.exists;
    }

    std::ostringstream out;
    if (format == OutputFormat::text) {
        out << describe_object(doc, p) << "\n";
        for (std::size_t i = 0; i < reports.size(); ++i) out << (i ? "; " : "") << summary_item(p, reports[i]);
        out << "\n";
        for (const auto& r : reports) text_kind_block(out, p, r, generators);
        if (!p.threefold) text_surfaces(out, doc, minus_disk, plus_disk);
    } else {
        out << "[decide]\nobject = " << (p.threefold ? "threefold" : "fibration") << "\nsurface = " << p.surface->name()
            << "\nconstraints = " << p.classes.size() << "\n";
        for (const auto& r : reports) machine_kind_block(out, p, r);
        if (!p.threefold) machine_surfaces(out, doc, minus_disk, plus_disk);
    }
    return {out.str(), exit_code};
}

RunResult run_enumerate(const InputDocument& doc, KindSelection sel, OutputFormat format) {
    const Problem p = problem_of(doc);
    const auto generators = homology_presentation(*p.surface).generators;
    std::ostringstream out;
    int exit_code = 0;
    for (auto k : kinds_of(sel)) {
        const DecisionReport r = decide(p, k);
        if (invalid_threefold(p, r)) exit_code = 2;
        else if (!r.exists && exit_code == 0) exit_code = 1;
        const auto values = structure_values(r);
        if (format == OutputFormat::text) {
            out << to_string(k) << ": " << plural(r.structure_count, "structure");
            if (r.structures_truncated) out << " (too many to list; showing the smallest)";
            out << "\n     #";
            for (const auto& g : generators) out << "  " << g;
            out << "\n";
            for (std::size_t i = 0; i < values.size(); ++i) {
                std::string idx = std::to_string(i + 1);
                out << std::string(idx.size() < 6 ? 6 - idx.size() : 0, ' ') << idx;
                for (std::size_t j = 0; j < generators.size(); ++j)
                    out << std::string(generators[j].size() + 1, ' ') << int(values[i][j]);
                out << "\n";
            }
            if (values.empty()) out << "     (no structures)\n";
            if (r.certificate) out << "  certificate: " << r.certificate->summary << "\n";
            out << "\n";
        } else {
            out << "[" << kind_key(k) << "]\nstructure_count = " << r.structure_count
                << "\ntruncated = " << yes_no(r.structures_truncated) << "\n";
            for (const auto& v : values) out << "structure = " << join_values(v, ", ") << "\n";
            if (r.certificate) out << "certificate = " << r.certificate->summary << "\n";
            out << "\n";
        }
    }
    std::string text = out.str();
    if (!text.empty()) text.pop_back();
    return {text, exit_code};
}

RunResult run_oracle(const InputDocument& doc, KindSelection sel, OutputFormat format) {
    const Problem p = problem_of(doc);
    const std::size_t rank = p.surface->z2_rank();
    if (rank > kMaxOracleRank)
        return {"oracle refused: " + p.surface->name() + " has Z/2 rank " + std::to_string(rank) +
                    ", above the exhaustive-search limit of " + std::to_string(kMaxOracleRank) + "\n",
                2};

    std::ostringstream out;
    if (format == OutputFormat::machine) out << "[oracle]\nsurface = " << p.surface->name() << "\ncandidates = " << (std::uint64_t{1} << rank) << "\n";
    bool all_agree = true;
    for (auto k : kinds_of(sel)) {
        const DecisionReport r = decide(p, k);
        const std::uint8_t target = target_of(p, k);
        std::vector<VecZ4> brute;
        if (k == PinKind::minus)
            for (const auto& q : exhaustive_minus_solutions(*p.surface, p.classes, target)) brute.push_back(q.values());
        else
            for (const auto& q : exhaustive_plus_solutions(*p.surface, p.classes, target)) brute.push_back(q.values());
        std::sort(brute.begin(), brute.end());

        bool agree = r.exists == !brute.empty() && r.structure_count == brute.size() && structure_values(r) == brute;

        std::string witness_note;
        bool witness_checked = false, witness_found = false;
        if (k == PinKind::minus && !p.threefold) {
            if (p.classes.size() <= kMaxWitnessSearchCycles) {
                witness_checked = true;
                witness_found = find_cycle_relation_witness(doc.fibration()).has_value();
                agree = agree && witness_found == brute.empty();
                witness_note = witness_found ? "cycle-relation witness found" : "no cycle-relation witness";
            } else {
                witness_note = "cycle-relation search skipped (too many cycles)";
            }
        }
        all_agree = all_agree && agree;

        if (format == OutputFormat::text) {
            out << to_string(k) << ": " << (agree ? "AGREE" : "DISAGREE") << " (decider " << (r.exists ? "YES" : "NO")
                << " with " << plural(r.structure_count, "structure") << "; exhaustive search kept " << brute.size()
                << " of " << (std::uint64_t{1} << rank) << " candidates";
            if (!witness_note.empty()) out << "; " << witness_note;
            out << ")\n";
        } else {
            out << "\n[" << kind_key(k) << "]\nagree = " << yes_no(agree) << "\ndecider_exists = " << yes_no(r.exists)
                << "\ndecider_count = " << r.structure_count << "\nexhaustive_count = " << brute.size() << "\n";
            if (witness_checked) out << "witness_found = " << yes_no(witness_found) << "\n";
        }
    }
    return {out.str(), all_agree ? 0 : 1};
}

RunResult run_surface_info(const InputDocument& doc, OutputFormat format) {
    const SurfaceModel& s = doc.surface;
    const HomologyPresentation pr = homology_presentation(s);
    std::ostringstream out;
    const std::string count_word = s.is_orientable() ? "genus" : "crosscaps";
    if (format == OutputFormat::text) {
        out << "surface: " << s.name() << "\n";
        out << "kind: " << (s.is_orientable() ? "orientable" : "non-orientable") << ", " << count_word << " "
            << s.genus_or_crosscaps() << ", " << plural(s.boundary_components(), "boundary component") << "\n";
        out << "Euler characteristic: " << s.euler_characteristic() << "\n";
        out << "Z/2 rank: " << pr.z2_rank << "\n";
        out << "generators:";
        for (const auto& g : pr.generators) out << " " << g;
        if (pr.generators.empty()) out << " (none)";
        out << "\nintersection matrix (mod 2):\n";
        std::size_t width = 0;
        for (const auto& g : pr.generators) width = std::max(width, g.size());
        for (std::size_t i = 0; i < pr.z2_rank; ++i)
            out << "  " << pr.generators[i] << std::string(width - pr.generators[i].size(), ' ') << "  "
                << bits(pr.z2_intersection.row(i), " ") << "\n";
        out << "Z/4 relations:";
        if (pr.z4_relations.rows() == 0) out << " none\n";
        else out << "\n";
        for (const auto& row : pr.z4_relations.row_list()) out << "  " << join_values(row, " ") << "\n";
        out << "Pin+ structures on the surface: " << yes_no(pin_plus_exists_surface(s)) << "\n";
        out << "Pin- structures on the surface: yes\n";
    } else {
        out << "[surface]\nname = " << s.name() << "\nkind = " << (s.is_orientable() ? "orientable" : "non-orientable")
            << "\n" << count_word << " = " << s.genus_or_crosscaps() << "\nboundary = " << s.boundary_components()
            << "\neuler_characteristic = " << s.euler_characteristic() << "\nz2_rank = " << pr.z2_rank
            << "\ngenerators =";
        for (const auto& g : pr.generators) out << " " << g;
        out << "\n";
        for (std::size_t i = 0; i < pr.z2_rank; ++i) out << "intersection = " << bits(pr.z2_intersection.row(i), ", ") << "\n";
        for (const auto& row : pr.z4_relations.row_list()) out << "relation = " << join_values(row, ", ") << "\n";
        out << "pin_plus = " << yes_no(pin_plus_exists_surface(s)) << "\n";
    }
    return {out.str(), 0};
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
    if (name == "decide") return Command::decide;
    if (name == "enumerate") return Command::enumerate;
    if (name == "oracle") return Command::oracle;
    if (name == "surface-info") return Command::surface_info;
    return std::nullopt;
}

std::optional<KindSelection> parse_kind(std::string_view name) {
    if (name == "minus") return KindSelection::minus;
    if (name == "plus") return KindSelection::plus;
    if (name == "both") return KindSelection::both;
    return std::nullopt;
}

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "text") return OutputFormat::text;
    if (name == "machine") return OutputFormat::machine;
    return std::nullopt;
}

RunResult run(Command command, const InputDocument& doc, KindSelection kinds, OutputFormat format) {
    try {
        switch (command) {
            case Command::decide: return run_decide(doc, kinds, format);
            case Command::enumerate: return run_enumerate(doc, kinds, format);
            case Command::oracle: return run_oracle(doc, kinds, format);
            case Command::surface_info: return run_surface_info(doc, format);
        }
    } catch (const InputError& e) {
        return {std::string("input error: ") + e.what() + "\n", 2};
    } catch (const InvariantViolation& e) {
        return {std::string("input error: ") + e.what() + "\n", 2};
    }
    return {"unknown command\n", 2};
}

RunResult run_text(Command command, std::string_view text, KindSelection kinds, OutputFormat format) {
    std::optional<InputDocument> doc;
    try {
        doc.emplace(parse_document(text));
    } catch (const InputError& e) {
        return {std::string("input error: ") + e.what() + "\n", 2};
    } catch (const InvariantViolation& e) {
        return {std::string("input error: ") + e.what() + "\n", 2};
    }
    return run(command, *doc, kinds, format);
}

}  // namespace pinlef
