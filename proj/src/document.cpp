#include "pinlef/document.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace pinlef {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Entry {
    std::size_t line;
    std::string key;    // empty for bare rows
    std::string value;
};

struct Section {
    std::string name;
    std::size_t line;
    std::vector<Entry> entries;
};

std::size_t parse_count(const Entry& e) {
    std::size_t out = 0;
    const auto* first = e.value.data();
    const auto* last = first + e.value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last || e.value.empty())
        throw ParseError(e.line, "'" + e.key + "' expects a non-negative integer, got '" + e.value + "'");
    return out;
}

std::uint8_t parse_bit(const Entry& e) {
    const std::size_t v = parse_count(e);
    if (v > 1) throw ParseError(e.line, "'" + e.key + "' is a residue mod 2, got " + e.value);
    return static_cast<std::uint8_t>(v);
}

VecZ4 parse_row(std::size_t line, std::string_view text) {
    VecZ4 row;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view tok = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError(line, "expected an integer coefficient, got '" + std::string(tok) + "'");
        if (value < 0 || value > 3)
            throw ParseError(line, "coefficient " + std::string(tok) + " is not a residue mod 4 (0..3)");
        row.push_back(static_cast<std::uint8_t>(value));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return row;
}

std::vector<Section> split_sections(std::string_view text) {
    static const std::vector<std::string> known = {"surface", "cycles", "threefold", "embedded-surface"};
    std::vector<Section> sections;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const std::string_view line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(line_no, "malformed section header");
            std::string name(trim(line.substr(1, line.size() - 2)));
            if (std::find(known.begin(), known.end(), name) == known.end())
                throw ParseError(line_no, "unknown section [" + name + "]");
            if (name != "embedded-surface") {
                for (const auto& s : sections)
                    if (s.name == name) throw ParseError(line_no, "duplicate section [" + name + "]");
            }
            sections.push_back({std::move(name), line_no, {}});
            continue;
        }
        if (sections.empty()) throw ParseError(line_no, "content before the first section header");

        Entry e{line_no, {}, {}};
        if (const auto eq = line.find('='); eq != std::string_view::npos) {
            e.key = std::string(trim(line.substr(0, eq)));
            e.value = std::string(trim(line.substr(eq + 1)));
            if (e.key.empty()) throw ParseError(line_no, "missing key before '='");
        } else {
            e.value = std::string(line);
        }
        sections.back().entries.push_back(std::move(e));
    }
    return sections;
}

// Keyed entries of a section, rejecting bare rows, unknown keys and (unless
// repeatable) duplicates.
std::multimap<std::string, Entry> keyed(const Section& s, const std::vector<std::string>& allowed,
                                        const std::vector<std::string>& repeatable = {}) {
    std::multimap<std::string, Entry> out;
    for (const auto& e : s.entries) {
        if (e.key.empty()) throw ParseError(e.line, "expected 'key = value' in [" + s.name + "]");
        if (std::find(allowed.begin(), allowed.end(), e.key) == allowed.end())
            throw ParseError(e.line, "unknown key '" + e.key + "' in [" + s.name + "]");
        if (out.count(e.key) && std::find(repeatable.begin(), repeatable.end(), e.key) == repeatable.end())
            throw ParseError(e.line, "duplicate key '" + e.key + "'");
        out.emplace(e.key, e);
    }
    return out;
}

const Entry& require(const std::multimap<std::string, Entry>& m, const Section& s, const std::string& key) {
    auto it = m.find(key);
    if (it == m.end()) throw ParseError(s.line, "[" + s.name + "] is missing '" + key + "'");
    return it->second;
}

SurfaceModel parse_surface(const Section& s) {
    const auto m = keyed(s, {"kind", "genus", "crosscaps", "boundary"});
    const Entry& kind = require(m, s, "kind");
    std::size_t boundary = 0;
    if (auto it = m.find("boundary"); it != m.end()) boundary = parse_count(it->second);
    try {
        if (kind.value == "orientable") {
            if (auto it = m.find("crosscaps"); it != m.end())
                throw ParseError(it->second.line, "'crosscaps' is not valid for an orientable surface (use 'genus')");
            return SurfaceModel::orientable(parse_count(require(m, s, "genus")), boundary);
        }
        if (kind.value == "non-orientable") {
            if (auto it = m.find("genus"); it != m.end())
                throw ParseError(it->second.line, "'genus' is not valid for a non-orientable surface (use 'crosscaps')");
            return SurfaceModel::non_orientable(parse_count(require(m, s, "crosscaps")), boundary);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& err) {
        throw ParseError(s.line, err.what());
    }
    throw ParseError(kind.line, "kind must be 'orientable' or 'non-orientable', got '" + kind.value + "'");
}

void check_arity(std::size_t line, const VecZ4& row, const SurfaceModel& surface, const std::string& what) {
    if (row.size() != surface.z2_rank())
        throw ParseError(line, what + " has " + std::to_string(row.size()) + " coefficients but " + surface.name() +
                                   " has " + std::to_string(surface.z2_rank()) + " generators");
}

std::string join_row(const VecZ4& row) {
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(int(row[i]));
    }
    return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& reason)
    : InputError(line == 0 ? reason : "line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

std::vector<EmbeddedSurfaceData> InputDocument::generator_surfaces() const {
    std::vector<EmbeddedSurfaceData> out;
    for (const auto& b : embedded_surfaces)
        if (b.role == SurfaceRole::generator) out.push_back(b.data);
    return out;
}

std::optional<EmbeddedSurfaceData> InputDocument::dual_surface() const {
    for (const auto& b : embedded_surfaces)
        if (b.role == SurfaceRole::dual) return b.data;
    return std::nullopt;
}

InputDocument parse_document(std::string_view text) {
    const auto sections = split_sections(text);
    const auto find = [&](const std::string& name) -> const Section* {
        for (const auto& s : sections)
            if (s.name == name) return &s;
        return nullptr;
    };

    const Section* surface_section = find("surface");
    if (!surface_section) throw ParseError(0, "missing surface block");
    InputDocument doc{parse_surface(*surface_section), {}, std::nullopt, {}};

    const Section* cycles = find("cycles");
    const Section* threefold = find("threefold");
    if (cycles && threefold)
        throw ParseError(threefold->line, "[cycles] and [threefold] cannot appear in the same document");

    if (cycles) {
        for (const auto& e : cycles->entries) {
            if (!e.key.empty()) throw ParseError(e.line, "[cycles] takes one coefficient row per line, not keys");
            VecZ4 row = parse_row(e.line, e.value);
            check_arity(e.line, row, doc.surface, "cycle");
            HomologyClass c = HomologyClass::z4(std::move(row));
            if (self_intersection(doc.surface, c))
                throw ParseError(e.line, "cycle " + std::to_string(doc.cycles.size() + 1) +
                                             " has odd self-intersection (vanishing cycles are two-sided)");
            doc.cycles.push_back(std::move(c));
        }
    }

    if (threefold) {
        const auto m = keyed(*threefold, {"genus", "attaching", "belt"}, {"attaching", "belt"});
        const std::size_t genus = parse_count(require(m, *threefold, "genus"));
        if (genus == 0) throw ParseError(require(m, *threefold, "genus").line, "handlebody genus must be at least 1");
        if (!(doc.surface == SurfaceModel::non_orientable(2 * genus, 0)))
            throw ParseError(surface_section->line, "a genus-" + std::to_string(genus) +
                                                        " threefold needs [surface] non-orientable with crosscaps = " +
                                                        std::to_string(2 * genus) + " and boundary = 0");
        std::vector<HomologyClass> attaching;
        std::vector<HomologyClass> belt;
        for (const auto& e : threefold->entries) {
            if (e.key == "genus") continue;
            VecZ4 row = parse_row(e.line, e.value);
            check_arity(e.line, row, doc.surface, e.key + " class");
            HomologyClass c = HomologyClass::z4(std::move(row));
            if (self_intersection(doc.surface, c))
                throw ParseError(e.line, e.key + " class has odd self-intersection");
            (e.key == "attaching" ? attaching : belt).push_back(std::move(c));
        }
        if (attaching.size() != genus || belt.size() != genus)
            throw ParseError(threefold->line, "genus " + std::to_string(genus) + " needs exactly " +
                                                  std::to_string(genus) + " attaching and " + std::to_string(genus) +
                                                  " belt rows, got " + std::to_string(attaching.size()) + " and " +
                                                  std::to_string(belt.size()));
        doc.threefold.emplace(genus, std::move(attaching), std::move(belt));
    }

    bool have_dual = false;
    for (const auto& s : sections) {
        if (s.name != "embedded-surface") continue;
        if (threefold)
            throw ParseError(s.line, "[embedded-surface] describes a 4-manifold and cannot accompany [threefold]");
        const auto m = keyed(s, {"euler_char", "self_intersection", "cup_term", "w1sq_sigma", "w1sq_normal", "role"});
        EmbeddedSurfaceBlock block;
        block.data.euler_char = parse_bit(require(m, s, "euler_char"));
        block.data.self_intersection = parse_bit(require(m, s, "self_intersection"));
        block.data.cup_term = parse_bit(require(m, s, "cup_term"));
        block.data.w1sq_sigma = parse_bit(require(m, s, "w1sq_sigma"));
        block.data.w1sq_normal = parse_bit(require(m, s, "w1sq_normal"));
        if (auto it = m.find("role"); it != m.end()) {
            if (it->second.value == "dual") {
                if (have_dual) throw ParseError(it->second.line, "only one dual surface may be given");
                block.role = SurfaceRole::dual;
                have_dual = true;
            } else if (it->second.value != "generator") {
                throw ParseError(it->second.line, "role must be 'generator' or 'dual'");
            }
        }
        doc.embedded_surfaces.push_back(block);
    }
    return doc;
}

std::string serialize_document(const InputDocument& doc) {
    std::ostringstream out;
    const SurfaceModel& s = doc.surface;
    out << "[surface]\n";
    if (s.is_orientable())
        out << "kind = orientable\ngenus = " << s.genus_or_crosscaps() << "\n";
    else
        out << "kind = non-orientable\ncrosscaps = " << s.genus_or_crosscaps() << "\n";
    out << "boundary = " << s.boundary_components() << "\n";

    if (!doc.cycles.empty()) {
        if (s.z2_rank() == 0)
            throw InputError("cycles on " + s.name() + " have no coordinates and cannot be written");
        out << "\n[cycles]\n";
        for (const auto& c : doc.cycles) out << join_row(c.coords()) << "\n";
    }
    if (doc.threefold) {
        out << "\n[threefold]\ngenus = " << doc.threefold->genus() << "\n";
        for (const auto& a : doc.threefold->attaching()) out << "attaching = " << join_row(a.coords()) << "\n";
        for (const auto& b : doc.threefold->belt()) out << "belt = " << join_row(b.coords()) << "\n";
    }
    for (const auto& b : doc.embedded_surfaces) {
        out << "\n[embedded-surface]\n"
            << "euler_char = " << int(b.data.euler_char) << "\n"
            << "self_intersection = " << int(b.data.self_intersection) << "\n"
            << "cup_term = " << int(b.data.cup_term) << "\n"
            << "w1sq_sigma = " << int(b.data.w1sq_sigma) << "\n"
            << "w1sq_normal = " << int(b.data.w1sq_normal) << "\n"
            << "role = " << (b.role == SurfaceRole::dual ? "dual" : "generator") << "\n";
    }
    return out.str();
}

}  // namespace pinlef
