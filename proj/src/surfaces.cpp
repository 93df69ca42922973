#include "pinlef/surfaces.hpp"

#include <algorithm>

#include "pinlef/errors.hpp"

namespace pinlef {

namespace {

// sum_{i<j} a_i a_j g_i.g_j over the integers. Only symplectic pairs of an
// orientable surface intersect off the diagonal.
int off_diagonal_sum(const SurfaceModel& s, const VecZ4& a) {
    if (!s.is_orientable()) return 0;
    int total = 0;
    for (std::size_t t = 0; t < s.genus_or_crosscaps(); ++t) total += a[2 * t] * a[2 * t + 1];
    return total;
}

// H1(N_k; Z) = Z^{k-1} + Z/2 with 2(e_1 + ... + e_k) = 0; tensoring with Z/4
// keeps that single relation. Bounded and orientable surfaces are free.
std::vector<VecZ4> z4_relation_rows(const SurfaceModel& s) {
    if (s.is_orientable() || !s.is_closed()) return {};
    VecZ4 rel(s.z2_rank(), 0);
    for (std::size_t i = 0; i < s.genus_or_crosscaps(); ++i) rel[i] = 2;
    return {rel};
}

bool diagonal(const SurfaceModel& s, std::size_t i) { return !s.is_orientable() && i < s.genus_or_crosscaps(); }

void check_size(const SurfaceModel& s, const HomologyClass& x, const char* what) {
    if (x.size() != s.z2_rank())
        throw InputError(std::string(what) + ": class has " + std::to_string(x.size()) + " coordinates but " +
                         s.name() + " has " + std::to_string(s.z2_rank()) + " generators");
}

}  // namespace

// ---------------------------------------------------------------------------
// SurfaceModel

SurfaceModel::SurfaceModel(Orientability kind, std::size_t count, std::size_t boundary)
    : kind_(kind), count_(count), boundary_(boundary) {
    if (kind == Orientability::non_orientable && count == 0)
        throw InputError("a non-orientable surface needs at least one crosscap");
    if (z2_rank() > kMaxRank)
        throw InputError("surface rank " + std::to_string(z2_rank()) + " exceeds the supported maximum " +
                         std::to_string(kMaxRank));
}

SurfaceModel SurfaceModel::orientable(std::size_t genus, std::size_t boundary) {
    return SurfaceModel(Orientability::orientable, genus, boundary);
}

SurfaceModel SurfaceModel::non_orientable(std::size_t crosscaps, std::size_t boundary) {
    return SurfaceModel(Orientability::non_orientable, crosscaps, boundary);
}

int SurfaceModel::euler_characteristic() const {
    const int c = static_cast<int>(count_);
    const int b = static_cast<int>(boundary_);
    return is_orientable() ? 2 - 2 * c - b : 2 - c - b;
}

std::size_t SurfaceModel::z2_rank() const {
    return (is_orientable() ? 2 * count_ : count_) + boundary_class_count();
}

bool SurfaceModel::generator_dot(std::size_t i, std::size_t j) const {
    if (is_orientable()) {
        const std::size_t sym = 2 * count_;
        return i < sym && j < sym && i / 2 == j / 2 && i != j;
    }
    return i == j && i < count_;
}

bool SurfaceModel::dot(const VecGF2& x, const VecGF2& y) const {
    if (x.size() != z2_rank() || y.size() != z2_rank()) throw InputError("dot: class length does not match surface rank");
    bool acc = false;
    if (is_orientable()) {
        for (std::size_t t = 0; t < count_; ++t)
            acc ^= (x.get(2 * t) && y.get(2 * t + 1)) ^ (x.get(2 * t + 1) && y.get(2 * t));
    } else {
        for (std::size_t i = 0; i < count_; ++i) acc ^= x.get(i) && y.get(i);
    }
    return acc;
}

std::string SurfaceModel::name() const {
    return std::string(is_orientable() ? "Sigma_{" : "N_{") + std::to_string(count_) + "," + std::to_string(boundary_) +
           "}";
}

// ---------------------------------------------------------------------------
// Presentation

HomologyPresentation homology_presentation(const SurfaceModel& s) {
    HomologyPresentation p;
    const std::size_t r = s.z2_rank();
    if (s.is_orientable()) {
        for (std::size_t t = 1; t <= s.genus_or_crosscaps(); ++t) {
            p.generators.push_back("a" + std::to_string(t));
            p.generators.push_back("b" + std::to_string(t));
        }
    } else {
        for (std::size_t t = 1; t <= s.genus_or_crosscaps(); ++t) p.generators.push_back("e" + std::to_string(t));
    }
    for (std::size_t t = 1; t <= s.boundary_class_count(); ++t) p.generators.push_back("d" + std::to_string(t));

    p.z2_rank = r;
    p.z2_intersection = MatGF2(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) p.z2_intersection.set(i, j, s.generator_dot(i, j));

    p.z4_relations = MatZ4::from_rows(r, z4_relation_rows(s));
    return p;
}

// ---------------------------------------------------------------------------
// HomologyClass

HomologyClass::HomologyClass(Coefficients ring, VecZ4 coords) : ring_(ring), coords_(std::move(coords)) {
    const int modulus = ring == Coefficients::z2 ? 2 : 4;
    for (auto& c : coords_) c = static_cast<std::uint8_t>(c % modulus);
}

HomologyClass HomologyClass::z2(VecZ4 coords) { return HomologyClass(Coefficients::z2, std::move(coords)); }
HomologyClass HomologyClass::z4(VecZ4 coords) { return HomologyClass(Coefficients::z4, std::move(coords)); }

HomologyClass HomologyClass::zero(Coefficients ring, std::size_t length) { return HomologyClass(ring, VecZ4(length, 0)); }

HomologyClass HomologyClass::generator(Coefficients ring, std::size_t length, std::size_t index) {
    VecZ4 v(length, 0);
    v.at(index) = 1;
    return HomologyClass(ring, std::move(v));
}

bool same_z4_class(const HomologyPresentation& p, const HomologyClass& x, const HomologyClass& y) {
    if (x.size() != p.z2_rank || y.size() != p.z2_rank) throw InputError("same_z4_class: dimension mismatch");
    VecZ4 diff(x.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = static_cast<std::uint8_t>((x[i] + 4 - y[i]) % 4);
    return in_row_module_z4(howell_z4(p.z4_relations), diff);
}

bool self_intersection(const SurfaceModel& s, const HomologyClass& x) {
    check_size(s, x, "self_intersection");
    const VecGF2 v = x.reduce_mod2();
    return s.dot(v, v);
}

bool pin_plus_exists_surface(const SurfaceModel& s) {
    return s.is_orientable() || !s.is_closed() || s.genus_or_crosscaps() % 2 == 0;
}

// ---------------------------------------------------------------------------
// Enhancements

EnhancementMinus::EnhancementMinus(SurfaceModel surface, VecZ4 values)
    : surface_(std::move(surface)), values_(std::move(values)) {
    if (values_.size() != surface_.z2_rank())
        throw InputError("EnhancementMinus: expected " + std::to_string(surface_.z2_rank()) + " generator values");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        values_[i] %= 4;
        if ((values_[i] & 1u) != static_cast<unsigned>(surface_.generator_dot(i, i)))
            throw InvariantViolation("EnhancementMinus: q(g" + std::to_string(i + 1) + ") = " +
                                     std::to_string(values_[i]) + " has the wrong parity for g.g = " +
                                     std::to_string(surface_.generator_dot(i, i)));
    }
}

EnhancementMinus EnhancementMinus::base(const SurfaceModel& s) {
    VecZ4 v(s.z2_rank());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = s.generator_dot(i, i) ? 1 : 0;
    return EnhancementMinus(s, std::move(v));
}

EnhancementPlus::EnhancementPlus(SurfaceModel surface, VecZ4 values)
    : surface_(std::move(surface)), values_(std::move(values)) {
    if (values_.size() != surface_.z2_rank())
        throw InputError("EnhancementPlus: expected " + std::to_string(surface_.z2_rank()) + " generator values");
    for (auto& v : values_) v %= 2;
}

EnhancementPlus EnhancementPlus::base(const SurfaceModel& s) { return EnhancementPlus(s, VecZ4(s.z2_rank(), 0)); }

std::uint8_t eval_qminus(const EnhancementMinus& q, const HomologyClass& x) {
    const SurfaceModel& s = q.surface();
    check_size(s, x, "eval_qminus");
    VecZ4 a(x.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = x[i] & 1u;
    int total = 2 * off_diagonal_sum(s, a);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) total += q.values()[i];
    return static_cast<std::uint8_t>(total % 4);
}

namespace {

std::uint8_t eval_qplus_unchecked(const EnhancementPlus& q, const VecZ4& a) {
    const SurfaceModel& s = q.surface();
    int total = off_diagonal_sum(s, a);
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += a[i] * q.values()[i];
        if (diagonal(s, i)) total += a[i] * (a[i] - 1) / 2;
    }
    return static_cast<std::uint8_t>(total % 2);
}

}  // namespace

bool is_well_defined(const EnhancementPlus& q) {
    const auto relations = z4_relation_rows(q.surface());
    return std::all_of(relations.begin(), relations.end(),
                       [&](const VecZ4& rel) { return eval_qplus_unchecked(q, rel) == 0; });
}

std::uint8_t eval_qplus(const EnhancementPlus& q, const HomologyClass& x) {
    check_size(q.surface(), x, "eval_qplus");
    if (x.ring() == Coefficients::z2) throw InputError("eval_qplus: q+ is defined on Z/4 classes");
    // Every relation row reduces to zero mod 2, so q(v + rel) = q(v) + q(rel).
    if (!is_well_defined(q))
        throw InvariantViolation("eval_qplus: enhancement on " + q.surface().name() +
                                 " is not constant on Z/4 relation cosets");
    return eval_qplus_unchecked(q, x.coords());
}

EnhancementMinus act_h1(const EnhancementMinus& q, const VecGF2& gamma) {
    if (gamma.size() != q.values().size()) throw InputError("act_h1: cohomology class has the wrong length");
    VecZ4 v = q.values();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (gamma.get(i)) v[i] = static_cast<std::uint8_t>((v[i] + 2) % 4);
    return EnhancementMinus(q.surface(), std::move(v));
}

EnhancementPlus act_h1(const EnhancementPlus& q, const VecGF2& gamma) {
    if (gamma.size() != q.values().size()) throw InputError("act_h1: cohomology class has the wrong length");
    VecZ4 v = q.values();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (gamma.get(i)) v[i] ^= 1u;
    return EnhancementPlus(q.surface(), std::move(v));
}

namespace {

void check_enumerable(const SurfaceModel& s) {
    if (s.z2_rank() > kMaxEnumerationRank)
        throw InputError("enumeration refused: " + s.name() + " has rank " + std::to_string(s.z2_rank()) +
                         " (limit " + std::to_string(kMaxEnumerationRank) + ")");
}

}  // namespace

std::vector<EnhancementMinus> enumerate_minus_enhancements(const SurfaceModel& s) {
    check_enumerable(s);
    const std::size_t r = s.z2_rank();
    const EnhancementMinus base = EnhancementMinus::base(s);
    std::vector<EnhancementMinus> out;
    out.reserve(std::size_t{1} << r);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << r); ++bits) {
        VecGF2 gamma(r);
        for (std::size_t i = 0; i < r; ++i) gamma.set(i, (bits >> (r - 1 - i)) & 1u);
        out.push_back(act_h1(base, gamma));
    }
    return out;
}

PlusEnumeration enumerate_plus_enhancements(const SurfaceModel& s) {
    check_enumerable(s);
    if (!pin_plus_exists_surface(s))
        return {{}, s.name() + " is closed non-orientable with an odd number of crosscaps (odd Euler characteristic)"};
    const std::size_t r = s.z2_rank();
    PlusEnumeration out;
    out.enhancements.reserve(std::size_t{1} << r);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << r); ++bits) {
        VecZ4 v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = (bits >> (r - 1 - i)) & 1u;
        out.enhancements.emplace_back(s, std::move(v));
    }
    return out;
}

}  // namespace pinlef
