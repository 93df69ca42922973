#pragma once

// Brute-force reference implementations used only by the tests. None of these
// call the library's solvers or evaluators; they work on plain integer vectors
// and rebuild every quantity from its definition.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "pinlef/surfaces.hpp"

namespace oracle {

using Ints = std::vector<int>;

struct Shape {
    bool orientable;
    std::size_t count;     // genus or crosscaps
    std::size_t boundary;

    std::size_t rank() const {
        const std::size_t extra = boundary > 0 ? boundary - 1 : 0;
        return (orientable ? 2 * count : count) + extra;
    }
    bool closed_nonorientable() const { return !orientable && boundary == 0; }
};

inline Shape shape_of(const pinlef::SurfaceModel& s) {
    return {s.is_orientable(), s.genus_or_crosscaps(), s.boundary_components()};
}

// Intersection number of generators i and j, read off the surface picture.
inline int gen_dot(const Shape& sh, std::size_t i, std::size_t j) {
    if (sh.orientable) {
        const std::size_t core = 2 * sh.count;
        if (i >= core || j >= core) return 0;
        return (i / 2 == j / 2 && i != j) ? 1 : 0;
    }
    if (i >= sh.count || j >= sh.count) return 0;
    return i == j ? 1 : 0;
}

inline int dot(const Shape& sh, const Ints& x, const Ints& y) {
    int total = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) total += (x[i] % 2) * (y[j] % 2) * gen_dot(sh, i, j);
    return total % 2;
}

inline Ints mod(const Ints& v, int m) {
    Ints out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = ((v[i] % m) + m) % m;
    return out;
}

inline Ints add(const Ints& x, const Ints& y, int m) {
    Ints out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] + y[i]) % m;
    return out;
}

inline Ints unit(std::size_t n, std::size_t i) {
    Ints v(n, 0);
    v[i] = 1;
    return v;
}

// q-(x) built one generator at a time from q(y + e) = q(y) + q(e) + 2 y.e.
inline int qminus(const Shape& sh, const Ints& values, const Ints& x) {
    Ints y(x.size(), 0);
    int q = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] % 2 == 0) continue;
        const Ints e = unit(x.size(), i);
        q = (q + values[i] + 2 * dot(sh, y, e)) % 4;
        y = add(y, e, 2);
    }
    return q;
}

// q+(x) for Z/4 coordinates, adding generators one copy at a time via
// q(y + g) = q(y) + q(g) + y.g.
inline int qplus(const Shape& sh, const Ints& values, const Ints& x) {
    Ints y(x.size(), 0);
    int q = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (int t = 0; t < x[i] % 4; ++t) {
            const Ints g = unit(x.size(), i);
            q = (q + values[i] + dot(sh, y, g)) % 2;
            y = add(y, g, 4);
        }
    }
    return q;
}

inline Ints z4_relation(const Shape& sh) {
    Ints r(sh.rank(), 0);
    for (std::size_t i = 0; i < sh.count; ++i) r[i] = 2;
    return r;
}

// q+ is a function on H1(S; Z/4) when it vanishes on the torsion relation.
inline bool qplus_well_defined(const Shape& sh, const Ints& values) {
    if (!sh.closed_nonorientable()) return true;
    return qplus(sh, values, z4_relation(sh)) == 0;
}

inline std::vector<Ints> all_vectors(std::size_t n, int m) {
    std::vector<Ints> out;
    Ints v(n, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++v[i] < m) break;
            v[i] = 0;
            if (i == 0) return out;
        }
        if (n == 0) return out;
    }
}

// Every q- value vector (q(e_i) = e_i.e_i mod 2) taking `target` on each class.
inline std::vector<Ints> minus_solutions(const Shape& sh, const std::vector<Ints>& classes, int target) {
    std::vector<Ints> out;
    for (const auto& v : all_vectors(sh.rank(), 4)) {
        bool parity = true;
        for (std::size_t i = 0; i < v.size(); ++i) parity = parity && (v[i] % 2 == gen_dot(sh, i, i));
        if (!parity) continue;
        bool ok = true;
        for (const auto& c : classes) ok = ok && qminus(sh, v, c) == target;
        if (ok) out.push_back(v);
    }
    return out;
}

inline std::vector<Ints> plus_solutions(const Shape& sh, const std::vector<Ints>& classes, int target) {
    std::vector<Ints> out;
    for (const auto& v : all_vectors(sh.rank(), 2)) {
        if (!qplus_well_defined(sh, v)) continue;
        bool ok = true;
        for (const auto& c : classes) ok = ok && qplus(sh, v, c) == target;
        if (ok) out.push_back(v);
    }
    return out;
}

// Search for c_0, c_1..c_k with [c_0] = sum [c_i] and k + sum_{i<j} c_i.c_j even.
inline bool cycle_relation_exists(const Shape& sh, const std::vector<Ints>& cycles) {
    const std::size_t n = cycles.size();
    for (std::size_t c0 = 0; c0 < n; ++c0) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (mask & (1u << c0)) continue;
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) idx.push_back(i);
            Ints sum(sh.rank(), 0);
            for (auto i : idx) sum = add(sum, mod(cycles[i], 2), 2);
            if (sum != mod(cycles[c0], 2)) continue;
            int pairs = 0;
            for (std::size_t a = 0; a < idx.size(); ++a)
                for (std::size_t b = a + 1; b < idx.size(); ++b) pairs += dot(sh, cycles[idx[a]], cycles[idx[b]]);
            if ((idx.size() + pairs) % 2 == 0) return true;
        }
    }
    return false;
}

// Rank over Z/2 from the size of the row span: |span| = 2^rank.
inline std::size_t span_rank(const std::vector<Ints>& rows, std::size_t cols) {
    std::set<Ints> span;
    for (std::uint32_t mask = 0; mask < (1u << rows.size()); ++mask) {
        Ints v(cols, 0);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (mask & (1u << i)) v = add(v, rows[i], 2);
        span.insert(v);
    }
    std::size_t r = 0;
    while ((std::size_t{1} << r) < span.size()) ++r;
    return r;
}

// Every Z/4-linear combination of the rows.
inline std::set<Ints> z4_span(const std::vector<Ints>& rows, std::size_t cols) {
    std::set<Ints> span;
    for (const auto& coeffs : all_vectors(rows.size(), 4)) {
        Ints v(cols, 0);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) v[j] = (v[j] + coeffs[i] * rows[i][j]) % 4;
        span.insert(v);
    }
    return span;
}

// Two-sided classes (even self-intersection), reduced coordinates in 0..3.
inline std::vector<Ints> two_sided_classes(const Shape& sh) {
    std::vector<Ints> out;
    for (const auto& v : all_vectors(sh.rank(), 4))
        if (dot(sh, v, v) == 0) out.push_back(v);
    return out;
}

// Surfaces of Z/2 rank between 1 and max_rank (plus the rank-0 disk shapes).
inline std::vector<Shape> small_shapes(std::size_t max_rank) {
    std::vector<Shape> out;
    for (std::size_t g = 0; 2 * g <= max_rank; ++g)
        for (std::size_t b = 0; b <= max_rank + 1; ++b) {
            Shape s{true, g, b};
            if (g == 0 && b == 0) continue;
            if (s.rank() <= max_rank) out.push_back(s);
        }
    for (std::size_t k = 1; k <= max_rank; ++k)
        for (std::size_t b = 0; b <= max_rank + 1; ++b) {
            Shape s{false, k, b};
            if (s.rank() <= max_rank) out.push_back(s);
        }
    return out;
}

inline pinlef::SurfaceModel model_of(const Shape& sh) {
    return sh.orientable ? pinlef::SurfaceModel::orientable(sh.count, sh.boundary)
                         : pinlef::SurfaceModel::non_orientable(sh.count, sh.boundary);
}

inline pinlef::VecZ4 to_z4(const Ints& v) { return pinlef::VecZ4(v.begin(), v.end()); }
inline Ints from_z4(const pinlef::VecZ4& v) { return Ints(v.begin(), v.end()); }

inline std::vector<pinlef::HomologyClass> to_classes(const std::vector<Ints>& vs) {
    std::vector<pinlef::HomologyClass> out;
    for (const auto& v : vs) out.push_back(pinlef::HomologyClass::z4(to_z4(v)));
    return out;
}

}  // namespace oracle
