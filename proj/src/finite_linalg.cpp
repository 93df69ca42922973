#include "pinlef/finite_linalg.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "pinlef/errors.hpp"

namespace pinlef {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

std::uint8_t mod4(int value) { return static_cast<std::uint8_t>(((value % 4) + 4) % 4); }

std::size_t leading_column(const VecZ4& v) {
    auto it = std::find_if(v.begin(), v.end(), [](std::uint8_t x) { return x != 0; });
    return static_cast<std::size_t>(it - v.begin());
}

bool is_zero_z4(const VecZ4& v) { return leading_column(v) == v.size(); }

// v -= factor * row (mod 4)
void sub_multiple(VecZ4& v, const VecZ4& row, int factor) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod4(v[i] - factor * row[i]);
}

}  // namespace

// ---------------------------------------------------------------------------
// VecGF2

VecGF2::VecGF2(std::size_t length) : length_(length), words_(word_count(length), 0) {}

VecGF2::VecGF2(std::initializer_list<int> bits) : VecGF2(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) set(i++, (b & 1) != 0);
}

VecGF2 VecGF2::from_bits(std::span<const std::uint8_t> bits) {
    VecGF2 v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, (bits[i] & 1u) != 0);
    return v;
}

VecGF2 VecGF2::unit(std::size_t length, std::size_t index) {
    VecGF2 v(length);
    v.set(index, true);
    return v;
}

void VecGF2::set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

bool VecGF2::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t VecGF2::weight() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::size_t VecGF2::first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return length_;
}

VecGF2& VecGF2::operator^=(const VecGF2& other) {
    if (other.length_ != length_) throw InputError("VecGF2 length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

bool VecGF2::dot(const VecGF2& other) const {
    if (other.length_ != length_) throw InputError("VecGF2 length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return (std::popcount(acc) & 1) != 0;
}

std::strong_ordering operator<=>(const VecGF2& a, const VecGF2& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    for (std::size_t i = 0; i < a.length_; ++i) {
        if (a.get(i) != b.get(i)) return a.get(i) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::string VecGF2::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

// ---------------------------------------------------------------------------
// MatGF2

MatGF2::MatGF2(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, VecGF2(cols)) {}

MatGF2::MatGF2(std::initializer_list<std::initializer_list<int>> rows) {
    cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InputError("MatGF2: ragged initializer");
        rows_.emplace_back(r);
    }
}

MatGF2 MatGF2::from_rows(std::size_t cols, std::vector<VecGF2> rows) {
    for (const auto& r : rows)
        if (r.size() != cols) throw InputError("MatGF2: row length does not match column count");
    MatGF2 m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
}

MatGF2 MatGF2::identity(std::size_t n) {
    MatGF2 m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

VecGF2 MatGF2::operator*(const VecGF2& v) const {
    if (v.size() != cols_) throw InputError("MatGF2 * VecGF2: dimension mismatch");
    VecGF2 out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) out.set(r, rows_[r].dot(v));
    return out;
}

MatGF2 MatGF2::augmented(const VecGF2& a) const {
    if (a.size() != rows_.size()) throw InputError("augmented: right-hand side length does not match row count");
    MatGF2 out(rows_.size(), cols_ + 1);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) out.set(r, c, true);
        out.set(r, cols_, a.get(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Elimination over Z/2

RrefResult rref_gf2(const MatGF2& m) {
    std::vector<VecGF2> rows = m.row_list();
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col < m.cols() && next < rows.size(); ++col) {
        std::size_t found = next;
        while (found < rows.size() && !rows[found].get(col)) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[next], rows[found]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next && rows[r].get(col)) rows[r] ^= rows[next];
        }
        pivots.push_back(col);
        ++next;
    }
    return RrefResult{pivots.size(), MatGF2::from_rows(m.cols(), std::move(rows)), std::move(pivots)};
}

std::size_t rank_gf2(const MatGF2& m) { return rref_gf2(m).rank; }

std::optional<AffineSolutionGF2> solve_affine_gf2(const MatGF2& c, const VecGF2& a) {
    if (c.rows() != a.size()) throw InputError("solve_affine_gf2: C has " + std::to_string(c.rows()) +
                                               " rows but A has length " + std::to_string(a.size()));
    const std::size_t n = c.cols();
    const RrefResult red = rref_gf2(c.augmented(a));
    if (!red.pivot_cols.empty() && red.pivot_cols.back() == n) return std::nullopt;

    AffineSolutionGF2 sol{VecGF2(n), {}};
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < red.rank; ++i) {
        const std::size_t p = red.pivot_cols[i];
        is_pivot[p] = true;
        sol.particular.set(p, red.reduced.get(i, n));
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        VecGF2 k = VecGF2::unit(n, f);
        for (std::size_t i = 0; i < red.rank; ++i)
            if (red.reduced.get(i, f)) k.set(red.pivot_cols[i], true);
        sol.kernel_basis.push_back(std::move(k));
    }
    return sol;
}

std::optional<VecGF2> inconsistent_row_combination(const MatGF2& c, const VecGF2& a) {
    if (c.rows() != a.size()) throw InputError("inconsistent_row_combination: dimension mismatch");
    const std::size_t n = c.cols();
    const std::size_t m = c.rows();
    // Eliminate on (C | a) while recording which original rows each working row sums.
    std::vector<VecGF2> rows;
    std::vector<VecGF2> track;
    const MatGF2 aug = c.augmented(a);
    for (std::size_t r = 0; r < m; ++r) {
        rows.push_back(aug.row(r));
        track.push_back(VecGF2::unit(m, r));
    }
    std::size_t next = 0;
    for (std::size_t col = 0; col <= n && next < m; ++col) {
        std::size_t found = next;
        while (found < m && !rows[found].get(col)) ++found;
        if (found == m) continue;
        std::swap(rows[next], rows[found]);
        std::swap(track[next], track[found]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r != next && rows[r].get(col)) {
                rows[r] ^= rows[next];
                track[r] ^= track[next];
            }
        }
        if (col == n) return track[next];
        ++next;
    }
    return std::nullopt;
}

std::vector<VecGF2> enumerate_affine_solutions(const AffineSolutionGF2& solution, std::size_t max_kernel_dim) {
    const std::size_t d = solution.kernel_dim();
    if (d > max_kernel_dim || d >= 63)
        throw InputError("enumerate_affine_solutions: kernel dimension " + std::to_string(d) +
                         " exceeds the enumeration limit " + std::to_string(max_kernel_dim));
    std::vector<VecGF2> out;
    out.reserve(std::size_t{1} << d);
    for (std::uint64_t coeffs = 0; coeffs < (std::uint64_t{1} << d); ++coeffs) {
        VecGF2 x = solution.particular;
        for (std::size_t j = 0; j < d; ++j) {
            // kernel_basis[0] is the most significant coefficient
            if ((coeffs >> (d - 1 - j)) & 1u) x ^= solution.kernel_basis[j];
        }
        out.push_back(std::move(x));
    }
    return out;
}

VecGF2 lex_min_solution(const AffineSolutionGF2& solution) {
    // With the kernel in reduced echelon form every basis vector owns a distinct
    // leading index; clearing those indices in ascending order gives the minimum.
    const std::size_t n = solution.particular.size();
    const RrefResult basis = rref_gf2(MatGF2::from_rows(n, solution.kernel_basis));
    VecGF2 x = solution.particular;
    for (std::size_t i = 0; i < basis.rank; ++i)
        if (x.get(basis.pivot_cols[i])) x ^= basis.reduced.row(i);
    return x;
}

std::vector<VecGF2> annihilator_gf2(const MatGF2& rows) {
    auto sol = solve_affine_gf2(rows, VecGF2(rows.rows()));
    return sol->kernel_basis;
}

// ---------------------------------------------------------------------------
// Z/4

MatZ4::MatZ4(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, VecZ4(cols, 0)) {}

MatZ4::MatZ4(std::initializer_list<std::initializer_list<int>> rows) {
    cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InputError("MatZ4: ragged initializer");
        VecZ4 v;
        for (int x : r) v.push_back(mod4(x));
        rows_.push_back(std::move(v));
    }
}

MatZ4 MatZ4::from_rows(std::size_t cols, std::vector<VecZ4> rows) {
    for (auto& r : rows) {
        if (r.size() != cols) throw InputError("MatZ4: row length does not match column count");
        for (auto& x : r) x = mod4(x);
    }
    MatZ4 m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
}

void MatZ4::set(std::size_t r, std::size_t c, int value) { rows_[r][c] = mod4(value); }

MatGF2 MatZ4::reduce_mod2() const {
    std::vector<VecGF2> rows;
    for (const auto& r : rows_) rows.push_back(pinlef::reduce_mod2(r));
    return MatGF2::from_rows(cols_, std::move(rows));
}

VecGF2 reduce_mod2(std::span<const std::uint8_t> v) { return VecGF2::from_bits(v); }

MatZ4 howell_z4(const MatZ4& m) {
    const std::size_t n = m.cols();
    std::vector<VecZ4> work;
    for (const auto& r : m.row_list())
        if (!is_zero_z4(r)) work.push_back(r);

    std::vector<VecZ4> result;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < n && !work.empty(); ++c) {
        // A unit entry generates the whole ideal; otherwise every nonzero entry is 2.
        auto pick = std::find_if(work.begin(), work.end(), [c](const VecZ4& w) { return (w[c] & 1u) != 0; });
        if (pick == work.end())
            pick = std::find_if(work.begin(), work.end(), [c](const VecZ4& w) { return w[c] != 0; });
        if (pick == work.end()) continue;

        VecZ4 pivot = std::move(*pick);
        work.erase(pick);
        if (pivot[c] == 3)
            for (auto& x : pivot) x = mod4(3 * x);
        const int p = pivot[c];

        for (auto& w : work)
            if (w[c] != 0) sub_multiple(w, pivot, w[c] / p);
        if (p == 2) {
            VecZ4 doubled = pivot;
            for (auto& x : doubled) x = mod4(2 * x);
            work.push_back(std::move(doubled));
        }
        std::erase_if(work, is_zero_z4);

        result.push_back(std::move(pivot));
        pivot_col.push_back(c);
    }

    for (std::size_t i = 0; i < result.size(); ++i) {
        const std::size_t c = pivot_col[i];
        const int p = result[i][c];
        for (std::size_t j = 0; j < i; ++j) {
            const int q = result[j][c] / p;
            if (q != 0) sub_multiple(result[j], result[i], q);
        }
    }
    return MatZ4::from_rows(n, std::move(result));
}

VecZ4 normal_form_z4(const MatZ4& howell, const VecZ4& v) {
    if (v.size() != howell.cols()) throw InputError("normal_form_z4: dimension mismatch");
    VecZ4 r = v;
    for (auto& x : r) x = mod4(x);
    for (const auto& row : howell.row_list()) {
        const std::size_t c = leading_column(row);
        const int q = r[c] / row[c];
        if (q != 0) sub_multiple(r, row, q);
    }
    return r;
}

bool in_row_module_z4(const MatZ4& howell, const VecZ4& v) { return is_zero_z4(normal_form_z4(howell, v)); }

}  // namespace pinlef
