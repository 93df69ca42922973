#pragma once

// Exact linear algebra over Z/2 and Z/4.
//
// Z/2 data is bit-packed into 64-bit words. Z/4 data is stored one residue per
// byte; the instances this library targets have rank well below 64, so no
// attempt is made at packing.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pinlef {

class VecGF2 {
public:
    VecGF2() = default;
    explicit VecGF2(std::size_t length);
    VecGF2(std::initializer_list<int> bits);

    static VecGF2 from_bits(std::span<const std::uint8_t> bits);
    static VecGF2 unit(std::size_t length, std::size_t index);

    std::size_t size() const { return length_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool is_zero() const;
    std::size_t weight() const;
    /// Index of the first set bit, or size() when the vector is zero.
    std::size_t first_set() const;

    VecGF2& operator^=(const VecGF2& other);
    friend VecGF2 operator^(VecGF2 lhs, const VecGF2& rhs) { return lhs ^= rhs; }

    /// Standard dot product over Z/2.
    bool dot(const VecGF2& other) const;

    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const VecGF2&, const VecGF2&) = default;
    /// Lexicographic by index: entry 0 is most significant, 0 < 1.
    friend std::strong_ordering operator<=>(const VecGF2& a, const VecGF2& b);

    std::string to_string() const;  // "0110"

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

class MatGF2 {
public:
    MatGF2() = default;
    MatGF2(std::size_t rows, std::size_t cols);
    MatGF2(std::initializer_list<std::initializer_list<int>> rows);
    static MatGF2 from_rows(std::size_t cols, std::vector<VecGF2> rows);
    static MatGF2 identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value) { rows_[r].set(c, value); }

    const VecGF2& row(std::size_t r) const { return rows_[r]; }
    const std::vector<VecGF2>& row_list() const { return rows_; }

    VecGF2 operator*(const VecGF2& v) const;
    /// (C | a) with a appended as the last column.
    MatGF2 augmented(const VecGF2& a) const;

    friend bool operator==(const MatGF2&, const MatGF2&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<VecGF2> rows_;
};

struct RrefResult {
    std::size_t rank = 0;
    MatGF2 reduced;
    std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination with leftmost-pivot selection (the first row at or
/// below the current position carrying a 1 becomes the pivot row). Zero rows
/// are kept at the bottom so the shape matches the input.
RrefResult rref_gf2(const MatGF2& m);

struct AffineSolutionGF2 {
    VecGF2 particular;
    std::vector<VecGF2> kernel_basis;

    std::size_t kernel_dim() const { return kernel_basis.size(); }
};

/// Solves C x = a. Returns nullopt exactly when rank(C) != rank(C|a).
/// The particular solution has every free variable set to zero; kernel vector j
/// has a single free variable (the j-th free column) set to one.
/// Throws InputError when C.rows() != a.size().
std::optional<AffineSolutionGF2> solve_affine_gf2(const MatGF2& c, const VecGF2& a);

/// For an unsolvable C x = a, a set of row indices (as a 0/1 vector over rows)
/// whose rows sum to zero while the matching entries of a sum to one.
/// Returns nullopt when the system is solvable.
std::optional<VecGF2> inconsistent_row_combination(const MatGF2& c, const VecGF2& a);

/// Every solution, ordered lexicographically by kernel-basis coefficient vector
/// (coefficient of kernel_basis[0] most significant).
/// Throws InputError when the kernel dimension exceeds max_kernel_dim.
std::vector<VecGF2> enumerate_affine_solutions(const AffineSolutionGF2& solution,
                                               std::size_t max_kernel_dim = 20);

/// Lexicographically smallest member of the solution set (entry 0 most
/// significant, 0 < 1).
VecGF2 lex_min_solution(const AffineSolutionGF2& solution);

/// Basis of { v : row . v = 0 for every row }.
std::vector<VecGF2> annihilator_gf2(const MatGF2& rows);

std::size_t rank_gf2(const MatGF2& m);

// ---------------------------------------------------------------------------
// Z/4

using VecZ4 = std::vector<std::uint8_t>;

class MatZ4 {
public:
    MatZ4() = default;
    MatZ4(std::size_t rows, std::size_t cols);
    MatZ4(std::initializer_list<std::initializer_list<int>> rows);
    static MatZ4 from_rows(std::size_t cols, std::vector<VecZ4> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    std::uint8_t get(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    void set(std::size_t r, std::size_t c, int value);

    const VecZ4& row(std::size_t r) const { return rows_[r]; }
    const std::vector<VecZ4>& row_list() const { return rows_; }

    MatGF2 reduce_mod2() const;

    friend bool operator==(const MatZ4&, const MatZ4&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<VecZ4> rows_;
};

/// Howell form of the row module of m over Z/4: echelon rows (zero rows
/// dropped), each pivot in {1, 2}, entries above a pivot reduced into
/// [0, pivot), and closed under the Howell property so that for every k the
/// rows with leading column >= k span all module elements with k leading zeros.
/// Two matrices have the same row module iff their Howell forms are equal.
MatZ4 howell_z4(const MatZ4& m);

/// Canonical remainder of v modulo the row module whose Howell form is given.
VecZ4 normal_form_z4(const MatZ4& howell, const VecZ4& v);

/// Row-module membership test; `howell` must be a Howell form.
bool in_row_module_z4(const MatZ4& howell, const VecZ4& v);

VecGF2 reduce_mod2(std::span<const std::uint8_t> v);

}  // namespace pinlef
