#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

#include "liftedcodes/gf.hpp"

namespace liftedcodes {

using BigInt = boost::multiprecision::cpp_int;

struct RowReduction;
struct RankNormalForm;
struct RankFactorization;

/// Dense matrix over a finite field, row-major canonical encodings.
/// Zero-row and zero-column shapes are allowed (they show up as rank-0
/// factorizations).
class MatQ {
public:
    MatQ(FieldPtr field, std::size_t rows, std::size_t cols);
    MatQ(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<elem_t> entries);
    static MatQ identity(FieldPtr field, std::size_t n);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<elem_t>& entries() const { return entries_; }

    elem_t operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, elem_t v);

    std::vector<elem_t> row(std::size_t i) const;
    std::vector<elem_t> col(std::size_t j) const;

    bool is_zero() const;
    bool operator==(const MatQ& other) const;

    MatQ operator*(const MatQ& other) const;
    MatQ operator+(const MatQ& other) const;
    MatQ transpose() const;

    std::size_t rank() const;

    /// Row reduction: ops * M == reduced, reduced in reduced row-echelon form,
    /// ops nonsingular. Pivots are the pivot column indices in row order
    /// (first nonzero entry in column order; exact fields need no pivoting
    /// strategy beyond that).
    RowReduction reduced_row_echelon() const;

    /// left * M * right == diag, with left (rows x rows) and right
    /// (cols x cols) nonsingular and diag carrying ones on the first rank(M)
    /// diagonal positions and zeros elsewhere. For the zero matrix both
    /// transforms are identities.
    RankNormalForm rank_normal_form() const;

    /// M == col_factor * row_factor with col_factor (rows x l) of full column
    /// rank and row_factor (l x cols) of full row rank, l = rank(M).
    RankFactorization rank_factorization() const;

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<elem_t> entries_;

    void check_same_shape(const MatQ& other) const;
};

struct RowReduction {
    MatQ reduced;
    MatQ ops;
    std::vector<std::size_t> pivots;
};

struct RankNormalForm {
    MatQ left;
    MatQ right;
    MatQ diag;
};

struct RankFactorization {
    MatQ col_factor;
    MatQ row_factor;
};

/// Number of injective linear maps from a k-dimensional to a t-dimensional
/// space over F_q: (q^t - 1)(q^t - q) ... (q^t - q^{k-1}). Requires
/// 1 <= k <= t.
BigInt injective_morphism_count(unsigned k, unsigned t, std::uint64_t q);

/// Number of r x m matrices over F_q of rank k (1 for k == 0). Requires
/// k <= min(r, m).
BigInt matrix_rank_count(std::uint64_t q, unsigned r, unsigned m, unsigned k);

/// Rank-k matrix count with one freedom degree:
/// (q^r - q^{k-1})(q^m - q^{k-1}) / (q - 1). Requires 1 <= k <= min(r, m)+1.
BigInt matrix_rank_count_one_freedom(std::uint64_t q, unsigned r, unsigned m, unsigned k);

struct RankCensus {
    std::uint64_t q = 0;
    unsigned r = 0;
    unsigned m = 0;
    unsigned k = 0;
    BigInt count;
};

/// The census of all r x m matrices over F_q by rank, k = 0..min(r, m).
std::vector<RankCensus> rank_census(std::uint64_t q, unsigned r, unsigned m);

}  // namespace liftedcodes
