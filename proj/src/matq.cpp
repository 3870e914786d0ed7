#include "liftedcodes/matq.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace liftedcodes {

MatQ::MatQ(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
    if (!field_) throw std::invalid_argument("matrix needs a field");
}

MatQ::MatQ(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<elem_t> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (!field_) throw std::invalid_argument("matrix needs a field");
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("entry grid has " + std::to_string(entries_.size()) +
                                    " elements, expected " + std::to_string(rows_ * cols_));
    }
    for (elem_t e : entries_) {
        if (!field_->valid_encoding(e)) {
            throw std::invalid_argument("matrix entry out of range for field " +
                                        field_->descriptor());
        }
    }
}

MatQ MatQ::identity(FieldPtr field, std::size_t n) {
    MatQ m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void MatQ::set(std::size_t i, std::size_t j, elem_t v) {
    if (!field_->valid_encoding(v)) throw std::invalid_argument("matrix entry out of range");
    entries_[i * cols_ + j] = v;
}

std::vector<elem_t> MatQ::row(std::size_t i) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<elem_t> MatQ::col(std::size_t j) const {
    std::vector<elem_t> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

bool MatQ::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](elem_t e) { return e == 0; });
}

bool MatQ::operator==(const MatQ& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           entries_ == other.entries_;
}

void MatQ::check_same_shape(const MatQ& other) const {
    if (field_ != other.field_) throw std::invalid_argument("matrices over different fields");
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix shape mismatch");
    }
}

MatQ MatQ::operator*(const MatQ& other) const {
    if (field_ != other.field_) throw std::invalid_argument("matrices over different fields");
    if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    MatQ out(field_, rows_, other.cols_);
    const Field& f = *field_;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t t = 0; t < cols_; ++t) {
            const elem_t a = (*this)(i, t);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const elem_t b = other(t, j);
                if (b == 0) continue;
                out.entries_[i * other.cols_ + j] =
                    f.add(out.entries_[i * other.cols_ + j], f.mul(a, b));
            }
        }
    }
    return out;
}

MatQ MatQ::operator+(const MatQ& other) const {
    check_same_shape(other);
    MatQ out(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] = field_->add(entries_[i], other.entries_[i]);
    }
    return out;
}

MatQ MatQ::transpose() const {
    MatQ out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, (*this)(i, j));
    }
    return out;
}

RowReduction MatQ::reduced_row_echelon() const {
    RowReduction rr{*this, identity(field_, rows_), {}};
    MatQ& r = rr.reduced;
    MatQ& e = rr.ops;
    const Field& f = *field_;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        std::size_t found = rows_;
        for (std::size_t i = pivot_row; i < rows_; ++i) {
            if (r(i, col) != 0) {
                found = i;
                break;
            }
        }
        if (found == rows_) continue;
        if (found != pivot_row) {
            for (std::size_t j = 0; j < cols_; ++j) {
                std::swap(r.entries_[found * cols_ + j], r.entries_[pivot_row * cols_ + j]);
            }
            for (std::size_t j = 0; j < rows_; ++j) {
                std::swap(e.entries_[found * rows_ + j], e.entries_[pivot_row * rows_ + j]);
            }
        }
        const elem_t scale = f.inv(r(pivot_row, col));
        if (scale != 1) {
            for (std::size_t j = 0; j < cols_; ++j) {
                r.entries_[pivot_row * cols_ + j] = f.mul(scale, r(pivot_row, j));
            }
            for (std::size_t j = 0; j < rows_; ++j) {
                e.entries_[pivot_row * rows_ + j] = f.mul(scale, e(pivot_row, j));
            }
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == pivot_row) continue;
            const elem_t factor = r(i, col);
            if (factor == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j) {
                r.entries_[i * cols_ + j] =
                    f.sub(r(i, j), f.mul(factor, r(pivot_row, j)));
            }
            for (std::size_t j = 0; j < rows_; ++j) {
                e.entries_[i * rows_ + j] =
                    f.sub(e(i, j), f.mul(factor, e(pivot_row, j)));
            }
        }
        rr.pivots.push_back(col);
        ++pivot_row;
    }
    return rr;
}

std::size_t MatQ::rank() const { return reduced_row_echelon().pivots.size(); }

RankNormalForm MatQ::rank_normal_form() const {
    RowReduction rr = reduced_row_echelon();
    const std::size_t l = rr.pivots.size();
    const Field& f = *field_;
    MatQ p = rr.reduced;
    MatQ right = identity(field_, cols_);

    // Column-eliminate the non-pivot entries of each pivot row, mirroring the
    // operations into `right`. Pivot columns of other pivot rows are already
    // zero, so the eliminations do not interact.
    for (std::size_t i = 0; i < l; ++i) {
        const std::size_t pc = rr.pivots[i];
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j == pc) continue;
            const elem_t factor = p(i, j);
            if (factor == 0) continue;
            for (std::size_t row = 0; row < rows_; ++row) {
                p.set(row, j, f.sub(p(row, j), f.mul(factor, p(row, pc))));
            }
            for (std::size_t row = 0; row < cols_; ++row) {
                right.set(row, j, f.sub(right(row, j), f.mul(factor, right(row, pc))));
            }
        }
    }

    // Permute columns so pivot i lands on diagonal position i.
    std::vector<std::size_t> perm;
    perm.reserve(cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t pc : rr.pivots) is_pivot[pc] = true;
    perm.assign(rr.pivots.begin(), rr.pivots.end());
    for (std::size_t j = 0; j < cols_; ++j) {
        if (!is_pivot[j]) perm.push_back(j);
    }
    MatQ diag(field_, rows_, cols_);
    MatQ permuted_right(field_, cols_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
        for (std::size_t row = 0; row < rows_; ++row) diag.set(row, j, p(row, perm[j]));
        for (std::size_t row = 0; row < cols_; ++row) {
            permuted_right.set(row, j, right(row, perm[j]));
        }
    }
    return {std::move(rr.ops), std::move(permuted_right), std::move(diag)};
}

RankFactorization MatQ::rank_factorization() const {
    RowReduction rr = reduced_row_echelon();
    const std::size_t l = rr.pivots.size();
    MatQ u(field_, rows_, l);
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t row = 0; row < rows_; ++row) u.set(row, i, (*this)(row, rr.pivots[i]));
    }
    MatQ v(field_, l, cols_);
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) v.set(i, j, rr.reduced(i, j));
    }
    return {std::move(u), std::move(v)};
}

BigInt injective_morphism_count(unsigned k, unsigned t, std::uint64_t q) {
    if (k < 1 || k > t) {
        throw std::invalid_argument("injective morphism count needs 1 <= k <= t");
    }
    const BigInt qt = boost::multiprecision::pow(BigInt(q), t);
    BigInt result = 1;
    BigInt qi = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= qt - qi;
        qi *= q;
    }
    return result;
}

namespace {
BigInt exact_div(const BigInt& num, const BigInt& den) {
    BigInt quot;
    BigInt rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0) throw std::logic_error("count formula division is not exact");
    return quot;
}
}  // namespace

BigInt matrix_rank_count(std::uint64_t q, unsigned r, unsigned m, unsigned k) {
    if (k > std::min(r, m)) {
        throw std::invalid_argument("rank " + std::to_string(k) + " out of range for " +
                                    std::to_string(r) + "x" + std::to_string(m) + " matrices");
    }
    if (k == 0) return 1;
    return exact_div(injective_morphism_count(k, r, q) * injective_morphism_count(k, m, q),
                     injective_morphism_count(k, k, q));
}

BigInt matrix_rank_count_one_freedom(std::uint64_t q, unsigned r, unsigned m, unsigned k) {
    if (k < 1 || k > std::min(r, m) + 1) {
        throw std::invalid_argument("freedom-degree count needs 1 <= k <= min(r,m)+1");
    }
    const BigInt qk1 = boost::multiprecision::pow(BigInt(q), k - 1);
    const BigInt num = (boost::multiprecision::pow(BigInt(q), r) - qk1) *
                       (boost::multiprecision::pow(BigInt(q), m) - qk1);
    return exact_div(num, BigInt(q) - 1);
}

std::vector<RankCensus> rank_census(std::uint64_t q, unsigned r, unsigned m) {
    std::vector<RankCensus> out;
    for (unsigned k = 0; k <= std::min(r, m); ++k) {
        out.push_back({q, r, m, k, matrix_rank_count(q, r, m, k)});
    }
    return out;
}

}  // namespace liftedcodes
