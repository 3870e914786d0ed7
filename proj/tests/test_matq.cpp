#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "liftedcodes/matq.hpp"
#include "oracles.hpp"

using namespace liftedcodes;

namespace {

MatQ random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols,
                   std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f->order() - 1);
    MatQ m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, static_cast<elem_t>(dist(rng)));
    }
    return m;
}

MatQ random_nonsingular(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
    while (true) {
        MatQ m = random_matrix(f, n, n, rng);
        if (m.rank() == n) return m;
    }
}

bool is_unit_diagonal(const MatQ& p, std::size_t rank) {
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) {
            const elem_t want = (i == j && i < rank) ? 1 : 0;
            if (p(i, j) != want) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("rank basics") {
    auto f2 = Field::prime(2);
    CHECK(MatQ(f2, 3, 3).rank() == 0);
    CHECK(MatQ::identity(f2, 3).rank() == 3);
    const MatQ h(f2, 2, 3, {1, 0, 1, 0, 1, 1});
    CHECK(h.rank() == 2);
    const MatQ dup(f2, 2, 3, {1, 0, 1, 1, 0, 1});
    CHECK(dup.rank() == 1);
}

TEST_CASE("matrix validation") {
    auto f2 = Field::prime(2);
    auto f3 = Field::prime(3);
    CHECK_THROWS_AS(MatQ(f2, 2, 2, {0, 1, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(MatQ(f2, 2, 2, {0, 1}), std::invalid_argument);
    const MatQ a(f2, 2, 2, {1, 0, 0, 1});
    const MatQ b(f3, 2, 2, {1, 0, 0, 1});
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * MatQ(f2, 3, 2), std::invalid_argument);
}

TEST_CASE("row reduction invariants") {
    std::mt19937_64 rng(7);
    for (const auto& fp : {Field::prime(2), Field::prime(3), Field::tower(2, {2}),
                           Field::tower(3, {2})}) {
        for (int trial = 0; trial < 25; ++trial) {
            const MatQ m = random_matrix(fp, 1 + trial % 4, 1 + (trial / 2) % 5, rng);
            const auto rr = m.reduced_row_echelon();
            CHECK(rr.ops * m == rr.reduced);
            CHECK(rr.ops.rank() == m.rows());
            // pivot columns carry a leading one with zeros elsewhere
            for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
                for (std::size_t row = 0; row < m.rows(); ++row) {
                    CHECK(rr.reduced(row, rr.pivots[i]) == (row == i ? 1 : 0));
                }
            }
        }
    }
}

TEST_CASE("rank normal form") {
    auto f3 = Field::prime(3);
    SUBCASE("identity") {
        const auto nf = MatQ::identity(f3, 3).rank_normal_form();
        CHECK(nf.diag == MatQ::identity(f3, 3));
        CHECK(nf.left == MatQ::identity(f3, 3));
        CHECK(nf.right == MatQ::identity(f3, 3));
    }
    SUBCASE("zero matrix keeps identity transforms") {
        const auto nf = MatQ(f3, 2, 4).rank_normal_form();
        CHECK(nf.left == MatQ::identity(f3, 2));
        CHECK(nf.right == MatQ::identity(f3, 4));
        CHECK(nf.diag.is_zero());
    }
    SUBCASE("random matrices") {
        std::mt19937_64 rng(11);
        for (const auto& fp : {Field::prime(2), Field::prime(3), Field::tower(2, {2})}) {
            for (int trial = 0; trial < 40; ++trial) {
                const MatQ m = random_matrix(fp, 1 + trial % 4, 1 + (trial / 3) % 4, rng);
                const auto nf = m.rank_normal_form();
                CHECK(nf.left * m * nf.right == nf.diag);
                CHECK(is_unit_diagonal(nf.diag, m.rank()));
                CHECK(nf.left.rank() == m.rows());
                CHECK(nf.right.rank() == m.cols());
            }
        }
    }
}

TEST_CASE("rank is invariant under nonsingular transforms") {
    std::mt19937_64 rng(13);
    auto f3 = Field::prime(3);
    for (int trial = 0; trial < 20; ++trial) {
        const MatQ m = random_matrix(f3, 3, 4, rng);
        const MatQ a = random_nonsingular(f3, 3, rng);
        const MatQ b = random_nonsingular(f3, 4, rng);
        CHECK((a * m * b).rank() == m.rank());
    }
}

TEST_CASE("rank factorization") {
    auto f2 = Field::prime(2);
    SUBCASE("zero matrix factors through dimension zero") {
        const auto fa = MatQ(f2, 2, 3).rank_factorization();
        CHECK(fa.col_factor.cols() == 0);
        CHECK(fa.row_factor.rows() == 0);
        CHECK(fa.col_factor * fa.row_factor == MatQ(f2, 2, 3));
    }
    SUBCASE("identity") {
        const auto fa = MatQ::identity(f2, 2).rank_factorization();
        CHECK(fa.col_factor == MatQ::identity(f2, 2));
        CHECK(fa.row_factor == MatQ::identity(f2, 2));
    }
    SUBCASE("rank one") {
        const MatQ m(f2, 2, 2, {1, 1, 1, 1});
        const auto fa = m.rank_factorization();
        CHECK(fa.col_factor.cols() == 1);
        CHECK(fa.row_factor.rows() == 1);
        CHECK(fa.col_factor * fa.row_factor == m);
    }
    SUBCASE("random reconstruction") {
        std::mt19937_64 rng(17);
        for (const auto& fp : {Field::prime(2), Field::prime(3), Field::tower(2, {2})}) {
            for (int trial = 0; trial < 40; ++trial) {
                const MatQ m = random_matrix(fp, 1 + trial % 4, 1 + (trial / 3) % 4, rng);
                const auto fa = m.rank_factorization();
                CHECK(fa.col_factor * fa.row_factor == m);
                CHECK(fa.col_factor.rank() == m.rank());
                CHECK(fa.row_factor.rank() == m.rank());
            }
        }
    }
}

TEST_CASE("injective morphism counts") {
    CHECK(injective_morphism_count(1, 2, 2) == 3);
    CHECK(injective_morphism_count(2, 2, 2) == 6);
    CHECK(injective_morphism_count(2, 4, 2) == 210);
    CHECK_THROWS_AS(injective_morphism_count(0, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(injective_morphism_count(3, 2, 2), std::invalid_argument);

    // oracle: nonsingular 2x2 binary matrices by enumeration
    auto f2 = Field::prime(2);
    unsigned nonsingular = 0;
    for (const auto& w : oracles::all_words(*f2, 4)) {
        nonsingular += (MatQ(f2, 2, 2, w).rank() == 2);
    }
    CHECK(injective_morphism_count(2, 2, 2) == nonsingular);
}

TEST_CASE("rank census counts") {
    CHECK(matrix_rank_count(2, 2, 2, 0) == 1);
    CHECK(matrix_rank_count(2, 2, 2, 1) == 9);
    CHECK(matrix_rank_count(2, 2, 2, 2) == 6);
    CHECK(matrix_rank_count(2, 4, 2, 2) == 210);
    CHECK_THROWS_AS(matrix_rank_count(2, 2, 2, 3), std::invalid_argument);

    SUBCASE("agrees with enumeration") {
        for (std::uint64_t q : {std::uint64_t{2}, std::uint64_t{3}}) {
            auto f = Field::prime(q);
            for (unsigned r = 1; r <= 3; ++r) {
                for (unsigned m = 1; m <= 3; ++m) {
                    std::vector<std::uint64_t> counts(std::min(r, m) + 1, 0);
                    for (const auto& w : oracles::all_words(*f, r * m)) {
                        counts[MatQ(f, r, m, w).rank()] += 1;
                    }
                    for (unsigned k = 0; k <= std::min(r, m); ++k) {
                        CHECK(matrix_rank_count(q, r, m, k) == BigInt(counts[k]));
                    }
                }
            }
        }
    }
    SUBCASE("census sums to q^{rm} and is symmetric") {
        for (std::uint64_t q : {std::uint64_t{2}, std::uint64_t{3}}) {
            for (unsigned r = 1; r <= 4; ++r) {
                for (unsigned m = 1; m <= 4; ++m) {
                    BigInt sum = 0;
                    for (const auto& row : rank_census(q, r, m)) sum += row.count;
                    CHECK(sum == boost::multiprecision::pow(BigInt(q), r * m));
                    for (unsigned k = 0; k <= std::min(r, m); ++k) {
                        CHECK(matrix_rank_count(q, r, m, k) == matrix_rank_count(q, m, r, k));
                    }
                }
            }
        }
    }
}

TEST_CASE("one-freedom-degree counts") {
    CHECK(matrix_rank_count_one_freedom(2, 4, 2, 1) == 45);
    CHECK(matrix_rank_count_one_freedom(2, 4, 2, 2) == 28);
    CHECK(matrix_rank_count_one_freedom(3, 2, 2, 1) == 32);
    CHECK_THROWS_AS(matrix_rank_count_one_freedom(2, 2, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(matrix_rank_count_one_freedom(2, 2, 2, 4), std::invalid_argument);
}
