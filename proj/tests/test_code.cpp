#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "liftedcodes/code.hpp"
#include "liftedcodes/lifted.hpp"
#include "oracles.hpp"

using namespace liftedcodes;

namespace {

std::set<std::vector<elem_t>> codeword_set(const LinearCode& code) {
    std::set<std::vector<elem_t>> out;
    code.for_each_codeword(
        [&](std::span<const elem_t> w) { out.emplace(w.begin(), w.end()); });
    return out;
}

LinearCode lifted_repetition_f16() {
    auto f16 = Field::tower(2, {4});
    return LinearCode(MatQ(f16, 2, 3, {1, 0, 1, 0, 1, 1}));
}

LinearCode hamming74() {
    return LinearCode(hamming_parity_matrix(Field::prime(2), 3));
}

LinearCode shortened63_lifted_f4() {
    const MatQ h7 = hamming_parity_matrix(Field::prime(2), 3);
    MatQ h6(h7.field(), 3, 6);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 6; ++j) h6.set(i, j, h7(i, j));
    }
    return lift_parity(h6, 2);
}

}  // namespace

TEST_CASE("code construction") {
    auto f2 = Field::prime(2);
    SUBCASE("even-weight code") {
        const LinearCode code(MatQ(f2, 1, 3, {1, 1, 1}));
        CHECK(code.length() == 3);
        CHECK(code.dimension() == 2);
        const std::set<std::vector<elem_t>> want = {
            {0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
        CHECK(codeword_set(code) == want);
    }
    SUBCASE("binary repetition code") {
        const LinearCode code(MatQ(f2, 2, 3, {1, 0, 1, 0, 1, 1}));
        const std::set<std::vector<elem_t>> want = {{0, 0, 0}, {1, 1, 1}};
        CHECK(codeword_set(code) == want);
    }
    SUBCASE("same parity-check matrix over F16") {
        const LinearCode code = lifted_repetition_f16();
        CHECK(code.dimension() == 1);
        CHECK(codeword_set(code).size() == 16);
    }
    SUBCASE("rank-deficient parity is rejected") {
        CHECK_THROWS_AS(LinearCode(MatQ(f2, 2, 3, {1, 0, 1, 1, 0, 1})),
                        std::invalid_argument);
        CHECK_THROWS_AS(LinearCode(MatQ(f2, 1, 3)), std::invalid_argument);
    }
}

TEST_CASE("syndromes") {
    const LinearCode code = hamming74();
    const Field& f = *code.field();
    SUBCASE("codewords have zero syndrome") {
        code.for_each_codeword([&](std::span<const elem_t> w) {
            CHECK(code.contains(w));
        });
    }
    SUBCASE("weight-one words read off a parity column") {
        for (std::size_t j = 0; j < code.length(); ++j) {
            std::vector<elem_t> v(code.length(), 0);
            v[j] = 1;
            CHECK(code.syndrome(v) == code.parity().col(j));
        }
    }
    SUBCASE("linearity") {
        std::mt19937_64 rng(3);
        std::uniform_int_distribution<std::uint64_t> dist(0, f.order() - 1);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<elem_t> a(code.length()), b(code.length());
            for (auto& x : a) x = static_cast<elem_t>(dist(rng));
            for (auto& x : b) x = static_cast<elem_t>(dist(rng));
            CHECK(code.syndrome(word_add(f, a, b)) ==
                  word_add(f, code.syndrome(a), code.syndrome(b)));
        }
    }
    SUBCASE("length mismatch") {
        CHECK_THROWS_AS(code.syndrome(std::vector<elem_t>{1, 0}), std::invalid_argument);
    }
}

TEST_CASE("coset representatives solve the syndrome equation") {
    for (const LinearCode& code :
         {hamming74(), lifted_repetition_f16(), shortened63_lifted_f4()}) {
        SyndromeSpace space(code);
        for (std::uint64_t s = 0; s < space.size(); ++s) {
            const auto syn = space.syndrome_at(s);
            CHECK(code.syndrome(code.coset_representative(syn)) == syn);
        }
    }
}

TEST_CASE("coset table for the lifted repetition code over F16") {
    const LinearCode code = lifted_repetition_f16();
    const CosetTable table = CosetTable::build(code, true);
    CHECK(table.size() == 256);
    CHECK(table.distance(0) == 0);
    CHECK(table.covering_radius() == 2);
    CHECK(table.class_sizes() == std::vector<std::uint64_t>{1, 45, 210});

    SUBCASE("distributions partition the ambient space") {
        std::uint64_t total = 0;
        for (std::uint64_t s = 0; s < table.size(); ++s) {
            for (std::uint64_t c : table.distribution(s)) total += c;
        }
        CHECK(total == 4096);  // 16^3
    }
    SUBCASE("BFS distance equals the least weight in each coset") {
        for (std::uint64_t s = 0; s < table.size(); ++s) {
            const auto& dist = table.distribution(s);
            unsigned first = 0;
            while (dist[first] == 0) ++first;
            CHECK(table.distance(s) == first);
        }
    }
}

TEST_CASE("coset distances agree with exhaustive search") {
    for (const LinearCode& code : {shortened63_lifted_f4(), hamming74()}) {
        const CosetTable table = CosetTable::build(code, false);
        SyndromeSpace space(code);
        const auto cws = code.codewords();
        std::vector<std::vector<elem_t>> codeword_list(cws.begin(), cws.end());
        for (const auto& w : oracles::all_words(*code.field(), code.length())) {
            const unsigned expect = oracles::nearest_distance(codeword_list, w);
            CHECK(table.distance(space.index_of(code.syndrome(w))) == expect);
        }
    }
}

TEST_CASE("covering radius") {
    CHECK(covering_radius(hamming74()) == 1);
    CHECK(covering_radius(lifted_repetition_f16()) == 2);
    const LinearCode short63(MatQ(Field::prime(2), 3, 6,
                                  {1, 0, 0, 0, 1, 1,
                                   0, 1, 0, 1, 1, 0,
                                   0, 0, 1, 1, 0, 1}));
    CHECK(covering_radius(short63) == 2);
}

TEST_CASE("minimum distance") {
    auto f2 = Field::prime(2);
    CHECK(LinearCode(MatQ(f2, 2, 3, {1, 0, 1, 0, 1, 1})).min_distance() == 3);
    CHECK(hamming74().min_distance() == 3);
    CHECK(lifted_repetition_f16().min_distance() == 3);
    CHECK(shortened63_lifted_f4().min_distance() == 3);
}

TEST_CASE("complete regularity of the lifted repetition code") {
    const CrResult cr = completely_regular_check(lifted_repetition_f16());
    REQUIRE(cr.regular);
    CHECK(cr.array.rho == 2);
    CHECK(cr.array.b == std::vector<BigInt>{45, 28});
    CHECK(cr.array.c == std::vector<BigInt>{1, 6});
    CHECK(cr.array.a == std::vector<BigInt>{0, 16, 39});
    CHECK(cr.array.mu == std::vector<BigInt>{1, 45, 210});
}

TEST_CASE("perfect codes are completely regular with radius one") {
    const CrResult cr = completely_regular_check(hamming74());
    REQUIRE(cr.regular);
    CHECK(cr.array.rho == 1);
    CHECK(cr.array.b == std::vector<BigInt>{7});
    CHECK(cr.array.c == std::vector<BigInt>{1});
}

TEST_CASE("lifted non-Hamming code fails the checker with a witness") {
    const LinearCode code = shortened63_lifted_f4();
    const CrResult cr = completely_regular_check(code);
    REQUIRE_FALSE(cr.regular);
    REQUIRE(cr.witness.has_value());
    const CrWitness& w = *cr.witness;
    CHECK(w.first < w.second);
    CHECK((w.first_down != w.second_down || w.first_up != w.second_up));
    // both syndromes really sit in the same distance class
    const CosetTable table = CosetTable::build(code, false);
    CHECK(table.distance(w.first) == w.distance_class);
    CHECK(table.distance(w.second) == w.distance_class);
    // deterministic witness
    const CrResult again = completely_regular_check(code);
    CHECK(again.witness->first == w.first);
    CHECK(again.witness->second == w.second);
}

TEST_CASE("vector-level oracle") {
    SUBCASE("even-weight code is completely regular") {
        const LinearCode code(MatQ(Field::prime(2), 1, 3, {1, 1, 1}));
        const CrResult cr = completely_regular_vector_oracle(code);
        REQUIRE(cr.regular);
        CHECK(cr.array.rho == 1);
        CHECK(cr.array.b == std::vector<BigInt>{3});
        CHECK(cr.array.c == std::vector<BigInt>{3});
        CHECK(cr.array.c[0] != 0);
        // the zero class has no downward neighbors
        CHECK(cr.array.a[0] == 0);
    }
    SUBCASE("repetition code over F4 matches the frozen array") {
        // (q,m,r) = (2,2,2); brute force over 64 words
        const LinearCode code = LiftedCode::make(Field::prime(2), 2, 2).code();
        const CrResult oracle = completely_regular_vector_oracle(code);
        REQUIRE(oracle.regular);
        CHECK(oracle.array.b == std::vector<BigInt>{9, 4});
        CHECK(oracle.array.c == std::vector<BigInt>{1, 6});
        CHECK(oracle.array.mu == std::vector<BigInt>{1, 9, 6});
        // and agrees with the coset-level checker
        const CrResult coset = completely_regular_check(code);
        REQUIRE(coset.regular);
        CHECK(coset.array == oracle.array);
    }
    SUBCASE("agreement on irregular instances") {
        const LinearCode code = shortened63_lifted_f4();
        const CrResult coset = completely_regular_check(code);
        const CrResult oracle = completely_regular_vector_oracle(code);
        CHECK(coset.regular == oracle.regular);
        CHECK_FALSE(oracle.regular);
    }
    SUBCASE("agreement on the perfect code") {
        const CrResult coset = completely_regular_check(hamming74());
        const CrResult oracle = completely_regular_vector_oracle(hamming74());
        REQUIRE(oracle.regular);
        CHECK(coset.array == oracle.array);
    }
}

TEST_CASE("coset weight distributions") {
    const LinearCode code(MatQ(Field::prime(2), 1, 3, {1, 1, 1}));
    SUBCASE("zero syndrome gives the code's own weight distribution") {
        const auto dist = coset_weight_distribution(code, std::vector<elem_t>{0});
        CHECK(dist == std::vector<std::uint64_t>{1, 0, 3, 0});
    }
    SUBCASE("entries always sum to the code size") {
        const LinearCode lifted = shortened63_lifted_f4();
        SyndromeSpace space(lifted);
        for (std::uint64_t s = 0; s < space.size(); ++s) {
            const auto dist = coset_weight_distribution(lifted, space.syndrome_at(s));
            std::uint64_t total = 0;
            for (auto c : dist) total += c;
            CHECK(total == 64);  // 4^3 codewords
        }
    }
}

TEST_CASE("caps surface as structured errors") {
    const LinearCode code = lifted_repetition_f16();
    Caps caps;
    caps.coset_steps = 10;
    CHECK_THROWS_AS(CosetTable::build(code, false, caps), CapExceeded);
    Caps vec_caps;
    vec_caps.vectors = 10;
    CHECK_THROWS_AS(completely_regular_vector_oracle(code, vec_caps), CapExceeded);
    CHECK_THROWS_AS(CosetTable::build(code, true, vec_caps), CapExceeded);
    Caps cw_caps;
    cw_caps.codewords = 2;
    CHECK_THROWS_AS(code.codewords(cw_caps), CapExceeded);
    try {
        CosetTable::build(code, false, caps);
        FAIL("expected a cap error");
    } catch (const CapExceeded& e) {
        CHECK(e.cap() == 10);
        CHECK_FALSE(e.required().empty());
    }
}
