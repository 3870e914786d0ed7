#pragma once

// Independent brute-force oracles used by the tests; these deliberately avoid
// the library's fast paths (discrete-log tables, syndrome BFS, rank formulas)
// so that agreement is evidence.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "liftedcodes/code.hpp"

namespace oracles {

using liftedcodes::elem_t;
using liftedcodes::Field;
using liftedcodes::FieldPtr;

/// Multiplicative order by repeated multiplication.
inline std::uint64_t mul_order(const Field& f, elem_t a) {
    std::uint64_t order = 1;
    elem_t x = a;
    while (x != 1) {
        x = f.mul(x, a);
        ++order;
    }
    return order;
}

/// All words of F^n, in canonical index order.
inline std::vector<std::vector<elem_t>> all_words(const Field& f, std::size_t n) {
    std::vector<std::vector<elem_t>> out;
    liftedcodes::WordOdometer odo(f.order(), n);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= f.order();
    for (std::uint64_t i = 0; i < total; ++i) {
        out.push_back(odo.word());
        if (i + 1 < total) odo.advance();
    }
    return out;
}

/// Nearest-codeword distance by direct search.
inline unsigned nearest_distance(const std::vector<std::vector<elem_t>>& codewords,
                                 std::span<const elem_t> word) {
    unsigned best = word.size() + 1;
    for (const auto& cw : codewords) {
        best = std::min(best, liftedcodes::hamming_distance(word, cw));
    }
    return best;
}

/// Polynomial product over f, coefficients constant-term first. Used to test
/// irreducibility claims by exhibiting (or failing to exhibit) a
/// factorization, independently of the trial-division path in the library.
inline std::vector<elem_t> poly_product(const Field& f, const std::vector<elem_t>& a,
                                        const std::vector<elem_t>& b) {
    std::vector<elem_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
        }
    }
    return out;
}

/// All monic polynomials of the given degree over f.
inline std::vector<std::vector<elem_t>> monic_polys(const Field& f, unsigned degree) {
    std::vector<std::vector<elem_t>> out;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < degree; ++i) total *= f.order();
    for (std::uint64_t v = 0; v < total; ++v) {
        std::vector<elem_t> p(degree + 1, 0);
        std::uint64_t t = v;
        for (unsigned i = 0; i < degree; ++i) {
            p[i] = static_cast<elem_t>(t % f.order());
            t /= f.order();
        }
        p[degree] = 1;
        out.push_back(std::move(p));
    }
    return out;
}

/// True when the monic polynomial factors as a product of two monic
/// polynomials of positive degree (found by enumeration of all split shapes).
inline bool has_monic_factorization(const Field& f, const std::vector<elem_t>& poly) {
    const unsigned degree = static_cast<unsigned>(poly.size() - 1);
    for (unsigned d = 1; 2 * d <= degree; ++d) {
        for (const auto& left : monic_polys(f, d)) {
            for (const auto& right : monic_polys(f, degree - d)) {
                if (poly_product(f, left, right) == poly) return true;
            }
        }
    }
    return false;
}

}  // namespace oracles
