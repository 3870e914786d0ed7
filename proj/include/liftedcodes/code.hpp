#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "liftedcodes/matq.hpp"

namespace liftedcodes {

unsigned word_weight(std::span<const elem_t> v);
std::vector<elem_t> word_add(const Field& f, std::span<const elem_t> a,
                             std::span<const elem_t> b);
std::vector<elem_t> word_sub(const Field& f, std::span<const elem_t> a,
                             std::span<const elem_t> b);
std::vector<elem_t> word_scale(const Field& f, elem_t s, std::span<const elem_t> v);
unsigned hamming_distance(std::span<const elem_t> a, std::span<const elem_t> b);

/// Counter over F^n in canonical index order (index = sum of digit_i * Q^i).
/// advance() reports the digit changes it made, so callers can maintain
/// incremental state such as weights or syndromes.
class WordOdometer {
public:
    struct Change {
        std::size_t pos;
        elem_t before;
        elem_t after;
    };

    WordOdometer(std::uint64_t order, std::size_t length)
        : order_(order), word_(length, 0), index_(0) {}

    const std::vector<elem_t>& word() const { return word_; }
    std::uint64_t index() const { return index_; }
    const std::vector<Change>& changes() const { return changes_; }

    /// Step to the next word; false once the space is exhausted.
    bool advance() {
        changes_.clear();
        ++index_;
        for (std::size_t pos = 0; pos < word_.size(); ++pos) {
            const elem_t before = word_[pos];
            if (before + 1 < order_) {
                word_[pos] = before + 1;
                changes_.push_back({pos, before, word_[pos]});
                return true;
            }
            word_[pos] = 0;
            changes_.push_back({pos, before, 0});
        }
        return false;
    }

private:
    std::uint64_t order_;
    std::vector<elem_t> word_;
    std::uint64_t index_;
    std::vector<Change> changes_;
};

/// A linear code given by a full-row-rank parity-check matrix H over its
/// ambient field: the code is the kernel {v : v H^T = 0}. Construction
/// rejects rank-deficient H rather than silently reducing it.
class LinearCode {
public:
    explicit LinearCode(MatQ parity);

    const MatQ& parity() const { return parity_; }
    const FieldPtr& field() const { return parity_.field(); }
    std::uint64_t field_order() const { return parity_.field()->order(); }
    std::size_t length() const { return parity_.cols(); }
    std::size_t redundancy() const { return parity_.rows(); }
    std::size_t dimension() const { return length() - redundancy(); }

    /// v H^T, length redundancy(). Zero exactly on codewords.
    std::vector<elem_t> syndrome(std::span<const elem_t> word) const;
    bool contains(std::span<const elem_t> word) const;

    /// Any word with the given syndrome (zero outside the pivot positions).
    std::vector<elem_t> coset_representative(std::span<const elem_t> syndrome) const;

    /// Streams all Q^k codewords (enumeration order is fixed by the kernel
    /// basis; the zero word comes first).
    void for_each_codeword(const std::function<void(std::span<const elem_t>)>& fn,
                           const Caps& caps = {}) const;
    std::vector<std::vector<elem_t>> codewords(const Caps& caps = {}) const;

    /// Minimum weight of a nonzero codeword.
    unsigned min_distance(const Caps& caps = {}) const;

private:
    MatQ parity_;
    RowReduction rref_;
    std::vector<std::vector<elem_t>> kernel_basis_;
};

/// Indexing and single-error steps on the syndrome space F^{n-k} of a code.
/// Neighbor t of a syndrome s is s + gamma * h_j with t = j*(Q-1) + (gamma-1),
/// covering all words at Hamming distance one from any coset member.
class SyndromeSpace {
public:
    explicit SyndromeSpace(const LinearCode& code, const Caps& caps = {});

    std::uint64_t size() const { return size_; }
    unsigned neighbor_count() const { return static_cast<unsigned>(offsets_digits_.size()); }
    std::uint64_t neighbor(std::uint64_t sidx, unsigned t) const;
    std::uint64_t index_of(std::span<const elem_t> syndrome) const;
    std::vector<elem_t> syndrome_at(std::uint64_t sidx) const;
    /// Digit vector of the t-th single-error syndrome offset.
    std::span<const elem_t> offset(unsigned t) const;

private:
    FieldPtr field_;
    std::size_t redundancy_;
    std::uint64_t size_;
    std::vector<std::uint64_t> powers_;
    std::vector<std::vector<elem_t>> offsets_digits_;
};

/// Per-syndrome coset distances (BFS layers over the syndrome graph), plus
/// optional full coset weight distributions from ambient enumeration.
class CosetTable {
public:
    static CosetTable build(const LinearCode& code, bool with_distributions,
                            const Caps& caps = {});

    std::uint64_t size() const { return distance_.size(); }
    unsigned distance(std::uint64_t sidx) const { return distance_[sidx]; }
    unsigned covering_radius() const { return rho_; }
    /// Number of cosets per distance class, index 0..covering_radius().
    std::vector<std::uint64_t> class_sizes() const;
    bool has_distributions() const { return !distributions_.empty(); }
    /// Weight counts (length n+1) of the coset with the given syndrome.
    const std::vector<std::uint64_t>& distribution(std::uint64_t sidx) const;

private:
    std::vector<std::uint16_t> distance_;
    std::vector<std::vector<std::uint64_t>> distributions_;
    unsigned rho_ = 0;
};

/// (b_0..b_{rho-1}; c_1..c_rho) with the derived a_0..a_rho and the coset
/// counts mu_0..mu_rho.
struct IntersectionArray {
    unsigned rho = 0;
    std::vector<BigInt> b;
    std::vector<BigInt> c;
    std::vector<BigInt> a;
    std::vector<BigInt> mu;

    bool operator==(const IntersectionArray&) const = default;
    /// b and c only; a and mu depend on the code, not just the array shape.
    bool same_bc(const IntersectionArray& other) const {
        return b == other.b && c == other.c;
    }
};

/// Two objects of the same distance class whose neighbor counts differ.
/// Objects are syndromes for the coset-level checker and ambient word indices
/// for the vector-level oracle.
struct CrWitness {
    std::uint64_t first = 0;
    std::uint64_t second = 0;
    unsigned distance_class = 0;
    unsigned first_down = 0, first_up = 0;
    unsigned second_down = 0, second_up = 0;
    bool vector_level = false;
};

struct CrResult {
    bool regular = false;
    IntersectionArray array;  // meaningful only when regular
    std::optional<CrWitness> witness;
};

/// Coset-level regularity check: for every syndrome at distance l, counts the
/// single-error steps landing at distance l-1 and l+1 and requires both
/// counts constant on each class. Equivalent to the per-vector definition for
/// linear codes since neighbor distances are translation-invariant under
/// codewords. On failure the witness is the offending class with the smallest
/// leading syndrome, paired with its first deviating member.
CrResult completely_regular_check(const LinearCode& code, const Caps& caps = {});

/// Brute-force oracle for the same property, enumerating every ambient word
/// and computing nearest-codeword distances directly. Independent of the
/// syndrome BFS path; must agree with completely_regular_check.
CrResult completely_regular_vector_oracle(const LinearCode& code, const Caps& caps = {});

unsigned covering_radius(const LinearCode& code, const Caps& caps = {});

std::vector<std::uint64_t> coset_weight_distribution(const LinearCode& code,
                                                     std::span<const elem_t> syndrome,
                                                     const Caps& caps = {});

}  // namespace liftedcodes
