#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liftedcodes/code.hpp"

namespace liftedcodes {

/// Length (q^m - 1)/(q - 1) of the Hamming code of redundancy m over F_q.
std::uint64_t hamming_length(std::uint64_t q, unsigned m);

/// Parity-check matrix H of the Hamming code over `ground`, m x n, built by
/// the block recursion H_1 = [1],
/// H_m = [ 1 | xi_0..xi_0 | xi_1..xi_1 | ... ; 0 | H_{m-1} | H_{m-1} | ... ]
/// with xi_t running through the ground field in canonical element order.
/// Columns enumerate the projective points of F_q^m, one per point.
MatQ hamming_parity_matrix(const FieldPtr& ground, unsigned m);

/// The ground-field Hamming parity-check matrix read over the extension
/// F_{q^r}: same entries, bigger alphabet. r == 1 keeps the ground field.
LinearCode lift_parity(const MatQ& ground_parity, unsigned r,
                       std::uint64_t field_order_cap = Field::kDefaultOrderCap);

/// A Hamming code over F_q lifted to F_{q^r}, with the syndrome-matrix view:
/// the m syndrome components of a word expand, coordinate by coordinate over
/// F_q, into an r x m matrix whose rank is the word's distance to the code.
class LiftedCode {
public:
    static LiftedCode make(FieldPtr ground, unsigned m, unsigned r,
                           std::uint64_t field_order_cap = Field::kDefaultOrderCap);

    const FieldPtr& ground() const { return ground_; }
    const FieldPtr& ambient() const { return code_.field(); }
    unsigned m() const { return m_; }
    unsigned r() const { return r_; }
    std::uint64_t length() const { return code_.length(); }
    const LinearCode& code() const { return code_; }
    const MatQ& ground_parity() const { return ground_parity_; }

    /// r x m matrix over the ground field whose column j holds the ground
    /// coordinates of syndrome component j. Linear in the word.
    MatQ syndrome_matrix(std::span<const elem_t> word) const;
    MatQ syndrome_matrix_of(std::span<const elem_t> syndrome) const;

    /// rank of the syndrome matrix; equals the distance to the code.
    unsigned rank_distance(std::span<const elem_t> word) const;

    /// Nearest-codeword decoding through the rank factorization of the
    /// syndrome matrix: returns an error of weight exactly rank_distance(word)
    /// with the same syndrome, and the codeword word - error. Deterministic.
    struct Decoded {
        std::vector<elem_t> codeword;
        std::vector<elem_t> error;
    };
    Decoded decode(std::span<const elem_t> word) const;

private:
    LiftedCode(FieldPtr ground, unsigned m, unsigned r, MatQ ground_parity, LinearCode code);

    FieldPtr ground_;
    unsigned m_;
    unsigned r_;
    MatQ ground_parity_;
    LinearCode code_;
    // normalized parity column (first nonzero entry scaled to 1) -> column
    // index; columns are projective points so the map is a bijection
    std::map<std::vector<elem_t>, std::size_t> point_index_;
};

/// min(r, m).
unsigned covering_radius_formula(unsigned m, unsigned r);

/// Closed-form intersection array of the lifted Hamming code:
/// b_i = (q^r - q^i)(q^m - q^i)/(q - 1), c_i = q^{i-1}(q^i - 1)/(q - 1),
/// a_i = (q^r - 1) n - b_i - c_i, mu_i = rank-i matrix count.
IntersectionArray closed_form_array(std::uint64_t q, unsigned m, unsigned r);

struct CheckResult {
    bool ok = false;
    std::string detail;
};

/// Set equality of the lifted code with C + alpha C + ... + alpha^{r-1} C,
/// alpha a primitive element of the extension.
CheckResult representation_check(const LiftedCode& lifted, const Caps& caps = {});

/// Minimum distance of the lift equals the ground code's, and every
/// minimum-weight codeword is a scalar multiple of a ground minimum-weight
/// codeword.
CheckResult min_weight_check(const LiftedCode& lifted, const Caps& caps = {});

/// The coordinatewise subfield embedding maps the (q, m, r) lift into the
/// (q, m, r*s) lift as a subcode, preserving weights.
CheckResult nesting_check(std::uint64_t q, unsigned m, unsigned r, unsigned s,
                          const Caps& caps = {});

/// Closed-form b and c lists agree for (q, m, r) and (q, r, m).
bool rm_symmetry_check(std::uint64_t q, unsigned m, unsigned r);

/// A weight-two coset leader together with its coset weight distribution.
struct CosetEvidence {
    std::vector<elem_t> leader;
    std::vector<std::uint64_t> weights;
};

struct RefutationReport {
    bool completely_regular = true;  // false when the refutation succeeds
    std::optional<CrWitness> witness;
    unsigned base_min_distance = 0;
    CosetEvidence plain;  // both nonzero entries in the ground field
    CosetEvidence mixed;  // one nonzero entry outside the ground field
    bool distributions_differ = false;
};

/// Lifts a non-Hamming base code and exhibits the failure of complete
/// regularity: the class-count witness plus a pair of weight-two cosets with
/// different weight distributions (one leader over the ground field covered
/// by a codeword of weight >= 4, one with a coordinate outside the ground
/// field). Rejects trivial, low-distance, and perfect base codes.
RefutationReport non_hamming_refutation(const MatQ& ground_parity, unsigned r,
                                        const Caps& caps = {});

/// Field of order q = p^e as the tower F_p -> F_q. Rejects q that is not a
/// prime power.
FieldPtr make_ground_field(std::uint64_t q,
                           std::uint64_t order_cap = Field::kDefaultOrderCap);

}  // namespace liftedcodes
