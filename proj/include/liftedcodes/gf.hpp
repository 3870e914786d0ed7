#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "liftedcodes/common.hpp"

namespace liftedcodes {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A finite field, either a prime field F_p or an extension of another
/// represented field by a monic irreducible modulus polynomial.
///
/// Elements are handled as canonical integer encodings (elem_t): the
/// coordinate vector over the base field in the power basis 1, x, ...,
/// x^{degree-1}, read as a base-|base| number with the constant coordinate
/// least significant. Encoding 0 is the additive identity and encoding 1 the
/// multiplicative identity at every tower level.
///
/// Fields are immutable after construction and shared through FieldPtr.
/// Identity (pointer equality) is what ties elements to their field; two
/// structurally equal fields built separately are distinct for mixing checks.
class Field : public std::enable_shared_from_this<Field> {
public:
    static constexpr std::uint64_t kDefaultOrderCap = std::uint64_t{1} << 20;

    /// Prime field F_p. Throws std::invalid_argument unless p is prime.
    static FieldPtr prime(std::uint64_t p, std::uint64_t order_cap = kDefaultOrderCap);

    /// Extension of `base` of the given degree (>= 2), using the smallest
    /// monic irreducible modulus in canonical polynomial order (coefficient
    /// vector read as a base-|base| number). Deterministic.
    static FieldPtr extension(FieldPtr base, unsigned degree,
                              std::uint64_t order_cap = kDefaultOrderCap);

    /// Tower F_p ⊂ F_{p^{d1}} ⊂ F_{p^{d1 d2}} ⊂ ... built stage by stage.
    /// A degree-1 stage is the identity. Returns the top field; inner stages
    /// are reachable through base().
    static FieldPtr tower(std::uint64_t p, const std::vector<unsigned>& degrees,
                          std::uint64_t order_cap = kDefaultOrderCap);

    bool is_prime_field() const { return base_ == nullptr; }
    std::uint64_t characteristic() const { return p_; }
    std::uint64_t order() const { return order_; }
    /// Extension degree over base(); 1 for prime fields.
    unsigned degree() const { return degree_; }
    /// Base field; null for prime fields.
    const FieldPtr& base() const { return base_; }
    /// Modulus coefficients, constant term first, length degree()+1 (monic).
    /// Empty for prime fields.
    const std::vector<elem_t>& modulus() const { return modulus_; }

    elem_t zero() const { return 0; }
    elem_t one() const { return 1; }

    elem_t add(elem_t a, elem_t b) const;
    elem_t neg(elem_t a) const;
    elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }
    elem_t mul(elem_t a, elem_t b) const;
    /// Throws std::domain_error for a == 0.
    elem_t inv(elem_t a) const;
    /// Throws std::domain_error for b == 0.
    elem_t div(elem_t a, elem_t b) const;
    elem_t pow(elem_t a, std::uint64_t e) const;

    /// Coordinates over base(), length degree(); {a} for prime fields.
    std::vector<elem_t> coords(elem_t a) const;
    /// Inverse of coords. Throws std::invalid_argument on wrong length or
    /// out-of-range coordinates.
    elem_t from_coords(std::span<const elem_t> v) const;

    /// Least element (canonical encoding order) of multiplicative order
    /// order()-1.
    elem_t primitive_element() const { return generator_; }
    /// Throws std::domain_error for a == 0.
    std::uint64_t multiplicative_order(elem_t a) const;

    /// Text form used in CLI output and golden files, e.g.
    /// "p=2;deg=4;mod=[1,1,0,0,1]" (one ";deg=..;mod=[..]" per tower stage).
    std::string descriptor() const;

    bool valid_encoding(elem_t a) const { return a < order_; }

private:
    Field() = default;

    std::uint64_t p_ = 0;      // characteristic
    std::uint64_t order_ = 0;  // cardinality
    unsigned degree_ = 1;      // over base_
    FieldPtr base_;            // null for prime fields
    std::vector<elem_t> modulus_;
    elem_t generator_ = 1;
    // discrete exp/log with respect to generator_; exp_[i] = generator_^i,
    // log_[exp_[i]] = i, log_[0] unused
    std::vector<elem_t> exp_;
    std::vector<elem_t> log_;
    std::vector<std::uint64_t> order_prime_factors_;

    void check_encoding(elem_t a) const;
};

/// A field element bound to its field; the checked, operator-friendly view of
/// an encoding. Mixing elements of different Field objects throws.
class Elem {
public:
    Elem(FieldPtr field, elem_t value);

    const FieldPtr& field() const { return field_; }
    elem_t value() const { return value_; }

    friend Elem operator+(const Elem& a, const Elem& b);
    friend Elem operator-(const Elem& a, const Elem& b);
    friend Elem operator*(const Elem& a, const Elem& b);
    friend Elem operator/(const Elem& a, const Elem& b);
    Elem operator-() const;
    bool operator==(const Elem& other) const;

private:
    FieldPtr field_;
    elem_t value_;
};

/// Field homomorphism from a smaller field into a bigger one, fixing their
/// common ground field pointwise. Stored as a full lookup table.
struct Embedding {
    FieldPtr from;
    FieldPtr to;
    std::vector<elem_t> table;  // size from->order()

    elem_t operator()(elem_t a) const { return table.at(a); }
    std::vector<elem_t> apply(std::span<const elem_t> v) const;
};

/// Embedding of `small_field` into `big_field`. Requires one of:
///   - the two are the same field object (identity),
///   - small_field is the base of big_field (coordinate embedding),
///   - both are extensions of the same base object, with degrees r | rs.
/// The map sends a primitive element of the small field to the least element
/// of matching multiplicative order in the big field that extends to a
/// homomorphism fixing the common base pointwise. Deterministic.
Embedding subfield_embedding(const FieldPtr& small_field, const FieldPtr& big_field);

}  // namespace liftedcodes
