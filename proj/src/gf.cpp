#include "liftedcodes/gf.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

namespace liftedcodes {
namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> factors;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

// Polynomials over a built field: coefficient vectors, constant term first.

std::vector<elem_t> poly_mul(const Field& f, std::span<const elem_t> a,
                             std::span<const elem_t> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<elem_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
        }
    }
    return out;
}

// Remainder of a modulo the monic polynomial m, in place.
void poly_rem_monic(const Field& f, std::vector<elem_t>& a, std::span<const elem_t> m) {
    const std::size_t deg_m = m.size() - 1;
    for (std::size_t i = a.size(); i-- > deg_m;) {
        const elem_t c = a[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg_m; ++j) {
            a[i - deg_m + j] = f.sub(a[i - deg_m + j], f.mul(c, m[j]));
        }
    }
    a.resize(deg_m);
}

bool poly_is_zero(const std::vector<elem_t>& a) {
    return std::all_of(a.begin(), a.end(), [](elem_t c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Field& f, std::span<const elem_t> m) {
    const std::size_t deg = m.size() - 1;
    if (deg == 1) return true;
    const std::uint64_t s = f.order();
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::vector<elem_t> divisor(d + 1, 0);
        divisor[d] = 1;
        const std::uint64_t count = checked_pow(s, static_cast<unsigned>(d),
                                                std::numeric_limits<std::uint64_t>::max())
                                        .value();
        for (std::uint64_t v = 0; v < count; ++v) {
            std::uint64_t t = v;
            for (std::size_t i = 0; i < d; ++i) {
                divisor[i] = static_cast<elem_t>(t % s);
                t /= s;
            }
            std::vector<elem_t> rem(m.begin(), m.end());
            poly_rem_monic(f, rem, divisor);
            if (poly_is_zero(rem)) return false;
        }
    }
    return true;
}

// Smallest monic irreducible of the given degree in canonical polynomial
// order (coefficient vector read as a base-|f| number).
std::vector<elem_t> smallest_irreducible(const Field& f, unsigned degree) {
    const std::uint64_t s = f.order();
    const std::uint64_t count =
        checked_pow(s, degree, std::numeric_limits<std::uint64_t>::max()).value();
    std::vector<elem_t> m(degree + 1, 0);
    m[degree] = 1;
    for (std::uint64_t v = 0; v < count; ++v) {
        std::uint64_t t = v;
        for (unsigned i = 0; i < degree; ++i) {
            m[i] = static_cast<elem_t>(t % s);
            t /= s;
        }
        if (is_irreducible(f, m)) return m;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

void Field::check_encoding(elem_t a) const {
    if (a >= order_) {
        throw std::invalid_argument("element encoding " + std::to_string(a) +
                                    " out of range for field of order " +
                                    std::to_string(order_));
    }
}

elem_t Field::add(elem_t a, elem_t b) const {
    check_encoding(a);
    check_encoding(b);
    if (p_ == 2) return a ^ b;
    std::uint64_t r = 0;
    std::uint64_t place = 1;
    std::uint64_t x = a;
    std::uint64_t y = b;
    while (x != 0 || y != 0) {
        r += ((x % p_ + y % p_) % p_) * place;
        place *= p_;
        x /= p_;
        y /= p_;
    }
    return static_cast<elem_t>(r);
}

elem_t Field::neg(elem_t a) const {
    check_encoding(a);
    if (p_ == 2) return a;
    std::uint64_t r = 0;
    std::uint64_t place = 1;
    std::uint64_t x = a;
    while (x != 0) {
        r += ((p_ - x % p_) % p_) * place;
        place *= p_;
        x /= p_;
    }
    return static_cast<elem_t>(r);
}

elem_t Field::mul(elem_t a, elem_t b) const {
    check_encoding(a);
    check_encoding(b);
    if (a == 0 || b == 0) return 0;
    const std::uint64_t n = order_ - 1;
    return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % n];
}

elem_t Field::inv(elem_t a) const {
    check_encoding(a);
    if (a == 0) throw std::domain_error("inverse of zero");
    const std::uint64_t n = order_ - 1;
    return exp_[(n - log_[a]) % n];
}

elem_t Field::div(elem_t a, elem_t b) const {
    check_encoding(a);
    check_encoding(b);
    if (b == 0) throw std::domain_error("division by zero");
    if (a == 0) return 0;
    const std::uint64_t n = order_ - 1;
    return exp_[(static_cast<std::uint64_t>(log_[a]) + n - log_[b]) % n];
}

elem_t Field::pow(elem_t a, std::uint64_t e) const {
    check_encoding(a);
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t n = order_ - 1;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % n)) % n];
}

std::vector<elem_t> Field::coords(elem_t a) const {
    check_encoding(a);
    if (is_prime_field()) return {a};
    const std::uint64_t s = base_->order();
    std::vector<elem_t> c(degree_);
    std::uint64_t x = a;
    for (unsigned i = 0; i < degree_; ++i) {
        c[i] = static_cast<elem_t>(x % s);
        x /= s;
    }
    return c;
}

elem_t Field::from_coords(std::span<const elem_t> v) const {
    if (v.size() != degree_) {
        throw std::invalid_argument("coordinate vector has length " +
                                    std::to_string(v.size()) + ", expected " +
                                    std::to_string(degree_));
    }
    const std::uint64_t s = is_prime_field() ? order_ : base_->order();
    std::uint64_t r = 0;
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] >= s) throw std::invalid_argument("coordinate out of range");
        r = r * s + v[i];
    }
    return static_cast<elem_t>(r);
}

std::uint64_t Field::multiplicative_order(elem_t a) const {
    check_encoding(a);
    if (a == 0) throw std::domain_error("multiplicative order of zero");
    std::uint64_t ord = order_ - 1;
    for (std::uint64_t f : order_prime_factors_) {
        while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
    }
    return ord;
}

std::string Field::descriptor() const {
    if (is_prime_field()) return "p=" + std::to_string(p_);
    std::ostringstream os;
    os << base_->descriptor() << ";deg=" << degree_ << ";mod=[";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i > 0) os << ",";
        os << modulus_[i];
    }
    os << "]";
    return os.str();
}

FieldPtr Field::prime(std::uint64_t p, std::uint64_t order_cap) {
    if (!is_prime_u64(p)) {
        throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    }
    if (p > order_cap) {
        throw CapExceeded("field construction", std::to_string(p), order_cap);
    }
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->order_ = p;
    f->degree_ = 1;
    const std::uint64_t n = p - 1;
    f->order_prime_factors_ = prime_factors(n);

    auto modmul = [p](std::uint64_t a, std::uint64_t b) { return a * b % p; };
    auto modpow = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e != 0) {
            if (e & 1) r = modmul(r, a);
            a = modmul(a, a);
            e >>= 1;
        }
        return r;
    };
    elem_t g = 1;
    for (std::uint64_t cand = 1; cand < p; ++cand) {
        bool full = true;
        for (std::uint64_t q : f->order_prime_factors_) {
            if (modpow(cand, n / q) == 1) {
                full = false;
                break;
            }
        }
        if (full) {
            g = static_cast<elem_t>(cand);
            break;
        }
    }
    f->generator_ = g;
    f->exp_.resize(n);
    f->log_.assign(p, 0);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        f->exp_[i] = static_cast<elem_t>(x);
        f->log_[x] = static_cast<elem_t>(i);
        x = modmul(x, g);
    }
    return f;
}

FieldPtr Field::extension(FieldPtr base, unsigned degree, std::uint64_t order_cap) {
    if (!base) throw std::invalid_argument("extension needs a base field");
    if (degree == 0) throw std::invalid_argument("extension degree must be positive");
    if (degree == 1) return base;
    auto order = checked_pow(base->order(), degree, order_cap);
    if (!order) {
        throw CapExceeded("field construction",
                          std::to_string(base->order()) + "^" + std::to_string(degree),
                          order_cap);
    }
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = base->characteristic();
    f->order_ = *order;
    f->degree_ = degree;
    f->base_ = base;
    f->modulus_ = smallest_irreducible(*base, degree);

    const std::uint64_t s = base->order();
    const std::uint64_t n = f->order_ - 1;
    auto decode = [&](elem_t a) {
        std::vector<elem_t> c(degree);
        std::uint64_t x = a;
        for (unsigned i = 0; i < degree; ++i) {
            c[i] = static_cast<elem_t>(x % s);
            x /= s;
        }
        return c;
    };
    auto encode = [&](const std::vector<elem_t>& c) {
        std::uint64_t r = 0;
        for (std::size_t i = degree; i-- > 0;) r = r * s + c[i];
        return static_cast<elem_t>(r);
    };
    auto slow_mul = [&](elem_t a, elem_t b) {
        if (a == 0 || b == 0) return elem_t{0};
        auto t = poly_mul(*base, decode(a), decode(b));
        t.resize(2 * degree - 1, 0);
        poly_rem_monic(*base, t, f->modulus_);
        return encode(t);
    };
    auto slow_pow = [&](elem_t a, std::uint64_t e) {
        elem_t r = 1;
        while (e != 0) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };

    f->order_prime_factors_ = prime_factors(n);
    elem_t g = 1;
    for (std::uint64_t cand = 1; cand < f->order_; ++cand) {
        bool full = true;
        for (std::uint64_t q : f->order_prime_factors_) {
            if (slow_pow(static_cast<elem_t>(cand), n / q) == 1) {
                full = false;
                break;
            }
        }
        if (full) {
            g = static_cast<elem_t>(cand);
            break;
        }
    }
    f->generator_ = g;
    f->exp_.resize(n);
    f->log_.assign(f->order_, 0);
    elem_t x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        f->exp_[i] = x;
        f->log_[x] = static_cast<elem_t>(i);
        x = slow_mul(x, g);
    }
    return f;
}

FieldPtr Field::tower(std::uint64_t p, const std::vector<unsigned>& degrees,
                      std::uint64_t order_cap) {
    if (degrees.empty()) throw std::invalid_argument("tower needs at least one degree");
    FieldPtr f = prime(p, order_cap);
    for (unsigned d : degrees) {
        if (d == 0) throw std::invalid_argument("extension degree must be positive");
        f = extension(f, d, order_cap);
    }
    return f;
}

Elem::Elem(FieldPtr field, elem_t value) : field_(std::move(field)), value_(value) {
    if (!field_) throw std::invalid_argument("element needs a field");
    if (!field_->valid_encoding(value_)) {
        throw std::invalid_argument("element encoding out of range");
    }
}

namespace {
const Field& common_field(const Elem& a, const Elem& b) {
    if (a.field() != b.field()) {
        throw std::invalid_argument("elements belong to different fields (" +
                                    a.field()->descriptor() + " vs " +
                                    b.field()->descriptor() + ")");
    }
    return *a.field();
}
}  // namespace

Elem operator+(const Elem& a, const Elem& b) {
    return {a.field(), common_field(a, b).add(a.value(), b.value())};
}
Elem operator-(const Elem& a, const Elem& b) {
    return {a.field(), common_field(a, b).sub(a.value(), b.value())};
}
Elem operator*(const Elem& a, const Elem& b) {
    return {a.field(), common_field(a, b).mul(a.value(), b.value())};
}
Elem operator/(const Elem& a, const Elem& b) {
    return {a.field(), common_field(a, b).div(a.value(), b.value())};
}
Elem Elem::operator-() const { return {field_, field_->neg(value_)}; }
bool Elem::operator==(const Elem& other) const {
    return field_ == other.field_ && value_ == other.value_;
}

std::vector<elem_t> Embedding::apply(std::span<const elem_t> v) const {
    std::vector<elem_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = table.at(v[i]);
    return out;
}

Embedding subfield_embedding(const FieldPtr& small_field, const FieldPtr& big_field) {
    if (!small_field || !big_field) throw std::invalid_argument("embedding needs two fields");

    // The small field sits in the big field's tower: encodings carry over.
    for (FieldPtr anc = big_field; anc; anc = anc->base()) {
        if (anc == small_field) {
            Embedding e{small_field, big_field, {}};
            e.table.resize(small_field->order());
            for (std::uint64_t x = 0; x < small_field->order(); ++x) {
                e.table[x] = static_cast<elem_t>(x);
            }
            return e;
        }
    }

    const FieldPtr& ground = small_field->base();
    if (!ground || ground != big_field->base()) {
        throw std::invalid_argument("subfield embedding needs a shared base field");
    }
    if (big_field->degree() % small_field->degree() != 0) {
        throw std::invalid_argument("embedding degree " + std::to_string(small_field->degree()) +
                                    " does not divide " + std::to_string(big_field->degree()));
    }

    const std::uint64_t n_small = small_field->order() - 1;
    const elem_t g = small_field->primitive_element();
    for (std::uint64_t y = 1; y < big_field->order(); ++y) {
        if (big_field->multiplicative_order(static_cast<elem_t>(y)) != n_small) continue;
        std::vector<elem_t> table(small_field->order(), 0);
        elem_t ps = 1;
        elem_t pb = 1;
        for (std::uint64_t i = 0; i < n_small; ++i) {
            table[ps] = pb;
            ps = small_field->mul(ps, g);
            pb = big_field->mul(pb, static_cast<elem_t>(y));
        }
        bool ok = true;
        for (std::uint64_t x = 0; x < ground->order() && ok; ++x) {
            ok = table[x] == x;
        }
        // The map is multiplicative by construction; together with
        // phi(1 + x) == 1 + phi(x) for all x that forces additivity.
        for (std::uint64_t x = 1; x < small_field->order() && ok; ++x) {
            const elem_t sx = static_cast<elem_t>(x);
            ok = table[small_field->add(1, sx)] ==
                 big_field->add(1, table[sx]);
        }
        if (ok) return Embedding{small_field, big_field, std::move(table)};
    }
    throw std::logic_error("no subfield embedding found; field construction is inconsistent");
}

}  // namespace liftedcodes
