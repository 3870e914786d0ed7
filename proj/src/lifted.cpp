#include "liftedcodes/lifted.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace liftedcodes {

namespace {

std::string word_text(std::span<const elem_t> w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) os << ",";
        os << w[i];
    }
    os << ")";
    return os.str();
}

std::vector<elem_t> normalized(const Field& f, std::vector<elem_t> v) {
    for (elem_t x : v) {
        if (x != 0) {
            const elem_t s = f.inv(x);
            for (elem_t& y : v) y = f.mul(s, y);
            break;
        }
    }
    return v;
}

}  // namespace

std::uint64_t hamming_length(std::uint64_t q, unsigned m) {
    const auto qm = checked_pow(q, m, std::uint64_t{1} << 32);
    if (!qm) {
        throw CapExceeded("Hamming code length", std::to_string(q) + "^" + std::to_string(m),
                          std::uint64_t{1} << 32);
    }
    return (*qm - 1) / (q - 1);
}

MatQ hamming_parity_matrix(const FieldPtr& ground, unsigned m) {
    if (!ground) throw std::invalid_argument("Hamming matrix needs a ground field");
    if (m == 0) throw std::invalid_argument("Hamming redundancy m must be positive");
    const std::uint64_t q = ground->order();
    MatQ h(ground, 1, 1, {1});
    for (unsigned level = 2; level <= m; ++level) {
        const std::size_t prev_n = h.cols();
        const std::size_t n = static_cast<std::size_t>(hamming_length(q, level));
        MatQ next(ground, level, n);
        next.set(0, 0, 1);
        for (elem_t xi = 0; xi < q; ++xi) {
            const std::size_t base = 1 + static_cast<std::size_t>(xi) * prev_n;
            for (std::size_t j = 0; j < prev_n; ++j) {
                next.set(0, base + j, xi);
                for (std::size_t i = 0; i < level - 1; ++i) {
                    next.set(i + 1, base + j, h(i, j));
                }
            }
        }
        h = std::move(next);
    }
    return h;
}

LinearCode lift_parity(const MatQ& ground_parity, unsigned r, std::uint64_t field_order_cap) {
    if (r == 0) throw std::invalid_argument("lift degree r must be positive");
    FieldPtr ambient = Field::extension(ground_parity.field(), r, field_order_cap);
    // Ground elements keep their encodings in the extension tower.
    return LinearCode(MatQ(ambient, ground_parity.rows(), ground_parity.cols(),
                           ground_parity.entries()));
}

LiftedCode::LiftedCode(FieldPtr ground, unsigned m, unsigned r, MatQ ground_parity,
                       LinearCode code)
    : ground_(std::move(ground)),
      m_(m),
      r_(r),
      ground_parity_(std::move(ground_parity)),
      code_(std::move(code)) {
    for (std::size_t j = 0; j < ground_parity_.cols(); ++j) {
        point_index_.emplace(normalized(*ground_, ground_parity_.col(j)), j);
    }
    if (point_index_.size() != ground_parity_.cols()) {
        throw std::logic_error("parity columns do not enumerate distinct projective points");
    }
}

LiftedCode LiftedCode::make(FieldPtr ground, unsigned m, unsigned r,
                            std::uint64_t field_order_cap) {
    if (!ground) throw std::invalid_argument("lift needs a ground field");
    if (r == 0) throw std::invalid_argument("lift degree r must be positive");
    MatQ h = hamming_parity_matrix(ground, m);
    LinearCode code = lift_parity(h, r, field_order_cap);
    return LiftedCode(std::move(ground), m, r, std::move(h), std::move(code));
}

MatQ LiftedCode::syndrome_matrix(std::span<const elem_t> word) const {
    return syndrome_matrix_of(code_.syndrome(word));
}

MatQ LiftedCode::syndrome_matrix_of(std::span<const elem_t> syndrome) const {
    if (syndrome.size() != m_) throw std::invalid_argument("syndrome length mismatch");
    MatQ s(ground_, r_, m_);
    const Field& amb = *ambient();
    for (std::size_t j = 0; j < m_; ++j) {
        if (r_ == 1) {
            s.set(0, j, syndrome[j]);
            continue;
        }
        const auto c = amb.coords(syndrome[j]);
        for (std::size_t i = 0; i < r_; ++i) s.set(i, j, c[i]);
    }
    return s;
}

unsigned LiftedCode::rank_distance(std::span<const elem_t> word) const {
    return static_cast<unsigned>(syndrome_matrix(word).rank());
}

LiftedCode::Decoded LiftedCode::decode(std::span<const elem_t> word) const {
    const Field& g = *ground_;
    const Field& amb = *ambient();
    const MatQ s = syndrome_matrix(word);
    const auto fact = s.rank_factorization();
    const std::size_t l = fact.row_factor.rows();

    std::vector<elem_t> error(code_.length(), 0);
    for (std::size_t i = 0; i < l; ++i) {
        // Each independent row of the row factor is a projective point, hence
        // a scalar multiple of exactly one parity column.
        const auto row = fact.row_factor.row(i);
        const auto norm = normalized(g, row);
        const auto it = point_index_.find(norm);
        if (it == point_index_.end()) {
            throw std::logic_error("row factor does not match any parity column");
        }
        const std::size_t col = it->second;
        std::size_t t = 0;
        while (row[t] == 0) ++t;
        const elem_t lambda = g.div(row[t], ground_parity_(t, col));
        auto u = fact.col_factor.col(i);
        for (elem_t& x : u) x = g.mul(lambda, x);
        error[col] = (r_ == 1) ? u[0] : amb.from_coords(u);
    }
    return {word_sub(amb, word, error), std::move(error)};
}

unsigned covering_radius_formula(unsigned m, unsigned r) { return std::min(m, r); }

IntersectionArray closed_form_array(std::uint64_t q, unsigned m, unsigned r) {
    if (q < 2 || m == 0 || r == 0) {
        throw std::invalid_argument("closed-form array needs q >= 2, m >= 1, r >= 1");
    }
    const unsigned rho = covering_radius_formula(m, r);
    const BigInt bq(q);
    const BigInt qr = boost::multiprecision::pow(bq, r);
    const BigInt qm = boost::multiprecision::pow(bq, m);
    const BigInt n = (qm - 1) / (bq - 1);
    IntersectionArray arr;
    arr.rho = rho;
    for (unsigned i = 0; i < rho; ++i) {
        const BigInt qi = boost::multiprecision::pow(bq, i);
        arr.b.push_back((qr - qi) * (qm - qi) / (bq - 1));
    }
    for (unsigned i = 1; i <= rho; ++i) {
        arr.c.push_back(boost::multiprecision::pow(bq, i - 1) *
                        (boost::multiprecision::pow(bq, i) - 1) / (bq - 1));
    }
    const BigInt total = (qr - 1) * n;
    for (unsigned i = 0; i <= rho; ++i) {
        const BigInt bi = (i < rho) ? arr.b[i] : BigInt(0);
        const BigInt ci = (i > 0) ? arr.c[i - 1] : BigInt(0);
        arr.a.push_back(total - bi - ci);
    }
    for (unsigned i = 0; i <= rho; ++i) arr.mu.push_back(matrix_rank_count(q, r, m, i));
    return arr;
}

CheckResult representation_check(const LiftedCode& lifted, const Caps& caps) {
    const LinearCode base(lifted.ground_parity());
    const auto base_words = base.codewords(caps);
    const unsigned r = lifted.r();
    const auto tuples = checked_pow(base_words.size(), r, caps.codewords);
    if (!tuples) {
        throw CapExceeded("sum-set representation check",
                          std::to_string(base_words.size()) + "^" + std::to_string(r),
                          caps.codewords);
    }

    const Field& amb = *lifted.ambient();
    const elem_t alpha = amb.primitive_element();
    std::vector<elem_t> alpha_pow(r);
    alpha_pow[0] = 1;
    for (unsigned i = 1; i < r; ++i) alpha_pow[i] = amb.mul(alpha_pow[i - 1], alpha);

    std::set<std::vector<elem_t>> sums;
    const std::size_t n = lifted.length();
    std::vector<std::size_t> pick(r, 0);
    while (true) {
        std::vector<elem_t> w(n, 0);
        for (unsigned i = 0; i < r; ++i) {
            const auto& cw = base_words[pick[i]];
            if (pick[i] == 0) continue;  // zero codeword contributes nothing
            for (std::size_t j = 0; j < n; ++j) {
                w[j] = amb.add(w[j], amb.mul(alpha_pow[i], cw[j]));
            }
        }
        sums.insert(std::move(w));
        unsigned level = 0;
        while (level < r && ++pick[level] == base_words.size()) pick[level++] = 0;
        if (level == r) break;
    }

    std::set<std::vector<elem_t>> lifted_words;
    lifted.code().for_each_codeword(
        [&](std::span<const elem_t> w) { lifted_words.emplace(w.begin(), w.end()); }, caps);

    if (sums == lifted_words) {
        return {true, "sum-set equals the lifted code (" +
                          std::to_string(lifted_words.size()) + " codewords)"};
    }
    return {false, "sum-set has " + std::to_string(sums.size()) + " words, lifted code has " +
                       std::to_string(lifted_words.size())};
}

CheckResult min_weight_check(const LiftedCode& lifted, const Caps& caps) {
    const LinearCode base(lifted.ground_parity());
    const unsigned base_min = base.min_distance(caps);
    const std::uint64_t q = lifted.ground()->order();
    const Field& amb = *lifted.ambient();

    unsigned lift_min = 0;
    std::vector<std::vector<elem_t>> minimal;
    lifted.code().for_each_codeword(
        [&](std::span<const elem_t> w) {
            const unsigned wt = word_weight(w);
            if (wt == 0) return;
            if (lift_min == 0 || wt < lift_min) {
                lift_min = wt;
                minimal.clear();
            }
            if (wt == lift_min) minimal.emplace_back(w.begin(), w.end());
        },
        caps);
    if (lift_min != base_min) {
        return {false, "lift minimum weight " + std::to_string(lift_min) +
                           " differs from ground minimum weight " + std::to_string(base_min)};
    }
    for (const auto& w : minimal) {
        std::size_t t = 0;
        while (w[t] == 0) ++t;
        const auto scaled = word_scale(amb, amb.inv(w[t]), w);
        const bool in_ground = std::all_of(scaled.begin(), scaled.end(),
                                           [q](elem_t x) { return x < q; });
        if (!in_ground || !base.contains(scaled)) {
            return {false, "minimum-weight codeword " + word_text(w) +
                               " is not a scalar multiple of a ground codeword"};
        }
    }
    return {true, "minimum weight " + std::to_string(lift_min) + "; all " +
                      std::to_string(minimal.size()) +
                      " minimum-weight codewords are scalar multiples of ground codewords"};
}

CheckResult nesting_check(std::uint64_t q, unsigned m, unsigned r, unsigned s,
                          const Caps& caps) {
    if (s == 0 || r == 0) throw std::invalid_argument("nesting needs r, s >= 1");
    FieldPtr ground = make_ground_field(q);
    const LiftedCode small = LiftedCode::make(ground, m, r);
    const LiftedCode big = LiftedCode::make(ground, m, r * s);
    const Embedding phi = subfield_embedding(small.ambient(), big.ambient());

    std::set<std::vector<elem_t>> big_words;
    big.code().for_each_codeword(
        [&](std::span<const elem_t> w) { big_words.emplace(w.begin(), w.end()); }, caps);

    std::size_t mapped = 0;
    CheckResult result{true, ""};
    small.code().for_each_codeword(
        [&](std::span<const elem_t> w) {
            if (!result.ok) return;
            const auto img = phi.apply(w);
            if (!big.code().contains(img) || big_words.find(img) == big_words.end()) {
                result = {false, "image " + word_text(img) + " of " + word_text(w) +
                                     " is not a codeword of the larger lift"};
                return;
            }
            if (word_weight(img) != word_weight(w)) {
                result = {false, "embedding changed the weight of " + word_text(w)};
                return;
            }
            ++mapped;
        },
        caps);
    if (result.ok) {
        result.detail = "all " + std::to_string(mapped) +
                        " codewords embed into the larger lift (checked against its " +
                        std::to_string(big_words.size()) + " codewords)";
    }
    return result;
}

bool rm_symmetry_check(std::uint64_t q, unsigned m, unsigned r) {
    const auto a = closed_form_array(q, m, r);
    const auto b = closed_form_array(q, r, m);
    return a.same_bc(b);
}

namespace {

BigInt sphere_size(std::uint64_t q, std::size_t n, unsigned radius) {
    BigInt total = 0;
    BigInt binom = 1;  // C(n, i)
    BigInt qm1_pow = 1;
    for (unsigned i = 0; i <= radius; ++i) {
        total += binom * qm1_pow;
        binom = binom * BigInt(n - i) / BigInt(i + 1);
        qm1_pow *= (q - 1);
    }
    return total;
}

bool is_perfect(const LinearCode& code, unsigned d) {
    const unsigned e = (d - 1) / 2;
    const BigInt q(code.field_order());
    const BigInt lhs = sphere_size(code.field_order(), code.length(), e) *
                       boost::multiprecision::pow(q, static_cast<unsigned>(code.dimension()));
    return lhs == boost::multiprecision::pow(q, static_cast<unsigned>(code.length()));
}

}  // namespace

RefutationReport non_hamming_refutation(const MatQ& ground_parity, unsigned r,
                                        const Caps& caps) {
    if (r < 2) throw std::invalid_argument("refutation needs a proper lift (r >= 2)");
    const LinearCode base(ground_parity);
    if (base.dimension() < 1 || base.redundancy() < 2) {
        throw std::invalid_argument("base code is trivial (needs 1 < |C| < q^{n-1})");
    }
    const unsigned d = base.min_distance(caps);
    if (d < 3) {
        throw std::invalid_argument("base code has minimum distance " + std::to_string(d) +
                                    ", need at least 3");
    }
    if (is_perfect(base, d)) {
        throw std::invalid_argument(
            "base code is perfect; its lift is completely regular, nothing to refute");
    }

    const LinearCode lifted = lift_parity(ground_parity, r);
    const Field& amb = *lifted.field();
    const std::uint64_t q = ground_parity.field()->order();
    const std::size_t n = lifted.length();

    RefutationReport report;
    const CrResult cr = completely_regular_check(lifted, caps);
    report.completely_regular = cr.regular;
    report.witness = cr.witness;
    report.base_min_distance = d;

    const CosetTable table = CosetTable::build(lifted, false, caps);
    SyndromeSpace space(lifted, caps);
    auto coset_distance = [&](std::span<const elem_t> w) {
        return table.distance(space.index_of(lifted.syndrome(w)));
    };
    auto distribution = [&](std::span<const elem_t> w) {
        return coset_weight_distribution(lifted, lifted.syndrome(w), caps);
    };

    // Weight-two leader over the ground field covered by a codeword of
    // weight >= 4; candidates in codeword enumeration order, support pairs
    // in position order.
    std::optional<std::vector<elem_t>> plain;
    base.for_each_codeword(
        [&](std::span<const elem_t> cw) {
            if (plain || word_weight(cw) < 4) return;
            std::vector<std::size_t> support;
            for (std::size_t i = 0; i < n; ++i) {
                if (cw[i] != 0) support.push_back(i);
            }
            for (std::size_t a = 0; a < support.size() && !plain; ++a) {
                for (std::size_t b = a + 1; b < support.size() && !plain; ++b) {
                    std::vector<elem_t> x(n, 0);
                    x[support[a]] = cw[support[a]];
                    x[support[b]] = cw[support[b]];
                    if (coset_distance(x) == 2) plain = std::move(x);
                }
            }
        },
        caps);
    if (!plain) {
        throw std::logic_error(
            "no weight-two leader covered by a codeword of weight >= 4 was found");
    }
    report.plain = {*plain, distribution(*plain)};

    // Weight-two leader with one coordinate outside the ground field, first
    // one (position order) whose distribution differs.
    const elem_t outside = static_cast<elem_t>(q);  // least element beyond the ground field
    for (std::size_t i = 0; i < n && !report.distributions_differ; ++i) {
        for (std::size_t j = 0; j < n && !report.distributions_differ; ++j) {
            if (i == j) continue;
            std::vector<elem_t> x(n, 0);
            x[i] = 1;
            x[j] = outside;
            if (coset_distance(x) != 2) continue;
            auto dist = distribution(x);
            if (dist != report.plain.weights) {
                report.mixed = {std::move(x), std::move(dist)};
                report.distributions_differ = true;
            }
        }
    }
    (void)amb;
    return report;
}

FieldPtr make_ground_field(std::uint64_t q, std::uint64_t order_cap) {
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned e = 0;
    std::uint64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++e;
    }
    if (t != 1) {
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    }
    return Field::tower(p, {e}, order_cap);
}

}  // namespace liftedcodes
