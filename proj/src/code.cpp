#include "liftedcodes/code.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace liftedcodes {

unsigned word_weight(std::span<const elem_t> v) {
    unsigned w = 0;
    for (elem_t x : v) w += (x != 0);
    return w;
}

std::vector<elem_t> word_add(const Field& f, std::span<const elem_t> a,
                             std::span<const elem_t> b) {
    if (a.size() != b.size()) throw std::invalid_argument("word length mismatch");
    std::vector<elem_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

std::vector<elem_t> word_sub(const Field& f, std::span<const elem_t> a,
                             std::span<const elem_t> b) {
    if (a.size() != b.size()) throw std::invalid_argument("word length mismatch");
    std::vector<elem_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
    return out;
}

std::vector<elem_t> word_scale(const Field& f, elem_t s, std::span<const elem_t> v) {
    std::vector<elem_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(s, v[i]);
    return out;
}

unsigned hamming_distance(std::span<const elem_t> a, std::span<const elem_t> b) {
    if (a.size() != b.size()) throw std::invalid_argument("word length mismatch");
    unsigned d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

LinearCode::LinearCode(MatQ parity)
    : parity_(std::move(parity)), rref_(parity_.reduced_row_echelon()) {
    if (parity_.rows() == 0 || parity_.cols() == 0 || parity_.is_zero()) {
        throw std::invalid_argument("parity-check matrix must be nonzero");
    }
    if (rref_.pivots.size() != parity_.rows()) {
        throw std::invalid_argument("parity-check matrix is rank-deficient (rank " +
                                    std::to_string(rref_.pivots.size()) + " of " +
                                    std::to_string(parity_.rows()) + " rows)");
    }
    // Kernel basis, one vector per non-pivot column of the reduced form.
    const Field& f = *field();
    const std::size_t n = length();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rref_.pivots) is_pivot[p] = true;
    for (std::size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<elem_t> x(n, 0);
        x[fc] = 1;
        for (std::size_t i = 0; i < rref_.pivots.size(); ++i) {
            x[rref_.pivots[i]] = f.neg(rref_.reduced(i, fc));
        }
        kernel_basis_.push_back(std::move(x));
    }
}

std::vector<elem_t> LinearCode::syndrome(std::span<const elem_t> word) const {
    if (word.size() != length()) {
        throw std::invalid_argument("word length " + std::to_string(word.size()) +
                                    " does not match code length " + std::to_string(length()));
    }
    const Field& f = *field();
    std::vector<elem_t> s(redundancy(), 0);
    for (std::size_t j = 0; j < word.size(); ++j) {
        const elem_t v = word[j];
        if (v == 0) continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            s[i] = f.add(s[i], f.mul(v, parity_(i, j)));
        }
    }
    return s;
}

bool LinearCode::contains(std::span<const elem_t> word) const {
    const auto s = syndrome(word);
    return std::all_of(s.begin(), s.end(), [](elem_t x) { return x == 0; });
}

std::vector<elem_t> LinearCode::coset_representative(std::span<const elem_t> syn) const {
    if (syn.size() != redundancy()) throw std::invalid_argument("syndrome length mismatch");
    const Field& f = *field();
    // With E H = R (reduced), setting the pivot coordinates of x to E s
    // solves R x^T = E s^T, hence H x^T = s^T.
    std::vector<elem_t> x(length(), 0);
    for (std::size_t i = 0; i < redundancy(); ++i) {
        elem_t v = 0;
        for (std::size_t j = 0; j < redundancy(); ++j) {
            v = f.add(v, f.mul(rref_.ops(i, j), syn[j]));
        }
        x[rref_.pivots[i]] = v;
    }
    return x;
}

void LinearCode::for_each_codeword(const std::function<void(std::span<const elem_t>)>& fn,
                                   const Caps& caps) const {
    const std::uint64_t q = field_order();
    pow_or_cap(q, static_cast<unsigned>(dimension()), caps.codewords, "codeword enumeration");
    const Field& f = *field();
    const std::size_t n = length();
    // Depth-first over scalar coefficients of the kernel basis.
    std::vector<std::vector<elem_t>> partial(dimension() + 1, std::vector<elem_t>(n, 0));
    std::vector<elem_t> coeff(dimension(), 0);
    std::size_t depth = 0;
    if (dimension() == 0) {
        fn(partial[0]);
        return;
    }
    while (true) {
        if (depth == dimension()) {
            fn(partial[depth]);
            // backtrack to the deepest level that can still advance
            while (depth > 0 && coeff[depth - 1] + 1 >= q) {
                coeff[--depth] = 0;
            }
            if (depth == 0) return;
            ++coeff[depth - 1];
            --depth;
            continue;
        }
        const elem_t c = coeff[depth];
        if (c == 0) {
            partial[depth + 1] = partial[depth];
        } else {
            const auto& basis = kernel_basis_[depth];
            for (std::size_t i = 0; i < n; ++i) {
                partial[depth + 1][i] = f.add(partial[depth][i], f.mul(c, basis[i]));
            }
        }
        ++depth;
    }
}

std::vector<std::vector<elem_t>> LinearCode::codewords(const Caps& caps) const {
    std::vector<std::vector<elem_t>> out;
    for_each_codeword(
        [&](std::span<const elem_t> w) { out.emplace_back(w.begin(), w.end()); }, caps);
    return out;
}

unsigned LinearCode::min_distance(const Caps& caps) const {
    unsigned best = std::numeric_limits<unsigned>::max();
    for_each_codeword(
        [&](std::span<const elem_t> w) {
            const unsigned wt = word_weight(w);
            if (wt != 0 && wt < best) best = wt;
        },
        caps);
    if (best == std::numeric_limits<unsigned>::max()) {
        throw std::domain_error("code has no nonzero codeword");
    }
    return best;
}

SyndromeSpace::SyndromeSpace(const LinearCode& code, const Caps& caps)
    : field_(code.field()), redundancy_(code.redundancy()) {
    const std::uint64_t q = code.field_order();
    size_ = pow_or_cap(q, static_cast<unsigned>(redundancy_), caps.coset_steps,
                       "syndrome space");
    powers_.resize(redundancy_ + 1);
    powers_[0] = 1;
    for (std::size_t i = 0; i < redundancy_; ++i) powers_[i + 1] = powers_[i] * q;
    const Field& f = *field_;
    const MatQ& h = code.parity();
    for (std::size_t j = 0; j < code.length(); ++j) {
        for (elem_t gamma = 1; gamma < q; ++gamma) {
            std::vector<elem_t> digits(redundancy_);
            for (std::size_t i = 0; i < redundancy_; ++i) digits[i] = f.mul(gamma, h(i, j));
            offsets_digits_.push_back(std::move(digits));
        }
    }
}

std::uint64_t SyndromeSpace::neighbor(std::uint64_t sidx, unsigned t) const {
    const Field& f = *field_;
    const auto& off = offsets_digits_[t];
    const std::uint64_t q = powers_[1];
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < redundancy_; ++i) {
        const elem_t digit = static_cast<elem_t>(sidx % q);
        sidx /= q;
        out += static_cast<std::uint64_t>(f.add(digit, off[i])) * powers_[i];
    }
    return out;
}

std::uint64_t SyndromeSpace::index_of(std::span<const elem_t> syndrome) const {
    if (syndrome.size() != redundancy_) throw std::invalid_argument("syndrome length mismatch");
    std::uint64_t out = 0;
    for (std::size_t i = redundancy_; i-- > 0;) out = out * powers_[1] + syndrome[i];
    return out;
}

std::vector<elem_t> SyndromeSpace::syndrome_at(std::uint64_t sidx) const {
    std::vector<elem_t> s(redundancy_);
    for (std::size_t i = 0; i < redundancy_; ++i) {
        s[i] = static_cast<elem_t>(sidx % powers_[1]);
        sidx /= powers_[1];
    }
    return s;
}

std::span<const elem_t> SyndromeSpace::offset(unsigned t) const { return offsets_digits_[t]; }

CosetTable CosetTable::build(const LinearCode& code, bool with_distributions,
                             const Caps& caps) {
    SyndromeSpace space(code, caps);
    const std::uint64_t size = space.size();
    const unsigned nbrs = space.neighbor_count();
    if (size > caps.coset_steps / std::max(1u, nbrs)) {
        throw CapExceeded("coset BFS",
                          std::to_string(size) + "*" + std::to_string(nbrs) + " steps",
                          caps.coset_steps);
    }

    CosetTable table;
    constexpr std::uint16_t kUnset = std::numeric_limits<std::uint16_t>::max();
    table.distance_.assign(size, kUnset);
    table.distance_[0] = 0;
    std::deque<std::uint64_t> queue{0};
    while (!queue.empty()) {
        const std::uint64_t s = queue.front();
        queue.pop_front();
        const std::uint16_t d = table.distance_[s];
        for (unsigned t = 0; t < nbrs; ++t) {
            const std::uint64_t nb = space.neighbor(s, t);
            if (table.distance_[nb] == kUnset) {
                table.distance_[nb] = static_cast<std::uint16_t>(d + 1);
                queue.push_back(nb);
            }
        }
    }
    table.rho_ = 0;
    for (std::uint16_t d : table.distance_) {
        if (d == kUnset) throw std::logic_error("syndrome space is not connected");
        table.rho_ = std::max<unsigned>(table.rho_, d);
    }

    if (with_distributions) {
        const std::size_t n = code.length();
        const std::uint64_t total = pow_or_cap(code.field_order(), static_cast<unsigned>(n),
                                               caps.vectors, "coset weight distributions");
        table.distributions_.assign(size, std::vector<std::uint64_t>(n + 1, 0));
        const Field& f = *code.field();
        const MatQ& h = code.parity();
        WordOdometer odo(code.field_order(), n);
        std::vector<elem_t> syn(code.redundancy(), 0);
        unsigned weight = 0;
        for (std::uint64_t i = 0; i < total; ++i) {
            table.distributions_[space.index_of(syn)][weight] += 1;
            if (i + 1 == total) break;
            odo.advance();
            for (const auto& ch : odo.changes()) {
                weight += (ch.after != 0);
                weight -= (ch.before != 0);
                const elem_t delta = f.sub(ch.after, ch.before);
                for (std::size_t row = 0; row < syn.size(); ++row) {
                    syn[row] = f.add(syn[row], f.mul(delta, h(row, ch.pos)));
                }
            }
        }
    }
    return table;
}

std::vector<std::uint64_t> CosetTable::class_sizes() const {
    std::vector<std::uint64_t> mu(rho_ + 1, 0);
    for (std::uint16_t d : distance_) mu[d] += 1;
    return mu;
}

const std::vector<std::uint64_t>& CosetTable::distribution(std::uint64_t sidx) const {
    if (distributions_.empty()) {
        throw std::logic_error("coset table was built without distributions");
    }
    return distributions_[sidx];
}

namespace {

struct ClassAccumulator {
    // reference member (smallest object id) and counts per distance class
    std::vector<std::uint64_t> ref_id;
    std::vector<unsigned> ref_down, ref_up;
    std::vector<bool> seen;
    // first member disagreeing with the reference, per class
    std::vector<std::optional<std::pair<std::uint64_t, std::pair<unsigned, unsigned>>>> offender;

    explicit ClassAccumulator(unsigned rho)
        : ref_id(rho + 1, 0),
          ref_down(rho + 1, 0),
          ref_up(rho + 1, 0),
          seen(rho + 1, false),
          offender(rho + 1) {}

    void feed(std::uint64_t id, unsigned cls, unsigned down, unsigned up) {
        if (!seen[cls]) {
            seen[cls] = true;
            ref_id[cls] = id;
            ref_down[cls] = down;
            ref_up[cls] = up;
            return;
        }
        if (!offender[cls] && (down != ref_down[cls] || up != ref_up[cls])) {
            offender[cls] = {id, {down, up}};
        }
    }

    std::optional<CrWitness> witness(bool vector_level) const {
        std::optional<unsigned> best;
        for (unsigned cls = 0; cls < offender.size(); ++cls) {
            if (!offender[cls]) continue;
            if (!best || ref_id[cls] < ref_id[*best]) best = cls;
        }
        if (!best) return std::nullopt;
        const auto& [id, counts] = *offender[*best];
        CrWitness w;
        w.first = ref_id[*best];
        w.second = id;
        w.distance_class = *best;
        w.first_down = ref_down[*best];
        w.first_up = ref_up[*best];
        w.second_down = counts.first;
        w.second_up = counts.second;
        w.vector_level = vector_level;
        return w;
    }
};

IntersectionArray assemble_array(unsigned rho, const std::vector<unsigned>& down,
                                 const std::vector<unsigned>& up,
                                 const std::vector<std::uint64_t>& mu,
                                 const BigInt& neighbor_total) {
    IntersectionArray arr;
    arr.rho = rho;
    for (unsigned l = 0; l < rho; ++l) arr.b.emplace_back(up[l]);
    for (unsigned l = 1; l <= rho; ++l) arr.c.emplace_back(down[l]);
    for (unsigned l = 0; l <= rho; ++l) {
        const BigInt bl = (l < rho) ? BigInt(up[l]) : BigInt(0);
        const BigInt cl = (l > 0) ? BigInt(down[l]) : BigInt(0);
        arr.a.push_back(neighbor_total - bl - cl);
    }
    for (std::uint64_t m : mu) arr.mu.emplace_back(m);
    return arr;
}

}  // namespace

CrResult completely_regular_check(const LinearCode& code, const Caps& caps) {
    const CosetTable table = CosetTable::build(code, false, caps);
    SyndromeSpace space(code, caps);
    const unsigned rho = table.covering_radius();
    ClassAccumulator acc(rho);
    for (std::uint64_t s = 0; s < space.size(); ++s) {
        const unsigned l = table.distance(s);
        unsigned down = 0;
        unsigned up = 0;
        for (unsigned t = 0; t < space.neighbor_count(); ++t) {
            const unsigned ld = table.distance(space.neighbor(s, t));
            down += (ld + 1 == l);
            up += (ld == l + 1);
        }
        acc.feed(s, l, down, up);
    }
    CrResult result;
    result.witness = acc.witness(false);
    result.regular = !result.witness.has_value();
    const BigInt neighbor_total =
        BigInt(code.field_order() - 1) * BigInt(code.length());
    result.array = assemble_array(rho, acc.ref_down, acc.ref_up, table.class_sizes(),
                                  neighbor_total);
    return result;
}

CrResult completely_regular_vector_oracle(const LinearCode& code, const Caps& caps) {
    const std::uint64_t q = code.field_order();
    const std::size_t n = code.length();
    const std::uint64_t total =
        pow_or_cap(q, static_cast<unsigned>(n), caps.vectors, "vector-level oracle");
    const auto cws = code.codewords(caps);
    if (total > caps.coset_steps / std::max<std::uint64_t>(1, cws.size())) {
        throw CapExceeded("vector-level oracle",
                          std::to_string(total) + "*" + std::to_string(cws.size()) + " steps",
                          caps.coset_steps);
    }

    // Nearest-codeword distance for every ambient word, by direct search.
    std::vector<std::uint8_t> dist(total, 0);
    {
        WordOdometer odo(q, n);
        for (std::uint64_t i = 0; i < total; ++i) {
            unsigned best = std::numeric_limits<unsigned>::max();
            for (const auto& cw : cws) {
                const unsigned d = hamming_distance(odo.word(), cw);
                best = std::min(best, d);
                if (best == 0) break;
            }
            dist[i] = static_cast<std::uint8_t>(best);
            if (i + 1 < total) odo.advance();
        }
    }

    unsigned rho = 0;
    for (std::uint8_t d : dist) rho = std::max<unsigned>(rho, d);

    std::vector<std::uint64_t> powers(n + 1);
    powers[0] = 1;
    for (std::size_t i = 0; i < n; ++i) powers[i + 1] = powers[i] * q;

    ClassAccumulator acc(rho);
    std::vector<std::uint64_t> class_words(rho + 1, 0);
    {
        WordOdometer odo(q, n);
        for (std::uint64_t i = 0; i < total; ++i) {
            const unsigned l = dist[i];
            class_words[l] += 1;
            unsigned down = 0;
            unsigned up = 0;
            const auto& w = odo.word();
            for (std::size_t j = 0; j < n; ++j) {
                const std::uint64_t base = i - w[j] * powers[j];
                for (elem_t delta = 0; delta < q; ++delta) {
                    if (delta == w[j]) continue;
                    const unsigned ld = dist[base + delta * powers[j]];
                    down += (ld + 1 == l);
                    up += (ld == l + 1);
                }
            }
            acc.feed(i, l, down, up);
            if (i + 1 < total) odo.advance();
        }
    }

    // mu from class populations: every coset has exactly Q^k words.
    std::vector<std::uint64_t> mu(rho + 1, 0);
    for (unsigned l = 0; l <= rho; ++l) {
        if (class_words[l] % cws.size() != 0) {
            throw std::logic_error("distance class size is not a multiple of the code size");
        }
        mu[l] = class_words[l] / cws.size();
    }

    CrResult result;
    result.witness = acc.witness(true);
    result.regular = !result.witness.has_value();
    result.array = assemble_array(rho, acc.ref_down, acc.ref_up, mu,
                                  BigInt(q - 1) * BigInt(n));
    return result;
}

unsigned covering_radius(const LinearCode& code, const Caps& caps) {
    return CosetTable::build(code, false, caps).covering_radius();
}

std::vector<std::uint64_t> coset_weight_distribution(const LinearCode& code,
                                                     std::span<const elem_t> syndrome,
                                                     const Caps& caps) {
    const auto rep = code.coset_representative(syndrome);
    const Field& f = *code.field();
    std::vector<std::uint64_t> counts(code.length() + 1, 0);
    code.for_each_codeword(
        [&](std::span<const elem_t> cw) {
            counts[word_weight(word_add(f, rep, cw))] += 1;
        },
        caps);
    return counts;
}

}  // namespace liftedcodes
