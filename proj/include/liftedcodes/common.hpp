#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace liftedcodes {

/// Canonical integer encoding of a field element (coordinate vector read as a
/// base-|base| number, least significant coordinate first).
using elem_t = std::uint32_t;

/// Budgets for the exhaustive kernels. A kernel that would exceed its budget
/// throws CapExceeded instead of running; the exception reports the required
/// size so callers can raise the cap deliberately.
struct Caps {
    std::uint64_t coset_steps = 100'000'000;  ///< syndrome BFS / per-class counting steps
    std::uint64_t vectors = std::uint64_t{1} << 20;    ///< full ambient-space enumerations
    std::uint64_t codewords = std::uint64_t{1} << 20;  ///< codeword enumerations
};

class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& task, const std::string& required, std::uint64_t cap)
        : std::runtime_error(task + " requires " + required + ", cap is " + std::to_string(cap)),
          task_(task),
          required_(required),
          cap_(cap) {}

    const std::string& task() const { return task_; }
    const std::string& required() const { return required_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::string task_;
    std::string required_;
    std::uint64_t cap_;
};

/// base^exp if it does not exceed limit, nullopt otherwise. Overflow-safe.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                                std::uint64_t limit) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > limit / base) return std::nullopt;
        result *= base;
        if (result > limit) return std::nullopt;
    }
    return result;
}

/// base^exp, guarded against exceeding cap; throws CapExceeded(task) otherwise.
inline std::uint64_t pow_or_cap(std::uint64_t base, unsigned exp, std::uint64_t cap,
                                const std::string& task) {
    auto v = checked_pow(base, exp, cap);
    if (!v) {
        throw CapExceeded(task, std::to_string(base) + "^" + std::to_string(exp), cap);
    }
    return *v;
}

}  // namespace liftedcodes
