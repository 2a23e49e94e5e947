#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace petit {

/// Base class for all library errors.
class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class non_prime_characteristic : public error {
   public:
    using error::error;
};

class size_cap_exceeded : public error {
   public:
    using error::error;
};

class enumeration_cap_exceeded : public error {
   public:
    using error::error;
};

class twist_mismatch : public error {
   public:
    using error::error;
};

class division_by_zero_polynomial : public error {
   public:
    using error::error;
};

class owner_mismatch : public error {
   public:
    using error::error;
};

class hypothesis_violation : public error {
   public:
    using error::error;
};

class not_a_divisor : public error {
   public:
    using error::error;
};

class not_division : public error {
   public:
    using error::error;
};

/// A computed result contradicts a theorem it was checked against. Always a
/// bug or a recorded open question, never a user error.
class internal_error : public error {
   public:
    using error::error;
};

namespace detail {
inline std::uint64_t initial_size_cap() {
    if (const char* env = std::getenv("PETIT_SIZE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 2) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t{1} << 20;
}

inline std::uint64_t& size_cap_slot() {
    static std::uint64_t cap = initial_size_cap();
    return cap;
}
}  // namespace detail

/// Cap on the size of any field or element set that gets enumerated.
/// Defaults to 2^20, overridable via PETIT_SIZE_CAP or set_size_cap().
inline std::uint64_t size_cap() { return detail::size_cap_slot(); }

inline void set_size_cap(std::uint64_t cap) { detail::size_cap_slot() = cap; }

/// p^e with overflow saturation to UINT64_MAX.
inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace petit
