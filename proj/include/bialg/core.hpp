#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bialg {

/// Error with a stable machine-readable code ("SchemaError", "CapExceeded", ...).
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw error(code, what);
}

inline long long mod_floor(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

} // namespace bialg
