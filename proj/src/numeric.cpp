#include "fcc/numeric.hpp"

#include <cstdlib>
#include <string>

#include "fcc/errors.hpp"

namespace fcc {

BigInt binom(long long m, long long k) {
    if (k < 0 || m < 0 || k > m) return 0;
    if (k > m - k) k = m - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= m - k + i;
        r /= i; // exact: r holds C(m-k+i, i) after this step
    }
    return r;
}

BigInt poly_binom(long long m, long long k) {
    if (k < 0) return 0;
    BigInt num = 1;
    for (long long i = 0; i < k; ++i) num *= BigInt(m - i);
    return num / factorial(k); // exact: k consecutive integers
}

BigInt factorial(long long k) {
    if (k < 0) throw Error("factorial of a negative argument");
    BigInt r = 1;
    for (long long i = 2; i <= k; ++i) r *= i;
    return r;
}

BigInt catalan(int n) {
    if (n < 0) throw Error("catalan index must be non-negative");
    return binom(2LL * n, n) / (n + 1);
}

BigInt fuss_catalan(int d, int n) {
    if (d < 2) throw InvalidDimension("fuss_catalan requires d >= 2");
    if (n < 0) throw Error("fuss_catalan requires n >= 0");
    if (n == 0) return 1;
    return binom(static_cast<long long>(d) * n, n - 1) / n;
}

Rational scaled_binom(const BigInt& x, long long m, long long k) {
    if (k >= 1) return Rational(x * binom(m - 1, k - 1), BigInt(k));
    if (k == 0 && m > 0) return Rational(x, BigInt(m));
    return Rational(0);
}

std::uint64_t default_work_cap() {
    constexpr std::uint64_t fallback = 10'000'000;
    const char* raw = std::getenv("FCC_ORACLE_CAP");
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || value == 0) return fallback;
    return static_cast<std::uint64_t>(value);
}

} // namespace fcc
