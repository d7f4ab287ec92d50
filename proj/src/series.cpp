#include "fcc/series.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace fcc {

namespace {

constexpr int kMaxVars = 8;
constexpr int kMaxTrunc = 255;

int packed_degree(std::uint64_t key) {
    int deg = 0;
    while (key != 0) {
        deg += static_cast<int>(key & 0xffu);
        key >>= 8;
    }
    return deg;
}

BigInt pow_big(const BigInt& base, int exp) {
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

Rational pow_rational(const Rational& base, int exp) {
    Rational r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

MultiSeries::MultiSeries(int vars, int trunc) : vars_(vars), trunc_(trunc) {
    if (vars < 1 || vars > kMaxVars) {
        throw InvalidDimension("series support 1 to 8 variables");
    }
    if (trunc < 0 || trunc > kMaxTrunc) {
        throw Error("truncation degree must lie in [0, 255]");
    }
}

std::uint64_t MultiSeries::pack(const std::vector<int>& exponents) const {
    if (static_cast<int>(exponents.size()) != vars_) {
        throw DimensionMismatch("exponent vector length does not match variable count");
    }
    std::uint64_t key = 0;
    for (int i = 0; i < vars_; ++i) {
        const int e = exponents[static_cast<std::size_t>(i)];
        if (e < 0 || e > kMaxTrunc) throw Error("exponent out of range");
        key |= static_cast<std::uint64_t>(e) << (8 * (kMaxVars - 1 - i));
    }
    return key;
}

void MultiSeries::add_packed(std::uint64_t key, const BigInt& value) {
    if (value == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiSeries MultiSeries::constant(int vars, int trunc, const BigInt& value) {
    MultiSeries s(vars, trunc);
    s.add_packed(0, value);
    return s;
}

MultiSeries MultiSeries::variable(int vars, int trunc, int index) {
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    e.at(static_cast<std::size_t>(index)) = 1;
    return monomial(vars, trunc, e, 1);
}

MultiSeries MultiSeries::monomial(int vars, int trunc, const std::vector<int>& exponents,
                                  const BigInt& coeff) {
    MultiSeries s(vars, trunc);
    const std::uint64_t key = s.pack(exponents);
    if (packed_degree(key) <= trunc) s.add_packed(key, coeff);
    return s;
}

BigInt MultiSeries::coeff(const std::vector<int>& exponents) const {
    for (int e : exponents) {
        if (e < 0) return 0;
    }
    const std::uint64_t key = pack(exponents);
    if (packed_degree(key) > trunc_) {
        throw Error("coefficient requested beyond the truncation degree");
    }
    auto it = terms_.find(key);
    return it == terms_.end() ? BigInt(0) : it->second;
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& other) {
    if (vars_ != other.vars_ || trunc_ != other.trunc_) {
        throw DimensionMismatch("series shapes differ");
    }
    for (const auto& [key, value] : other.terms_) add_packed(key, value);
    return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& other) {
    if (vars_ != other.vars_ || trunc_ != other.trunc_) {
        throw DimensionMismatch("series shapes differ");
    }
    for (const auto& [key, value] : other.terms_) add_packed(key, -value);
    return *this;
}

MultiSeries MultiSeries::operator-() const {
    MultiSeries r(vars_, trunc_);
    for (const auto& [key, value] : terms_) r.terms_.emplace(key, -value);
    return r;
}

MultiSeries MultiSeries::operator*(const MultiSeries& other) const {
    if (vars_ != other.vars_ || trunc_ != other.trunc_) {
        throw DimensionMismatch("series shapes differ");
    }
    std::vector<std::tuple<std::uint64_t, int, const BigInt*>> left, right;
    left.reserve(terms_.size());
    for (const auto& [key, value] : terms_) left.emplace_back(key, packed_degree(key), &value);
    right.reserve(other.terms_.size());
    for (const auto& [key, value] : other.terms_) right.emplace_back(key, packed_degree(key), &value);

    MultiSeries r(vars_, trunc_);
    for (const auto& [ka, da, ca] : left) {
        for (const auto& [kb, db, cb] : right) {
            if (da + db > trunc_) continue;
            // Coordinatewise exponent sums stay below 256, so plain addition
            // of the packed keys never carries between bytes.
            r.add_packed(ka + kb, (*ca) * (*cb));
        }
    }
    return r;
}

MultiSeries MultiSeries::shifted(const std::vector<int>& exponents, const BigInt& coeff) const {
    const std::uint64_t shift = pack(exponents);
    const int dshift = packed_degree(shift);
    MultiSeries r(vars_, trunc_);
    if (coeff == 0) return r;
    for (const auto& [key, value] : terms_) {
        if (packed_degree(key) + dshift > trunc_) continue;
        r.terms_.emplace(key + shift, value * coeff);
    }
    return r;
}

MultiSeries MultiSeries::inverse() const {
    auto it = terms_.find(0);
    const BigInt c0 = (it == terms_.end()) ? BigInt(0) : it->second;
    if (c0 != 1 && c0 != -1) {
        throw Error("series inverse requires constant term 1 or -1");
    }
    const MultiSeries two = constant(vars_, trunc_, 2);
    MultiSeries b = constant(vars_, trunc_, c0);
    int correct = 0;
    while (correct < trunc_) {
        b = b * (two - (*this) * b);
        correct = 2 * correct + 1;
    }
    return b;
}

MultiSeries MultiSeries::truncated(int trunc) const {
    if (trunc > trunc_) throw Error("cannot raise a truncation degree");
    MultiSeries r(vars_, trunc);
    for (const auto& [key, value] : terms_) {
        if (packed_degree(key) <= trunc) r.terms_.emplace(key, value);
    }
    return r;
}

MultiSeries MultiSeries::renamed(int vars, const std::vector<int>& target) const {
    if (static_cast<int>(target.size()) != vars_) {
        throw DimensionMismatch("rename map length does not match variable count");
    }
    MultiSeries r(vars, trunc_);
    for (int t : target) {
        if (t < 0 || t >= vars) throw DimensionMismatch("rename target out of range");
    }
    for (const auto& [key, value] : terms_) {
        std::vector<int> e(static_cast<std::size_t>(vars), 0);
        for (int i = 0; i < vars_; ++i) {
            const int exp = static_cast<int>((key >> (8 * (kMaxVars - 1 - i))) & 0xffu);
            e[static_cast<std::size_t>(target[static_cast<std::size_t>(i)])] += exp;
        }
        r.add_packed(r.pack(e), value);
    }
    return r;
}

void MultiSeries::for_each_term(
    const std::function<void(const std::vector<int>&, const BigInt&)>& fn) const {
    std::vector<int> e(static_cast<std::size_t>(vars_));
    for (const auto& [key, value] : terms_) {
        for (int i = 0; i < vars_; ++i) {
            e[static_cast<std::size_t>(i)] =
                static_cast<int>((key >> (8 * (kMaxVars - 1 - i))) & 0xffu);
        }
        fn(e, value);
    }
}

std::vector<MultiSeries> solve_g(int d, int trunc) {
    if (d < 1) throw InvalidDimension("the system needs at least two variables");
    const int vars = d + 1;
    const MultiSeries one = MultiSeries::constant(vars, trunc, 1);
    std::vector<MultiSeries> g(static_cast<std::size_t>(vars), MultiSeries(vars, trunc));

    // g_i <- x_i prod_j (1 + g_j) - g_i^2 gains one exact degree per pass.
    for (int pass = 0; pass < trunc; ++pass) {
        MultiSeries prod = one;
        for (const MultiSeries& gj : g) prod = prod * (one + gj);
        for (int i = 0; i < vars; ++i) {
            std::vector<int> e(static_cast<std::size_t>(vars), 0);
            e[static_cast<std::size_t>(i)] = 1;
            g[static_cast<std::size_t>(i)] =
                prod.shifted(e, 1) - g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(i)];
        }
    }
    return g;
}

MultiSeries series_C(int d, int trunc) {
    if (d < 2) throw InvalidDimension("the census series requires d >= 2");
    const std::vector<MultiSeries> g = solve_g(d, trunc);
    const MultiSeries top = MultiSeries::constant(d + 1, trunc, 1) + g[0];

    MultiSeries c(d + 1, trunc + d);
    top.for_each_term([&](const std::vector<int>& e, const BigInt& value) {
        std::vector<int> shifted = e;
        for (int j = 1; j <= d; ++j) ++shifted[static_cast<std::size_t>(j)];
        c += MultiSeries::monomial(d + 1, trunc + d, shifted, value);
    });
    return c;
}

MultiSeries check_alg_d2(int trunc) {
    if (trunc < 2) throw Error("truncation too small for the quintic residual");
    const MultiSeries c = series_C(2, trunc - 2);
    const MultiSeries c2 = c * c;
    const MultiSeries c3 = c2 * c;
    const MultiSeries c4 = c3 * c;
    const MultiSeries c5 = c4 * c;

    MultiSeries r = MultiSeries::monomial(3, trunc, {0, 3, 3}, 1);
    r += MultiSeries::monomial(3, trunc, {1, 3, 3}, 1);
    r += c.shifted({1, 3, 2}, 1);
    r += c.shifted({1, 2, 3}, 1);
    r += c.shifted({0, 2, 2}, -1);
    r += c2.shifted({1, 2, 2}, 1);
    r += c2.shifted({0, 2, 2}, -2);
    r += c3.shifted({0, 1, 1}, 2);
    r += c4.shifted({0, 1, 1}, 1);
    r -= c5;
    return r;
}

MultiSeries check_Y(int trunc) {
    if (trunc < 2) throw Error("truncation too small for the quartic residual");
    const MultiSeries y = series_C(2, trunc - 2).renamed(2, {0, 1, 1});
    const MultiSeries y2 = y * y;
    const MultiSeries y3 = y2 * y;

    MultiSeries r = MultiSeries::monomial(2, trunc, {0, 4}, 1);
    r += MultiSeries::monomial(2, trunc, {1, 4}, 1);
    r += y.shifted({0, 2}, -1);
    r += y.shifted({0, 3}, -2);
    r += y2.shifted({0, 1}, 2);
    r += y2.shifted({0, 2}, 1);
    r -= y3;
    return r;
}

MultiSeries check_Z(int trunc) {
    if (trunc < 2) throw Error("truncation too small for the cubic residual");
    const MultiSeries z = series_C(2, trunc - 2).renamed(2, {0, 0, 1});
    const MultiSeries z3 = z * z * z;

    MultiSeries r = MultiSeries::monomial(2, trunc, {2, 2}, 1);
    r += z.shifted({2, 1}, 1);
    r += z.shifted({1, 1}, -1);
    r += z3;
    return r;
}

Rational g0_closed_form(const std::vector<int>& gamma) {
    if (gamma.size() < 2) throw DimensionMismatch("need at least two colour classes");
    const int d = static_cast<int>(gamma.size()) - 1;
    long long m = 0;
    for (int g : gamma) m += g;

    const long long g0 = gamma[0];
    const long long a1 = m - g0;
    const long long a2 = g0 - 1;
    const long long a3 = m + 1 - 2 * g0;
    if (a1 < 0 || a2 < 0 || a3 < 0) return 0;

    Rational value(pow_big(BigInt(m), d - 1));
    value *= Rational(factorial(a1), factorial(a2) * factorial(a3));
    for (int j = 1; j <= d; ++j) {
        const long long gj = gamma[static_cast<std::size_t>(j)];
        const long long b1 = m - gj - 1;
        const long long b2 = gj;
        const long long b3 = m - 2 * gj;
        if (b1 < 0 || b2 < 0 || b3 < 0) return 0;
        value *= Rational(factorial(b1), factorial(b2) * factorial(b3));
    }
    return value;
}

namespace {

// Fraction-free elimination; every division is exact.
BigInt bareiss(std::vector<std::vector<BigInt>>& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r) {
                if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot == -1) return 0;
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(pivot)]);
            sign = -sign;
        }
        const BigInt& pk = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                auto& row = a[static_cast<std::size_t>(i)];
                row[static_cast<std::size_t>(j)] =
                    (row[static_cast<std::size_t>(j)] * pk -
                     a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                         a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) /
                    prev;
            }
        }
        prev = pk;
    }
    const BigInt& last = a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return sign == 1 ? last : -last;
}

} // namespace

Rational det_rational(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw DimensionMismatch("determinant needs a square matrix");
    }
    if (n == 0) return 1;

    BigInt cleared = 1;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
        BigInt common = 1;
        for (const Rational& x : m[i]) common = lcm(common, denominator(x));
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = numerator(m[i][j]) * (common / denominator(m[i][j]));
        }
        cleared *= common;
    }
    return Rational(bareiss(a), cleared);
}

JacobianPair jacobian_check(int d, const std::vector<Rational>& point) {
    if (d < 0) throw InvalidDimension("jacobian needs d >= 0");
    if (point.size() != static_cast<std::size_t>(d + 1)) {
        throw DimensionMismatch("point must have d + 1 coordinates");
    }
    for (const Rational& x : point) {
        if (1 + x == 0 || 1 + 2 * x == 0) {
            throw PoleError("point hits a pole of the jacobian identity");
        }
    }

    Rational prod = 1;
    for (const Rational& x : point) prod *= 1 + x;

    const std::size_t size = point.size();
    std::vector<std::vector<Rational>> matrix(size, std::vector<Rational>(size));
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            if (i == j) {
                matrix[i][j] = (1 + point[i]) / prod;
            } else {
                matrix[i][j] = -point[i] * (1 + point[i]) / ((1 + point[j]) * prod);
            }
        }
    }

    JacobianPair pair;
    pair.det = det_rational(std::move(matrix));

    Rational sum = 0;
    for (const Rational& x : point) sum += x / (1 + 2 * x);
    pair.closed = 1 - sum;
    for (const Rational& x : point) {
        pair.closed *= (1 + 2 * x) / pow_rational(1 + x, d + 1);
    }
    return pair;
}

namespace {

MultiSeries det_poly(const std::vector<std::vector<MultiSeries>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    MultiSeries det(m[0][0].vars(), m[0][0].trunc());
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<MultiSeries>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<MultiSeries> row;
            row.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j) {
                if (j != col) row.push_back(m[i][j]);
            }
            minor.push_back(std::move(row));
        }
        const MultiSeries cofactor = m[0][col] * det_poly(minor);
        if (col % 2 == 0) {
            det += cofactor;
        } else {
            det -= cofactor;
        }
    }
    return det;
}

} // namespace

bool jacobian_symbolic(int d) {
    if (d < 0) throw InvalidDimension("jacobian needs d >= 0");
    if (d > 3) throw Error("symbolic jacobian check is limited to d <= 3");
    const int vars = d + 1;
    const int trunc = 2 * (d + 1);

    // Columns are cleared of denominators: entry (i, j) of the cleared matrix
    // is (1+x_i)^2 on the diagonal and -x_i(1+x_i) off it; the determinant
    // identity becomes det = [prod(1+2x) - sum_k x_k prod_{j!=k}(1+2x_j)] * prod(1+x).
    auto var = [&](int i) { return MultiSeries::variable(vars, trunc, i); };
    const MultiSeries one = MultiSeries::constant(vars, trunc, 1);

    std::vector<std::vector<MultiSeries>> m(
        static_cast<std::size_t>(vars),
        std::vector<MultiSeries>(static_cast<std::size_t>(vars), MultiSeries(vars, trunc)));
    for (int i = 0; i < vars; ++i) {
        const MultiSeries xi = var(i);
        const MultiSeries onepx = one + xi;
        for (int j = 0; j < vars; ++j) {
            if (i == j) {
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = onepx * onepx;
            } else {
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -(xi * onepx);
            }
        }
    }
    const MultiSeries lhs = det_poly(m);

    MultiSeries rhs_num(vars, trunc);
    MultiSeries prod2 = one;
    for (int j = 0; j < vars; ++j) prod2 = prod2 * (one + var(j).shifted(std::vector<int>(vars, 0), 2));
    rhs_num += prod2;
    for (int k = 0; k < vars; ++k) {
        MultiSeries partial = one;
        for (int j = 0; j < vars; ++j) {
            if (j == k) continue;
            partial = partial * (one + var(j).shifted(std::vector<int>(vars, 0), 2));
        }
        rhs_num -= var(k) * partial;
    }
    MultiSeries prod1 = one;
    for (int j = 0; j < vars; ++j) prod1 = prod1 * (one + var(j));

    return lhs == rhs_num * prod1;
}

bool esym_checks(const std::vector<Rational>& point) {
    const std::size_t count = point.size();
    for (const Rational& x : point) {
        if (1 + 2 * x == 0) throw PoleError("point hits a pole of the symmetric identity");
    }

    std::vector<Rational> e(count + 1, Rational(0));
    e[0] = 1;
    for (const Rational& x : point) {
        for (std::size_t k = count; k >= 1; --k) e[k] += x * e[k - 1];
    }

    const Rational t = 2;
    Rational value_lhs = 0;
    Rational tpow = 1; // t^k
    for (std::size_t k = 0; k <= count; ++k) {
        value_lhs += e[k] * tpow;
        tpow *= t;
    }
    Rational derivative_lhs = 0;
    tpow = 1; // t^(k-1)
    for (std::size_t k = 1; k <= count; ++k) {
        derivative_lhs += Rational(static_cast<long long>(k)) * e[k] * tpow;
        tpow *= t;
    }

    Rational prod = 1, sum = 0;
    for (const Rational& x : point) {
        prod *= 1 + t * x;
        sum += x / (1 + t * x);
    }
    return value_lhs == prod && derivative_lhs == sum * prod;
}

std::uint64_t next_random(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::vector<Rational> random_rational_point(std::uint64_t& state, int count) {
    std::vector<Rational> point;
    point.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(point.size()) < count) {
        const std::uint64_t r = next_random(state);
        const int num = static_cast<int>(r % 13) - 6;
        const int den = static_cast<int>((r / 13) % 6) + 1;
        const Rational x(num, den);
        if (1 + x == 0 || 1 + 2 * x == 0) continue;
        point.push_back(x);
    }
    return point;
}

} // namespace fcc
