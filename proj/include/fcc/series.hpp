#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "fcc/errors.hpp"
#include "fcc/numeric.hpp"

namespace fcc {

/// Power series in `vars` variables with exact integer coefficients,
/// truncated beyond total degree `trunc`. Terms of higher total degree are
/// dropped by every operation, so results are exact through degree `trunc`.
/// Supports up to 8 variables and truncation degree up to 255 (exponents are
/// packed one byte per variable).
class MultiSeries {
public:
    MultiSeries(int vars, int trunc);

    static MultiSeries constant(int vars, int trunc, const BigInt& value);
    static MultiSeries variable(int vars, int trunc, int index);
    static MultiSeries monomial(int vars, int trunc, const std::vector<int>& exponents,
                                const BigInt& coeff);

    int vars() const { return vars_; }
    int trunc() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }

    BigInt coeff(const std::vector<int>& exponents) const;

    MultiSeries& operator+=(const MultiSeries& other);
    MultiSeries& operator-=(const MultiSeries& other);
    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
    MultiSeries operator-() const;
    MultiSeries operator*(const MultiSeries& other) const;

    /// Product with the single term coeff * x^exponents (an exponent shift,
    /// cheaper than a full convolution).
    MultiSeries shifted(const std::vector<int>& exponents, const BigInt& coeff) const;

    /// Multiplicative inverse by Newton iteration; the constant term must be
    /// 1 or -1.
    MultiSeries inverse() const;

    /// Copy with all terms above `trunc` dropped.
    MultiSeries truncated(int trunc) const;

    /// Substitution x_i -> y_(target[i]); exponents of identified variables
    /// add, the truncation carries over.
    MultiSeries renamed(int vars, const std::vector<int>& target) const;

    void for_each_term(const std::function<void(const std::vector<int>&, const BigInt&)>& fn) const;

    /// Number of stored (non-zero) terms.
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const MultiSeries&) const = default;

private:
    std::uint64_t pack(const std::vector<int>& exponents) const;
    void add_packed(std::uint64_t key, const BigInt& value);

    int vars_;
    int trunc_;
    std::map<std::uint64_t, BigInt> terms_; // key bytes = exponents, var 0 most significant
};

/// The unique series solutions g_0..g_d with zero constant term of the system
///   g_i (1 + g_i) = x_i prod_j (1 + g_j),   i = 0..d,
/// exact through total degree `trunc`.
std::vector<MultiSeries> solve_g(int d, int trunc);

/// Colour census generating function C = x_1 ... x_d (1 + g_0): the
/// coefficient of x^gamma counts the complexes with colour vector gamma.
/// The result carries truncation `trunc` + d.
MultiSeries series_C(int d, int trunc);

/// Residual of the quintic satisfied by C at d = 2, variables (a, b, c):
///   (bc)^3(1+a) + (bc)^2((b+c)a-1) C + (bc)^2(a-2) C^2 + 2bc C^3 + bc C^4 - C^5,
/// truncated at total degree `trunc` (trunc >= 2).
MultiSeries check_alg_d2(int trunc);

/// Residual of the quartic for Y(x, y) = C(x, y, y):
///   (1+x) y^4 - y^2 (1+2y) Y + y (2+y) Y^2 - Y^3.
MultiSeries check_Y(int trunc);

/// Residual of the cubic for Z(x, y) = C(x, x, y):
///   x^2 y^2 + x y (x-1) Z + Z^3.
MultiSeries check_Z(int trunc);

/// Closed form for the coefficient of x^gamma in g_0; with m = sum(gamma):
///   m^(d-1) * (m-g0)! / ((g0-1)! (m+1-2g0)!)
///           * prod_{j>=1} (m-g_j-1)! / (g_j! (m-2g_j)!),
/// and 0 as soon as any factorial argument is negative.
Rational g0_closed_form(const std::vector<int>& gamma);

/// Exact determinant of a rational matrix (row denominators cleared, then
/// fraction-free Bareiss elimination over the integers).
Rational det_rational(std::vector<std::vector<Rational>> m);

struct JacobianPair {
    Rational det;
    Rational closed;

    bool matches() const { return det == closed; }
};

/// At a rational point x in Q^(d+1), builds the Jacobian-derived matrix
///   M[i][i] = (1+x_i)/P,  M[i][j] = -x_i (1+x_i) / ((1+x_j) P)  for i != j,
/// with P = prod_k (1+x_k), and returns its exact determinant together with
/// the closed form
///   (1 - sum_k x_k/(1+2x_k)) * prod_j (1+2x_j)/(1+x_j)^(d+1).
/// Throws PoleError when some 1+x_i or 1+2x_i vanishes.
JacobianPair jacobian_check(int d, const std::vector<Rational>& point);

/// The same determinant identity verified as an exact polynomial identity
/// (columns cleared of denominators). Exponential in d; intended for d <= 3.
bool jacobian_symbolic(int d);

/// Elementary symmetric function checks at a rational point, both evaluated
/// at t = 2: sum_k e_k t^k = prod_j (1 + t x_j) and its t-derivative
/// sum_k k e_k t^(k-1) = (sum_j x_j / (1 + t x_j)) prod_j (1 + t x_j).
bool esym_checks(const std::vector<Rational>& point);

/// splitmix64 step; deterministic across platforms.
std::uint64_t next_random(std::uint64_t& state);

/// Random rational coordinates num/den with num in [-6, 6], den in [1, 6],
/// resampled to avoid the poles -1 and -1/2.
std::vector<Rational> random_rational_point(std::uint64_t& state, int count);

} // namespace fcc
