#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fcc/complex.hpp"
#include "fcc/numeric.hpp"

namespace fcc {

/// Number of complexes for d = 2 with colour vector (alpha, beta, gamma):
///   alpha(alpha+beta+gamma-2) / ((beta+gamma-1)(alpha+gamma-1)(alpha+beta-1))
///     * C(beta+gamma-1, alpha) * C(alpha+gamma-1, beta-1) * C(alpha+beta-1, gamma-1),
/// with value 1 at (0,1,1) and 0 for every other vector with alpha = 0.
BigInt count_d2(int alpha, int beta, int gamma);

/// Number of complexes with the given colour vector, any d >= 2. With
/// s = gamma.excess() the count is
///   s^(d-1) * (gamma_0/(s-gamma_0+1)) C(s-gamma_0+1, gamma_0)
///           * prod_j (1/(s-gamma_j+1)) C(s-gamma_j+1, gamma_j-1),
/// extended by: 1 at (0,1,...,1), 0 for any other vector with gamma_0 = 0 or
/// with s <= 0.
BigInt count_full(const ColourVector& gamma);

/// d = 2 complexes whose marked edge has two white endpoints, counted by
/// black (b) and white (w) vertices, where white = {c_1, c_2}:
///   (2b/((w-1)(2b+w-2))) C(2b+w-2, w-2) C(w-1, b), with (0, 2) -> 1.
BigInt count_ww(int b, int w);

/// d = 2 complexes whose marked edge has one white and one black endpoint,
/// white = {c_0, c_1}, black = {c_2}:
///   (1/(2b+w-2)) C(2b+w-2, w-1) C(w-1, b-1).
BigInt count_wb(int b, int w);

/// Number of complexes whose coarse colour vector under `beta` is `coarse`.
/// With k + 1 blocks and s = (sum of coarse) - d:
///   s^(k-1) * ((gamma0-beta0+1)/(beta0 s+beta0-gamma0)) C(beta0 s+beta0-gamma0, gamma0-beta0+1)
///           * prod_j (beta_j/(beta_j s+beta_j-gamma_j)) C(beta_j s+beta_j-gamma_j, gamma_j-beta_j),
/// extended at s = 0 to: 1 iff coarse = (beta0-1, beta1, ..., betak).
BigInt count_coarse(const Composition& beta, const CoarseColourVector& coarse);

/// Distribution of complexes over colour vectors (or coarse vectors when
/// `beta` is present). Entries are keyed by the count vector; zero counts are
/// omitted. `total` is the sum of all entries.
struct CensusTable {
    int d = 0;
    int n = 0;
    std::optional<Composition> beta;
    std::map<std::vector<int>, BigInt> entries;
    BigInt total;
};

/// Census by the closed formulas above.
CensusTable census_formula(int d, int n);
CensusTable census_formula(int d, int n, const Composition& beta);

/// Census by exhaustive enumeration of all complexes. Throws
/// ResourceCapExceeded when fuss_catalan(d, n) exceeds `cap`.
CensusTable census_enumerated(int d, int n, std::uint64_t cap);
CensusTable census_enumerated(int d, int n, const Composition& beta, std::uint64_t cap);

/// Two sides of a convolution identity, evaluated exactly.
struct IdentityPair {
    Rational lhs;
    Rational rhs;

    bool matches() const { return lhs == rhs; }
};

/// Vandermonde-type convolution attributed to Rothe:
///   s * sum_k (b1/(b1 s+b1-k)) C(b1 s+b1-k, k-b1) (b2/(b2 s+b2-(g-k))) C(b2 s+b2-(g-k), g-k-b2)
///     = ((b1+b2)/((b1+b2)(s+1)-g)) C((b1+b2)(s+1)-g, g-b1-b2),
/// sum over b1 <= k <= g - b2.
///
/// For s >= 1 every factor (x/m) C(m, k) is evaluated as x poly_binom(m-1, k-1)/k,
/// which is its value as a rational function of s with any removable singularity
/// filled in; the identity then holds for every g >= b1 + b2. At s = 0 individual
/// factors have genuine poles, so both sides are evaluated with the cutoff
/// conventions of scaled_binom, under which they are identically 0.
IdentityPair rothe_first(int b1, int b2, int s, int g);

/// Companion convolution with one plain binomial factor:
///   sum_k (b0 s/(b0 s+b0-k)) C(b0 s+b0-k, k-b0) C(b1 s+b1-1-(g-k), g-k-b1)
///     = C((b0+b1)(s+1)-1-g, g-b0-b1),
/// sum over b0 <= k <= g - b1. Same evaluation conventions as rothe_first;
/// at s = 0 both sides are identically 0.
IdentityPair rothe_second(int b0, int b1, int s, int g);

/// Serialization used by the command line tool:
/// {"d", "n", "beta"?, "entries": [{"gamma": [...], "count": "<decimal>"}], "total": "<decimal>"}.
std::string census_to_json(const CensusTable& table, int indent = 2);

/// Calls `fn` once for every way of writing `total` as `slots` ordered
/// non-negative parts, in lexicographic order.
void for_each_composition(int total, int slots,
                          const std::function<void(const std::vector<int>&)>& fn);

} // namespace fcc
