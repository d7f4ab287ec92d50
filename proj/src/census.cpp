#include "fcc/census.hpp"

#include <numeric>

#include "json.hpp"

namespace fcc {

namespace {

BigInt pow_int(const BigInt& base, int exp) {
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// A value produced by the counting formulas must be an integer; anything else
// is a transcription bug, not a data condition.
BigInt to_count(const Rational& value) {
    if (denominator(value) != 1) throw Error("counting formula produced a non-integer");
    return numerator(value);
}

void compositions_rec(int total, int slots, std::vector<int>& prefix,
                      const std::function<void(const std::vector<int>&)>& fn) {
    if (slots == 1) {
        prefix.push_back(total);
        fn(prefix);
        prefix.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        prefix.push_back(first);
        compositions_rec(total - first, slots - 1, prefix, fn);
        prefix.pop_back();
    }
}

// Value of (x/m) C(m, k) as a rational function of the series order s, with
// removable singularities filled in via the polynomial binomial. Only valid
// away from genuine poles, i.e. for s >= 1 in the convolution identities.
Rational scaled_poly_binom(const BigInt& x, long long m, long long k) {
    if (k >= 1) return Rational(x * poly_binom(m - 1, k - 1), BigInt(k));
    if (k == 0 && m != 0) return Rational(x, BigInt(m));
    return Rational(0);
}

void validate_composition(const Composition& beta) {
    if (beta.parts.empty()) throw DimensionMismatch("composition must have at least one block");
    for (int part : beta.parts) {
        if (part < 1) throw DimensionMismatch("composition parts must be positive");
    }
}

} // namespace

BigInt count_d2(int alpha, int beta, int gamma) {
    if (alpha < 0 || beta < 0 || gamma < 0) return 0;
    if (alpha == 0) return (beta == 1 && gamma == 1) ? 1 : 0;
    const long long a = alpha, b = beta, c = gamma;
    Rational value = Rational(BigInt(a) * (a + b + c - 2));
    value *= scaled_binom(1, b + c - 1, a);
    value *= scaled_binom(1, a + c - 1, b - 1);
    value *= scaled_binom(1, a + b - 1, c - 1);
    return to_count(value);
}

BigInt count_full(const ColourVector& gamma) {
    const int d = gamma.dim();
    if (d < 2) throw InvalidDimension("colour vector needs at least three classes");
    for (int g : gamma.counts) {
        if (g < 0) return 0;
    }
    if (gamma.counts[0] == 0) {
        for (int j = 1; j <= d; ++j) {
            if (gamma.counts[static_cast<std::size_t>(j)] != 1) return 0;
        }
        return 1;
    }
    const long long s = gamma.excess();
    if (s <= 0) return 0;

    const long long g0 = gamma.counts[0];
    Rational value = Rational(pow_int(BigInt(s), d - 1));
    value *= scaled_binom(g0, s - g0 + 1, g0);
    for (int j = 1; j <= d; ++j) {
        const long long gj = gamma.counts[static_cast<std::size_t>(j)];
        value *= scaled_binom(1, s - gj + 1, gj - 1);
        if (value == 0) return 0;
    }
    return to_count(value);
}

BigInt count_ww(int b, int w) {
    if (b < 0 || w < 0) return 0;
    if (b == 0 && w == 2) return 1; // index-0 complex, both endpoints white
    if (w < 2) return 0;            // the marked edge alone has two white endpoints
    const long long bb = b, ww = w;
    Rational value = scaled_binom(2 * bb, 2 * bb + ww - 2, ww - 2);
    value *= scaled_binom(1, ww - 1, bb);
    return to_count(value);
}

BigInt count_wb(int b, int w) {
    if (b < 0 || w < 0) return 0;
    const long long bb = b, ww = w;
    Rational value = scaled_binom(1, 2 * bb + ww - 2, ww - 1);
    value *= binom(ww - 1, bb - 1);
    return to_count(value);
}

BigInt count_coarse(const Composition& beta, const CoarseColourVector& coarse) {
    validate_composition(beta);
    const int d = std::accumulate(beta.parts.begin(), beta.parts.end(), 0) - 1;
    if (d < 2) throw InvalidDimension("composition must cover at least three colours");
    if (coarse.counts.size() != beta.parts.size()) {
        throw DimensionMismatch("coarse vector and composition block counts differ");
    }
    for (int g : coarse.counts) {
        if (g < 0) return 0;
    }
    const int k = static_cast<int>(beta.parts.size()) - 1;
    const long long s = std::accumulate(coarse.counts.begin(), coarse.counts.end(), 0LL) - d;
    if (s < 0) return 0;
    if (s == 0) {
        // Index-0 complex: block 0 realizes beta0 - 1 marked colours, block j
        // realizes beta_j of them.
        if (coarse.counts[0] != beta.parts[0] - 1) return 0;
        for (int j = 1; j <= k; ++j) {
            if (coarse.counts[static_cast<std::size_t>(j)] != beta.parts[static_cast<std::size_t>(j)]) return 0;
        }
        return 1;
    }

    const long long b0 = beta.parts[0];
    const long long g0 = coarse.counts[0];
    Rational value = (k == 0) ? Rational(1, BigInt(s)) : Rational(pow_int(BigInt(s), k - 1));
    value *= scaled_binom(g0 - b0 + 1, b0 * s + b0 - g0, g0 - b0 + 1);
    for (int j = 1; j <= k; ++j) {
        const long long bj = beta.parts[static_cast<std::size_t>(j)];
        const long long gj = coarse.counts[static_cast<std::size_t>(j)];
        value *= scaled_binom(bj, bj * s + bj - gj, gj - bj);
        if (value == 0) return 0;
    }
    return to_count(value);
}

CensusTable census_formula(int d, int n) {
    if (d < 2) throw InvalidDimension("census requires d >= 2");
    if (n < 0) throw Error("census requires n >= 0");
    CensusTable table;
    table.d = d;
    table.n = n;
    table.total = 0;
    for_each_composition(n + d, d + 1, [&](const std::vector<int>& gamma) {
        const BigInt count = count_full(ColourVector{gamma});
        if (count != 0) {
            table.entries[gamma] = count;
            table.total += count;
        }
    });
    return table;
}

CensusTable census_formula(int d, int n, const Composition& beta) {
    if (d < 2) throw InvalidDimension("census requires d >= 2");
    if (n < 0) throw Error("census requires n >= 0");
    validate_composition(beta);
    if (std::accumulate(beta.parts.begin(), beta.parts.end(), 0) != d + 1) {
        throw DimensionMismatch("composition does not cover the colour palette");
    }
    CensusTable table;
    table.d = d;
    table.n = n;
    table.beta = beta;
    table.total = 0;
    for_each_composition(n + d, beta.block_count(), [&](const std::vector<int>& coarse) {
        const BigInt count = count_coarse(beta, CoarseColourVector{coarse});
        if (count != 0) {
            table.entries[coarse] = count;
            table.total += count;
        }
    });
    return table;
}

CensusTable census_enumerated(int d, int n, std::uint64_t cap) {
    CensusTable table;
    table.d = d;
    table.n = n;
    table.total = 0;
    for_each_tree(d, n, cap, [&](const DecompositionTree& tree) {
        const ColourVector gamma = colour_vector(build_complex(tree));
        table.entries[gamma.counts] += 1;
        table.total += 1;
    });
    return table;
}

CensusTable census_enumerated(int d, int n, const Composition& beta, std::uint64_t cap) {
    validate_composition(beta);
    if (std::accumulate(beta.parts.begin(), beta.parts.end(), 0) != d + 1) {
        throw DimensionMismatch("composition does not cover the colour palette");
    }
    CensusTable table;
    table.d = d;
    table.n = n;
    table.beta = beta;
    table.total = 0;
    for_each_tree(d, n, cap, [&](const DecompositionTree& tree) {
        const ColourVector gamma = colour_vector(build_complex(tree));
        const CoarseColourVector coarse = coarsen(gamma, beta);
        table.entries[coarse.counts] += 1;
        table.total += 1;
    });
    return table;
}

IdentityPair rothe_first(int b1, int b2, int s, int g) {
    const auto factor = [s](const BigInt& x, long long m, long long k) {
        return s == 0 ? scaled_binom(x, m, k) : scaled_poly_binom(x, m, k);
    };
    IdentityPair pair;
    Rational sum = 0;
    for (int k = b1; k <= g - b2; ++k) {
        Rational term = factor(b1, static_cast<long long>(b1) * s + b1 - k, k - b1);
        term *= factor(b2, static_cast<long long>(b2) * s + b2 - (g - k), g - k - b2);
        sum += term;
    }
    pair.lhs = Rational(s) * sum;
    pair.rhs = factor(b1 + b2, static_cast<long long>(b1 + b2) * (s + 1) - g,
                      g - b1 - b2);
    return pair;
}

IdentityPair rothe_second(int b0, int b1, int s, int g) {
    const auto factor = [s](const BigInt& x, long long m, long long k) {
        return s == 0 ? scaled_binom(x, m, k) : scaled_poly_binom(x, m, k);
    };
    const auto plain = [s](long long m, long long k) {
        return s == 0 ? binom(m, k) : poly_binom(m, k);
    };
    IdentityPair pair;
    Rational sum = 0;
    for (int k = b0; k <= g - b1; ++k) {
        Rational term = factor(static_cast<long long>(b0) * s,
                               static_cast<long long>(b0) * s + b0 - k, k - b0);
        term *= plain(static_cast<long long>(b1) * s + b1 - 1 - (g - k), g - k - b1);
        sum += term;
    }
    pair.lhs = sum;
    pair.rhs = Rational(plain(static_cast<long long>(b0 + b1) * (s + 1) - 1 - g, g - b0 - b1));
    return pair;
}

void for_each_composition(int total, int slots,
                          const std::function<void(const std::vector<int>&)>& fn) {
    if (total < 0 || slots < 1) throw Error("composition enumeration needs total >= 0, slots >= 1");
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(slots));
    compositions_rec(total, slots, prefix, fn);
}

std::string census_to_json(const CensusTable& table, int indent) {
    nlohmann::json doc;
    doc["d"] = table.d;
    doc["n"] = table.n;
    if (table.beta) doc["beta"] = table.beta->parts;
    doc["entries"] = nlohmann::json::array();
    for (const auto& [gamma, count] : table.entries) {
        nlohmann::json entry;
        entry["gamma"] = gamma;
        entry["count"] = count.str();
        doc["entries"].push_back(entry);
    }
    doc["total"] = table.total.str();
    return doc.dump(indent);
}

} // namespace fcc
