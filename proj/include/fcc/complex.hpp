#pragma once

#include <compare>
#include <set>
#include <utility>
#include <vector>

#include "fcc/tree.hpp"

namespace fcc {

/// Vertex counts per colour class: counts[i] is the number of vertices of
/// colour c_i, i = 0..d. For a complex with n cells the counts sum to n + d.
struct ColourVector {
    std::vector<int> counts;

    int dim() const { return static_cast<int>(counts.size()) - 1; }

    /// The parameter s = (sum of counts) - d.
    long long excess() const;

    auto operator<=>(const ColourVector&) const = default;
};

/// Ordered blocks of consecutive colours; parts sum to d + 1. Block 0 always
/// contains c_0.
struct Composition {
    std::vector<int> parts;

    int block_count() const { return static_cast<int>(parts.size()); }

    auto operator<=>(const Composition&) const = default;
};

/// Vertex counts per colour block of a Composition.
struct CoarseColourVector {
    std::vector<int> counts;

    auto operator<=>(const CoarseColourVector&) const = default;
};

/// Simplicial d-ball with a marked ordered boundary facet and the unique
/// proper colouring in d + 1 colours. Vertices 0..d-1 are the marked facet in
/// order (colours c_1..c_d); apexes follow in preorder of the tree.
struct ColouredComplex {
    int d = 0;
    int n = 0;
    std::vector<int> colours;                 // vertex id -> colour index 0..d
    std::vector<std::vector<int>> simplices;  // maximal cells, sorted ids, creation order
    std::vector<int> marked;                  // the d ordered vertex ids of the marked facet
    std::vector<std::vector<int>> boundary;   // boundary (d-1)-cells, sorted ids, sorted list
};

/// Geometric realization of a tree: one maximal cell per node.
ColouredComplex build_complex(const DecompositionTree& tree);

ColourVector colour_vector(const ColouredComplex& cx);

/// Blockwise sums of a colour vector. Throws DimensionMismatch when the
/// composition does not cover exactly the d + 1 colours.
CoarseColourVector coarsen(const ColourVector& gamma, const Composition& beta);

/// Face counts split by boundary/interior; boundary[i] and interior[i] count
/// the i-dimensional faces. Throws DegenerateComplex when n = 0.
struct FaceCounts {
    std::vector<long long> boundary; // sizes d (i = 0..d-1)
    std::vector<long long> interior; // sizes d+1 (i = 0..d)
};

FaceCounts f_vector(const ColouredComplex& cx);

/// Closed form for the boundary face counts of any complex with n >= 1 cells:
/// entry i is n*C(d,i) + C(d,i+1) for i <= d-2 and n(d-1) + 2 for i = d-1.
std::vector<long long> boundary_f_vector_formula(int d, int n);

/// Edge set of the complex (pairs of vertex ids, lexicographically sorted).
std::vector<std::pair<int, int>> one_skeleton(const ColouredComplex& cx);

/// True when no edge joins two vertices of equal colour.
bool is_proper(const ColouredComplex& cx);

} // namespace fcc
