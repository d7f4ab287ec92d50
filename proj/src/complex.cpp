#include "fcc/complex.hpp"

#include <algorithm>
#include <numeric>

namespace fcc {

namespace {

std::vector<int> sorted(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    return ids;
}

} // namespace

long long ColourVector::excess() const {
    long long sum = std::accumulate(counts.begin(), counts.end(), 0LL);
    return sum - dim();
}

ColouredComplex build_complex(const DecompositionTree& tree) {
    const int d = tree.d();
    const int n = tree.node_count();

    ColouredComplex cx;
    cx.d = d;
    cx.n = n;
    cx.colours.resize(static_cast<std::size_t>(d + n));
    cx.marked.resize(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        cx.marked[static_cast<std::size_t>(i)] = i;
        cx.colours[static_cast<std::size_t>(i)] = i + 1;
    }

    std::set<std::vector<int>> boundary;
    boundary.insert(cx.marked);

    // The interface facet is the ordered (d-1)-cell shared with the parent
    // (the marked facet for the root). The apex of the slot-j child takes the
    // colour of the j-th interface vertex, the one missing from that facet.
    std::function<void(int, const std::vector<int>&, int)> emit =
        [&](int node, const std::vector<int>& interface, int apex_colour) {
            const int apex = d + node; // preorder ids continue after the marked facet
            cx.colours[static_cast<std::size_t>(apex)] = apex_colour;

            std::vector<int> cell = interface;
            cell.push_back(apex);
            cx.simplices.push_back(sorted(cell));

            for (int j = 0; j < d; ++j) {
                std::vector<int> child_interface;
                child_interface.reserve(static_cast<std::size_t>(d));
                child_interface.push_back(apex);
                for (int t = 0; t < d; ++t) {
                    if (t != j) child_interface.push_back(interface[static_cast<std::size_t>(t)]);
                }
                const std::int32_t c = tree.child(node, j);
                if (c == -1) {
                    boundary.insert(sorted(child_interface));
                } else {
                    emit(c, child_interface, cx.colours[static_cast<std::size_t>(interface[static_cast<std::size_t>(j)])]);
                }
            }
        };

    if (n > 0) emit(0, cx.marked, 0);

    cx.boundary.assign(boundary.begin(), boundary.end());
    return cx;
}

ColourVector colour_vector(const ColouredComplex& cx) {
    ColourVector gamma;
    gamma.counts.assign(static_cast<std::size_t>(cx.d + 1), 0);
    for (int colour : cx.colours) ++gamma.counts[static_cast<std::size_t>(colour)];
    return gamma;
}

CoarseColourVector coarsen(const ColourVector& gamma, const Composition& beta) {
    const int sum = std::accumulate(beta.parts.begin(), beta.parts.end(), 0);
    if (sum != gamma.dim() + 1) {
        throw DimensionMismatch("composition does not cover the colour palette");
    }
    for (int part : beta.parts) {
        if (part < 1) throw DimensionMismatch("composition parts must be positive");
    }
    CoarseColourVector coarse;
    std::size_t next = 0;
    for (int part : beta.parts) {
        int block = 0;
        for (int t = 0; t < part; ++t) block += gamma.counts[next++];
        coarse.counts.push_back(block);
    }
    return coarse;
}

namespace {

// All non-empty subsets of `cell`, keyed by subset size - 1.
void insert_faces(const std::vector<int>& cell, std::vector<std::set<std::vector<int>>>& faces) {
    const int size = static_cast<int>(cell.size());
    for (unsigned mask = 1; mask < (1u << size); ++mask) {
        std::vector<int> face;
        for (int b = 0; b < size; ++b) {
            if (mask & (1u << b)) face.push_back(cell[static_cast<std::size_t>(b)]);
        }
        faces[face.size() - 1].insert(std::move(face));
    }
}

} // namespace

FaceCounts f_vector(const ColouredComplex& cx) {
    if (cx.n == 0) throw DegenerateComplex("f-vector of the index-0 complex is undefined");

    std::vector<std::set<std::vector<int>>> all(static_cast<std::size_t>(cx.d) + 1);
    for (const auto& cell : cx.simplices) insert_faces(cell, all);

    std::vector<std::set<std::vector<int>>> on_boundary(static_cast<std::size_t>(cx.d) + 1);
    for (const auto& facet : cx.boundary) insert_faces(facet, on_boundary);

    FaceCounts counts;
    counts.boundary.resize(static_cast<std::size_t>(cx.d));
    counts.interior.resize(static_cast<std::size_t>(cx.d) + 1);
    for (int i = 0; i <= cx.d; ++i) {
        const long long total = static_cast<long long>(all[static_cast<std::size_t>(i)].size());
        const long long bnd = static_cast<long long>(on_boundary[static_cast<std::size_t>(i)].size());
        if (i < cx.d) counts.boundary[static_cast<std::size_t>(i)] = bnd;
        counts.interior[static_cast<std::size_t>(i)] = total - bnd;
    }
    return counts;
}

std::vector<long long> boundary_f_vector_formula(int d, int n) {
    if (d < 2) throw InvalidDimension("boundary f-vector requires d >= 2");
    if (n < 1) throw DegenerateComplex("boundary f-vector requires n >= 1");
    std::vector<long long> f(static_cast<std::size_t>(d));
    for (int i = 0; i + 1 < d; ++i) {
        f[static_cast<std::size_t>(i)] =
            n * binom(d, i).convert_to<long long>() + binom(d, i + 1).convert_to<long long>();
    }
    f[static_cast<std::size_t>(d - 1)] = static_cast<long long>(n) * (d - 1) + 2;
    return f;
}

std::vector<std::pair<int, int>> one_skeleton(const ColouredComplex& cx) {
    std::set<std::pair<int, int>> edges;
    auto add_cell = [&](const std::vector<int>& cell) {
        for (std::size_t a = 0; a < cell.size(); ++a) {
            for (std::size_t b = a + 1; b < cell.size(); ++b) {
                edges.emplace(cell[a], cell[b]);
            }
        }
    };
    for (const auto& cell : cx.simplices) add_cell(cell);
    for (const auto& facet : cx.boundary) add_cell(facet);
    return {edges.begin(), edges.end()};
}

bool is_proper(const ColouredComplex& cx) {
    for (const auto& [a, b] : one_skeleton(cx)) {
        if (cx.colours[static_cast<std::size_t>(a)] == cx.colours[static_cast<std::size_t>(b)]) {
            return false;
        }
    }
    return true;
}

} // namespace fcc
