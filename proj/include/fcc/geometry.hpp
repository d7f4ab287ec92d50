#pragma once

#include <string>
#include <vector>

#include "fcc/numeric.hpp"
#include "fcc/tree.hpp"

namespace fcc {

using RationalPoint = std::vector<Rational>;

/// A (d-1)-cell of a diagram: vertex ids in role order (apex first, inherited
/// vertices after) and the 1-based slot path from the root to the empty slot
/// the cell came from (empty path for the undivided base cell).
struct GeometryCell {
    std::vector<int> vertices;
    std::vector<int> slots;

    bool operator==(const GeometryCell&) const = default;
};

/// Barycentric subdivision picture of a complex seen through its marked
/// facet: an exact subdivision of the base simplex. Vertex ids coincide with
/// the complex ids (0..d-1 marked facet, apexes in preorder after).
struct SchlegelDiagram {
    int d = 0;
    int n = 0;
    int depth = 0; // deepest subdivision level; denominators divide d^depth
    std::vector<RationalPoint> points;
    std::vector<GeometryCell> cells;
};

/// The same cells with each point translated along (1,...,1) by its squared
/// euclidean norm, which makes the subdivision the lower faces of a convex
/// lift.
struct LiftedDiagram {
    int d = 0;
    int n = 0;
    std::vector<RationalPoint> points;
    std::vector<GeometryCell> cells;
};

/// Vertices of the ambient (d-1)-simplex: vertex i has coordinate 1-d in
/// position i and 1 elsewhere, so every vertex lies in the hyperplane of
/// coordinate sum 0. Requires d >= 2.
std::vector<RationalPoint> base_simplex(int d);

/// Exact diagram of the complex of `tree`: each node places its apex at the
/// barycenter of its cell and splits the cell into d smaller ones.
SchlegelDiagram schlegel(const DecompositionTree& tree);

LiftedDiagram lift(const SchlegelDiagram& diagram);

/// Geomview OFF text (classic OFF for d = 3, dimension-explicit nOFF
/// otherwise). Exact coordinates are kept in comment lines; the coordinate
/// table itself is decimal.
std::string export_off(const SchlegelDiagram& diagram);
std::string export_off(const LiftedDiagram& diagram);

/// JSON with exact {"num", "den"} coordinate pairs.
std::string export_json(const SchlegelDiagram& diagram, int indent = 2);
std::string export_json(const LiftedDiagram& diagram, int indent = 2);

/// SVG drawing of the triangulated polygon for d = 2 with the marked edge at
/// the bottom (arrow from first to second marked vertex) and vertices tinted
/// by colour class. Throws UnsupportedDimension for d != 2.
std::string render_svg(const DecompositionTree& tree);

} // namespace fcc
