#include "fcc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "json.hpp"

#include "fcc/complex.hpp"

namespace fcc {

namespace {

long long to_ll(const BigInt& value) {
    if (value > std::numeric_limits<long long>::max() ||
        value < std::numeric_limits<long long>::min()) {
        throw Error("coordinate too large for serialization");
    }
    return value.convert_to<long long>();
}

std::string decimal(const Rational& x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", x.convert_to<double>());
    return buf;
}

std::string fixed2(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", x);
    return buf;
}

nlohmann::json point_json(const RationalPoint& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& x : p) {
        nlohmann::json pair;
        pair["num"] = to_ll(numerator(x));
        pair["den"] = to_ll(denominator(x));
        arr.push_back(pair);
    }
    return arr;
}

nlohmann::json cells_json(const std::vector<GeometryCell>& cells) {
    nlohmann::json arr = nlohmann::json::array();
    for (const GeometryCell& cell : cells) {
        nlohmann::json c;
        c["vertices"] = cell.vertices;
        c["slots"] = cell.slots;
        arr.push_back(c);
    }
    return arr;
}

std::string off_text(int d, const std::vector<RationalPoint>& points,
                     const std::vector<GeometryCell>& cells) {
    std::ostringstream out;
    if (d == 3) {
        out << "OFF\n";
    } else {
        out << "nOFF\n" << d << "\n";
    }
    out << "# exact coordinates, one comment per vertex: id: num ... / den\n";
    BigInt common = 1;
    for (const RationalPoint& p : points) {
        for (const Rational& x : p) common = lcm(common, denominator(x));
    }
    for (std::size_t id = 0; id < points.size(); ++id) {
        out << "# " << id << ":";
        for (const Rational& x : points[id]) {
            out << " " << (numerator(x) * (common / denominator(x))).str();
        }
        out << " / " << common.str() << "\n";
    }
    out << points.size() << " " << cells.size() << " 0\n";
    for (const RationalPoint& p : points) {
        bool first = true;
        for (const Rational& x : p) {
            if (!first) out << " ";
            out << decimal(x);
            first = false;
        }
        out << "\n";
    }
    for (const GeometryCell& cell : cells) {
        out << cell.vertices.size();
        for (int id : cell.vertices) out << " " << id;
        out << "\n";
    }
    return out.str();
}

} // namespace

std::vector<RationalPoint> base_simplex(int d) {
    if (d < 2) throw InvalidDimension("base simplex requires d >= 2");
    std::vector<RationalPoint> points(static_cast<std::size_t>(d),
                                      RationalPoint(static_cast<std::size_t>(d), Rational(1)));
    for (int i = 0; i < d; ++i) {
        points[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Rational(1 - d);
    }
    return points;
}

SchlegelDiagram schlegel(const DecompositionTree& tree) {
    const int d = tree.d();
    const int n = tree.node_count();

    SchlegelDiagram diagram;
    diagram.d = d;
    diagram.n = n;
    diagram.points = base_simplex(d);
    diagram.points.resize(static_cast<std::size_t>(d + n));

    std::vector<int> base_ids(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) base_ids[static_cast<std::size_t>(i)] = i;

    std::function<void(int, const std::vector<int>&, std::vector<int>&, int)> split =
        [&](int node, const std::vector<int>& cell, std::vector<int>& path, int level) {
            diagram.depth = std::max(diagram.depth, level);
            const int apex = d + node;
            RationalPoint b(static_cast<std::size_t>(d), Rational(0));
            for (int id : cell) {
                for (int t = 0; t < d; ++t) {
                    b[static_cast<std::size_t>(t)] +=
                        diagram.points[static_cast<std::size_t>(id)][static_cast<std::size_t>(t)];
                }
            }
            for (int t = 0; t < d; ++t) b[static_cast<std::size_t>(t)] /= d;
            diagram.points[static_cast<std::size_t>(apex)] = std::move(b);

            for (int j = 0; j < d; ++j) {
                std::vector<int> child;
                child.reserve(static_cast<std::size_t>(d));
                child.push_back(apex);
                for (int t = 0; t < d; ++t) {
                    if (t != j) child.push_back(cell[static_cast<std::size_t>(t)]);
                }
                path.push_back(j + 1);
                const std::int32_t c = tree.child(node, j);
                if (c == -1) {
                    diagram.cells.push_back(GeometryCell{std::move(child), path});
                } else {
                    split(c, child, path, level + 1);
                }
                path.pop_back();
            }
        };

    if (n == 0) {
        diagram.cells.push_back(GeometryCell{base_ids, {}});
    } else {
        std::vector<int> path;
        split(0, base_ids, path, 1);
    }
    return diagram;
}

LiftedDiagram lift(const SchlegelDiagram& diagram) {
    LiftedDiagram lifted;
    lifted.d = diagram.d;
    lifted.n = diagram.n;
    lifted.cells = diagram.cells;
    lifted.points.reserve(diagram.points.size());
    for (const RationalPoint& p : diagram.points) {
        Rational height = 0;
        for (const Rational& x : p) height += x * x;
        RationalPoint q = p;
        for (Rational& x : q) x += height;
        lifted.points.push_back(std::move(q));
    }
    return lifted;
}

std::string export_off(const SchlegelDiagram& diagram) {
    return off_text(diagram.d, diagram.points, diagram.cells);
}

std::string export_off(const LiftedDiagram& diagram) {
    return off_text(diagram.d, diagram.points, diagram.cells);
}

std::string export_json(const SchlegelDiagram& diagram, int indent) {
    nlohmann::json doc;
    doc["d"] = diagram.d;
    doc["n"] = diagram.n;
    doc["depth"] = diagram.depth;
    doc["lifted"] = false;
    doc["points"] = nlohmann::json::array();
    for (const RationalPoint& p : diagram.points) doc["points"].push_back(point_json(p));
    doc["cells"] = cells_json(diagram.cells);
    return doc.dump(indent);
}

std::string export_json(const LiftedDiagram& diagram, int indent) {
    nlohmann::json doc;
    doc["d"] = diagram.d;
    doc["n"] = diagram.n;
    doc["lifted"] = true;
    doc["points"] = nlohmann::json::array();
    for (const RationalPoint& p : diagram.points) doc["points"].push_back(point_json(p));
    doc["cells"] = cells_json(diagram.cells);
    return doc.dump(indent);
}

std::string render_svg(const DecompositionTree& tree) {
    if (tree.d() != 2) throw UnsupportedDimension("svg rendering is implemented for d = 2 only");
    const ColouredComplex cx = build_complex(tree);
    const int n = cx.n;
    const int rim = n + 2;

    // Boundary cycle starting along the marked edge 0 -> 1.
    std::map<int, std::vector<int>> adjacent;
    for (const auto& facet : cx.boundary) {
        adjacent[facet[0]].push_back(facet[1]);
        adjacent[facet[1]].push_back(facet[0]);
    }
    std::vector<int> cycle{0, 1};
    while (static_cast<int>(cycle.size()) < rim) {
        const int cur = cycle.back();
        const int prev = cycle[cycle.size() - 2];
        for (int next : adjacent[cur]) {
            if (next != prev) {
                cycle.push_back(next);
                break;
            }
        }
    }

    // Regular polygon, marked edge horizontal at the bottom.
    const double cx0 = 250.0, cy0 = 250.0, radius = 200.0;
    const double step = 2.0 * M_PI / rim;
    std::vector<std::pair<double, double>> pos(static_cast<std::size_t>(rim));
    for (int k = 0; k < rim; ++k) {
        const double angle = M_PI / 2.0 + (0.5 - k) * step;
        const int id = cycle[static_cast<std::size_t>(k)];
        pos[static_cast<std::size_t>(id)] = {cx0 + radius * std::cos(angle),
                                             cy0 + radius * std::sin(angle)};
    }

    static const char* palette[3] = {"#d62728", "#1f77b4", "#2ca02c"};
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" "
           "viewBox=\"0 0 500 500\">\n";
    svg << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
           "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">"
           "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#333\"/></marker></defs>\n";
    for (const auto& cell : cx.simplices) {
        svg << "<polygon points=\"";
        for (std::size_t i = 0; i < cell.size(); ++i) {
            const auto& [x, y] = pos[static_cast<std::size_t>(cell[i])];
            if (i > 0) svg << " ";
            svg << fixed2(x) << "," << fixed2(y);
        }
        svg << "\" fill=\"#f3f3f3\" stroke=\"#888\" stroke-width=\"1.5\"/>\n";
    }
    const auto& [mx0, my0] = pos[static_cast<std::size_t>(cx.marked[0])];
    const auto& [mx1, my1] = pos[static_cast<std::size_t>(cx.marked[1])];
    svg << "<line x1=\"" << fixed2(mx0) << "\" y1=\"" << fixed2(my0) << "\" x2=\"" << fixed2(mx1)
        << "\" y2=\"" << fixed2(my1)
        << "\" stroke=\"#333\" stroke-width=\"4\" marker-end=\"url(#arrow)\"/>\n";
    for (std::size_t id = 0; id < pos.size(); ++id) {
        const auto& [x, y] = pos[id];
        svg << "<circle cx=\"" << fixed2(x) << "\" cy=\"" << fixed2(y)
            << "\" r=\"9\" fill=\"" << palette[cx.colours[id]]
            << "\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace fcc
