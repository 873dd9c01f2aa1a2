#include "chorddse/render.hpp"

#include <cmath>
#include <sstream>

namespace chorddse {

namespace {

int dot_walk(const LabeledTree& t, int& next_id, std::ostringstream& out) {
    int id = next_id++;
    if (t.is_leaf()) {
        out << "  n" << id << " [shape=circle, label=\"" << t.label() << "\"];\n";
        return id;
    }
    out << "  n" << id << " [shape=point];\n";
    int l = dot_walk(t.left(), next_id, out);
    int r = dot_walk(t.right(), next_id, out);
    out << "  n" << id << " -> n" << l << ";\n";
    out << "  n" << id << " -> n" << r << ";\n";
    return id;
}

}  // namespace

std::string tree_to_dot(const LabeledTree& t) {
    std::ostringstream out;
    out << "digraph insertion_tree {\n";
    out << "  ordering=out;\n";
    int next_id = 0;
    dot_walk(t, next_id, out);
    out << "}\n";
    return out.str();
}

std::string diagram_to_svg(const ChordDiagram& c) {
    const double size = 400.0;
    const double cx = size / 2, cy = size / 2, r = size * 0.4;
    const int points = 2 * c.size();
    auto coord = [&](int p) {
        // Point 1 at angle 0, counter-clockwise (SVG y grows downward).
        double angle = 2.0 * M_PI * (p - 1) / points;
        return std::pair<double, double>{cx + r * std::cos(angle), cy - r * std::sin(angle)};
    };
    std::ostringstream out;
    out.precision(2);
    out << std::fixed;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    out << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int t = 0; t < c.size(); ++t) {
        auto [x1, y1] = coord(c.pairs()[t].first);
        auto [x2, y2] = coord(c.pairs()[t].second);
        out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
            << "\" stroke=\"black\"/>\n";
    }
    for (int p = 1; p <= points; ++p) {
        auto [x, y] = coord(p);
        out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"black\"/>\n";
    }
    if (c.connected()) {
        for (int t = 0; t < c.size(); ++t) {
            int label = c.label_of_pair(t);
            auto [x, y] = coord(c.pairs()[t].first);
            double ox = (x - cx) * 1.13 + cx;
            double oy = (y - cy) * 1.13 + cy;
            out << "  <text x=\"" << ox << "\" y=\"" << oy
                << "\" font-size=\"14\" text-anchor=\"middle\">" << label;
            if (c.decoration(label) != 1) out << " (" << c.decoration(label) << ")";
            out << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace chorddse
