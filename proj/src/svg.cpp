//-----------------------------------------------------------------------------
// SVG output. All numbers go through one 12-digit formatter so the bytes are
// a pure function of the input.
//-----------------------------------------------------------------------------
#include "zirkel/svg.hpp"

namespace zirkel {

namespace {

std::string num(const Real &x) {
    // below SVG coordinate resolution; avoids 50-digit zero residue
    if (abs(x) < 1e-12)
        return "0";
    return format_real(x, 12, true);
}

void point_xy(std::string &out, const Point &p) {
    out += num(p.x);
    out += ' ';
    out += num(-p.y);  // y flipped: mathematical up is visual up
}

} // namespace

std::string render_svg(const VertexList &v, bool show_circle,
                       const PointRegistry *construction) {
    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" "
         "viewBox=\"-1.2 -1.2 2.4 2.4\">\n";
    if (show_circle)
        s += "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" "
             "stroke=\"#999999\" stroke-width=\"0.006\"/>\n";

    if (construction) {
        for (const auto &[name, obj] : construction->objects()) {
            if (const Circle *c = std::get_if<Circle>(&obj)) {
                s += "  <circle cx=\"" + num(c->center.x) + "\" cy=\"" +
                     num(-c->center.y) + "\" r=\"" + num(c->radius) +
                     "\" fill=\"none\" stroke=\"#bbbbbb\" "
                     "stroke-width=\"0.004\"/>\n";
            } else if (const Line *l = std::get_if<Line>(&obj)) {
                s += "  <line x1=\"" + num(l->p.x) + "\" y1=\"" + num(-l->p.y) +
                     "\" x2=\"" + num(l->q.x) + "\" y2=\"" + num(-l->q.y) +
                     "\" stroke=\"#bbbbbb\" stroke-width=\"0.004\"/>\n";
            }
        }
    }

    s += "  <path d=\"";
    for (size_t i = 0; i < v.vertices.size(); ++i) {
        s += i == 0 ? "M " : " L ";
        point_xy(s, v.vertices[i]);
    }
    s += " Z\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.01\"/>\n";

    if (construction) {
        for (const auto &[name, obj] : construction->objects()) {
            const Point *p = std::get_if<Point>(&obj);
            if (!p)
                continue;
            s += "  <circle cx=\"" + num(p->x) + "\" cy=\"" + num(-p->y) +
                 "\" r=\"0.014\" fill=\"#cc3333\"/>\n";
            s += "  <text x=\"" + num(p->x + Real(1) / 40) + "\" y=\"" +
                 num(-p->y - Real(1) / 40) +
                 "\" font-size=\"0.08\" fill=\"#cc3333\">" + name + "</text>\n";
        }
    }
    s += "</svg>\n";
    return s;
}

} // namespace zirkel
