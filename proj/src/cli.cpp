//-----------------------------------------------------------------------------
// CLI command dispatch. All output is assembled into a string so invocations
// are pure and byte-deterministic at fixed precision.
//-----------------------------------------------------------------------------
#include "zirkel/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zirkel/analysis.hpp"
#include "zirkel/durer.hpp"
#include "zirkel/modern.hpp"
#include "zirkel/script.hpp"
#include "zirkel/svg.hpp"
#include "zirkel/trisect.hpp"

namespace zirkel {

namespace {

using nlohmann::json;

std::string table(const Real &x) { return format_real(x, 25, false); }

ThirteenVariant variant_from_name(const std::string &name) {
    if (name == "half")
        return ThirteenVariant::Half;
    if (name == "minus-one-thirtysecond")
        return ThirteenVariant::MinusOneThirtySecond;
    if (name == "hunrath")
        return ThirteenVariant::Hunrath;
    throw ValidationError("unknown 13-gon variant '" + name +
                          "' (half, minus-one-thirtysecond, hunrath)");
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A target is a figure id or a .geo file path.
struct Target {
    bool is_figure = false;
    FigureId fig{};
    std::string path;
};

Target resolve_target(const std::string &name) {
    Target t;
    try {
        t.fig = figure_from_name(name);
        t.is_figure = true;
    } catch (const ValidationError &) {
        t.path = name;
    }
    return t;
}

std::vector<std::string> registry_vertex_names(const PointRegistry &reg) {
    std::vector<std::string> names;
    for (int i = 1;; ++i) {
        std::string name = "v" + std::to_string(i);
        if (!reg.contains(name))
            break;
        names.push_back(name);
    }
    return names;
}

VertexList vertices_from_file(const std::string &path, PointRegistry *reg_out) {
    PointRegistry reg = execute(parse(read_file(path)));
    auto names = registry_vertex_names(reg);
    if (names.size() < 3)
        throw ValidationError(
            "script must define points v1..vn (n >= 3) for analysis");
    VertexList v;
    v.n = static_cast<int>(names.size());
    for (const auto &name : names)
        v.vertices.push_back(reg.point_at(name));
    if (reg_out)
        *reg_out = reg;
    return v;
}

std::string cmd_build(FigureId fig, std::optional<ThirteenVariant> variant,
                      bool rusty_side, const std::string &format) {
    VertexList v = durer_polygon(fig, variant, rusty_side);
    if (format == "json") {
        json j;
        j["figure"] = figure_name(fig);
        j["n"] = v.n;
        j["exact_regular"] = v.exact_regular;
        json verts = json::array();
        for (const Point &p : v.vertices)
            verts.push_back({table(p.x), table(p.y)});
        j["vertices"] = verts;
        return j.dump(2) + "\n";
    }
    std::string out;
    if (format == "csv") {
        out += "index,x,y\n";
        for (size_t i = 0; i < v.vertices.size(); ++i)
            out += std::to_string(i + 1) + "," + table(v.vertices[i].x) + "," +
                   table(v.vertices[i].y) + "\n";
        return out;
    }
    for (size_t i = 0; i < v.vertices.size(); ++i)
        out += "v" + std::to_string(i + 1) + " = (" + table(v.vertices[i].x) +
               ", " + table(v.vertices[i].y) + ")\n";
    return out;
}

std::string cmd_run(const std::string &path, const std::string &format) {
    PointRegistry reg = execute(parse(read_file(path)));
    if (format == "json") {
        json j;
        for (const auto &[name, obj] : reg.objects()) {
            json o;
            if (const Point *p = std::get_if<Point>(&obj)) {
                o["kind"] = "point";
                o["x"] = table(p->x);
                o["y"] = table(p->y);
            } else if (const Line *l = std::get_if<Line>(&obj)) {
                o["kind"] = "line";
                o["p"] = {table(l->p.x), table(l->p.y)};
                o["q"] = {table(l->q.x), table(l->q.y)};
            } else if (const Circle *c = std::get_if<Circle>(&obj)) {
                o["kind"] = "circle";
                o["center"] = {table(c->center.x), table(c->center.y)};
                o["radius"] = table(c->radius);
            }
            j[name] = o;
        }
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::string out = "name,kind,values\n";
        for (const auto &[name, obj] : reg.objects()) {
            if (const Point *p = std::get_if<Point>(&obj))
                out += name + ",point," + table(p->x) + "," + table(p->y) + "\n";
            else if (const Line *l = std::get_if<Line>(&obj))
                out += name + ",line," + table(l->p.x) + "," + table(l->p.y) +
                       "," + table(l->q.x) + "," + table(l->q.y) + "\n";
            else if (const Circle *c = std::get_if<Circle>(&obj))
                out += name + ",circle," + table(c->center.x) + "," +
                       table(c->center.y) + "," + table(c->radius) + "\n";
        }
        return out;
    }
    return serialize_registry(reg);
}

std::string cmd_analyze(const std::string &target_name,
                        std::optional<ThirteenVariant> variant, bool rusty_side,
                        const std::string &format) {
    Target t = resolve_target(target_name);
    VertexList v;
    if (t.is_figure)
        v = durer_polygon(t.fig, variant, rusty_side);
    else
        v = vertices_from_file(t.path, nullptr);
    PolygonReport r = report(v);

    if (format == "json") {
        json j;
        j["n"] = r.n;
        json sides = json::array();
        for (const Real &s : r.sides)
            sides.push_back(table(s));
        j["sides"] = sides;
        json cen = json::array(), inn = json::array();
        for (const DmsAngle &a : r.central_angles)
            cen.push_back(dms_to_string(a));
        for (const DmsAngle &a : r.interior_angles)
            inn.push_back(dms_to_string(a));
        j["central_angles_dms"] = cen;
        j["interior_angles_dms"] = inn;
        j["max_side_dev"] = table(r.max_side_dev);
        j["max_angle_dev_arcsec"] = table(r.max_angle_dev_arcsec);
        j["step_angle_err_arcsec"] = table(r.step_angle_err_arcsec);
        j["equilateral"] = r.equilateral;
        j["equiangular"] = r.equiangular;
        j["concyclic"] = r.concyclic;
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::string out = "field,index,value\n";
        out += "n,," + std::to_string(r.n) + "\n";
        out += "concyclic,," + std::string(r.concyclic ? "true" : "false") + "\n";
        out += "equilateral,," + std::string(r.equilateral ? "true" : "false") + "\n";
        out += "equiangular,," + std::string(r.equiangular ? "true" : "false") + "\n";
        out += "max_side_dev,," + table(r.max_side_dev) + "\n";
        out += "max_angle_dev_arcsec,," + table(r.max_angle_dev_arcsec) + "\n";
        out += "step_angle_err_arcsec,," + table(r.step_angle_err_arcsec) + "\n";
        for (size_t i = 0; i < r.sides.size(); ++i)
            out += "side," + std::to_string(i + 1) + "," + table(r.sides[i]) + "\n";
        for (size_t i = 0; i < r.central_angles.size(); ++i)
            out += "central_angle," + std::to_string(i + 1) + "," +
                   dms_to_string(r.central_angles[i]) + "\n";
        for (size_t i = 0; i < r.interior_angles.size(); ++i)
            out += "interior_angle," + std::to_string(i + 1) + "," +
                   dms_to_string(r.interior_angles[i]) + "\n";
        return out;
    }
    std::string out;
    out += "n = " + std::to_string(r.n) + "\n";
    out += "concyclic = " + std::string(r.concyclic ? "yes" : "no") + "\n";
    out += "equilateral = " + std::string(r.equilateral ? "yes" : "no") + "\n";
    out += "equiangular = " + std::string(r.equiangular ? "yes" : "no") + "\n";
    out += "max_side_dev = " + table(r.max_side_dev) + "\n";
    out += "max_angle_dev_arcsec = " + table(r.max_angle_dev_arcsec) + "\n";
    out += "step_angle_err_arcsec = " + table(r.step_angle_err_arcsec) + "\n";
    for (size_t i = 0; i < r.sides.size(); ++i) {
        out += "side[" + std::to_string(i + 1) + "] = " + table(r.sides[i]) +
               "   central = " + dms_to_string(r.central_angles[i]) +
               "   interior = " + dms_to_string(r.interior_angles[i]) + "\n";
    }
    return out;
}

std::string cmd_render(const std::string &target_name, const std::string &out_path,
                       bool show_circle, bool with_construction) {
    Target t = resolve_target(target_name);
    VertexList v;
    PointRegistry reg;
    bool have_reg = false;
    if (t.is_figure) {
        if (with_construction) {
            // raw script frame so the overlay matches the polygon
            reg = execute(figure_script(t.fig));
            have_reg = true;
            v.n = figure_sides(t.fig);
            v.exact_regular = figure_exact(t.fig);
            for (const std::string &name : figure_vertex_names(t.fig))
                v.vertices.push_back(reg.point_at(name));
        } else {
            v = durer_polygon(t.fig);
        }
    } else {
        v = vertices_from_file(t.path, &reg);
        have_reg = with_construction;
    }
    std::string svg =
        render_svg(v, show_circle, have_reg ? &reg : nullptr);
    if (out_path.empty())
        return svg;
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw DomainError("cannot write file '" + out_path + "'");
    out << svg;
    return "wrote " + out_path + "\n";
}

std::string cmd_constructible(long n, const std::string &format) {
    ConstructibilityVerdict v = is_constructible(n);
    if (format == "json") {
        json j;
        j["n"] = v.n;
        j["constructible"] = v.constructible;
        j["power_of_two"] = v.power_of_two;
        j["fermat_factors"] = v.fermat_factors;
        if (v.obstruction)
            j["obstruction"] = *v.obstruction;
        else
            j["obstruction"] = nullptr;
        return j.dump(2) + "\n";
    }
    std::string decomp;
    if (v.power_of_two > 0)
        decomp = "2^" + std::to_string(v.power_of_two);
    for (long f : v.fermat_factors)
        decomp += (decomp.empty() ? "" : " * ") + std::to_string(f);
    if (format == "csv") {
        std::string out = "n,constructible,power_of_two,fermat_factors,obstruction\n";
        std::string facs;
        for (long f : v.fermat_factors)
            facs += (facs.empty() ? "" : " ") + std::to_string(f);
        out += std::to_string(v.n) + "," +
               (v.constructible ? "true" : "false") + "," +
               std::to_string(v.power_of_two) + "," + facs + "," +
               (v.obstruction ? std::to_string(*v.obstruction) : "") + "\n";
        return out;
    }
    if (v.constructible)
        return std::to_string(v.n) + ": constructible = " + decomp + "\n";
    return std::to_string(v.n) + ": NOT constructible (obstruction: " +
           std::to_string(*v.obstruction) + ")\n";
}

std::string cmd_trisect(const std::string &degrees, const std::string &format) {
    Real theta = parse_real(degrees);
    TrisectionTrace t = trisect(theta);
    Real third = theta / 3;
    if (format == "json") {
        json j;
        j["theta_in_deg"] = table(t.theta_in);
        j["theta_out_deg"] = table(t.theta_out);
        j["theta_out_dms"] = dms_string(t.theta_out);
        j["exact_third_dms"] = dms_string(third);
        j["error_arcsec"] = table(t.error_arcsec);
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        return "theta_in,theta_out_dms,exact_third_dms,error_arcsec\n" +
               degrees + "," + dms_string(t.theta_out) + "," +
               dms_string(third) + "," + table(t.error_arcsec) + "\n";
    }
    std::string out;
    out += "theta_out = " + dms_string(t.theta_out) + "\n";
    out += "exact third = " + dms_string(third) + "\n";
    out += "error = " + format_real(t.error_arcsec, 10, true) + " arcsec\n";
    return out;
}

std::string cmd_list(const std::string &format) {
    if (format == "json") {
        json j = json::array();
        for (FigureId fig : all_figures()) {
            json row;
            row["name"] = figure_name(fig);
            row["figure"] = figure_number(fig);
            row["sides"] = figure_sides(fig);
            row["regular"] = figure_exact(fig);
            j.push_back(row);
        }
        return j.dump(2) + "\n";
    }
    std::string out;
    if (format == "csv") {
        out = "name,figure,sides,regular\n";
        for (FigureId fig : all_figures())
            out += figure_name(fig) + "," + std::to_string(figure_number(fig)) +
                   "," + std::to_string(figure_sides(fig)) + "," +
                   (figure_exact(fig) ? "Y" : "N") + "\n";
        return out;
    }
    for (FigureId fig : all_figures()) {
        std::string name = figure_name(fig);
        name.resize(20, ' ');
        out += name + " fig. " + std::to_string(figure_number(fig)) +
               "   n=" + std::to_string(figure_sides(fig)) +
               "   regular: " + (figure_exact(fig) ? "Y" : "N") + "\n";
    }
    return out;
}

} // namespace

CliResult run_cli(const std::vector<std::string> &args) {
    CLI::App app{"zirkel: arbitrary-precision compass-and-straightedge "
                 "constructions (Durer 1525, Richmond, Gauss)"};
    app.fallthrough();

    int digits = 50;
    if (const char *env = std::getenv("ZIRKEL_DIGITS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0')
            return {2, "error: ZIRKEL_DIGITS must be an integer\n"};
        digits = static_cast<int>(v);
    }
    app.add_option("--digits", digits, "working precision in decimal digits (>= 30)");
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    std::string figure, target, file, out_path, degrees, variant_name;
    bool rusty_side = false, no_circle = false, with_construction = false;
    long n_query = 0;

    CLI::App *build = app.add_subcommand("build", "print a figure's vertices");
    build->add_option("figure", figure, "figure id")->required();
    build->add_option("--variant", variant_name, "13-gon edge variant");
    build->add_flag("--rusty-side", rusty_side, "15-gon: use the rusty pentagon side");

    CLI::App *run = app.add_subcommand("run", "execute a .geo script");
    run->add_option("file", file, "script path")->required();

    CLI::App *analyze = app.add_subcommand("analyze", "polygon report");
    analyze->add_option("target", target, "figure id or .geo file")->required();
    analyze->add_option("--variant", variant_name, "13-gon edge variant");
    analyze->add_flag("--rusty-side", rusty_side, "15-gon: use the rusty pentagon side");

    CLI::App *render = app.add_subcommand("render", "render SVG");
    render->add_option("target", target, "figure id or .geo file")->required();
    render->add_option("-o,--output", out_path, "output file (stdout if absent)");
    render->add_flag("--no-circle", no_circle, "omit the unit circle");
    render->add_flag("--construction", with_construction,
                     "overlay the construction's points, lines and circles");

    CLI::App *constructible =
        app.add_subcommand("constructible", "Gauss-Wantzel verdict");
    constructible->add_option("n", n_query, "polygon side count")->required();

    CLI::App *trisect_cmd =
        app.add_subcommand("trisect", "approximate trisection of an angle");
    trisect_cmd->add_option("degrees", degrees, "angle in degrees")->required();

    CLI::App *list = app.add_subcommand("list", "enumerate built-in figures");

    app.require_subcommand(1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        CLI::App *sub = nullptr;
        for (CLI::App *s : app.get_subcommands())
            sub = s;
        return {0, (sub ? sub : &app)->help()};
    } catch (const CLI::ParseError &e) {
        return {2, std::string("error: ") + e.what() + "\n\n" + app.help()};
    }

    if (digits < 30)
        return {2, "error: --digits must be at least 30\n"};
    set_precision(static_cast<unsigned>(digits));

    try {
        std::optional<ThirteenVariant> variant;
        if (!variant_name.empty())
            variant = variant_from_name(variant_name);
        if (build->parsed())
            return {0, cmd_build(figure_from_name(figure), variant, rusty_side,
                                 format)};
        if (run->parsed())
            return {0, cmd_run(file, format)};
        if (analyze->parsed())
            return {0, cmd_analyze(target, variant, rusty_side, format)};
        if (render->parsed())
            return {0, cmd_render(target, out_path, !no_circle, with_construction)};
        if (constructible->parsed())
            return {0, cmd_constructible(n_query, format)};
        if (trisect_cmd->parsed())
            return {0, cmd_trisect(degrees, format)};
        if (list->parsed())
            return {0, cmd_list(format)};
    } catch (const Error &e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    }
    return {2, app.help()};
}

} // namespace zirkel
