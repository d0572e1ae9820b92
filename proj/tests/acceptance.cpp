//-----------------------------------------------------------------------------
// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failed criteria. Every tolerance is stated inline; reference coordinates
// are the published 25-digit tables.
//-----------------------------------------------------------------------------
#include <cstdio>
#include <string>
#include <vector>

#include "zirkel/analysis.hpp"
#include "zirkel/cli.hpp"
#include "zirkel/corpus.hpp"
#include "zirkel/durer.hpp"
#include "zirkel/engine.hpp"
#include "zirkel/modern.hpp"
#include "zirkel/script.hpp"
#include "zirkel/trisect.hpp"

using namespace zirkel;

namespace {

int g_failed = 0;
std::vector<std::string> g_notes;

Real R(const std::string &text) { return parse_real(text); }

bool within(const Real &got, const Real &want, const Real &tol) {
    return abs(got - want) <= tol;
}

void note(const std::string &line) { g_notes.push_back("    " + line); }

void criterion(int index, bool ok, const std::string &label) {
    std::printf("[%s] %2d. %s\n", ok ? "PASS" : "FAIL", index, label.c_str());
    for (const std::string &line : g_notes)
        std::printf("%s\n", line.c_str());
    g_notes.clear();
    if (!ok)
        ++g_failed;
}

// Published tables are clockwise from the top; the library is
// counterclockwise, so row m maps to row (n - m) % n.
struct Pin {
    const char *x;
    const char *y;
};

bool match_table(const VertexList &got, const std::vector<Pin> &cw,
                 const Real &tol) {
    std::size_t n = cw.size();
    if (got.vertices.size() != n)
        return false;
    bool ok = true;
    for (std::size_t m = 0; m < n; ++m) {
        const Pin &p = cw[m == 0 ? 0 : n - m];
        if (!within(got.vertices[m].x, R(p.x), tol) ||
            !within(got.vertices[m].y, R(p.y), tol))
            ok = false;
    }
    return ok;
}

std::string fmt(const Real &x, int digits = 20) {
    return format_real(x, digits, true);
}

//-----------------------------------------------------------------------------
// 1. rusty pentagon vertex table
//-----------------------------------------------------------------------------
void criterion1() {
    const std::vector<Pin> table = {
        {"0", "1"},
        {"0.958193290885377245697767", "0.318948145474695899702365"},
        {"0.587785252292473129168706", "-0.796741729085373237430852"},
        {"-0.587785252292473129168706", "-0.796741729085373237430852"},
        {"-0.958193290885377245697767", "0.318948145474695899702365"},
    };
    bool ok = match_table(durer_polygon(FigureId::PentagonRusty16), table,
                          R("1e-22"));
    criterion(1, ok,
              "rusty pentagon: all 5 scaled vertices within 1e-22 of the "
              "published 25-digit table");
}

//-----------------------------------------------------------------------------
// 2. rusty pentagon angles
//-----------------------------------------------------------------------------
void criterion2() {
    RustyAngles a = pentagon_rusty_angles();
    Real alpha = dms_to_degrees(a.alpha);
    Real beta = dms_to_degrees(a.beta);
    Real gamma = dms_to_degrees(a.gamma);
    Real arcsec_tol = R("0.01") / 3600; // 0.01 arcsec in degrees
    bool ok = true;
    ok &= within(alpha, dms_to_degrees(DmsAngle{108, 21, R("58.03259")}),
                 arcsec_tol);
    ok &= within(beta, dms_to_degrees(DmsAngle{107, 2, R("16.17332")}),
                 arcsec_tol);
    ok &= within(gamma, dms_to_degrees(DmsAngle{109, 11, R("31.58819")}),
                 arcsec_tol);
    ok &= within(2 * alpha + 2 * beta + gamma, Real(540), R("1e-30"));
    criterion(2, ok,
              "rusty pentagon angles: alpha/beta/gamma within 0.01\" of "
              "108°21'58.03259\", 107°2'16.17332\", "
              "109°11'31.58819\"; 2a+2b+g = 540° within 1e-30");
}

//-----------------------------------------------------------------------------
// 3. 11-gon
//-----------------------------------------------------------------------------
void criterion3() {
    const std::vector<Pin> table = {
        {"0", "1"},
        {"0.5397944249806905656719474", "0.84179687500000000000000000"},
        {"0.9087945201823345070492552", "0.41724395751953125000000000"},
        {"0.9902463492325366708055095", "-0.1393275558948516845703125"},
        {"0.7583780443458815285647082", "-0.6518149598268792033195496"},
        {"0.2865541863654123089264796", "-0.9580640366261832241434604"},
        {"-0.2865541863654123089264796", "-0.9580640366261832241434604"},
        {"-0.7583780443458815285647082", "-0.6518149598268792033195496"},
        {"-0.9902463492325366708055095", "-0.1393275558948516845703125"},
        {"-0.9087945201823345070492552", "0.41724395751953125000000000"},
        {"-0.5397944249806905656719474", "0.84179687500000000000000000"},
    };
    VertexList v = durer_polygon(FigureId::Eleven19);
    bool ok = match_table(v, table, R("1e-22"));
    // closing side between the two bottom vertices
    Real closing = distance(v.vertices[5], v.vertices[6]);
    ok &= within(closing, R("0.5731083727308245"), R("1e-14"));
    Real central = chord_central_angle(Real(9) / 16, Real(1));
    ok &= within(central, dms_to_degrees(DmsAngle{32, 40, R("10.72402")}),
                 R("0.001") / 3600);
    criterion(3, ok,
              "11-gon: vertices within 1e-22, closing side "
              "0.5731083727308245 within 1e-14, central angle "
              "2 arcsin(9/32) = 32°40'10.72402\" within 0.001\"");
}

//-----------------------------------------------------------------------------
// 4. 13-gon
//-----------------------------------------------------------------------------
void criterion4() {
    const std::vector<Pin> table = {
        {"0", "1"},
        {"0.4652113226503646256137798", "0.88519965277777777777777777777778"},
        {"0.8236098025567870259889791", "0.5671568505557966820987654"},
        {"0.9929068998449193496505630", "0.1188944415872806711288473"},
        {"0.9342318834099777427717181", "-0.3566662137352594175438313"},
        {"0.6610565777719639892234987", "-0.7503360586993132944627397"},
        {"0.2361022228104394065523493", "-0.9717282235192974088943263"},
        {"-0.2361022228104394065523493", "-0.9717282235192974088943263"},
        {"-0.6610565777719639892234987", "-0.7503360586993132944627397"},
        {"-0.9342318834099777427717181", "-0.3566662137352594175438313"},
        {"-0.9929068998449193496505630", "0.1188944415872806711288473"},
        {"-0.8236098025567870259889791", "0.5671568505557966820987654"},
        {"-0.4652113226503646256137798", "0.88519965277777777777777777777778"},
    };
    VertexList v =
        durer_polygon(FigureId::Thirteen19, ThirteenVariant::Hunrath);
    bool ok = match_table(v, table, R("1e-22"));
    Real closing = distance(v.vertices[6], v.vertices[7]);
    ok &= within(closing, R("0.47220444562087881310469856996"), R("1e-25"));
    ok &= within(thirteen_gon_report(ThirteenVariant::Half).thirteenth_edge,
                 R("0.2184"), R("5e-4"));
    ok &= within(thirteen_gon_report(ThirteenVariant::MinusOneThirtySecond)
                     .thirteenth_edge,
                 R("0.59617"), R("5e-4"));
    criterion(4, ok,
              "13-gon: hunrath vertices within 1e-22, closing side "
              "0.47220444562087881310469856996 within 1e-25, variant "
              "closings 0.2184 / 0.59617 within 5e-4");
}

//-----------------------------------------------------------------------------
// 5. 9-gon
//-----------------------------------------------------------------------------
void criterion5() {
    NineGonPoints p = nine_gon_points();
    Real s3 = sqrt(Real(3)), s35 = sqrt(Real(35)), s105 = sqrt(Real(105));
    bool ok = true;
    // closed forms: e = ((r3 - r35)/12, (1 + r105)/12), f its mirror,
    // p1 = (-r35/6, -1/6)
    ok &= within(p.e.x, (s3 - s35) / 12, eps(2));
    ok &= within(p.e.y, (1 + s105) / 12, eps(2));
    ok &= within(p.f.x, (s35 - s3) / 12, eps(2));
    ok &= within(p.f.y, (1 + s105) / 12, eps(2));
    ok &= within(p.p1.x, -s35 / 6, eps(2));
    ok &= within(p.p1.y, Real(-1) / 6, eps(2));
    // the scripted fish-bladder construction reproduces them numerically
    PointRegistry reg = execute(figure_script(FigureId::Nine18));
    ok &= distance(reg.point_at("v3"), p.e) < eps(8);
    ok &= distance(reg.point_at("v2"), p.f) < eps(8);
    ok &= distance(reg.point_at("v5"), p.p1) < eps(8);
    VertexList v = durer_polygon(FigureId::Nine18);
    for (const Point &q : v.vertices)
        ok &= within(sqrt(q.x * q.x + q.y * q.y), Real(1), eps(8));
    Real third = deg_to_rad(Real(120));
    for (const Point &q : v.vertices) {
        Point r = rotate(q, third, Point(Real(0), Real(0)));
        Real best = 10;
        for (const Point &w : v.vertices)
            best = std::min(best, distance(r, w));
        ok &= best < R("1e-40");
    }
    criterion(5, ok,
              "9-gon: e/f/p1 match their radical closed forms, vertices "
              "unit-norm, vertex set 120°-rotation symmetric within "
              "1e-40");
}

//-----------------------------------------------------------------------------
// 6. trisection pins
//-----------------------------------------------------------------------------
void criterion6() {
    Real arcsec = Real(1) / 3600;
    TrisectionTrace t100 = trisect(Real(100));
    TrisectionTrace t60 = trisect(Real(60));

    Real target100 = dms_to_degrees(DmsAngle{33, 17, R("0.40668")});
    bool theta100_ok = within(t100.theta_out, target100, R("0.001") * arcsec);
    bool h_ok = within(t100.H.x, R("0.5712240"), R("1e-6")) &&
                within(t100.H.y, R("0.820794"), R("1e-6"));
    bool x_ok = within(t100.X.x, R("0.4012520632830577"), R("1e-14")) &&
                within(t100.X.y, R("0.5379964791784059"), R("1e-14"));
    Real target60 = dms_to_degrees(DmsAngle{19, 59, R("59.00005")});
    bool theta60_ok = within(t60.theta_out, target60, R("0.001") * arcsec);

    note("theta_out(100°) = " + dms_string(t100.theta_out) +
         "   target 33° 17' 0.40668\"  -> " +
         (theta100_ok ? "ok" : "off by " +
                                   fmt(abs(t100.theta_out - target100) * 3600,
                                       10) +
                                   "\""));
    note("H(100°) = (" + fmt(t100.H.x) + ", " + fmt(t100.H.y) +
         ")   target (0.5712240, 0.820794) within 1e-6  -> " +
         (h_ok ? "ok" : "mismatch"));
    note("X(100°) = (" + fmt(t100.X.x) + ", " + fmt(t100.X.y) +
         ")   target (0.4012520632830577, 0.5379964791784059) within 1e-14  "
         "-> " +
         (x_ok ? "ok" : "mismatch"));
    note("theta_out(60°) = " + dms_string(t60.theta_out) +
         "   target 19° 59' 59.00005\"  -> " +
         (theta60_ok ? "ok" : "mismatch"));
    if (!(theta100_ok && h_ok && x_ok)) {
        note("the 100° targets correspond to a 20°-to-120° "
             "chord of 1.5307/1.52999; the chord between those marks is "
             "2 sin 50° = " +
             fmt(2 * sin(deg_to_rad(Real(50))), 6) +
             ", which yields the measured values above (error 44.277\" "
             "instead of 179.6\")");
    }
    criterion(6, theta100_ok && h_ok && x_ok && theta60_ok,
              "trisection: trisect(100°) pins (theta within 0.001\", H "
              "within 1e-6, X within 1e-14) and trisect(60°) = "
              "19°59'59.00005\" within 0.001\"");
}

//-----------------------------------------------------------------------------
// 7. richmond + gauss
//-----------------------------------------------------------------------------
void criterion7() {
    bool ok = true;
    VertexList pent = richmond_pentagon();
    Real fifth = 2 * pi() / 5;
    for (int k = 0; k < 5; ++k) {
        ok &= within(pent.vertices[k].x, cos(k * fifth), R("1e-40"));
        ok &= within(pent.vertices[k].y, sin(k * fifth), R("1e-40"));
    }
    SeventeenGonPoints marks = richmond_17gon_points();
    ok &= within(marks.B.x, R("0.086037682852227701929"), R("1e-18"));
    ok &= within(marks.C.x, R("-0.12198209123162133118"), R("1e-18"));
    VertexList g17 = richmond_17gon();
    Real step = 2 * pi() / 17;
    for (int k = 0; k < 17; ++k) {
        ok &= within(g17.vertices[k].x, cos(k * step), R("1e-40"));
        ok &= within(g17.vertices[k].y, sin(k * step), R("1e-40"));
    }
    ok &= within(gauss_cos_2pi_17(), cos(step), R("1e-44"));
    criterion(7, ok,
              "richmond: pentagon regular within 1e-40, 17-gon B/C within "
              "1e-18 and vertices within 1e-40, gauss radical within 1e-44 "
              "of cos(2pi/17)");
}

//-----------------------------------------------------------------------------
// 8. constructibility
//-----------------------------------------------------------------------------
long phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0)
                m /= p;
            result -= result / p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

void criterion8() {
    const bool want[] = {true,  true,  true,  true,  false, true,
                         false, true,  false, true,  false, false,
                         true,  true,  true};
    bool ok = true;
    for (long n = 3; n <= 17; ++n)
        ok &= is_constructible(n).constructible == want[n - 3];
    for (long n = 3; n <= 10000; ++n) {
        long f = phi(n);
        bool pow2 = (f & (f - 1)) == 0;
        ok &= is_constructible(n).constructible == pow2;
    }
    std::vector<long> greek;
    for (long n = 3; n <= 64; ++n) {
        ConstructibilityVerdict v = is_constructible(n);
        bool only_235 = v.constructible;
        for (long q : v.fermat_factors)
            if (q != 3 && q != 5)
                only_235 = false;
        if (only_235)
            greek.push_back(n);
    }
    ok &= greek == std::vector<long>({3, 4, 5, 6, 8, 10, 12, 15, 16, 20, 24,
                                      30, 32, 40, 48, 60, 64});
    criterion(8, ok,
              "constructibility: verdicts 3..17, totient oracle 3..10000, "
              "greek list {3..64} all exact");
}

//-----------------------------------------------------------------------------
// 9. property suites
//-----------------------------------------------------------------------------
void criterion9() {
    bool ok = true;

    // intersection residuals on a deterministic fan of configurations
    for (int i = 1; i <= 60; ++i) {
        Real a = Real(i) / 61;
        Circle c1(Point(a, -a / 2), 1 + a / 3);
        Circle c2(Point(-a / 3, a / 4), 1 + a / 7);
        auto [p, q] = intersect_circle_circle(c1, c2);
        for (const Point &v : {p, q}) {
            ok &= within(distance(v, c1.center), c1.radius, eps(8));
            ok &= within(distance(v, c2.center), c2.radius, eps(8));
        }
        Line l(Point(-2 + a, -1 + a / 5), Point(2 - a / 2, 1 - a / 3));
        auto [u, w] = intersect_line_circle(l, Circle(Point(Real(0), Real(0)),
                                                      1 + a / 2));
        ok &= within(distance(u, Point(Real(0), Real(0))), 1 + a / 2, eps(8));
        ok &= within(distance(w, Point(Real(0), Real(0))), 1 + a / 2, eps(8));
    }

    // macro expansion equivalence + parse/serialize round trip on the corpus
    for (int i = 0; i < kCorpusCount; ++i) {
        ConstructionScript s = parse(kCorpus[i].text);
        std::string canon = serialize(s);
        ok &= parse(canon) == s;
        ok &= serialize(parse(canon)) == canon;
        PointRegistry full = execute(s);
        PointRegistry flat = execute(expand_macros(s));
        for (const auto &[name, obj] : full.objects()) {
            if (const Point *pp = std::get_if<Point>(&obj))
                ok &= distance(flat.point_at(name), *pp) < eps(8);
        }
    }

    // script/closed-form agreement for all fifteen figures
    for (FigureId fig : all_figures()) {
        VertexList scripted = vertices_from_script(fig);
        VertexList closed = durer_polygon(fig);
        ok &= scripted.vertices.size() == closed.vertices.size();
        for (std::size_t i = 0; i < closed.vertices.size(); ++i)
            ok &= distance(scripted.vertices[i], closed.vertices[i]) < eps(8);
    }

    // doubling subset laws
    auto subset = [&](FigureId small_fig, FigureId big_fig) {
        VertexList s = durer_polygon(small_fig);
        VertexList b = durer_polygon(big_fig);
        for (int i = 0; i < s.n; ++i)
            ok &= distance(b.vertices[2 * i], s.vertices[i]) < eps(8);
    };
    subset(FigureId::Heptagon11, FigureId::Fourteen12);
    subset(FigureId::Fourteen12, FigureId::TwentyEight12);
    subset(FigureId::Octagon14, FigureId::Sixteen14);

    criterion(9, ok,
              "properties: intersection residuals, macro-expansion "
              "equivalence, script/closed-form agreement for all 15 figures, "
              "doubling laws 7->14->28 and 8->16, DSL round-trip");
}

//-----------------------------------------------------------------------------
// 10. determinism
//-----------------------------------------------------------------------------
void criterion10() {
    bool ok = true;
    for (FigureId fig : all_figures()) {
        std::string name = figure_name(fig);
        for (const std::vector<std::string> &args :
             {std::vector<std::string>{"build", name},
              std::vector<std::string>{"analyze", name},
              std::vector<std::string>{"render", name}}) {
            CliResult first = run_cli(args);
            CliResult second = run_cli(args);
            ok &= first.exit_code == 0 && second.exit_code == 0;
            ok &= first.output == second.output;
        }
    }
    criterion(10, ok,
              "determinism: build/analyze/render byte-identical across two "
              "runs for every figure");
}

} // namespace

int main() {
    set_precision(50);
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (g_failed == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", g_failed);
    return g_failed;
}
