#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <sstream>

#include "doctest.h"
#include "malp/io.hpp"
#include "malp/parse.hpp"
#include "malp/randgen.hpp"

using namespace malp;

namespace {

RationalFunction rf(const Chart& c, const std::string& src) {
    return parse_scalar(c.names(), src);
}

int form_error_line(const std::string& text) {
    std::istringstream in(text);
    try {
        read_exterior_form(in);
    } catch (const FileParseError& e) {
        return e.line;
    }
    return -1;
}

int document_error_line(const std::string& text) {
    std::istringstream in(text);
    try {
        read_system_document(in);
    } catch (const FileParseError& e) {
        return e.line;
    }
    return -1;
}

ExteriorForm reread(const ExteriorForm& w) {
    std::ostringstream out;
    write_exterior_form(out, w);
    std::istringstream in(out.str());
    return read_exterior_form(in);
}

MASystem reread(const MASystem& sys) {
    std::ostringstream out;
    write_system(out, sys);
    std::istringstream in(out.str());
    return system_from_document(read_system_document(in));
}

bool systems_equal(const MASystem& a, const MASystem& b) {
    return a.chart == b.chart && a.theta == b.theta && a.omega == b.omega &&
           a.frame1 == b.frame1 && a.frame2 == b.frame2 && a.constraints == b.constraints &&
           a.squared_coefficient == b.squared_coefficient;
}

}  // namespace

TEST_CASE("constant-coefficient form files round-trip exactly") {
    std::mt19937_64 rng(11);
    for (auto [dim, degree] : std::vector<std::pair<int, int>>{{6, 3}, {4, 2}, {5, 1}, {3, 3}, {4, 0}}) {
        for (int rep = 0; rep < 5; ++rep) {
            ExteriorForm w(dim, degree);
            for (const auto& idx : index_tuples(dim, degree))
                w.set(idx, random_rational(rng));
            ExteriorForm back = reread(w);
            CHECK(back == w);
        }
    }

    /* comments and blank lines are skipped but counted */
    std::istringstream in("# header\n\ndim 4\ndegree 2\nterm 1/2 : 1 3\nterm -2 : 2 4\n");
    ExteriorForm w = read_exterior_form(in);
    CHECK(w.coefficient({1, 3}) == Rational(1, 2));
    CHECK(w.coefficient({2, 4}) == Rational(-2));
}

TEST_CASE("form file errors carry the offending line number") {
    CHECK(form_error_line("degree 2\n") == 1);
    CHECK(form_error_line("dim 4\nterm 1 : 1 2\n") == 2);
    CHECK(form_error_line("# c\ndim 4\ndegree 2\nterm 1 : 2 1\n") == 4);
    CHECK(form_error_line("dim 4\ndegree 2\nterm 1 : 1 5\n") == 3);
    CHECK(form_error_line("dim 4\ndegree 2\nterm 1 : 1\n") == 3);
    CHECK(form_error_line("dim 4\ndegree 2\nterm 1 : 1 2\nterm 2 : 1 2\n") == 4);
    CHECK(form_error_line("dim 4\ndegree 2\nwedge 1 : 1 2\n") == 3);
    CHECK(form_error_line("dim 4\ndim 4\n") == 2);
    CHECK(form_error_line("dim 4\ndegree 5\n") == 2);
    CHECK(form_error_line("dim 4\ndegree 2\nterm x : 1 2\n") == 3);
    /* missing sections are reported at end of input */
    CHECK(form_error_line("# only a comment\n") == 1);
}

TEST_CASE("subspace pair files round-trip and validate") {
    Subspace a{4, {{Rational(1), Rational(0), Rational(0), Rational(0)},
                   {Rational(0), Rational(1), Rational(0), Rational(0)}}};
    Subspace b{4, {{Rational(0), Rational(0), Rational(1), Rational(1, 2)},
                   {Rational(0), Rational(0), Rational(-1), Rational(1)}}};
    std::ostringstream out;
    write_subspace_pair(out, a, b);
    std::istringstream in(out.str());
    auto [a2, b2] = read_subspace_pair(in);
    CHECK(a2.ambient == 4);
    CHECK(a2.basis == a.basis);
    CHECK(b2.basis == b.basis);

    auto pair_error = [](const std::string& text) {
        std::istringstream src(text);
        try {
            read_subspace_pair(src);
        } catch (const FileParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(pair_error("dim 4\nsubspace\nvector 1 0 0 0\n") > 0);
    CHECK(pair_error("dim 4\nvector 1 0 0 0\n") == 2);
    CHECK(pair_error("dim 4\nsubspace\nvector 1 0\nsubspace\n") == 3);
}

TEST_CASE("form expressions parse the documented grammar") {
    Chart chart = standard_contact_chart(3);

    DiffForm theta = parse_form_expr(chart, "dz - p1 dx1 - p2 dx2 - p3 dx3");
    CHECK(theta == standard_theta(chart));

    DiffForm omega = parse_form_expr(chart, "(2) dx1^dx2^dx3 + (-1) dp1^dp2^dp3");
    DiffForm expected(chart, 3);
    expected.set_term({1, 2, 3}, chart.constant(Rational(2)));
    expected.set_term({5, 6, 7}, chart.constant(Rational(-1)));
    CHECK(omega == expected);

    /* coefficient shapes: products, powers, parenthesized sums, quotients */
    CHECK(parse_form_expr(chart, "2*x1 dx1").coefficient({1}) == rf(chart, "2*x1"));
    CHECK(parse_form_expr(chart, "(1 + x1^2) dz").coefficient({4}) == rf(chart, "1 + x1^2"));
    CHECK(parse_form_expr(chart, "(1:x1) dp2").coefficient({6}) == rf(chart, "1:x1"));
    CHECK(parse_form_expr(chart, "((x1) : (x1^2)) dp2").coefficient({6}) == rf(chart, "1:x1"));

    /* permutation sign and leading minus */
    CHECK(parse_form_expr(chart, "dx2^dx1") == parse_form_expr(chart, "(-1) dx1^dx2"));
    CHECK(parse_form_expr(chart, "- dx1 + dx2").coefficient({1}) == chart.constant(Rational(-1)));

    /* degree-0 scalars and the zero form */
    DiffForm scalar = parse_form_expr(chart, "3*z");
    CHECK(scalar.degree() == 0);
    CHECK(scalar.coefficient({}) == rf(chart, "3*z"));
    CHECK(parse_form_expr(chart, "0").is_zero());

    /* cancellation across terms */
    CHECK(parse_form_expr(chart, "dx1 - dx1").is_zero());
}

TEST_CASE("form expression output of str re-parses to an equal value") {
    Chart chart = standard_contact_chart(2);
    std::vector<DiffForm> samples;
    samples.push_back(standard_theta(chart));
    samples.push_back(exterior_d(standard_theta(chart)));
    DiffForm mixed(chart, 2);
    mixed.set_term({1, 2}, rf(chart, "(x1 - p2) : (1 + z^2)"));
    mixed.set_term({3, 5}, rf(chart, "0 - 5/3"));
    samples.push_back(mixed);
    samples.push_back(DiffForm::function(chart, rf(chart, "(x1^2 + 2) : (p1)")));
    for (const DiffForm& w : samples) CHECK(parse_form_expr(chart, w.str()) == w);
}

TEST_CASE("form expression rejections") {
    Chart chart = standard_contact_chart(2);
    CHECK_THROWS(parse_form_expr(chart, "dx1^dx1"));
    CHECK_THROWS(parse_form_expr(chart, "dx1 + dx1^dx2"));
    CHECK_THROWS(parse_form_expr(chart, "dx1 )"));
    CHECK_THROWS(parse_form_expr(chart, "dx1^"));
    CHECK_THROWS(parse_form_expr(chart, "dx1^2"));
    CHECK_THROWS(parse_form_expr(chart, "dq1 + dx1"));
    CHECK_THROWS(parse_form_expr(chart, "q dx1"));
    CHECK_THROWS(parse_form_expr(chart, ""));
}

TEST_CASE("system documents parse charts, maps, frames, and via forms") {
    std::string text =
        "# flat fibration input\n"
        "chart x1 x2 x3 z p1 p2 p3\n"
        "oneform theta: dz - p1 dx1 - p2 dx2 - p3 dx3\n"
        "map pi1: x1 <- x1; x2 <- x2; x3 <- x3; z <- z\n"
        "map pi2: zt <- x1*p1 + x2*p2 + x3*p3 - z; p1 <- p1; p2 <- p2; p3 <- p3\n"
        "form Omega1 via pi1: (2) dz^dx1^dx2^dx3\n"
        "form Omega2 via pi2: (-1) dzt^dp1^dp2^dp3\n";
    std::istringstream in(text);
    SystemDocument doc = read_system_document(in);

    Chart chart = standard_contact_chart(3);
    CHECK(doc.chart == chart);
    REQUIRE(doc.form("theta") != nullptr);
    CHECK(*doc.form("theta") == standard_theta(chart));

    const PointMap* pi2 = doc.map("pi2");
    REQUIRE(pi2 != nullptr);
    CHECK(pi2->target().names() == std::vector<std::string>{"zt", "p1", "p2", "p3"});
    CHECK(pi2->component("zt") == rf(chart, "x1*p1 + x2*p2 + x3*p3 - z"));

    const DiffForm* omega1 = doc.form("Omega1");
    REQUIRE(omega1 != nullptr);
    CHECK(omega1->chart() == doc.map("pi1")->target());
    CHECK(omega1->degree() == 4);

    /* the declarations assemble to the split generator */
    MASystem sys = construct_ma(*omega1, *doc.form("Omega2"), *doc.form("theta"),
                                *doc.map("pi1"), *pi2);
    DiffForm expected(chart, 3);
    expected.set_term({1, 2, 3}, chart.constant(Rational(2)));
    expected.set_term({5, 6, 7}, chart.constant(Rational(-1)));
    CHECK(sys.omega == expected);
}

TEST_CASE("system files round-trip the model systems exactly") {
    CHECK(systems_equal(reread(model_system(ModelKind::Flat, Rational(2), 3)),
                        model_system(ModelKind::Flat, Rational(2), 3)));
    CHECK(systems_equal(reread(model_system(ModelKind::Euclidean, Rational(-1), 2)),
                        model_system(ModelKind::Euclidean, Rational(-1), 2)));
    CHECK(systems_equal(reread(model_system(ModelKind::Spherical, Rational(1, 3), 2)),
                        model_system(ModelKind::Spherical, Rational(1, 3), 2)));
    CHECK(systems_equal(reread(model_system(ModelKind::Hyperbolic, Rational(5), 2)),
                        model_system(ModelKind::Hyperbolic, Rational(5), 2)));
    /* squared-coefficient flag survives */
    CHECK(systems_equal(reread(euclidean_chart_reduce(3, Rational(2))),
                        euclidean_chart_reduce(3, Rational(2))));
    CHECK(systems_equal(reread(euclidean_chart_reduce(2, Rational(2))),
                        euclidean_chart_reduce(2, Rational(2))));

    /* writer output is byte-stable across a round trip */
    std::ostringstream first;
    write_system(first, model_system(ModelKind::Euclidean, Rational(3), 3));
    std::ostringstream second;
    write_system(second, reread(model_system(ModelKind::Euclidean, Rational(3), 3)));
    CHECK(first.str() == second.str());
}

TEST_CASE("system document rejections carry line numbers") {
    CHECK(document_error_line("oneform theta: dz\n") == 1);
    CHECK(document_error_line("chart x y\nchart x y\n") == 2);
    CHECK(document_error_line("chart x y\nform w: dx^dx\n") == 2);
    CHECK(document_error_line("chart x y\noneform t: dx^dy\n") == 2);
    CHECK(document_error_line("chart x y\nform w via pi: dx\n") == 2);
    CHECK(document_error_line("chart x y\nmap pi: u <- x; u <- y\n") == 2);
    CHECK(document_error_line("chart x y\nmap pi: u x\n") == 2);
    CHECK(document_error_line("chart x y\nframe1 v: q <- 1\n") == 2);
    CHECK(document_error_line("chart x y\nwedge w: dx\n") == 2);
    CHECK(document_error_line("chart x y\nform w: dx\nform w: dy\n") == 3);
    CHECK(document_error_line("chart x dx\n") == 1);
    CHECK(document_error_line("chart x y\nsquared_coefficient yes\n") == 2);
    CHECK(document_error_line("chart x y\nconstraint x + q\n") == 2);
    CHECK(document_error_line("# empty\n") == 1);
}

TEST_CASE("system_from_document requires named generators") {
    std::istringstream no_omega("chart x1 z p1\noneform theta: dz - p1 dx1\n");
    SystemDocument doc = read_system_document(no_omega);
    CHECK_THROWS_AS(system_from_document(doc), std::invalid_argument);

    std::istringstream no_theta("chart x1 z p1\nform omega: dx1\n");
    SystemDocument doc2 = read_system_document(no_theta);
    CHECK_THROWS_AS(system_from_document(doc2), std::invalid_argument);

    /* theta declared as a general form must still be degree 1 */
    std::istringstream bad("chart x1 z p1\nform theta: dz^dx1\nform omega: dx1\n");
    SystemDocument doc3 = read_system_document(bad);
    CHECK_THROWS_AS(system_from_document(doc3), std::invalid_argument);
}
