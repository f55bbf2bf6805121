#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algspec/cli.hpp"

using namespace algspec;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor F5 = FieldDescriptor::prime_field(5);

std::string value_of(const Report& rep, const std::string& key) {
    for (const auto& [k, v] : rep.fields)
        if (k == key) return v;
    return "<missing>";
}

}  // namespace

TEST_CASE("parse_input builds a validated request") {
    Request r = parse_input("field: Q\nmatrix a: [[1, 1], [-1, 1]]\ncmd: spectrum\n");
    CHECK(r.command == "spectrum");
    CHECK(r.field == Q);
    CHECK(r.matrices.at("a") == mat_from_ints(Q, {{1, 1}, {-1, 1}}));
}

TEST_CASE("entries normalize into the declared field") {
    Request r = parse_input("field: Fp 5\nmatrix a: [[7, 3 mod 5], [1, 0]]\ncmd: spectrum\n");
    CHECK(r.matrices.at("a").at(0, 0) == FieldElem::from_int(F5, 2));
    CHECK(r.matrices.at("a").at(0, 1) == FieldElem::from_int(F5, 3));
}

TEST_CASE("semicolon matrix rows parse like bracketed ones") {
    CHECK(parse_matrix(Q, "1, 1/2; -1, 0") == parse_matrix(Q, "[[1, 1/2], [-1, 0]]"));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_WITH_AS(parse_input("field: Q\nmatrix a: [[1, 1], [1]\ncmd: spectrum\n"),
                         doctest::Contains("line 2"), Error);
    CHECK_THROWS_AS(parse_input("field: Q\ncmd: spectrum\n"), Error);  // missing matrix
    CHECK_THROWS_AS(parse_input("cmd: spectrum\nmatrix a: [[1]]\n"), Error);  // no field
    CHECK_THROWS_AS(
        parse_input("field: Q\ncmd: pencil-transform\npencil P: [[[1]]]\nmoebius g: 1, 1, 1, 1\n"),
        Error);  // Moebius determinant != 1
}

TEST_CASE("spectrum report matches the counterexample") {
    Report rep = run(parse_input("field: Q\nmatrix a: [[1, 1], [-1, 1]]\ncmd: spectrum\n"));
    CHECK(rep.exit_code == 0);
    CHECK(value_of(rep, "minpoly") == "z^2 - 2*z + 2");
    CHECK(value_of(rep, "roots") == "{}");
    CHECK(value_of(rep, "complete") == "false");
}

TEST_CASE("sylvester run certifies its solution") {
    Report rep = run(parse_input(
        "field: Q\nmatrix a: [[1, 0], [0, 2]]\nmatrix b: [[3]]\nmatrix c: [[1], [1]]\n"
        "cmd: sylvester\n"));
    CHECK(rep.exit_code == 0);
    CHECK(value_of(rep, "solution") == "[[-1/2], [-1]]");
    CHECK(value_of(rep, "certified") != "<missing>");
}

TEST_CASE("pencil-factor reports non-existence with exit code 4") {
    Report rep = run(parse_input(
        "field: Q\n"
        "pencil P: [[[0, -1], [0, 0]], [[0, 0], [0, 0]], [[1, 0], [0, 1]]]\n"
        "cmd: pencil-factor\n"));
    CHECK(rep.exit_code == 4);
    CHECK(value_of(rep, "result") == "cannot-factor");
    CHECK(value_of(rep, "residual") == "z^4");
}

TEST_CASE("byte determinism: identical input, identical output") {
    std::string doc = "field: Fp 5\nmatrix a: [[1, 2], [3, 4]]\ncmd: spectrum\n";
    Report r1 = run(parse_input(doc));
    Report r2 = run(parse_input(doc));
    CHECK(r1.machine() == r2.machine());
    CHECK(r1.text() == r2.text());
}

TEST_CASE("emitted values reparse to equal objects") {
    Report rep = run(parse_input(
        "field: Q\nmatrix a: [[1, 1], [-1, 1]]\ncmd: invert\n"));
    Mat inv = parse_matrix(Q, value_of(rep, "inverse"));
    CHECK(inv * mat_from_ints(Q, {{1, 1}, {-1, 1}}) == Mat::identity(Q, 2));

    Poly minpoly = parse_poly(Q, "z", value_of(rep, "minpoly"));
    CHECK(minpoly == Poly::from_ints(Q, {2, -2, 1}));

    Report rq = run(parse_input("field: Q(t)\nscalar f: (t^2+2*t+1)/t^2\ncmd: rf-sqrt\n"));
    FieldDescriptor qt = FieldDescriptor::rational_functions(Q, "t");
    FieldElem g = parse_scalar(qt, value_of(rq, "sqrt"));
    CHECK(g * g == parse_scalar(qt, "(t^2+2*t+1)/t^2"));
}

TEST_CASE("certified lines correspond to executed checks") {
    std::uint64_t before = certification_count();
    Report rep = run(parse_input(
        "field: Q\nmatrix a: [[1, 0], [0, 2]]\nmatrix b: [[3]]\nmatrix c: [[1], [1]]\n"
        "cmd: sylvester\n"));
    std::uint64_t delta = certification_count() - before;
    CHECK(std::to_string(delta) == value_of(rep, "certifications"));
    CHECK(delta > 0);
}

TEST_CASE("exit code classification") {
    CHECK(exit_code_for(Errc::ParseError) == 2);
    CHECK(exit_code_for(Errc::InvariantViolation) == 2);
    CHECK(exit_code_for(Errc::NotSquare) == 3);
    CHECK(exit_code_for(Errc::NotSpectrallyDisjoint) == 3);
    CHECK(exit_code_for(Errc::NotFound) == 4);
    CHECK(exit_code_for(Errc::InternalContradiction) == 70);
}

TEST_CASE("jordan-dim and quad-check flows") {
    Report rep = run(parse_input(
        "field: Q\nmatrix a: [[0, 0], [0, 0]]\nscalar lambda: 0\nk: 1\ncmd: jordan-dim\n"));
    CHECK(value_of(rep, "dimension") == "4");

    Report neq = run(parse_input(
        "field: Q\n"
        "matrix u: [[-1, 0], [0, 0]]\nmatrix v: [[0, 0], [0, -1]]\nmatrix w: [[-2, 0], [0, -2]]\n"
        "matrix u2: [[-2, 0], [0, -2]]\nmatrix v2: [[1, 0], [0, 1]]\nmatrix w2: [[-2, 0], [0, -2]]\n"
        "cmd: quad-check\n"));
    CHECK(neq.exit_code == 4);
    CHECK(value_of(neq, "equivalent") == "false");
    CHECK(value_of(neq, "witness") != "<missing>");
}
