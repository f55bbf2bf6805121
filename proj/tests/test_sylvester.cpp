#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algspec/io.hpp"
#include "algspec/sylvester.hpp"
#include "support/random_values.hpp"

using namespace algspec;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor F5 = FieldDescriptor::prime_field(5);
const FieldDescriptor F7 = FieldDescriptor::prime_field(7);

// Independent oracle: enumerate every candidate x over a small prime field.
std::optional<Mat> brute_force_sylvester(const Mat& a, const Mat& b, const Mat& c) {
    const FieldDescriptor& d = a.descriptor();
    long p = d.modulus();
    int cells = a.rows() * b.rows();
    long total = 1;
    for (int i = 0; i < cells; ++i) total *= p;
    for (long code = 0; code < total; ++code) {
        Mat x = Mat::zeros(d, a.rows(), b.rows());
        long idx = code;
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < b.rows(); ++j) {
                x.at(i, j) = FieldElem::from_int(d, idx % p);
                idx /= p;
            }
        if (a * x - x * b == c) return x;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("spectral_disjointness examples") {
    // a = 0 (minpoly z), b = I (minpoly z - 1): f = 1 - z
    Mat zero1 = Mat::zeros(Q, 1, 1);
    Mat one1 = Mat::identity(Q, 1);
    auto r = spectral_disjointness(zero1, one1);
    REQUIRE(std::holds_alternative<DisjointnessCertificate>(r));
    const DisjointnessCertificate& cert = std::get<DisjointnessCertificate>(r);
    CHECK(cert.f == Poly::from_ints(Q, {1, -1}));
    CHECK(cert.p * cert.h + cert.q * cert.k == Poly::one(Q));

    // a = b: the gcd is the whole minimum polynomial
    Mat a = mat_from_ints(Q, {{1, 1}, {0, 1}});
    auto same = spectral_disjointness(a, a);
    REQUIRE(std::holds_alternative<NotDisjoint>(same));
    CHECK(std::get<NotDisjoint>(same).gcd == min_poly(a).poly);

    // disjoint diagonal spectra
    auto diag = spectral_disjointness(mat_from_ints(Q, {{1, 0}, {0, 2}}),
                                      mat_from_ints(Q, {{3, 0}, {0, 4}}));
    CHECK(std::holds_alternative<DisjointnessCertificate>(diag));
}

TEST_CASE("bezout certificate closes the loop on random disjoint pairs") {
    std::mt19937_64 rng(71);
    int done = 0;
    for (int i = 0; i < 60 && done < 20; ++i) {
        Mat a = testgen::random_matrix(rng, F7, 2, 2);
        Mat b = testgen::random_matrix(rng, F7, 2, 2);
        auto r = spectral_disjointness(a, b);
        if (!std::holds_alternative<DisjointnessCertificate>(r)) continue;
        const DisjointnessCertificate& cert = std::get<DisjointnessCertificate>(r);
        CHECK(matrix_poly_eval(cert.f, a) == Mat::identity(F7, 2));
        CHECK(matrix_poly_eval(cert.f, b).is_zero());
        ++done;
    }
    CHECK(done == 20);
}

TEST_CASE("solve_sylvester examples") {
    // a = 0, b = I: -x = c
    Mat zero2 = Mat::zeros(Q, 2, 2);
    Mat c = mat_from_ints(Q, {{1, 2}, {3, 4}});
    CHECK(solve_sylvester(zero2, Mat::identity(Q, 2), c) == -c);

    // rectangular: a = diag(1, 2), b = (3): x_i = c_i / (a_i - 3)
    Mat a = mat_from_ints(Q, {{1, 0}, {0, 2}});
    Mat b3 = mat_from_ints(Q, {{3}});
    Mat rhs = mat_from_ints(Q, {{1}, {1}});
    Mat x = solve_sylvester(a, b3, rhs);
    CHECK(x == parse_matrix(Q, "[[-1/2], [-1]]"));

    CHECK_THROWS_AS(solve_sylvester(a, a, zero2), Error);
}

TEST_CASE("solve_sylvester matches the brute-force oracle over GF(5)") {
    std::mt19937_64 rng(72);
    int done = 0;
    for (int i = 0; i < 80 && done < 15; ++i) {
        Mat a = testgen::random_matrix(rng, F5, 2, 2);
        Mat b = testgen::random_matrix(rng, F5, 2, 2);
        if (!std::holds_alternative<DisjointnessCertificate>(spectral_disjointness(a, b)))
            continue;
        Mat c = testgen::random_matrix(rng, F5, 2, 2);
        Mat x = solve_sylvester(a, b, c);
        auto oracle = brute_force_sylvester(a, b, c);
        REQUIRE(oracle.has_value());
        CHECK(x == *oracle);
        ++done;
    }
    CHECK(done == 15);
}

TEST_CASE("solution agrees with the dense linear-system oracle") {
    std::mt19937_64 rng(73);
    int done = 0;
    for (int i = 0; i < 60 && done < 15; ++i) {
        Mat a = testgen::random_matrix(rng, Q, 2, 2, 2);
        Mat b = testgen::random_matrix(rng, Q, 3, 3, 2);
        if (!std::holds_alternative<DisjointnessCertificate>(spectral_disjointness(a, b)))
            continue;
        Mat c = testgen::random_matrix(rng, Q, 2, 3, 2);
        Mat x = solve_sylvester(a, b, c);
        Mat op = left_mult_operator(a, 3) - right_mult_operator(b, 2);
        auto sol = solve_linear(op, flatten(c));
        REQUIRE(sol.has_value());
        CHECK(x == unflatten(Q, 2, 3, *sol));
        ++done;
    }
    CHECK(done == 15);
}

TEST_CASE("uniqueness matches disjointness on sampled instances") {
    std::mt19937_64 rng(74);
    for (int i = 0; i < 30; ++i) {
        Mat a = testgen::random_matrix(rng, F5, 2, 2);
        Mat b = testgen::random_matrix(rng, F5, 2, 2);
        bool disjoint =
            std::holds_alternative<DisjointnessCertificate>(spectral_disjointness(a, b));
        Mat op = left_mult_operator(a, 2) - right_mult_operator(b, 2);
        CHECK(disjoint == kernel_basis(op).empty());
    }
}

TEST_CASE("sylvester_ideal_membership examples") {
    FieldElem s0 = FieldElem::from_int(Q, 2);
    PolyMat a = parse_poly_matrix(Q, "t", "[[0, 1], [0, 0]]");   // nilpotent, minpoly z^2
    PolyMat b = parse_poly_matrix(Q, "t", "[[1, 0], [0, 1]]");   // identity, minpoly z - 1

    // c = (t - s0) c': x vanishes at s0
    PolyMat c1 = parse_poly_matrix(Q, "t", "[[t - 2, 2*t - 4], [3*t - 6, 0]]");
    IdealMembershipVerdict v1 = sylvester_ideal_membership(a, b, c1, {s0});
    CHECK(v1.c_in_ideal);
    CHECK(v1.x_in_ideal);
    CHECK(v1.equivalent);

    // c(s0) != 0: x(s0) != 0
    PolyMat c2 = parse_poly_matrix(Q, "t", "[[t, 0], [0, 1]]");
    IdealMembershipVerdict v2 = sylvester_ideal_membership(a, b, c2, {s0});
    CHECK_FALSE(v2.c_in_ideal);
    CHECK_FALSE(v2.x_in_ideal);
    CHECK(v2.equivalent);

    // c = 0: x = 0 by uniqueness
    PolyMat c3 = PolyMat::zeros(Q, 2, 2);
    IdealMembershipVerdict v3 = sylvester_ideal_membership(a, b, c3, {s0});
    CHECK(v3.x.is_zero());
    CHECK(v3.equivalent);
}

TEST_CASE("commuting_difference_inverse examples") {
    // a = 2I, b = I: inverse of I is I
    Mat id = Mat::identity(Q, 2);
    Mat two = scalar_matrix(Q, 2, FieldElem::from_int(Q, 2));
    CHECK(commuting_difference_inverse(two, id) == id);

    // diagonal: inverse of diag(-2, -1)
    Mat a = mat_from_ints(Q, {{1, 0}, {0, 2}});
    Mat b = mat_from_ints(Q, {{3, 0}, {0, 3}});
    CHECK(commuting_difference_inverse(a, b) == parse_matrix(Q, "[[-1/2, 0], [0, -1]]"));

    // simultaneously triangular commuting pair over GF(7)
    Mat t1 = mat_from_ints(F7, {{1, 1}, {0, 1}});
    Mat t2 = mat_from_ints(F7, {{3, 5}, {0, 3}});
    REQUIRE(t1 * t2 == t2 * t1);
    Mat g = commuting_difference_inverse(t1, t2);
    CHECK((t1 - t2) * g == Mat::identity(F7, 2));

    CHECK_THROWS_AS(
        commuting_difference_inverse(mat_from_ints(Q, {{0, 1}, {0, 0}}),
                                     mat_from_ints(Q, {{1, 0}, {0, 2}})),
        Error);  // does not commute
}

TEST_CASE("trace_obstruction examples") {
    std::mt19937_64 rng(75);
    // commutators pass every constraint
    for (int i = 0; i < 20; ++i) {
        Mat a = testgen::random_matrix(rng, Q, 3, 3, 3);
        Mat x = testgen::random_matrix(rng, Q, 3, 3, 3);
        Mat c = a * x - x * a;
        CHECK(trace_obstruction(a, c).all_zero);
    }

    // a = I, c = I: tr(c) = n != 0
    TraceObstruction t1 = trace_obstruction(Mat::identity(Q, 2), Mat::identity(Q, 2));
    CHECK_FALSE(t1.all_zero);
    CHECK(t1.traces[0].second == FieldElem::from_int(Q, 2));

    // a = J2, c = E21: obstructed at m = 1
    TraceObstruction t2 = trace_obstruction(mat_from_ints(Q, {{0, 1}, {0, 0}}),
                                            mat_from_ints(Q, {{0, 0}, {1, 0}}));
    CHECK(t2.traces[0].second.is_zero());
    CHECK(t2.traces[1].second.is_one());
    CHECK_FALSE(t2.all_zero);
}

TEST_CASE("trace is a trace: tr(ab) = tr(ba)") {
    std::mt19937_64 rng(76);
    for (int i = 0; i < 20; ++i) {
        Mat a = testgen::random_matrix(rng, Q, 3, 3, 3);
        Mat b = testgen::random_matrix(rng, Q, 3, 3, 3);
        CHECK((a * b).trace() == (b * a).trace());
    }
}

TEST_CASE("commutant_dimension examples") {
    CHECK(commutant_dimension(Mat::identity(Q, 2)).solvable_dim == 0);

    // elementary Jordan blocks: commutant = upper triangular Toeplitz
    for (int n : {2, 3, 4}) {
        Mat j = Mat::zeros(Q, n, n);
        for (int i = 0; i + 1 < n; ++i) j.at(i, i + 1) = FieldElem::one(Q);
        for (int i = 0; i < n; ++i) j.at(i, i) = FieldElem::from_int(Q, 5);
        CommutantDimensions d = commutant_dimension(j);
        CHECK(d.commutant_dim == n);
        CHECK(d.solvable_dim == n * n - n);
    }

    CommutantDimensions dd = commutant_dimension(mat_from_ints(Q, {{1, 0}, {0, 2}}));
    CHECK(dd.commutant_dim == 2);
    CHECK(dd.solvable_dim == 2);
}

TEST_CASE("quaternion_minpoly examples") {
    Quaternion i = Quaternion::from_ints(Q, 0, 1, 0, 0);
    CHECK(quaternion_minpoly(i) == Poly::from_ints(Q, {1, 0, 1}));

    Quaternion real3 = Quaternion::from_ints(Q, 3, 0, 0, 0);
    CHECK(quaternion_minpoly(real3) == Poly::from_ints(Q, {-3, 1}));

    Quaternion full = Quaternion::from_ints(Q, 1, 1, 1, 1);
    CHECK(quaternion_minpoly(full) == Poly::from_ints(Q, {4, -2, 1}));

    CHECK_THROWS_AS(quaternion_minpoly(Quaternion::from_ints(Q, 0, 0, 0, 0)), Error);
}

TEST_CASE("quaternion multiplication table sanity") {
    Quaternion i = Quaternion::from_ints(Q, 0, 1, 0, 0);
    Quaternion j = Quaternion::from_ints(Q, 0, 0, 1, 0);
    Quaternion k = Quaternion::from_ints(Q, 0, 0, 0, 1);
    Quaternion minus_one = Quaternion::from_ints(Q, -1, 0, 0, 0);
    CHECK(i * i == minus_one);
    CHECK(j * j == minus_one);
    CHECK(k * k == minus_one);
    CHECK(i * j == k);
    CHECK(j * k == i);
    CHECK(k * i == j);
    CHECK(j * i == Quaternion::from_ints(Q, 0, 0, 0, -1));

    // the regular representations commute with each other
    std::mt19937_64 rng(77);
    for (int t = 0; t < 10; ++t) {
        Quaternion a{testgen::random_scalar(rng, Q), testgen::random_scalar(rng, Q),
                     testgen::random_scalar(rng, Q), testgen::random_scalar(rng, Q)};
        Quaternion b{testgen::random_scalar(rng, Q), testgen::random_scalar(rng, Q),
                     testgen::random_scalar(rng, Q), testgen::random_scalar(rng, Q)};
        CHECK(quaternion_left_rep(a) * quaternion_right_rep(b) ==
              quaternion_right_rep(b) * quaternion_left_rep(a));
        CHECK(quaternion_left_rep(a * b) == quaternion_left_rep(a) * quaternion_left_rep(b));
    }
}

TEST_CASE("quaternion_sylvester examples") {
    Quaternion i = Quaternion::from_ints(Q, 0, 1, 0, 0);
    Quaternion two_i = Quaternion::from_ints(Q, 0, 2, 0, 0);
    Quaternion one = Quaternion::from_ints(Q, 1, 0, 0, 0);

    // norms 1 vs 4 differ: solvable
    auto x = quaternion_sylvester(i, two_i, one);
    REQUIRE(x.has_value());
    CHECK(i * *x - *x * two_i == one);

    // a = b = i: criterion fails, singular system
    CHECK_FALSE(quaternion_sylvester(i, i, one).has_value());

    // a = 1, b = 0: x = c
    Quaternion c = Quaternion::from_ints(Q, 2, -1, 3, 5);
    auto x2 = quaternion_sylvester(one, Quaternion::from_ints(Q, 0, 0, 0, 0), c);
    REQUIRE(x2.has_value());
    CHECK(*x2 == c);
}

TEST_CASE("quaternion criterion matches 4x4 nonsingularity on a grid sample") {
    std::mt19937_64 rng(78);
    std::uniform_int_distribution<long> coin(-1, 1);
    for (int t = 0; t < 120; ++t) {
        Quaternion a = Quaternion::from_ints(Q, coin(rng), coin(rng), coin(rng), coin(rng));
        Quaternion b = Quaternion::from_ints(Q, coin(rng), coin(rng), coin(rng), coin(rng));
        FieldElem na = a.a1 * a.a1 + a.a2 * a.a2 + a.a3 * a.a3;
        FieldElem nb = b.a1 * b.a1 + b.a2 * b.a2 + b.a3 * b.a3;
        bool criterion = (a.a0 != b.a0) || (na != nb);
        Mat op = quaternion_left_rep(a) - quaternion_right_rep(b);
        CHECK(criterion == !det(op).is_zero());
    }
}

TEST_CASE("minpoly_transfer_check examples") {
    CHECK(minpoly_transfer_check(mat_from_ints(Q, {{0, 1}, {0, 0}})));
    CHECK(minpoly_transfer_check(Mat::identity(Q, 2)));
    std::mt19937_64 rng(79);
    const FieldDescriptor F3 = FieldDescriptor::prime_field(3);
    for (int i = 0; i < 10; ++i)
        CHECK(minpoly_transfer_check(testgen::random_matrix(rng, F3, 3, 3)));
}
