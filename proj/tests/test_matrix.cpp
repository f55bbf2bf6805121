#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algspec/io.hpp"
#include "support/random_values.hpp"

using namespace algspec;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor F2 = FieldDescriptor::prime_field(2);
const FieldDescriptor F3 = FieldDescriptor::prime_field(3);
const FieldDescriptor F5 = FieldDescriptor::prime_field(5);

// Independent oracle: cofactor expansion along the first row.
template <class T>
T cofactor_det(const Matrix<T>& a) {
    int n = a.rows();
    if (n == 1) return a.at(0, 0);
    T acc = T::zero(a.descriptor());
    for (int j = 0; j < n; ++j) {
        if (a.at(0, j).is_zero()) continue;
        Matrix<T> minor = Matrix<T>::zeros(a.descriptor(), n - 1, n - 1);
        for (int r = 1; r < n; ++r)
            for (int c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = a.at(r, c);
            }
        T term = a.at(0, j) * cofactor_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

TEST_CASE("determinant examples") {
    CHECK(det(Mat::identity(Q, 3)).is_one());

    PolyMat a = parse_poly_matrix(Q, "x", "[[1, 1], [x, 1 + x]]");
    CHECK(det(a).is_one());

    PolyMat b = parse_poly_matrix(Q, "x", "[[0, 1 + x^3], [0, 0]]");
    CHECK(det(b).is_zero());
}

TEST_CASE("bareiss equals cofactor expansion, exhaustive 3x3 over GF(2)") {
    for (int code = 0; code < 512; ++code) {
        PolyMat m = PolyMat::zeros(F2, 3, 3);
        Mat mf = Mat::zeros(F2, 3, 3);
        for (int k = 0; k < 9; ++k) {
            long bit = (code >> k) & 1;
            m.at(k / 3, k % 3) = Poly::constant(FieldElem::from_int(F2, bit));
            mf.at(k / 3, k % 3) = FieldElem::from_int(F2, bit);
        }
        Poly bareiss = det(m);
        CHECK(bareiss == cofactor_det(m));
        CHECK(bareiss.coeff(0) == det(mf));  // field path agrees too
    }
}

TEST_CASE("bareiss on polynomial entries matches cofactors") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 20; ++i) {
        PolyMat m = PolyMat::zeros(Q, 3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m.at(r, c) = testgen::random_poly(rng, Q, 2, false, 3);
        CHECK(det(m) == cofactor_det(m));
    }
}

TEST_CASE("inverse examples") {
    Mat a = mat_from_ints(Q, {{1, 1}, {-1, 1}});
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(*inv == parse_matrix(Q, "[[1/2, -1/2], [1/2, 1/2]]"));
    CHECK(inverse(Mat::identity(Q, 2)) == Mat::identity(Q, 2));
    CHECK_FALSE(inverse(mat_from_ints(Q, {{1, 1}, {1, 1}})).has_value());
}

TEST_CASE("inverse certificate on random matrices") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 40; ++i) {
        Mat a = testgen::random_matrix(rng, F5, 3, 3);
        auto inv = inverse(a);
        if (inv) CHECK(*inv * a == Mat::identity(F5, 3));
        CHECK(inv.has_value() == !det(a).is_zero());
    }
}

TEST_CASE("poly-ring inverse examples") {
    PolyMat a = parse_poly_matrix(Q, "x", "[[1, 1], [x, 1 + x]]");
    auto inv = poly_ring_inverse(a);
    REQUIRE(inv.has_value());
    CHECK(*inv == parse_poly_matrix(Q, "x", "[[1 + x, -1], [-x, 1]]"));

    CHECK_FALSE(poly_ring_inverse(parse_poly_matrix(Q, "x", "[[0, 1 + x^3], [0, 0]]")).has_value());
    CHECK(poly_ring_inverse(PolyMat::identity(Q, 2)) == PolyMat::identity(Q, 2));
    // nonconstant determinant: invertible over Q(x) but not over Q[x]
    CHECK_FALSE(poly_ring_inverse(parse_poly_matrix(Q, "x", "[[x, 0], [0, 1]]")).has_value());
}

TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(Mat::zeros(Q, 2, 2)).size() == 2);
    CHECK(kernel_basis(Mat::identity(Q, 2)).empty());
    auto k = kernel_basis(mat_from_ints(Q, {{0, 1}, {0, 0}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<FieldElem>{FieldElem::one(Q), FieldElem::zero(Q)});
}

TEST_CASE("min_poly examples") {
    MinPolyResult m = min_poly(mat_from_ints(Q, {{1, 1}, {-1, 1}}));
    CHECK(m.poly == Poly::from_ints(Q, {2, -2, 1}));
    CHECK(m.degree == 2);

    CHECK(min_poly(Mat::identity(Q, 3)).poly == Poly::from_ints(Q, {-1, 1}));
    CHECK(min_poly(mat_from_ints(Q, {{0, 1}, {0, 0}})).poly == Poly::from_ints(Q, {0, 0, 1}));
}

TEST_CASE("min_poly divides the characteristic polynomial") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 30; ++i) {
        Mat a = testgen::random_matrix(rng, Q, 3, 3, 3);
        Poly cp = char_poly(a);
        Poly mp = min_poly(a).poly;
        CHECK(poly_divmod(cp, mp).remainder.is_zero());
        CHECK(cp.is_monic());
    }
}

TEST_CASE("matrix_poly_eval examples") {
    Mat a = mat_from_ints(Q, {{1, 1}, {-1, 1}});
    CHECK(matrix_poly_eval(Poly::from_ints(Q, {2, -2, 1}), a).is_zero());
    CHECK(matrix_poly_eval(Poly::one(Q), a) == Mat::identity(Q, 2));
    CHECK(matrix_poly_eval(Poly::from_ints(Q, {0, 1}), a) == a);
}

TEST_CASE("multiplication operators") {
    CHECK(left_mult_operator(Mat::identity(Q, 2)) == Mat::identity(Q, 4));

    std::mt19937_64 rng(24);
    for (int i = 0; i < 25; ++i) {
        Mat a = testgen::random_matrix(rng, F3, 2, 2);
        Mat b = testgen::random_matrix(rng, F3, 2, 2);
        // L_a R_b = R_b L_a
        CHECK(left_mult_operator(a) * right_mult_operator(b) ==
              right_mult_operator(b) * left_mult_operator(a));
        // vectorization is consistent: L_a vec(x) = vec(a x)
        Mat x = testgen::random_matrix(rng, F3, 2, 2);
        Mat lv = unflatten(F3, 2, 2, *solve_linear(Mat::identity(F3, 4), flatten(a * x)));
        CHECK(lv == a * x);
        std::vector<FieldElem> vx = flatten(x);
        Mat op = left_mult_operator(a);
        std::vector<FieldElem> image(4, FieldElem::zero(F3));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) image[r] = image[r] + op.at(r, c) * vx[c];
        CHECK(image == flatten(a * x));
    }
}

TEST_CASE("min_poly transfers to the left regular representation") {
    std::mt19937_64 rng(25);
    for (int i = 0; i < 20; ++i) {
        Mat a = testgen::random_matrix(rng, F3, 2, 2);
        CHECK(min_poly(left_mult_operator(a)).poly == min_poly(a).poly);
    }
}

TEST_CASE("L_a inverse is L of the inverse") {
    std::mt19937_64 rng(26);
    for (int i = 0; i < 20; ++i) {
        Mat a = testgen::random_invertible(rng, F5, 2);
        auto li = inverse(left_mult_operator(a));
        REQUIRE(li.has_value());
        CHECK(*li == left_mult_operator(*inverse(a)));
    }
    // and singular a gives a singular operator
    CHECK_FALSE(inverse(left_mult_operator(mat_from_ints(Q, {{1, 1}, {1, 1}}))).has_value());
}
