#pragma once

#include <optional>
#include <variant>

#include "algspec/pencil.hpp"

namespace algspec {

// Block companion matrix of a monic pencil: identity blocks on the block
// superdiagonal, last block row (-A_0, ..., -A_{m-1}).
struct CompanionForm {
    Mat x;
    int block_size;
    int degree;
};

// Built per the pattern and certified: det P(x) = det(x I - X) exactly.
CompanionForm companion_linearize(const MatPoly& p);

// G(x)(x e_m - X) = diag(p(x), e_{m-1}) H(x) with the Horner-tail G and the
// unipotent bidiagonal H, checked exactly at each sample together with the
// invertibility of G and H there.
bool linearization_identity_check(const MatPoly& p, const std::vector<FieldElem>& xs);

struct EuclidDivision {
    MatPoly quotient;  // monic, degree m-1
    Mat remainder;     // = sum_r A_r d^r (right substitution)
};

EuclidDivision euclid_divide(const MatPoly& p, const Mat& d);

// P(x) = (x I - C_1)...(x I - C_m); the product is certified to reproduce P.
struct Factorization {
    std::vector<Mat> factors;
};

Factorization make_factorization(const MatPoly& p, std::vector<Mat> factors);

struct CannotFactor {
    std::string reason;
    Poly residual;  // det P, or its unsplit part
};

// Distinct-roots factorization: det P must have m*n distinct roots in F.
// Eigenvectors of the companion matrix give the right factor; Euclid
// division and recursion give the rest.
std::variant<Factorization, CannotFactor> factor_pencil(const MatPoly& p);

// x^2 + u x + x v + w as a function of a ring element x.
Mat quad_eval(const Mat& u, const Mat& v, const Mat& w, const Mat& x);

bool is_central(const Mat& a);  // scalar multiple of the identity

struct QuadEquivResult {
    bool equivalent;
    std::optional<Mat> witness;  // an x where the two polynomials differ
};

// Identity of x^2 + ux + xv + w and x^2 + u2x + xv2 + w2 for all ring
// arguments x: w = w2 and u - u2 = v2 - v central.
QuadEquivResult quad_identity_equiv(const Mat& u, const Mat& v, const Mat& w,
                                    const Mat& u2, const Mat& v2, const Mat& w2);

struct QuadFactorizationResult {
    bool accepted;
    std::optional<Factorization> factorization;  // (x e - c)(x e - d), d = a - c
    std::optional<Mat> residual;                 // c^2 - c a + b when rejected
};

// Root-to-factorization for the pencil p(x) = x^2 e - x a + b: accepted iff
// c^2 - c a + b = 0, with the product certified against p coefficientwise.
QuadFactorizationResult quad_root_to_factorization(const Mat& a, const Mat& b, const Mat& c);

// All ring factorizations x^2 + ux + xv + w = (x - a)(x - b) by exhaustive
// enumeration over a tiny domain (p^(n^2) <= 81 candidates per slot).
std::vector<std::pair<Mat, Mat>> quad_factor_search(const Mat& u, const Mat& v, const Mat& w);

enum class QuadUniqueness { Unique, SwapWithCentralDifference };

struct QuadUniquenessResult {
    QuadUniqueness verdict;
    std::optional<Mat> central_difference;  // c = a - b for the swap case
};

// Two certified factorizations of one quadratic either coincide or are the
// swapped pair with central difference; anything else would violate the
// uniqueness theorem over a field centre.
QuadUniquenessResult quad_uniqueness_check(const std::pair<Mat, Mat>& f1,
                                           const std::pair<Mat, Mat>& f2, const Mat& u,
                                           const Mat& v, const Mat& w);

}  // namespace algspec
