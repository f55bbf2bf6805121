#pragma once

#include <optional>
#include <vector>

#include "algspec/spectrum.hpp"

namespace algspec {

// Matrix polynomial P(x) = sum_r x^r A_r with square coefficient matrices of
// one size. Trailing zero coefficients are trimmed; the declared weight of a
// group action is passed separately where it matters.
class MatPoly {
public:
    MatPoly(FieldDescriptor d, int n, std::vector<Mat> coeffs);

    static MatPoly zero(const FieldDescriptor& d, int n) { return MatPoly(d, n, {}); }
    static MatPoly from_coeffs(std::vector<Mat> coeffs);
    // (x I - C_1)(x I - C_2)...(x I - C_m)
    static MatPoly from_linear_factors(const std::vector<Mat>& roots);

    const FieldDescriptor& descriptor() const { return desc_; }
    int size() const { return n_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;

    Mat coeff(int r) const;  // zero matrix beyond the degree
    const Mat& leading() const;
    const std::vector<Mat>& coeffs() const { return coeffs_; }

    Mat eval(const FieldElem& x) const;

    friend MatPoly operator+(const MatPoly& a, const MatPoly& b);
    friend MatPoly operator-(const MatPoly& a, const MatPoly& b);
    friend MatPoly operator*(const MatPoly& a, const MatPoly& b);  // order preserved
    friend bool operator==(const MatPoly& a, const MatPoly& b);
    friend bool operator!=(const MatPoly& a, const MatPoly& b) { return !(a == b); }

private:
    void trim();

    FieldDescriptor desc_;
    int n_;
    std::vector<Mat> coeffs_;
};

PolyMat to_poly_matrix(const MatPoly& p);

// Element of SL(2, F); the determinant-1 invariant is checked at construction.
struct Moebius {
    Moebius(FieldElem a, FieldElem b, FieldElem c, FieldElem d);

    static Moebius identity(const FieldDescriptor& d);
    Moebius inverse() const;  // [[d, -b], [-c, a]]
    friend Moebius operator*(const Moebius& g, const Moebius& h);
    friend bool operator==(const Moebius& g, const Moebius& h);

    FieldElem a, b, c, d;
};

// Point of F u {infinity}.
class ExtPoint {
public:
    static ExtPoint finite(FieldElem x) { return ExtPoint(std::move(x)); }
    static ExtPoint infinity() { return ExtPoint(); }

    bool is_infinity() const { return !v_.has_value(); }
    const FieldElem& value() const;

    friend bool operator==(const ExtPoint& p, const ExtPoint& q);
    friend bool operator!=(const ExtPoint& p, const ExtPoint& q) { return !(p == q); }
    friend bool operator<(const ExtPoint& p, const ExtPoint& q);  // infinity last

private:
    ExtPoint() = default;
    explicit ExtPoint(FieldElem x) : v_(std::move(x)) {}
    std::optional<FieldElem> v_;
};

// g.x = (a x + b)/(c x + d), with the usual conventions at infinity.
ExtPoint moebius_act_point(const Moebius& g, const ExtPoint& x);

struct PencilSpectrum {
    bool regular;  // false iff det P identically zero (spectrum = all of F)
    std::optional<SpectrumReport> finite_part;
    bool contains_infinity;
    int weight;

    std::vector<ExtPoint> points() const;  // finite roots plus infinity flag
};

// Finite part from det P(x); infinity from singularity of the weight-n
// leading coefficient (weight defaults to the trimmed degree).
PencilSpectrum pencil_spectrum(const MatPoly& p, int weight = -1);

// (T_g p)(x): writing g^{-1} = [[a', b'], [-c', d']] rows (d, -b), (-c, a),
// the result is sum_r A_r (a' x + b')^r (c' x + d')^{n - r}, computed by
// homogeneous coefficient convolution so no division occurs. Satisfies
// T_g T_h = T_{gh} at fixed weight and (for the 90-degree rotation)
// (T_g p)(x) = x^n p(-1/x).
MatPoly moebius_transform_pencil(const Moebius& g, const MatPoly& p, int weight = -1);

// Same weight-n substitution on a scalar polynomial.
Poly moebius_transform_scalar(const Moebius& g, const Poly& p, int weight);

struct EquivarianceVerdict {
    bool equal;
    bool compared_roots;  // false: compared defining polynomials instead
};

// spec(T_g p) = g.spec(p). Complete finite spectra are compared as point
// sets; otherwise the defining polynomials are compared under the induced
// substitution and the infinity flags through the point action.
EquivarianceVerdict spectrum_equivariance_check(const Moebius& g, const MatPoly& p,
                                                int weight = -1);

struct RegularizeResult {
    Moebius g;
    MatPoly q;
    FieldElem x;  // g.x = 0
    FieldElem y;  // g.y = infinity
    int candidates_tried;
};

// Finds x != y with P(x), P(y) invertible (at most deg(det P) <= m*n points
// can fail, so m*n + 2 candidates suffice), and moves them to 0 and infinity.
// The constant and leading coefficients of the result are certified
// invertible. NotFound only for an exhausted finite field.
RegularizeResult regularize(const MatPoly& p, int max_candidates = -1);

// Exact evaluator of the homogeneous form sum_r x^r y^{n-r} A_r.
class HomogeneousPencil {
public:
    HomogeneousPencil(MatPoly p, int weight);
    Mat eval(const FieldElem& x, const FieldElem& y) const;
    int weight() const { return weight_; }

private:
    MatPoly p_;
    int weight_;
};

HomogeneousPencil homogenize(const MatPoly& p);

std::ostream& operator<<(std::ostream& os, const MatPoly& p);
std::ostream& operator<<(std::ostream& os, const ExtPoint& p);

}  // namespace algspec
