#include "algspec/spectrum.hpp"

#include <algorithm>

namespace algspec {

bool SpectrumReport::contains(const FieldElem& x) const {
    return std::find(roots.begin(), roots.end(), x) != roots.end();
}

SpectrumReport spectrum_of_poly(const Poly& defining) {
    if (defining.is_zero()) fail(Errc::ZeroPolynomial, "spectrum of zero polynomial");
    Poly m = monic(defining);
    RootsResult rr = roots_in_field(m);
    return {std::move(m), std::move(rr.roots), rr.complete, std::move(rr.residual)};
}

SpectrumReport spectrum_of(const Mat& a) {
    a.require_square("spectrum");
    return spectrum_of_poly(min_poly(a).poly);
}

std::optional<Mat> inverse_via_minpoly(const Mat& a) {
    a.require_square("inverse via minimum polynomial");
    const FieldDescriptor& d = a.descriptor();
    Poly m = min_poly(a).poly;
    if (m.coeff(0).is_zero()) return std::nullopt;
    // a^{-1} = -alpha_0^{-1} (a^{n-1} + alpha_{n-1} a^{n-2} + ... + alpha_1 e)
    std::vector<FieldElem> cs;
    cs.reserve(m.degree());
    FieldElem scale = -m.coeff(0).inv();
    for (int i = 1; i <= m.degree(); ++i) cs.push_back(scale * m.coeff(i));
    Mat inv = matrix_poly_eval(Poly(d, std::move(cs)), a);
    certify(a * inv == Mat::identity(d, a.rows()) && inv * a == Mat::identity(d, a.rows()),
            "inverse_via_minpoly certificate");
    return inv;
}

SpectralMapResult spectral_map(const Poly& p, const Mat& a) {
    a.require_square("spectral map");
    if (p.is_zero()) fail(Errc::PreconditionViolation, "spectral map of zero polynomial");
    SpectrumReport spec_a = spectrum_of(a);
    Mat pa = matrix_poly_eval(p, a);
    SpectrumReport spec_pa = spectrum_of(pa);

    std::vector<FieldElem> mapped;
    if (p.degree() == 0) {
        // spec(c e) = {c} regardless of spec(a); the equality is proven.
        mapped.push_back(p.coeff(0));
        certify(spec_pa.complete && spec_pa.roots == mapped,
                "constant spectral map");
        return {std::move(mapped), std::move(spec_pa), MapEquality::Proven};
    }
    for (const FieldElem& z : spec_a.roots) mapped.push_back(poly_eval(p, z));
    std::sort(mapped.begin(), mapped.end());
    mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());

    // Forward inclusion holds over any field; certify it.
    for (const FieldElem& y : mapped)
        certify(poly_eval(spec_pa.defining_poly, y).is_zero(),
                "spectral map forward inclusion");

    MapEquality eq = MapEquality::ForwardOnly;
    if (spec_a.complete && spec_pa.complete) {
        certify(mapped == spec_pa.roots, "spectral map equality on split spectra");
        eq = MapEquality::Proven;
    }
    return {std::move(mapped), std::move(spec_pa), eq};
}

std::optional<Mat> ab_ba_witness(const Mat& a, const Mat& b, const FieldElem& lambda) {
    a.require_square("ab_ba_witness");
    b.require_square("ab_ba_witness");
    if (a.rows() != b.rows()) fail(Errc::SizeMismatch, "ab_ba_witness sizes");
    if (lambda.is_zero()) fail(Errc::ZeroLambda, "the ab/ba correspondence needs lambda != 0");
    const FieldDescriptor& d = a.descriptor();
    int n = a.rows();
    Mat e = Mat::identity(d, n);
    Mat lam_ab = scalar_matrix(d, n, lambda) - a * b;
    std::optional<Mat> inv = inverse(lam_ab);
    if (!inv) return std::nullopt;
    Mat c = lambda.inv() * (e + b * *inv * a);
    Mat lam_ba = scalar_matrix(d, n, lambda) - b * a;
    certify(c * lam_ba == e && lam_ba * c == e, "ab_ba witness inverts lambda e - ba");
    return c;
}

int jordan_ideal_dim(const Mat& a, const FieldElem& lambda, int k) {
    a.require_square("jordan_ideal_dim");
    if (k <= 0) fail(Errc::PreconditionViolation, "jordan_ideal_dim needs k >= 1");
    const FieldDescriptor& d = a.descriptor();
    int n = a.rows();
    Mat shifted = a - scalar_matrix(d, n, lambda);
    Mat power = mat_pow(shifted, k);
    return n * static_cast<int>(kernel_basis(power).size());
}

Sidedness one_sided_invertibility(const Mat& a) {
    a.require_square("one_sided_invertibility");
    const FieldDescriptor& d = a.descriptor();
    int n = a.rows();
    std::vector<FieldElem> e_vec = flatten(Mat::identity(d, n));
    bool right = solve_linear(left_mult_operator(a), e_vec).has_value();   // a x = e
    bool left = solve_linear(right_mult_operator(a), e_vec).has_value();   // x a = e
    if (left != right)
        fail(Errc::InconsistentSidedness, "one-sided inverse of an algebraic element");
    return left ? Sidedness::TwoSided : Sidedness::Neither;
}

}  // namespace algspec
