#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algspec/spectrum.hpp"

namespace algspec {

// Finite sampled pseudo-resolvent family: points lambda with values r_lambda,
// all square matrices of one size over one field.
struct ResolventFamily {
    std::vector<std::pair<FieldElem, Mat>> samples;
};

ResolventFamily make_family(std::vector<std::pair<FieldElem, Mat>> samples);

struct FamilyCheck {
    bool valid;
    // First ordered pair violating the resolvent identity (or commutation).
    std::optional<std::pair<FieldElem, FieldElem>> violating;
};

// r_lambda - r_mu = (mu - lambda) r_lambda r_mu for all ordered pairs;
// commutation is asserted as well.
FamilyCheck verify_family(const ResolventFamily& f);

// Maximal extension from a single anchor sample: the extension exists at
// every lambda where e + (lambda - alpha) r_alpha is invertible, i.e. away
// from the roots of the excluded polynomial.
class MaxExtensionReport {
public:
    MaxExtensionReport(FieldElem anchor, Mat r_anchor, Poly excluded,
                       SpectrumReport roots, std::string formula)
        : anchor_(std::move(anchor)), r_anchor_(std::move(r_anchor)),
          excluded_poly_(std::move(excluded)), excluded_roots_(std::move(roots)),
          formula_(std::move(formula)) {}

    const FieldElem& anchor() const { return anchor_; }
    const Mat& anchor_value() const { return r_anchor_; }
    const Poly& excluded_poly() const { return excluded_poly_; }
    const SpectrumReport& excluded_roots() const { return excluded_roots_; }
    const std::string& formula() const { return formula_; }

    bool in_domain(const FieldElem& lambda) const;
    // r~_lambda = (e + (lambda - alpha) r_alpha)^{-1} r_alpha; nullopt
    // outside the extended domain.
    std::optional<Mat> evaluate(const FieldElem& lambda) const;

private:
    FieldElem anchor_;
    Mat r_anchor_;
    Poly excluded_poly_;  // monic in lambda; nonzero at the anchor
    SpectrumReport excluded_roots_;
    std::string formula_;
};

MaxExtensionReport extend_maximal(const FieldElem& alpha, const Mat& r_alpha);

// a = alpha e - r_alpha^{-1} when r_alpha is invertible (then the family is
// the true resolvent of a); nullopt when r_alpha is singular, i.e. the
// pseudo-resolvent is associated with no element.
std::optional<Mat> associated_element(const FieldElem& alpha, const Mat& r_alpha);

struct EvalQuotientSpectrum {
    std::vector<std::pair<FieldElem, SpectrumReport>> per_point;
    std::vector<FieldElem> union_roots;
    bool all_complete;
    int cardinality_bound;  // n * #S
};

// Spectrum in the quotient by the evaluation ideal J_S: evaluate at each
// s in S and take the union of the pointwise spectra.
EvalQuotientSpectrum evaluation_quotient_spectrum(const PolyMat& a,
                                                  const std::vector<FieldElem>& S);

// Membership of r1 - r2 in J_S at the given lambda; when the difference lies
// in the ideal, the per-point quotient spectra of the two extensions are
// asserted equal.
bool j_spectrum_perturbation_check(const PolyMat& r1, const PolyMat& r2,
                                   const FieldElem& lambda,
                                   const std::vector<FieldElem>& S);

struct SpecUnionVerdict {
    bool equal;
    std::vector<FieldElem> lhs;  // spec_J(sum) with 0 adjoined
    std::vector<FieldElem> rhs;  // union of spec_J(a_r)
    bool all_complete;
};

// spec_J(a) u {0} = union of spec_J(a_r) for parts with pairwise products in
// J_S (checked; ProductsNotInIdeal otherwise).
SpecUnionVerdict spec_union_orthogonal(const std::vector<PolyMat>& parts,
                                       const std::vector<FieldElem>& S);

}  // namespace algspec
