#include "algspec/resolvent.hpp"

#include <algorithm>
#include <sstream>

namespace algspec {

namespace {

std::vector<FieldElem> sorted_union(std::vector<FieldElem> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool vanishes_on(const PolyMat& a, const std::vector<FieldElem>& S) {
    for (const FieldElem& s : S)
        if (!eval_poly_matrix(a, s).is_zero()) return false;
    return true;
}

}  // namespace

ResolventFamily make_family(std::vector<std::pair<FieldElem, Mat>> samples) {
    if (samples.empty()) fail(Errc::EmptyFamily, "resolvent family needs a sample");
    const Mat& first = samples.front().second;
    first.require_square("resolvent sample");
    for (const auto& [pt, m] : samples) {
        if (pt.descriptor() != first.descriptor() || m.descriptor() != first.descriptor())
            fail(Errc::FieldMismatch, "resolvent family field");
        if (m.rows() != first.rows() || m.cols() != first.cols())
            fail(Errc::SizeMismatch, "resolvent family sample sizes");
    }
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                fail(Errc::InvalidFamily, "duplicate sample point");
    return {std::move(samples)};
}

FamilyCheck verify_family(const ResolventFamily& f) {
    if (f.samples.empty()) fail(Errc::EmptyFamily, "verify_family");
    for (const auto& [lam, r_lam] : f.samples)
        for (const auto& [mu, r_mu] : f.samples) {
            if (lam == mu) continue;
            if (r_lam - r_mu != (mu - lam) * (r_lam * r_mu) || r_lam * r_mu != r_mu * r_lam)
                return {false, std::make_pair(lam, mu)};
        }
    return {true, std::nullopt};
}

bool MaxExtensionReport::in_domain(const FieldElem& lambda) const {
    return !poly_eval(excluded_poly_, lambda).is_zero();
}

std::optional<Mat> MaxExtensionReport::evaluate(const FieldElem& lambda) const {
    const FieldDescriptor& d = r_anchor_.descriptor();
    int n = r_anchor_.rows();
    Mat u = Mat::identity(d, n) + (lambda - anchor_) * r_anchor_;
    std::optional<Mat> inv = inverse(u);
    if (!inv) return std::nullopt;
    return *inv * r_anchor_;
}

MaxExtensionReport extend_maximal(const FieldElem& alpha, const Mat& r_alpha) {
    r_alpha.require_square("extend_maximal");
    if (alpha.descriptor() != r_alpha.descriptor())
        fail(Errc::FieldMismatch, "extend_maximal anchor field");
    const FieldDescriptor& d = r_alpha.descriptor();
    int n = r_alpha.rows();

    // det(e + (lambda - alpha) r_alpha) as a polynomial in lambda.
    PolyMat m = PolyMat::zeros(d, n, n);
    Poly shift = Poly(d, {-alpha, FieldElem::one(d)});  // lambda - alpha
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly e = shift * Poly::constant(r_alpha.at(i, j));
            if (i == j) e = e + Poly::one(d);
            m.at(i, j) = e;
        }
    Poly excluded = det(m);
    certify(!poly_eval(excluded, alpha).is_zero(), "anchor lies in the extended domain");
    excluded = monic(excluded);
    SpectrumReport roots = spectrum_of_poly(excluded);

    std::ostringstream formula;
    formula << "(e + (lambda - " << alpha << ") r)^-1 r";
    MaxExtensionReport report(alpha, r_alpha, excluded, std::move(roots), formula.str());

    // The extension satisfies the resolvent identity against the anchor at
    // every point it is defined; spot-check it on fresh domain points.
    int checked = 0;
    for (long k = 0; checked < 3 && k < 64; ++k) {
        long cand = (k % 2 == 0) ? k / 2 : -(k / 2 + 1);
        FieldElem lam = FieldElem::from_int(d, cand);
        if (!report.in_domain(lam) || lam == alpha) continue;
        Mat r_lam = *report.evaluate(lam);
        certify(r_lam - r_alpha == (alpha - lam) * (r_lam * r_alpha),
                "extension satisfies the resolvent identity");
        ++checked;
    }
    return report;
}

std::optional<Mat> associated_element(const FieldElem& alpha, const Mat& r_alpha) {
    r_alpha.require_square("associated_element");
    std::optional<Mat> r_inv = inverse(r_alpha);
    if (!r_inv) return std::nullopt;
    const FieldDescriptor& d = r_alpha.descriptor();
    int n = r_alpha.rows();
    Mat a = scalar_matrix(d, n, alpha) - *r_inv;

    MaxExtensionReport ext = extend_maximal(alpha, r_alpha);
    int checked = 0;
    for (long k = 0; checked < 3 && k < 64; ++k) {
        long cand = (k % 2 == 0) ? k / 2 : -(k / 2 + 1);
        FieldElem lam = FieldElem::from_int(d, cand);
        if (!ext.in_domain(lam)) continue;
        Mat r_lam = *ext.evaluate(lam);
        certify((scalar_matrix(d, n, lam) - a) * r_lam == Mat::identity(d, n),
                "extension is the resolvent of the associated element");
        ++checked;
    }
    SpectrumReport spec_a = spectrum_of(a);
    certify(sorted_union(ext.excluded_roots().roots) == sorted_union(spec_a.roots),
            "excluded roots match the spectrum of the associated element");
    return a;
}

EvalQuotientSpectrum evaluation_quotient_spectrum(const PolyMat& a,
                                                  const std::vector<FieldElem>& S) {
    a.require_square("evaluation_quotient_spectrum");
    if (S.empty()) fail(Errc::EmptySampleSet, "evaluation_quotient_spectrum");
    EvalQuotientSpectrum out{{}, {}, true, a.rows() * static_cast<int>(S.size())};
    std::vector<FieldElem> all;
    for (const FieldElem& s : S) {
        SpectrumReport rep = spectrum_of(eval_poly_matrix(a, s));
        out.all_complete = out.all_complete && rep.complete;
        all.insert(all.end(), rep.roots.begin(), rep.roots.end());
        out.per_point.emplace_back(s, std::move(rep));
    }
    out.union_roots = sorted_union(std::move(all));
    certify(static_cast<int>(out.union_roots.size()) <= out.cardinality_bound,
            "quotient spectrum cardinality bound n * #S");
    return out;
}

bool j_spectrum_perturbation_check(const PolyMat& r1, const PolyMat& r2,
                                   const FieldElem& lambda,
                                   const std::vector<FieldElem>& S) {
    if (r1.rows() != r2.rows() || r1.cols() != r2.cols())
        fail(Errc::InvalidFamily, "samples of different sizes");
    r1.require_square("j_spectrum_perturbation_check");
    if (S.empty()) fail(Errc::EmptySampleSet, "j_spectrum_perturbation_check");
    if (!vanishes_on(r1 - r2, S)) return false;
    // In the quotient the two families agree at lambda, hence have the same
    // maximal extension pointwise over S.
    for (const FieldElem& s : S) {
        MaxExtensionReport e1 = extend_maximal(lambda, eval_poly_matrix(r1, s));
        MaxExtensionReport e2 = extend_maximal(lambda, eval_poly_matrix(r2, s));
        certify(e1.excluded_poly() == e2.excluded_poly(),
                "equal quotient spectra for ideal-equivalent families");
    }
    return true;
}

SpecUnionVerdict spec_union_orthogonal(const std::vector<PolyMat>& parts,
                                       const std::vector<FieldElem>& S) {
    if (parts.empty()) fail(Errc::PreconditionViolation, "spec_union_orthogonal needs parts");
    if (S.empty()) fail(Errc::EmptySampleSet, "spec_union_orthogonal");
    for (std::size_t r = 0; r < parts.size(); ++r)
        for (std::size_t s = 0; s < parts.size(); ++s) {
            if (r == s) continue;
            if (!vanishes_on(parts[r] * parts[s], S))
                fail(Errc::ProductsNotInIdeal, "pairwise products must vanish on S");
        }
    PolyMat sum = parts.front();
    for (std::size_t r = 1; r < parts.size(); ++r) sum = sum + parts[r];

    EvalQuotientSpectrum lhs = evaluation_quotient_spectrum(sum, S);
    std::vector<FieldElem> lhs_roots = lhs.union_roots;
    lhs_roots.push_back(FieldElem::zero(sum.descriptor()));
    lhs_roots = sorted_union(std::move(lhs_roots));

    bool all_complete = lhs.all_complete;
    std::vector<FieldElem> rhs_roots;
    for (const PolyMat& part : parts) {
        EvalQuotientSpectrum e = evaluation_quotient_spectrum(part, S);
        all_complete = all_complete && e.all_complete;
        rhs_roots.insert(rhs_roots.end(), e.union_roots.begin(), e.union_roots.end());
    }
    rhs_roots = sorted_union(std::move(rhs_roots));
    return {lhs_roots == rhs_roots, std::move(lhs_roots), std::move(rhs_roots), all_complete};
}

}  // namespace algspec
