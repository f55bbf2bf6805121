#include "algspec/pencil.hpp"

#include <algorithm>

namespace algspec {

MatPoly::MatPoly(FieldDescriptor d, int n, std::vector<Mat> coeffs)
    : desc_(std::move(d)), n_(n), coeffs_(std::move(coeffs)) {
    if (n_ <= 0) fail(Errc::PreconditionViolation, "pencil block size");
    for (const Mat& c : coeffs_) {
        if (c.descriptor() != desc_) fail(Errc::FieldMismatch, "pencil coefficient field");
        if (c.rows() != n_ || c.cols() != n_) fail(Errc::SizeMismatch, "pencil coefficient size");
    }
    trim();
}

MatPoly MatPoly::from_coeffs(std::vector<Mat> coeffs) {
    if (coeffs.empty()) fail(Errc::PreconditionViolation, "pencil needs a coefficient");
    FieldDescriptor d = coeffs.front().descriptor();
    int n = coeffs.front().rows();
    return MatPoly(std::move(d), n, std::move(coeffs));
}

MatPoly MatPoly::from_linear_factors(const std::vector<Mat>& roots) {
    if (roots.empty()) fail(Errc::PreconditionViolation, "no factors");
    const FieldDescriptor& d = roots.front().descriptor();
    int n = roots.front().rows();
    MatPoly acc(d, n, {-roots.front(), Mat::identity(d, n)});
    for (std::size_t i = 1; i < roots.size(); ++i)
        acc = acc * MatPoly(d, n, {-roots[i], Mat::identity(d, n)});
    return acc;
}

void MatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool MatPoly::is_monic() const {
    return !is_zero() && coeffs_.back() == Mat::identity(desc_, n_);
}

Mat MatPoly::coeff(int r) const {
    if (r < 0 || r >= static_cast<int>(coeffs_.size())) return Mat::zeros(desc_, n_, n_);
    return coeffs_[r];
}

const Mat& MatPoly::leading() const {
    if (is_zero()) fail(Errc::PreconditionViolation, "leading coefficient of zero pencil");
    return coeffs_.back();
}

Mat MatPoly::eval(const FieldElem& x) const {
    Mat acc = Mat::zeros(desc_, n_, n_);
    for (int r = degree(); r >= 0; --r) acc = scalar_matrix(desc_, n_, x) * acc + coeffs_[r];
    return acc;
}

MatPoly operator+(const MatPoly& a, const MatPoly& b) {
    if (a.desc_ != b.desc_ || a.n_ != b.n_) fail(Errc::SizeMismatch, "pencil add");
    std::vector<Mat> cs;
    int deg = std::max(a.degree(), b.degree());
    for (int r = 0; r <= deg; ++r) cs.push_back(a.coeff(r) + b.coeff(r));
    return MatPoly(a.desc_, a.n_, std::move(cs));
}

MatPoly operator-(const MatPoly& a, const MatPoly& b) {
    if (a.desc_ != b.desc_ || a.n_ != b.n_) fail(Errc::SizeMismatch, "pencil sub");
    std::vector<Mat> cs;
    int deg = std::max(a.degree(), b.degree());
    for (int r = 0; r <= deg; ++r) cs.push_back(a.coeff(r) - b.coeff(r));
    return MatPoly(a.desc_, a.n_, std::move(cs));
}

MatPoly operator*(const MatPoly& a, const MatPoly& b) {
    if (a.desc_ != b.desc_ || a.n_ != b.n_) fail(Errc::SizeMismatch, "pencil mul");
    if (a.is_zero() || b.is_zero()) return MatPoly::zero(a.desc_, a.n_);
    std::vector<Mat> cs(a.degree() + b.degree() + 1, Mat::zeros(a.desc_, a.n_, a.n_));
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j)
            cs[i + j] = cs[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return MatPoly(a.desc_, a.n_, std::move(cs));
}

bool operator==(const MatPoly& a, const MatPoly& b) {
    return a.desc_ == b.desc_ && a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
}

PolyMat to_poly_matrix(const MatPoly& p) {
    const FieldDescriptor& d = p.descriptor();
    int n = p.size();
    PolyMat out = PolyMat::zeros(d, n, n);
    for (int r = 0; r <= p.degree(); ++r) {
        Mat c = p.coeff(r);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!c.at(i, j).is_zero())
                    out.at(i, j) = out.at(i, j) + Poly::constant(c.at(i, j)).shifted(r);
    }
    return out;
}

// ---------------------------------------------------------------------------
// SL(2, F) and the extended line

Moebius::Moebius(FieldElem a_, FieldElem b_, FieldElem c_, FieldElem d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (!(a * d - b * c).is_one())
        fail(Errc::InvariantViolation, "Moebius element must have determinant 1");
}

Moebius Moebius::identity(const FieldDescriptor& d) {
    FieldElem one = FieldElem::one(d), zero = FieldElem::zero(d);
    return Moebius(one, zero, zero, one);
}

Moebius Moebius::inverse() const { return Moebius(d, -b, -c, a); }

Moebius operator*(const Moebius& g, const Moebius& h) {
    return Moebius(g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                   g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d);
}

bool operator==(const Moebius& g, const Moebius& h) {
    return g.a == h.a && g.b == h.b && g.c == h.c && g.d == h.d;
}

const FieldElem& ExtPoint::value() const {
    if (is_infinity()) fail(Errc::PreconditionViolation, "value of the point at infinity");
    return *v_;
}

bool operator==(const ExtPoint& p, const ExtPoint& q) {
    if (p.is_infinity() || q.is_infinity()) return p.is_infinity() == q.is_infinity();
    return p.value() == q.value();
}

bool operator<(const ExtPoint& p, const ExtPoint& q) {
    if (p.is_infinity()) return false;
    if (q.is_infinity()) return true;
    return p.value() < q.value();
}

ExtPoint moebius_act_point(const Moebius& g, const ExtPoint& x) {
    if (x.is_infinity()) {
        if (g.c.is_zero()) return ExtPoint::infinity();
        return ExtPoint::finite(g.a / g.c);
    }
    FieldElem den = g.c * x.value() + g.d;
    if (den.is_zero()) return ExtPoint::infinity();
    return ExtPoint::finite((g.a * x.value() + g.b) / den);
}

// ---------------------------------------------------------------------------
// Spectra

std::vector<ExtPoint> PencilSpectrum::points() const {
    std::vector<ExtPoint> out;
    if (finite_part)
        for (const FieldElem& r : finite_part->roots) out.push_back(ExtPoint::finite(r));
    if (contains_infinity) out.push_back(ExtPoint::infinity());
    return out;
}

PencilSpectrum pencil_spectrum(const MatPoly& p, int weight) {
    if (p.is_zero()) fail(Errc::PreconditionViolation, "spectrum of the zero pencil");
    if (weight < 0) weight = p.degree();
    if (weight < p.degree()) fail(Errc::DegreeExceedsWeight, "pencil_spectrum weight");
    Poly dp = det(to_poly_matrix(p));
    bool inf = weight > p.degree() || det(p.leading()).is_zero();
    if (dp.is_zero()) return {false, std::nullopt, inf, weight};
    return {true, spectrum_of_poly(dp), inf, weight};
}

// ---------------------------------------------------------------------------
// The weight-n action

namespace {

// Coefficients of (a x + b)^r (c x + d)^(n-r) for r = 0..n, built by two
// running binomial convolutions.
std::vector<Poly> homogeneous_powers(const FieldDescriptor& fd, const FieldElem& a,
                                     const FieldElem& b, const FieldElem& c,
                                     const FieldElem& d, int n) {
    Poly la(fd, {b, a});  // a x + b
    Poly lc(fd, {d, c});  // c x + d
    std::vector<Poly> out;
    out.reserve(n + 1);
    for (int r = 0; r <= n; ++r) out.push_back(la.pow(r) * lc.pow(n - r));
    return out;
}

}  // namespace

MatPoly moebius_transform_pencil(const Moebius& g, const MatPoly& p, int weight) {
    if (weight < 0) weight = p.degree() < 0 ? 0 : p.degree();
    if (p.degree() > weight) fail(Errc::DegreeExceedsWeight, "pencil degree exceeds weight");
    const FieldDescriptor& fd = p.descriptor();
    int n = p.size();
    Moebius gi = g.inverse();
    std::vector<Poly> pw = homogeneous_powers(fd, gi.a, gi.b, gi.c, gi.d, weight);
    std::vector<Mat> cs(weight + 1, Mat::zeros(fd, n, n));
    for (int r = 0; r <= p.degree(); ++r) {
        Mat ar = p.coeff(r);
        if (ar.is_zero()) continue;
        for (int k = 0; k <= pw[r].degree(); ++k) {
            FieldElem c = pw[r].coeff(k);
            if (!c.is_zero()) cs[k] = cs[k] + c * ar;
        }
    }
    return MatPoly(fd, n, std::move(cs));
}

Poly moebius_transform_scalar(const Moebius& g, const Poly& p, int weight) {
    if (p.degree() > weight) fail(Errc::DegreeExceedsWeight, "scalar degree exceeds weight");
    const FieldDescriptor& fd = p.descriptor();
    Moebius gi = g.inverse();
    std::vector<Poly> pw = homogeneous_powers(fd, gi.a, gi.b, gi.c, gi.d, weight);
    Poly out = Poly::zero(fd);
    for (int r = 0; r <= p.degree(); ++r) out = out + p.coeff(r) * pw[r];
    return out;
}

EquivarianceVerdict spectrum_equivariance_check(const Moebius& g, const MatPoly& p,
                                                int weight) {
    if (weight < 0) weight = p.degree() < 0 ? 0 : p.degree();
    PencilSpectrum sp = pencil_spectrum(p, weight);
    if (!sp.regular) fail(Errc::NonRegular, "equivariance needs a regular pencil");
    MatPoly q = moebius_transform_pencil(g, p, weight);
    PencilSpectrum sq = pencil_spectrum(q, weight);

    if (sp.finite_part->complete && sq.finite_part->complete) {
        std::vector<ExtPoint> mapped;
        for (const ExtPoint& x : sp.points()) mapped.push_back(moebius_act_point(g, x));
        std::sort(mapped.begin(), mapped.end());
        std::vector<ExtPoint> got = sq.points();
        std::sort(got.begin(), got.end());
        return {mapped == got, true};
    }

    // det(T_g p) is exactly the weight n*size substitution applied to det p.
    Poly expected = moebius_transform_scalar(g, det(to_poly_matrix(p)), weight * p.size());
    bool dets_match = expected == det(to_poly_matrix(q));
    // Infinity flag of q corresponds through the point action.
    ExtPoint pre = moebius_act_point(g.inverse(), ExtPoint::infinity());
    bool pre_in_spec = pre.is_infinity()
                           ? sp.contains_infinity
                           : det(p.eval(pre.value())).is_zero();
    bool inf_match = sq.contains_infinity == pre_in_spec;
    return {dets_match && inf_match, false};
}

RegularizeResult regularize(const MatPoly& p, int max_candidates) {
    if (p.is_zero()) fail(Errc::PreconditionViolation, "regularize of zero pencil");
    const FieldDescriptor& fd = p.descriptor();
    Poly dp = det(to_poly_matrix(p));
    if (dp.is_zero()) fail(Errc::NonRegular, "regularize needs a regular pencil");

    long limit = max_candidates > 0 ? max_candidates : long(p.degree()) * p.size() + 2;
    if (fd.kind() == FieldKind::PrimeField && limit > long(fd.modulus()))
        limit = fd.modulus();

    std::vector<FieldElem> good;
    int tried = 0;
    for (long k = 0; k < limit && good.size() < 2; ++k) {
        long cand = fd.kind() == FieldKind::PrimeField
                        ? k
                        : (k % 2 == 0 ? k / 2 : -(k / 2 + 1));
        FieldElem x = FieldElem::from_int(fd, cand);
        ++tried;
        if (!poly_eval(dp, x).is_zero()) good.push_back(x);
    }
    if (good.size() < 2) fail(Errc::NotFound, "no two regular points among the candidates");

    const FieldElem& x = good[0];
    const FieldElem& y = good[1];
    FieldElem one = FieldElem::one(fd);
    FieldElem inv_diff = (x - y).inv();
    Moebius g(one, -x, inv_diff, -(y * inv_diff));
    int weight = p.degree();
    MatPoly q = moebius_transform_pencil(g, p, weight);
    certify(q.degree() == weight, "regularized pencil keeps its degree");
    certify(inverse(q.coeff(0)).has_value(), "regularized constant coefficient invertible");
    certify(inverse(q.coeff(weight)).has_value(), "regularized leading coefficient invertible");
    return {g, std::move(q), x, y, tried};
}

HomogeneousPencil::HomogeneousPencil(MatPoly p, int weight) : p_(std::move(p)), weight_(weight) {
    if (p_.degree() > weight_) fail(Errc::DegreeExceedsWeight, "homogenize weight");
    const FieldDescriptor& fd = p_.descriptor();
    FieldElem one = FieldElem::one(fd);
    FieldElem two = FieldElem::from_int(fd, 2);
    certify(eval(one, one) == p_.eval(one), "homogeneous form restricts to the pencil");
    certify(eval(two, two) == two.pow(weight_) * p_.eval(one), "homogeneous scaling law");
}

Mat HomogeneousPencil::eval(const FieldElem& x, const FieldElem& y) const {
    const FieldDescriptor& fd = p_.descriptor();
    int n = p_.size();
    Mat acc = Mat::zeros(fd, n, n);
    for (int r = 0; r <= weight_; ++r) {
        Mat c = p_.coeff(r);
        if (c.is_zero()) continue;
        acc = acc + (x.pow(r) * y.pow(weight_ - r)) * c;
    }
    return acc;
}

HomogeneousPencil homogenize(const MatPoly& p) {
    return HomogeneousPencil(p, p.degree() < 0 ? 0 : p.degree());
}

}  // namespace algspec
