#include "algspec/factorization.hpp"

#include <algorithm>

namespace algspec {

namespace {

void require_monic(const MatPoly& p, const char* where) {
    if (!p.is_monic()) fail(Errc::NotMonic, where);
}

// Blocks are 1-indexed in the classical pattern; storage is 0-indexed.
Mat companion_matrix(const MatPoly& p) {
    const FieldDescriptor& fd = p.descriptor();
    int n = p.size(), m = p.degree();
    Mat x = Mat::zeros(fd, m * n, m * n);
    for (int r = 0; r + 1 < m; ++r)
        for (int i = 0; i < n; ++i) x.at(r * n + i, (r + 1) * n + i) = FieldElem::one(fd);
    for (int s = 0; s < m; ++s) {
        Mat block = -p.coeff(s);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) x.at((m - 1) * n + i, s * n + j) = block.at(i, j);
    }
    return x;
}

}  // namespace

CompanionForm companion_linearize(const MatPoly& p) {
    require_monic(p, "companion linearization");
    int n = p.size(), m = p.degree();
    Mat x = companion_matrix(p);
    certify(det(to_poly_matrix(p)) == char_poly(x),
            "companion spectrum matches det P");
    return {std::move(x), n, m};
}

bool linearization_identity_check(const MatPoly& p, const std::vector<FieldElem>& xs) {
    require_monic(p, "linearization identity");
    const FieldDescriptor& fd = p.descriptor();
    int n = p.size(), m = p.degree();
    Mat x_comp = companion_matrix(p);

    for (const FieldElem& x : xs) {
        // G(x): first block row holds the Horner tails
        // G_{1,j} = sum_{i=0}^{m-j} x^i a_{i+j}; -e on the block subdiagonal.
        Mat g = Mat::zeros(fd, m * n, m * n);
        for (int j = 1; j <= m; ++j) {
            Mat block = Mat::zeros(fd, n, n);
            for (int i = 0; i <= m - j; ++i) block = block + x.pow(i) * p.coeff(i + j);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) g.at(r, (j - 1) * n + c) = block.at(r, c);
        }
        for (int r = 2; r <= m; ++r)
            for (int i = 0; i < n; ++i)
                g.at((r - 1) * n + i, (r - 2) * n + i) = -FieldElem::one(fd);

        // H(x): unipotent with -x e on the block subdiagonal.
        Mat h = Mat::identity(fd, m * n);
        for (int r = 2; r <= m; ++r)
            for (int i = 0; i < n; ++i) h.at((r - 1) * n + i, (r - 2) * n + i) = -x;

        Mat lhs = g * (scalar_matrix(fd, m * n, x) - x_comp);
        Mat rhs = Mat::identity(fd, m * n);
        Mat px = p.eval(x);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) rhs.at(r, c) = px.at(r, c);
        rhs = rhs * h;
        if (lhs != rhs) return false;
        certify(inverse(g).has_value(), "G(x) invertible");
        certify(inverse(h).has_value(), "H(x) invertible");
    }
    return true;
}

EuclidDivision euclid_divide(const MatPoly& p, const Mat& d) {
    require_monic(p, "euclid division");
    const FieldDescriptor& fd = p.descriptor();
    int n = p.size(), m = p.degree();
    if (d.rows() != n || d.cols() != n) fail(Errc::SizeMismatch, "euclid divisor size");

    // b_{m-1} = e and a_j = b_{j-1} - b_j d, solved downwards.
    std::vector<Mat> b(m, Mat::identity(fd, n));
    for (int j = m - 1; j >= 1; --j) b[j - 1] = p.coeff(j) + b[j] * d;
    Mat rem = p.coeff(0) + b[0] * d;
    MatPoly q(fd, n, b);

    // rem equals the right substitution sum_r A_r d^r.
    Mat direct = Mat::zeros(fd, n, n);
    Mat dp = Mat::identity(fd, n);
    for (int r = 0; r <= m; ++r) {
        direct = direct + p.coeff(r) * dp;
        dp = dp * d;
    }
    certify(rem == direct, "euclid remainder equals right substitution");

    MatPoly xe_minus_d(fd, n, {-d, Mat::identity(fd, n)});
    for (long s : {0L, 1L, -1L}) {
        FieldElem x = FieldElem::from_int(fd, s);
        certify(p.eval(x) == q.eval(x) * xe_minus_d.eval(x) + rem,
                "euclid identity at sample point");
    }
    return {std::move(q), std::move(rem)};
}

Factorization make_factorization(const MatPoly& p, std::vector<Mat> factors) {
    if (factors.empty()) fail(Errc::NotAFactorization, "empty factor list");
    certify(MatPoly::from_linear_factors(factors) == p,
            "factors multiply back to the pencil");
    return {std::move(factors)};
}

std::variant<Factorization, CannotFactor> factor_pencil(const MatPoly& p) {
    require_monic(p, "factor_pencil");
    const FieldDescriptor& fd = p.descriptor();
    if (fd.kind() == FieldKind::RationalFunctions)
        fail(Errc::PreconditionViolation, "factor_pencil supports Q and prime fields");
    int n = p.size(), m = p.degree();

    if (m == 1) return make_factorization(p, {-p.coeff(0)});

    Poly dp = det(to_poly_matrix(p));
    RootsResult rr = roots_in_field(dp);
    if (static_cast<int>(rr.roots.size()) != m * n)
        return CannotFactor{"det P does not have m*n distinct roots in the field",
                            rr.complete ? dp : rr.residual};

    Mat x = companion_matrix(p);
    std::vector<std::vector<FieldElem>> first_blocks;
    for (const FieldElem& lam : rr.roots) {
        Mat shifted = scalar_matrix(fd, m * n, lam) - x;
        auto kern = kernel_basis(shifted);
        certify(kern.size() == 1, "distinct roots give one-dimensional eigenspaces");
        first_blocks.emplace_back(kern[0].begin(), kern[0].begin() + n);
    }

    // Greedily pick n first blocks forming a basis (they span by the
    // companion expansion argument).
    std::vector<int> chosen;
    Mat basis = Mat::zeros(fd, n, n);
    int have = 0;
    for (std::size_t r = 0; r < first_blocks.size() && have < n; ++r) {
        Mat trial = basis;
        for (int i = 0; i < n; ++i) trial.at(i, have) = first_blocks[r][i];
        Mat probe = Mat::zeros(fd, n, have + 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= have; ++j) probe.at(i, j) = trial.at(i, j);
        if (rank(probe) == have + 1) {
            basis = trial;
            chosen.push_back(static_cast<int>(r));
            ++have;
        }
    }
    certify(have == n, "first eigenvector blocks contain a basis");

    // C_m with C_m u_r = lambda_r u_r on the chosen basis.
    Mat scaled = basis;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            scaled.at(i, j) = rr.roots[chosen[j]] * basis.at(i, j);
    std::optional<Mat> basis_inv = inverse(basis);
    certify(basis_inv.has_value(), "selected blocks form an invertible matrix");
    Mat c_m = scaled * *basis_inv;

    EuclidDivision div = euclid_divide(p, c_m);
    if (!div.remainder.is_zero())
        fail(Errc::InternalContradiction, "nonzero remainder after a valid basis step");

    auto rest = factor_pencil(div.quotient);
    if (std::holds_alternative<CannotFactor>(rest))
        fail(Errc::InternalContradiction, "quotient lost the distinct-roots property");
    std::vector<Mat> factors = std::get<Factorization>(rest).factors;
    factors.push_back(c_m);
    return make_factorization(p, std::move(factors));
}

Mat quad_eval(const Mat& u, const Mat& v, const Mat& w, const Mat& x) {
    return x * x + u * x + x * v + w;
}

bool is_central(const Mat& a) {
    a.require_square("centre test");
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j && !a.at(i, j).is_zero()) return false;
    for (int i = 1; i < a.rows(); ++i)
        if (a.at(i, i) != a.at(0, 0)) return false;
    return true;
}

QuadEquivResult quad_identity_equiv(const Mat& u, const Mat& v, const Mat& w,
                                    const Mat& u2, const Mat& v2, const Mat& w2) {
    const FieldDescriptor& fd = u.descriptor();
    int n = u.rows();
    bool equal = (w == w2) && (u - u2 == v2 - v) && is_central(u - u2);
    if (equal) return {true, std::nullopt};
    // Find a witness among 0, e and the matrix units.
    std::vector<Mat> candidates{Mat::zeros(fd, n, n), Mat::identity(fd, n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat unit = Mat::zeros(fd, n, n);
            unit.at(i, j) = FieldElem::one(fd);
            candidates.push_back(std::move(unit));
        }
    for (const Mat& x : candidates)
        if (quad_eval(u, v, w, x) != quad_eval(u2, v2, w2, x)) return {false, x};
    fail(Errc::InternalContradiction, "inequivalent quadratics with no witness");
}

QuadFactorizationResult quad_root_to_factorization(const Mat& a, const Mat& b, const Mat& c) {
    const FieldDescriptor& fd = a.descriptor();
    int n = a.rows();
    Mat residual = c * c - c * a + b;
    if (!residual.is_zero()) return {false, std::nullopt, residual};
    Mat d = a - c;
    MatPoly p(fd, n, {b, -a, Mat::identity(fd, n)});
    Factorization f = make_factorization(p, {c, d});
    return {true, std::move(f), std::nullopt};
}

std::vector<std::pair<Mat, Mat>> quad_factor_search(const Mat& u, const Mat& v, const Mat& w) {
    const FieldDescriptor& fd = u.descriptor();
    if (fd.kind() != FieldKind::PrimeField)
        fail(Errc::PreconditionViolation, "exhaustive search needs a prime field");
    int n = u.rows();
    long p = fd.modulus();
    double count = 1;
    for (int i = 0; i < n * n; ++i) count *= double(p);
    if (count > 81) fail(Errc::DomainTooLarge, "search space beyond p^(n^2) <= 81");
    long total = static_cast<long>(count);

    auto nth_matrix = [&](long idx) {
        Mat m = Mat::zeros(fd, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = FieldElem::from_int(fd, idx % p);
                idx /= p;
            }
        return m;
    };

    // (x - a)(x - b) = x^2 + (-a)x + x(-b) + ab as a ring identity.
    std::vector<std::pair<Mat, Mat>> found;
    for (long i = 0; i < total; ++i) {
        Mat a = nth_matrix(i);
        for (long j = 0; j < total; ++j) {
            Mat b = nth_matrix(j);
            if (quad_identity_equiv(u, v, w, -a, -b, a * b).equivalent)
                found.emplace_back(a, b);
        }
    }
    return found;
}

QuadUniquenessResult quad_uniqueness_check(const std::pair<Mat, Mat>& f1,
                                           const std::pair<Mat, Mat>& f2, const Mat& u,
                                           const Mat& v, const Mat& w) {
    auto certified = [&](const std::pair<Mat, Mat>& f) {
        return quad_identity_equiv(u, v, w, -f.first, -f.second, f.first * f.second)
            .equivalent;
    };
    if (!certified(f1) || !certified(f2))
        fail(Errc::NotAFactorization, "inputs are not factorizations of the quadratic");
    if (f1.first == f2.first && f1.second == f2.second)
        return {QuadUniqueness::Unique, std::nullopt};
    Mat c = f1.first - f1.second;
    bool swapped = (f2.first == f1.second) && (f2.second == f1.first) && is_central(c);
    if (!swapped)
        fail(Errc::InternalContradiction,
             "distinct factorizations must be the central swap over a field");
    return {QuadUniqueness::SwapWithCentralDifference, c};
}

}  // namespace algspec
