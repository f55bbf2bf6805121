#include "algspec/matrix.hpp"

namespace algspec {

Mat mat_from_ints(const FieldDescriptor& d,
                  std::initializer_list<std::initializer_list<long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = static_cast<int>(rows.begin()->size());
    Mat m = Mat::zeros(d, r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            fail(Errc::PreconditionViolation, "ragged matrix literal");
        int j = 0;
        for (long v : row) m.at(i, j++) = FieldElem::from_int(d, v);
        ++i;
    }
    return m;
}

Mat scalar_matrix(const FieldDescriptor& d, int n, const FieldElem& c) {
    Mat m = Mat::zeros(d, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
}

FieldElem det(const Mat& a) {
    a.require_square("determinant");
    const FieldDescriptor& d = a.descriptor();
    int n = a.rows();
    Mat m = a;
    bool negate = false;
    FieldElem acc = FieldElem::one(d);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!m.at(i, k).is_zero()) { pivot = i; break; }
        if (pivot < 0) return FieldElem::zero(d);
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
            negate = !negate;
        }
        acc = acc * m.at(k, k);
        FieldElem inv_p = m.at(k, k).inv();
        for (int i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            FieldElem f = m.at(i, k) * inv_p;
            for (int j = k; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
        }
    }
    return negate ? -acc : acc;
}

Poly det(const PolyMat& a) {
    a.require_square("determinant");
    const FieldDescriptor& d = a.descriptor();
    int n = a.rows();
    if (n == 1) return a.at(0, 0);
    PolyMat m = a;
    bool negate = false;
    Poly prev = Poly::one(d);
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) { pivot = i; break; }
            if (pivot < 0) return Poly::zero(d);
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = poly_exact_div(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j),
                                            prev);
        prev = m.at(k, k);
    }
    Poly r = m.at(n - 1, n - 1);
    return negate ? -r : r;
}

namespace {

// Row-reduce [a | rhs] in place to reduced row echelon form; returns pivot
// column of each pivot row. First-nonzero pivot choice, deterministic.
std::vector<int> rref(Mat& m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (!m.at(i, c).is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        FieldElem inv_p = m.at(r, c).inv();
        for (int j = 0; j < cols; ++j) m.at(r, j) = inv_p * m.at(r, j);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            FieldElem f = m.at(i, c);
            for (int j = 0; j < cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::optional<Mat> inverse(const Mat& a) {
    a.require_square("inverse");
    const FieldDescriptor& d = a.descriptor();
    int n = a.rows();
    Mat aug = Mat::zeros(d, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = FieldElem::one(d);
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
    Mat out = Mat::zeros(d, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

std::optional<PolyMat> poly_ring_inverse(const PolyMat& a) {
    a.require_square("poly-ring inverse");
    const FieldDescriptor& d = a.descriptor();
    int n = a.rows();
    Poly dt = det(a);
    if (dt.is_zero() || dt.degree() > 0) return std::nullopt;
    FieldElem scale = dt.coeff(0).inv();
    PolyMat out = PolyMat::zeros(d, n, n);
    if (n == 1) {
        out.at(0, 0) = Poly::constant(scale);
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                PolyMat minor = PolyMat::zeros(d, n - 1, n - 1);
                for (int r = 0, rr = 0; r < n; ++r) {
                    if (r == i) continue;
                    for (int c = 0, cc = 0; c < n; ++c) {
                        if (c == j) continue;
                        minor.at(rr, cc++) = a.at(r, c);
                    }
                    ++rr;
                }
                Poly cof = det(minor);
                if ((i + j) % 2) cof = -cof;
                out.at(j, i) = Poly::constant(scale) * cof;  // adjugate transposes
            }
    }
    certify(a * out == PolyMat::identity(d, n), "poly-ring inverse certificate");
    return out;
}

std::vector<std::vector<FieldElem>> kernel_basis(const Mat& a) {
    const FieldDescriptor& d = a.descriptor();
    Mat m = a;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElem>> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElem> v(a.cols(), FieldElem::zero(d));
        v[free] = FieldElem::one(d);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(int(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(const Mat& a) {
    Mat m = a;
    return static_cast<int>(rref(m).size());
}

std::optional<std::vector<FieldElem>> solve_linear(const Mat& a,
                                                   const std::vector<FieldElem>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        fail(Errc::SizeMismatch, "solve_linear right-hand side");
    const FieldDescriptor& d = a.descriptor();
    Mat aug = Mat::zeros(d, a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[std::size_t(i)];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
    std::vector<FieldElem> x(a.cols(), FieldElem::zero(d));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), a.cols());
    return x;
}

std::vector<FieldElem> flatten(const Mat& a) {
    std::vector<FieldElem> v;
    v.reserve(std::size_t(a.rows()) * a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) v.push_back(a.at(i, j));
    return v;
}

Mat unflatten(const FieldDescriptor& d, int rows, int cols,
              const std::vector<FieldElem>& v) {
    if (v.size() != std::size_t(rows) * cols) fail(Errc::SizeMismatch, "unflatten");
    Mat m = Mat::zeros(d, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = v[std::size_t(i) * cols + j];
    return m;
}

MinPolyResult min_poly(const Mat& a) {
    a.require_square("minimum polynomial");
    const FieldDescriptor& d = a.descriptor();
    int n = a.rows();
    int dim = n * n;
    std::vector<std::vector<FieldElem>> powers;  // vec(a^0), vec(a^1), ...
    Mat p = Mat::identity(d, n);
    powers.push_back(flatten(p));
    for (int k = 1; k <= n; ++k) {
        p = p * a;
        std::vector<FieldElem> target = flatten(p);
        Mat sys = Mat::zeros(d, dim, k);
        for (int col = 0; col < k; ++col)
            for (int row = 0; row < dim; ++row) sys.at(row, col) = powers[col][row];
        if (auto sol = solve_linear(sys, target)) {
            std::vector<FieldElem> cs;
            cs.reserve(k + 1);
            for (int i = 0; i < k; ++i) cs.push_back(-(*sol)[i]);
            cs.push_back(FieldElem::one(d));
            Poly m(d, std::move(cs));
            certify(matrix_poly_eval(m, a).is_zero(), "minimum polynomial annihilates");
            return {m, k};
        }
        powers.push_back(std::move(target));
    }
    // Unreachable for square matrices: Cayley-Hamilton bounds the degree by n.
    fail(Errc::InternalContradiction, "no annihilating polynomial up to degree n");
}

Mat matrix_poly_eval(const Poly& p, const Mat& a) {
    a.require_square("polynomial evaluation");
    if (p.descriptor() != a.descriptor()) fail(Errc::FieldMismatch, "matrix_poly_eval");
    const FieldDescriptor& d = a.descriptor();
    int n = a.rows();
    Mat acc = Mat::zeros(d, n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * a;
        FieldElem c = p.coeff(i);
        if (!c.is_zero())
            for (int k = 0; k < n; ++k) acc.at(k, k) = acc.at(k, k) + c;
    }
    return acc;
}

Poly char_poly(const Mat& a) {
    a.require_square("characteristic polynomial");
    const FieldDescriptor& d = a.descriptor();
    int n = a.rows();
    PolyMat zia = PolyMat::zeros(d, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly e = Poly::constant(-a.at(i, j));
            if (i == j) e = e + Poly::variable(d);
            zia.at(i, j) = e;
        }
    return det(zia);
}

Mat mat_pow(const Mat& a, int e) {
    a.require_square("matrix power");
    Mat acc = Mat::identity(a.descriptor(), a.rows());
    Mat base = a;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Mat left_mult_operator(const Mat& a, int cols) {
    a.require_square("left multiplication operator");
    const FieldDescriptor& d = a.descriptor();
    int n = a.rows();
    int m2 = cols < 0 ? n : cols;
    int dim = n * m2;
    Mat op = Mat::zeros(d, dim, dim);
    // Column (k, l) is vec(a E_{k,l}); (a E_{k,l})_{i,l} = a_{i,k}.
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < m2; ++l)
            for (int i = 0; i < n; ++i) op.at(i * m2 + l, k * m2 + l) = a.at(i, k);
    return op;
}

Mat right_mult_operator(const Mat& b, int rows) {
    b.require_square("right multiplication operator");
    const FieldDescriptor& d = b.descriptor();
    int n = b.cols();
    int m2 = rows < 0 ? n : rows;
    int dim = m2 * n;
    Mat op = Mat::zeros(d, dim, dim);
    // Column (k, l) is vec(E_{k,l} b); (E_{k,l} b)_{k,j} = b_{l,j}.
    for (int k = 0; k < m2; ++k)
        for (int l = 0; l < n; ++l)
            for (int j = 0; j < n; ++j) op.at(k * n + j, k * n + l) = b.at(l, j);
    return op;
}

PolyMat to_poly_matrix(const Mat& a) {
    PolyMat out = PolyMat::zeros(a.descriptor(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = Poly::constant(a.at(i, j));
    return out;
}

Mat eval_poly_matrix(const PolyMat& a, const FieldElem& s) {
    Mat out = Mat::zeros(a.descriptor(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = poly_eval(a.at(i, j), s);
    return out;
}

}  // namespace algspec
