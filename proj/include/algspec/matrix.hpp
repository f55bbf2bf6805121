#pragma once

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

#include "algspec/poly.hpp"

namespace algspec {

// Dense exact matrix over a field (T = FieldElem) or a univariate polynomial
// ring over a field (T = Poly). Row-major storage, value semantics.
template <class T>
class Matrix {
public:
    Matrix(const FieldDescriptor& d, int rows, int cols, const T& fill)
        : desc_(d), rows_(rows), cols_(cols), e_(std::size_t(rows) * cols, fill) {
        if (rows <= 0 || cols <= 0) fail(Errc::PreconditionViolation, "matrix dimensions");
    }

    static Matrix zeros(const FieldDescriptor& d, int rows, int cols) {
        return Matrix(d, rows, cols, T::zero(d));
    }

    static Matrix identity(const FieldDescriptor& d, int n) {
        Matrix m = zeros(d, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T::one(d);
        return m;
    }

    const FieldDescriptor& descriptor() const { return desc_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& at(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }
    const T& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }

    bool is_zero() const {
        for (const T& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    T trace() const {
        require_square("trace");
        T s = T::zero(desc_);
        for (int i = 0; i < rows_; ++i) s = s + at(i, i);
        return s;
    }

    void require_square(const char* where) const {
        if (!is_square()) fail(Errc::NotSquare, where);
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b, "matrix add");
        Matrix out = a;
        for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] = out.e_[i] + b.e_[i];
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b, "matrix sub");
        Matrix out = a;
        for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] = out.e_[i] - b.e_[i];
        return out;
    }

    Matrix operator-() const {
        Matrix out = *this;
        for (T& x : out.e_) x = -x;
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.desc_ != b.desc_) fail(Errc::FieldMismatch, "matrix mul");
        if (a.cols_ != b.rows_) fail(Errc::SizeMismatch, "matrix mul shapes");
        Matrix out = zeros(a.desc_, a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j)
                    out.at(i, j) = out.at(i, j) + aik * b.at(k, j);
            }
        return out;
    }

    friend Matrix operator*(const T& c, const Matrix& a) {
        Matrix out = a;
        for (T& x : out.e_) x = c * x;
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.desc_ == b.desc_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    void require_same_shape(const Matrix& b, const char* where) const {
        if (desc_ != b.desc_) fail(Errc::FieldMismatch, where);
        if (rows_ != b.rows_ || cols_ != b.cols_) fail(Errc::SizeMismatch, where);
    }

    FieldDescriptor desc_;
    int rows_, cols_;
    std::vector<T> e_;
};

using Mat = Matrix<FieldElem>;
using PolyMat = Matrix<Poly>;

Mat mat_from_ints(const FieldDescriptor& d,
                  std::initializer_list<std::initializer_list<long>> rows);

Mat scalar_matrix(const FieldDescriptor& d, int n, const FieldElem& c);

// Exact determinant: Gaussian elimination over the field.
FieldElem det(const Mat& a);

// Exact determinant over F[x]: fraction-free Bareiss (divisions are exact).
Poly det(const PolyMat& a);

std::optional<Mat> inverse(const Mat& a);

// Inverse within M(n, F[x]): exists iff det is a nonzero constant; computed
// as adjugate over det.
std::optional<PolyMat> poly_ring_inverse(const PolyMat& a);

// Exact basis of the right null space, deterministic order (free columns
// ascending). Empty iff injective.
std::vector<std::vector<FieldElem>> kernel_basis(const Mat& a);

int rank(const Mat& a);

// One exact solution of A x = b (free variables set to zero), or nullopt if
// inconsistent.
std::optional<std::vector<FieldElem>> solve_linear(const Mat& a,
                                                   const std::vector<FieldElem>& b);

struct MinPolyResult {
    Poly poly;   // monic, poly(a) = 0 certified on construction
    int degree;
};

// Minimal monic annihilator via Krylov search: the first power of a that is
// linearly dependent on the earlier ones in the n^2-dimensional matrix space.
MinPolyResult min_poly(const Mat& a);

// Horner evaluation p(a), constant term times identity.
Mat matrix_poly_eval(const Poly& p, const Mat& a);

// det(z I - a) over F[z], computed by Bareiss; monic.
Poly char_poly(const Mat& a);

Mat mat_pow(const Mat& a, int e);

// Matrix of x -> a x on the space of rows(a) x cols matrices, in the
// row-major basis (cols defaults to the square case cols = rows(a)).
Mat left_mult_operator(const Mat& a, int cols = -1);
// Matrix of x -> x b on the space of rows x cols(b) matrices.
Mat right_mult_operator(const Mat& b, int rows = -1);

std::vector<FieldElem> flatten(const Mat& a);  // row-major vec
Mat unflatten(const FieldDescriptor& d, int rows, int cols,
              const std::vector<FieldElem>& v);

// Entrywise embedding of a field matrix as constant polynomials.
PolyMat to_poly_matrix(const Mat& a);

// Entrywise evaluation of a polynomial matrix at a point of the base field.
Mat eval_poly_matrix(const PolyMat& a, const FieldElem& s);

std::ostream& operator<<(std::ostream& os, const Mat& a);
std::ostream& operator<<(std::ostream& os, const PolyMat& a);

}  // namespace algspec
