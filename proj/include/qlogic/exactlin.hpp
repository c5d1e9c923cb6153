#ifndef QLOGIC_EXACTLIN_HPP
#define QLOGIC_EXACTLIN_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qlogic {

// Gaussian rational re + im*i with canonical GMP fractions.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(const mpq_class& re) : re_(re) {}
    Scalar(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {}

    static Scalar imag_unit() { return Scalar(0, 1); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    Scalar inverse() const;

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // "a/b", "c/d*i", "a/b+c/d*i"; the unit imaginary prints as "i".
    std::string str() const;
    static Scalar parse(std::string_view text);

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

using Vec = std::vector<Scalar>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<Scalar>& entries() const { return a_; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    void append_row(const Vec& r);

    Matrix transpose() const;
    Matrix conj_transpose() const;
    Matrix conj() const;
    bool is_real() const;
    bool is_zero() const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    Vec apply(const Vec& x) const;

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> a_;
};

Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);

// Reduced row echelon form with zero rows dropped.
Matrix rref(const Matrix& m);
Matrix rref(const Matrix& m, std::vector<std::size_t>& pivots);
std::size_t rank(const Matrix& m);

// Rows span {x : m * x^T = 0}, returned in rref.
Matrix nullspace(const Matrix& m);

std::optional<Vec> solve(const Matrix& m, const Vec& b);
// Some X with m * X = b for a matrix right-hand side.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

Matrix conj_transpose(const Matrix& m);
Scalar determinant(const Matrix& m);

Scalar dot(const Vec& a, const Vec& b);    // sum a_k * b_k
Scalar inner(const Vec& y, const Vec& x);  // sum y_k * conj(x_k)

} // namespace qlogic

#endif
