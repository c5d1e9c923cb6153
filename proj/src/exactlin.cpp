#include "qlogic/exactlin.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qlogic {

Scalar Scalar::inverse() const
{
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (is_real()) return Scalar(1 / re_);
    mpq_class n = norm();
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_zero()) throw std::domain_error("division by zero scalar");
    if (o.is_real()) {
        re_ /= o.re_;
        if (sgn(im_) != 0) im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string Scalar::str() const
{
    if (is_real()) return re_.get_str();
    std::string out;
    if (sgn(re_) != 0) out = re_.get_str();
    if (im_ == 1) {
        out += out.empty() ? "i" : "+i";
    } else if (im_ == -1) {
        out += "-i";
    } else {
        if (!out.empty() && sgn(im_) > 0) out += "+";
        out += im_.get_str() + "*i";
    }
    return out;
}

namespace {

mpq_class parse_rational(const std::string& s, std::string_view whole)
{
    if (s.empty()) throw std::invalid_argument("bad scalar: " + std::string(whole));
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw std::invalid_argument("bad scalar: " + std::string(whole));
    mpq_class q;
    std::string t = s[0] == '+' ? s.substr(1) : s;
    if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad scalar: " + std::string(whole));
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(whole));
    q.canonicalize();
    return q;
}

} // namespace

Scalar Scalar::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty scalar");

    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/' && s[k - 1] != '*') {
            terms.push_back(s.substr(start, k - start));
            start = k;
        }
    }
    terms.push_back(s.substr(start));
    if (terms.size() > 2) throw std::invalid_argument("bad scalar: " + s);

    mpq_class re = 0, im = 0;
    bool have_re = false, have_im = false;
    for (std::string t : terms) {
        if (t.back() == 'i') {
            if (have_im) throw std::invalid_argument("bad scalar: " + s);
            have_im = true;
            t.pop_back();
            if (!t.empty() && t.back() == '*') t.pop_back();
            if (t.empty() || t == "+") im = 1;
            else if (t == "-") im = -1;
            else im = parse_rational(t, s);
        } else {
            if (have_re || have_im) throw std::invalid_argument("bad scalar: " + s);
            have_re = true;
            re = parse_rational(t, s);
        }
    }
    return Scalar(re, im);
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const
{
    return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::col(std::size_t j) const
{
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Matrix::append_row(const Vec& r)
{
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::conj_transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j).conj();
    return t;
}

Matrix Matrix::conj() const
{
    Matrix t = *this;
    for (auto& x : t.a_) x = x.conj();
    return t;
}

bool Matrix::is_real() const
{
    for (const auto& x : a_)
        if (!x.is_real()) return false;
    return true;
}

bool Matrix::is_zero() const
{
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) p.at(i, j) += a * b;
            }
        }
    return p;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix s = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) s.a_[k] += o.a_[k];
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    Matrix s = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) s.a_[k] -= o.a_[k];
    return s;
}

Matrix Matrix::scaled(const Scalar& c) const
{
    Matrix s = *this;
    for (auto& x : s.a_) x *= c;
    return s;
}

Vec Matrix::apply(const Vec& x) const
{
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    Vec y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
    return y;
}

std::string Matrix::str() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).str();
        os << ']';
    }
    os << ']';
    return os.str();
}

Matrix vstack(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    Matrix s(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) s.at(a.rows() + i, j) = b.at(i, j);
    return s;
}

Matrix hstack(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    Matrix s(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) s.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) s.at(i, a.cols() + j) = b.at(i, j);
    }
    return s;
}

Matrix rref(const Matrix& m, std::vector<std::size_t>& pivots)
{
    Matrix a = m;
    pivots.clear();
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a.at(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
        Scalar inv = a.at(r, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j)
            if (!a.at(r, j).is_zero()) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            Scalar f = a.at(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a.at(r, j).is_zero()) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix out(r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = std::move(a.at(i, j));
    return out;
}

Matrix rref(const Matrix& m)
{
    std::vector<std::size_t> piv;
    return rref(m, piv);
}

std::size_t rank(const Matrix& m) { return rref(m).rows(); }

Matrix nullspace(const Matrix& m)
{
    std::vector<std::size_t> piv;
    Matrix r = rref(m, piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    Matrix basis(0, m.cols());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec x(m.cols());
        x[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -r.at(i, f);
        basis.append_row(x);
    }
    return rref(basis);
}

std::optional<Vec> solve(const Matrix& m, const Vec& b)
{
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> piv;
    Matrix r = rref(aug, piv);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r.at(i, m.cols());
    return x;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b)
{
    if (b.rows() != m.rows()) throw std::invalid_argument("solve: rhs row mismatch");
    std::vector<std::size_t> piv;
    Matrix r = rref(hstack(m, b), piv);
    for (auto p : piv)
        if (p >= m.cols()) return std::nullopt;
    Matrix x(m.cols(), b.cols());
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(piv[i], j) = r.at(i, m.cols() + j);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols()) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, Matrix::identity(m.rows()));
}

Matrix conj_transpose(const Matrix& m) { return m.conj_transpose(); }

Scalar determinant(const Matrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    Matrix a = m;
    Scalar det = 1;
    std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a.at(p, c).is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
            det = -det;
        }
        det *= a.at(c, c);
        Scalar inv = a.at(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a.at(i, c).is_zero()) continue;
            Scalar f = a.at(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
        }
    }
    return det;
}

Scalar dot(const Vec& a, const Vec& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("dot length mismatch");
    Scalar s;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
    return s;
}

Scalar inner(const Vec& y, const Vec& x)
{
    if (y.size() != x.size()) throw std::invalid_argument("inner length mismatch");
    Scalar s;
    for (std::size_t k = 0; k < y.size(); ++k)
        if (!y[k].is_zero() && !x[k].is_zero()) s += y[k] * x[k].conj();
    return s;
}

} // namespace qlogic
