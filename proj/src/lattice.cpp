#include "qlogic/lattice.hpp"

#include <stdexcept>

namespace qlogic {

namespace {

void check_ambient(const Subspace& a, const Subspace& b)
{
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("ambient dimension mismatch: " + std::to_string(a.ambient()) +
                                    " vs " + std::to_string(b.ambient()));
}

} // namespace

Subspace Subspace::zero(std::size_t d)
{
    Subspace s;
    s.d_ = d;
    s.basis_ = Matrix(0, d);
    return s;
}

Subspace Subspace::full(std::size_t d)
{
    Subspace s;
    s.d_ = d;
    s.basis_ = Matrix::identity(d);
    return s;
}

Subspace Subspace::span(std::size_t d, const std::vector<Vec>& vectors)
{
    return row_space(Matrix::from_rows(vectors, d));
}

Subspace Subspace::row_space(const Matrix& m)
{
    Subspace s;
    s.d_ = m.cols();
    s.basis_ = rref(m);
    return s;
}

Subspace Subspace::column_space(const Matrix& m) { return row_space(m.transpose()); }

bool Subspace::contains(const Vec& v) const
{
    if (v.size() != d_) throw std::invalid_argument("vector length differs from ambient dimension");
    Matrix m = basis_;
    m.append_row(v);
    return rank(m) == dim();
}

bool Subspace::leq(const Subspace& other) const
{
    check_ambient(*this, other);
    return join(*this, other).dim() == other.dim();
}

Matrix Subspace::as_square_matrix() const
{
    Matrix m(d_, d_);
    for (std::size_t k = 0; k < dim(); ++k)
        for (std::size_t i = 0; i < d_; ++i) m.at(i, k) = basis_.at(k, i);
    return m;
}

std::string Subspace::key() const { return std::to_string(d_) + ":" + basis_.str(); }

std::string Subspace::str() const
{
    if (dim() == 0) return "0";
    if (dim() == d_) return "1";
    return "span" + basis_.str();
}

Subspace complement(const Subspace& s)
{
    return Subspace::row_space(nullspace(s.basis().conj()));
}

Subspace meet(const Subspace& a, const Subspace& b)
{
    check_ambient(a, b);
    if (a.is_zero() || b.is_full()) return a;
    if (b.is_zero() || a.is_full()) return b;
    Matrix ann = vstack(nullspace(a.basis()), nullspace(b.basis()));
    return Subspace::row_space(nullspace(ann));
}

Subspace join(const Subspace& a, const Subspace& b)
{
    check_ambient(a, b);
    if (a.is_zero() || b.is_full()) return b;
    if (b.is_zero() || a.is_full()) return a;
    return Subspace::row_space(vstack(a.basis(), b.basis()));
}

Subspace semicommutator(const Subspace& x, const Subspace& y)
{
    return join(meet(x, y), meet(x, complement(y)));
}

Subspace commutator(const Subspace& x, const Subspace& y)
{
    Subspace nx = complement(x), ny = complement(y);
    return join(join(meet(x, y), meet(x, ny)), join(meet(nx, y), meet(nx, ny)));
}

bool commutes(const Subspace& x, const Subspace& y) { return semicommutator(x, y) == x; }

Subspace project(const Subspace& x, const Subspace& z) { return meet(z, join(x, complement(z))); }

Subspace complexify(const Subspace& s)
{
    if (!s.is_real()) throw std::invalid_argument("complexify expects a real subspace");
    return s;
}

Subspace realify(const Subspace& s)
{
    std::size_t d = s.ambient();
    Matrix m(0, 2 * d);
    for (std::size_t k = 0; k < s.dim(); ++k) {
        Vec a(2 * d), b(2 * d);
        for (std::size_t j = 0; j < d; ++j) {
            const Scalar& x = s.basis().at(k, j);
            a[j] = x.re();
            a[d + j] = x.im();
            b[j] = Scalar(mpq_class(-x.im()));
            b[d + j] = x.re();
        }
        m.append_row(a);
        m.append_row(b);
    }
    return Subspace::row_space(m);
}

Subspace direct_sum(const Subspace& a, const Subspace& b)
{
    std::size_t d1 = a.ambient(), d2 = b.ambient();
    Matrix m(a.dim() + b.dim(), d1 + d2);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < d1; ++j) m.at(i, j) = a.basis().at(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < d2; ++j) m.at(a.dim() + i, d1 + j) = b.basis().at(i, j);
    return Subspace::row_space(m);
}

Subspace embed(const Subspace& s, std::size_t extra) { return direct_sum(s, Subspace::zero(extra)); }

bool same_subspace(const Subspace& a, const Subspace& b)
{
    if (a.ambient() != b.ambient()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!b.contains(a.basis().row(i))) return false;
    for (std::size_t i = 0; i < b.dim(); ++i)
        if (!a.contains(b.basis().row(i))) return false;
    return true;
}

} // namespace qlogic
