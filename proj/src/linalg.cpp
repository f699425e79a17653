#include "hompoly/linalg.hpp"

#include <stdexcept>

namespace hompoly {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

IntRows integerize(const QMatrix& m)
{
    IntRows out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        out[r] = primitive_integer(m.row(r));
    return out;
}

// Fraction-free forward elimination in place. Returns the pivot columns;
// rows [0, pivots.size()) hold the echelon form afterwards.
std::vector<std::size_t> bareiss(IntRows& a, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(t);
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols)
{
    QMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

QMatrix QMatrix::identity(std::size_t n)
{
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

QVector QMatrix::column(std::size_t c) const
{
    QVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

QMatrix QMatrix::transpose() const
{
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

QVector QMatrix::operator*(const QVector& x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("matrix-vector dimension mismatch");
    QVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        y[r] = dot(row(r), x);
    return y;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product dimension mismatch");
    QMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (a.is_zero())
                continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c)
                out(r, c) += a * rhs(k, c);
        }
    return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot product dimension mismatch");
    mpq_class acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero())
            acc += a[i].raw() * b[i].raw();
    return Rational(acc.get_num(), acc.get_den());
}

QVector add(const QVector& a, const QVector& b)
{
    QVector out(a);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += b[i];
    return out;
}

QVector sub(const QVector& a, const QVector& b)
{
    QVector out(a);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= b[i];
    return out;
}

QVector scale(const Rational& s, const QVector& a)
{
    QVector out(a);
    for (auto& x : out)
        x *= s;
    return out;
}

bool is_zero(const QVector& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

std::vector<Integer> primitive_integer(std::span<const Rational> v)
{
    Integer l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
    std::vector<Integer> out(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].num() * (l / v[i].den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g > 1)
        for (auto& x : out)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

std::size_t rank(const QMatrix& m)
{
    IntRows a = integerize(m);
    return bareiss(a, m.cols()).size();
}

QMatrix rref(const QMatrix& m, std::vector<std::size_t>* pivots_out)
{
    IntRows a = integerize(m);
    const auto pivots = bareiss(a, m.cols());
    const std::size_t k = pivots.size();
    QMatrix r(k, m.cols());
    for (std::size_t i = 0; i < k; ++i) {
        const Integer& lead = a[i][pivots[i]];
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (a[i][c] != 0)
                r(i, c) = Rational(a[i][c], lead);
    }
    // Back elimination; rows are already scaled to a leading 1.
    for (std::size_t i = k; i-- > 0;) {
        for (std::size_t u = 0; u < i; ++u) {
            const Rational f = r(u, pivots[i]);
            if (f.is_zero())
                continue;
            for (std::size_t c = pivots[i]; c < m.cols(); ++c)
                if (!r(i, c).is_zero())
                    r(u, c) -= f * r(i, c);
        }
    }
    if (pivots_out)
        *pivots_out = pivots;
    return r;
}

std::vector<QVector> nullspace(const QMatrix& m)
{
    std::vector<std::size_t> pivots;
    const QMatrix r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        QVector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

SolveResult solve(const QMatrix& m, const QVector& rhs)
{
    if (rhs.size() != m.rows())
        throw std::invalid_argument("solve: rhs dimension mismatch");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[r];
    }
    std::vector<std::size_t> pivots;
    const QMatrix r = rref(aug, &pivots);
    SolveResult out;
    if (!pivots.empty() && pivots.back() == m.cols()) {
        out.kind = SolveResult::Kind::none;
        return out;
    }
    out.particular.assign(m.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        out.particular[pivots[i]] = r(i, m.cols());
    if (pivots.size() == m.cols()) {
        out.kind = SolveResult::Kind::unique;
        return out;
    }
    out.kind = SolveResult::Kind::family;
    out.nullspace = nullspace(m);
    return out;
}

AffineHull affine_hull(const std::vector<QVector>& points)
{
    if (points.empty())
        throw std::invalid_argument("affine_hull of an empty point set");
    const std::size_t d = points.front().size();
    AffineHull hull;
    hull.basepoint = points.front();

    std::vector<QVector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].size() != d)
            throw std::invalid_argument("affine_hull: mixed dimensions");
        diffs.push_back(sub(points[i], hull.basepoint));
    }
    const QMatrix span = rref(QMatrix::from_rows(diffs, d));
    for (std::size_t i = 0; i < span.rows(); ++i)
        hull.basis.push_back(span.row_vector(i));

    const auto normals = nullspace(span.rows() ? span : QMatrix(0, d));
    std::vector<std::size_t> pivots;
    const QMatrix eq = rref(QMatrix::from_rows(normals, d), &pivots);
    std::vector<bool> dependent(d, false);
    for (auto p : pivots)
        dependent[p] = true;
    for (std::size_t c = 0; c < d; ++c)
        if (!dependent[c])
            hull.free_coords.push_back(c);
    for (std::size_t i = 0; i < eq.rows(); ++i) {
        QVector normal = eq.row_vector(i);
        Rational offset = dot(normal, hull.basepoint);
        hull.equations.push_back({std::move(normal), std::move(offset)});
    }
    return hull;
}

} // namespace hompoly
