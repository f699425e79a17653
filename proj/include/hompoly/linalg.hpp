#ifndef HOMPOLY_LINALG_HPP
#define HOMPOLY_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hompoly/rational.hpp"

namespace hompoly {

using QVector = std::vector<Rational>;

/// Dense row-major rational matrix.
class QMatrix
{
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    QVector row_vector(std::size_t r) const { auto s = row(r); return {s.begin(), s.end()}; }
    QVector column(std::size_t c) const;

    QMatrix transpose() const;
    QVector operator*(const QVector& x) const;
    QMatrix operator*(const QMatrix& rhs) const;

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scale(const Rational& s, const QVector& a);
bool is_zero(const QVector& v);

/// Smallest positive multiple of `v` with coprime integer entries (zero stays zero).
std::vector<Integer> primitive_integer(std::span<const Rational> v);

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t rank(const QMatrix& m);

/// Reduced row echelon form without its zero rows; `pivots` receives the pivot column of each row.
QMatrix rref(const QMatrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Basis of {x : M x = 0}, one vector per free column (entry 1 there, 0 at other free columns).
std::vector<QVector> nullspace(const QMatrix& m);

struct SolveResult
{
    enum class Kind { unique, none, family };
    Kind kind = Kind::none;
    QVector particular;             // set for unique and family
    std::vector<QVector> nullspace; // set for family
};

/// Classifies and solves M x = rhs exactly.
SolveResult solve(const QMatrix& m, const QVector& rhs);

struct Hyperplane
{
    QVector normal;
    Rational offset;
    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

struct AffineHull
{
    QVector basepoint;
    std::vector<QVector> basis;       // spans Aff(X) - basepoint
    std::vector<Hyperplane> equations; // normal . x = offset cuts out Aff(X)
    std::vector<std::size_t> free_coords; // coordinates that parametrize Aff(X)
    std::size_t dim() const { return basis.size(); }
};

/// Affine hull of a nonempty point list of common dimension.
AffineHull affine_hull(const std::vector<QVector>& points);

} // namespace hompoly

#endif // HOMPOLY_LINALG_HPP
