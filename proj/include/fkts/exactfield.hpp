#pragma once

// Exact arithmetic over Q(i) and the small dense linear algebra built on it.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fkts {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shapes or dimensions do not agree.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug rather than bad input.
class StructuralError : public Error {
public:
    using Error::Error;
};

using Rational = mpq_class;

/// Gaussian rational re + im*i. Both parts are kept canonical by GMP, so
/// equality is structural.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}                      // NOLINT(google-explicit-constructor)
    Scalar(int v) : re_(v) {}                       // NOLINT(google-explicit-constructor)
    Scalar(const Rational& re) : re_(re) {}         // NOLINT(google-explicit-constructor)
    Scalar(Rational re, Rational im);

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    /// p/q with q != 0.
    static Scalar fraction(long p, long q);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_rational() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// Multiplicative inverse; throws Error on zero.
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical text form: `p/q`, `p`, or `a+b*i` / `a-b*i`.
    std::string str() const;
    /// Parses the text form. Accepts `p`, `p/q`, `p/q+r/s*i`, `p/q-r/s*i`, `r/s*i`, `i`.
    static Scalar parse(std::string_view text);

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
bool is_zero(const Vec& v);
Vec concat(const Vec& a, const Vec& b);
std::string to_string(const Vec& v);

/// Dense row-major matrix over Q(i).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    /// Matrix whose columns are the given vectors (all of equal length).
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);
    /// 2x2 block matrix [[a, b], [c, d]]; all blocks square of the same size.
    static Matrix blocks(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<Scalar>& entries() const { return data_; }

    /// Sub-block of size (n x n) at block position (br, bc), for a 2n x 2n matrix.
    Matrix block(std::size_t br, std::size_t bc) const;
    Matrix transpose() const;
    Vec column(std::size_t c) const;
    Vec flatten() const { return data_; }
    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
    Matrix operator-() const;

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// `[[a,b],[c,d]]` with exact scalars.
    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Exact product; throws DimensionError naming both shapes when a.cols != b.rows.
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, const Vec& v);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);
/// Inverse of a square matrix; throws Error when singular.
Matrix inverse(const Matrix& a);
/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Canonical basis of a span: reduced row echelon form, one vector per row.
class SpanBasis {
public:
    SpanBasis() = default;
    explicit SpanBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dimension() const { return vectors_.size(); }
    const std::vector<Vec>& vectors() const { return vectors_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Coefficients of `target` against vectors(), or nullopt when outside the span.
    std::optional<Vec> coordinates(const Vec& target) const;
    bool contains(const Vec& target) const { return coordinates(target).has_value(); }
    Vec combine(const Vec& coeffs) const;

    friend bool operator==(const SpanBasis& a, const SpanBasis& b)
    {
        return a.ambient_dim_ == b.ambient_dim_ && a.vectors_ == b.vectors_;
    }

private:
    friend SpanBasis span_basis(const std::vector<Vec>& gens, std::size_t ambient_dim);

    std::size_t ambient_dim_ = 0;
    std::vector<Vec> vectors_;
    std::vector<std::size_t> pivots_;
};

/// Reduced echelon basis of span(gens). `ambient_dim` is only consulted when gens is empty.
SpanBasis span_basis(const std::vector<Vec>& gens, std::size_t ambient_dim = 0);

/// Coefficients c with sum c_i gens_i = target, nonzero only on the leftmost
/// independent subset of gens; nullopt when target is outside the span.
std::optional<Vec> solve_in_span(const Vec& target, const std::vector<Vec>& gens);

/// Rank of the matrix.
std::size_t rank(const Matrix& m);
/// Basis of the null space {v : m v = 0}, in reduced form.
std::vector<Vec> kernel(const Matrix& m);

}  // namespace fkts
