#include "fkts/exactfield.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace fkts {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Rational parse_rational(std::string_view text, std::string_view whole)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
        throw Error("malformed scalar '" + std::string(whole) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(1);
    if (slash != std::string_view::npos) {
        d = mpz_class(std::string(den), 10);
        if (d == 0)
            throw Error("zero denominator in scalar '" + std::string(whole) + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string rational_str(const Rational& q)
{
    return q.get_str(10);
}

}  // namespace

Scalar::Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

Scalar Scalar::fraction(long p, long q)
{
    if (q == 0)
        throw Error("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return Scalar(r);
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw Error("division by zero");
    if (is_rational())
        return Scalar(Rational(1) / re_);
    Rational norm = re_ * re_ + im_ * im_;
    return Scalar(Rational(re_ / norm), Rational(-im_ / norm));
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    re_ += o.re_;
    if (sgn(o.im_) != 0)
        im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    re_ -= o.re_;
    if (sgn(o.im_) != 0)
        im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_zero())
        throw Error("division by zero");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        if (sgn(im_) != 0)
            im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string Scalar::str() const
{
    if (is_rational())
        return rational_str(re_);
    std::string out = rational_str(re_);
    if (sgn(im_) > 0)
        out += "+" + rational_str(im_) + "*i";
    else
        out += "-" + rational_str(Rational(-im_)) + "*i";
    return out;
}

Scalar Scalar::parse(std::string_view text)
{
    if (text.empty())
        throw Error("empty scalar");
    if (text.back() != 'i')
        return Scalar(parse_rational(text, text));

    // Imaginary part present. Split at the last sign that is not leading.
    std::string_view body = text.substr(0, text.size() - 1);
    if (!body.empty() && body.back() == '*')
        body.remove_suffix(1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    Rational re(0);
    std::string_view im_text = body;
    if (split != std::string_view::npos) {
        re = parse_rational(body.substr(0, split), text);
        im_text = body.substr(split);
    }
    Rational im;
    if (im_text.empty() || im_text == "+")
        im = 1;
    else if (im_text == "-")
        im = -1;
    else {
        // `r/s*i` requires the '*'; bare `3i` is rejected.
        if (text.size() < 2 || text[text.size() - 2] != '*')
            throw Error("malformed scalar '" + std::string(text) + "'");
        im = parse_rational(im_text, text);
    }
    return Scalar(re, im);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.str();
}

// ---------------------------------------------------------------------------

Vec zero_vec(std::size_t n)
{
    return Vec(n);
}

Vec unit_vec(std::size_t n, std::size_t i)
{
    Vec v(n);
    v.at(i) = 1;
    return v;
}

Vec operator+(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw DimensionError("vector sum of sizes " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    Vec out = a;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!b[k].is_zero())
            out[k] += b[k];
    return out;
}

Vec operator-(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw DimensionError("vector difference of sizes " + std::to_string(a.size()) + " and " +
                             std::to_string(b.size()));
    Vec out = a;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!b[k].is_zero())
            out[k] -= b[k];
    return out;
}

Vec operator*(const Scalar& s, const Vec& v)
{
    Vec out = v;
    if (s.is_one())
        return out;
    for (auto& x : out)
        if (!x.is_zero())
            x *= s;
    return out;
}

bool is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec concat(const Vec& a, const Vec& b)
{
    Vec out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::string to_string(const Vec& v)
{
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k)
            out += ",";
        out += v[k].str();
    }
    return out + "]";
}

// ---------------------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows * cols)
        throw DimensionError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " given " +
                             std::to_string(data_.size()) + " entries");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw DimensionError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        m(k, k) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows)
{
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw DimensionError("column " + std::to_string(c) + " has length " + std::to_string(cols[c].size()) +
                                 ", expected " + std::to_string(rows));
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::blocks(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d)
{
    const std::size_t n = a.rows();
    for (const Matrix* m : {&a, &b, &c, &d})
        if (m->rows() != n || m->cols() != n)
            throw DimensionError("blocks must all be " + std::to_string(n) + "x" + std::to_string(n));
    Matrix out(2 * n, 2 * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            out(r, s) = a(r, s);
            out(r, s + n) = b(r, s);
            out(r + n, s) = c(r, s);
            out(r + n, s + n) = d(r, s);
        }
    return out;
}

Matrix Matrix::block(std::size_t br, std::size_t bc) const
{
    if (rows_ != cols_ || rows_ % 2 != 0 || br > 1 || bc > 1)
        throw DimensionError("block() needs an even square matrix");
    const std::size_t n = rows_ / 2;
    Matrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
            out(r, s) = (*this)(br * n + r, bc * n + s);
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(c, r) = (*this)(r, c);
    return out;
}

Vec Matrix::column(std::size_t c) const
{
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix sum of shapes " + std::to_string(rows_) + "x" + std::to_string(cols_) + " and " +
                             std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!o.data_[k].is_zero())
            data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix difference of shapes " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                             " and " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!o.data_[k].is_zero())
            data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s)
{
    if (s.is_one())
        return *this;
    for (auto& x : data_)
        if (!x.is_zero())
            x *= s;
    return *this;
}

Matrix Matrix::operator-() const
{
    Matrix out = *this;
    for (auto& x : out.data_)
        if (!x.is_zero())
            x = -x;
    return out;
}

std::string Matrix::str() const
{
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r)
            out += ",";
        out += "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c)
                out += ",";
            out += (*this)(r, c).str();
        }
        out += "]";
    }
    return out + "]";
}

Matrix mat_mul(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& x = a(r, k);
            if (x.is_zero())
                continue;
            for (std::size_t c = 0; c < b.cols(); ++c) {
                const Scalar& y = b(k, c);
                if (!y.is_zero())
                    out(r, c) += x * y;
            }
        }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    return mat_mul(a, b);
}

Vec operator*(const Matrix& a, const Vec& v)
{
    if (a.cols() != v.size())
        throw DimensionError("cannot apply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " matrix to vector of length " + std::to_string(v.size()));
    Vec out(a.rows());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
            continue;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            const Scalar& x = a(r, k);
            if (!x.is_zero())
                out[r] += x * v[k];
        }
    }
    return out;
}

Matrix commutator(const Matrix& a, const Matrix& b)
{
    return a * b - b * a;
}

Matrix anticommutator(const Matrix& a, const Matrix& b)
{
    return a * b + b * a;
}

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (a(r, c).is_zero())
                continue;
            for (std::size_t s = 0; s < b.rows(); ++s)
                for (std::size_t t = 0; t < b.cols(); ++t)
                    out(r * b.rows() + s, c * b.cols() + t) = a(r, c) * b(s, t);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Gaussian elimination

namespace {

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t cols, std::size_t pivot_limit)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_limit && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero())
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[r], rows[p]);
        const Scalar inv = rows[r][c].inverse();
        for (std::size_t k = c; k < cols; ++k)
            if (!rows[r][k].is_zero())
                rows[r][k] *= inv;
        for (std::size_t q = 0; q < rows.size(); ++q) {
            if (q == r || rows[q][c].is_zero())
                continue;
            const Scalar f = rows[q][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!rows[r][k].is_zero())
                    rows[q][k] -= f * rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace

SpanBasis span_basis(const std::vector<Vec>& gens, std::size_t ambient_dim)
{
    const std::size_t n = gens.empty() ? ambient_dim : gens.front().size();
    for (const auto& g : gens)
        if (g.size() != n)
            throw DimensionError("span generators of differing lengths " + std::to_string(n) + " and " +
                                 std::to_string(g.size()));
    SpanBasis out(n);
    out.vectors_ = gens;
    out.pivots_ = rref(out.vectors_, n, n);
    return out;
}

std::optional<Vec> SpanBasis::coordinates(const Vec& target) const
{
    if (target.size() != ambient_dim_)
        throw DimensionError("target of length " + std::to_string(target.size()) + " against span in dimension " +
                             std::to_string(ambient_dim_));
    Vec coeffs(vectors_.size());
    for (std::size_t k = 0; k < pivots_.size(); ++k)
        coeffs[k] = target[pivots_[k]];
    if (combine(coeffs) != target)
        return std::nullopt;
    return coeffs;
}

Vec SpanBasis::combine(const Vec& coeffs) const
{
    Vec out(ambient_dim_);
    for (std::size_t k = 0; k < vectors_.size(); ++k) {
        if (coeffs[k].is_zero())
            continue;
        for (std::size_t c = 0; c < ambient_dim_; ++c)
            if (!vectors_[k][c].is_zero())
                out[c] += coeffs[k] * vectors_[k][c];
    }
    return out;
}

std::optional<Vec> solve_in_span(const Vec& target, const std::vector<Vec>& gens)
{
    const std::size_t n = target.size();
    for (const auto& g : gens)
        if (g.size() != n)
            throw DimensionError("generator of length " + std::to_string(g.size()) + " against target of length " +
                                 std::to_string(n));
    const std::size_t m = gens.size();
    // Augmented system: rows are coordinates, columns are generators then target.
    std::vector<Vec> rows(n, Vec(m + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < m; ++c)
            rows[r][c] = gens[c][r];
        rows[r][m] = target[r];
    }
    auto pivots = rref(rows, m + 1, m);
    Vec coeffs(m);
    for (std::size_t k = 0; k < pivots.size(); ++k)
        coeffs[pivots[k]] = rows[k][m];
    Vec recon(n);
    for (std::size_t c = 0; c < m; ++c) {
        if (coeffs[c].is_zero())
            continue;
        for (std::size_t r = 0; r < n; ++r)
            if (!gens[c][r].is_zero())
                recon[r] += coeffs[c] * gens[c][r];
    }
    // Inconsistent systems show up as a reconstruction mismatch.
    if (recon != target)
        return std::nullopt;
    return coeffs;
}

std::size_t rank(const Matrix& m)
{
    std::vector<Vec> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows[r].assign(m.entries().begin() + r * m.cols(), m.entries().begin() + (r + 1) * m.cols());
    return rref(rows, m.cols(), m.cols()).size();
}

std::vector<Vec> kernel(const Matrix& m)
{
    std::vector<Vec> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows[r].assign(m.entries().begin() + r * m.cols(), m.entries().begin() + (r + 1) * m.cols());
    auto pivots = rref(rows, m.cols(), m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vec v(m.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -rows[k][free];
        out.push_back(std::move(v));
    }
    return out;
}

Matrix inverse(const Matrix& a)
{
    if (!a.square())
        throw DimensionError("inverse of non-square " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    const std::size_t n = a.rows();
    std::vector<Vec> rows(n, Vec(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            rows[r][c] = a(r, c);
        rows[r][n + r] = 1;
    }
    auto pivots = rref(rows, 2 * n, n);
    if (pivots.size() != n)
        throw Error("matrix is singular");
    Matrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out(r, c) = rows[r][n + c];
    return out;
}

}  // namespace fkts
