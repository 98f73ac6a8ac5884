#include "fkts/structurable.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace fkts {

namespace {

int mod3(int j)
{
    return ((j - 1) % 3 + 3) % 3 + 1;
}

std::string lbl(std::initializer_list<std::size_t> idx)
{
    std::string s;
    for (auto i : idx)
        s += (s.empty() ? "" : ",") + basis_label(i);
    return s;
}

Matrix d3_first(const StructurableAlgebra& a, const Vec& x, const Vec& y)
{
    const Vec xb = a.bar(x), yb = a.bar(y);
    return a.r(a.mul(xb, y) - a.mul(yb, x)) + a.l(y) * a.l(xb) - a.l(x) * a.l(yb);
}

Matrix d3_second(const StructurableAlgebra& a, const Vec& x, const Vec& y)
{
    const Vec xb = a.bar(x), yb = a.bar(y);
    return a.l(a.mul(y, xb) - a.mul(x, yb)) + a.r(y) * a.r(xb) - a.r(x) * a.r(yb);
}

/// d_j(e_a, e_b) for j = 1..3, without the consistency throw.
class DTable {
public:
    explicit DTable(const StructurableAlgebra& a) : n_(a.dim())
    {
        for (int j = 1; j <= 3; ++j)
            for (std::size_t p = 0; p < n_; ++p)
                for (std::size_t q = 0; q < n_; ++q) {
                    const Vec x = unit_vec(n_, p), y = unit_vec(n_, q);
                    const Vec xb = a.bar(x), yb = a.bar(y);
                    Matrix m = j == 1   ? a.l(yb) * a.l(x) - a.l(xb) * a.l(y)
                               : j == 2 ? a.r(yb) * a.r(x) - a.r(xb) * a.r(y)
                                        : d3_first(a, x, y);
                    t_[j - 1].push_back(std::move(m));
                }
    }
    const Matrix& at(int j, std::size_t p, std::size_t q) const { return t_[mod3(j) - 1][p * n_ + q]; }
    /// d_j(x, y) for arbitrary vectors
    Matrix of(int j, const Vec& x, const Vec& y) const
    {
        Matrix out(n_, n_);
        for (std::size_t p = 0; p < n_; ++p) {
            if (x[p].is_zero())
                continue;
            for (std::size_t q = 0; q < n_; ++q)
                if (!y[q].is_zero())
                    out += at(j, p, q) * (x[p] * y[q]);
        }
        return out;
    }

private:
    std::size_t n_;
    std::array<std::vector<Matrix>, 3> t_;
};

Matrix anticommutator_of(const Matrix& a, const Matrix& b)
{
    return a * b + b * a;
}

}  // namespace

// ---------------------------------------------------------------------------

StructurableAlgebra::StructurableAlgebra(std::size_t dim, std::vector<Vec> product, Matrix involution, Vec unit)
    : dim_(dim), product_(std::move(product)), inv_(std::move(involution)), unit_(std::move(unit))
{
    if (dim == 0)
        throw DimensionError("algebra dimension must be positive");
    if (product_.size() != dim * dim)
        throw DimensionError("product table must have " + std::to_string(dim * dim) + " entries");
    for (const auto& v : product_)
        if (v.size() != dim)
            throw DimensionError("product vectors must have dimension " + std::to_string(dim));
    if (inv_.rows() != dim || inv_.cols() != dim)
        throw DimensionError("involution must be " + std::to_string(dim) + "x" + std::to_string(dim));
    if (unit_.size() != dim)
        throw DimensionError("unit must have dimension " + std::to_string(dim));
}

bool StructurableAlgebra::gaussian() const
{
    auto nonreal = [](const Scalar& s) { return !s.is_rational(); };
    for (const auto& v : product_)
        for (const auto& s : v)
            if (nonreal(s))
                return true;
    for (const auto& s : inv_.entries())
        if (nonreal(s))
            return true;
    for (const auto& s : unit_)
        if (nonreal(s))
            return true;
    return false;
}

Vec StructurableAlgebra::mul(const Vec& x, const Vec& y) const
{
    if (x.size() != dim_ || y.size() != dim_)
        throw DimensionError("algebra elements must have dimension " + std::to_string(dim_));
    Vec out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!y[j].is_zero())
                out = out + (x[i] * y[j]) * basis_product(i, j);
    }
    return out;
}

Matrix StructurableAlgebra::l(const Vec& x) const
{
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < dim_; ++k)
        cols.push_back(mul(x, unit_vec(dim_, k)));
    return Matrix::from_columns(cols, dim_);
}

Matrix StructurableAlgebra::r(const Vec& x) const
{
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < dim_; ++k)
        cols.push_back(mul(unit_vec(dim_, k), x));
    return Matrix::from_columns(cols, dim_);
}

Matrix d_op(const StructurableAlgebra& a, int j, const Vec& x, const Vec& y)
{
    const Vec xb = a.bar(x), yb = a.bar(y);
    switch (mod3(j)) {
    case 1:
        return a.l(yb) * a.l(x) - a.l(xb) * a.l(y);
    case 2:
        return a.r(yb) * a.r(x) - a.r(xb) * a.r(y);
    default: {
        Matrix first = d3_first(a, x, y);
        Matrix second = d3_second(a, x, y);
        if (first != second)
            throw StructuralError("the two expressions for d_3(" + to_string(x) + "," + to_string(y) +
                                  ") differ: " + first.str() + " vs " + second.str());
        return first;
    }
    }
}

VerificationReport validate_algebra(const StructurableAlgebra& a)
{
    const std::size_t n = a.dim();
    const Vec& e = a.unit();
    VerificationReport r;

    Sweep unit(r, "structurable.unit", "ex = xe = x");
    for (std::size_t i = 0; i < n; ++i) {
        const Vec x = unit_vec(n, i);
        Vec res = a.mul(e, x) - x;
        Vec res2 = a.mul(x, e) - x;
        unit.record(is_zero(res) && is_zero(res2), [&] { return lbl({i}); },
                    [&] { return "ex - x = " + to_string(res) + ", xe - x = " + to_string(res2); });
    }
    unit.finish();

    const Matrix sq = a.involution() * a.involution();
    r.check(sq == Matrix::identity(n), "structurable.involution_square", "involution squares to Id", sq.str());
    r.check(a.bar(e) == e, "structurable.involution_unit", "ebar = e", to_string(a.bar(e)));
    Sweep anti(r, "structurable.involution_antihom", "bar(xy) = ybar xbar");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec x = unit_vec(n, i), y = unit_vec(n, j);
            Vec res = a.bar(a.mul(x, y)) - a.mul(a.bar(y), a.bar(x));
            anti.record(is_zero(res), [&] { return lbl({i, j}); }, [&] { return "residual " + to_string(res); });
        }
    anti.finish();

    const DTable d(a);
    Sweep skew(r, "structurable.skew", "d_j(x,y) = -d_j(y,x)");
    Sweep forms(r, "structurable.d3_forms", "both expressions of d_3 agree");
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            for (int j = 1; j <= 3; ++j) {
                Matrix res = d.at(j, p, q) + d.at(j, q, p);
                skew.record(res.is_zero(), [&] { return "d" + std::to_string(j) + "," + lbl({p, q}); },
                            [&] { return "residual " + res.str(); });
            }
            const Vec x = unit_vec(n, p), y = unit_vec(n, q);
            Matrix diff = d3_first(a, x, y) - d3_second(a, x, y);
            forms.record(diff.is_zero(), [&] { return lbl({p, q}); }, [&] { return "difference " + diff.str(); });
        }
    skew.finish();
    forms.finish();

    Sweep tri(r, "structurable.triality", "bar(d_j(u,v))(xy) = (d_{j+1}(u,v)x)y + x(d_{j+2}(u,v)y)");
    Sweep c5(r, "structurable.d_conjugation", "bar(d_j)(x,y) = d_{3-j}(xbar,ybar)");
    for (int j = 1; j <= 3; ++j)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                const Matrix dj = a.bar_op(d.at(j, u, v));
                Matrix cres = dj - d.of(3 - j, a.bar(unit_vec(n, u)), a.bar(unit_vec(n, v)));
                c5.record(cres.is_zero(), [&] { return "j" + std::to_string(j) + "," + lbl({u, v}); },
                          [&] { return "residual " + cres.str(); });
                const Matrix& d1 = d.at(j + 1, u, v);
                const Matrix& d2 = d.at(j + 2, u, v);
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t y = 0; y < n; ++y) {
                        const Vec ex = unit_vec(n, x), ey = unit_vec(n, y);
                        Vec res = dj * a.mul(ex, ey) - a.mul(d1 * ex, ey) - a.mul(ex, d2 * ey);
                        tri.record(
                            is_zero(res), [&] { return "j" + std::to_string(j) + "," + lbl({u, v, x, y}); },
                            [&] { return "residual " + to_string(res); });
                    }
            }
    tri.finish();
    c5.finish();

    Sweep a5(r, "structurable.d3_cyclic", "d_3(x,y)z + d_3(y,z)x + d_3(z,x)y = 0");
    Sweep b5(r, "structurable.d_sum", "d_1(xbar,yz) + d_2(ybar,zx) + d_3(zbar,xy) = 0");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const Vec ex = unit_vec(n, x), ey = unit_vec(n, y), ez = unit_vec(n, z);
                Vec res = d.at(3, x, y) * ez + d.at(3, y, z) * ex + d.at(3, z, x) * ey;
                a5.record(is_zero(res), [&] { return lbl({x, y, z}); }, [&] { return "residual " + to_string(res); });
                Matrix m = d.of(1, a.bar(ex), a.mul(ey, ez)) + d.of(2, a.bar(ey), a.mul(ez, ex)) +
                           d.of(3, a.bar(ez), a.mul(ex, ey));
                b5.record(m.is_zero(), [&] { return lbl({x, y, z}); }, [&] { return "residual " + m.str(); });
            }
    a5.finish();
    b5.finish();

    Sweep d5(r, "structurable.d_commutator",
             "[d_j(u,v), d_k(x,y)] = d_k(d_{j-k}(u,v)x, y) + d_k(x, d_{j-k}(u,v)y)");
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k)
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v) {
                    const Matrix& duv = d.at(j, u, v);
                    const Matrix& djk = d.at(j - k, u, v);
                    for (std::size_t x = 0; x < n; ++x)
                        for (std::size_t y = 0; y < n; ++y) {
                            const Vec ex = unit_vec(n, x), ey = unit_vec(n, y);
                            Matrix res = fkts::commutator(duv, d.at(k, x, y)) - d.of(k, djk * ex, ey) -
                                         d.of(k, ex, djk * ey);
                            d5.record(
                                res.is_zero(),
                                [&] {
                                    return "j" + std::to_string(j) + ",k" + std::to_string(k) + "," + lbl({u, v, x, y});
                                },
                                [&] { return "residual " + res.str(); });
                        }
                }
    d5.finish();
    return r;
}

TripleSystem make_structurable_fkts(const StructurableAlgebra& a)
{
    const std::size_t n = a.dim();
    std::map<TensorKey, Scalar> c;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
                const Vec xb = a.bar(x), yb = a.bar(y);
                Vec v = a.mul(a.mul(z, yb), x) - a.mul(a.mul(z, xb), y) + a.mul(a.mul(x, yb), z);
                for (std::size_t l = 0; l < n; ++l)
                    if (!v[l].is_zero())
                        c[{i, j, k, l}] = v[l];
            }
    return TripleSystem(Sign::minus, Sign::plus, n, std::move(c));
}

// ---------------------------------------------------------------------------

TTriple TTriple::generator(const StructurableAlgebra& a, int l, const Vec& x, const Vec& y)
{
    return {{d_op(a, l + 1, x, y), d_op(a, l + 2, x, y), d_op(a, l + 3, x, y)}};
}

Vec TTriple::flatten() const
{
    Vec out;
    for (const auto& m : d)
        out.insert(out.end(), m.entries().begin(), m.entries().end());
    return out;
}

TTriple TTriple::unflatten(const Vec& v, std::size_t n)
{
    if (v.size() != 3 * n * n)
        throw DimensionError("flattened triple must have length " + std::to_string(3 * n * n));
    TTriple t;
    for (std::size_t s = 0; s < 3; ++s)
        t.d[s] = Matrix(n, n, Vec(v.begin() + static_cast<std::ptrdiff_t>(s * n * n),
                                  v.begin() + static_cast<std::ptrdiff_t>((s + 1) * n * n)));
    return t;
}

TTriple& TTriple::operator+=(const TTriple& o)
{
    for (std::size_t s = 0; s < 3; ++s)
        d[s] += o.d[s];
    return *this;
}

std::string TTriple::str() const
{
    return "(" + d[0].str() + ", " + d[1].str() + ", " + d[2].str() + ")";
}

TTriple commutator(const TTriple& a, const TTriple& b)
{
    return {{fkts::commutator(a.d[0], b.d[0]), fkts::commutator(a.d[1], b.d[1]), fkts::commutator(a.d[2], b.d[2])}};
}

S4Element S4Element::rho_of(int j, const Vec& x)
{
    S4Element e = zero(x.size());
    e.rho[static_cast<std::size_t>(mod3(j) - 1)] = x;
    return e;
}

S4Element S4Element::from_t(TTriple t)
{
    const std::size_t n = t.d[0].rows();
    return {{Vec(n), Vec(n), Vec(n)}, std::move(t)};
}

bool S4Element::is_zero() const
{
    return fkts::is_zero(rho[0]) && fkts::is_zero(rho[1]) && fkts::is_zero(rho[2]) && t.is_zero();
}

S4Element& S4Element::operator+=(const S4Element& o)
{
    for (std::size_t s = 0; s < 3; ++s)
        rho[s] = rho[s] + o.rho[s];
    t += o.t;
    return *this;
}

S4Element operator*(const Scalar& s, S4Element a)
{
    for (auto& v : a.rho)
        v = s * v;
    a.t = s * a.t;
    return a;
}

std::string S4Element::str() const
{
    return "rho(" + to_string(rho[0]) + ", " + to_string(rho[1]) + ", " + to_string(rho[2]) + ") + T" + t.str();
}

// ---------------------------------------------------------------------------

S4Element S4LieAlgebra::bracket(const S4Element& a, const S4Element& b) const
{
    const auto& g = gammas_;
    const StructurableAlgebra& A = source_;
    S4Element out = S4Element::zero(n());
    out.t = commutator(a.t, b.t);
    for (int i = 1; i <= 3; ++i) {
        const int j = mod3(i + 1), k = mod3(i + 2);
        const auto si = static_cast<std::size_t>(i - 1), sj = static_cast<std::size_t>(j - 1),
                   sk = static_cast<std::size_t>(k - 1);
        // [rho_i(x), rho_i(y)] = g_j/g_k T_{3-i}(x,y)
        if (!fkts::is_zero(a.rho[si]) && !fkts::is_zero(b.rho[si]))
            out.t += (g[sj] / g[sk]) * TTriple::generator(A, 3 - i, a.rho[si], b.rho[si]);
        // [rho_i(x), rho_j(y)] = -g_j/g_i rho_k(bar(xy))
        const Scalar c = -(g[sj] / g[si]);
        out.rho[sk] = out.rho[sk] + c * A.bar(A.mul(a.rho[si], b.rho[sj])) - c * A.bar(A.mul(b.rho[si], a.rho[sj]));
        // [T, rho_i(x)] = rho_i(D_i x)
        out.rho[si] = out.rho[si] + a.t.d[si] * b.rho[si] - b.t.d[si] * a.rho[si];
    }
    return out;
}

std::optional<Vec> S4LieAlgebra::coordinates(const S4Element& e) const
{
    auto c = t_basis_.coordinates(e.t.flatten());
    if (!c)
        return std::nullopt;
    Vec out;
    for (const auto& v : e.rho)
        out.insert(out.end(), v.begin(), v.end());
    out.insert(out.end(), c->begin(), c->end());
    return out;
}

S4Element S4LieAlgebra::element(const Vec& coords) const
{
    if (coords.size() != total_dim())
        throw DimensionError("coordinate vector has length " + std::to_string(coords.size()));
    S4Element out = S4Element::zero(n());
    for (std::size_t a = 0; a < coords.size(); ++a)
        if (!coords[a].is_zero())
            out += coords[a] * basis_[a];
    return out;
}

S4LieAlgebra build_s4_lie(const StructurableAlgebra& a, const std::array<Scalar, 3>& gammas)
{
    for (const auto& g : gammas)
        if (g.is_zero())
            throw Error("gamma parameters must be nonzero");
    if (!validate_algebra(a).ok())
        throw Error("algebra fails the structurable checks; see validate_algebra");
    const std::size_t n = a.dim();
    S4LieAlgebra L(a, gammas);

    std::vector<Vec> gens;
    for (int l = 1; l <= 3; ++l)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                gens.push_back(TTriple::generator(a, l, unit_vec(n, p), unit_vec(n, q)).flatten());
    L.t_basis_ = span_basis(gens, 3 * n * n);
    for (int j = 1; j <= 3; ++j)
        for (std::size_t p = 0; p < n; ++p)
            L.basis_.push_back(S4Element::rho_of(j, unit_vec(n, p)));
    for (const auto& v : L.t_basis_.vectors())
        L.basis_.push_back(S4Element::from_t(TTriple::unflatten(v, n)));

    const std::size_t d = L.total_dim();
    L.table_.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            S4Element br = L.bracket(L.basis_[i], L.basis_[j]);
            auto c = L.coordinates(br);
            if (!c)
                throw StructuralError("bracket of basis elements b" + std::to_string(i + 1) + ", b" +
                                      std::to_string(j + 1) + " leaves the triple span: " + br.str());
            L.table_.push_back(std::move(*c));
        }

    VerificationReport& r = L.report_;
    Sweep b6(r, "s4lie.T_sum", "T_1(xbar,yz) + T_2(ybar,zx) + T_3(zbar,xy) = 0");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const Vec ex = unit_vec(n, x), ey = unit_vec(n, y), ez = unit_vec(n, z);
                TTriple s = TTriple::generator(a, 1, a.bar(ex), a.mul(ey, ez)) +
                            TTriple::generator(a, 2, a.bar(ey), a.mul(ez, ex)) +
                            TTriple::generator(a, 3, a.bar(ez), a.mul(ex, ey));
                b6.record(s.is_zero(), [&] { return lbl({x, y, z}); }, [&] { return "residual " + s.str(); });
            }
    b6.finish();

    Sweep c7(r, "s4lie.T_on_rho", "[T_l(u,v), rho_j(x)] = rho_j(d_{j+l}(u,v)x)");
    for (int l = 1; l <= 3; ++l)
        for (int j = 1; j <= 3; ++j)
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v)
                    for (std::size_t x = 0; x < n; ++x) {
                        const Vec eu = unit_vec(n, u), ev = unit_vec(n, v), ex = unit_vec(n, x);
                        S4Element lhs =
                            L.bracket(S4Element::from_t(TTriple::generator(a, l, eu, ev)), S4Element::rho_of(j, ex));
                        S4Element res = lhs - S4Element::rho_of(j, d_op(a, j + l, eu, ev) * ex);
                        c7.record(
                            res.is_zero(),
                            [&] { return "l" + std::to_string(l) + ",j" + std::to_string(j) + "," + lbl({u, v, x}); },
                            [&] { return "residual " + res.str(); });
                    }
    c7.finish();

    // [v, b_c] for a coordinate vector v
    auto bracket_with = [&](const Vec& v, std::size_t c) {
        Vec out(d);
        for (std::size_t k = 0; k < d; ++k)
            if (!v[k].is_zero())
                out = out + v[k] * L.basis_bracket(k, c);
        return out;
    };
    Sweep anti(r, "s4lie.antisymmetry", "[a,b] = -[b,a]");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec res = L.basis_bracket(i, j) + L.basis_bracket(j, i);
            anti.record(is_zero(res), [&] { return std::to_string(i + 1) + "][" + std::to_string(j + 1); },
                        [&] { return "residual " + to_string(res); });
        }
    anti.finish();
    Sweep jac(r, "s4lie.jacobi", "[[a,b],c] + [[b,c],a] + [[c,a],b] = 0");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec res = bracket_with(L.basis_bracket(i, j), k) + bracket_with(L.basis_bracket(j, k), i) +
                          bracket_with(L.basis_bracket(k, i), j);
                jac.record(
                    is_zero(res),
                    [&] { return std::to_string(i + 1) + "][" + std::to_string(j + 1) + "][" + std::to_string(k + 1); },
                    [&] { return "residual " + to_string(res); });
            }
    jac.finish();

    for (const char* id : {"s4lie.antisymmetry", "s4lie.jacobi"})
        if (r.failed(id)) {
            for (const auto& e : r.entries())
                if (e.status == Status::fail && e.check_id.rfind(id, 0) == 0)
                    throw StructuralError(e.check_id + " fails: " + e.witness.value_or(""));
        }
    return L;
}

VerificationReport s4_action_check(const S4LieAlgebra& L)
{
    for (const auto& g : L.gammas())
        if (!g.is_one())
            throw Error("the S4 action is defined for gammas = (1,1,1)");
    const StructurableAlgebra& A = L.source();
    const std::size_t n = L.n();
    using Map = std::function<S4Element(const S4Element&)>;

    const Map cycle = [](const S4Element& e) {
        S4Element o = e;
        o.rho = {e.rho[2], e.rho[0], e.rho[1]};
        o.t.d = {e.t.d[2], e.t.d[0], e.t.d[1]};
        return o;
    };
    const Map tau = [&A](const S4Element& e) {
        S4Element o = e;
        o.rho = {-1 * A.bar(e.rho[1]), -1 * A.bar(e.rho[0]), -1 * A.bar(e.rho[2])};
        o.t.d = {A.bar_op(e.t.d[1]), A.bar_op(e.t.d[0]), A.bar_op(e.t.d[2])};
        return o;
    };
    auto klein = [](std::size_t fixed) {
        return Map([fixed](const S4Element& e) {
            S4Element o = e;
            for (std::size_t s = 0; s < 3; ++s)
                if (s != fixed)
                    o.rho[s] = -1 * e.rho[s];
            return o;
        });
    };
    const Map tau1 = klein(0), tau2 = klein(1), tau3 = klein(2);
    const Map id = [](const S4Element& e) { return e; };
    auto compose = [](std::vector<Map> ms) {
        return Map([ms](const S4Element& e) {
            S4Element o = e;
            for (auto it = ms.rbegin(); it != ms.rend(); ++it)
                o = (*it)(o);
            return o;
        });
    };

    VerificationReport r;
    const std::pair<const char*, Map> maps[] = {
        {"cycle", cycle}, {"tau", tau}, {"tau1", tau1}, {"tau2", tau2}, {"tau3", tau3}};
    const std::size_t d = L.total_dim();
    for (const auto& [name, m] : maps) {
        Sweep s(r, std::string("s4.automorphism.") + name, "m[a,b] = [ma,mb]");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                S4Element res = m(L.element(L.basis_bracket(i, j))) - L.bracket(m(L.basis()[i]), m(L.basis()[j]));
                s.record(res.is_zero(), [&] { return "b" + std::to_string(i + 1) + ",b" + std::to_string(j + 1); },
                         [&] { return "residual " + res.str(); });
            }
        s.finish();
    }

    auto relation = [&](const std::string& id, const std::string& detail, const Map& lhs, const Map& rhs) {
        Sweep s(r, "s4.relation." + id, detail);
        for (std::size_t i = 0; i < d; ++i) {
            S4Element res = lhs(L.basis()[i]) - rhs(L.basis()[i]);
            s.record(res.is_zero(), [&] { return "b" + std::to_string(i + 1); }, [&] { return "residual " + res.str(); });
        }
        s.finish();
    };
    relation("cycle_cubed", "cycle^3 = Id", compose({cycle, cycle, cycle}), id);
    relation("tau_squared", "tau^2 = Id", compose({tau, tau}), id);
    relation("tau_cycle", "tau cycle tau = cycle^-1", compose({tau, cycle, tau}), compose({cycle, cycle}));
    const std::pair<const char*, Map> ks[] = {{"tau1", tau1}, {"tau2", tau2}, {"tau3", tau3}};
    for (const auto& [a, ma] : ks) {
        relation(std::string(a) + "_squared", std::string(a) + "^2 = Id", compose({ma, ma}), id);
        for (const auto& [b, mb] : ks)
            if (std::string(a) < std::string(b))
                relation(std::string(a) + "_" + b + "_commute", std::string(a) + b + " = " + b + a, compose({ma, mb}),
                         compose({mb, ma}));
    }
    relation("tau1_tau2_tau3", "tau1 tau2 tau3 = Id", compose({tau1, tau2, tau3}), id);

    Sweep gen(r, "s4.generator_action", "cycle: T_j -> T_{j-1}; tau: T_1 <-> T_2(xbar,ybar), T_3 -> T_3(xbar,ybar)");
    for (int j = 1; j <= 3; ++j)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                const Vec x = unit_vec(n, p), y = unit_vec(n, q);
                const S4Element tj = S4Element::from_t(TTriple::generator(A, j, x, y));
                S4Element c = cycle(tj) - S4Element::from_t(TTriple::generator(A, j - 1, x, y));
                const int tj_image = j == 1 ? 2 : j == 2 ? 1 : 3;
                S4Element t =
                    tau(tj) - S4Element::from_t(TTriple::generator(A, tj_image, A.bar(x), A.bar(y)));
                gen.record(c.is_zero() && t.is_zero(),
                           [&] { return "T" + std::to_string(j) + "," + lbl({p, q}); },
                           [&] { return "cycle residual " + c.str() + "; tau residual " + t.str(); });
            }
    gen.finish();
    return r;
}

// ---------------------------------------------------------------------------

void EmbeddingParams::validate() const
{
    if (alpha.is_zero() || beta.is_zero() || k.is_zero())
        throw Error("alpha, beta, k must be nonzero");
    for (const auto& g : gammas)
        if (g.is_zero())
            throw Error("gamma parameters must be nonzero");
    const Scalar r1 = gammas[1] / gammas[2] + Scalar(2) * alpha * beta;
    if (!r1.is_zero())
        throw Error("gamma_2/gamma_3 = -2 alpha beta violated: residual " + r1.str());
    const Scalar r2 = gammas[2] * gammas[2] / (gammas[0] * gammas[1]) + k * k;
    if (!r2.is_zero())
        throw Error("gamma_3^2/(gamma_1 gamma_2) = -k^2 violated: residual " + r2.str());
}

EmbeddingParams EmbeddingParams::s4_symmetric()
{
    EmbeddingParams p;
    p.alpha = 1;
    p.beta = Scalar::fraction(-1, 2);
    p.k = Scalar::i();
    p.gammas = {Scalar(1), Scalar(1), Scalar(1)};
    return p;
}

Embedding::Embedding(const StructurableAlgebra& a, const EmbeddingParams& p)
    : a_(a), p_(p), t_(make_structurable_fkts(a))
{
    p_.validate();
}

HatElement Embedding::rho(int j, const Vec& x) const
{
    const Scalar& al = p_.alpha;
    const Scalar& be = p_.beta;
    const Scalar& k = p_.k;
    const std::size_t n = a_.dim();
    const Vec xb = a_.bar(x);
    switch (mod3(j)) {
    case 1:
        return HatElement::from_odd({al * x, be * x});
    case 2:
        return HatElement::from_odd({(k * al) * xb, -(k * be) * xb});
    default: {
        const Matrix plus = a_.l(x + xb), minus = a_.l(x - xb);
        const Scalar c = k * p_.gammas[0] / p_.gammas[1];
        Matrix m = Matrix::blocks(plus * (al * be), minus * (al * al), minus * (-(be * be)), plus * (-(al * be)));
        return HatElement{m * c, Vec(2 * n)};
    }
    }
}

HatElement Embedding::T(int j, const Vec& x, const Vec& y) const
{
    const Scalar& al = p_.alpha;
    const Scalar& be = p_.beta;
    const std::size_t n = a_.dim();
    const Scalar c = p_.gammas[2] / p_.gammas[1];
    const bool printed = p_.convention == SignConvention::as_printed;
    switch (mod3(j)) {
    case 1: {
        const Vec xb = a_.bar(x), yb = a_.bar(y);
        const Matrix M = operator_L(t_, xb, yb) - operator_L(t_, yb, xb);
        const Matrix K = operator_K(t_, xb, yb);
        const Scalar s = printed ? Scalar(1) : Scalar(-1);
        return HatElement::from_even(
            Matrix::blocks(M * (al * be), K * (s * al * al), K * (-(be * be)), M * (al * be)) * c);
    }
    case 2: {
        const Matrix M = operator_L(t_, x, y) - operator_L(t_, y, x);
        const Matrix K = operator_K(t_, x, y);
        const Scalar s = printed ? Scalar(-1) : Scalar(1);
        return HatElement::from_even(Matrix::blocks(M * (al * be), K * (s * al * al), K * (be * be), M * (al * be)) * c);
    }
    default: {
        Matrix m = commutator(rho(3, x).even, rho(3, y).even) * (p_.gammas[1] / p_.gammas[0]);
        return HatElement{std::move(m), Vec(2 * n)};
    }
    }
}

HatElement Embedding::T_via_d(int j, const Vec& x, const Vec& y) const
{
    const Scalar& al = p_.alpha;
    const Scalar& be = p_.beta;
    const Matrix dj = d_op(a_, j + 1, x, y);
    const Matrix db = d_op(a_, 1 - j, a_.bar(x), a_.bar(y));
    const Matrix P = dj + db, Q = dj - db;
    const Scalar c = -(p_.gammas[2] / p_.gammas[1]);
    return HatElement::from_even(Matrix::blocks(P * (al * be), Q * (al * al), Q * (be * be), P * (al * be)) * c);
}

namespace {

/// s with a = s b, when it exists and b != 0.
std::optional<Scalar> ratio(const HatElement& a, const HatElement& b)
{
    std::optional<Scalar> s;
    const auto& ae = a.even.entries();
    const auto& be = b.even.entries();
    for (std::size_t i = 0; i < be.size() && !s; ++i)
        if (!be[i].is_zero())
            s = ae[i] / be[i];
    for (std::size_t i = 0; i < b.odd.size() && !s; ++i)
        if (!b.odd[i].is_zero())
            s = a.odd[i] / b.odd[i];
    if (!s || !(a - *s * b).is_zero())
        return std::nullopt;
    return s;
}

std::string mismatch(const HatElement& lhs, const HatElement& rhs_unit, const Scalar& expected)
{
    auto s = ratio(lhs, rhs_unit);
    if (s)
        return "expected coefficient " + expected.str() + ", computed " + s->str();
    return "not proportional; residual " + (lhs - expected * rhs_unit).str();
}

}  // namespace

VerificationReport embed_theorem31(const StructurableAlgebra& a, const EmbeddingParams& p)
{
    const Embedding emb(a, p);
    const TripleSystem& t = emb.system();
    const std::size_t n = a.dim();
    const auto& g = p.gammas;
    VerificationReport r;
    r.pass("embed.params", "alpha=" + p.alpha.str() + " beta=" + p.beta.str() + " k=" + p.k.str() + " gammas=(" +
                               g[0].str() + "," + g[1].str() + "," + g[2].str() + "); " +
                               (p.convention == SignConvention::corrected ? "corrected" : "as-printed") +
                               " sign convention");

    SweepOptions opts;
    opts.max_dim = std::max<std::size_t>(opts.max_dim, n);
    const GradedLie G = build_graded_lie(t, opts);
    Sweep mem(r, "embed.membership", "rho_3(x) and T_j(x,y) lie in L(W,W)");
    for (std::size_t x = 0; x < n; ++x) {
        const Vec ex = unit_vec(n, x);
        const HatElement r3 = emb.rho(3, ex);
        mem.record(G.coordinates(r3).has_value(), [&] { return "rho3," + lbl({x}); }, [&] { return r3.str(); });
        for (std::size_t y = 0; y < n; ++y)
            for (int j = 1; j <= 3; ++j) {
                const HatElement tj = emb.T(j, ex, unit_vec(n, y));
                mem.record(G.coordinates(tj).has_value(), [&] { return "T" + std::to_string(j) + "," + lbl({x, y}); },
                           [&] { return tj.str(); });
            }
    }
    mem.finish();
    if (r.failed("embed.membership"))
        throw StructuralError("embedding leaves L(W,W) + W; see embed.membership");

    auto br = [&](const HatElement& u, const HatElement& v) { return hat_bracket(t, u, v); };

    Sweep a7(r, "embed.rho_rho_same", "[rho_i(x), rho_i(y)] = g_j/g_k T_{3-i}(x,y)");
    std::array<std::optional<Scalar>, 3> b_coeff{};
    std::array<bool, 3> b_consistent{true, true, true};
    Sweep b7(r, "embed.rho_rho_cross", "[rho_i(x), rho_j(y)] = -g_j/g_i rho_k(bar(xy))");
    for (int i = 1; i <= 3; ++i) {
        const int j = mod3(i + 1), k = mod3(i + 2);
        const Scalar ca = g[static_cast<std::size_t>(j - 1)] / g[static_cast<std::size_t>(k - 1)];
        const Scalar cb = -(g[static_cast<std::size_t>(j - 1)] / g[static_cast<std::size_t>(i - 1)]);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const Vec ex = unit_vec(n, x), ey = unit_vec(n, y);
                const HatElement lhs = br(emb.rho(i, ex), emb.rho(i, ey));
                const HatElement unit = emb.T(3 - i, ex, ey);
                a7.record((lhs - ca * unit).is_zero(), [&] { return "i" + std::to_string(i) + "," + lbl({x, y}); },
                          [&] { return mismatch(lhs, unit, ca); });

                const HatElement lhs2 = br(emb.rho(i, ex), emb.rho(j, ey));
                const HatElement unit2 = emb.rho(k, a.bar(a.mul(ex, ey)));
                b7.record((lhs2 - cb * unit2).is_zero(),
                          [&] { return "i" + std::to_string(i) + ",j" + std::to_string(j) + "," + lbl({x, y}); },
                          [&] { return mismatch(lhs2, unit2, cb); });
                if (!unit2.is_zero()) {
                    auto s = ratio(lhs2, unit2);
                    auto& slot = b_coeff[static_cast<std::size_t>(i - 1)];
                    if (!s || (slot && *slot != *s))
                        b_consistent[static_cast<std::size_t>(i - 1)] = false;
                    else
                        slot = s;
                }
            }
    }
    a7.finish();
    b7.finish();
    std::string coeffs;
    for (int i = 1; i <= 3; ++i) {
        const int j = mod3(i + 1);
        const auto si = static_cast<std::size_t>(i - 1);
        const Scalar expected = -(g[static_cast<std::size_t>(j - 1)] / g[si]);
        coeffs += (coeffs.empty() ? "" : "; ") + std::string("[rho") + std::to_string(i) + ",rho" + std::to_string(j) +
                  "]: expected " + expected.str() + ", computed " +
                  (b_consistent[si] && b_coeff[si] ? b_coeff[si]->str() : std::string("n/a"));
    }
    r.pass("embed.rho_rho_cross_coefficients", coeffs);

    Sweep c7(r, "embed.T_rho", "[T_l(u,v), rho_j(x)] = rho_j(d_{j+l}(u,v)x)");
    Sweep d7(r, "embed.T_T", "[T_l(u,v), T_m(x,y)] = T_m(x, d_{l-m}(u,v)y) + T_m(d_{l-m}(u,v)x, y)");
    for (int l = 1; l <= 3; ++l)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                const Vec eu = unit_vec(n, u), ev = unit_vec(n, v);
                const HatElement tl = emb.T(l, eu, ev);
                for (int j = 1; j <= 3; ++j)
                    for (std::size_t x = 0; x < n; ++x) {
                        const Vec ex = unit_vec(n, x);
                        HatElement res = br(tl, emb.rho(j, ex)) - emb.rho(j, d_op(a, j + l, eu, ev) * ex);
                        c7.record(
                            res.is_zero(),
                            [&] { return "l" + std::to_string(l) + ",j" + std::to_string(j) + "," + lbl({u, v, x}); },
                            [&] { return "residual " + res.str(); });
                    }
                for (int m = 1; m <= 3; ++m) {
                    const Matrix D = d_op(a, l - m, eu, ev);
                    for (std::size_t x = 0; x < n; ++x)
                        for (std::size_t y = 0; y < n; ++y) {
                            const Vec ex = unit_vec(n, x), ey = unit_vec(n, y);
                            HatElement res = br(tl, emb.T(m, ex, ey)) - emb.T(m, ex, D * ey) - emb.T(m, D * ex, ey);
                            d7.record(
                                res.is_zero(),
                                [&] {
                                    return "l" + std::to_string(l) + ",m" + std::to_string(m) + "," + lbl({u, v, x, y});
                                },
                                [&] { return "residual " + res.str(); });
                        }
                }
            }
    c7.finish();
    d7.finish();

    Sweep b6(r, "embed.T_sum", "T_1(xbar,yz) + T_2(ybar,zx) + T_3(zbar,xy) = 0");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const Vec ex = unit_vec(n, x), ey = unit_vec(n, y), ez = unit_vec(n, z);
                HatElement s = emb.T(1, a.bar(ex), a.mul(ey, ez)) + emb.T(2, a.bar(ey), a.mul(ez, ex)) +
                               emb.T(3, a.bar(ez), a.mul(ex, ey));
                b6.record(s.is_zero(), [&] { return lbl({x, y, z}); }, [&] { return "residual " + s.str(); });
            }
    b6.finish();
    return r;
}

// ---------------------------------------------------------------------------

VerificationReport check_lemmas(const StructurableAlgebra& a, const std::optional<EmbeddingParams>& params)
{
    const TripleSystem t = make_structurable_fkts(a);
    const std::size_t n = a.dim();
    const Vec& e = a.unit();
    const DTable d(a);
    VerificationReport r;
    auto L = [&](const Vec& x, const Vec& y) { return operator_L(t, x, y); };
    auto K = [&](const Vec& x, const Vec& y) { return operator_K(t, x, y); };
    auto l = [&](const Vec& x) { return a.l(x); };

    Sweep s17a(r, "lemmas.L_symmetric", "L(x,y) + L(y,x) = l(x ybar + y xbar)");
    Sweep s17b(r, "lemmas.L_antisymmetric", "L(x,y) - L(y,x) = -d_2(xbar,ybar) - d_0(x,y)");
    Sweep s17c(r, "lemmas.K_via_d", "K(x,y) = d_2(xbar,ybar) - d_0(x,y)");
    Sweep s17c2(r, "lemmas.K_via_l", "K(x,y) = l(x ybar - y xbar)");
    Sweep s20a(r, "lemmas.d1_difference", "d_1(x,y) - d_1(xbar,ybar) = K(x,y) - K(xbar,ybar)");
    Sweep s20b(r, "lemmas.d1_sum", "d_1(x,y) + d_1(xbar,ybar) = L(y,x) - L(x,y) + L(e, xbar y) - L(xbar y, e)");
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const Vec x = unit_vec(n, p), y = unit_vec(n, q);
            const Vec xb = a.bar(x), yb = a.bar(y);
            auto label = [&] { return lbl({p, q}); };
            auto rec = [&](Sweep& s, const Matrix& res) {
                s.record(res.is_zero(), label, [&] { return "residual " + res.str(); });
            };
            rec(s17a, L(x, y) + L(y, x) - l(a.mul(x, yb) + a.mul(y, xb)));
            rec(s17b, L(x, y) - L(y, x) + d.of(2, xb, yb) + d.at(3, p, q));
            rec(s17c, K(x, y) - (d.of(2, xb, yb) - d.at(3, p, q)));
            rec(s17c2, K(x, y) - l(a.mul(x, yb) - a.mul(y, xb)));
            rec(s20a, d.at(1, p, q) - d.of(1, xb, yb) - (K(x, y) - K(xb, yb)));
            const Vec xby = a.mul(xb, y);
            rec(s20b, d.at(1, p, q) + d.of(1, xb, yb) - (L(y, x) - L(x, y) + L(e, xby) - L(xby, e)));
        }
    s17a.finish();
    s17b.finish();
    s17c.finish();
    s17c2.finish();
    s20a.finish();
    s20b.finish();

    Sweep s16a(r, "lemmas.l_plus", "l(x + xbar) = L(e,x) + L(x,e)");
    Sweep s16b(r, "lemmas.l_minus", "l(x - xbar) = K(x,e) = -K(e,x)");
    for (std::size_t p = 0; p < n; ++p) {
        const Vec x = unit_vec(n, p), xb = a.bar(x);
        Matrix ra = l(x + xb) - L(e, x) - L(x, e);
        s16a.record(ra.is_zero(), [&] { return lbl({p}); }, [&] { return "residual " + ra.str(); });
        Matrix rb = l(x - xb) - K(x, e);
        Matrix rc = K(x, e) + K(e, x);
        s16b.record(rb.is_zero() && rc.is_zero(), [&] { return lbl({p}); },
                    [&] { return "residuals " + rb.str() + ", " + rc.str(); });
    }
    s16a.finish();
    s16b.finish();

    // commutator / anticommutator identities from triality, for j = 1, 2, 3;
    // j = 3 and j = 2 are the (a, b) and (c, d) pairs
    for (int j = 1; j <= 3; ++j) {
        Sweep cm(r, "lemmas.triality_commutator_j" + std::to_string(j),
                 "[d_{3-j}(xbar,ybar) + d_{j+2}(x,y), l(z)] = l((d_{j+1}(x,y) + d_{2-j}(xbar,ybar))z)");
        Sweep ac(r, "lemmas.triality_anticommutator_j" + std::to_string(j),
                 "{d_{3-j}(xbar,ybar) - d_{j+2}(x,y), l(z)} = l((d_{j+1}(x,y) - d_{2-j}(xbar,ybar))z)");
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                const Vec x = unit_vec(n, p), y = unit_vec(n, q);
                const Vec xb = a.bar(x), yb = a.bar(y);
                const Matrix A1 = d.of(3 - j, xb, yb), A2 = d.at(j + 2, p, q);
                const Matrix B1 = d.at(j + 1, p, q), B2 = d.of(2 - j, xb, yb);
                for (std::size_t s = 0; s < n; ++s) {
                    const Vec z = unit_vec(n, s);
                    Matrix rc = fkts::commutator(A1 + A2, l(z)) - l((B1 + B2) * z);
                    Matrix ra = anticommutator_of(A1 - A2, l(z)) - l((B1 - B2) * z);
                    cm.record(rc.is_zero(), [&] { return lbl({p, q, s}); }, [&] { return "residual " + rc.str(); });
                    ac.record(ra.is_zero(), [&] { return lbl({p, q, s}); }, [&] { return "residual " + ra.str(); });
                }
            }
        cm.finish();
        ac.finish();
    }

    // derivation properties w.r.t. the triple product
    std::vector<Matrix> Lb(n * n), D(n * n), Ab(n * n), Kb(n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            Lb[p * n + q] = t.L_basis(p, q);
            D[p * n + q] = t.L_basis(p, q) - t.L_basis(q, p);
            Ab[p * n + q] = t.L_basis(p, q) + t.L_basis(q, p);
            Kb[p * n + q] = t.K_basis(p, q);
        }
    // [Q, L(c,d)] = L(Qc,d) + sign L(c,Qd) for all basis c, d
    auto is_derivation = [&](const Matrix& Q, int sign, std::string& witness) {
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t dd = 0; dd < n; ++dd) {
                Matrix res = fkts::commutator(Q, Lb[c * n + dd]) - L(Q.column(c), unit_vec(n, dd)) -
                             L(unit_vec(n, c), Q.column(dd)) * Scalar(sign);
                if (!res.is_zero()) {
                    witness = "at " + lbl({c, dd}) + ": residual " + res.str();
                    return false;
                }
            }
        return true;
    };
    Sweep dd(r, "lemmas.D_derivation", "D(x,y) = L(x,y) - L(y,x) is a derivation");
    Sweep aa(r, "lemmas.A_antiderivation", "A(x,y) = L(x,y) + L(y,x) is an anti-derivation");
    for (std::size_t p = 0; p < n * n; ++p) {
        std::string w1, w2;
        bool ok1 = is_derivation(D[p], 1, w1);
        dd.record(ok1, [&] { return lbl({p / n, p % n}); }, [&] { return w1; });
        bool ok2 = is_derivation(Ab[p], -1, w2);
        aa.record(ok2, [&] { return lbl({p / n, p % n}); }, [&] { return w2; });
    }
    dd.finish();
    aa.finish();
    Sweep kk(r, "lemmas.KK_derivation", "[K(x,y), K(a,b)] is a derivation");
    Sweep AA(r, "lemmas.AA_derivation", "[A(x,y), A(a,b)] is a derivation");
    Sweep AD(r, "lemmas.AD_antiderivation", "[A(x,y), D(a,b)] is an anti-derivation");
    for (std::size_t p = 0; p < n * n; ++p)
        for (std::size_t q = 0; q < n * n; ++q) {
            auto label = [&] { return lbl({p / n, p % n, q / n, q % n}); };
            std::string w1, w2, w3;
            bool ok1 = is_derivation(fkts::commutator(Kb[p], Kb[q]), 1, w1);
            kk.record(ok1, label, [&] { return w1; });
            bool ok2 = is_derivation(fkts::commutator(Ab[p], Ab[q]), 1, w2);
            AA.record(ok2, label, [&] { return w2; });
            bool ok3 = is_derivation(fkts::commutator(Ab[p], D[q]), -1, w3);
            AD.record(ok3, label, [&] { return w3; });
        }
    kk.finish();
    AA.finish();
    AD.finish();

    if (params) {
        const Embedding emb(a, *params);
        Sweep td(r, "lemmas.T_block_form", "T_j(x,y) matches its d-operator block form");
        for (int j = 1; j <= 3; ++j)
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    const Vec x = unit_vec(n, p), y = unit_vec(n, q);
                    HatElement res = emb.T(j, x, y) - emb.T_via_d(j, x, y);
                    td.record(res.is_zero(), [&] { return "j" + std::to_string(j) + "," + lbl({p, q}); },
                              [&] { return "residual " + res.str(); });
                }
        td.finish();
    } else {
        r.skip("lemmas.T_block_form", "needs embedding parameters");
    }
    return r;
}

VerificationReport check_lemma34_printed(const StructurableAlgebra& a)
{
    const std::size_t n = a.dim();
    const DTable d(a);
    VerificationReport r;
    Sweep cm(r, "lemmas.printed_commutator", "[d_0(xbar,ybar) + d_2(x,y), l(z)] = l((d_0(x,y) + d_2(xbar,ybar))z)");
    Sweep ac(r, "lemmas.printed_anticommutator",
             "{d_0(xbar,ybar) - d_2(x,y), l(z)} = l((d_0(x,y) - d_2(xbar,ybar))z)");
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const Vec x = unit_vec(n, p), y = unit_vec(n, q);
            const Vec xb = a.bar(x), yb = a.bar(y);
            const Matrix A1 = d.of(3, xb, yb), A2 = d.at(2, p, q);
            const Matrix B1 = d.at(3, p, q), B2 = d.of(2, xb, yb);
            for (std::size_t s = 0; s < n; ++s) {
                const Vec z = unit_vec(n, s);
                Matrix rc = fkts::commutator(A1 + A2, a.l(z)) - a.l((B1 + B2) * z);
                Matrix ra = anticommutator_of(A1 - A2, a.l(z)) - a.l((B1 - B2) * z);
                cm.record(rc.is_zero(), [&] { return lbl({p, q, s}); }, [&] { return "residual " + rc.str(); });
                ac.record(ra.is_zero(), [&] { return lbl({p, q, s}); }, [&] { return "residual " + ra.str(); });
            }
        }
    cm.finish();
    ac.finish();
    return r;
}

// ---------------------------------------------------------------------------

StructurableAlgebra make_scalar_algebra()
{
    return StructurableAlgebra(1, {Vec{Scalar(1)}}, Matrix::identity(1), Vec{Scalar(1)});
}

namespace {

std::vector<Vec> m2_product()
{
    std::vector<Vec> prod;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const std::size_t ra = i / 2, ca = i % 2, rb = j / 2, cb = j % 2;
            prod.push_back(ca == rb ? unit_vec(4, 2 * ra + cb) : Vec(4));
        }
    return prod;
}

}  // namespace

StructurableAlgebra make_m2_transpose()
{
    Matrix inv(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        inv(2 * (i % 2) + i / 2, i) = 1;
    return StructurableAlgebra(4, m2_product(), inv, Vec{Scalar(1), Scalar(0), Scalar(0), Scalar(1)});
}

StructurableAlgebra make_m2_identity_involution()
{
    return StructurableAlgebra(4, m2_product(), Matrix::identity(4), Vec{Scalar(1), Scalar(0), Scalar(0), Scalar(1)});
}

}  // namespace fkts
