#include "fkts/lie_construct.hpp"

#include <cstdlib>
#include <string>

namespace fkts {

WElement WElement::from_stacked(const Vec& v)
{
    if (v.size() % 2 != 0)
        throw DimensionError("W coordinates must have even length, got " + std::to_string(v.size()));
    const std::size_t n = v.size() / 2;
    return {Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)),
            Vec(v.begin() + static_cast<std::ptrdiff_t>(n), v.end())};
}

HatElement HatElement::from_even(EvenOperator d)
{
    const std::size_t n2 = d.rows();
    return {std::move(d), Vec(n2)};
}

HatElement HatElement::from_odd(const WElement& x)
{
    const std::size_t n2 = 2 * x.dim();
    return {Matrix(n2, n2), x.stacked()};
}

HatElement& HatElement::operator+=(const HatElement& o)
{
    even += o.even;
    odd = odd + o.odd;
    return *this;
}

HatElement& HatElement::operator-=(const HatElement& o)
{
    even -= o.even;
    odd = odd - o.odd;
    return *this;
}

std::string HatElement::str() const
{
    return even.str() + " + " + to_string(odd);
}

namespace {

void require_w(const TripleSystem& t, const WElement& x, const char* what)
{
    if (x.top.size() != t.dim() || x.bottom.size() != t.dim())
        throw DimensionError(std::string(what) + " has components of dimension " + std::to_string(x.top.size()) +
                             "/" + std::to_string(x.bottom.size()) + ", triple system has dimension " +
                             std::to_string(t.dim()));
}

Matrix unflatten(const Vec& v, std::size_t rows)
{
    return Matrix(rows, v.size() / rows, v);
}

/// Keeps the blocks selected by the mask [[tl, tr], [bl, br]] and zeroes the rest.
Matrix mask_blocks(const Matrix& m, bool tl, bool tr, bool bl, bool br)
{
    const std::size_t n = m.rows() / 2;
    Matrix z(n, n);
    return Matrix::blocks(tl ? m.block(0, 0) : z, tr ? m.block(0, 1) : z, bl ? m.block(1, 0) : z,
                          br ? m.block(1, 1) : z);
}

std::string grade_pair(int i, int j)
{
    return "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

}  // namespace

EvenOperator w_bracket(const TripleSystem& t, const WElement& x1, const WElement& x2)
{
    require_w(t, x1, "X1");
    require_w(t, x2, "X2");
    const Scalar eps = t.epsilon();
    const Scalar del = t.delta();
    Matrix tl = operator_L(t, x1.top, x2.bottom) - operator_L(t, x2.top, x1.bottom) * del;
    Matrix tr = operator_K(t, x1.top, x2.top) * del;
    Matrix bl = operator_K(t, x1.bottom, x2.bottom) * (-eps);
    Matrix br = operator_L(t, x2.bottom, x1.top) * eps - operator_L(t, x1.bottom, x2.top) * (eps * del);
    return Matrix::blocks(tl, tr, bl, br);
}

WElement w_triple(const TripleSystem& t, const WElement& x1, const WElement& x2, const WElement& x3)
{
    require_w(t, x3, "X3");
    return WElement::from_stacked(w_bracket(t, x1, x2) * x3.stacked());
}

HatElement hat_bracket(const TripleSystem& t, const HatElement& a, const HatElement& b)
{
    HatElement out;
    out.even = commutator(a.even, b.even) + w_bracket(t, WElement::from_stacked(a.odd), WElement::from_stacked(b.odd));
    out.odd = a.even * b.odd - b.even * a.odd;
    return out;
}

// ---------------------------------------------------------------------------

std::array<std::size_t, 5> GradedLie::grade_dims() const
{
    std::array<std::size_t, 5> d{};
    for (int g = -2; g <= 2; ++g)
        d[grade_index(g)] = grade(g).dimension();
    return d;
}

std::optional<Vec> GradedLie::coordinates(const HatElement& a) const
{
    const std::size_t n2 = odd_dim();
    if (a.even.rows() != n2 || a.even.cols() != n2 || a.odd.size() != n2)
        throw DimensionError("element shape does not match the algebra (2n = " + std::to_string(n2) + ")");
    const Matrix parts[5] = {mask_blocks(a.even, false, false, true, false), Matrix(),
                             mask_blocks(a.even, true, false, false, true), Matrix(),
                             mask_blocks(a.even, false, true, false, false)};
    Vec top(n2), bottom(n2);
    for (std::size_t i = 0; i < n(); ++i) {
        top[i] = a.odd[i];
        bottom[n() + i] = a.odd[n() + i];
    }
    Vec out;
    out.reserve(total_dim());
    for (int g = -2; g <= 2; ++g) {
        std::optional<Vec> c;
        if (g == -1)
            c = grade(g).coordinates(bottom);
        else if (g == 1)
            c = grade(g).coordinates(top);
        else
            c = grade(g).coordinates(parts[grade_index(g)].flatten());
        if (!c)
            return std::nullopt;
        out.insert(out.end(), c->begin(), c->end());
    }
    return out;
}

HatElement GradedLie::element(const Vec& coords) const
{
    if (coords.size() != total_dim())
        throw DimensionError("coordinate vector has length " + std::to_string(coords.size()) + ", algebra has dimension " +
                             std::to_string(total_dim()));
    HatElement out = HatElement::zero(n());
    for (std::size_t a = 0; a < coords.size(); ++a)
        if (!coords[a].is_zero())
            out += coords[a] * basis_[a];
    return out;
}

Vec GradedLie::bracket(const Vec& a, const Vec& b) const
{
    const std::size_t d = total_dim();
    if (a.size() != d || b.size() != d)
        throw DimensionError("bracket arguments must have length " + std::to_string(d));
    Vec out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j].is_zero())
                continue;
            const Scalar f = a[i] * b[j];
            const Vec& c = basis_bracket(i, j);
            for (std::size_t k = 0; k < d; ++k)
                if (!c[k].is_zero())
                    out[k] += f * c[k];
        }
    }
    return out;
}

LieElement GradedLie::to_lie_element(const Vec& coords) const
{
    if (coords.size() != total_dim())
        throw DimensionError("coordinate vector has length " + std::to_string(coords.size()));
    LieElement e{Vec(), WElement::zero(n())};
    Vec odd(odd_dim());
    for (std::size_t a = 0; a < coords.size(); ++a) {
        if (is_odd(a))
            odd = odd + coords[a] * basis_[a].odd;
        else
            e.even.push_back(coords[a]);
    }
    e.odd = WElement::from_stacked(odd);
    return e;
}

Vec GradedLie::from_lie_element(const LieElement& e) const
{
    if (e.even.size() != even_dim())
        throw DimensionError("even coefficient vector has length " + std::to_string(e.even.size()) +
                             ", even part has dimension " + std::to_string(even_dim()));
    if (e.odd.top.size() != n() || e.odd.bottom.size() != n())
        throw DimensionError("odd part does not match the algebra");
    auto odd = coordinates(HatElement::from_odd(e.odd));
    Vec out(total_dim());
    std::size_t k = 0;
    for (std::size_t a = 0; a < total_dim(); ++a)
        out[a] = is_odd(a) ? (*odd)[a] : e.even[k++];
    return out;
}

GradedLie build_graded_lie(const TripleSystem& t, const SweepOptions& opts)
{
    require_fkts(t, opts);
    const std::size_t n = t.dim();
    const std::size_t n2 = 2 * n;
    const Scalar eps = t.epsilon();
    const Scalar del = t.delta();
    const Matrix z(n, n);

    std::vector<Vec> g_m2, g_0, g_2;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            g_m2.push_back(Matrix::blocks(z, z, t.K_basis(i, j) * (-eps), z).flatten());
            g_0.push_back(Matrix::blocks(t.L_basis(i, j), z, z, t.L_basis(j, i) * eps).flatten());
            g_2.push_back(Matrix::blocks(z, t.K_basis(i, j) * del, z, z).flatten());
        }

    std::vector<Vec> brackets;
    for (std::size_t a = 0; a < n2; ++a)
        for (std::size_t b = 0; b < n2; ++b)
            brackets.push_back(
                w_bracket(t, WElement::from_stacked(unit_vec(n2, a)), WElement::from_stacked(unit_vec(n2, b))).flatten());

    GradedLie g(t);
    g.even_span_ = span_basis(brackets, n2 * n2);
    g.grades_[grade_index(-2)] = span_basis(g_m2, n2 * n2);
    g.grades_[grade_index(0)] = span_basis(g_0, n2 * n2);
    g.grades_[grade_index(2)] = span_basis(g_2, n2 * n2);
    std::vector<Vec> lower, upper;
    for (std::size_t i = 0; i < n; ++i) {
        upper.push_back(unit_vec(n2, i));
        lower.push_back(unit_vec(n2, n + i));
    }
    g.grades_[grade_index(-1)] = span_basis(lower, n2);
    g.grades_[grade_index(1)] = span_basis(upper, n2);

    std::vector<Vec> graded_even = g_m2;
    graded_even.insert(graded_even.end(), g_0.begin(), g_0.end());
    graded_even.insert(graded_even.end(), g_2.begin(), g_2.end());
    const SpanBasis sum = span_basis(graded_even, n2 * n2);
    const std::size_t sum_dims = g.grade(-2).dimension() + g.grade(0).dimension() + g.grade(2).dimension();
    if (!(sum == g.even_span_) || sum.dimension() != sum_dims)
        throw StructuralError("L(W,W) is not the direct sum of the grade -2, 0, 2 spans: dim L(W,W) = " +
                              std::to_string(g.even_span_.dimension()) + ", graded dims sum to " +
                              std::to_string(sum_dims));

    for (int gr = -2; gr <= 2; ++gr) {
        g.offsets_[grade_index(gr)] = g.basis_.size();
        for (const Vec& v : g.grade(gr).vectors()) {
            if (gr % 2 == 0)
                g.basis_.push_back(HatElement::from_even(unflatten(v, n2)));
            else
                g.basis_.push_back(HatElement{Matrix(n2, n2), v});
            g.grade_of_.push_back(gr);
        }
    }

    const std::size_t d = g.basis_.size();
    g.table_.reserve(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            HatElement br = hat_bracket(t, g.basis_[a], g.basis_[b]);
            auto c = g.coordinates(br);
            if (!c)
                throw StructuralError("bracket of basis elements b" + std::to_string(a + 1) + ", b" +
                                      std::to_string(b + 1) + " leaves L(W,W) + W: " + br.str());
            g.table_.push_back(std::move(*c));
        }
    return g;
}

LieElement lie_bracket(const GradedLie& g, const LieElement& a, const LieElement& b)
{
    const Vec ca = g.from_lie_element(a);
    const Vec cb = g.from_lie_element(b);
    const HatElement concrete = hat_bracket(g.source(), g.element(ca), g.element(cb));
    auto c = g.coordinates(concrete);
    if (!c)
        throw StructuralError("bracket leaves the stored spans: " + concrete.str());
    return g.to_lie_element(*c);
}

VerificationReport check_grading(const GradedLie& g)
{
    VerificationReport report;
    const std::size_t d = g.total_dim();
    for (int i = -2; i <= 2; ++i)
        for (int j = -2; j <= 2; ++j) {
            const int target = i + j;
            Sweep sweep(report, "grading." + grade_pair(i, j),
                        std::abs(target) > 2 ? "bracket vanishes" : "lands in grade " + std::to_string(target));
            for (std::size_t a = 0; a < d; ++a) {
                if (g.grade_of(a) != i)
                    continue;
                for (std::size_t b = 0; b < d; ++b) {
                    if (g.grade_of(b) != j)
                        continue;
                    const Vec& c = g.basis_bracket(a, b);
                    std::size_t stray = d;
                    for (std::size_t k = 0; k < d && stray == d; ++k)
                        if (!c[k].is_zero() && g.grade_of(k) != target)
                            stray = k;
                    sweep.record(
                        stray == d, [&] { return "b" + std::to_string(a + 1) + ",b" + std::to_string(b + 1); },
                        [&] {
                            return "component on b" + std::to_string(stray + 1) + " (grade " +
                                   std::to_string(g.grade_of(stray)) + ") = " + c[stray].str();
                        });
                }
            }
            sweep.finish();
        }
    return report;
}

VerificationReport check_graded_jacobi(const GradedLie& g)
{
    VerificationReport report;
    const std::size_t d = g.total_dim();
    const bool super = g.source().delta() == -1;
    auto parity = [&](std::size_t a) { return super && g.is_odd(a) ? 1 : 0; };
    auto sign = [](int e) { return e % 2 == 0 ? Scalar(1) : Scalar(-1); };
    // [v, b_c] for a coordinate vector v
    auto bracket_with = [&](const Vec& v, std::size_t c) {
        Vec out(d);
        for (std::size_t k = 0; k < d; ++k)
            if (!v[k].is_zero())
                out = out + v[k] * g.basis_bracket(k, c);
        return out;
    };

    Sweep anti(report, "antisymmetry", super ? "[a,b] = -(-1)^{|a||b|} [b,a]" : "[a,b] = -[b,a]");
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Vec res = g.basis_bracket(a, b) + sign(parity(a) * parity(b)) * g.basis_bracket(b, a);
            anti.record(
                is_zero(res), [&] { return std::to_string(a + 1) + "][" + std::to_string(b + 1); },
                [&] { return "residual " + to_string(res); });
        }
    anti.finish();

    Sweep jac(report, "jacobi",
              super ? "(-1)^{|a||c|}[[a,b],c] + cyclic = 0" : "[[a,b],c] + [[b,c],a] + [[c,a],b] = 0");
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c) {
                Vec res = sign(parity(a) * parity(c)) * bracket_with(g.basis_bracket(a, b), c) +
                          sign(parity(b) * parity(a)) * bracket_with(g.basis_bracket(b, c), a) +
                          sign(parity(c) * parity(b)) * bracket_with(g.basis_bracket(c, a), b);
                jac.record(
                    is_zero(res),
                    [&] { return std::to_string(a + 1) + "][" + std::to_string(b + 1) + "][" + std::to_string(c + 1); },
                    [&] { return "residual " + to_string(res); });
            }
    jac.finish();
    return report;
}

VerificationReport describe_graded_lie(const GradedLie& g)
{
    VerificationReport r;
    const auto dims = g.grade_dims();
    std::string s;
    for (std::size_t i = 0; i < dims.size(); ++i)
        s += (i ? "," : "") + std::to_string(dims[i]);
    r.pass("graded_lie.dims", "grades -2..2: (" + s + "), total " + std::to_string(g.total_dim()));
    r.pass("graded_lie.even_decomposition", "L(W,W) = L_-2 + L_0 + L_2, dim " +
                                                std::to_string(g.even_span().dimension()) + "; L_0 span dim " +
                                                std::to_string(dims[grade_index(0)]));
    r.check(dims[grade_index(-1)] == g.n() && dims[grade_index(1)] == g.n(), "graded_lie.odd_dims",
            "dim L_1 = dim L_-1 = n", "n = " + std::to_string(g.n()));
    return r;
}

// ---------------------------------------------------------------------------

TripleProduct w_triple_product(const TripleSystem& t)
{
    return {2 * t.dim(), [t](const Vec& a, const Vec& b, const Vec& c) {
                return w_triple(t, WElement::from_stacked(a), WElement::from_stacked(b), WElement::from_stacked(c))
                    .stacked();
            }};
}

VerificationReport check_lts_axioms(const TripleProduct& product, int delta, const std::string& prefix)
{
    if (delta != 1 && delta != -1)
        throw Error("delta must be +1 or -1");
    const std::size_t m = product.dim;
    std::vector<Vec> table(m * m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                Vec v = product.eval(unit_vec(m, i), unit_vec(m, j), unit_vec(m, k));
                if (v.size() != m)
                    throw DimensionError("product returned a vector of length " + std::to_string(v.size()));
                table[(i * m + j) * m + k] = std::move(v);
            }
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Vec& { return table[(i * m + j) * m + k]; };
    // one slot given by a vector, the others basis indices
    auto slot = [&](int which, const Vec& v, std::size_t p, std::size_t q) {
        Vec out(m);
        for (std::size_t s = 0; s < m; ++s) {
            if (v[s].is_zero())
                continue;
            const Vec& e = which == 0 ? at(s, p, q) : which == 1 ? at(p, s, q) : at(p, q, s);
            out = out + v[s] * e;
        }
        return out;
    };
    auto label = [](std::initializer_list<std::size_t> idx) {
        std::string s;
        for (auto i : idx)
            s += (s.empty() ? "" : ",") + std::string("w") + std::to_string(i + 1);
        return s;
    };
    const Scalar del = delta;

    VerificationReport report;
    Sweep anti(report, prefix + ".antisymmetry", delta == 1 ? "xyz = -yxz" : "xyz = yxz");
    Sweep cyc(report, prefix + ".cyclic", "xyz + yzx + zxy = 0");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                Vec r1 = at(i, j, k) + del * at(j, i, k);
                anti.record(is_zero(r1), [&] { return label({i, j, k}); }, [&] { return "residual " + to_string(r1); });
                Vec r2 = at(i, j, k) + at(j, k, i) + at(k, i, j);
                cyc.record(is_zero(r2), [&] { return label({i, j, k}); }, [&] { return "residual " + to_string(r2); });
            }
    anti.finish();
    cyc.finish();

    Sweep der(report, prefix + ".derivation", "uv(xyz) = (uvx)yz + x(uvy)z + xy(uvz)");
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t x = 0; x < m; ++x)
                for (std::size_t y = 0; y < m; ++y)
                    for (std::size_t z = 0; z < m; ++z) {
                        Vec lhs = slot(2, at(x, y, z), u, v);
                        Vec rhs = slot(0, at(u, v, x), y, z) + slot(1, at(u, v, y), x, z) + slot(2, at(u, v, z), x, y);
                        Vec res = lhs - rhs;
                        der.record(is_zero(res), [&] { return label({u, v, x, y, z}); },
                                   [&] { return "residual " + to_string(res); });
                    }
    der.finish();
    return report;
}

TripleProduct p_twist(const TripleSystem& t, const Matrix& p)
{
    const std::size_t n = t.dim();
    if (p.rows() != n || p.cols() != n)
        throw DimensionError("P must be " + std::to_string(n) + "x" + std::to_string(n) + ", got " +
                             std::to_string(p.rows()) + "x" + std::to_string(p.cols()));
    const Scalar ed = t.epsilon() * t.delta();
    Matrix sq = p * p;
    if (sq != Matrix::identity(n) * (-ed))
        throw Error("P^2 != -eps delta Id: P^2 = " + sq.str());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = p * t.basis_product(i, j, k);
                Vec rhs = triple_product(t, p.column(i), p.column(j), p.column(k));
                if (lhs != rhs)
                    throw Error("P is not an automorphism: P(" + basis_label(i) + basis_label(j) + basis_label(k) +
                                ") = " + to_string(lhs) + " but (Px Py Pz) = " + to_string(rhs));
            }
    const Scalar del = t.delta();
    return {n, [t, p, del](const Vec& x, const Vec& y, const Vec& z) {
                return triple_product(t, x, p * y, z) - del * triple_product(t, y, p * x, z) +
                       del * triple_product(t, x, p * z, y) - triple_product(t, y, p * z, x);
            }};
}

TripleSystem make_doubled_fkts(const TripleSystem& t)
{
    const std::size_t n = t.dim();
    const Scalar del = t.delta();
    std::map<TensorKey, Scalar> c;
    for (const auto& [key, v] : t.coefficients()) {
        c[key] = del * v;
        c[{key[0] + n, key[1] + n, key[2] + n, key[3] + n}] = del * v;
    }
    return TripleSystem(t.epsilon_sign(), t.delta_sign(), 2 * n, std::move(c));
}

Matrix standard_twist(const TripleSystem& t)
{
    const std::size_t n = t.dim();
    const Matrix id = Matrix::identity(n);
    return Matrix::blocks(Matrix(n, n), id * Scalar(t.delta()), id * Scalar(-t.epsilon()), Matrix(n, n));
}

}  // namespace fkts
