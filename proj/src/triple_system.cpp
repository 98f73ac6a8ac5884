#include "fkts/triple_system.hpp"

#include <optional>
#include <string>

namespace fkts {

Sign parse_sign(int v)
{
    if (v == 1)
        return Sign::plus;
    if (v == -1)
        return Sign::minus;
    throw Error("sign must be +1 or -1, got " + std::to_string(v));
}

std::string basis_label(std::size_t i)
{
    return "e" + std::to_string(i + 1);
}

TripleSystem::TripleSystem(Sign epsilon, Sign delta, std::size_t dim, std::map<TensorKey, Scalar> coefficients)
    : epsilon_(epsilon), delta_(delta), dim_(dim)
{
    if (value(epsilon) != 1 && value(epsilon) != -1)
        throw Error("epsilon must be +1 or -1");
    if (value(delta) != 1 && value(delta) != -1)
        throw Error("delta must be +1 or -1");
    if (dim == 0)
        throw DimensionError("triple system dimension must be positive");
    for (auto& [key, c] : coefficients) {
        for (auto idx : key)
            if (idx >= dim)
                throw DimensionError("coefficient index " + std::to_string(idx + 1) + " out of range 1.." +
                                     std::to_string(dim));
        if (!c.is_zero())
            coefficients_.emplace(key, c);
    }

    basis_products_.assign(dim * dim * dim, Vec(dim));
    for (const auto& [key, c] : coefficients_)
        basis_products_[(key[0] * dim + key[1]) * dim + key[2]][key[3]] = c;

    const Scalar d = delta == Sign::plus ? Scalar(1) : Scalar(-1);
    L_.reserve(dim * dim);
    K_.reserve(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Matrix l(dim, dim);
            Matrix k(dim, dim);
            for (std::size_t col = 0; col < dim; ++col) {
                const Vec& lij = basis_product(i, j, col);
                const Vec& xzy = basis_product(i, col, j);
                const Vec& yzx = basis_product(j, col, i);
                for (std::size_t row = 0; row < dim; ++row) {
                    l(row, col) = lij[row];
                    k(row, col) = xzy[row] - d * yzx[row];
                }
            }
            L_.push_back(std::move(l));
            K_.push_back(std::move(k));
        }
}

Scalar TripleSystem::coefficient(const TensorKey& key) const
{
    auto it = coefficients_.find(key);
    return it == coefficients_.end() ? Scalar(0) : it->second;
}

TripleSystem TripleSystem::with_coefficient(const TensorKey& key, const Scalar& value) const
{
    auto coeffs = coefficients_;
    coeffs[key] = value;
    return TripleSystem(epsilon_, delta_, dim_, std::move(coeffs));
}

namespace {

void require_dim(const TripleSystem& t, const Vec& v, const char* what)
{
    if (v.size() != t.dim())
        throw DimensionError(std::string(what) + " has dimension " + std::to_string(v.size()) +
                             ", triple system has dimension " + std::to_string(t.dim()));
}

/// sum_{i,j} x_i y_j table(i,j)
template <class Table>
Matrix bilinear_sum(const TripleSystem& t, const Vec& x, const Vec& y, Table table)
{
    Matrix out(t.dim(), t.dim());
    for (std::size_t i = 0; i < t.dim(); ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < t.dim(); ++j) {
            if (y[j].is_zero())
                continue;
            out += table(i, j) * (x[i] * y[j]);
        }
    }
    return out;
}

/// L(v, e_j) for arbitrary v.
Matrix L_of(const TripleSystem& t, const Vec& v, std::size_t j)
{
    Matrix out(t.dim(), t.dim());
    for (std::size_t i = 0; i < t.dim(); ++i)
        if (!v[i].is_zero())
            out += t.L_basis(i, j) * v[i];
    return out;
}

/// L(e_i, v) for arbitrary v.
Matrix L_of(const TripleSystem& t, std::size_t i, const Vec& v)
{
    Matrix out(t.dim(), t.dim());
    for (std::size_t j = 0; j < t.dim(); ++j)
        if (!v[j].is_zero())
            out += t.L_basis(i, j) * v[j];
    return out;
}

std::string quad(std::size_t u, std::size_t v, std::size_t x, std::size_t y)
{
    return basis_label(u) + "," + basis_label(v) + "," + basis_label(x) + "," + basis_label(y);
}

void guard(const TripleSystem& t, const SweepOptions& opts)
{
    if (t.dim() > opts.max_dim)
        throw DimensionError("dimension " + std::to_string(t.dim()) + " exceeds sweep guard " +
                             std::to_string(opts.max_dim) + " (raise max_dim to override)");
}

}  // namespace

Vec triple_product(const TripleSystem& t, const Vec& x, const Vec& y, const Vec& z)
{
    require_dim(t, x, "x");
    require_dim(t, y, "y");
    require_dim(t, z, "z");
    const std::size_t n = t.dim();
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero())
                continue;
            const Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                if (z[k].is_zero())
                    continue;
                const Vec& p = t.basis_product(i, j, k);
                const Scalar f = xy * z[k];
                for (std::size_t l = 0; l < n; ++l)
                    if (!p[l].is_zero())
                        out[l] += f * p[l];
            }
        }
    }
    return out;
}

Matrix operator_L(const TripleSystem& t, const Vec& x, const Vec& y)
{
    require_dim(t, x, "x");
    require_dim(t, y, "y");
    return bilinear_sum(t, x, y, [&](std::size_t i, std::size_t j) -> const Matrix& { return t.L_basis(i, j); });
}

Matrix operator_K(const TripleSystem& t, const Vec& x, const Vec& y)
{
    require_dim(t, x, "x");
    require_dim(t, y, "y");
    return bilinear_sum(t, x, y, [&](std::size_t i, std::size_t j) -> const Matrix& { return t.K_basis(i, j); });
}

VerificationReport validate_fkts(const TripleSystem& t, const SweepOptions& opts)
{
    guard(t, opts);
    const std::size_t n = t.dim();
    const Scalar eps = t.epsilon();
    VerificationReport report;
    Sweep ll(report, "axioms.LL_commutator", "[L(u,v),L(x,y)] = L(L(u,v)x,y) + eps L(x,L(v,u)y)");
    Sweep kk(report, "axioms.KK_composition", "K(K(u,v)x,y) = L(y,x)K(u,v) - eps K(u,v)L(x,y)");
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) {
                    const Matrix& Luv = t.L_basis(u, v);
                    const Matrix& Lxy = t.L_basis(x, y);
                    Matrix lhs = commutator(Luv, Lxy);
                    Matrix rhs = L_of(t, t.basis_product(u, v, x), y) + L_of(t, x, t.basis_product(v, u, y)) * eps;
                    Matrix res = lhs - rhs;
                    ll.record(res.is_zero(), [&] { return quad(u, v, x, y); }, [&] { return "residual " + res.str(); });

                    const Matrix& Kuv = t.K_basis(u, v);
                    Matrix k_lhs = operator_K(t, Kuv.column(x), unit_vec(n, y));
                    Matrix k_rhs = t.L_basis(y, x) * Kuv - (Kuv * Lxy) * eps;
                    Matrix k_res = k_lhs - k_rhs;
                    kk.record(k_res.is_zero(), [&] { return quad(u, v, x, y); },
                              [&] { return "residual " + k_res.str(); });
                }
    ll.finish();
    kk.finish();
    return report;
}

void require_fkts(const TripleSystem& t, const SweepOptions& opts)
{
    if (!validate_fkts(t, opts).ok())
        throw Error("triple system fails the (epsilon,delta) FKTS axioms; see validate_fkts / the axioms suite");
}

VerificationReport check_derived_identities(const TripleSystem& t, const SweepOptions& opts)
{
    require_fkts(t, opts);
    const std::size_t n = t.dim();
    const Scalar eps = t.epsilon();
    const Scalar del = t.delta();
    VerificationReport report;
    Sweep left(report, "derived.KK_via_L_left", "K(u,v)K(x,y) = eps delta L(K(u,v)y,x) - eps L(K(u,v)x,y)");
    std::optional<std::string> literal;
    Sweep right(report, "derived.KK_via_L_right", "K(u,v)K(x,y) = L(v,K(x,y)u) - delta L(u,K(x,y)v)");
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) {
                    const Matrix& Kuv = t.K_basis(u, v);
                    const Matrix& Kxy = t.K_basis(x, y);
                    Matrix prod = Kuv * Kxy;
                    Matrix l = L_of(t, Kuv.column(y), x) * (eps * del) - L_of(t, Kuv.column(x), y) * eps;
                    // x and y exchanged inside L
                    Matrix lit = L_of(t, Kuv.column(x), y) * (eps * del) - L_of(t, Kuv.column(y), x) * eps;
                    if (!literal && prod != lit)
                        literal = quad(u, v, x, y) + ": residual " + (prod - lit).str();
                    Matrix r = L_of(t, v, Kxy.column(u)) - L_of(t, u, Kxy.column(v)) * del;
                    Matrix rl = prod - l;
                    Matrix rr = prod - r;
                    left.record(rl.is_zero(), [&] { return quad(u, v, x, y); }, [&] { return "residual " + rl.str(); });
                    right.record(rr.is_zero(), [&] { return quad(u, v, x, y); },
                                 [&] { return "residual " + rr.str(); });
                }
    left.finish();
    right.finish();
    report.pass("derived.KK_via_L_exchanged",
                literal ? "form with x, y exchanged inside L does not hold, " + *literal : "form with x, y exchanged inside L also holds");
    return report;
}

ClassificationResult classify(const TripleSystem& t, const SweepOptions& opts)
{
    require_fkts(t, opts);
    const std::size_t n = t.dim();
    const Scalar eps = t.epsilon();
    const Scalar del = t.delta();
    ClassificationResult out;

    out.is_special = true;
    for (std::size_t i = 0; i < n && out.is_special; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix expected = t.L_basis(j, i) * (eps * del) - t.L_basis(i, j) * eps;
            if (t.K_basis(i, j) != expected) {
                out.is_special = false;
                out.special_witness = std::make_pair(i, j);
                break;
            }
        }

    std::vector<Vec> gens;
    gens.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            gens.push_back(t.K_basis(i, j).flatten());
    if (auto c = solve_in_span(Matrix::identity(n).flatten(), gens)) {
        out.is_unitary = true;
        std::vector<UnitaryPair> pairs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& cij = (*c)[i * n + j];
                if (!cij.is_zero())
                    pairs.push_back({cij * unit_vec(n, i), unit_vec(n, j)});
            }
        out.unitary_coeffs = std::move(pairs);
    }

    Matrix form(n, n);
    bool scalar_valued = true;
    for (std::size_t i = 0; i < n && scalar_valued; ++i)
        for (std::size_t j = 0; j < n && scalar_valued; ++j) {
            const Matrix& k = t.K_basis(i, j);
            const Scalar s = k(0, 0);
            if (k != Matrix::identity(n) * s)
                scalar_valued = false;
            else
                form(i, j) = s;
        }
    if (scalar_valued && !form.is_zero()) {
        out.is_balanced = true;
        out.balanced_form = std::move(form);
    }
    return out;
}

VerificationReport classification_report(const ClassificationResult& c)
{
    VerificationReport r;
    std::string special = c.is_special ? "special" : "not special";
    if (c.special_witness)
        special += "; K(" + basis_label(c.special_witness->first) + "," + basis_label(c.special_witness->second) +
                   ") differs from eps delta L(y,x) - eps L(x,y)";
    r.pass("classify.special", special);
    std::string unitary = c.is_unitary ? "unitary" : "not unitary";
    if (c.unitary_coeffs) {
        unitary += "; Id =";
        for (const auto& p : *c.unitary_coeffs)
            unitary += " + K(" + to_string(p.a) + "," + to_string(p.b) + ")";
    }
    r.pass("classify.unitary", unitary);
    std::string balanced = c.is_balanced ? "balanced; form " + c.balanced_form->str() : "not balanced";
    r.pass("classify.balanced", balanced);
    const bool chain = (!c.is_balanced || c.is_unitary) && (!c.is_unitary || c.is_special);
    r.check(chain, "classify.implication_chain", "balanced => unitary => special",
            "balanced=" + std::to_string(c.is_balanced) + " unitary=" + std::to_string(c.is_unitary) +
                " special=" + std::to_string(c.is_special));
    return r;
}

TripleSystem make_bilinear_fkts(std::size_t n, const Matrix& form, Sign epsilon, Sign delta)
{
    if (form.rows() != n || form.cols() != n)
        throw DimensionError("form must be " + std::to_string(n) + "x" + std::to_string(n));
    const Scalar eps = value(epsilon);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (form(i, j) != -(eps * form(j, i)))
                throw Error("form violates <x|y> = -eps <y|x> at entry (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + "): " + form(i, j).str() + " vs " + form(j, i).str());
    std::map<TensorKey, Scalar> c;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!form(j, k).is_zero())
                    c[{i, j, k, i}] = form(j, k);
    return TripleSystem(epsilon, delta, n, std::move(c));
}

TripleSystem make_zero_fkts(std::size_t n, Sign epsilon, Sign delta)
{
    return TripleSystem(epsilon, delta, n, {});
}

}  // namespace fkts
