#include "fkts/symmetry.hpp"

#include <cstdlib>
#include <string>

namespace fkts {

namespace {

Scalar det2(const Matrix& u)
{
    return u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
}

void require_2x2(const Matrix& u)
{
    if (u.rows() != 2 || u.cols() != 2)
        throw DimensionError("expected a 2x2 matrix, got " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()));
}

std::string compact(const Matrix& u)
{
    return "(" + u(0, 0).str() + "," + u(0, 1).str() + ";" + u(1, 0).str() + "," + u(1, 1).str() + ")";
}

std::string pair_label(std::size_t a, std::size_t b)
{
    return "b" + std::to_string(a + 1) + ",b" + std::to_string(b + 1);
}

std::string w_label(std::size_t a, std::size_t n)
{
    return a < n ? "(" + basis_label(a) + ",0)" : "(0," + basis_label(a - n) + ")";
}

WElement w_unit(std::size_t n, std::size_t a)
{
    return WElement::from_stacked(unit_vec(2 * n, a));
}

HatElement basis_bracket_element(const GradedLie& g, std::size_t a, std::size_t b)
{
    return g.element(g.basis_bracket(a, b));
}

/// Equality of two maps on every basis element.
template <class F1, class F2>
void compare_maps(VerificationReport& r, const GradedLie& g, const std::string& id, const std::string& detail, F1 lhs,
                  F2 rhs)
{
    Sweep s(r, id, detail);
    for (std::size_t a = 0; a < g.total_dim(); ++a) {
        HatElement res = lhs(g.basis()[a]) - rhs(g.basis()[a]);
        s.record(res.is_zero(), [&] { return "b" + std::to_string(a + 1); }, [&] { return "residual " + res.str(); });
    }
    s.finish();
}

}  // namespace

OuterMap OuterMap::theta(Sign epsilon, Sign delta)
{
    return OuterMap(Kind::theta, Matrix{{0, -value(epsilon)}, {value(delta), 0}}, "theta");
}

OuterMap OuterMap::sigma(const Scalar& lambda)
{
    if (lambda.is_zero())
        throw Error("sigma(lambda) requires lambda != 0");
    return OuterMap(Kind::sigma, Matrix{{lambda, 0}, {0, lambda.inverse()}}, "sigma(" + lambda.str() + ")");
}

OuterMap OuterMap::unimodular(const Matrix& u)
{
    require_2x2(u);
    const Scalar d = det2(u);
    if (!d.is_one())
        throw Error("unimodular map requires Det U = 1, got " + d.str());
    return OuterMap(Kind::unimodular, u, "U" + compact(u));
}

OuterMap OuterMap::general_linear(const Matrix& u)
{
    require_2x2(u);
    if (det2(u).is_zero())
        throw Error("general linear map requires Det U != 0");
    return OuterMap(Kind::general_linear, u, "GL" + compact(u));
}

Matrix OuterMap::block_matrix(std::size_t n) const
{
    return kron(m_, Matrix::identity(n));
}

Matrix OuterMap::block_inverse(std::size_t n) const
{
    return kron(inverse(m_), Matrix::identity(n));
}

HatElement apply_outer(const OuterMap& m, const HatElement& a)
{
    const std::size_t n = a.odd.size() / 2;
    const Matrix u = m.block_matrix(n);
    return {u * a.even * m.block_inverse(n), u * a.odd};
}

LieElement apply_outer(const GradedLie& g, const OuterMap& m, const LieElement& a)
{
    const HatElement image = apply_outer(m, g.element(g.from_lie_element(a)));
    auto c = g.coordinates(image);
    if (!c)
        throw StructuralError(m.name() + " maps an element outside the algebra: " + image.str());
    return g.to_lie_element(*c);
}

VerificationReport check_automorphism(const GradedLie& g, const OuterMap& m)
{
    VerificationReport r;
    Sweep s(r, "automorphism." + m.name(), "m[a,b] = [ma,mb]");
    const std::size_t d = g.total_dim();
    std::vector<HatElement> images;
    images.reserve(d);
    for (const auto& b : g.basis())
        images.push_back(apply_outer(m, b));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            HatElement res =
                apply_outer(m, basis_bracket_element(g, a, b)) - hat_bracket(g.source(), images[a], images[b]);
            s.record(res.is_zero(), [&] { return pair_label(a, b); }, [&] { return "residual " + res.str(); });
        }
    s.finish();
    return r;
}

std::vector<Scalar> lambda_samples(const TripleSystem& t)
{
    std::vector<Scalar> out{Scalar(2), Scalar(3), Scalar(-1), Scalar::fraction(1, 2)};
    for (const auto& [key, c] : t.coefficients())
        if (!c.is_rational()) {
            out.push_back(Scalar::i());
            break;
        }
    return out;
}

VerificationReport check_D_relations(const GradedLie& g, const std::vector<Scalar>& lambda_override)
{
    VerificationReport r;
    const TripleSystem& t = g.source();
    const OuterMap th = OuterMap::theta(t.epsilon_sign(), t.delta_sign());
    auto id = [](const HatElement& a) { return a; };
    auto theta = [&](const HatElement& a) { return apply_outer(th, a); };

    compare_maps(r, g, "D_relations.sigma_one", "sigma(1) = Id",
                 [&](const HatElement& a) { return apply_outer(OuterMap::sigma(1), a); }, id);
    compare_maps(r, g, "D_relations.theta_fourth", "theta^4 = Id",
                 [&](const HatElement& a) { return theta(theta(theta(theta(a)))); }, id);

    const Scalar med = -(Scalar(t.epsilon()) * t.delta());
    Sweep odd(r, "D_relations.theta_square_odd", "theta^2 = -eps delta Id on W");
    Sweep even(r, "D_relations.theta_square_even", "theta^2 = Id on L(W,W)");
    for (std::size_t a = 0; a < g.total_dim(); ++a) {
        const HatElement& b = g.basis()[a];
        HatElement res = theta(theta(b)) - (g.is_odd(a) ? med * b : b);
        (g.is_odd(a) ? odd : even)
            .record(res.is_zero(), [&] { return "b" + std::to_string(a + 1); }, [&] { return "residual " + res.str(); });
    }
    odd.finish();
    even.finish();

    const auto lambdas = lambda_override.empty() ? lambda_samples(t) : lambda_override;
    const std::string sample_note = std::to_string(lambdas.size()) + " sample values";
    Sweep mult(r, "D_relations.sigma_multiplicative", "sigma(mu) sigma(nu) = sigma(mu nu); " + sample_note);
    for (const auto& mu : lambdas)
        for (const auto& nu : lambdas) {
            const OuterMap sm = OuterMap::sigma(mu), sn = OuterMap::sigma(nu), smn = OuterMap::sigma(mu * nu);
            for (std::size_t a = 0; a < g.total_dim(); ++a) {
                const HatElement& b = g.basis()[a];
                HatElement res = apply_outer(sm, apply_outer(sn, b)) - apply_outer(smn, b);
                mult.record(
                    res.is_zero(), [&] { return mu.str() + "," + nu.str() + ",b" + std::to_string(a + 1); },
                    [&] { return "residual " + res.str(); });
            }
        }
    mult.finish();

    Sweep sts(r, "D_relations.sigma_theta_sigma", "sigma(l) theta sigma(l) = theta; " + sample_note);
    Sweep grade(r, "D_relations.sigma_grade_action", "sigma(l) = l^n on grade n; " + sample_note);
    for (const auto& l : lambdas) {
        const OuterMap s = OuterMap::sigma(l);
        for (std::size_t a = 0; a < g.total_dim(); ++a) {
            const HatElement& b = g.basis()[a];
            HatElement res = apply_outer(s, theta(apply_outer(s, b))) - theta(b);
            sts.record(res.is_zero(), [&] { return l.str() + ",b" + std::to_string(a + 1); },
                       [&] { return "residual " + res.str(); });
            const int n = g.grade_of(a);
            Scalar ln = 1;
            for (int k = 0; k < std::abs(n); ++k)
                ln *= n > 0 ? l : l.inverse();
            HatElement gr = apply_outer(s, b) - ln * b;
            grade.record(gr.is_zero(), [&] { return l.str() + ",b" + std::to_string(a + 1); },
                         [&] { return "residual " + gr.str(); });
        }
    }
    sts.finish();
    grade.finish();

    if (t.epsilon() == t.delta()) {
        const Scalar e = t.epsilon();
        const OuterMap image = OuterMap::unimodular(Matrix{{0, -e}, {e, 0}});
        compare_maps(r, g, "D_relations.sl2_image_theta", "theta acts as [[0,-eps],[eps,0]]",
                     [&](const HatElement& a) { return apply_outer(image, a); }, theta);
        Sweep emb(r, "D_relations.sl2_image_sigma", "sigma(l) acts as diag(l, 1/l)");
        for (const auto& l : lambdas) {
            const OuterMap u = OuterMap::unimodular(Matrix{{l, 0}, {0, l.inverse()}});
            const OuterMap s = OuterMap::sigma(l);
            for (std::size_t a = 0; a < g.total_dim(); ++a) {
                HatElement res = apply_outer(u, g.basis()[a]) - apply_outer(s, g.basis()[a]);
                emb.record(res.is_zero(), [&] { return l.str() + ",b" + std::to_string(a + 1); },
                           [&] { return "residual " + res.str(); });
            }
        }
        emb.finish();
    } else {
        r.skip("D_relations.sl2_image", "SL(2) embedding of D(eps,delta) needs eps = delta");
    }
    return r;
}

// ---------------------------------------------------------------------------

Sl2Triple sl2_triple(std::size_t n)
{
    const Matrix id = Matrix::identity(n);
    return {kron(Matrix{{1, 0}, {0, -1}}, id), kron(Matrix{{0, 1}, {0, 0}}, id), kron(Matrix{{0, 0}, {1, 0}}, id)};
}

HatElement derivation_action(const Matrix& a, const HatElement& x)
{
    return {commutator(a, x.even), a * x.odd};
}

VerificationReport check_hfg_derivations(const GradedLie& g)
{
    VerificationReport r;
    const TripleSystem& t = g.source();
    const std::size_t n = t.dim();
    const Sl2Triple s = sl2_triple(n);
    const std::pair<const char*, const Matrix*> ops[] = {{"h", &s.h}, {"f", &s.f}, {"g", &s.g}};
    const std::size_t d = g.total_dim();
    for (const auto& [name, a] : ops) {
        Sweep sw(r, std::string("hfg.") + name, std::string(name) + "[a,b] = [" + name + "a,b] + [a," + name + "b]");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const HatElement& bi = g.basis()[i];
                const HatElement& bj = g.basis()[j];
                HatElement res = derivation_action(*a, basis_bracket_element(g, i, j)) -
                                 hat_bracket(t, derivation_action(*a, bi), bj) -
                                 hat_bracket(t, bi, derivation_action(*a, bj));
                sw.record(res.is_zero(), [&] { return pair_label(i, j); }, [&] { return "residual " + res.str(); });
            }
        sw.finish();
    }
    for (const auto& [name, a] : ops) {
        if (std::string(name) == "h")
            continue;
        Sweep sw(r, std::string("hfg.") + name + "_triple",
                 std::string(name) + "[X1,X2,X3] = [" + name + "X1,X2,X3] + [X1," + name + "X2,X3] + [X1,X2," + name +
                     "X3]");
        for (std::size_t i = 0; i < 2 * n; ++i)
            for (std::size_t j = 0; j < 2 * n; ++j)
                for (std::size_t k = 0; k < 2 * n; ++k) {
                    const WElement x1 = w_unit(n, i), x2 = w_unit(n, j), x3 = w_unit(n, k);
                    auto act = [&](const WElement& x) { return WElement::from_stacked(*a * x.stacked()); };
                    Vec res = (*a * w_triple(t, x1, x2, x3).stacked()) - w_triple(t, act(x1), x2, x3).stacked() -
                              w_triple(t, x1, act(x2), x3).stacked() - w_triple(t, x1, x2, act(x3)).stacked();
                    sw.record(
                        is_zero(res), [&] { return w_label(i, n) + "," + w_label(j, n) + "," + w_label(k, n); },
                        [&] { return "residual " + to_string(res); });
                }
        sw.finish();
    }
    return r;
}

ModuleDecomposition decompose_sl2_modules(const GradedLie& g)
{
    const TripleSystem& t = g.source();
    if (t.epsilon() != t.delta())
        throw Error("module decomposition requires eps = delta");
    if (!classify(t).is_special)
        throw Error("module decomposition requires a special system");
    const std::size_t d = g.total_dim();
    const std::size_t m = d + 3;
    const Sl2Triple s = sl2_triple(t.dim());

    // ad of sl(2) basis element `which` (0 = h, 1 = f, 2 = g) on the external sum
    static const int sl2_table[3][3][3] = {
        // [h,h]=0, [h,f]=2f, [h,g]=-2g
        {{0, 0, 0}, {0, 2, 0}, {0, 0, -2}},
        // [f,h]=-2f, [f,f]=0, [f,g]=h
        {{0, -2, 0}, {0, 0, 0}, {1, 0, 0}},
        // [g,h]=2g, [g,f]=-h, [g,g]=0
        {{0, 0, 2}, {-1, 0, 0}, {0, 0, 0}},
    };
    auto ad = [&](int which) {
        const Matrix& a = which == 0 ? s.h : which == 1 ? s.f : s.g;
        Matrix out(m, m);
        for (std::size_t b = 0; b < d; ++b) {
            auto c = g.coordinates(derivation_action(a, g.basis()[b]));
            if (!c)
                throw StructuralError("sl(2) action leaves the algebra on basis element b" + std::to_string(b + 1));
            for (std::size_t k = 0; k < d; ++k)
                out(k, b) = (*c)[k];
        }
        for (int b = 0; b < 3; ++b)
            for (int k = 0; k < 3; ++k)
                out(d + static_cast<std::size_t>(k), d + static_cast<std::size_t>(b)) = sl2_table[which][b][k];
        return out;
    };
    const Matrix H = ad(0);
    const Matrix F = ad(1);

    ModuleDecomposition out;
    out.total_dim = m;
    std::size_t eigen_total = 0;
    for (int k = -2; k <= 2; ++k) {
        Matrix shifted = H - Matrix::identity(m) * Scalar(k);
        eigen_total += kernel(shifted).size();
        Matrix stacked(2 * m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                stacked(i, j) = shifted(i, j);
                stacked(m + i, j) = F(i, j);
            }
        for (auto& v : kernel(stacked)) {
            if (k < 0)
                throw StructuralError("highest weight vector with negative weight " + std::to_string(k));
            out.highest_weight_vectors.push_back(std::move(v));
            out.highest_weights.push_back(k);
            ++out.counts[static_cast<std::size_t>(k) + 1];
        }
    }
    if (eigen_total != m)
        throw StructuralError("ad h is not diagonalizable with eigenvalues in -2..2: eigenvectors span " +
                              std::to_string(eigen_total) + " of " + std::to_string(m) + " dimensions");
    return out;
}

VerificationReport module_report(const GradedLie& g, const ModuleDecomposition& d)
{
    VerificationReport r;
    std::size_t sum = 0;
    std::string counts;
    bool small = true;
    for (const auto& [dim, mult] : d.counts) {
        sum += dim * mult;
        counts += (counts.empty() ? "" : ", ") + std::to_string(dim) + ": " + std::to_string(mult);
        small = small && dim >= 1 && dim <= 3;
    }
    r.check(sum == d.total_dim && d.total_dim == g.total_dim() + 3, "modules.dimension_count",
            "sum of module dimensions = dim L + 3; counts {" + counts + "}",
            std::to_string(sum) + " vs " + std::to_string(d.total_dim));
    r.check(small, "modules.dims_1_2_3", "only 1, 2, 3 dimensional modules occur", "counts {" + counts + "}");

    const Sl2Triple s = sl2_triple(g.n());
    Sweep grade(r, "modules.h_eigenvalue_is_grade", "[h, a] = n a for a in grade n");
    for (std::size_t a = 0; a < g.total_dim(); ++a) {
        HatElement res = derivation_action(s.h, g.basis()[a]) - Scalar(g.grade_of(a)) * g.basis()[a];
        grade.record(res.is_zero(), [&] { return "b" + std::to_string(a + 1); }, [&] { return "residual " + res.str(); });
    }
    grade.finish();
    return r;
}

// ---------------------------------------------------------------------------

Matrix lambda_operator(const TripleSystem& t, const Vec& x, const Vec& y)
{
    const Scalar eps = t.epsilon();
    return operator_K(t, x, y) + operator_L(t, x, y) * eps - operator_L(t, y, x) * (eps * t.delta());
}

Matrix nijenhuis(const TripleSystem& t, const WElement& x, const WElement& y, const Matrix& j)
{
    auto J = [&](const WElement& w) { return WElement::from_stacked(j * w.stacked()); };
    return w_bracket(t, J(x), J(y)) - j * w_bracket(t, J(x), y) - j * w_bracket(t, x, J(y)) + j * j * w_bracket(t, x, y);
}

Matrix nijenhuis_blocks(const TripleSystem& t, const WElement& x, const WElement& y)
{
    const Scalar eps = t.epsilon();
    const Scalar del = t.delta();
    const Matrix a = lambda_operator(t, x.top, y.bottom) + lambda_operator(t, x.bottom, y.top);
    const Matrix b = lambda_operator(t, x.bottom, y.bottom) - lambda_operator(t, x.top, y.top);
    return Matrix::blocks(a * (-eps), b * del, b * eps, a * del);
}

std::vector<Matrix> unimodular_samples()
{
    return {Matrix{{1, 1}, {0, 1}}, Matrix{{1, 0}, {1, 1}}, Matrix{{2, 1}, {1, 1}}, Matrix{{0, -1}, {1, 0}}};
}

VerificationReport nijenhuis_suite(const GradedLie& g, const std::vector<Matrix>& us)
{
    VerificationReport r;
    const TripleSystem& t = g.source();
    const std::size_t n = t.dim();
    const Sl2Triple s = sl2_triple(n);
    const Matrix J = s.f - s.g;
    const Matrix Jinv = inverse(J);
    const Scalar ed = Scalar(t.epsilon()) * t.delta();
    auto Jw = [&](const WElement& w) { return WElement::from_stacked(J * w.stacked()); };

    r.check(J * J == -Matrix::identity(2 * n), "nijenhuis.J_squared", "J^2 = -Id", (J * J).str());

    Sweep a12(r, "nijenhuis.conjugation", "J[X,Y]J^-1 = eps delta [JX,JY]");
    Sweep formula(r, "nijenhuis.block_formula", "N(X,Y) matches the Lambda block formula");
    bool n_zero = true;
    std::string n_witness;
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j) {
            const WElement x = w_unit(n, i), y = w_unit(n, j);
            auto label = [&] { return w_label(i, n) + "," + w_label(j, n); };
            Matrix res = J * w_bracket(t, x, y) * Jinv - w_bracket(t, Jw(x), Jw(y)) * ed;
            a12.record(res.is_zero(), label, [&] { return "residual " + res.str(); });
            const Matrix N = nijenhuis(t, x, y, J);
            Matrix diff = N - nijenhuis_blocks(t, x, y);
            formula.record(diff.is_zero(), label, [&] { return "residual " + diff.str(); });
            if (n_zero && !N.is_zero()) {
                n_zero = false;
                n_witness = "N" + label() + " = " + N.str();
            }
        }
    a12.finish();
    formula.finish();

    Sweep b12(r, "nijenhuis.triple_conjugation", "J[X,Y,Z] = eps delta [JX,JY,JZ]");
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j)
            for (std::size_t k = 0; k < 2 * n; ++k) {
                const WElement x = w_unit(n, i), y = w_unit(n, j), z = w_unit(n, k);
                Vec res = J * w_triple(t, x, y, z).stacked() - ed * w_triple(t, Jw(x), Jw(y), Jw(z)).stacked();
                b12.record(
                    is_zero(res), [&] { return w_label(i, n) + "," + w_label(j, n) + "," + w_label(k, n); },
                    [&] { return "residual " + to_string(res); });
            }
    b12.finish();

    const bool special = classify(t).is_special;
    r.pass("nijenhuis.value", n_zero ? "N vanishes identically" : "N is nonzero: " + n_witness);
    r.check(n_zero == special, "nijenhuis.zero_iff_special", "N = 0 exactly when the system is special",
            std::string("N ") + (n_zero ? "vanishes" : "nonzero") + ", system " + (special ? "special" : "not special"));

    if (special && t.epsilon() == t.delta()) {
        Sweep tilde(r, "nijenhuis.sl2_invariance", "U J U^-1 squares to -Id and has zero N");
        for (const auto& um : us.empty() ? unimodular_samples() : us) {
            const Matrix u = kron(um, Matrix::identity(n));
            const Matrix jt = u * J * inverse(u);
            const std::string ulabel = compact(um);
            tilde.record(jt * jt == -Matrix::identity(2 * n), [&] { return ulabel + ",square"; },
                         [&] { return (jt * jt).str(); });
            for (std::size_t i = 0; i < 2 * n; ++i)
                for (std::size_t j = 0; j < 2 * n; ++j) {
                    Matrix N = nijenhuis(t, w_unit(n, i), w_unit(n, j), jt);
                    tilde.record(
                        N.is_zero(), [&] { return ulabel + "," + w_label(i, n) + "," + w_label(j, n); },
                        [&] { return "N = " + N.str(); });
                }
        }
        tilde.finish();
    } else {
        r.skip("nijenhuis.sl2_invariance", "needs a special system with eps = delta");
    }
    return r;
}

// ---------------------------------------------------------------------------

namespace {

/// nabla_A B for A = D + X, B = D' + Y.
HatElement nabla(const TripleSystem& t, const HatElement& a, const HatElement& b)
{
    HatElement out;
    out.even = w_bracket(t, WElement::from_stacked(a.odd), WElement::from_stacked(b.odd)) - commutator(a.even, b.even);
    out.odd = b.even * a.odd - a.even * b.odd;
    return out;
}

}  // namespace

VerificationReport curvature_torsion_suite(const GradedLie& g)
{
    const TripleSystem& t = g.source();
    if (t.delta() != 1)
        throw Error("curvature and torsion are defined for the Lie triple system case (delta = +1)");
    const std::size_t n = t.dim();
    VerificationReport r;
    Sweep on_w(r, "curvature.R_on_W", "R(X,Y)Z = 0");
    Sweep on_even(r, "curvature.R_on_LWW", "R(X,Y)[V,Z] = 0");
    Sweep torsion(r, "torsion.T_equals_bracket", "T(X,Y) = [X,Y]");
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j) {
            const HatElement x = HatElement::from_odd(w_unit(n, i));
            const HatElement y = HatElement::from_odd(w_unit(n, j));
            const HatElement xy = HatElement::from_even(w_bracket(t, w_unit(n, i), w_unit(n, j)));
            for (std::size_t a = 0; a < g.total_dim(); ++a) {
                const HatElement& b = g.basis()[a];
                HatElement R = nabla(t, x, nabla(t, y, b)) - nabla(t, y, nabla(t, x, b)) - nabla(t, xy, b);
                (g.is_odd(a) ? on_w : on_even)
                    .record(
                        R.is_zero(), [&] { return w_label(i, n) + "," + w_label(j, n) + ",b" + std::to_string(a + 1); },
                        [&] { return "residual " + R.str(); });
            }
            HatElement T = nabla(t, x, y) - nabla(t, y, x) - xy;
            HatElement res = T - xy;
            torsion.record(res.is_zero(), [&] { return w_label(i, n) + "," + w_label(j, n); },
                           [&] { return "residual " + res.str(); });
        }
    on_w.finish();
    on_even.finish();
    torsion.finish();
    return r;
}

}  // namespace fkts
