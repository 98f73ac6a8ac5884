#pragma once

// Structurable algebras with involution, their d-operators, the S4-symmetric
// Lie algebra built from three copies of the algebra, and its embedding into
// the graded algebra of the associated (-1,1) system.

#include "fkts/exactfield.hpp"
#include "fkts/lie_construct.hpp"
#include "fkts/report.hpp"
#include "fkts/triple_system.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fkts {

/// Unital algebra with involution x -> xbar. product[i*n+j] = e_i e_j.
class StructurableAlgebra {
public:
    StructurableAlgebra(std::size_t dim, std::vector<Vec> product, Matrix involution, Vec unit);

    std::size_t dim() const { return dim_; }
    const Vec& basis_product(std::size_t i, std::size_t j) const { return product_[i * dim_ + j]; }
    const Matrix& involution() const { return inv_; }
    const Vec& unit() const { return unit_; }
    /// True when some structure constant lies outside Q.
    bool gaussian() const;

    Vec mul(const Vec& x, const Vec& y) const;
    Vec bar(const Vec& x) const { return inv_ * x; }
    /// l(x) y = xy
    Matrix l(const Vec& x) const;
    /// r(x) y = yx
    Matrix r(const Vec& x) const;
    /// Qbar = inv Q inv, so that bar(Q x) = Qbar bar(x).
    Matrix bar_op(const Matrix& q) const { return inv_ * q * inv_; }

private:
    std::size_t dim_;
    std::vector<Vec> product_;
    Matrix inv_;
    Vec unit_;
};

/// Unit, involution, skewness, the two d_3 forms, triality and the derived identities.
VerificationReport validate_algebra(const StructurableAlgebra& a);

/// d_j(x, y) with j taken mod 3 (d_0 = d_3). For j = 0 mod 3 both expressions are
/// computed; a mismatch throws StructuralError.
Matrix d_op(const StructurableAlgebra& a, int j, const Vec& x, const Vec& y);

/// xyz = (z ybar) x - (z xbar) y + (x ybar) z, as a (-1, 1) system.
TripleSystem make_structurable_fkts(const StructurableAlgebra& a);

/// Operators on the three rho slots.
struct TTriple {
    std::array<Matrix, 3> d;

    static TTriple zero(std::size_t n) { return {{Matrix(n, n), Matrix(n, n), Matrix(n, n)}}; }
    /// T_l(x, y) = (d_{l+1}, d_{l+2}, d_{l+3})(x, y)
    static TTriple generator(const StructurableAlgebra& a, int l, const Vec& x, const Vec& y);
    Vec flatten() const;
    static TTriple unflatten(const Vec& v, std::size_t n);
    bool is_zero() const { return d[0].is_zero() && d[1].is_zero() && d[2].is_zero(); }
    TTriple& operator+=(const TTriple& o);
    friend TTriple operator+(TTriple a, const TTriple& b) { return a += b; }
    friend TTriple operator-(const TTriple& a, const TTriple& b) { return a + (-1 * b); }
    friend TTriple operator*(const Scalar& s, TTriple a)
    {
        for (auto& m : a.d)
            m *= s;
        return a;
    }
    friend bool operator==(const TTriple& a, const TTriple& b) { return a.d == b.d; }
    std::string str() const;
};

TTriple commutator(const TTriple& a, const TTriple& b);

/// rho_1(A) + rho_2(A) + rho_3(A) + T(A,A), concretely.
struct S4Element {
    std::array<Vec, 3> rho;
    TTriple t;

    static S4Element zero(std::size_t n) { return {{Vec(n), Vec(n), Vec(n)}, TTriple::zero(n)}; }
    /// rho_j(x), j in 1..3
    static S4Element rho_of(int j, const Vec& x);
    static S4Element from_t(TTriple t);
    bool is_zero() const;
    S4Element& operator+=(const S4Element& o);
    friend S4Element operator+(S4Element a, const S4Element& b) { return a += b; }
    friend S4Element operator-(const S4Element& a, const S4Element& b) { return a + (-1 * b); }
    friend S4Element operator*(const Scalar& s, S4Element a);
    friend bool operator==(const S4Element& a, const S4Element& b) { return a.rho == b.rho && a.t == b.t; }
    std::string str() const;
};

class S4LieAlgebra {
public:
    const StructurableAlgebra& source() const { return source_; }
    const std::array<Scalar, 3>& gammas() const { return gammas_; }
    std::size_t n() const { return source_.dim(); }
    const SpanBasis& t_basis() const { return t_basis_; }
    std::size_t total_dim() const { return 3 * n() + t_basis_.dimension(); }

    /// Basis: rho_1(e_1..e_n), rho_2(...), rho_3(...), then the T basis.
    const std::vector<S4Element>& basis() const { return basis_; }
    S4Element bracket(const S4Element& a, const S4Element& b) const;
    std::optional<Vec> coordinates(const S4Element& e) const;
    S4Element element(const Vec& coords) const;
    const Vec& basis_bracket(std::size_t a, std::size_t b) const { return table_[a * total_dim() + b]; }

    /// Checks run during construction: T sum, T on rho, antisymmetry, Jacobi.
    const VerificationReport& construction_report() const { return report_; }

private:
    friend S4LieAlgebra build_s4_lie(const StructurableAlgebra& a, const std::array<Scalar, 3>& gammas);
    S4LieAlgebra(StructurableAlgebra a, std::array<Scalar, 3> g) : source_(std::move(a)), gammas_(std::move(g)) {}

    StructurableAlgebra source_;
    std::array<Scalar, 3> gammas_;
    SpanBasis t_basis_;
    std::vector<S4Element> basis_;
    std::vector<Vec> table_;
    VerificationReport report_;
};

/// Throws Error for zero gammas or an algebra failing validate_algebra, and
/// StructuralError (with witness) when closure or Jacobi fails.
S4LieAlgebra build_s4_lie(const StructurableAlgebra& a, const std::array<Scalar, 3>& gammas);

/// Cycle, tau, tau_1..tau_3 as automorphisms plus the group relations. Requires gammas = (1,1,1).
VerificationReport s4_action_check(const S4LieAlgebra& l);

enum class SignConvention {
    /// alpha^2 K entries of T_1 and T_2 as needed for the bracket relations
    corrected,
    /// opposite signs on the alpha^2 K entries; fails the bracket relations
    as_printed
};

struct EmbeddingParams {
    Scalar alpha = 1;
    Scalar beta = Scalar::fraction(-1, 2);
    Scalar k = 1;
    std::array<Scalar, 3> gammas{Scalar(-1), Scalar(1), Scalar(1)};
    SignConvention convention = SignConvention::corrected;

    /// gamma_2/gamma_3 = -2 alpha beta and gamma_3^2/(gamma_1 gamma_2) = -k^2; throws Error with residuals.
    void validate() const;
    /// alpha = 1, beta = -1/2, k = i, gammas = (1,1,1).
    static EmbeddingParams s4_symmetric();
};

/// rho_j(x) and T_j(x,y) inside the graded algebra of the (-1,1) system.
class Embedding {
public:
    Embedding(const StructurableAlgebra& a, const EmbeddingParams& p);

    const TripleSystem& system() const { return t_; }
    HatElement rho(int j, const Vec& x) const;
    HatElement T(int j, const Vec& x, const Vec& y) const;
    /// The d-operator block form of T_j.
    HatElement T_via_d(int j, const Vec& x, const Vec& y) const;

private:
    StructurableAlgebra a_;
    EmbeddingParams p_;
    TripleSystem t_;
};

/// Membership of rho_3, T_j in L(W,W) and the bracket relations inside the graded algebra.
VerificationReport embed_theorem31(const StructurableAlgebra& a, const EmbeddingParams& p);

/// Identities relating L, K of the associated system to l, r and the d_j.
/// With `params`, also compares T_j against its d-operator block form.
VerificationReport check_lemmas(const StructurableAlgebra& a, const std::optional<EmbeddingParams>& params = {});

/// The two commutator / anticommutator identities in the literal index form that
/// does not follow from triality (kept for comparison; fails on M_2).
VerificationReport check_lemma34_printed(const StructurableAlgebra& a);

StructurableAlgebra make_scalar_algebra();
/// 2x2 matrices, basis E11, E12, E21, E22, involution = transpose.
StructurableAlgebra make_m2_transpose();
/// 2x2 matrices with the identity as involution (not an anti-homomorphism).
StructurableAlgebra make_m2_identity_involution();

}  // namespace fkts
