#pragma once

// (epsilon, delta) Freudenthal-Kantor triple systems given by structure constants.

#include "fkts/exactfield.hpp"
#include "fkts/report.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace fkts {

enum class Sign : int { plus = 1, minus = -1 };

/// Parses +1 / -1 (also 1); throws Error otherwise.
Sign parse_sign(int v);
inline int value(Sign s) { return static_cast<int>(s); }

using TensorKey = std::array<std::size_t, 4>;

/// Trilinear product xyz on an n-dimensional space plus the sign pair
/// (epsilon, delta). c[{i,j,k,l}] is the coefficient of e_l in e_i e_j e_k;
/// absent keys are zero.
class TripleSystem {
public:
    TripleSystem(Sign epsilon, Sign delta, std::size_t dim, std::map<TensorKey, Scalar> coefficients);

    int epsilon() const { return value(epsilon_); }
    int delta() const { return value(delta_); }
    Sign epsilon_sign() const { return epsilon_; }
    Sign delta_sign() const { return delta_; }
    std::size_t dim() const { return dim_; }

    /// Nonzero coefficients only, in key order.
    const std::map<TensorKey, Scalar>& coefficients() const { return coefficients_; }
    Scalar coefficient(const TensorKey& key) const;

    /// e_i e_j e_k as a coordinate vector.
    const Vec& basis_product(std::size_t i, std::size_t j, std::size_t k) const
    {
        return basis_products_[(i * dim_ + j) * dim_ + k];
    }
    /// L(e_i, e_j) and K(e_i, e_j).
    const Matrix& L_basis(std::size_t i, std::size_t j) const { return L_[i * dim_ + j]; }
    const Matrix& K_basis(std::size_t i, std::size_t j) const { return K_[i * dim_ + j]; }

    /// Same tensor, every coefficient replaced by `value` at `key`.
    TripleSystem with_coefficient(const TensorKey& key, const Scalar& value) const;

    friend bool operator==(const TripleSystem& a, const TripleSystem& b)
    {
        return a.epsilon_ == b.epsilon_ && a.delta_ == b.delta_ && a.dim_ == b.dim_ &&
               a.coefficients_ == b.coefficients_;
    }

private:
    Sign epsilon_;
    Sign delta_;
    std::size_t dim_;
    std::map<TensorKey, Scalar> coefficients_;
    std::vector<Vec> basis_products_;
    std::vector<Matrix> L_;
    std::vector<Matrix> K_;
};

Vec triple_product(const TripleSystem& t, const Vec& x, const Vec& y, const Vec& z);
/// z -> xyz
Matrix operator_L(const TripleSystem& t, const Vec& x, const Vec& y);
/// z -> xzy - delta yzx
Matrix operator_K(const TripleSystem& t, const Vec& x, const Vec& y);

struct SweepOptions {
    /// Basis sweeps are O(n^4) instances of O(n^3) work; larger systems need an explicit override.
    std::size_t max_dim = 6;
};

/// Checks the two defining operator identities on every basis quadruple.
VerificationReport validate_fkts(const TripleSystem& t, const SweepOptions& opts = {});
/// Throws Error unless validate_fkts passes.
void require_fkts(const TripleSystem& t, const SweepOptions& opts = {});

/// The two expressions for K(u,v)K(x,y) in terms of L. Refuses systems that fail validate_fkts.
VerificationReport check_derived_identities(const TripleSystem& t, const SweepOptions& opts = {});

struct UnitaryPair {
    Vec a;
    Vec b;
};

struct ClassificationResult {
    bool is_special = false;
    /// 0-based basis pair (i, j) where K(e_i,e_j) differs from its L-expression.
    std::optional<std::pair<std::size_t, std::size_t>> special_witness;
    bool is_unitary = false;
    /// Pairs with sum_i K(a_i, b_i) = Id.
    std::optional<std::vector<UnitaryPair>> unitary_coeffs;
    bool is_balanced = false;
    /// <e_i|e_j> with K(e_i,e_j) = <e_i|e_j> Id.
    std::optional<Matrix> balanced_form;
};

ClassificationResult classify(const TripleSystem& t, const SweepOptions& opts = {});
/// Report form of classify, one entry per property (informational; never fails).
VerificationReport classification_report(const ClassificationResult& c);

/// xyz = <y|z> x for a form with <x|y> = -epsilon <y|x>.
TripleSystem make_bilinear_fkts(std::size_t n, const Matrix& form, Sign epsilon, Sign delta);

/// The system with identically zero product.
TripleSystem make_zero_fkts(std::size_t n, Sign epsilon, Sign delta);

/// Readable basis label e1..en (1-based), used in report instance ids.
std::string basis_label(std::size_t i);

}  // namespace fkts
