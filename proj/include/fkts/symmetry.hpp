#pragma once

// Outer symmetries of the graded algebra: theta, sigma(lambda), SL(2) maps,
// the sl(2) derivations h, f, g, the J / Nijenhuis structure and the
// curvature of the canonical connection.

#include "fkts/exactfield.hpp"
#include "fkts/lie_construct.hpp"
#include "fkts/report.hpp"
#include "fkts/triple_system.hpp"

#include <map>
#include <string>
#include <vector>

namespace fkts {

/// A map acting on W by the 2x2 matrix M (tensored with Id_V) and on the even
/// part by conjugation with the same block matrix.
class OuterMap {
public:
    enum class Kind { theta, sigma, unimodular, general_linear };

    /// theta(x, y) = (-eps y, delta x)
    static OuterMap theta(Sign epsilon, Sign delta);
    /// sigma(lambda)(x, y) = (lambda x, y / lambda); lambda != 0.
    static OuterMap sigma(const Scalar& lambda);
    /// (x, y) -> U (x, y); Det U must be exactly 1.
    static OuterMap unimodular(const Matrix& u);
    /// Any invertible U. Used to probe the determinant condition.
    static OuterMap general_linear(const Matrix& u);

    Kind kind() const { return kind_; }
    const Matrix& matrix() const { return m_; }
    std::string name() const { return name_; }

    /// M (x) Id_n and its inverse.
    Matrix block_matrix(std::size_t n) const;
    Matrix block_inverse(std::size_t n) const;

private:
    OuterMap(Kind k, Matrix m, std::string name) : kind_(k), m_(std::move(m)), name_(std::move(name)) {}
    Kind kind_;
    Matrix m_;
    std::string name_;
};

HatElement apply_outer(const OuterMap& m, const HatElement& a);
/// Coordinate form; throws StructuralError when the image leaves the algebra.
LieElement apply_outer(const GradedLie& g, const OuterMap& m, const LieElement& a);

/// m[a, b] = [m a, m b] over all basis pairs.
VerificationReport check_automorphism(const GradedLie& g, const OuterMap& m);

/// Nonzero sample values for sigma; adds i when the system has Gaussian coefficients.
std::vector<Scalar> lambda_samples(const TripleSystem& t);

/// sigma(1) = Id, theta^4 = Id, theta^2 on odd / even part, sigma(mu) sigma(nu) = sigma(mu nu),
/// sigma(l) theta sigma(l) = theta, sigma(l) = l^n on grade n, and the SL(2) images of theta, sigma.
/// Empty `lambdas` means lambda_samples(g.source()).
VerificationReport check_D_relations(const GradedLie& g, const std::vector<Scalar>& lambdas = {});

struct Sl2Triple {
    Matrix h;
    Matrix f;
    Matrix g;
};

/// h = diag(1, -1), f = [[0,1],[0,0]], g = [[0,0],[1,0]], each tensored with Id_n.
Sl2Triple sl2_triple(std::size_t n);

/// A X for X in W, [A, M] for M even.
HatElement derivation_action(const Matrix& a, const HatElement& x);

/// Derivation property of h, f, g on all basis pairs, and of f, g on W triples.
/// Passing f and g is expected exactly for special systems with eps = delta.
VerificationReport check_hfg_derivations(const GradedLie& g);

struct ModuleDecomposition {
    /// module dimension -> multiplicity
    std::map<std::size_t, std::size_t> counts;
    /// In coordinates of the external sum: algebra basis first, then h, f, g.
    std::vector<Vec> highest_weight_vectors;
    std::vector<int> highest_weights;
    std::size_t total_dim = 0;
};

/// sl(2)-module structure of the algebra plus sl(2) (external sum).
/// Requires a special system with eps = delta.
ModuleDecomposition decompose_sl2_modules(const GradedLie& g);
VerificationReport module_report(const GradedLie& g, const ModuleDecomposition& d);

/// Lambda(x, y) = K(x, y) + eps L(x, y) - eps delta L(y, x)
Matrix lambda_operator(const TripleSystem& t, const Vec& x, const Vec& y);
/// N(X, Y) with J = f - g acting by left multiplication.
Matrix nijenhuis(const TripleSystem& t, const WElement& x, const WElement& y, const Matrix& j);
/// The 2x2 block formula for N in terms of Lambda.
Matrix nijenhuis_blocks(const TripleSystem& t, const WElement& x, const WElement& y);
/// Sample unimodular matrices used for J -> U J U^-1.
std::vector<Matrix> unimodular_samples();

/// Empty `us` means unimodular_samples().
VerificationReport nijenhuis_suite(const GradedLie& g, const std::vector<Matrix>& us = {});

/// Requires delta = +1.
VerificationReport curvature_torsion_suite(const GradedLie& g);

}  // namespace fkts
