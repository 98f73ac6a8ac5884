#pragma once

// The Z2-graded algebra L(W,W) + W built on W = V + V, its 5-grading, and the
// Lie / anti-Lie triple system checks.

#include "fkts/exactfield.hpp"
#include "fkts/report.hpp"
#include "fkts/triple_system.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace fkts {

/// (x, y) in W = V + V. `top` is the x slot.
struct WElement {
    Vec top;
    Vec bottom;

    std::size_t dim() const { return top.size(); }
    /// Coordinates in W: top first, then bottom.
    Vec stacked() const { return concat(top, bottom); }
    static WElement from_stacked(const Vec& v);
    static WElement zero(std::size_t n) { return {Vec(n), Vec(n)}; }

    friend bool operator==(const WElement& a, const WElement& b) { return a.top == b.top && a.bottom == b.bottom; }
};

/// 2x2 block operator on V + V, stored as a 2n x 2n matrix.
using EvenOperator = Matrix;

/// The triple product [X1, X2, X3] on W.
WElement w_triple(const TripleSystem& t, const WElement& x1, const WElement& x2, const WElement& x3);
/// The even operator L(X1, X2) = [X1, X2].
EvenOperator w_bracket(const TripleSystem& t, const WElement& x1, const WElement& x2);

/// An element D + X of Mat2(End V) + W, before any basis is chosen.
struct HatElement {
    EvenOperator even;
    Vec odd;  // stacked W coordinates

    static HatElement zero(std::size_t n) { return {Matrix(2 * n, 2 * n), Vec(2 * n)}; }
    static HatElement from_even(EvenOperator d);
    static HatElement from_odd(const WElement& x);
    bool is_zero() const { return even.is_zero() && fkts::is_zero(odd); }
    HatElement& operator+=(const HatElement& o);
    HatElement& operator-=(const HatElement& o);
    friend HatElement operator+(HatElement a, const HatElement& b) { return a += b; }
    friend HatElement operator-(HatElement a, const HatElement& b) { return a -= b; }
    friend HatElement operator*(const Scalar& s, const HatElement& a) { return {a.even * s, s * a.odd}; }
    friend bool operator==(const HatElement& a, const HatElement& b) { return a.even == b.even && a.odd == b.odd; }
    std::string str() const;
};

/// [D1 + X1, D2 + X2] = ([D1,D2] + L(X1,X2)) + (D1 X2 - D2 X1).
HatElement hat_bracket(const TripleSystem& t, const HatElement& a, const HatElement& b);

/// Grades are -2..2; index with grade + 2.
constexpr int grade_index(int grade) { return grade + 2; }

/// Element with coefficients against the graded basis of the even part and an odd W part.
struct LieElement {
    Vec even;
    WElement odd;
};

/// The 5-graded Lie algebra (delta = +1) or superalgebra (delta = -1)
/// L(W,W) + W of a triple system. Immutable after construction.
class GradedLie {
public:
    const TripleSystem& source() const { return source_; }
    std::size_t n() const { return source_.dim(); }
    std::size_t odd_dim() const { return 2 * n(); }
    std::size_t total_dim() const { return basis_.size(); }
    std::size_t even_dim() const { return total_dim() - odd_dim(); }

    /// Span of every L(X, Y), flattened.
    const SpanBasis& even_span() const { return even_span_; }
    /// Basis of L_g, flattened 2n x 2n matrices for even g and W coordinates for odd g.
    const SpanBasis& grade(int g) const { return grades_.at(grade_index(g)); }
    std::array<std::size_t, 5> grade_dims() const;

    /// Graded basis: L_-2, L_-1, L_0, L_1, L_2, each in echelon order.
    const std::vector<HatElement>& basis() const { return basis_; }
    int grade_of(std::size_t basis_index) const { return grade_of_.at(basis_index); }
    bool is_odd(std::size_t basis_index) const { return grade_of(basis_index) % 2 != 0; }
    /// First basis index of grade g.
    std::size_t offset(int g) const { return offsets_.at(grade_index(g)); }

    /// Coordinates of a concrete element, or nullopt when outside L(W,W) + W.
    std::optional<Vec> coordinates(const HatElement& a) const;
    HatElement element(const Vec& coords) const;

    /// Structure constants: coordinates of [b_a, b_b].
    const Vec& basis_bracket(std::size_t a, std::size_t b) const { return table_[a * total_dim() + b]; }
    /// Bracket of coordinate vectors via the structure constants.
    Vec bracket(const Vec& a, const Vec& b) const;

    LieElement to_lie_element(const Vec& coords) const;
    Vec from_lie_element(const LieElement& e) const;

private:
    friend GradedLie build_graded_lie(const TripleSystem& t, const SweepOptions& opts);
    explicit GradedLie(TripleSystem t) : source_(std::move(t)) {}

    TripleSystem source_;
    SpanBasis even_span_;
    std::array<SpanBasis, 5> grades_;
    std::vector<HatElement> basis_;
    std::vector<int> grade_of_;
    std::array<std::size_t, 5> offsets_{};
    std::vector<Vec> table_;
};

/// Builds the graded algebra; certifies L(W,W) = L_-2 + L_0 + L_2 and closure of
/// every basis bracket (StructuralError otherwise). Requires validate_fkts to pass.
GradedLie build_graded_lie(const TripleSystem& t, const SweepOptions& opts = {});

/// Bracket of two elements, re-expressed in the stored bases.
LieElement lie_bracket(const GradedLie& g, const LieElement& a, const LieElement& b);

/// [L_i, L_j] lies in L_{i+j} (and vanishes when |i+j| > 2), per grade pair.
VerificationReport check_grading(const GradedLie& g);
/// Antisymmetry and Jacobi, with super signs when delta = -1.
VerificationReport check_graded_jacobi(const GradedLie& g);
/// Report entries describing the grade dimensions and the even-part certification.
VerificationReport describe_graded_lie(const GradedLie& g);

/// A trilinear product on a finite-dimensional space, as a black box.
struct TripleProduct {
    std::size_t dim = 0;
    std::function<Vec(const Vec&, const Vec&, const Vec&)> eval;
};

/// The W triple product of a system, on stacked coordinates.
TripleProduct w_triple_product(const TripleSystem& t);

/// Lie (delta = +1) or anti-Lie (delta = -1) triple system axioms on basis instances.
VerificationReport check_lts_axioms(const TripleProduct& product, int delta, const std::string& prefix = "lts");

/// [xyz] = (x Py z) - delta (y Px z) + delta (x Pz y) - (y Pz x). Throws Error naming the
/// violated condition when P^2 != -eps delta Id or P is not an automorphism of the product.
TripleProduct p_twist(const TripleSystem& t, const Matrix& p);

/// The system on V + V with product delta (x1 x2 x3, y1 y2 y3); its standard twist is the W product.
TripleSystem make_doubled_fkts(const TripleSystem& t);
/// [[0, delta Id], [-eps Id, 0]].
Matrix standard_twist(const TripleSystem& t);

}  // namespace fkts
