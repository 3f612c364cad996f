#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qi/polynomial.hpp"
#include "qi/qlinalg.hpp"
#include "qi/weyl.hpp"

namespace qi {

// Greedy graded-lex selection of monomials spanning the quotient of the
// polynomial ring on `active` variables by the ideal the `invariants`
// generate. Scans each degree in ascending graded-lex order and keeps the
// monomials whose images are independent modulo the ideal plus the earlier
// picks; stops once `expected_total` monomials are found.
std::vector<Monomial> coinvariant_monomials(const Ring& ring, const std::vector<int>& active,
                                            const std::vector<Polynomial>& invariants,
                                            long long expected_total);

// Per-degree counts for a selection of monomials.
std::vector<int> degree_distribution(const std::vector<Monomial>& monomials);

// Element of a quotient presented in coinvariant coordinates: a finite sum
// sum_i b_i(x) * p_i with b_i the selected x-block monomials and p_i
// supported on the y-block.
struct QElem {
    std::map<int, Polynomial> parts;

    bool is_zero() const { return parts.empty(); }
    void add(int i, const Polynomial& p);
    QElem& operator+=(const QElem& o);
    QElem operator-(const QElem& o) const;
    QElem scaled(const Polynomial& y_poly) const;
};

// Rewrites polynomials of the ambient xy ring modulo the ideal generated by
// invariants_x[j] - images[j], where invariants_x live in the x block and
// each image is either zero (coinvariant quotient) or a y-block polynomial
// of the same degree (tensor ring over the invariants). Exact linear algebra
// per x-degree; no Groebner machinery.
class CoinvariantReducer {
  public:
    CoinvariantReducer(const WeylGroup& W, std::vector<Polynomial> invariants_x,
                       std::vector<Polynomial> images, Ring ambient, int max_x_degree);

    const Ring& ambient() const { return ambient_; }
    const WeylGroup& weyl() const { return weyl_; }
    int basis_size() const { return static_cast<int>(basis_.size()); }
    const std::vector<Monomial>& basis() const { return basis_; }
    int basis_degree(int i) const { return basis_[i].degree(); }

    QElem reduce(const Polynomial& f) const;

  private:
    const QElem& reduce_x_monomial(const Monomial& xm) const;

    WeylGroup weyl_;
    std::vector<Polynomial> invariants_;
    std::vector<Polynomial> images_;
    Ring ambient_;
    int nx_;  // size of the x block
    int max_x_degree_ = 0;
    std::vector<Monomial> basis_;  // full-arity monomials, y part zero
    std::map<Monomial, int, GrlexGreater> basis_index_;
    mutable std::map<Monomial, QElem, GrlexGreater> memo_;
    mutable std::map<int, SpanSolver> degree_solver_;
    mutable std::map<int, std::vector<std::pair<int, Monomial>>> degree_layout_;
    void build_degree_solver(int degree) const;
};

// Graded components of the quotients used by the membership engine:
//   BCom:   Q[x,y]/(theta_j(x))            with optional extra y relation,
//   Tensor: Q[x,y]/(theta_j(x)-theta_j(y)).
// Components carry explicit bases {(i, y-monomial)}, and reflection actions
// are realized as exact matrices on those bases.
class GradedComponentEngine {
  public:
    enum class Kind { BCom, Tensor };

    GradedComponentEngine(Kind kind, const WeylGroup& W, std::vector<Polynomial> invariants_x,
                          Polynomial theta_y, std::optional<Polynomial> y_relation,
                          int max_degree);

    Kind kind() const { return kind_; }
    const Ring& ambient() const { return red_->ambient(); }
    const WeylGroup& weyl() const { return W_; }
    const Polynomial& theta_y() const { return theta_y_; }
    const CoinvariantReducer& reducer() const { return *red_; }
    int max_degree() const { return max_degree_; }

    // Component basis at the given total monomial degree.
    struct Component {
        std::vector<std::pair<int, Monomial>> elems;  // (basis index, reduced y-monomial)
        std::map<std::pair<int, Monomial>, int, bool (*)(const std::pair<int, Monomial>&,
                                                         const std::pair<int, Monomial>&)>
            index;
        Component();
    };
    const Component& component(int degree) const;
    int dimension(int degree) const;

    // Total quotient dimensions per monomial degree 0..D.
    std::vector<int> quotient_dimensions(int D) const;

    // Normal form of an ambient polynomial (y relation applied).
    QElem reduce(const Polynomial& f) const;
    // Coordinates of a reduced element in the degree-d component basis.
    QVec coordinates(const QElem& e, int degree) const;

    // w acting on the x block / y block / both, at the level of reduced
    // elements; y images are renormalized by the y relation.
    QElem act_elem(const SignedPermutation& w, const QElem& e, Side side) const;
    // Multiplication by a y-supported polynomial (with y normal form).
    QElem mul_y(const QElem& e, const Polynomial& y_poly) const;

    Polynomial y_normal_form(const Polynomial& p) const;

    // Blocks of the degree-d component preserved by every action the engine
    // exposes. For the coinvariant quotient both the diagonal action and the
    // y-side operations preserve the x-degree, so components split by it;
    // the tensor ring does not split (the x action re-reduces across
    // x-degrees), giving a single block.
    struct Piece {
        int xdeg;
        std::vector<int> cols;  // indices into component(degree).elems
    };
    const std::vector<Piece>& pieces(int degree) const;

    // Basis of the diagonal-W-fixed subspace of a piece, in piece-local
    // coordinates (entries follow piece.cols).
    std::vector<QVec> piece_invariant_basis(int degree, const Piece& piece) const;
    // Dimension of the diagonal-W-fixed subspace of the whole component.
    int invariant_dimension(int degree) const;

    // Action matrix entry extraction: image of one component basis element.
    QElem component_element(int degree, int col) const;

  private:
    Kind kind_;
    WeylGroup W_;
    Polynomial theta_y_;
    std::optional<Polynomial> y_relation_;
    int max_degree_;
    std::optional<CoinvariantReducer> red_;
    mutable std::map<int, Component> components_;
    mutable std::map<int, std::vector<Piece>> pieces_;
};

// Quotient Q[t1..tn]/(theta) by a single relation: graded dimensions via the
// normal-form monomial count (divrem by theta is a canonical normal form).
std::vector<int> principal_quotient_dimensions(const Ring& ring, const Polynomial& theta, int D);

}  // namespace qi
