#include "qi/engine.hpp"

#include <algorithm>

namespace qi {

namespace {

// Monomials of the given degree supported on the active variables,
// ascending graded-lex, as full-arity exponent vectors.
std::vector<Monomial> active_monomials(int nvars, const std::vector<int>& active, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    auto sub = monomials_of_degree(static_cast<int>(active.size()), degree);
    out.reserve(sub.size());
    for (auto& s : sub) {
        Monomial m(nvars);
        for (size_t i = 0; i < active.size(); ++i) m.e[active[i]] = s.e[i];
        out.push_back(std::move(m));
    }
    return out;
}

QVec poly_coords(const Polynomial& p, const std::map<Monomial, int, GrlexGreater>& index) {
    QVec v(index.size(), Rational(0));
    for (auto& [m, c] : p.terms()) {
        auto it = index.find(m);
        if (it == index.end()) throw std::runtime_error("monomial outside component");
        v[it->second] = c;
    }
    return v;
}

}  // namespace

std::vector<Monomial> coinvariant_monomials(const Ring& ring, const std::vector<int>& active,
                                            const std::vector<Polynomial>& invariants,
                                            long long expected_total) {
    std::vector<Monomial> chosen;
    const int max_degree = [&] {
        int s = 0;
        for (auto& f : invariants) s += f.total_degree() - 1;
        return s;
    }();
    long long total = 0;
    for (int d = 0; d <= max_degree && total < expected_total; ++d) {
        auto monos = active_monomials(ring.nvars(), active, d);
        std::map<Monomial, int, GrlexGreater> index;
        for (auto& m : monos) index.emplace(m, 0);
        int pos = 0;
        for (auto& [m, i] : index) i = pos++;

        IncrementalSpan span(monos.size());
        for (auto& inv : invariants) {
            int degi = inv.total_degree();
            for (auto& m : active_monomials(ring.nvars(), active, d - degi))
                span.add(poly_coords(inv * Polynomial(ring, m, Rational(1)), index));
        }
        for (auto& m : monos) {  // ascending graded-lex
            QVec v(monos.size(), Rational(0));
            v[index.at(m)] = 1;
            if (span.add(std::move(v))) {
                chosen.push_back(m);
                if (++total == expected_total) break;
            }
        }
    }
    if (total != expected_total)
        throw std::runtime_error("coinvariant selection: dimension mismatch (bad invariants?)");
    return chosen;
}

std::vector<int> degree_distribution(const std::vector<Monomial>& monomials) {
    int maxd = 0;
    for (auto& m : monomials) maxd = std::max(maxd, m.degree());
    std::vector<int> dist(maxd + 1, 0);
    for (auto& m : monomials) ++dist[m.degree()];
    return dist;
}

void QElem::add(int i, const Polynomial& p) {
    if (p.is_zero()) return;
    auto it = parts.find(i);
    if (it == parts.end()) {
        parts.emplace(i, p);
    } else {
        it->second += p;
        if (it->second.is_zero()) parts.erase(it);
    }
}

QElem& QElem::operator+=(const QElem& o) {
    for (auto& [i, p] : o.parts) add(i, p);
    return *this;
}

QElem QElem::operator-(const QElem& o) const {
    QElem r = *this;
    for (auto& [i, p] : o.parts) r.add(i, -p);
    return r;
}

QElem QElem::scaled(const Polynomial& y_poly) const {
    QElem r;
    for (auto& [i, p] : parts) r.add(i, p * y_poly);
    return r;
}

CoinvariantReducer::CoinvariantReducer(const WeylGroup& W, std::vector<Polynomial> invariants_x,
                                       std::vector<Polynomial> images, Ring ambient,
                                       int max_x_degree)
    : weyl_(W),
      invariants_(std::move(invariants_x)),
      images_(std::move(images)),
      ambient_(std::move(ambient)),
      nx_(W.n),
      max_x_degree_(max_x_degree) {
    if (invariants_.size() != images_.size())
        throw std::invalid_argument("invariant/image count mismatch");
    std::vector<int> active;
    for (int i = 0; i < nx_; ++i) active.push_back(i);
    long long expected = 1;
    for (auto& f : invariants_) expected *= f.total_degree();
    basis_ = coinvariant_monomials(ambient_, active, invariants_, expected);
    for (size_t i = 0; i < basis_.size(); ++i) basis_index_.emplace(basis_[i], i);
}

void CoinvariantReducer::build_degree_solver(int degree) const {
    if (degree_solver_.count(degree)) return;
    std::vector<int> active;
    for (int i = 0; i < nx_; ++i) active.push_back(i);
    auto monos = active_monomials(ambient_.nvars(), active, degree);
    std::map<Monomial, int, GrlexGreater> index;
    for (auto& m : monos) index.emplace(m, 0);
    int pos = 0;
    for (auto& [m, i] : index) i = pos++;

    // Generators: the degree-d basis monomials first, then inv_j * lower
    // monomials; layout remembers which generator is which.
    SpanSolver solver(monos.size());
    std::vector<std::pair<int, Monomial>> layout;  // (-1-based basis id | j, aux monomial)
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].degree() != degree) continue;
        QVec v(monos.size(), Rational(0));
        v[index.at(basis_[i])] = 1;
        solver.add(std::move(v));
        layout.emplace_back(-static_cast<int>(i) - 1, Monomial());
    }
    for (size_t j = 0; j < invariants_.size(); ++j) {
        int degj = invariants_[j].total_degree();
        for (auto& m : active_monomials(ambient_.nvars(), active, degree - degj)) {
            solver.add(poly_coords(invariants_[j] * Polynomial(ambient_, m, Rational(1)), index));
            layout.emplace_back(static_cast<int>(j), m);
        }
    }
    // Stash the monomial index ordering alongside via a second lookup pass in
    // reduce_x_monomial (rebuilt there identically).
    degree_solver_.emplace(degree, std::move(solver));
    degree_layout_.emplace(degree, std::move(layout));
}

const QElem& CoinvariantReducer::reduce_x_monomial(const Monomial& xm) const {
    auto hit = memo_.find(xm);
    if (hit != memo_.end()) return hit->second;

    QElem out;
    auto bit = basis_index_.find(xm);
    if (bit != basis_index_.end()) {
        out.add(bit->second, Polynomial::one(ambient_));
    } else {
        int degree = xm.degree();
        if (degree > max_x_degree_)
            throw std::runtime_error("reducer: x-degree exceeds configured truncation");
        build_degree_solver(degree);
        std::vector<int> active;
        for (int i = 0; i < nx_; ++i) active.push_back(i);
        auto monos = active_monomials(ambient_.nvars(), active, degree);
        std::map<Monomial, int, GrlexGreater> index;
        for (auto& m : monos) index.emplace(m, 0);
        int pos = 0;
        for (auto& [m, i] : index) i = pos++;
        QVec target(monos.size(), Rational(0));
        target[index.at(xm)] = 1;
        auto comb = degree_solver_.at(degree).express(std::move(target));
        if (!comb) throw std::runtime_error("reducer: monomial not in span (bad invariants?)");
        auto& layout = degree_layout_.at(degree);
        for (size_t g = 0; g < comb->size(); ++g) {
            const Rational& c = (*comb)[g];
            if (c == 0) continue;
            auto& [tag, aux] = layout[g];
            if (tag < 0) {
                out.add(-tag - 1, Polynomial(ambient_, c));
            } else {
                // inv_j * aux contributes c * image_j * reduce(aux)
                const Polynomial& img = images_[tag];
                if (img.is_zero()) continue;
                const QElem& sub = reduce_x_monomial(aux);
                for (auto& [i, p] : sub.parts) out.add(i, p * img * c);
            }
        }
    }
    return memo_.emplace(xm, std::move(out)).first->second;
}

QElem CoinvariantReducer::reduce(const Polynomial& f) const {
    QElem out;
    for (auto& [m, c] : f.terms()) {
        Monomial xm(ambient_.nvars()), ym(ambient_.nvars());
        for (int i = 0; i < ambient_.nvars(); ++i)
            (i < nx_ ? xm.e[i] : ym.e[i]) = m.e[i];
        const QElem& red = reduce_x_monomial(xm);
        Polynomial yfac(ambient_, ym, c);
        for (auto& [i, p] : red.parts) out.add(i, p * yfac);
    }
    return out;
}

namespace {
bool comp_pair_less(const std::pair<int, Monomial>& a, const std::pair<int, Monomial>& b) {
    if (a.first != b.first) return a.first < b.first;
    return grlex_cmp(a.second, b.second) < 0;
}
}  // namespace

GradedComponentEngine::Component::Component() : index(comp_pair_less) {}

GradedComponentEngine::GradedComponentEngine(Kind kind, const WeylGroup& W,
                                             std::vector<Polynomial> invariants_x,
                                             Polynomial theta_y,
                                             std::optional<Polynomial> y_relation, int max_degree)
    : kind_(kind),
      W_(W),
      theta_y_(std::move(theta_y)),
      y_relation_(std::move(y_relation)),
      max_degree_(max_degree) {
    Ring ambient = theta_y_.ring();
    std::vector<Polynomial> images;
    for (auto& inv : invariants_x) {
        if (kind == Kind::BCom) {
            images.push_back(Polynomial::zero(ambient));
        } else {
            // mirror the invariant into the y block
            std::vector<Polynomial> subst;
            int n = W.n;
            for (int i = 0; i < 2 * n; ++i)
                subst.push_back(Polynomial::variable(ambient, i < n ? n + i : i));
            images.push_back(inv.substitute(subst));
        }
    }
    red_.emplace(W, std::move(invariants_x), std::move(images), ambient, max_degree);
}

Polynomial GradedComponentEngine::y_normal_form(const Polynomial& p) const {
    if (!y_relation_ || p.is_zero()) return p;
    return divrem(p, *y_relation_).second;
}

const GradedComponentEngine::Component& GradedComponentEngine::component(int degree) const {
    auto hit = components_.find(degree);
    if (hit != components_.end()) return hit->second;
    Component comp;
    const Ring& ambient = red_->ambient();
    const int n = W_.n;
    std::vector<int> yvars;
    int ystart = y_relation_ ? n + 1 : n;  // linear y relation eliminates y1
    for (int i = ystart; i < 2 * n; ++i) yvars.push_back(i);
    for (int b = 0; b < red_->basis_size(); ++b) {
        int rem = degree - red_->basis_degree(b);
        if (rem < 0) continue;
        for (auto& ym : active_monomials(ambient.nvars(), yvars, rem))
            comp.elems.emplace_back(b, ym);
    }
    int pos = 0;
    for (auto& e : comp.elems) comp.index.emplace(e, pos++);
    return components_.emplace(degree, std::move(comp)).first->second;
}

int GradedComponentEngine::dimension(int degree) const {
    return static_cast<int>(component(degree).elems.size());
}

std::vector<int> GradedComponentEngine::quotient_dimensions(int D) const {
    std::vector<int> dims;
    for (int d = 0; d <= D; ++d) dims.push_back(dimension(d));
    return dims;
}

QElem GradedComponentEngine::reduce(const Polynomial& f) const {
    QElem e = red_->reduce(y_normal_form(f));
    if (!y_relation_) return e;
    QElem out;
    for (auto& [i, p] : e.parts) out.add(i, y_normal_form(p));
    return out;
}

QVec GradedComponentEngine::coordinates(const QElem& e, int degree) const {
    const Component& comp = component(degree);
    QVec v(comp.elems.size(), Rational(0));
    for (auto& [i, p] : e.parts)
        for (auto& [m, c] : p.terms()) {
            auto it = comp.index.find({i, m});
            if (it == comp.index.end())
                throw std::runtime_error("element outside component (degree mismatch?)");
            v[it->second] = c;
        }
    return v;
}

QElem GradedComponentEngine::act_elem(const SignedPermutation& w, const QElem& e,
                                      Side side) const {
    const Ring& ambient = red_->ambient();
    QElem out;
    for (auto& [i, p] : e.parts) {
        Polynomial py = (side == Side::X) ? p : y_normal_form(act_xy(w, p, Side::Y));
        if (side == Side::Y) {
            out.add(i, py);
            continue;
        }
        // move w across the x-block basis monomial and re-reduce
        Polynomial bx(ambient, red_->basis()[i], Rational(1));
        QElem wb = red_->reduce(act_xy(w, bx, Side::X));
        for (auto& [j, q] : wb.parts) out.add(j, y_normal_form(q * py));
    }
    return out;
}

QElem GradedComponentEngine::mul_y(const QElem& e, const Polynomial& y_poly) const {
    QElem out;
    for (auto& [i, p] : e.parts) out.add(i, y_normal_form(p * y_poly));
    return out;
}

const std::vector<GradedComponentEngine::Piece>& GradedComponentEngine::pieces(
    int degree) const {
    auto hit = pieces_.find(degree);
    if (hit != pieces_.end()) return hit->second;
    const Component& comp = component(degree);
    std::vector<Piece> out;
    if (kind_ == Kind::Tensor) {
        Piece all;
        all.xdeg = -1;
        for (size_t i = 0; i < comp.elems.size(); ++i) all.cols.push_back(static_cast<int>(i));
        out.push_back(std::move(all));
    } else {
        std::map<int, Piece> by_deg;
        for (size_t i = 0; i < comp.elems.size(); ++i) {
            int xd = red_->basis_degree(comp.elems[i].first);
            by_deg[xd].xdeg = xd;
            by_deg[xd].cols.push_back(static_cast<int>(i));
        }
        for (auto& [xd, p] : by_deg) out.push_back(std::move(p));
    }
    return pieces_.emplace(degree, std::move(out)).first->second;
}

QElem GradedComponentEngine::component_element(int degree, int col) const {
    const Component& comp = component(degree);
    QElem e;
    e.add(comp.elems[col].first,
          Polynomial(red_->ambient(), comp.elems[col].second, Rational(1)));
    return e;
}

std::vector<QVec> GradedComponentEngine::piece_invariant_basis(int degree,
                                                               const Piece& piece) const {
    const size_t dim = piece.cols.size();
    std::vector<int> local(component(degree).elems.size(), -1);
    for (size_t i = 0; i < dim; ++i) local[piece.cols[i]] = static_cast<int>(i);

    std::vector<QVec> mat;
    for (auto& g : W_.generators) {
        std::vector<QVec> cols;
        cols.reserve(dim);
        for (size_t c = 0; c < dim; ++c) {
            QElem img = act_elem(g, component_element(degree, piece.cols[c]), Side::Diagonal);
            QVec full = coordinates(img, degree);
            QVec v(dim, Rational(0));
            for (size_t j = 0; j < full.size(); ++j) {
                if (full[j] == 0) continue;
                if (local[j] < 0)
                    throw std::runtime_error("diagonal action does not preserve the piece");
                v[local[j]] = full[j];
            }
            v[c] -= 1;
            cols.push_back(std::move(v));
        }
        for (size_t r = 0; r < dim; ++r) {
            QVec row(dim, Rational(0));
            bool nz = false;
            for (size_t c = 0; c < dim; ++c) {
                row[c] = cols[c][r];
                nz |= (row[c] != 0);
            }
            if (nz) mat.push_back(std::move(row));
        }
    }
    return nullspace(std::move(mat), dim);
}

int GradedComponentEngine::invariant_dimension(int degree) const {
    int total = 0;
    for (auto& p : pieces(degree))
        total += static_cast<int>(piece_invariant_basis(degree, p).size());
    return total;
}

std::vector<int> principal_quotient_dimensions(const Ring& ring, const Polynomial& theta,
                                               int D) {
    // Normal forms under division by theta are spanned by the monomials not
    // divisible by the leading monomial of theta.
    const Monomial& lead = theta.leading_monomial();
    std::vector<int> dims;
    std::vector<int> active;
    for (int i = 0; i < ring.nvars(); ++i) active.push_back(i);
    for (int d = 0; d <= D; ++d) {
        int count = 0;
        for (auto& m : active_monomials(ring.nvars(), active, d))
            if (!lead.divides(m)) ++count;
        dims.push_back(count);
    }
    return dims;
}

}  // namespace qi
