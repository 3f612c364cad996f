#include "qi/ktheory.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qi/zlinalg.hpp"

namespace qi {

namespace {

LaurentPolynomial lvar(const Ring& r, int i) { return LaurentPolynomial::variable(r, i); }

LaurentPolynomial lvar_inv(const Ring& r, int i) {
    Monomial m(r.nvars());
    m.e[i] = -1;
    return LaurentPolynomial(r, m, Integer(1));
}

}  // namespace

RepRing u_rep_ring(int n) {
    RepRing R;
    R.name = "R(T) of U(" + std::to_string(n) + ")";
    R.ring = laurent_ring(n);
    R.weyl = symmetric_group(n);
    auto one = LaurentPolynomial::one(R.ring);
    LaurentPolynomial theta = one;
    for (int i = 0; i < n; ++i) theta = theta * (one - lvar(R.ring, i));
    R.Theta = theta;
    std::vector<LaurentPolynomial> zs;
    for (int i = 0; i < n; ++i) zs.push_back(lvar(R.ring, i));
    for (int i = 1; i <= n; ++i)
        R.invariant_generators.emplace_back("c" + std::to_string(i),
                                            elementary_symmetric(zs, i));
    return R;
}

RepRing sp_rep_ring(int n) {
    RepRing R;
    R.name = "R(T) of Sp(" + std::to_string(n) + ")";
    R.ring = laurent_ring(n);
    R.weyl = hyperoctahedral_group(n);
    auto one = LaurentPolynomial::one(R.ring);
    LaurentPolynomial theta = one;
    for (int i = 0; i < n; ++i)
        theta = theta * (one - lvar(R.ring, i)) * (one - lvar_inv(R.ring, i));
    R.Theta = theta;
    std::vector<LaurentPolynomial> chars;
    for (int i = 0; i < n; ++i) chars.push_back(lvar(R.ring, i) + lvar_inv(R.ring, i));
    for (int i = 1; i <= n; ++i)
        R.invariant_generators.emplace_back("q" + std::to_string(i),
                                            elementary_symmetric(chars, i));
    return R;
}

RepRing spin7_rep_ring() {
    RepRing R;
    R.name = "R(T) of Spin(7), z_i = u_i^2";
    R.ring = laurent_ring(3, "u");
    R.weyl = hyperoctahedral_group(3);
    auto one = LaurentPolynomial::one(R.ring);

    // The seven weights of the standard representation in the doubled
    // coordinates: u_i^2, u_i^{-2} and 0 (character 1).
    std::vector<LaurentPolynomial> weights;
    for (int i = 0; i < 3; ++i) {
        weights.push_back(lvar(R.ring, i) * lvar(R.ring, i));
        weights.push_back(lvar_inv(R.ring, i) * lvar_inv(R.ring, i));
    }
    weights.push_back(one);
    LaurentPolynomial lambda1 = elementary_symmetric(weights, 1);
    LaurentPolynomial lambda2 = elementary_symmetric(weights, 2);
    LaurentPolynomial lambda3 = elementary_symmetric(weights, 3);

    LaurentPolynomial delta = one;
    for (int i = 0; i < 3; ++i) delta = delta * (lvar(R.ring, i) + lvar_inv(R.ring, i));

    // Build-time identity of the spin character.
    if (!(delta * delta == one + lambda1 + lambda2 + lambda3))
        throw std::runtime_error("spin7_rep_ring: Delta^2 != 1 + l1 + l2 + l3");

    R.Theta = one + lambda1 - delta;
    R.invariant_generators.emplace_back("lambda1", std::move(lambda1));
    R.invariant_generators.emplace_back("lambda2", std::move(lambda2));
    R.invariant_generators.emplace_back("lambda3", std::move(lambda3));
    R.invariant_generators.emplace_back("Delta", std::move(delta));
    return R;
}

KMemberResult k_is_member(const LaurentPolynomial& f, const RepRing& R, int m) {
    KMemberResult res;
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    LaurentPolynomial theta_m = R.Theta.pow(m);
    for (int ri : R.weyl.reflections) {
        const SignedPermutation& s = R.weyl.elements[ri];
        LaurentPolynomial diff = act(s, f) - f;
        if (diff.is_zero()) continue;
        if (!laurent_divide_exact(diff, theta_m)) {
            res.member = false;
            res.witness = s;
            return res;
        }
    }
    res.member = true;
    return res;
}

namespace {

std::vector<Monomial> window_monomials(int nvars, int B) {
    std::vector<Monomial> out;
    Monomial m(nvars);
    auto rec = [&](auto&& self, int var) -> void {
        if (var == nvars) {
            out.push_back(m);
            return;
        }
        for (int e = -B; e <= B; ++e) {
            m.e[var] = e;
            self(self, var + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// Orbit sum with unit coefficients; the representative keys the orbit.
std::pair<Monomial, LaurentPolynomial> orbit_sum(const RepRing& R, const Monomial& m) {
    std::set<std::vector<int>> orbit;
    LaurentPolynomial mono(R.ring, m, Integer(1));
    for (auto& w : R.weyl.elements) {
        auto img = act(w, mono);
        orbit.insert(img.leading_monomial().e);
    }
    LaurentPolynomial sum(R.ring);
    for (auto& e : orbit) sum.add_term(Monomial(e), Integer(1));
    return {Monomial(*orbit.rbegin()), sum};
}

int max_abs_exponent(const LaurentPolynomial& p) {
    int s = 0;
    for (auto& [m, c] : p.terms())
        for (int e : m.e) s = std::max(s, std::abs(e));
    return s;
}

std::string mono_str(const Ring& ring, const Monomial& m) {
    return LaurentPolynomial(ring, m, Integer(1)).str();
}

}  // namespace

KPresentationReport k_presentation_check(const RepRing& R, int m, int B) {
    KPresentationReport rep;
    rep.ring = R.name;
    rep.m = m;
    rep.window = B;
    const int n = R.ring.nvars();
    LaurentPolynomial theta_m = R.Theta.pow(m);
    const int enlarged = B + max_abs_exponent(theta_m);
    rep.solver_window = enlarged;

    // Direction (i): symmetrized monomials plus Theta^m * monomial are members.
    std::map<std::vector<int>, LaurentPolynomial> sym;
    for (auto& w : window_monomials(n, B)) {
        auto [key, s] = orbit_sum(R, w);
        sym.emplace(key.e, s);
    }
    for (auto& [key, g] : sym) {
        for (auto& h : window_monomials(n, B)) {
            LaurentPolynomial cand = g + theta_m * LaurentPolynomial(R.ring, h, Integer(1));
            ++rep.synth_checked;
            if (!k_is_member(cand, R, m).member)
                rep.failures.push_back("synthesized non-member: " + cand.str());
        }
    }

    // Direction (ii): member monomials are integer combinations g + Theta^m h
    // with support in the enlarged window.
    auto gen_window = window_monomials(n, enlarged);
    std::map<std::vector<int>, LaurentPolynomial> gen_sym;
    for (auto& w : gen_window) {
        auto [key, s] = orbit_sum(R, w);
        gen_sym.emplace(key.e, s);
    }
    std::vector<LaurentPolynomial> columns;
    for (auto& [key, s] : gen_sym) columns.push_back(s);
    for (auto& h : gen_window)
        columns.push_back(theta_m * LaurentPolynomial(R.ring, h, Integer(1)));

    const int row_B = enlarged + max_abs_exponent(theta_m);
    auto row_monos = window_monomials(n, row_B);
    std::map<std::vector<int>, size_t> row_index;
    for (size_t i = 0; i < row_monos.size(); ++i) row_index[row_monos[i].e] = i;

    std::vector<ZVec> A(row_monos.size(), ZVec(columns.size(), Integer(0)));
    for (size_t c = 0; c < columns.size(); ++c)
        for (auto& [mm, coeff] : columns[c].terms()) A[row_index.at(mm.e)][c] = coeff;
    ZSolver solver(std::move(A), columns.size());

    for (auto& f : window_monomials(n, B)) {
        ++rep.monomials_checked;
        LaurentPolynomial mono(R.ring, f, Integer(1));
        if (!k_is_member(mono, R, m).member) continue;
        ++rep.members;
        ZVec b(row_monos.size(), Integer(0));
        b[row_index.at(f.e)] = 1;
        if (solver.solve(b)) ++rep.expressed;
        else rep.window_too_small.push_back(mono_str(R.ring, f));
    }
    return rep;
}

bool k_filtration_on_window(const RepRing& R, int m_max, int B) {
    for (auto& f : window_monomials(R.ring.nvars(), B)) {
        LaurentPolynomial mono(R.ring, f, Integer(1));
        for (int m = 1; m <= m_max; ++m) {
            if (k_is_member(mono, R, m).member && !k_is_member(mono, R, m - 1).member)
                return false;
        }
    }
    return true;
}

}  // namespace qi
