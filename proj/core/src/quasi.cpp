#include "qi/quasi.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qi/descent.hpp"

namespace qi {

namespace {
constexpr int kEngineMaxDegree = 40;
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Flag: return "flag";
        case Variant::TEquiv: return "t-equiv";
        case Variant::BCom: return "bcom";
        case Variant::Filtered: return "filtered";
    }
    return "?";
}

std::string bcom_family_name(BComFamily f) {
    switch (f) {
        case BComFamily::U: return "u";
        case BComFamily::SU: return "su";
        case BComFamily::Sp: return "sp";
    }
    return "?";
}

std::string QuasiSpec::label() const {
    std::ostringstream out;
    out << variant_name(variant) << ":";
    if (pair) out << pair->name;
    if (family) out << bcom_family_name(*family) << ":" << bcom_n;
    if (filtered) out << filtered->name;
    out << ":m=";
    if (variant == Variant::Filtered) {
        for (size_t i = 0; i < multiplicities.size(); ++i)
            out << (i ? "," : "") << multiplicities[i];
    } else {
        out << m;
    }
    return out.str();
}

int QuasiSpec::theta_power_degree() const {
    switch (variant) {
        case Variant::Flag:
        case Variant::TEquiv: return m * pair->k;
        case Variant::BCom: {
            int nk = (family == BComFamily::Sp) ? 2 * bcom_n : bcom_n;
            return m * nk;
        }
        default: throw std::logic_error("theta_power_degree: filtered variant");
    }
}

QuasiSpec flag_spec(PairSpec pair, int m) {
    QuasiSpec s;
    s.variant = Variant::Flag;
    s.pair = std::move(pair);
    s.m = m;
    return s;
}

QuasiSpec tequiv_spec(PairSpec pair, int m) {
    QuasiSpec s;
    s.variant = Variant::TEquiv;
    s.pair = std::move(pair);
    s.m = m;
    return s;
}

QuasiSpec bcom_spec(BComFamily family, int n, int m) {
    QuasiSpec s;
    s.variant = Variant::BCom;
    s.family = family;
    s.bcom_n = n;
    s.m = m;
    return s;
}

QuasiSpec filtered_join_spec(FilteredSpec chain, std::vector<int> multiplicities) {
    if (chain.chain.size() != multiplicities.size())
        throw std::invalid_argument("multiplicity count != chain length");
    QuasiSpec s;
    s.variant = Variant::Filtered;
    s.filtered = std::move(chain);
    s.multiplicities = std::move(multiplicities);
    return s;
}

// ---------------------------------------------------------------------------
// Engines

const GradedComponentEngine& bcom_engine(BComFamily family, int n) {
    static std::map<std::pair<int, int>, std::unique_ptr<GradedComponentEngine>> cache;
    auto key = std::make_pair(static_cast<int>(family), n);
    auto hit = cache.find(key);
    if (hit != cache.end()) return *hit->second;

    Ring xy = xy_ring(n);
    WeylGroup W = (family == BComFamily::Sp) ? hyperoctahedral_group(n) : symmetric_group(n);
    std::vector<Polynomial> inv_x;
    for (int i = 1; i <= n; ++i)
        inv_x.push_back(family == BComFamily::Sp ? elem_sym_squares(xy, 0, n, i)
                                                 : elem_sym(xy, 0, n, i));
    Polynomial theta_y = (family == BComFamily::Sp) ? elem_sym_squares(xy, n, n, n)
                                                    : elem_sym(xy, n, n, n);
    std::optional<Polynomial> y_rel;
    if (family == BComFamily::SU) y_rel = elem_sym(xy, n, n, 1);
    auto eng = std::make_unique<GradedComponentEngine>(GradedComponentEngine::Kind::BCom, W,
                                                       std::move(inv_x), std::move(theta_y),
                                                       std::move(y_rel), kEngineMaxDegree);
    return *cache.emplace(key, std::move(eng)).first->second;
}

const GradedComponentEngine& tensor_engine(const PairSpec& pair) {
    static std::map<std::string, std::unique_ptr<GradedComponentEngine>> cache;
    auto hit = cache.find(pair.name);
    if (hit != cache.end()) return *hit->second;
    if (pair.ambient_relation)
        throw std::invalid_argument("tensor variant unsupported for reduced pairs");

    int n = pair.n;
    Ring xy = xy_ring(n);
    std::vector<Polynomial> x_imgs, y_imgs;
    for (int i = 0; i < n; ++i) x_imgs.push_back(Polynomial::variable(xy, i));
    for (int i = 0; i < n; ++i) y_imgs.push_back(Polynomial::variable(xy, n + i));
    std::vector<Polynomial> inv_x;
    for (auto& inv : pair.fundamental_invariants) inv_x.push_back(inv.substitute(x_imgs));
    Polynomial theta_y = pair.euler_theta.substitute(y_imgs);
    auto eng = std::make_unique<GradedComponentEngine>(GradedComponentEngine::Kind::Tensor,
                                                       pair.weyl, std::move(inv_x),
                                                       std::move(theta_y), std::nullopt,
                                                       kEngineMaxDegree);
    return *cache.emplace(pair.name, std::move(eng)).first->second;
}

// ---------------------------------------------------------------------------
// Membership

namespace {

MemberResult member_flag_homogeneous(const Polynomial& f, const PairSpec& pair, int m) {
    MemberResult res;
    Polynomial fr = pair.normal_form(f);
    Polynomial theta_m = pair.euler_theta.pow(m);
    for (int ri : pair.weyl.reflections) {
        const SignedPermutation& s = pair.weyl.elements[ri];
        Polynomial diff = pair.act_reduced(s, fr) - fr;
        if (diff.is_zero()) continue;
        if (!divide_exact(diff, theta_m)) {
            res.witness = s;
            res.detail = "congruence fails at reflection " + s.str();
            return res;
        }
    }
    res.member = true;
    return res;
}

MemberResult member_filtered_homogeneous(const Polynomial& f, const FilteredSpec& chain,
                                         const std::vector<int>& mult) {
    MemberResult res;
    for (size_t i = 0; i < chain.chain.size(); ++i) {
        const FilteredStep& st = chain.chain[i];
        Polynomial theta_m = st.theta.pow(mult[i]);
        for (int ri : st.weyl.reflections) {
            const SignedPermutation& s = st.weyl.elements[ri];
            Polynomial diff = act(s, f) - f;
            if (diff.is_zero()) continue;
            if (!divide_exact(diff, theta_m)) {
                res.witness = s;
                res.detail = "chain step " + std::to_string(i + 1) +
                             ": congruence fails at reflection " + s.str();
                return res;
            }
        }
    }
    res.member = true;
    return res;
}

// Is `e` in theta^m * (component at degree - theta_deg)? Checked against the
// explicit spanning set inside the degree-d component.
bool in_theta_image(const GradedComponentEngine& eng, const QElem& e, int degree, int m) {
    if (e.is_zero()) return true;
    if (m == 0) return true;
    Polynomial theta_m = eng.theta_y().pow(m);
    int lower = degree - theta_m.total_degree();
    if (lower < 0) return false;
    IncrementalSpan span(eng.dimension(degree));
    for (int c = 0; c < eng.dimension(lower); ++c) {
        QElem img = eng.mul_y(eng.component_element(lower, c), theta_m);
        span.add(eng.coordinates(img, degree));
    }
    return span.contains(eng.coordinates(e, degree));
}

MemberResult member_bcom_homogeneous(const Polynomial& f, BComFamily family, int n, int m) {
    const GradedComponentEngine& eng = bcom_engine(family, n);
    MemberResult res;
    if (!is_invariant_diagonal(eng.weyl(), f))
        throw std::invalid_argument("bcom membership input must be diagonal-invariant");
    QElem fe = eng.reduce(f);
    if (fe.is_zero()) {
        res.member = true;
        return res;
    }
    // Parts live in coinvariant coordinates; the congruence decouples per
    // coordinate because the y action fixes the x-block basis index.
    Polynomial theta_m = eng.y_normal_form(eng.theta_y().pow(m));
    for (int ri : eng.weyl().reflections) {
        const SignedPermutation& s = eng.weyl().elements[ri];
        QElem diff = eng.act_elem(s, fe, Side::Y) - fe;
        for (auto& [i, p] : diff.parts) {
            if (p.is_zero()) continue;
            if (!divide_exact(p, theta_m)) {
                res.witness = s;
                res.detail = "congruence fails at reflection " + s.str();
                return res;
            }
        }
    }
    res.member = true;
    return res;
}

MemberResult member_tequiv_homogeneous(const Polynomial& f, const PairSpec& pair, int m) {
    const GradedComponentEngine& eng = tensor_engine(pair);
    MemberResult res;
    QElem fe = eng.reduce(f);
    if (fe.is_zero()) {
        res.member = true;
        return res;
    }
    int degree = f.homogeneous_degree().value();
    for (int ri : pair.weyl.reflections) {
        const SignedPermutation& s = pair.weyl.elements[ri];
        QElem diff = eng.act_elem(s, fe, Side::X) - fe;
        if (!in_theta_image(eng, diff, degree, m)) {
            res.witness = s;
            res.detail = "congruence fails at reflection " + s.str();
            return res;
        }
    }
    res.member = true;
    return res;
}

}  // namespace

MemberResult is_member(const Polynomial& f, const QuasiSpec& spec) {
    // Membership is degreewise: test each homogeneous component.
    std::vector<int> degs = f.degrees_present();
    std::sort(degs.begin(), degs.end());
    if (degs.empty()) {
        MemberResult res;
        res.member = true;
        return res;
    }
    for (int d : degs) {
        Polynomial comp = f.component(d);
        MemberResult r;
        switch (spec.variant) {
            case Variant::Flag: r = member_flag_homogeneous(comp, *spec.pair, spec.m); break;
            case Variant::Filtered:
                r = member_filtered_homogeneous(comp, *spec.filtered, spec.multiplicities);
                break;
            case Variant::BCom:
                r = member_bcom_homogeneous(comp, *spec.family, spec.bcom_n, spec.m);
                break;
            case Variant::TEquiv: r = member_tequiv_homogeneous(comp, *spec.pair, spec.m); break;
        }
        if (!r.member) {
            if (degs.size() > 1) r.detail += " (homogeneous part of degree " + std::to_string(d) + ")";
            return r;
        }
    }
    MemberResult res;
    res.member = true;
    return res;
}

// ---------------------------------------------------------------------------
// Bases

std::vector<int> FreeBasis::monomial_degrees() const {
    std::vector<int> out;
    for (auto& e : elements) out.push_back(e.is_zero() ? 0 : e.homogeneous_degree().value());
    return out;
}

std::vector<int> FreeBasis::coh_degrees() const {
    auto out = monomial_degrees();
    for (int& d : out) d *= 2;
    return out;
}

FreeBasis coinvariant_basis(const WeylGroup& W, const std::vector<Polynomial>& invariants,
                            const Ring& ring) {
    std::vector<int> active;
    for (int i = 0; i < ring.nvars(); ++i) active.push_back(i);
    long long expected = 1;
    for (auto& f : invariants) expected *= f.total_degree();
    FreeBasis basis;
    for (auto& f : invariants) basis.base_degrees.push_back(f.total_degree());
    for (auto& m : coinvariant_monomials(ring, active, invariants, expected))
        basis.elements.push_back(Polynomial(ring, m, Rational(1)));
    return basis;
}

FreeBasis coinvariant_basis(const PairSpec& pair) {
    long long expected = 1;
    for (int d : pair.degrees) expected *= d;
    FreeBasis basis;
    basis.base_degrees = pair.degrees;
    for (auto& m :
         coinvariant_monomials(pair.ring, pair.active_vars(), pair.fundamental_invariants,
                               expected))
        basis.elements.push_back(Polynomial(pair.ring, m, Rational(1)));
    return basis;
}

std::vector<Polynomial> relative_invariant_basis(const WeylGroup& W1,
                                                 const std::vector<Polynomial>& upper_invariants,
                                                 const Ring& ring, long long expected) {
    std::vector<Polynomial> chosen;
    int max_degree = 0;
    for (auto& f : upper_invariants) max_degree += f.total_degree() - 1;
    std::vector<int> active;
    for (int i = 0; i < ring.nvars(); ++i) active.push_back(i);

    // Orbit-sum spanning sets of the W1-invariants, per degree, keyed and
    // deduplicated by leading monomial, normalized monic.
    auto orbit_sums = [&](int d) {
        std::map<Monomial, Polynomial, GrlexGreater> sums;
        for (auto& m : monomials_of_degree(ring.nvars(), d)) {
            Polynomial rho = reynolds(W1, Polynomial(ring, m, Rational(1)));
            if (rho.is_zero()) continue;
            Polynomial monic = rho * (1 / rho.leading_coefficient());
            sums.emplace(monic.leading_monomial(), monic);
        }
        // ascending graded-lex by leading monomial
        std::vector<Polynomial> out;
        for (auto it = sums.rbegin(); it != sums.rend(); ++it) out.push_back(it->second);
        return out;
    };

    long long total = 0;
    std::vector<std::vector<Polynomial>> per_degree;  // W1-invariant bases found so far
    for (int d = 0; d <= max_degree && total < expected; ++d) {
        auto candidates = orbit_sums(d);
        auto monos = monomials_of_degree(ring.nvars(), d);
        std::map<Monomial, int, GrlexGreater> index;
        for (auto& m : monos) index.emplace(m, 0);
        int pos = 0;
        for (auto& [m, i] : index) i = pos++;
        auto coords = [&](const Polynomial& p) {
            QVec v(monos.size(), Rational(0));
            for (auto& [m, c] : p.terms()) v[index.at(m)] = c;
            return v;
        };

        IncrementalSpan span(monos.size());
        for (auto& up : upper_invariants) {
            int degu = up.total_degree();
            if (degu > d) continue;
            if (d - degu >= static_cast<int>(per_degree.size())) continue;
            for (auto& b : per_degree[d - degu]) span.add(coords(up * b));
        }
        for (auto& cand : candidates) {
            if (span.add(coords(cand))) {
                chosen.push_back(cand);
                if (++total == expected) break;
            }
        }
        // All degree-d W1-invariants, for the ideal spans of later degrees.
        per_degree.push_back(orbit_sums(d));
    }
    if (total != expected)
        throw std::runtime_error("relative basis selection: dimension mismatch");
    return chosen;
}

namespace {

FreeBasis qm_basis_flag(const PairSpec& pair, int m) {
    FreeBasis cb = coinvariant_basis(pair);
    Polynomial theta_m = pair.euler_theta.pow(m);
    FreeBasis out;
    out.base_degrees = cb.base_degrees;
    out.elements.push_back(Polynomial::one(pair.ring));
    for (size_t i = 1; i < cb.elements.size(); ++i)
        out.elements.push_back(theta_m * cb.elements[i]);
    return out;
}

FreeBasis qm_basis_tequiv(const PairSpec& pair, int m) {
    const GradedComponentEngine& eng = tensor_engine(pair);
    const Ring& xy = eng.ambient();
    FreeBasis out;
    out.base_degrees.assign(pair.n, 1);
    std::vector<Polynomial> ximg;
    for (int i = 0; i < pair.n; ++i) ximg.push_back(Polynomial::variable(xy, i));
    Polynomial theta_x_m = pair.euler_theta.substitute(ximg).pow(m);
    out.elements.push_back(Polynomial::one(xy));
    const auto& basis = eng.reducer().basis();
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_one()) continue;
        out.elements.push_back(theta_x_m * Polynomial(xy, basis[i], Rational(1)));
    }
    return out;
}

FreeBasis qm_basis_bcom(BComFamily family, int n, int m) {
    const GradedComponentEngine& eng = bcom_engine(family, n);
    const Ring& xy = eng.ambient();
    FreeBasis out;
    if (family == BComFamily::U)
        for (int i = 1; i <= n; ++i) out.base_degrees.push_back(i);
    if (family == BComFamily::SU)
        for (int i = 2; i <= n; ++i) out.base_degrees.push_back(i);
    if (family == BComFamily::Sp)
        for (int i = 1; i <= n; ++i) out.base_degrees.push_back(2 * i);

    Polynomial theta_m = eng.theta_y().pow(m);
    std::vector<Polynomial> gens;  // descent invariants, identity excluded
    const WeylGroup& W = eng.weyl();
    for (auto& sigma : W.elements) {
        if (sigma.is_identity()) continue;
        Polynomial g = (family == BComFamily::Sp) ? signed_descent_invariant(W, sigma, xy)
                                                  : descent_invariant(W, sigma, xy);
        gens.push_back(g * theta_m);
    }
    std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        int da = a.homogeneous_degree().value(), db = b.homogeneous_degree().value();
        if (da != db) return da < db;
        return grlex_cmp(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    out.elements.push_back(Polynomial::one(xy));
    for (auto& g : gens) out.elements.push_back(std::move(g));
    return out;
}

FreeBasis qm_basis_filtered(const FilteredSpec& chain, const std::vector<int>& mult) {
    if (chain.chain.size() == 1) {
        const FilteredStep& st = chain.chain[0];
        FreeBasis cb = coinvariant_basis(st.weyl, st.invariants, chain.ring);
        Polynomial theta_m = st.theta.pow(mult[0]);
        FreeBasis out;
        out.base_degrees = cb.base_degrees;
        out.elements.push_back(Polynomial::one(chain.ring));
        for (size_t i = 1; i < cb.elements.size(); ++i)
            out.elements.push_back(theta_m * cb.elements[i]);
        return out;
    }
    if (chain.chain.size() != 2)
        throw std::invalid_argument("filtered bases implemented for chains of length 1 and 2");

    const FilteredStep& st1 = chain.chain[0];
    const FilteredStep& st2 = chain.chain[1];
    long long rel_rank =
        static_cast<long long>(st2.weyl.order()) / static_cast<long long>(st1.weyl.order());
    auto rel = relative_invariant_basis(st1.weyl, st2.invariants, chain.ring, rel_rank);
    FreeBasis low = coinvariant_basis(st1.weyl, st1.invariants, chain.ring);
    Polynomial t1m = st1.theta.pow(mult[0]);
    Polynomial t2m = st2.theta.pow(mult[1]);

    FreeBasis out;
    for (auto& f : st2.invariants) out.base_degrees.push_back(f.total_degree());
    out.elements.push_back(Polynomial::one(chain.ring));
    for (auto& c : rel) {
        if (c.total_degree() == 0) continue;
        out.elements.push_back(t2m * c);
    }
    for (auto& b : low.elements) {
        if (b.total_degree() == 0) continue;
        for (auto& c : rel) out.elements.push_back(t2m * t1m * c * b);
    }
    return out;
}

}  // namespace

FreeBasis qm_basis(const QuasiSpec& spec) {
    switch (spec.variant) {
        case Variant::Flag: return qm_basis_flag(*spec.pair, spec.m);
        case Variant::TEquiv: return qm_basis_tequiv(*spec.pair, spec.m);
        case Variant::BCom: return qm_basis_bcom(*spec.family, spec.bcom_n, spec.m);
        case Variant::Filtered: return qm_basis_filtered(*spec.filtered, spec.multiplicities);
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Degreewise oracle

namespace {

int oracle_flag(const PairSpec& pair, int m, int h) {
    const Ring& ring = pair.ring;
    auto active = pair.active_vars();
    std::vector<Monomial> monos;
    {
        auto sub = monomials_of_degree(static_cast<int>(active.size()), h);
        for (auto& s : sub) {
            Monomial mm(ring.nvars());
            for (size_t i = 0; i < active.size(); ++i) mm.e[active[i]] = s.e[i];
            monos.push_back(std::move(mm));
        }
    }
    std::map<Monomial, int, GrlexGreater> index;
    for (auto& mm : monos) index.emplace(mm, 0);
    int pos = 0;
    for (auto& [mm, i] : index) i = pos++;
    auto coords = [&](const Polynomial& p) {
        QVec v(monos.size(), Rational(0));
        for (auto& [mm, c] : p.terms()) v[index.at(mm)] = c;
        return v;
    };

    Polynomial theta_m = pair.euler_theta.pow(m);
    IncrementalSpan image(monos.size());
    int lower = h - theta_m.total_degree();
    if (lower >= 0) {
        auto sub = monomials_of_degree(static_cast<int>(active.size()), lower);
        for (auto& s : sub) {
            Monomial mm(ring.nvars());
            for (size_t i = 0; i < active.size(); ++i) mm.e[active[i]] = s.e[i];
            image.add(coords(theta_m * Polynomial(ring, mm, Rational(1))));
        }
    }

    std::vector<QVec> rows;
    for (int ri : pair.weyl.reflections) {
        const SignedPermutation& s = pair.weyl.elements[ri];
        std::vector<QVec> residual_cols;
        bool any = false;
        for (auto& mm : monos) {
            Polynomial diff =
                pair.act_reduced(s, Polynomial(ring, mm, Rational(1))) - Polynomial(ring, mm, Rational(1));
            QVec r = image.reduce(coords(diff));
            any |= !IncrementalSpan::is_zero(r);
            residual_cols.push_back(std::move(r));
        }
        if (!any) continue;
        for (size_t p = 0; p < monos.size(); ++p) {
            QVec row(monos.size(), Rational(0));
            bool nz = false;
            for (size_t j = 0; j < monos.size(); ++j) {
                row[j] = residual_cols[j][p];
                nz |= (row[j] != 0);
            }
            if (nz) rows.push_back(std::move(row));
        }
    }
    return static_cast<int>(nullspace(std::move(rows), monos.size()).size());
}

int oracle_filtered(const FilteredSpec& chain, const std::vector<int>& mult, int h) {
    const Ring& ring = chain.ring;
    auto monos = monomials_of_degree(ring.nvars(), h);
    std::map<Monomial, int, GrlexGreater> index;
    for (auto& mm : monos) index.emplace(mm, 0);
    int pos = 0;
    for (auto& [mm, i] : index) i = pos++;
    auto coords = [&](const Polynomial& p) {
        QVec v(monos.size(), Rational(0));
        for (auto& [mm, c] : p.terms()) v[index.at(mm)] = c;
        return v;
    };

    std::vector<QVec> rows;
    for (size_t step = 0; step < chain.chain.size(); ++step) {
        const FilteredStep& st = chain.chain[step];
        Polynomial theta_m = st.theta.pow(mult[step]);
        IncrementalSpan image(monos.size());
        int lower = h - theta_m.total_degree();
        if (lower >= 0)
            for (auto& mm : monomials_of_degree(ring.nvars(), lower))
                image.add(coords(theta_m * Polynomial(ring, mm, Rational(1))));
        for (int ri : st.weyl.reflections) {
            const SignedPermutation& s = st.weyl.elements[ri];
            std::vector<QVec> residual_cols;
            for (auto& mm : monos) {
                Polynomial base(ring, mm, Rational(1));
                residual_cols.push_back(image.reduce(coords(act(s, base) - base)));
            }
            for (size_t p = 0; p < monos.size(); ++p) {
                QVec row(monos.size(), Rational(0));
                bool nz = false;
                for (size_t j = 0; j < monos.size(); ++j) {
                    row[j] = residual_cols[j][p];
                    nz |= (row[j] != 0);
                }
                if (nz) rows.push_back(std::move(row));
            }
        }
    }
    return static_cast<int>(nullspace(std::move(rows), monos.size()).size());
}

int oracle_tequiv(const PairSpec& pair, int m, int h) {
    const GradedComponentEngine& eng = tensor_engine(pair);
    int dim = eng.dimension(h);
    if (dim == 0) return 0;

    Polynomial theta_m = eng.theta_y().pow(m);
    IncrementalSpan image(dim);
    int lower = h - theta_m.total_degree();
    if (lower >= 0)
        for (int c = 0; c < eng.dimension(lower); ++c)
            image.add(eng.coordinates(eng.mul_y(eng.component_element(lower, c), theta_m), h));

    std::vector<QVec> rows;
    for (int ri : pair.weyl.reflections) {
        const SignedPermutation& s = pair.weyl.elements[ri];
        std::vector<QVec> residual_cols;
        for (int c = 0; c < dim; ++c) {
            QElem e = eng.component_element(h, c);
            QElem diff = eng.act_elem(s, e, Side::X) - e;
            residual_cols.push_back(image.reduce(eng.coordinates(diff, h)));
        }
        for (int p = 0; p < dim; ++p) {
            QVec row(dim, Rational(0));
            bool nz = false;
            for (int j = 0; j < dim; ++j) {
                row[j] = residual_cols[j][p];
                nz |= (row[j] != 0);
            }
            if (nz) rows.push_back(std::move(row));
        }
    }
    return static_cast<int>(nullspace(std::move(rows), dim).size());
}

int oracle_bcom(BComFamily family, int n, int m, int h) {
    const GradedComponentEngine& eng = bcom_engine(family, n);
    Polynomial theta_m = eng.theta_y().pow(m);
    int theta_deg = theta_m.total_degree();
    int total = 0;
    for (auto& piece : eng.pieces(h)) {
        auto fixed = eng.piece_invariant_basis(h, piece);
        if (fixed.empty()) continue;
        const size_t pdim = piece.cols.size();
        std::vector<int> local(eng.dimension(h), -1);
        for (size_t i = 0; i < pdim; ++i) local[piece.cols[i]] = static_cast<int>(i);

        // Image of theta^m inside this piece.
        IncrementalSpan image(pdim);
        int lower = h - theta_deg;
        if (lower >= 0 && m > 0) {
            for (int c = 0; c < eng.dimension(lower); ++c) {
                if (eng.reducer().basis_degree(eng.component(lower).elems[c].first) != piece.xdeg)
                    continue;
                QVec full = eng.coordinates(eng.mul_y(eng.component_element(lower, c), theta_m), h);
                QVec v(pdim, Rational(0));
                for (size_t j = 0; j < full.size(); ++j)
                    if (full[j] != 0) v[local[j]] = full[j];
                image.add(std::move(v));
            }
        }

        // Conditions on the fixed-space coefficients.
        std::vector<QVec> rows;
        for (int ri : eng.weyl().reflections) {
            const SignedPermutation& s = eng.weyl().elements[ri];
            std::vector<QVec> residual_cols;
            for (auto& w : fixed) {
                // assemble w as an element, apply (s_Y - 1)
                QElem e;
                for (size_t i = 0; i < pdim; ++i) {
                    if (w[i] == 0) continue;
                    auto& [bi, ym] = eng.component(h).elems[piece.cols[i]];
                    e.add(bi, Polynomial(eng.ambient(), ym, w[i]));
                }
                QElem diff = eng.act_elem(s, e, Side::Y) - e;
                QVec full = eng.coordinates(diff, h);
                QVec v(pdim, Rational(0));
                for (size_t j = 0; j < full.size(); ++j)
                    if (full[j] != 0) v[local[j]] = full[j];
                if (m == 0) {
                    residual_cols.push_back(QVec(pdim, Rational(0)));
                } else {
                    residual_cols.push_back(image.reduce(std::move(v)));
                }
            }
            for (size_t p = 0; p < pdim; ++p) {
                QVec row(fixed.size(), Rational(0));
                bool nz = false;
                for (size_t j = 0; j < fixed.size(); ++j) {
                    row[j] = residual_cols[j][p];
                    nz |= (row[j] != 0);
                }
                if (nz) rows.push_back(std::move(row));
            }
        }
        total += static_cast<int>(nullspace(std::move(rows), fixed.size()).size());
    }
    return total;
}

}  // namespace

int oracle_dimension(const QuasiSpec& spec, int coh_degree, int truncation) {
    if (coh_degree < 0 || coh_degree > truncation)
        throw std::invalid_argument("degree exceeds truncation");
    if (coh_degree % 2) return 0;  // everything is evenly graded
    int h = coh_degree / 2;
    switch (spec.variant) {
        case Variant::Flag: return oracle_flag(*spec.pair, spec.m, h);
        case Variant::Filtered: return oracle_filtered(*spec.filtered, spec.multiplicities, h);
        case Variant::TEquiv: return oracle_tequiv(*spec.pair, spec.m, h);
        case Variant::BCom: return oracle_bcom(*spec.family, spec.bcom_n, spec.m, h);
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Filtration

std::vector<long long> invariant_ring_dimensions(const std::vector<int>& degrees, int D) {
    std::vector<long long> dp(D + 1, 0);
    dp[0] = 1;
    for (int d : degrees)
        for (int i = d; i <= D; ++i) dp[i] += dp[i - d];
    return dp;
}

FiltrationReport filtration_check(const PairSpec& pair, int m_max, int D) {
    FiltrationReport rep;
    // Containment Q_{m+1} into Q_m via basis elements.
    for (int m = 0; m < m_max; ++m) {
        FreeBasis upper = qm_basis(flag_spec(pair, m + 1));
        QuasiSpec lower = flag_spec(pair, m);
        for (auto& b : upper.elements) {
            ++rep.containments_checked;
            auto r = is_member(b, lower);
            if (!r.member)
                rep.failures.push_back("containment fails: level " + std::to_string(m + 1) +
                                       " element " + b.str() + " not in level " +
                                       std::to_string(m) + " (" + r.detail + ")");
        }
    }
    // Degreewise stabilization to the invariant ring once 2mk > d.
    auto inv_dims = invariant_ring_dimensions(pair.degrees, D / 2);
    for (int m = 1; m <= m_max; ++m) {
        QuasiSpec spec = flag_spec(pair, m);
        for (int d = 0; d <= D; d += 2) {
            if (2 * m * pair.k <= d) continue;
            ++rep.degrees_checked;
            long long got = oracle_dimension(spec, d, D);
            if (got != inv_dims[d / 2])
                rep.failures.push_back("stabilization fails at m=" + std::to_string(m) +
                                       " coh degree " + std::to_string(d) + ": oracle " +
                                       std::to_string(got) + " != invariants " +
                                       std::to_string(inv_dims[d / 2]));
        }
    }
    return rep;
}

}  // namespace qi
