#include "qi/catalog.hpp"

#include <json.hpp>
#include <sstream>

#include "qi/parse.hpp"

namespace qi {

Polynomial elem_sym(const Ring& ring, int first, int count, int k) {
    return elementary_symmetric_vars<Rational>(ring, first, count, k);
}

Polynomial elem_sym_squares(const Ring& ring, int first, int count, int k) {
    std::vector<Polynomial> sq;
    for (int i = 0; i < count; ++i) {
        auto t = Polynomial::variable(ring, first + i);
        sq.push_back(t * t);
    }
    return elementary_symmetric(sq, k);
}

std::vector<int> PairSpec::active_vars() const {
    std::vector<int> v;
    int start = ambient_relation ? 1 : 0;  // relation eliminates the leading variable
    for (int i = start; i < n; ++i) v.push_back(i);
    return v;
}

Polynomial PairSpec::normal_form(const Polynomial& f) const {
    if (!ambient_relation) return f;
    return divrem(f, *ambient_relation).second;
}

Polynomial PairSpec::act_reduced(const SignedPermutation& w, const Polynomial& f) const {
    return normal_form(act(w, f));
}

namespace {

PairSpec u_pair(int n) {
    PairSpec p;
    p.name = "u:" + std::to_string(n);
    p.description = "U(" + std::to_string(n) + ") / U(" + std::to_string(n - 1) + ")";
    p.n = n;
    p.k = n;
    p.weyl = symmetric_group(n);
    p.ring = poly_ring(n);
    for (int i = 1; i <= n; ++i) {
        p.degrees.push_back(i);
        p.fundamental_invariants.push_back(elem_sym(p.ring, 0, n, i));
    }
    p.euler_theta = elem_sym(p.ring, 0, n, n);

    RepRing K = u_rep_ring(n);
    p.ktheory = std::move(K);
    return p;
}

PairSpec su_pair(int n) {
    PairSpec p;
    p.name = "su:" + std::to_string(n);
    p.description = "SU(" + std::to_string(n) + ") / SU(" + std::to_string(n - 1) +
                    ") in reduced coordinates mod e1";
    p.n = n;
    p.k = n;
    p.weyl = symmetric_group(n);
    p.ring = poly_ring(n);
    p.ambient_relation = elem_sym(p.ring, 0, n, 1);
    for (int i = 2; i <= n; ++i) {
        p.degrees.push_back(i);
        p.fundamental_invariants.push_back(p.normal_form(elem_sym(p.ring, 0, n, i)));
    }
    p.euler_theta = p.normal_form(elem_sym(p.ring, 0, n, n));
    return p;
}

PairSpec sp_pair(int n) {
    PairSpec p;
    p.name = "sp:" + std::to_string(n);
    p.description = "Sp(" + std::to_string(n) + ") / Sp(" + std::to_string(n - 1) + ")";
    p.n = n;
    p.k = 2 * n;
    p.weyl = hyperoctahedral_group(n);
    p.ring = poly_ring(n);
    for (int i = 1; i <= n; ++i) {
        p.degrees.push_back(2 * i);
        p.fundamental_invariants.push_back(elem_sym_squares(p.ring, 0, n, i));
    }
    p.euler_theta = elem_sym_squares(p.ring, 0, n, n);
    p.ktheory = sp_rep_ring(n);
    return p;
}

PairSpec spin7_pair() {
    PairSpec p;
    p.name = "spin7-g2";
    p.description = "Spin(7) / G2; G/H = S^7";
    p.n = 3;
    p.k = 4;  // theta = q2 has monomial degree 4
    p.weyl = hyperoctahedral_group(3);
    p.ring = poly_ring(3);
    for (int i = 1; i <= 3; ++i) {
        p.degrees.push_back(2 * i);
        p.fundamental_invariants.push_back(elem_sym_squares(p.ring, 0, 3, i));
    }
    p.euler_theta = elem_sym_squares(p.ring, 0, 3, 2);
    p.ktheory = spin7_rep_ring();
    return p;
}

PairSpec spin9_pair() {
    // Cohomology agrees with Sp(4)/Sp(3); the Euler class is inherited from
    // that alias. No K-theory entry: R(Spin(9)) -> R(Spin(7)) is not onto.
    PairSpec p = sp_pair(4);
    p.name = "spin9-spin7";
    p.description = "Spin(9) / Spin(7); cohomology aliased to Sp(4)/Sp(3)";
    p.alias_derived = true;
    p.ktheory.reset();
    return p;
}

PairSpec partial_u_pair(int n, int k) {
    PairSpec p;
    p.name = "pu:" + std::to_string(n) + ":" + std::to_string(k);
    p.description = "U(" + std::to_string(n - k) + ")xU(" + std::to_string(k) + ") / U(" +
                    std::to_string(n - k) + ")xU(" + std::to_string(k - 1) + ")";
    p.n = n;
    p.k = k;
    p.weyl = product_symmetric({n - k, k});
    p.ring = poly_ring(n);
    for (int i = 1; i <= n - k; ++i) {
        p.degrees.push_back(i);
        p.fundamental_invariants.push_back(elem_sym(p.ring, 0, n - k, i));
    }
    for (int i = 1; i <= k; ++i) {
        p.degrees.push_back(i);
        p.fundamental_invariants.push_back(elem_sym(p.ring, n - k, k, i));
    }
    p.euler_theta = elem_sym(p.ring, n - k, k, k);
    return p;
}

PairSpec partial_sp_pair(int n, int k) {
    PairSpec p;
    p.name = "psp:" + std::to_string(n) + ":" + std::to_string(k);
    p.description = "Sp(" + std::to_string(n - k) + ")xSp(" + std::to_string(k) + ") / Sp(" +
                    std::to_string(n - k) + ")xSp(" + std::to_string(k - 1) + ")";
    p.n = n;
    p.k = 2 * k;
    p.weyl = product_hyperoctahedral({n - k, k});
    p.ring = poly_ring(n);
    for (int i = 1; i <= n - k; ++i) {
        p.degrees.push_back(2 * i);
        p.fundamental_invariants.push_back(elem_sym_squares(p.ring, 0, n - k, i));
    }
    for (int i = 1; i <= k; ++i) {
        p.degrees.push_back(2 * i);
        p.fundamental_invariants.push_back(elem_sym_squares(p.ring, n - k, k, i));
    }
    p.euler_theta = elem_sym_squares(p.ring, n - k, k, k);
    return p;
}

constexpr int kMaxFamilyRank = 6;

}  // namespace

std::vector<PairSpec> catalog_list() {
    std::vector<PairSpec> out;
    out.push_back(u_pair(2));
    out.push_back(u_pair(3));
    out.push_back(u_pair(4));
    out.push_back(su_pair(2));
    out.push_back(su_pair(3));
    out.push_back(sp_pair(1));
    out.push_back(sp_pair(2));
    out.push_back(sp_pair(3));
    out.push_back(spin7_pair());
    out.push_back(spin9_pair());
    out.push_back(partial_u_pair(2, 1));
    out.push_back(partial_u_pair(3, 1));
    out.push_back(partial_u_pair(3, 2));
    out.push_back(partial_sp_pair(2, 1));
    out.push_back(partial_sp_pair(3, 1));
    out.push_back(partial_sp_pair(3, 2));
    return out;
}

namespace {

std::optional<PairSpec> try_find_pair(const std::string& name) {
    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::string cur;
        for (char c : s) {
            if (c == ':') {
                parts.push_back(cur);
                cur.clear();
            } else
                cur.push_back(c);
        }
        parts.push_back(cur);
        return parts;
    };
    auto as_int = [](const std::string& s) -> std::optional<int> {
        if (s.empty()) return std::nullopt;
        for (char c : s)
            if (!isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        int v = atoi(s.c_str());
        return v;
    };
    if (name == "spin7-g2") return spin7_pair();
    if (name == "spin9-spin7") return spin9_pair();
    auto parts = split(name);
    if (parts.size() == 2) {
        auto n = as_int(parts[1]);
        if (!n || *n < 1 || *n > kMaxFamilyRank) return std::nullopt;
        if (parts[0] == "u" && *n >= 2) return u_pair(*n);
        if (parts[0] == "su" && *n >= 2) return su_pair(*n);
        if (parts[0] == "sp") return sp_pair(*n);
    }
    if (parts.size() == 3) {
        auto n = as_int(parts[1]), k = as_int(parts[2]);
        if (!n || !k || *n < 2 || *n > kMaxFamilyRank || *k < 1 || *k > *n) return std::nullopt;
        if (parts[0] == "pu") return *k == *n ? u_pair(*n) : partial_u_pair(*n, *k);
        if (parts[0] == "psp") return *k == *n ? sp_pair(*n) : partial_sp_pair(*n, *k);
    }
    return std::nullopt;
}

}  // namespace

PairSpec find_pair(const std::string& name) {
    auto p = try_find_pair(name);
    if (!p) throw std::invalid_argument("unknown pair '" + name + "'");
    return *p;
}

bool pair_exists(const std::string& name) { return try_find_pair(name).has_value(); }

ValidationReport validate_pair(const PairSpec& p) {
    ValidationReport rep;
    auto fail = [&](const std::string& msg) { rep.violations.push_back(msg); };

    if (p.weyl.degree_product() != static_cast<long long>(p.weyl.order()))
        fail("prod d_i != |W| for group " + p.weyl.name);
    if (p.weyl.degree_sum_minus_rank() != static_cast<int>(p.weyl.reflections.size()))
        fail("sum (d_i - 1) != #reflections for group " + p.weyl.name);

    long long degprod = 1;
    for (int d : p.degrees) degprod *= d;
    if (degprod != static_cast<long long>(p.weyl.order()))
        fail("prod of module degrees != |W|");

    auto hom = p.euler_theta.homogeneous_degree();
    if (!hom) fail("euler_theta not homogeneous");
    else if (*hom != p.k)
        fail("euler_theta degree " + std::to_string(*hom) + " != k = " + std::to_string(p.k));
    for (auto& r : p.weyl.generators)
        if (!(p.act_reduced(r, p.euler_theta) == p.euler_theta)) {
            fail("euler_theta not W-invariant, witness " + r.str());
            break;
        }

    if (p.fundamental_invariants.size() != p.degrees.size())
        fail("fundamental invariant count != degree count");
    for (size_t i = 0; i < p.fundamental_invariants.size() && i < p.degrees.size(); ++i) {
        auto& inv = p.fundamental_invariants[i];
        auto d = inv.homogeneous_degree();
        if (!d || *d != p.degrees[i])
            fail("fundamental invariant " + std::to_string(i) + " has wrong degree");
        for (auto& r : p.weyl.generators)
            if (!(p.act_reduced(r, inv) == inv)) {
                fail("fundamental invariant " + std::to_string(i) + " not W-invariant, witness " +
                     r.str());
                break;
            }
    }

    if (p.ktheory) {
        const RepRing& K = *p.ktheory;
        for (auto& g : K.weyl.generators)
            if (!(act(g, K.Theta) == K.Theta)) {
                fail("K-theory Theta not fixed by generator " + g.str());
                break;
            }
        for (auto& [nm, gen] : K.invariant_generators)
            for (auto& g : K.weyl.generators)
                if (!(act(g, gen) == gen)) {
                    fail("K-theory generator " + nm + " not fixed by " + g.str());
                    break;
                }
    }
    return rep;
}

FilteredSpec u3_chain() {
    FilteredSpec s;
    s.name = "u3-chain";
    s.n = 3;
    s.ring = poly_ring(3);
    FilteredStep step1;
    step1.weyl = product_symmetric({2, 1});
    step1.theta = elem_sym(s.ring, 0, 2, 2);  // t1*t2
    step1.invariants = {elem_sym(s.ring, 0, 2, 1), elem_sym(s.ring, 0, 2, 2),
                        Polynomial::variable(s.ring, 2)};
    FilteredStep step2;
    step2.weyl = symmetric_group(3);
    step2.theta = elem_sym(s.ring, 0, 3, 3);  // t1*t2*t3
    step2.invariants = {elem_sym(s.ring, 0, 3, 1), elem_sym(s.ring, 0, 3, 2),
                        elem_sym(s.ring, 0, 3, 3)};
    s.chain = {step1, step2};
    return s;
}

ValidationReport validate_filtered(const FilteredSpec& spec) {
    ValidationReport rep;
    auto fail = [&](const std::string& msg) { rep.violations.push_back(msg); };
    for (size_t i = 0; i < spec.chain.size(); ++i) {
        auto& st = spec.chain[i];
        if (st.weyl.n != spec.n) fail("chain step " + std::to_string(i) + ": wrong arity");
        for (auto& g : st.weyl.generators)
            if (!(act(g, st.theta) == st.theta)) {
                fail("chain step " + std::to_string(i) + ": theta not W_i-invariant");
                break;
            }
        if (i + 1 < spec.chain.size()) {
            auto& next = spec.chain[i + 1].weyl;
            for (auto& w : st.weyl.elements)
                if (!next.contains(w)) {
                    fail("chain step " + std::to_string(i) + ": W_i not contained in W_{i+1}");
                    break;
                }
            if (st.weyl.order() >= next.order())
                fail("chain step " + std::to_string(i) + ": groups not strictly increasing");
        }
    }
    return rep;
}

namespace {

WeylGroup weyl_from_json(const nlohmann::json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "sym") return symmetric_group(j.at("n").get<int>());
    if (type == "signed") return hyperoctahedral_group(j.at("n").get<int>());
    if (type == "product_sym") return product_symmetric(j.at("blocks").get<std::vector<int>>());
    if (type == "product_signed")
        return product_hyperoctahedral(j.at("blocks").get<std::vector<int>>());
    if (type == "d6") return dihedral_g2();
    throw std::invalid_argument("unknown weyl type '" + type + "'");
}

}  // namespace

FilteredSpec filtered_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    FilteredSpec s;
    s.name = j.value("name", "filtered");
    s.n = j.at("n").get<int>();
    s.ring = poly_ring(s.n);
    for (auto& step : j.at("chain")) {
        FilteredStep st;
        st.weyl = weyl_from_json(step.at("weyl"));
        st.theta = parse_poly(step.at("theta").get<std::string>(), s.ring);
        for (auto& inv : step.at("invariants"))
            st.invariants.push_back(parse_poly(inv.get<std::string>(), s.ring));
        s.chain.push_back(std::move(st));
    }
    auto rep = validate_filtered(s);
    if (!rep.ok()) throw std::invalid_argument("invalid filtered spec: " + rep.violations[0]);
    return s;
}

std::string catalog_json() {
    nlohmann::ordered_json out;
    out["schema"] = 1;
    out["pairs"] = nlohmann::ordered_json::array();
    for (auto& p : catalog_list()) {
        nlohmann::ordered_json e;
        e["name"] = p.name;
        e["description"] = p.description;
        e["n"] = p.n;
        e["k"] = p.k;
        e["weyl"] = p.weyl.name;
        e["order"] = p.weyl.order();
        e["degrees"] = p.degrees;
        e["theta"] = p.euler_theta.str();
        if (p.ktheory) e["Theta"] = p.ktheory->Theta.str();
        if (p.alias_derived) e["alias_derived"] = true;
        out["pairs"].push_back(std::move(e));
    }
    return out.dump(2);
}

}  // namespace qi
