#include "qi/descent.hpp"

namespace qi {

std::set<int> descent_positions(const std::vector<int>& w) {
    std::set<int> out;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) out.insert(static_cast<int>(i) + 1);
    return out;
}

int maj(const std::vector<int>& w) {
    int s = 0;
    for (int i : descent_positions(w)) s += i;
    return s;
}

int neg(const std::vector<int>& w) {
    int s = 0;
    for (int x : w)
        if (x < 0) ++s;
    return s;
}

int fmaj(const std::vector<int>& w) { return 2 * maj(w) + neg(w); }

int flag_exponent(const std::vector<int>& w, int i) {
    int d = 0;
    for (size_t j = static_cast<size_t>(i) - 1; j + 1 < w.size(); ++j)
        if (w[j] > w[j + 1]) ++d;
    return 2 * d + (w[i - 1] < 0 ? 1 : 0);
}

PermStatistic statistics(const SignedPermutation& w) {
    PermStatistic st;
    st.element = w;
    auto ol = w.one_line();
    st.maj = maj(ol);
    st.fmaj = fmaj(ol);
    st.descent_set = descent_positions(ol);
    return st;
}

Polynomial descent_monomial(const SignedPermutation& sigma, const Ring& xy) {
    const int n = sigma.n();
    if (xy.nvars() != 2 * n) throw std::invalid_argument("descent monomial needs an x/y ring");
    for (int s : sigma.sign)
        if (s < 0) throw std::invalid_argument("descent monomial needs an unsigned permutation");
    auto ol = sigma.one_line();
    auto oli = sigma.inverse().one_line();
    Monomial m(2 * n);
    for (int i = 1; i < n; ++i)
        if (oli[i - 1] > oli[i])
            for (int a = 1; a <= i; ++a) ++m.e[a - 1];  // x1..xi
    for (int j = 1; j < n; ++j)
        if (ol[j - 1] > ol[j])
            for (int a = 1; a <= j; ++a) ++m.e[n + ol[a - 1] - 1];  // y_{sigma(1)}..y_{sigma(j)}
    return Polynomial(xy, m, Rational(1));
}

Polynomial descent_invariant(const WeylGroup& Sn, const SignedPermutation& sigma,
                             const Ring& xy) {
    return reynolds_diagonal(Sn, descent_monomial(sigma, xy));
}

Polynomial signed_descent_monomial(const SignedPermutation& sigma, const Ring& xy) {
    const int n = sigma.n();
    if (xy.nvars() != 2 * n) throw std::invalid_argument("descent monomial needs an x/y ring");
    auto ol = sigma.one_line();
    auto oli = sigma.inverse().one_line();
    Monomial m(2 * n);
    for (int i = 1; i <= n; ++i) {
        m.e[i - 1] = flag_exponent(oli, i);
        m.e[n + i - 1] = flag_exponent(ol, std::abs(oli[i - 1]));
    }
    return Polynomial(xy, m, Rational(1));
}

Polynomial signed_descent_invariant(const WeylGroup& Bn, const SignedPermutation& sigma,
                                    const Ring& xy) {
    return reynolds_diagonal(Bn, signed_descent_monomial(sigma, xy));
}

std::map<int, long long> maj_generating_function(const WeylGroup& W, bool use_flag_statistic) {
    if (W.order() > 100000) throw std::invalid_argument("group too large for enumeration");
    std::map<int, long long> gf;
    for (auto& w : W.elements) {
        auto ol = w.one_line();
        auto oli = w.inverse().one_line();
        int e = use_flag_statistic ? fmaj(ol) + fmaj(oli) : maj(ol) + maj(oli);
        ++gf[e];
    }
    return gf;
}

}  // namespace qi
