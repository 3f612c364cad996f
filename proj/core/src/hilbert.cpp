#include "qi/hilbert.hpp"

#include <sstream>

#include "qi/descent.hpp"

namespace qi {

namespace {

std::map<int, Integer> num_mul(const std::map<int, Integer>& a, const std::map<int, Integer>& b) {
    std::map<int, Integer> out;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            auto& slot = out[ea + eb];
            slot += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

std::map<int, Integer> one_minus(int e) {
    std::map<int, Integer> f;
    f[0] = 1;
    f[e] -= 1;
    if (f[e] == 0) f.erase(e);  // e == 0 would cancel; degrees are positive
    return f;
}

}  // namespace

HilbertSeries HilbertSeries::fraction(std::map<int, Integer> numerator,
                                      std::multiset<int> denominator) {
    HilbertSeries s;
    for (auto it = numerator.begin(); it != numerator.end();)
        it = (it->second == 0) ? numerator.erase(it) : std::next(it);
    s.num_ = std::move(numerator);
    s.den_ = std::move(denominator);
    return s;
}

HilbertSeries HilbertSeries::constant(Integer c) {
    std::map<int, Integer> n;
    if (c != 0) n[0] = std::move(c);
    return fraction(std::move(n), {});
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const {
    // Common denominator: per exponent, the larger multiplicity.
    std::multiset<int> common;
    std::set<int> exps(den_.begin(), den_.end());
    exps.insert(o.den_.begin(), o.den_.end());
    for (int e : exps) {
        size_t k = std::max(den_.count(e), o.den_.count(e));
        for (size_t i = 0; i < k; ++i) common.insert(e);
    }
    auto scale_up = [&](const HilbertSeries& s) {
        std::map<int, Integer> num = s.num_;
        std::multiset<int> missing;  // factors of `common` the summand lacks
        for (int e : exps) {
            size_t k = common.count(e) - s.den_.count(e);
            for (size_t i = 0; i < k; ++i) missing.insert(e);
        }
        for (int e : missing) num = num_mul(num, one_minus(e));
        return num;
    };
    std::map<int, Integer> total = scale_up(*this);
    for (auto& [e, c] : scale_up(o)) {
        auto& slot = total[e];
        slot += c;
    }
    return fraction(std::move(total), std::move(common));
}

bool HilbertSeries::equals(const HilbertSeries& o) const {
    std::map<int, Integer> lhs = num_;
    for (int e : o.den_) lhs = num_mul(lhs, one_minus(e));
    std::map<int, Integer> rhs = o.num_;
    for (int e : den_) rhs = num_mul(rhs, one_minus(e));
    return lhs == rhs;
}

std::vector<Integer> HilbertSeries::expand(int max_internal) const {
    std::vector<Integer> out(max_internal + 1, Integer(0));
    for (auto& [e, c] : num_)
        if (e >= 0 && e <= max_internal) out[e] = c;
    for (int e : den_)  // multiply by 1/(1 - t^e)
        for (int i = e; i <= max_internal; ++i) out[i] += out[i - e];
    return out;
}

std::vector<Integer> HilbertSeries::expand_coh(int max_coh) const {
    auto internal = expand(max_coh / 2);
    std::vector<Integer> out(max_coh + 1, Integer(0));
    for (size_t i = 0; i < internal.size(); ++i)
        if (2 * i <= static_cast<size_t>(max_coh)) out[2 * i] = internal[i];
    return out;
}

std::string HilbertSeries::str() const {
    std::ostringstream out;
    if (num_.empty()) return "0";
    out << "(";
    bool first = true;
    for (auto& [e, c] : num_) {
        Integer a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || e == 0) out << a.get_str();
        if (e != 0) {
            if (a != 1) out << "*";
            out << "t^" << 2 * e;
        }
    }
    out << ")";
    if (!den_.empty()) {
        out << "/(";
        for (int e : den_) out << "(1-t^" << 2 * e << ")";
        out << ")";
    }
    return out.str();
}

HilbertSeries closed_form_flag(const PairSpec& pair, int m) {
    int rank = static_cast<int>(pair.degrees.size());
    int F = m * pair.k;  // monomial degree of theta^m
    std::map<int, Integer> num1;
    num1[0] = 1;
    num1[F] -= 1;
    if (num1[F] == 0) num1.erase(F);
    std::multiset<int> den1(pair.degrees.begin(), pair.degrees.end());
    std::map<int, Integer> num2;
    num2[F] = 1;
    std::multiset<int> den2;
    for (int i = 0; i < rank; ++i) den2.insert(1);
    return HilbertSeries::fraction(std::move(num1), std::move(den1)) +
           HilbertSeries::fraction(std::move(num2), std::move(den2));
}

HilbertSeries closed_form_bcom(BComFamily family, int n, int m) {
    std::multiset<int> den;
    int F = 0;  // monomial degree of theta^m
    WeylGroup W;
    bool flag_stat = false;
    switch (family) {
        case BComFamily::U:
            for (int i = 1; i <= n; ++i) den.insert(i);
            F = m * n;
            W = symmetric_group(n);
            break;
        case BComFamily::SU:
            for (int i = 2; i <= n; ++i) den.insert(i);
            F = m * n;
            W = symmetric_group(n);
            break;
        case BComFamily::Sp:
            for (int i = 1; i <= n; ++i) den.insert(2 * i);
            F = 2 * m * n;
            W = hyperoctahedral_group(n);
            flag_stat = true;
            break;
    }
    // (1 - t^F + t^F * sum_sigma t^{stat}) / prod(1 - t^{d})
    std::map<int, Integer> num;
    num[0] = 1;
    num[F] -= 1;
    for (auto& [e, c] : maj_generating_function(W, flag_stat)) num[F + e] += Integer(static_cast<long>(c));
    for (auto it = num.begin(); it != num.end();)
        it = (it->second == 0) ? num.erase(it) : std::next(it);
    return HilbertSeries::fraction(std::move(num), std::move(den));
}

HilbertSeries closed_form_partial(int n, int k, int m, PartialFamily family) {
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    std::multiset<int> den;
    int F = 0;
    if (family == PartialFamily::U) {
        for (int i = 1; i <= k; ++i) den.insert(i);
        for (int i = 1; i <= n - k; ++i) den.insert(i);
        F = m * k;
    } else {
        for (int i = 1; i <= k; ++i) den.insert(2 * i);
        for (int i = 1; i <= n - k; ++i) den.insert(2 * i);
        F = 2 * m * k;
    }
    std::map<int, Integer> num1;
    num1[0] = 1;
    num1[F] -= 1;
    if (num1[F] == 0) num1.erase(F);
    std::map<int, Integer> num2;
    num2[F] = 1;
    std::multiset<int> den2;
    for (int i = 0; i < n; ++i) den2.insert(1);
    return HilbertSeries::fraction(std::move(num1), std::move(den)) +
           HilbertSeries::fraction(std::move(num2), std::move(den2));
}

HilbertSeries from_basis(const FreeBasis& basis) {
    std::map<int, Integer> num;
    for (int d : basis.monomial_degrees()) num[d] += 1;
    std::multiset<int> den(basis.base_degrees.begin(), basis.base_degrees.end());
    return HilbertSeries::fraction(std::move(num), std::move(den));
}

bool series_equal(const HilbertSeries& a, const HilbertSeries& b) { return a.equals(b); }

std::vector<Integer> series_expand(const HilbertSeries& a, int max_coh) {
    return a.expand_coh(max_coh);
}

HilbertSeries quotient_series(int n, int k) {
    std::map<int, Integer> num;
    num[0] = 1;
    num[k] -= 1;
    std::multiset<int> den;
    for (int i = 0; i < n; ++i) den.insert(1);
    return HilbertSeries::fraction(std::move(num), std::move(den));
}

}  // namespace qi
