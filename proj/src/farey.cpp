#include "latext/farey.hpp"

#include <algorithm>

namespace latext {

namespace {

// inverse of a modulo m, m >= 2, gcd(a, m) == 1
Int inv_mod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DomainError("no modular inverse");
    return r;
}

Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace

FareyFraction::FareyFraction(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
    if (den < 1) throw DomainError("fraction needs a positive denominator");
    if (num < 0 || num > den) throw DomainError("fraction must lie in [0,1]");
    if (gcd_int(num, den) != 1) throw DomainError("fraction must be reduced");
}

FareyFraction parse_fraction(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == s.size())
        throw DomainError("expected a fraction of the form p/q");
    try {
        return FareyFraction(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw DomainError("expected a fraction of the form p/q");
    }
}

std::vector<FareyFraction> farey_series(const Int& n) {
    if (n < 1) throw DomainError("series order must be positive");
    std::vector<FareyFraction> out;
    Int x0 = 0, y0 = 1, x1 = 1, y1 = n;
    out.emplace_back(x0, y0);
    out.emplace_back(x1, y1);
    while (x1 != y1) {
        Int k = (n + y0) / y1;
        Int x2 = k * x1 - x0;
        Int y2 = k * y1 - y0;
        out.emplace_back(x2, y2);
        x0 = x1;
        y0 = y1;
        x1 = x2;
        y1 = y2;
    }
    return out;
}

std::pair<std::optional<FareyFraction>, std::optional<FareyFraction>> farey_neighbors(
    const FareyFraction& f, const Int& n) {
    if (f.den > n) throw DomainError("fraction is not a member of the requested series");
    const Int& a = f.num;
    const Int& b = f.den;
    if (b == 1) {
        if (a == 0) return {std::nullopt, FareyFraction(1, n)};
        return {FareyFraction(n - 1, n), std::nullopt};
    }
    // left p/q < a/b with aq - bp = 1, q maximal <= n; right symmetric
    Int q0 = inv_mod(a, b);
    Int ql = q0 + b * fdiv(n - q0, b);
    FareyFraction left((a * ql - 1) / b, ql);
    Int r2 = b - q0;
    Int qr = r2 + b * fdiv(n - r2, b);
    FareyFraction right((a * qr + 1) / b, qr);
    return {left, right};
}

BridgeReport neighbor_basis_bridge(const FareyFraction& f, const FareyFraction& g) {
    Int order = std::max(f.den, g.den);
    bool basis = abs_int(f.num * g.den - f.den * g.num) == 1;
    auto series = farey_series(order);
    bool neighbor = false;
    for (size_t i = 0; i + 1 < series.size(); ++i) {
        if ((series[i] == f && series[i + 1] == g) || (series[i] == g && series[i + 1] == f)) {
            neighbor = true;
            break;
        }
    }
    return {neighbor, basis, order};
}

Int neighbor_count_up_to(const FareyFraction& f, const Int& t) {
    if (f.num == 0) throw DomainError("0/1 is excluded by the octant convention");
    if (f.den > t) throw DomainError("need t >= the denominator");
    const Int& a = f.num;
    const Int& b = f.den;
    if (b == 1) return t;  // f = 1/1, neighbors (d-1)/d for every d <= t
    Int q0 = inv_mod(a, b);
    Int total = fdiv(t - q0, b) + 1;  // c/d with ad - bc = 1
    Int r2 = b - q0;
    total += fdiv(t - r2, b) + 1;  // c/d with bc - ad = 1
    return total;
}

CFNumber::CFNumber(std::vector<Int> quots) : quots_(std::move(quots)) {
    if (quots_.size() < 2) throw DomainError("need a_0 and at least one partial quotient");
    if (quots_[0] != 0) throw DomainError("a_0 must be 0 for a number in (0,1)");
    for (size_t i = 1; i < quots_.size(); ++i)
        if (quots_[i] < 1) throw DomainError("partial quotients a_i must be >= 1 for i >= 1");
    Int pp = 1, qp = 0;  // alpha_{-1}
    Int pc = 0, qc = 1;  // alpha_0
    for (size_t i = 1; i < quots_.size(); ++i) {
        Int pn = quots_[i] * pc + pp;
        Int qn = quots_[i] * qc + qp;
        pp = pc;
        qp = qc;
        pc = pn;
        qc = qn;
        conv_.emplace_back(pc, qc);
    }
    // alpha sweeps the open interval between alpha_m and the mediant with alpha_{m-1}
    Rat e1 = Rat(pc) / Rat(qc);
    Rat e2 = Rat(pc + pp) / Rat(qc + qp);
    lo_ = std::min(e1, e2);
    hi_ = std::max(e1, e2);
    order_ = isqrt(qc + qp - 1);
}

int CFNumber::cmp(const Int& p, const Int& q) const {
    if (q < 1) throw DomainError("comparison denominator must be positive");
    Rat f = Rat(p) / Rat(q);
    if (f <= lo_) return 1;
    if (f >= hi_) return -1;
    throw DomainError("continued fraction prefix is too short for this comparison");
}

std::vector<FareyFraction> farey_approximations(const CFNumber& alpha, const Int& n) {
    if (n < 1) throw DomainError("order must be positive");
    if (alpha.working_order() < n) throw DomainError("working order of the continued fraction is below the requested order");
    std::vector<FareyFraction> out;
    FareyFraction x(0, 1), y(1, 1);
    out.push_back(x);
    out.push_back(y);
    for (;;) {
        FareyFraction med(x.num + y.num, x.den + y.den);
        if (med.den > n) break;
        out.push_back(med);
        if (alpha.cmp(med) > 0)
            x = med;
        else
            y = med;
    }
    return out;
}

std::vector<FareyFraction> dirichlet_approximations(const CFNumber& alpha, const Int& n) {
    if (n < 1) throw DomainError("order must be positive");
    if (alpha.working_order() < n) throw DomainError("working order of the continued fraction is below the requested order");
    const FareyFraction& cl = alpha.convergent_list().back();
    std::vector<FareyFraction> out;
    for (Int q = 1; q <= n; ++q) {
        Int p0 = fdiv(2 * q * cl.num + cl.den, 2 * cl.den);
        Int plo = std::max(Int(0), Int(p0 - 2));
        Int phi = std::min(q, Int(p0 + 2));
        for (Int p = plo; p <= phi; ++p) {
            if (gcd_int(p, q) != 1) continue;
            // |alpha - p/q| <= 1/q^2, both sides strict for irrational alpha
            if (alpha.cmp(p * q - 1, q * q) == 1 && alpha.cmp(p * q + 1, q * q) == -1)
                out.emplace_back(p, q);
        }
    }
    return out;
}

double density_ratio(const CFNumber& alpha, const Int& n) {
    auto fa = farey_approximations(alpha, n);
    return static_cast<double>(fa.size()) / n.get_d();
}

std::vector<FareyFraction> convergents(const CFNumber& alpha, int k) {
    if (k < 0 || static_cast<size_t>(k) > alpha.convergent_list().size())
        throw DomainError("requested more convergents than the expansion provides");
    return {alpha.convergent_list().begin(), alpha.convergent_list().begin() + k};
}

}  // namespace latext
