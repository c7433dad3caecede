#include "tmotive/rvring.hpp"

namespace tmotive {

GradedYX GradedYX::constant(Int m) { return monomial(0, m, 0); }

GradedYX GradedYX::monomial(std::size_t degree, Int m, Int n) {
    if (degree == 0 && n != 0)
        throw DomainError(DomainError::Kind::InvalidArgument,
                          "degree-0 coefficient cannot carry a Y part");
    GradedYX r;
    if (m != 0 || n != 0) {
        r.coeffs_.assign(degree + 1, YCoeff{});
        r.coeffs_[degree] = {m, n};
    }
    return r;
}

bool GradedYX::is_homogeneous() const {
    std::size_t nonzero = 0;
    for (const auto& c : coeffs_)
        if (!c.is_zero()) ++nonzero;
    return nonzero <= 1;
}

void GradedYX::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GradedYX GradedYX::operator-() const {
    GradedYX r = *this;
    for (auto& c : r.coeffs_) c = {-c.m, -c.n};
    return r;
}

GradedYX operator+(const GradedYX& a, const GradedYX& b) {
    GradedYX r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] = ycoeff_add(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

GradedYX operator-(const GradedYX& a, const GradedYX& b) { return a + (-b); }

GradedYX operator*(const GradedYX& a, const GradedYX& b) {
    if (a.is_zero() || b.is_zero()) return GradedYX::zero();
    GradedYX r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, YCoeff{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] = ycoeff_add(r.coeffs_[i + j], ycoeff_mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    r.trim();
    return r;
}

GradedYX generator() {
    return GradedYX::one() + GradedYX::monomial(1, 1, 2);
}

std::vector<Int> retract_g(const GradedYX& x) {
    std::vector<Int> r(x.degree_bound());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = x.coeff(i).m - x.coeff(i).n;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<Int> retract_b(const GradedYX& x) {
    std::vector<Int> r(x.degree_bound());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = x.coeff(i).m;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

WForm quotient_reduce(const GradedYX& x) {
    const WForm xi(-1, -2);  // image of X
    const WForm w(0, 1);     // image of YX
    WForm acc;
    WForm xpow(1, 0);
    for (std::size_t i = 0; i < x.degree_bound(); ++i) {
        const YCoeff c = x.coeff(i);
        // (m + nY)X^i = m X^i + n (YX) X^(i-1)
        acc = acc + WForm(c.m, 0) * xpow;
        if (c.n != 0) {
            WForm xprev(1, 0);
            for (std::size_t j = 1; j < i; ++j) xprev = xprev * xi;
            acc = acc + WForm(c.n, 0) * w * xprev;
        }
        xpow = xpow * xi;
    }
    return acc;
}

std::string render_graded(const GradedYX& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < x.degree_bound(); ++i) {
        const YCoeff c = x.coeff(i);
        if (c.is_zero()) continue;
        if (!first) out += " + ";
        first = false;
        if (i == 0) {
            out += std::to_string(c.m);
            continue;
        }
        out += "(" + std::to_string(c.m) + " + " + std::to_string(c.n) + "*Y)*X";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::string render_wform(const WForm& x) {
    return std::to_string(x.a()) + " + " + std::to_string(x.b()) + "*w";
}

}  // namespace tmotive
