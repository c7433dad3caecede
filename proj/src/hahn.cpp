#include "tmotive/hahn.hpp"

#include <algorithm>
#include <map>

namespace tmotive {

RvElem rv_mul(const RvElem& a, const RvElem& b) {
    if (a.is_zero() || b.is_zero()) return RvElem::zero();
    return RvElem::of(a.exponent() + b.exponent(), a.coeff() * b.coeff());
}

HahnSeries HahnSeries::monomial(Rational coeff, Rational exponent) {
    HahnSeries s;
    if (!coeff.is_zero()) s.terms_.push_back({std::move(exponent), std::move(coeff)});
    return s;
}

HahnSeries HahnSeries::from_terms(std::vector<HahnTerm> terms) {
    std::map<Rational, Rational> acc;
    for (auto& t : terms) acc[t.exponent] += t.coeff;
    HahnSeries s;
    for (auto& [e, c] : acc)
        if (!c.is_zero()) s.terms_.push_back({e, c});
    return s;
}

const Rational& HahnSeries::min_exponent() const {
    if (terms_.empty())
        throw DomainError(DomainError::Kind::InvalidArgument, "zero series has no valuation exponent");
    return terms_.front().exponent;
}

const Rational& HahnSeries::leading_coeff() const {
    if (terms_.empty())
        throw DomainError(DomainError::Kind::InvalidArgument, "zero series has no leading coefficient");
    return terms_.front().coeff;
}

HahnSeries HahnSeries::operator-() const {
    HahnSeries r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.exponent, -t.coeff});
    return r;
}

HahnSeries operator+(const HahnSeries& a, const HahnSeries& b) {
    HahnSeries r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->exponent < ib->exponent)) {
            r.terms_.push_back(*ia++);
        } else if (ia == a.terms_.end() || ib->exponent < ia->exponent) {
            r.terms_.push_back(*ib++);
        } else {
            Rational c = ia->coeff + ib->coeff;
            if (!c.is_zero()) r.terms_.push_back({ia->exponent, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    return r;
}

HahnSeries operator-(const HahnSeries& a, const HahnSeries& b) { return a + (-b); }

HahnSeries operator*(const HahnSeries& a, const HahnSeries& b) {
    std::map<Rational, Rational> acc;
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) acc[ta.exponent + tb.exponent] += ta.coeff * tb.coeff;
    HahnSeries r;
    for (auto& [e, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({e, c});
    return r;
}

bool operator==(const HahnSeries& a, const HahnSeries& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exponent != b.terms_[i].exponent || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

std::optional<HahnTerm> leading_difference(const HahnSeries& a, const HahnSeries& b) {
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->exponent < ib->exponent)) return *ia;
        if (ia == ea || ib->exponent < ia->exponent) return HahnTerm{ib->exponent, -ib->coeff};
        Rational c = ia->coeff - ib->coeff;
        if (!c.is_zero()) return HahnTerm{ia->exponent, std::move(c)};
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

std::strong_ordering operator<=>(const HahnSeries& a, const HahnSeries& b) {
    auto d = leading_difference(a, b);
    if (!d) return std::strong_ordering::equal;
    int s = d->coeff.sign();
    return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

RvElem HahnSeries::leading_rv() const {
    if (terms_.empty()) return RvElem::zero();
    return RvElem::of(terms_.front().exponent, terms_.front().coeff);
}

GammaElem HahnSeries::valuation() const {
    if (terms_.empty()) return GammaElem::zero_point();
    return GammaElem::of(terms_.front().coeff.sign(), terms_.front().exponent);
}

Rational HahnSeries::residue() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.front().exponent.sign() < 0) return Rational(0);
    for (const auto& t : terms_) {
        if (t.exponent.is_zero()) return t.coeff;
        if (t.exponent.sign() > 0) break;
    }
    return Rational(0);
}

HahnSeries HahnSeries::truncated_below(const Rational& bound) const {
    HahnSeries r;
    for (const auto& t : terms_) {
        if (!(t.exponent < bound)) break;
        r.terms_.push_back(t);
    }
    return r;
}

HahnSeries truncated_inverse(const HahnSeries& x, const Rational& order) {
    if (x.is_zero()) throw_zero_division("inverse of the zero series");
    if (!(Rational(0) < order))
        throw DomainError(DomainError::Kind::InvalidArgument, "truncation order must be positive");

    const Rational v = x.min_exponent();
    const Rational c = x.leading_coeff();

    // x = c t^v (1 + u) with min supp(u) > 0; invert the unit part by the
    // geometric series, truncating everything at exponent offset `order`.
    HahnSeries lead_inv = HahnSeries::monomial(c.reciprocal(), -v);
    HahnSeries u = (x * lead_inv - HahnSeries::constant(1)).truncated_below(order);

    HahnSeries sum = HahnSeries::constant(1);
    HahnSeries power = HahnSeries::constant(1);
    while (true) {
        power = ((-power) * u).truncated_below(order);
        if (power.is_zero()) break;
        sum = sum + power;
    }
    return lead_inv * sum;
}

static std::string render_exponent(const Rational& e) {
    if (e.is_integer() && e.sign() >= 0) return e.str();
    return "(" + e.str() + ")";
}

std::string render_series(const HahnSeries& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : x.terms()) {
        if (!first) out += " + ";
        first = false;
        out += t.coeff.str();
        out += "*t^";
        out += render_exponent(t.exponent);
    }
    return out;
}

std::string render_rv(const RvElem& e) {
    if (e.is_zero()) return "0";
    return "(" + e.exponent().str() + ", " + e.coeff().str() + ")";
}

std::string render_gamma_additive(const GammaElem& g) {
    if (g.is_zero_point()) return "0";
    return std::string("(") + (g.sign() > 0 ? "+" : "-") + ", " + g.exponent().str() + ")";
}

std::string render_gamma_multiplicative(const GammaElem& g) {
    if (g.is_zero_point()) return "0";
    std::string out = g.sign() > 0 ? "" : "-";
    out += "e^(" + (-g.exponent()).str() + ")";
    return out;
}

}  // namespace tmotive
