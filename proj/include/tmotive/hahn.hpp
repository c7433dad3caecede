#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tmotive/rational.hpp"

namespace tmotive {

// Leading term of a nonzero series, identified with a point of Q (+) R^x.
// The zero element absorbs under multiplication.
class RvElem {
public:
    static RvElem zero() { return RvElem(); }
    static RvElem of(Rational exponent, Rational coeff) {
        if (coeff.is_zero())
            throw DomainError(DomainError::Kind::InvalidArgument,
                              "nonzero rv element needs a nonzero coefficient");
        RvElem e;
        e.zero_ = false;
        e.exponent_ = std::move(exponent);
        e.coeff_ = std::move(coeff);
        return e;
    }

    bool is_zero() const { return zero_; }
    const Rational& exponent() const { return exponent_; }
    const Rational& coeff() const { return coeff_; }

    friend bool operator==(const RvElem& a, const RvElem& b) {
        if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
        return a.exponent_ == b.exponent_ && a.coeff_ == b.coeff_;
    }

private:
    bool zero_ = true;
    Rational exponent_;
    Rational coeff_;
};

// Group law of RV extended by the absorbing zero.
RvElem rv_mul(const RvElem& a, const RvElem& b);

// Signed value of a series: the sign of the leading coefficient together
// with the least exponent of the support. Stored additively; rendered
// either additively "(+, q)" or multiplicatively "e^(-q)" with sign.
class GammaElem {
public:
    static GammaElem zero_point() { return GammaElem(); }
    static GammaElem of(int sign, Rational exponent) {
        if (sign != 1 && sign != -1)
            throw DomainError(DomainError::Kind::InvalidArgument, "sign must be +1 or -1");
        GammaElem g;
        g.zero_ = false;
        g.sign_ = sign;
        g.exponent_ = std::move(exponent);
        return g;
    }

    bool is_zero_point() const { return zero_; }
    int sign() const { return sign_; }
    const Rational& exponent() const { return exponent_; }

    friend bool operator==(const GammaElem& a, const GammaElem& b) {
        if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
        return a.sign_ == b.sign_ && a.exponent_ == b.exponent_;
    }

private:
    bool zero_ = true;
    int sign_ = 1;
    Rational exponent_;
};

struct HahnTerm {
    Rational exponent;
    Rational coeff;
};

// Finite-support generalized power series over Q with rational exponents,
// the valued-field carrier. Terms are kept sorted by strictly ascending
// exponent and never store a zero coefficient; the empty series is zero.
class HahnSeries {
public:
    HahnSeries() = default;

    static HahnSeries constant(Rational c) { return monomial(std::move(c), Rational(0)); }
    static HahnSeries monomial(Rational coeff, Rational exponent);
    // Normalizes: merges duplicate exponents, drops zero coefficients.
    static HahnSeries from_terms(std::vector<HahnTerm> terms);

    bool is_zero() const { return terms_.empty(); }
    std::span<const HahnTerm> terms() const { return terms_; }

    // Least exponent of the support; series must be nonzero.
    const Rational& min_exponent() const;
    // Coefficient of the least exponent; series must be nonzero.
    const Rational& leading_coeff() const;

    HahnSeries operator-() const;
    friend HahnSeries operator+(const HahnSeries& a, const HahnSeries& b);
    friend HahnSeries operator-(const HahnSeries& a, const HahnSeries& b);
    friend HahnSeries operator*(const HahnSeries& a, const HahnSeries& b);

    friend bool operator==(const HahnSeries& a, const HahnSeries& b);

    // Order induced from the model: the sign of a nonzero series is the
    // sign of its leading coefficient.
    friend std::strong_ordering operator<=>(const HahnSeries& a, const HahnSeries& b);

    // rv(x): zero for x = 0, otherwise the leading term.
    RvElem leading_rv() const;
    // Signed valuation: zero point for x = 0, otherwise
    // (sign of leading coefficient, least exponent).
    GammaElem valuation() const;
    // res(x): coefficient at exponent 0 when min supp(x) >= 0, else 0.
    Rational residue() const;

    int sign() const { return terms_.empty() ? 0 : leading_coeff().sign(); }

    // Drops all terms with exponent >= bound.
    HahnSeries truncated_below(const Rational& bound) const;

private:
    std::vector<HahnTerm> terms_;
};

// Leading term of a - b computed by a merge walk, without materializing
// the difference. Empty exactly when a == b.
std::optional<HahnTerm> leading_difference(const HahnSeries& a, const HahnSeries& b);

// Truncated multiplicative inverse: the unique y supported in
// [-v, -v + order) with x*y = 1 up to terms of exponent >= order,
// where v is the least exponent of x. Computed by geometric expansion
// of the unit part. Throws ZeroDivision for x = 0 and rejects order <= 0.
HahnSeries truncated_inverse(const HahnSeries& x, const Rational& order);

// Canonical text forms. These round-trip bit-exactly through the DSL parser.
std::string render_series(const HahnSeries& x);
std::string render_rv(const RvElem& e);
std::string render_gamma_additive(const GammaElem& g);
std::string render_gamma_multiplicative(const GammaElem& g);

}  // namespace tmotive
