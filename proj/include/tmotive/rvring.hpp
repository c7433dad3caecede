#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tmotive/error.hpp"

namespace tmotive {

using Int = std::int64_t;

// Degree-i coefficient m + n*Y of the graded ring; Y satisfies Y*Y = -Y.
struct YCoeff {
    Int m = 0;
    Int n = 0;

    bool is_zero() const { return m == 0 && n == 0; }
    friend bool operator==(const YCoeff&, const YCoeff&) = default;
};

inline YCoeff ycoeff_add(YCoeff a, YCoeff b) { return {a.m + b.m, a.n + b.n}; }
inline YCoeff ycoeff_mul(YCoeff a, YCoeff b) {
    return {a.m * b.m, a.m * b.n + a.n * b.m - a.n * b.n};
}

// Element of Z[X, Y^(2)] = Z (+) directsum_{i>=1} (Z[Y]/(Y^2+Y)) X^i.
// The degree-0 entry carries no Y part; trailing zero entries are trimmed.
class GradedYX {
public:
    GradedYX() = default;

    static GradedYX zero() { return GradedYX(); }
    static GradedYX one() { return constant(1); }
    static GradedYX constant(Int m);
    static GradedYX x() { return monomial(1, 1, 0); }
    static GradedYX yx() { return monomial(1, 0, 1); }
    // m*X^degree + n*Y*X^degree; degree 0 requires n = 0.
    static GradedYX monomial(std::size_t degree, Int m, Int n);

    bool is_zero() const { return coeffs_.empty(); }
    // One past the largest nonzero degree (0 for the zero element).
    std::size_t degree_bound() const { return coeffs_.size(); }
    YCoeff coeff(std::size_t degree) const {
        return degree < coeffs_.size() ? coeffs_[degree] : YCoeff{};
    }

    // True when all nonzero coefficients sit in one degree.
    bool is_homogeneous() const;

    GradedYX operator-() const;
    friend GradedYX operator+(const GradedYX& a, const GradedYX& b);
    friend GradedYX operator-(const GradedYX& a, const GradedYX& b);
    friend GradedYX operator*(const GradedYX& a, const GradedYX& b);

    friend bool operator==(const GradedYX&, const GradedYX&) = default;

private:
    void trim();
    std::vector<YCoeff> coeffs_;
};

// The ideal generator 1 + 2YX + X, the image of 1_K + [P].
GradedYX generator();

// The two retractions onto Z[X]: substitute Y := -1, resp. Y := 0;
// entry i of the result is the X^i coefficient.
std::vector<Int> retract_g(const GradedYX& x);
std::vector<Int> retract_b(const GradedYX& x);

// Element a + b*w of the quotient Z^(2)[X] = Z[X, Y^(2)]/(1 + 2YX + X)
// in the canonical basis {1, w}, where w is the image of YX and
// w*w = -w, X = -1 - 2w.
class WForm {
public:
    WForm() = default;
    WForm(Int a, Int b) : a_(a), b_(b) {}

    Int a() const { return a_; }
    Int b() const { return b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    WForm operator-() const { return {-a_, -b_}; }
    friend WForm operator+(WForm x, WForm y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend WForm operator-(WForm x, WForm y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    friend WForm operator*(WForm x, WForm y) {
        return {x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_ - x.b_ * y.b_};
    }

    friend bool operator==(const WForm&, const WForm&) = default;

private:
    Int a_ = 0;
    Int b_ = 0;
};

// Image under the quotient map, computed by substituting X -> -1 - 2w and
// YX -> w and multiplying out in WForm arithmetic.
WForm quotient_reduce(const GradedYX& x);

// The two ring homomorphisms Z^(2)[X] -> Z: w := -1 (equivalently X -> 1)
// and w := 0 (equivalently X -> -1).
inline Int specialize_g(const WForm& x) { return x.a() - x.b(); }
inline Int specialize_b(const WForm& x) { return x.a(); }

// Canonical renderings; both round-trip through the DSL parser.
// GradedYX: "m0 + (m1 + n1*Y)*X + (m2 + n2*Y)*X^2 + ..." with zero degrees
// omitted ("0" for the zero element). WForm: always "a + b*w".
std::string render_graded(const GradedYX& x);
std::string render_wform(const WForm& x);

}  // namespace tmotive
