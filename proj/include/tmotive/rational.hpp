#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "tmotive/error.hpp"

namespace tmotive {

using BigInt = boost::multiprecision::mpz_int;

// Exact rational number. Always stored reduced with positive denominator;
// canonicalization is guaranteed by the GMP backend.
class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}  // NOLINT: implicit by design
    Rational(long num, long den) {
        if (den == 0) throw_zero_division("rational with zero denominator");
        v_ = Backend(num, den);
    }
    explicit Rational(BigInt num, BigInt den) {
        if (den == 0) throw_zero_division("rational with zero denominator");
        v_ = Backend(std::move(num), std::move(den));
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(Backend(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw_zero_division("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational reciprocal() const {
        if (is_zero()) throw_zero_division("reciprocal of zero");
        return Rational(denominator(), numerator());
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // Canonical text form: "n" for integers, "n/d" otherwise.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) {
            s += '/';
            s += denominator().str();
        }
        return s;
    }

private:
    using Backend = boost::multiprecision::mpq_rational;
    explicit Rational(Backend v) : v_(std::move(v)) {}
    Backend v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace tmotive
