#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "cpw/errors.hpp"

namespace cpw {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact field element: a rational number (characteristic 0) or a residue in
// a prime field F_p.  Arithmetic between scalars of different characteristic
// is a precondition error.
class Scalar {
public:
    Scalar() : char_(0), value_(0) {}
    explicit Scalar(long long n, unsigned characteristic = 0)
        : char_(characteristic), value_(n) { normalize(); }
    Scalar(const BigInt& num, const BigInt& den, unsigned characteristic = 0)
        : char_(characteristic), value_(BigRational(num, den)) { normalize(); }
    explicit Scalar(const BigRational& r, unsigned characteristic = 0)
        : char_(characteristic), value_(r) { normalize(); }

    static Scalar zero(unsigned characteristic = 0) { return Scalar(0, characteristic); }
    static Scalar one(unsigned characteristic = 0) { return Scalar(1, characteristic); }

    unsigned characteristic() const { return char_; }
    bool is_zero() const { return value_ == 0; }
    const BigRational& value() const { return value_; }

    Scalar operator-() const { Scalar r(*this); r.value_ = -r.value_; r.normalize(); return r; }

    Scalar& operator+=(const Scalar& o) { check(o); value_ += o.value_; normalize(); return *this; }
    Scalar& operator-=(const Scalar& o) { check(o); value_ -= o.value_; normalize(); return *this; }
    Scalar& operator*=(const Scalar& o) { check(o); value_ *= o.value_; normalize(); return *this; }
    Scalar& operator/=(const Scalar& o) {
        check(o);
        if (o.is_zero()) throw PreconditionError("division by zero scalar");
        if (char_ == 0) {
            value_ /= o.value_;
        } else {
            value_ *= inverse_mod(BigInt(boost::multiprecision::numerator(o.value_)), char_);
            normalize();
        }
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.char_ == b.char_ && a.value_ == b.value_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Canonical rendering: "n" or "n/d" with positive d.
    std::string str() const {
        BigInt num = boost::multiprecision::numerator(value_);
        BigInt den = boost::multiprecision::denominator(value_);
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }

private:
    void check(const Scalar& o) const {
        if (char_ != o.char_)
            throw PreconditionError("scalar characteristic mismatch");
    }

    void normalize() {
        if (char_ == 0) return;
        BigInt num = boost::multiprecision::numerator(value_);
        BigInt den = boost::multiprecision::denominator(value_);
        BigInt p = char_;
        den %= p;
        if (den < 0) den += p;
        if (den == 0) throw PreconditionError("denominator divisible by the characteristic");
        num %= p;
        if (num < 0) num += p;
        value_ = BigRational(num * inverse_mod(den, char_) % p);
    }

    static BigInt inverse_mod(BigInt a, unsigned p) {
        BigInt mod = p;
        a %= mod;
        if (a < 0) a += mod;
        if (a == 0) throw PreconditionError("inverse of zero in prime field");
        // extended Euclid
        BigInt t = 0, newt = 1, r = mod, newr = a;
        while (newr != 0) {
            BigInt q = r / newr;
            BigInt tmp = t - q * newt; t = newt; newt = tmp;
            tmp = r - q * newr; r = newr; newr = tmp;
        }
        if (r != 1) throw PreconditionError("characteristic is not prime");
        if (t < 0) t += mod;
        return t;
    }

    unsigned char_;
    BigRational value_;
};

} // namespace cpw
