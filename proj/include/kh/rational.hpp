#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace kh {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational over arbitrary-precision integers, always normalized
// (gcd-reduced, denominator > 0).
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(const BigInt& n, const BigInt& d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    double to_double() const;
    std::string str() const;  // "p/q", or "p" when q == 1

    static Rational factorial(int n);
    static Rational binomial(int n, int k);
    static Rational double_factorial(int n);  // n!!, with (-1)!! = 1

private:
    BigInt num_, den_;
    void normalize();
};

// q * sqrt(s) with q rational and s a non-negative integer, normalized so
// that s carries no square factor (the values in this codebase are smooth,
// so trial division suffices).
class Surd {
public:
    Surd() : q_(0), s_(1) {}
    Surd(const Rational& q, const BigInt& s);
    static Surd sqrt_of(const Rational& r);  // sqrt(r), r >= 0

    const Rational& coeff() const { return q_; }
    const BigInt& radicand() const { return s_; }
    bool is_zero() const { return q_.is_zero(); }
    bool is_rational() const { return s_ == 1 || q_.is_zero(); }

    Surd operator*(const Surd& o) const;
    Surd operator*(const Rational& r) const;
    Surd operator-() const;
    // addition only within the same radical class
    Surd operator+(const Surd& o) const;
    bool operator==(const Surd& o) const { return q_ == o.q_ && s_ == o.s_; }

    double to_double() const;
    std::string str() const;  // "p/q" or "(p/q)*sqrt(s)"

private:
    Rational q_;
    BigInt s_;
    void normalize();
};

}  // namespace kh
