#include "kh/rational.hpp"

#include <stdexcept>

#include "kh/errors.hpp"

namespace kh {

namespace mp = boost::multiprecision;

Rational::Rational(const BigInt& n, const BigInt& d) : num_(n), den_(d) {
    if (den_ == 0) throw ValidationError("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    num_ /= g;
    den_ /= g;
}

Rational Rational::operator-() const { return Rational(-num_, den_); }
Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}
Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw ValidationError("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

double Rational::to_double() const {
    return static_cast<double>(mp::cpp_rational(num_, den_));
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f, 1);
}

Rational Rational::binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return Rational(r, 1);
}

Rational Rational::double_factorial(int n) {
    BigInt f = 1;
    for (int i = n; i >= 2; i -= 2) f *= i;
    return Rational(f, 1);
}

Surd::Surd(const Rational& q, const BigInt& s) : q_(q), s_(s) {
    if (s_ < 0) throw ValidationError("Surd: negative radicand");
    normalize();
}

void Surd::normalize() {
    if (q_.is_zero() || s_ == 0) {
        if (s_ == 0) q_ = Rational(0);
        s_ = 1;
        return;
    }
    // pull square factors out by trial division; radicands here come from
    // factorials of small integers, so all prime factors are small
    BigInt s = s_, outside = 1;
    for (BigInt d = 2; d <= 1000 && d * d <= s; ++d) {
        while (s % (d * d) == 0) {
            s /= d * d;
            outside *= d;
        }
    }
    // leftover could itself be a perfect square
    BigInt r = mp::sqrt(s);
    if (r * r == s) {
        outside *= r;
        s = 1;
    }
    s_ = s;
    q_ = q_ * Rational(outside, 1);
}

Surd Surd::sqrt_of(const Rational& r) {
    if (r.sign() < 0) throw ValidationError("Surd::sqrt_of: negative argument");
    // sqrt(p/q) = sqrt(p q)/q
    return Surd(Rational(1, r.den()), r.num() * r.den());
}

Surd Surd::operator*(const Surd& o) const { return Surd(q_ * o.q_, s_ * o.s_); }
Surd Surd::operator*(const Rational& r) const { return Surd(q_ * r, s_); }
Surd Surd::operator-() const { return Surd(-q_, s_); }

Surd Surd::operator+(const Surd& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (s_ != o.s_)
        throw NumericError("Surd: sum across radical classes sqrt(" + s_.str() +
                           ") + sqrt(" + o.s_.str() + ")");
    return Surd(q_ + o.q_, s_);
}

double Surd::to_double() const {
    if (q_.is_zero()) return 0.0;
    double root = std::sqrt(static_cast<double>(s_));
    return q_.to_double() * root;
}

std::string Surd::str() const {
    if (q_.is_zero()) return "0";
    if (s_ == 1) return q_.str();
    return "(" + q_.str() + ")*sqrt(" + s_.str() + ")";
}

}  // namespace kh
