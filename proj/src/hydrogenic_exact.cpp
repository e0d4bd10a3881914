#include "kh/hydrogenic_exact.hpp"

#include <cstdlib>

#include "kh/errors.hpp"

namespace kh::exact {

RationalPoly legendre_coeffs(int n) {
    RationalPoly a{Rational(1)};
    if (n == 0) return a;
    RationalPoly b{Rational(0), Rational(1)};
    if (n == 1) return b;
    for (int k = 2; k <= n; ++k) {
        RationalPoly c(k + 1, Rational(0));
        for (size_t j = 0; j < b.size(); ++j)
            c[j + 1] = c[j + 1] + Rational(2 * k - 1, 1) / Rational(k) * b[j];
        for (size_t j = 0; j < a.size(); ++j)
            c[j] = c[j] - Rational(k - 1, 1) / Rational(k) * a[j];
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

RationalPoly assoc_poly(int l, int m) {
    RationalPoly c = legendre_coeffs(l);
    for (int d = 0; d < m; ++d) {
        if (c.size() <= 1) return {Rational(0)};
        RationalPoly dc(c.size() - 1, Rational(0));
        for (size_t j = 1; j < c.size(); ++j) dc[j - 1] = c[j] * Rational(static_cast<long long>(j));
        c = std::move(dc);
    }
    return c;
}

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return r;
}

Rational poly_integral_m11(const RationalPoly& p) {
    Rational s(0);
    for (size_t j = 0; j < p.size(); ++j)
        if (j % 2 == 0) s = s + p[j] * Rational(2, 1) / Rational(static_cast<long long>(j + 1));
    return s;
}

RationalPoly one_minus_u2_pow(int j) {
    RationalPoly c(2 * j + 1, Rational(0));
    for (int i = 0; i <= j; ++i)
        c[2 * i] = Rational((i % 2 ? -1 : 1), 1) * Rational::binomial(j, i);
    return c;
}

Rational phi_integral_over_pi(int d, int j) {
    d = std::abs(d);
    if (d % 2 != 0 || d > 2 * j) return Rational(0);
    if (j == 0) return d == 0 ? Rational(2) : Rational(0);
    // cos^{2j} = 2^{-2j} [ C(2j,j) + 2 sum_h C(2j,j-h) cos(2h phi) ]
    BigInt pow4 = BigInt(1) << (2 * j);
    Rational binom = Rational::binomial(2 * j, j - d / 2);
    return binom * Rational(2, 1) / Rational(pow4, 1);
}

Rational multipole_A(int m) {
    return Rational::double_factorial(2 * m - 1) / Rational::double_factorial(2 * m);
}

Surd angular_bracket_exact(int l1, int m1, int l2, int m2, int order2n) {
    if (order2n % 2 != 0 || order2n < 0)
        throw ValidationError("angular_bracket_exact: even order required");
    if ((m2 - m1) % 2 != 0) return Surd();
    const int am1 = std::abs(m1), am2 = std::abs(m2);
    const RationalPoly P = legendre_coeffs(order2n);
    const RationalPoly pp = poly_mul(assoc_poly(l1, am1), assoc_poly(l2, am2));
    const int half = (am1 + am2) / 2;  // (1-u^2)^{half} from the two |m| halves

    Rational total(0);
    for (int j2 = 0; j2 <= order2n; j2 += 2) {
        if (P[j2].is_zero()) continue;
        int j = j2 / 2;  // v^{2j} = (1-u^2)^j cos^{2j} phi
        Rational f = phi_integral_over_pi(m2 - m1, j);
        if (f.is_zero()) continue;
        Rational g = poly_integral_m11(poly_mul(pp, one_minus_u2_pow(j + half)));
        total = total + P[j2] * f * g;
    }
    if (total.is_zero()) return Surd();

    // Condon-Shortley phases: (-1)^m for m > 0, +1 for m <= 0
    int s1 = (m1 > 0 && m1 % 2) ? -1 : 1;
    int s2 = (m2 > 0 && m2 % 2) ? -1 : 1;
    // normalization: sqrt(C2_1 C2_2) with C2 = (2l+1)(l-|m|)!/(4 (l+|m|)!) / pi;
    // the 1/pi pair cancels the pi of the phi integral times 1/pi overall
    Rational c2 = Rational(2 * l1 + 1) * Rational::factorial(l1 - am1) /
                  (Rational(4) * Rational::factorial(l1 + am1)) *
                  (Rational(2 * l2 + 1) * Rational::factorial(l2 - am2) /
                   (Rational(4) * Rational::factorial(l2 + am2)));
    return Surd::sqrt_of(c2) * (total * Rational(s1 * s2, 1));
}

namespace {

struct RadialPoly {
    Rational norm2;               // normalization squared (Z = 1)
    std::vector<Rational> coeff;  // coefficient of r^{l+i}
    Rational rate;                // exponential rate, e^{-rate r}
    int l;
};

RadialPoly radial_poly(int n, int l) {
    RadialPoly rp;
    rp.l = l;
    rp.norm2 = Rational(8, static_cast<long long>(n) * n * n) *
               Rational::factorial(n - l - 1) /
               (Rational(2 * n) * Rational::factorial(n + l));
    rp.rate = Rational(1, n);
    const int kmax = n - l - 1;
    Rational two_over_n(2, n);
    for (int i = 0; i <= kmax; ++i) {
        Rational c = Rational((i % 2 ? -1 : 1), 1) * Rational::binomial(n + l, kmax - i) /
                     Rational::factorial(i);
        // (2r/n)^{l+i}
        Rational scale(1);
        for (int t = 0; t < l + i; ++t) scale = scale * two_over_n;
        rp.coeff.push_back(c * scale);
    }
    return rp;
}

}  // namespace

Surd radial_integral_exact(int n1, int l1, int n2, int l2, int k) {
    RadialPoly a = radial_poly(n1, l1), b = radial_poly(n2, l2);
    Rational alpha = a.rate + b.rate;
    Rational tot(0);
    for (size_t i = 0; i < a.coeff.size(); ++i)
        for (size_t j = 0; j < b.coeff.size(); ++j) {
            int t = l1 + static_cast<int>(i) + l2 + static_cast<int>(j) + k + 2;
            if (t < 0)
                throw ValidationError("radial_integral_exact: divergent moment r^" +
                                      std::to_string(k));
            // int_0^inf r^t e^{-alpha r} dr = t!/alpha^{t+1}
            Rational apow(1);
            for (int q = 0; q <= t; ++q) apow = apow * alpha;
            tot = tot + a.coeff[i] * b.coeff[j] * Rational::factorial(t) / apow;
        }
    return Surd::sqrt_of(a.norm2 * b.norm2) * tot;
}

std::map<int, Surd> matrix_element_exact(const BoundState& s1, const BoundState& s2,
                                         int max_order) {
    std::map<int, Surd> out;
    for (int m = 1; m <= max_order; ++m) {
        // triangle rule at the angular level
        if (2 * m > s1.l + s2.l || 2 * m < std::abs(s1.l - s2.l)) continue;
        Surd B = angular_bracket_exact(s1.l, s1.lz, s2.l, s2.lz, 2 * m);
        if (B.is_zero()) continue;
        Surd R = radial_integral_exact(s1.n, s1.l, s2.n, s2.l, -(2 * m + 1));
        Surd v = B * R * (-multipole_A(m));
        if (!v.is_zero()) out[m] = v;
    }
    return out;
}

}  // namespace kh::exact
