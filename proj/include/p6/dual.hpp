#pragma once

#include <complex>

namespace p6 {

// Value plus first-order sensitivity.
template <class T>
struct Dual {
    T v{};
    T d{};

    Dual() = default;
    Dual(T value) : v(value) {}
    Dual(T value, T deriv) : v(value), d(deriv) {}

    Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
    Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
    Dual& operator*=(const Dual& o) { d = d * o.v + v * o.d; v *= o.v; return *this; }
    Dual& operator/=(const Dual& o) {
        d = (d * o.v - v * o.d) / (o.v * o.v);
        v /= o.v;
        return *this;
    }

    friend Dual operator+(Dual a, const Dual& b) { return a += b; }
    friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
    friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
    friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
    friend Dual operator-(const Dual& a) { return {-a.v, -a.d}; }

    friend Dual operator+(Dual a, const T& b) { a.v += b; return a; }
    friend Dual operator+(const T& b, Dual a) { a.v += b; return a; }
    friend Dual operator-(Dual a, const T& b) { a.v -= b; return a; }
    friend Dual operator-(const T& b, const Dual& a) { return {b - a.v, -a.d}; }
    friend Dual operator*(Dual a, const T& b) { a.v *= b; a.d *= b; return a; }
    friend Dual operator*(const T& b, Dual a) { a.v *= b; a.d *= b; return a; }
    friend Dual operator/(Dual a, const T& b) { a.v /= b; a.d /= b; return a; }
    friend Dual operator/(const T& b, const Dual& a) { return {b / a.v, -b * a.d / (a.v * a.v)}; }
};

template <class T>
const T& value_of(const T& x) { return x; }
template <class T>
const T& value_of(const Dual<T>& x) { return x.v; }

using CDual = Dual<std::complex<double>>;

}  // namespace p6
