#ifndef PINCH_DUAL_HPP
#define PINCH_DUAL_HPP

#include <cmath>
#include <type_traits>

#include "pinch/errors.hpp"

namespace pinch {

/// Forward-mode dual number: value plus one directional derivative.
/// Nesting (Dual<Dual<double>>) yields mixed second derivatives: seeding
/// x = {{v, di}, {dj, 0}} propagates f, df/di, df/dj and d2f/didj through
/// any arithmetic written generically over the scalar type.
template <typename T>
struct Dual {
  T v{};
  T d{};

  constexpr Dual() = default;
  constexpr Dual(T value) : v(value) {}
  constexpr Dual(T value, T deriv) : v(value), d(deriv) {}

  Dual& operator+=(const Dual& o) {
    v += o.v;
    d += o.d;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    v -= o.v;
    d -= o.d;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    d = d * o.v + v * o.d;
    v = v * o.v;
    return *this;
  }
};

using Dual1 = Dual<double>;
using Dual2 = Dual<Dual<double>>;

// scalar_value(x): strip all derivative parts.
inline double scalar_value(double x) { return x; }
template <typename T>
double scalar_value(const Dual<T>& x) {
  return scalar_value(x.v);
}

template <typename T>
Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) {
  return {a.v + b.v, a.d + b.d};
}
template <typename T>
Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) {
  return {a.v - b.v, a.d - b.d};
}
template <typename T>
Dual<T> operator-(const Dual<T>& a) {
  return {-a.v, -a.d};
}
template <typename T>
Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
  return {a.v * b.v, a.d * b.v + a.v * b.d};
}
template <typename T>
Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
  if (scalar_value(b) == 0.0) throw DomainError("division by zero");
  T q = a.v / b.v;
  return {q, (a.d - q * b.d) / b.v};
}

// Mixed double/Dual arithmetic so numeric literals work in generic code.
template <typename T>
Dual<T> operator+(const Dual<T>& a, double b) { return {a.v + T(b), a.d}; }
template <typename T>
Dual<T> operator+(double a, const Dual<T>& b) { return {T(a) + b.v, b.d}; }
template <typename T>
Dual<T> operator-(const Dual<T>& a, double b) { return {a.v - T(b), a.d}; }
template <typename T>
Dual<T> operator-(double a, const Dual<T>& b) { return {T(a) - b.v, -b.d}; }
template <typename T>
Dual<T> operator*(const Dual<T>& a, double b) { return {a.v * T(b), a.d * T(b)}; }
template <typename T>
Dual<T> operator*(double a, const Dual<T>& b) { return {T(a) * b.v, T(a) * b.d}; }
template <typename T>
Dual<T> operator/(const Dual<T>& a, double b) {
  if (b == 0.0) throw DomainError("division by zero");
  return {a.v / T(b), a.d / T(b)};
}
template <typename T>
Dual<T> operator/(double a, const Dual<T>& b) {
  return Dual<T>(T(a)) / b;
}

template <typename T>
bool operator==(const Dual<T>& a, const Dual<T>& b) {
  return a.v == b.v && a.d == b.d;
}

using std::cos;
using std::cosh;
using std::exp;
using std::log;
using std::pow;
using std::sin;
using std::sinh;
using std::sqrt;

template <typename T>
Dual<T> exp(const Dual<T>& x) {
  T e = exp(x.v);
  return {e, x.d * e};
}
template <typename T>
Dual<T> log(const Dual<T>& x) {
  if (scalar_value(x) <= 0.0) throw DomainError("log of nonpositive value");
  return {log(x.v), x.d / x.v};
}
template <typename T>
Dual<T> sin(const Dual<T>& x) {
  return {sin(x.v), x.d * cos(x.v)};
}
template <typename T>
Dual<T> cos(const Dual<T>& x) {
  return {cos(x.v), -(x.d * sin(x.v))};
}
template <typename T>
Dual<T> sinh(const Dual<T>& x) {
  return {sinh(x.v), x.d * cosh(x.v)};
}
template <typename T>
Dual<T> cosh(const Dual<T>& x) {
  return {cosh(x.v), x.d * sinh(x.v)};
}
template <typename T>
Dual<T> sqrt(const Dual<T>& x) {
  if (scalar_value(x) < 0.0) throw DomainError("sqrt of negative value");
  if (scalar_value(x) == 0.0) throw DomainError("sqrt derivative at zero");
  T s = sqrt(x.v);
  return {s, x.d / (2.0 * s)};
}

/// x^p for a constant real exponent. Integer exponents are expanded by
/// repeated multiplication so negative bases stay legal; fractional
/// exponents go through exp/log and require a positive base.
inline double pow_const(double x, double p) {
  if (p == std::floor(p) && std::abs(p) <= 64.0) {
    if (x == 0.0 && p <= 0.0) throw DomainError("zero base with nonpositive exponent");
    return std::pow(x, p);
  }
  if (x <= 0.0) throw DomainError("fractional power of nonpositive base");
  return std::pow(x, p);
}

template <typename T>
Dual<T> pow_const(const Dual<T>& x, double p) {
  if (p == std::floor(p) && std::abs(p) <= 64.0) {
    long n = static_cast<long>(p);
    if (n == 0) return Dual<T>(T(1.0));
    if (scalar_value(x) == 0.0 && n < 0) throw DomainError("zero base with negative exponent");
    bool neg = n < 0;
    long m = neg ? -n : n;
    Dual<T> acc(T(1.0));
    Dual<T> base = x;
    while (m > 0) {
      if (m & 1) acc *= base;
      base *= base;
      m >>= 1;
    }
    return neg ? 1.0 / acc : acc;
  }
  if (scalar_value(x) <= 0.0) throw DomainError("fractional power of nonpositive base");
  return exp(log(x) * p);
}

} // namespace pinch

#endif
