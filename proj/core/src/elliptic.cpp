#include "quartic/elliptic.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "quartic/errors.hpp"

namespace quartic::elliptic {
namespace {

constexpr int kMaxLandenSteps = 32;

[[noreturn]] void throw_parameter(const char* what, double m) {
  std::ostringstream os;
  os.precision(17);
  os << what << ": parameter m = " << m;
  throw DomainError(os.str());
}

// sn, cn, dn for 0 <= m < 1 (A&S 16.4). dn is rebuilt as
// sqrt(cn^2 + (1-m) sn^2), which has no cancellation near m = 1.
JacobiTriple jacobi_unit_interval(double u, double m) {
  if (m == 0.0) {
    return {std::sin(u), std::cos(u), 1.0};
  }
  std::array<double, kMaxLandenSteps + 1> a{};
  std::array<double, kMaxLandenSteps + 1> c{};
  a[0] = 1.0;
  c[0] = std::sqrt(m);
  double b = std::sqrt(1.0 - m);
  int n = 0;
  const double eps = std::numeric_limits<double>::epsilon();
  while (std::abs(c[n]) > eps * a[n] && n < kMaxLandenSteps) {
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * u, n);
  for (int j = n; j > 0; --j) {
    phi = 0.5 * (phi + std::asin(c[j] / a[j] * std::sin(phi)));
  }
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  const double dn = std::sqrt(cn * cn + (1.0 - m) * sn * sn);
  return {sn, cn, dn};
}

}  // namespace

EllipticParameter::EllipticParameter(double m) : m_(m) {
  if (!std::isfinite(m)) throw_parameter("non-finite elliptic parameter", m);
  if (m > 1.0 - kSingularBand) {
    throw_parameter("elliptic parameter inside the singular band below 1", m);
  }
}

double agm(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("agm requires positive arguments");
  }
  const double eps = std::numeric_limits<double>::epsilon();
  for (int i = 0; i < kMaxLandenSteps && std::abs(a - b) > eps * a; ++i) {
    const double next = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next;
  }
  return 0.5 * (a + b);
}

double complete_k(EllipticParameter m) {
  // Valid for every m < 1, negative m included.
  return std::numbers::pi / (2.0 * agm(1.0, std::sqrt(m.complement())));
}

double complete_k_complement(EllipticParameter m) {
  if (!(m.value() > 0.0)) {
    throw_parameter("complementary integral needs 0 < m < 1", m.value());
  }
  return complete_k(EllipticParameter(m.complement()));
}

double nome(EllipticParameter m) {
  double mt = m.value();
  if (mt == 0.0) return 0.0;
  if (mt < 0.0) mt = -mt / (1.0 - mt);
  // K'/K = agm(1, sqrt(1-m)) / agm(1, sqrt(m)); avoids the band check on 1-m
  // for tiny positive m.
  const double ratio = agm(1.0, std::sqrt(1.0 - mt)) / agm(1.0, std::sqrt(mt));
  return std::exp(-std::numbers::pi * ratio);
}

JacobiTriple jacobi(double u, EllipticParameter m) {
  if (!std::isfinite(u)) {
    throw DomainError("non-finite argument to Jacobi elliptic function");
  }
  // sn and cn are 4K-periodic for every m < 1; reducing keeps the Landen
  // phase small for large |u|.
  const double period = 4.0 * complete_k(m);
  const double r = std::abs(u) > period ? std::remainder(u, period) : u;

  const double mv = m.value();
  if (mv >= 0.0) return jacobi_unit_interval(r, mv);

  const double scale = std::sqrt(1.0 - mv);
  const JacobiTriple t = jacobi_unit_interval(r * scale, -mv / (1.0 - mv));
  return {t.sn / (t.dn * scale), t.cn / t.dn, 1.0 / t.dn};
}

JacobiDerivatives jacobi_derivatives(double u, EllipticParameter m) {
  const JacobiTriple f = jacobi(u, m);
  return {f.cn * f.dn, -f.sn * f.dn, -m.value() * f.sn * f.cn};
}

double sn_second_derivative(const JacobiTriple& f, EllipticParameter m) {
  const double mv = m.value();
  return -(1.0 + mv) * f.sn + 2.0 * mv * f.sn * f.sn * f.sn;
}

double dn_second_derivative(const JacobiTriple& f, EllipticParameter m) {
  return (2.0 - m.value()) * f.dn - 2.0 * f.dn * f.dn * f.dn;
}

double cn_dn_first_derivative(const JacobiTriple& f, EllipticParameter m) {
  return -f.sn * f.dn * f.dn - m.value() * f.sn * f.cn * f.cn;
}

double cn_dn_second_derivative(const JacobiTriple& f, EllipticParameter m) {
  const double mv = m.value();
  return f.cn * f.dn *
         (-f.dn * f.dn - mv * f.cn * f.cn + 4.0 * mv * f.sn * f.sn);
}

}  // namespace quartic::elliptic
