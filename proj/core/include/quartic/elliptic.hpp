#pragma once

// Complete elliptic integral of the first kind and the Jacobi elliptic
// functions sn, cn, dn for real argument and real parameter m <= 1 - 1e-10.
//
// Parameter convention: m = k^2. Negative m (imaginary modulus) is mapped
// onto (0, 1) with the imaginary-modulus transformation
//   sn(u|m) = sd(v|mt) / sqrt(1-m),  cn(u|m) = cd(v|mt),  dn(u|m) = nd(v|mt),
//   mt = -m / (1-m),  v = u sqrt(1-m),
// so no complex arithmetic is involved anywhere.

namespace quartic::elliptic {

/// Width of the excluded band below the logarithmic singularity at m = 1.
inline constexpr double kSingularBand = 1e-10;

/// The parameter m = k^2 of the Jacobi functions. Construction validates
/// m <= 1 - kSingularBand and finiteness.
class EllipticParameter {
 public:
  constexpr EllipticParameter() = default;
  explicit EllipticParameter(double m);

  constexpr double value() const noexcept { return m_; }

  /// Complementary parameter 1 - m.
  constexpr double complement() const noexcept { return 1.0 - m_; }

  friend constexpr bool operator==(EllipticParameter, EllipticParameter) = default;

 private:
  double m_ = 0.0;
};

struct JacobiTriple {
  double sn = 0.0;
  double cn = 1.0;
  double dn = 1.0;
};

/// First derivatives with respect to the argument u.
struct JacobiDerivatives {
  double sn = 1.0;
  double cn = 0.0;
  double dn = 0.0;
};

/// Arithmetic-geometric mean of two positive numbers.
double agm(double a, double b);

/// K(m) = integral_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt.
double complete_k(EllipticParameter m);

/// K'(m) = K(1 - m); defined only for 0 < m < 1 with 1 - m outside the
/// singular band.
double complete_k_complement(EllipticParameter m);

/// Nome q = exp(-pi K'/K). For m < 0 the nome of the transformed parameter
/// -m/(1-m) is returned, which is the q that governs the real Fourier
/// series of the functions at m. Always 0 <= q < 1.
double nome(EllipticParameter m);

/// sn, cn, dn at (u | m) by descending Landen / AGM.
JacobiTriple jacobi(double u, EllipticParameter m);

/// (sn', cn', dn') = (cn dn, -sn dn, -m sn cn).
JacobiDerivatives jacobi_derivatives(double u, EllipticParameter m);

// Closed-form second derivatives in terms of the function values. These are
// what the residual checks of the field equations are built on.

/// sn'' = -(1+m) sn + 2 m sn^3
double sn_second_derivative(const JacobiTriple& f, EllipticParameter m);

/// dn'' = (2-m) dn - 2 dn^3
double dn_second_derivative(const JacobiTriple& f, EllipticParameter m);

/// (cn dn)' = -sn dn^2 - m sn cn^2
double cn_dn_first_derivative(const JacobiTriple& f, EllipticParameter m);

/// (cn dn)'' = cn dn (-dn^2 - m cn^2 + 4 m sn^2)
double cn_dn_second_derivative(const JacobiTriple& f, EllipticParameter m);

}  // namespace quartic::elliptic
