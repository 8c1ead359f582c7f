#pragma once

#include <vector>

namespace ptmeans {

/// Truncated Taylor series ("jet") in one variable t.  coeffs()[k] is the
/// coefficient of t^k; order() is the truncation degree n.  Jets are
/// immutable value types: every operation returns a new jet, so they are
/// safe to share across threads.
///
/// Binary arithmetic requires both operands to have the same order and
/// yields that order.  div() is the one exception: dividing out a common
/// zero of multiplicity z (a removable singularity) yields order n - z.
class Jet {
 public:
  /// Coefficients c_0..c_n, lowest degree first.  Must be non-empty.
  explicit Jet(std::vector<double> coeffs);

  /// The constant series c + 0*t + ... + 0*t^order.
  static Jet constant(double c, int order);

  /// The series c0 + t (+ 0*t^2 + ...).
  static Jet variable(double c0, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  double operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  /// Index of the first coefficient with |c| >= the zero tolerance,
  /// or -1 if the series is identically zero.
  int first_nonzero() const;

 private:
  std::vector<double> coeffs_;
};

/// A coefficient counts as zero iff |c| < kJetZeroTol.  The removable
/// singularities produced by the mean formulas have exactly-zero leading
/// coefficients, so this threshold never masks a genuine pole.
inline constexpr double kJetZeroTol = 1e-300;

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);  // Cauchy product, truncated
Jet operator-(const Jet& a);
Jet operator+(const Jet& a, double c);
Jet operator+(double c, const Jet& a);
Jet operator-(const Jet& a, double c);
Jet operator-(double c, const Jet& a);
Jet operator*(const Jet& a, double s);
Jet operator*(double s, const Jet& a);
Jet operator/(const Jet& a, double s);

/// Series division num/den.  Let z be the order of den's leading zero
/// (z = 0 when den has a nonzero constant term).  num must vanish to
/// order >= z; the common factor t^z is shifted out and the result has
/// order n - z.  A numerator vanishing to lower order is a pole and
/// raises std::domain_error.
Jet div(const Jet& num, const Jet& den);

/// Substitutes inner into the polynomial with outer's coefficients
/// (Horner).  inner's constant term must be zero.
Jet compose(const Jet& outer, const Jet& inner);

/// Copy truncated (or zero-extended) to the given order.
Jet truncate(const Jet& a, int order);

// Elementary recompositions.  The constant term of the argument must lie
// in the interior of the function's domain; asin/atan/asinh accept any
// interior constant term, including the zero of the odd-series case.
Jet exp(const Jet& g);
Jet log(const Jet& g);    // requires g[0] > 0
Jet sqrt(const Jet& g);   // requires g[0] > 0
Jet asin(const Jet& g);   // requires |g[0]| < 1
Jet atan(const Jet& g);
Jet asinh(const Jet& g);
Jet pow(const Jet& g, double q);  // exp(q*log(g)); requires g[0] > 0

}  // namespace ptmeans
