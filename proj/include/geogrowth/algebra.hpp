#pragma once

// Exact univariate algebra over Z[z]: polynomials, reduced rational
// functions, power-series expansion and fraction-free linear solving.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace geogrowth {

using BigInt = mpz_class;

/// Polynomial with arbitrary-precision integer coefficients.
///
/// coeffs()[i] is the coefficient of z^i.  The zero polynomial is the empty
/// coefficient vector; otherwise the highest stored coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(const BigInt& c);
  static Polynomial monomial(const BigInt& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of z^i; zero beyond the degree.
  BigInt coeff(std::size_t i) const;
  const BigInt& leading() const;
  /// Lowest-order nonzero coefficient.
  const BigInt& trailing() const;
  BigInt eval(const BigInt& z) const;

  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  BigInt content() const;
  /// this / content(), with positive leading coefficient.
  Polynomial primitive_part() const;
  /// this * z^k
  Polynomial shifted(std::size_t k) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const BigInt& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const BigInt& c) { return a *= c; }
  friend Polynomial operator*(const BigInt& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

enum class PolyOp { add, sub, mul };

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

/// a / b when b divides a in Z[z]; throws InternalError otherwise.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);
/// a / c coefficient-wise when c divides every coefficient.
Polynomial exact_quotient(const Polynomial& a, const BigInt& c);
/// Remainder of lc(b)^(deg a - deg b + 1) * a divided by b.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);
/// Greatest common divisor in Z[z], with positive leading coefficient.
/// gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

std::string to_string(const Polynomial& p, char var = 'z');

/// num/den in lowest terms: gcd(num, den) is a unit and the lowest-order
/// nonzero coefficient of den is positive.  Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial{1}) {}
  RationalFunction(const Polynomial& p);  // NOLINT: polynomials embed implicitly

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  friend RationalFunction rat_normalize(Polynomial num, Polynomial den);
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

/// Throws ZeroDenominatorError when den is zero.
RationalFunction rat_normalize(Polynomial num, Polynomial den);

std::string to_string(const RationalFunction& f, char var = 'z');

/// Taylor coefficients counts[0..n_max] (inclusive) at z = 0.
using CountTable = std::vector<BigInt>;

/// Throws NoExpansionError when den(0) = 0, and InternalError if a
/// coefficient is not an integer.
CountTable expand(const RationalFunction& f, std::size_t n_max);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Solves system * x = rhs over Q(z) by fraction-free (Bareiss) elimination.
/// Pivot: first row at or below the diagonal with a nonzero entry.
/// Throws SingularMatrixError when det(system) = 0, PreconditionError when
/// the shapes do not match.
std::vector<RationalFunction> solve_linear(const PolyMatrix& system, const std::vector<Polynomial>& rhs);

}  // namespace geogrowth
