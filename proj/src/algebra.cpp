#include "geogrowth/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "geogrowth/errors.hpp"

namespace geogrowth {

namespace {

const BigInt kZero = 0;

}  // namespace

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const BigInt& c) { return Polynomial(std::vector<BigInt>{c}); }

Polynomial Polynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& Polynomial::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

const BigInt& Polynomial::trailing() const {
  for (const auto& c : coeffs_)
    if (c != 0) return c;
  return kZero;
}

BigInt Polynomial::eval(const BigInt& z) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

BigInt Polynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt c = content();
  if (leading() < 0) c = -c;
  return exact_quotient(*this, c);
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const BigInt& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial operator-(Polynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return a + b;
    case PolyOp::sub:
      return a - b;
    case PolyOp::mul:
      return a * b;
  }
  throw InternalError("unknown polynomial operation");
}

Polynomial exact_quotient(const Polynomial& a, const BigInt& c) {
  if (c == 0) throw ZeroDenominatorError();
  std::vector<BigInt> v = a.coeffs();
  for (auto& x : v) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) throw InternalError("inexact integer division");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return Polynomial(std::move(v));
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ZeroDenominatorError();
  if (a.is_zero()) return {};
  if (b.degree() == 0) return exact_quotient(a, b.leading());
  if (a.degree() < b.degree()) throw InternalError("inexact polynomial division");

  std::vector<BigInt> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<BigInt> q(rem.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), bc[db].get_mpz_t()))
      throw InternalError("inexact polynomial division");
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), bc[db].get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q[k] * bc[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw InternalError("inexact polynomial division");
  return Polynomial(std::move(q));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ZeroDenominatorError();
  if (a.degree() < b.degree()) return a;
  const BigInt& lb = b.leading();
  int steps = a.degree() - b.degree() + 1;
  Polynomial r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Polynomial t = b.shifted(static_cast<std::size_t>(r.degree() - b.degree())) * r.leading();
    r = r * lb - t;
    --steps;
  }
  for (; steps > 0; --steps) r *= lb;
  return r;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;

  BigInt c;
  mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  Polynomial u = a.primitive_part();
  Polynomial v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    Polynomial r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive_part();
  }
  return u * c;
}

namespace {

void write_term(std::ostringstream& os, const BigInt& c, std::size_t i, char var, bool first) {
  BigInt mag = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (i == 0 || mag != 1) os << mag.get_str();
  if (i >= 1) os << var;
  if (i >= 2) os << '^' << i;
}

}  // namespace

std::string to_string(const Polynomial& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] == 0) continue;
    write_term(os, p.coeffs()[i], i, var, first);
    first = false;
  }
  return os.str();
}

RationalFunction::RationalFunction(const Polynomial& p) : num_(p), den_(Polynomial{1}) {}

RationalFunction rat_normalize(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw ZeroDenominatorError();
  if (num.is_zero()) return RationalFunction(Polynomial{}, Polynomial{1});
  Polynomial g = gcd(num, den);
  num = exact_quotient(num, g);
  den = exact_quotient(den, g);
  if (den.trailing() < 0) {
    num = -num;
    den = -den;
  }
  return RationalFunction(std::move(num), std::move(den));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return rat_normalize(a.num_ + b.num_, a.den_);
  return rat_normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return rat_normalize(a.num_ - b.num_, a.den_);
  return rat_normalize(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return rat_normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return rat_normalize(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const RationalFunction& f, char var) {
  if (f.den() == Polynomial{1}) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ") / (" + to_string(f.den(), var) + ")";
}

CountTable expand(const RationalFunction& f, std::size_t n_max) {
  const Polynomial& den = f.den();
  const BigInt d0 = den.coeff(0);
  if (d0 == 0) throw NoExpansionError();
  CountTable out(n_max + 1);
  const std::size_t dd = den.coeffs().size();
  for (std::size_t i = 0; i <= n_max; ++i) {
    BigInt acc = f.num().coeff(i);
    for (std::size_t j = 1; j < dd && j <= i; ++j) acc -= den.coeffs()[j] * out[i - j];
    if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t()))
      throw InternalError("series coefficient is not an integer");
    mpz_divexact(out[i].get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
  }
  return out;
}

std::vector<RationalFunction> solve_linear(const PolyMatrix& system, const std::vector<Polynomial>& rhs) {
  const std::size_t n = system.size();
  if (rhs.size() != n) throw PreconditionError("solve_linear: rhs length does not match matrix");
  for (const auto& row : system)
    if (row.size() != n) throw PreconditionError("solve_linear: matrix is not square");
  if (n == 0) return {};

  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = system[i];
    m[i].push_back(rhs[i]);
  }

  Polynomial prev{1};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) throw SingularMatrixError();
    if (p != k) std::swap(m[p], m[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j)
        m[i][j] = exact_quotient(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = Polynomial{};
    }
    prev = m[k][k];
  }

  // D = +-det; X_i = D * x_i is a polynomial by Cramer's rule.
  const Polynomial& det = m[n - 1][n - 1];
  std::vector<Polynomial> scaled(n);
  for (std::size_t i = n; i-- > 0;) {
    Polynomial acc = det * m[i][n];
    for (std::size_t j = i + 1; j < n; ++j) acc -= m[i][j] * scaled[j];
    scaled[i] = exact_quotient(acc, m[i][i]);
  }
  std::vector<RationalFunction> x;
  x.reserve(n);
  for (auto& s : scaled) x.push_back(rat_normalize(std::move(s), det));
  return x;
}

}  // namespace geogrowth
