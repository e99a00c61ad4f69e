#pragma once

// Exact arithmetic on Laurent polynomials in z and on power series in q
// truncated at a fixed order.  Coefficients are GMP integers throughout.

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ocrank {

using BigInt = mpz_class;

// Sparse Laurent polynomial in z.  No stored coefficient is ever zero, so
// the zero polynomial is the empty map and equality is map equality.
class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: implicit from integer constants
  LaurentPoly(std::initializer_list<std::pair<const int, BigInt>> terms);
  explicit LaurentPoly(Terms terms);

  static LaurentPoly monomial(const BigInt& coeff, int exponent);

  const Terms& terms() const { return terms_; }
  BigInt coeff(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;  // requires !is_zero()

  // z -> z^{-1}
  LaurentPoly reflected() const;
  // Value at z = 1.
  BigInt at_one() const;

  void add_term(int exponent, const BigInt& coeff);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const BigInt& scalar);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly lhs, const BigInt& s) { return lhs *= s; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // "[(-1,1),(0,-1),(1,1)]"; the zero polynomial prints as "[]".
  std::string to_pair_list() const;
  // JSON array of [exponent, coefficient] pairs; big coefficients are
  // written as plain integer literals.
  std::string to_json_pairs() const;
  // Human form, e.g. "z^-1 - 1 + z".
  std::string to_string() const;

 private:
  Terms terms_;
};

LaurentPoly zp_add(const LaurentPoly& p, const LaurentPoly& r);
LaurentPoly zp_mul(const LaurentPoly& p, const LaurentPoly& r);

// Power series sum_{n=0}^{order} coeffs[n] q^n, read modulo q^{order+1}.
class QSeries {
 public:
  explicit QSeries(std::size_t order);
  QSeries(std::size_t order, std::vector<LaurentPoly> coeffs);

  static QSeries one(std::size_t order);
  static QSeries monomial(std::size_t order, std::size_t q_exp, const LaurentPoly& coeff);
  // Single-variable series from integer coefficients; missing entries are 0.
  static QSeries from_integers(std::size_t order, const std::vector<long>& coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
  const LaurentPoly& coeff(std::size_t n) const;  // throws std::out_of_range
  LaurentPoly& coeff_mut(std::size_t n);

  bool is_single_variable() const;
  QSeries truncated(std::size_t new_order) const;

  // In-place multiplication by the single factor (1 - c z^e q^k).
  void mul_factor(long c, int e, std::size_t k);

  QSeries& operator+=(const QSeries& rhs);
  QSeries& operator-=(const QSeries& rhs);
  QSeries& operator*=(const BigInt& scalar);

  friend QSeries operator+(QSeries lhs, const QSeries& rhs) { return lhs += rhs; }
  friend QSeries operator-(QSeries lhs, const QSeries& rhs) { return lhs -= rhs; }
  friend QSeries operator*(const QSeries& lhs, const QSeries& rhs);
  friend QSeries operator*(QSeries lhs, const BigInt& s) { return lhs *= s; }

  friend bool operator==(const QSeries&, const QSeries&) = default;

  std::string to_string() const;

 private:
  std::vector<LaurentPoly> coeffs_;
};

QSeries qs_add(const QSeries& s, const QSeries& t);
QSeries qs_mul(const QSeries& s, const QSeries& t);
QSeries qs_invert(const QSeries& s);
QSeries qs_subst_neg_q(const QSeries& s);
QSeries qs_dissect(const QSeries& s, std::size_t modulus, std::size_t residue);
const LaurentPoly& qs_coeff(const QSeries& s, std::size_t n);

// q -> q^factor, result truncated at out_order.  Needs s.order() >= out_order / factor.
QSeries qs_dilate(const QSeries& s, std::size_t factor, std::size_t out_order);
// Multiplication by q^k (coefficients move up, top k drop off).
QSeries qs_shift_up(const QSeries& s, std::size_t k);
// Coefficient-wise z -> z^{-1}.
QSeries qs_reflect_z(const QSeries& s);
// Sum of Laurent coefficients at each power of q.
std::vector<BigInt> qs_at_z_one(const QSeries& s);

// (c z^e q^b; q^d)_n, with count == nullopt for the infinite product.
struct PochSpec {
  long c = 1;
  int e = 0;
  std::size_t b = 1;
  std::size_t d = 1;
  std::optional<std::size_t> count;
};

QSeries poch_product(const PochSpec& spec, std::size_t order);

}  // namespace ocrank
