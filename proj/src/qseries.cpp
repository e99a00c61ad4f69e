#include "ocrank/qseries.hpp"

#include <sstream>
#include <stdexcept>

namespace ocrank {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, BigInt(constant));
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, BigInt>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly::LaurentPoly(Terms terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

BigInt LaurentPoly::at_one() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

void LaurentPoly::add_term(int exponent, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [e, c] : terms_) c *= scalar;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string LaurentPoly::to_pair_list() const {
  std::string s = "[";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) s += ",";
    first = false;
    s += "(" + std::to_string(e) + "," + c.get_str() + ")";
  }
  return s + "]";
}

std::string LaurentPoly::to_json_pairs() const {
  std::string s = "[";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) s += ",";
    first = false;
    s += "[" + std::to_string(e) + "," + c.get_str() + "]";
  }
  return s + "]";
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly zp_add(const LaurentPoly& p, const LaurentPoly& r) { return p + r; }
LaurentPoly zp_mul(const LaurentPoly& p, const LaurentPoly& r) { return p * r; }

// ---------------------------------------------------------------------------
// QSeries

namespace {

void require_same_order(const QSeries& s, const QSeries& t, const char* what) {
  if (s.order() != t.order()) {
    throw std::invalid_argument(std::string(what) + ": order mismatch (" +
                                std::to_string(s.order()) + " vs " + std::to_string(t.order()) + ")");
  }
}

}  // namespace

QSeries::QSeries(std::size_t order) : coeffs_(order + 1) {}

QSeries::QSeries(std::size_t order, std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

QSeries QSeries::one(std::size_t order) {
  QSeries s(order);
  s.coeffs_[0] = LaurentPoly(1);
  return s;
}

QSeries QSeries::monomial(std::size_t order, std::size_t q_exp, const LaurentPoly& coeff) {
  QSeries s(order);
  if (q_exp <= order) s.coeffs_[q_exp] = coeff;
  return s;
}

QSeries QSeries::from_integers(std::size_t order, const std::vector<long>& coeffs) {
  QSeries s(order);
  for (std::size_t n = 0; n < coeffs.size() && n <= order; ++n) s.coeffs_[n] = LaurentPoly(coeffs[n]);
  return s;
}

const LaurentPoly& QSeries::coeff(std::size_t n) const {
  if (n >= coeffs_.size()) {
    throw std::out_of_range("coefficient index " + std::to_string(n) + " exceeds order " +
                            std::to_string(order()));
  }
  return coeffs_[n];
}

LaurentPoly& QSeries::coeff_mut(std::size_t n) {
  if (n >= coeffs_.size()) throw std::out_of_range("coefficient index out of range");
  return coeffs_[n];
}

bool QSeries::is_single_variable() const {
  for (const auto& c : coeffs_) {
    if (!c.is_constant()) return false;
  }
  return true;
}

QSeries QSeries::truncated(std::size_t new_order) const {
  if (new_order > order()) throw std::invalid_argument("truncated: cannot raise the order");
  return QSeries(new_order, std::vector<LaurentPoly>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

void QSeries::mul_factor(long c, int e, std::size_t k) {
  if (k == 0) throw std::invalid_argument("mul_factor: q-exponent must be positive");
  if (c == 0 || k > order()) return;
  const BigInt scale = -c;
  // Descending n so every source coefficient is still the old one.
  for (std::size_t n = order(); n >= k; --n) {
    const LaurentPoly& src = coeffs_[n - k];
    for (const auto& [ze, zc] : src.terms()) coeffs_[n].add_term(ze + e, scale * zc);
    if (n == k) break;
  }
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  require_same_order(*this, rhs, "qs_add");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
  require_same_order(*this, rhs, "qs_sub");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

QSeries operator*(const QSeries& lhs, const QSeries& rhs) {
  require_same_order(lhs, rhs, "qs_mul");
  const std::size_t order = lhs.order();
  QSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[n].to_string() << ")";
    if (n > 0) os << "*q^" << n;
  }
  if (first) os << "0";
  os << " + O(q^" << coeffs_.size() << ")";
  return os.str();
}

QSeries qs_add(const QSeries& s, const QSeries& t) { return s + t; }
QSeries qs_mul(const QSeries& s, const QSeries& t) { return s * t; }

QSeries qs_invert(const QSeries& s) {
  if (!s.coeff(0).is_one()) {
    throw std::invalid_argument("qs_invert: constant term must be 1 for integer inversion");
  }
  const std::size_t order = s.order();
  std::vector<LaurentPoly> t(order + 1);
  t[0] = LaurentPoly(1);
  for (std::size_t n = 1; n <= order; ++n) {
    LaurentPoly acc;
    for (std::size_t k = 1; k <= n; ++k) {
      const LaurentPoly& sk = s.coeff(k);
      if (sk.is_zero() || t[n - k].is_zero()) continue;
      acc -= sk * t[n - k];
    }
    t[n] = std::move(acc);
  }
  return QSeries(order, std::move(t));
}

QSeries qs_subst_neg_q(const QSeries& s) {
  if (!s.is_single_variable()) {
    throw std::invalid_argument("qs_subst_neg_q: series has nonzero z-exponents");
  }
  QSeries out = s;
  for (std::size_t n = 1; n <= out.order(); n += 2) out.coeff_mut(n) = -out.coeff(n);
  return out;
}

QSeries qs_dissect(const QSeries& s, std::size_t modulus, std::size_t residue) {
  if (modulus == 0 || residue >= modulus) {
    throw std::invalid_argument("qs_dissect: need 0 <= residue < modulus");
  }
  if (residue > s.order()) throw std::invalid_argument("qs_dissect: residue exceeds order");
  const std::size_t out_order = (s.order() - residue) / modulus;
  QSeries out(out_order);
  for (std::size_t n = 0; n <= out_order; ++n) out.coeff_mut(n) = s.coeff(modulus * n + residue);
  return out;
}

const LaurentPoly& qs_coeff(const QSeries& s, std::size_t n) { return s.coeff(n); }

QSeries qs_dilate(const QSeries& s, std::size_t factor, std::size_t out_order) {
  if (factor == 0) throw std::invalid_argument("qs_dilate: factor must be positive");
  if (s.order() < out_order / factor) throw std::invalid_argument("qs_dilate: input order too small");
  QSeries out(out_order);
  for (std::size_t n = 0; n * factor <= out_order; ++n) out.coeff_mut(n * factor) = s.coeff(n);
  return out;
}

QSeries qs_shift_up(const QSeries& s, std::size_t k) {
  QSeries out(s.order());
  for (std::size_t n = k; n <= s.order(); ++n) out.coeff_mut(n) = s.coeff(n - k);
  return out;
}

QSeries qs_reflect_z(const QSeries& s) {
  QSeries out(s.order());
  for (std::size_t n = 0; n <= s.order(); ++n) out.coeff_mut(n) = s.coeff(n).reflected();
  return out;
}

std::vector<BigInt> qs_at_z_one(const QSeries& s) {
  std::vector<BigInt> out;
  out.reserve(s.order() + 1);
  for (const auto& c : s.coeffs()) out.push_back(c.at_one());
  return out;
}

QSeries poch_product(const PochSpec& spec, std::size_t order) {
  if (spec.b < 1 || spec.d < 1) throw std::invalid_argument("poch_product: need b >= 1 and d >= 1");
  QSeries out = QSeries::one(order);
  for (std::size_t k = 0;; ++k) {
    if (spec.count && k >= *spec.count) break;
    const std::size_t q_exp = spec.b + k * spec.d;
    if (q_exp > order) break;
    out.mul_factor(spec.c, spec.e, q_exp);
  }
  return out;
}

}  // namespace ocrank
