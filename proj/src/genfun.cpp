#include "ocrank/genfun.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace ocrank {

namespace {

PochSpec infinite(long c, int e, std::size_t b, std::size_t d) { return PochSpec{c, e, b, d, std::nullopt}; }
PochSpec finite(long c, int e, std::size_t b, std::size_t d, std::size_t count) { return PochSpec{c, e, b, d, count}; }

QSeries reciprocal(const PochSpec& spec, std::size_t order) { return qs_invert(poch_product(spec, order)); }

// sum over k of sign(k) q^{exp(k)} * numerator(k) / denominator(k); stops
// once exp(k) exceeds the order (exp must be increasing in k).
template <typename Exp, typename Sign, typename Term>
QSeries eulerian_sum(std::size_t order, Exp exponent, Sign sign, Term quotient) {
  QSeries sum(order);
  for (std::size_t k = 0;; ++k) {
    const std::size_t e = exponent(k);
    if (e > order) break;
    QSeries term = QSeries::monomial(order, e, LaurentPoly(sign(k))) * quotient(k);
    sum += term;
  }
  return sum;
}

long alternating(std::size_t k) { return k % 2 == 0 ? 1 : -1; }
long positive(std::size_t) { return 1; }

constexpr std::array<std::string_view, 10> kBuilders{"C", "Cbar", "Cbar2", "M2", "N2", "chi0", "phi", "psi", "X", "chi"};

}  // namespace

QSeries series_C(std::size_t order) {
  return poch_product(infinite(1, 0, 1, 1), order) * reciprocal(infinite(1, 1, 1, 1), order) *
         reciprocal(infinite(1, -1, 1, 1), order);
}

QSeries series_Cbar(std::size_t order) {
  return poch_product(infinite(1, 0, 2, 2), order) * reciprocal(infinite(1, 1, 1, 1), order) *
         reciprocal(infinite(1, -1, 1, 1), order);
}

QSeries series_Cbar2(std::size_t order) {
  QSeries numerator = poch_product(infinite(-1, 0, 1, 1), order) * poch_product(infinite(1, 0, 2, 2), order);
  QSeries denominator = poch_product(infinite(1, 0, 1, 2), order) * poch_product(infinite(1, 1, 2, 2), order) *
                        poch_product(infinite(1, -1, 2, 2), order);
  return numerator * qs_invert(denominator);
}

QSeries series_M2(std::size_t order) {
  QSeries numerator = poch_product(infinite(1, 0, 2, 2), order) * poch_product(infinite(-1, 0, 1, 2), order);
  QSeries denominator = poch_product(infinite(1, 1, 2, 2), order) * poch_product(infinite(1, -1, 2, 2), order);
  return numerator * qs_invert(denominator);
}

QSeries series_N2(std::size_t order) {
  return eulerian_sum(
      order, [](std::size_t k) { return k * k; }, positive,
      [order](std::size_t k) {
        QSeries denominator =
            poch_product(finite(1, 1, 2, 2, k), order) * poch_product(finite(1, -1, 2, 2, k), order);
        return poch_product(finite(-1, 0, 1, 2, k), order) * qs_invert(denominator);
      });
}

std::string_view mock_theta_name(MockTheta f) {
  switch (f) {
    case MockTheta::chi0: return "chi0";
    case MockTheta::phi: return "phi";
    case MockTheta::psi: return "psi";
    case MockTheta::X: return "X";
    case MockTheta::chi: return "chi";
  }
  throw std::logic_error("unhandled mock theta function");
}

MockTheta parse_mock_theta(std::string_view name) {
  for (MockTheta f : {MockTheta::chi0, MockTheta::phi, MockTheta::psi, MockTheta::X, MockTheta::chi}) {
    if (mock_theta_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown mock theta function '" + std::string(name) + "'");
}

QSeries series_mock(MockTheta f, std::size_t order) {
  switch (f) {
    case MockTheta::chi0:
      // sum q^n / (q^{n+1};q)_n
      return eulerian_sum(
          order, [](std::size_t k) { return k; }, positive,
          [order](std::size_t k) { return reciprocal(finite(1, 0, k + 1, 1, k), order); });
    case MockTheta::phi:
      // sum q^{(n+1)n/2} / (q;q^2)_{n+1}
      return eulerian_sum(
          order, [](std::size_t k) { return k * (k + 1) / 2; }, positive,
          [order](std::size_t k) { return reciprocal(finite(1, 0, 1, 2, k + 1), order); });
    case MockTheta::psi:
      // sum q^{(n+2)(n+1)/2} / (q;q^2)_{n+1}
      return eulerian_sum(
          order, [](std::size_t k) { return (k + 1) * (k + 2) / 2; }, positive,
          [order](std::size_t k) { return reciprocal(finite(1, 0, 1, 2, k + 1), order); });
    case MockTheta::X:
      // sum (-1)^n q^{n^2} / (-q;q)_{2n}
      return eulerian_sum(
          order, [](std::size_t k) { return k * k; }, alternating,
          [order](std::size_t k) { return reciprocal(finite(-1, 0, 1, 1, 2 * k), order); });
    case MockTheta::chi:
      // sum (-1)^n q^{(n+1)^2} / (-q;q)_{2n+1}
      return eulerian_sum(
          order, [](std::size_t k) { return (k + 1) * (k + 1); }, alternating,
          [order](std::size_t k) { return reciprocal(finite(-1, 0, 1, 1, 2 * k + 1), order); });
  }
  throw std::logic_error("unhandled mock theta function");
}

QSeries series_mock(std::string_view name, std::size_t order) { return series_mock(parse_mock_theta(name), order); }

QSeries series_by_name(std::string_view name, std::size_t order) {
  if (name == "C") return series_C(order);
  if (name == "Cbar") return series_Cbar(order);
  if (name == "Cbar2") return series_Cbar2(order);
  if (name == "M2") return series_M2(order);
  if (name == "N2") return series_N2(order);
  for (MockTheta f : {MockTheta::chi0, MockTheta::phi, MockTheta::psi, MockTheta::X, MockTheta::chi}) {
    if (mock_theta_name(f) == name) return series_mock(f, order);
  }
  throw std::invalid_argument("unknown series '" + std::string(name) + "'");
}

std::span<const std::string_view> builder_names() { return kBuilders; }

}  // namespace ocrank
