#pragma once

// Generating functions and mock theta series as truncated q-series.

#include <cstddef>
#include <span>
#include <string_view>

#include "ocrank/qseries.hpp"

namespace ocrank {

// (q;q)_inf / ((zq;q)_inf (z^-1 q;q)_inf)
QSeries series_C(std::size_t order);
// (q^2;q^2)_inf / ((zq;q)_inf (z^-1 q;q)_inf)
QSeries series_Cbar(std::size_t order);
// (-q;q)_inf (q^2;q^2)_inf / ((q;q^2)_inf (zq^2;q^2)_inf (z^-1 q^2;q^2)_inf)
QSeries series_Cbar2(std::size_t order);
// (q^2;q^2)_inf (-q;q^2)_inf / ((zq^2;q^2)_inf (z^-1 q^2;q^2)_inf), with the
// (z - 1) q^2 term left in.
QSeries series_M2(std::size_t order);
// sum_n q^{n^2} (-q;q^2)_n / ((zq^2;q^2)_n (z^-1 q^2;q^2)_n)
QSeries series_N2(std::size_t order);

enum class MockTheta { chi0, phi, psi, X, chi };

std::string_view mock_theta_name(MockTheta f);
MockTheta parse_mock_theta(std::string_view name);  // throws std::invalid_argument
QSeries series_mock(MockTheta f, std::size_t order);
QSeries series_mock(std::string_view name, std::size_t order);

// Any builder by name: C, Cbar, Cbar2, M2, N2, chi0, phi, psi, X, chi.
QSeries series_by_name(std::string_view name, std::size_t order);
std::span<const std::string_view> builder_names();

}  // namespace ocrank
