#include "ocrank/identities.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

#include "ocrank/genfun.hpp"

namespace ocrank {

std::string VerificationReport::to_json() const {
  std::string s = "{\"id\":\"" + id + "\",\"order\":" + std::to_string(order) +
                  ",\"holds\":" + (holds ? "true" : "false");
  if (first_mismatch) {
    s += ",\"first_mismatch\":{\"n\":" + std::to_string(first_mismatch->n) +
         ",\"lhs\":" + first_mismatch->lhs.to_json_pairs() + ",\"rhs\":" + first_mismatch->rhs.to_json_pairs() + "}";
  }
  return s + "}";
}

QSeries diff_series(Statistic stat, int modulus, const std::map<int, long>& weights, Progression progression,
                    std::size_t order) {
  if (progression.modulus < 1 || progression.residue < 0 || progression.residue >= progression.modulus) {
    throw std::invalid_argument("diff_series: need r >= 1 and 0 <= j < r");
  }
  QSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    const int size = progression.modulus * static_cast<int>(n) + progression.residue;
    const CountTable table = count_residue(size, stat, modulus);
    BigInt acc = 0;
    for (const auto& [a, w] : weights) acc += BigInt(w) * table.at(a);
    out.coeff_mut(n) = LaurentPoly::monomial(acc, 0);
  }
  return out;
}

QSeries tally_series(const TallySource& source, std::size_t order) {
  QSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    const int size = static_cast<int>(n);
    const CountTable table = std::holds_alternative<BloAdjusted>(source)
                                 ? blo_modified_count(size)
                                 : count_statistic(size, std::get<Statistic>(source));
    out.coeff_mut(n) = table.to_laurent();
  }
  return out;
}

namespace {

IdentitySpec statistic_identity(std::string id, std::string statement, TallySource source, std::string builder,
                                std::size_t order) {
  IdentitySpec spec;
  spec.id = std::move(id);
  spec.statement = std::move(statement);
  spec.kind = IdentityKind::statistic_series;
  spec.source = source;
  spec.rhs_terms = {SeriesTerm{1, std::move(builder), false}};
  spec.default_order = order;
  return spec;
}

IdentitySpec residue_identity(std::string id, std::string statement, std::vector<ResidueTerm> lhs,
                              Progression progression, std::size_t shift, std::vector<SeriesTerm> rhs,
                              long rhs_constant, std::size_t order) {
  IdentitySpec spec;
  spec.id = std::move(id);
  spec.statement = std::move(statement);
  spec.kind = IdentityKind::residue_difference;
  spec.lhs_terms = std::move(lhs);
  spec.progression = progression;
  spec.lhs_q_shift = shift;
  spec.rhs_terms = std::move(rhs);
  spec.rhs_constant = rhs_constant;
  spec.default_order = order;
  return spec;
}

std::vector<IdentitySpec> build_registry() {
  using S = Statistic;
  std::vector<IdentitySpec> specs;

  specs.push_back(statistic_identity("thm-M1", "#{overpartitions of n with crank1 = m} = [z^m q^n] Cbar",
                                     S::crank1, "Cbar", 30));
  specs.push_back(statistic_identity("thm-M2", "#{overpartitions of n with crank2 = m} = [z^m q^n] Cbar2",
                                     S::crank2, "Cbar2", 30));
  {
    IdentitySpec spec = statistic_identity(
        "thm-M2crank", "(z-1)q^2 + sum #{no-repeated-odd partitions of n with M2crank = m} z^m q^n = M2", S::m2crank,
        "M2", 30);
    spec.lhs_corrections = {{2, LaurentPoly{{1, 1}, {0, -1}}}};
    specs.push_back(std::move(spec));
  }
  specs.push_back(statistic_identity("blo-equivalence", "adjusted plain-part crank tally of overpartitions = Cbar",
                                     BloAdjusted{}, "Cbar", 20));

  specs.push_back(residue_identity(
      "fifth-order-chi0", "sum 3(N(1,5,5n)-N(2,5,5n))q^n - sum (M(0,5,5n)-M(1,5,5n))q^n = chi0(q) - 2",
      {{S::rank, 5, {{1, 3}, {2, -3}}}, {S::crank, 5, {{0, -1}, {1, 1}}}}, {5, 0}, 0, {{1, "chi0", false}}, -2, 10));
  specs.push_back(residue_identity("tenth-phi", "sum (Nbar(0,5,5n+1)-Nbar(2,5,5n+1))q^n = 2 phi(q)",
                                   {{S::rank_over, 5, {{0, 1}, {2, -1}}}}, {5, 1}, 0, {{2, "phi", false}}, 0, 8));
  specs.push_back(residue_identity(
      "tenth-psi", "sum (Nbar(0,5,5n+4)+Nbar(1,5,5n+4)-2Nbar(2,5,5n+4))q^{n+1} = 2 psi(q)",
      {{S::rank_over, 5, {{0, 1}, {1, 1}, {2, -2}}}}, {5, 4}, 1, {{2, "psi", false}}, 0, 8));
  specs.push_back(residue_identity(
      "crankdiff-3phi", "sum (Nbar(0,5,5n+1)-Nbar(1,5,5n+1))q^n - sum (Mbar(0,5,5n+1)-Mbar(1,5,5n+1))q^n = 3 phi(q)",
      {{S::rank_over, 5, {{0, 1}, {1, -1}}}, {S::crank1, 5, {{0, -1}, {1, 1}}}}, {5, 1}, 0, {{3, "phi", false}}, 0,
      8));
  specs.push_back(residue_identity(
      "crankdiff-3psi",
      "sum (Nbar(1,5,5n+4)-Nbar(2,5,5n+4))q^n - sum (Mbar(0,5,5n+4)-Mbar(2,5,5n+4))q^n = 3 q^-1 psi(q)",
      {{S::rank_over, 5, {{1, 1}, {2, -1}}}, {S::crank1, 5, {{0, -1}, {2, 1}}}}, {5, 4}, 1, {{3, "psi", false}}, 0,
      8));
  specs.push_back(residue_identity("m2rank-X", "sum (N2(0,5,5n)-N2(2,5,5n))q^n = X(-q)",
                                   {{S::m2rank, 5, {{0, 1}, {2, -1}}}}, {5, 0}, 0, {{1, "X", true}}, 0, 10));
  specs.push_back(residue_identity("m2rank-chi", "sum (N2(1,5,5n+4)-N2(2,5,5n+4))q^n = q^-1 chi(-q)",
                                   {{S::m2rank, 5, {{1, 1}, {2, -1}}}}, {5, 4}, 1, {{1, "chi", true}}, 0, 9));
  specs.push_back(residue_identity(
      "m2-combo-X", "2 sum (N2(0,5,5n)-N2(1,5,5n))q^n + sum (M2(0,5,5n)-M2(1,5,5n))q^n = 3 X(-q)",
      {{S::m2rank, 5, {{0, 2}, {1, -2}}}, {S::m2crank, 5, {{0, 1}, {1, -1}}}}, {5, 0}, 0, {{3, "X", true}}, 0, 10));
  specs.push_back(residue_identity(
      "m2-combo-chi", "2 sum (N2(0,5,5n+4)-N2(1,5,5n+4))q^n - sum (M2(0,5,5n+4)-M2(1,5,5n+4))q^n = q^-1 chi(-q)",
      {{S::m2rank, 5, {{0, 2}, {1, -2}}}, {S::m2crank, 5, {{0, -1}, {1, 1}}}}, {5, 4}, 1, {{1, "chi", true}}, 0,
      9));
  return specs;
}

}  // namespace

const std::vector<IdentitySpec>& registry() {
  static const std::vector<IdentitySpec> specs = build_registry();
  return specs;
}

const IdentitySpec& find_identity(std::string_view id) {
  for (const auto& spec : registry()) {
    if (spec.id == id) return spec;
  }
  throw std::invalid_argument("unknown identity '" + std::string(id) + "'");
}

QSeries evaluate_lhs(const IdentitySpec& spec, std::size_t order) {
  if (spec.kind == IdentityKind::statistic_series) {
    QSeries lhs = tally_series(spec.source, order);
    for (const auto& [n, poly] : spec.lhs_corrections) {
      if (n <= order) lhs.coeff_mut(n) += poly;
    }
    return lhs;
  }
  QSeries lhs(order);
  for (const auto& term : spec.lhs_terms) {
    lhs += diff_series(term.stat, term.modulus, term.weights, spec.progression, order);
  }
  return spec.lhs_q_shift == 0 ? lhs : qs_shift_up(lhs, spec.lhs_q_shift);
}

QSeries evaluate_rhs(const IdentitySpec& spec, std::size_t order) {
  QSeries rhs(order);
  for (const auto& term : spec.rhs_terms) {
    QSeries s = series_by_name(term.builder, order);
    if (term.negate_q) s = qs_subst_neg_q(s);
    rhs += s * BigInt(term.scale);
  }
  rhs.coeff_mut(0) += LaurentPoly(spec.rhs_constant);
  return rhs;
}

VerificationReport compare_series(std::string id, const QSeries& lhs, const QSeries& rhs) {
  if (lhs.order() != rhs.order()) throw std::invalid_argument("compare_series: order mismatch");
  VerificationReport report{std::move(id), lhs.order(), true, std::nullopt};
  for (std::size_t n = 0; n <= lhs.order(); ++n) {
    if (lhs.coeff(n) != rhs.coeff(n)) {
      report.holds = false;
      report.first_mismatch = Mismatch{n, lhs.coeff(n), rhs.coeff(n)};
      break;
    }
  }
  return report;
}

VerificationReport verify(const IdentitySpec& spec, std::size_t order) {
  return compare_series(spec.id, evaluate_lhs(spec, order), evaluate_rhs(spec, order));
}

VerificationReport verify(std::string_view id, std::size_t order) { return verify(find_identity(id), order); }

VerificationReport verify(std::string_view id) {
  const IdentitySpec& spec = find_identity(id);
  return verify(spec, spec.default_order);
}

std::vector<VerificationReport> verify_many(const std::vector<std::string>& ids, std::optional<std::size_t> order,
                                            unsigned jobs) {
  std::vector<const IdentitySpec*> specs;
  specs.reserve(ids.size());
  for (const auto& id : ids) specs.push_back(&find_identity(id));

  std::vector<VerificationReport> reports(specs.size());
  std::vector<std::exception_ptr> errors(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        reports[i] = verify(*specs[i], order.value_or(specs[i]->default_order));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const unsigned threads = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(specs.size(), 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

}  // namespace ocrank
