#pragma once

// Identity registry and verifier.  Every identity has an enumeration-side
// left-hand side (count tables over partitions, overpartitions, or
// partitions without repeated odd parts) and a series-side right-hand side
// (product and Eulerian builders), so each check cross-validates the two
// engines.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ocrank/partitions.hpp"
#include "ocrank/qseries.hpp"

namespace ocrank {

// Sizes r*n + j for n = 0, 1, 2, ...
struct Progression {
  int modulus = 1;
  int residue = 0;
};

// sum_a weights[a] * #{objects of size r*n+j with stat = a mod modulus}
struct ResidueTerm {
  Statistic stat;
  int modulus;
  std::map<int, long> weights;
};

// The adjusted first-crank tally, see blo_modified_count.
struct BloAdjusted {};
using TallySource = std::variant<Statistic, BloAdjusted>;

// scale * builder(q), or scale * builder(-q) when negate_q is set.
struct SeriesTerm {
  long scale = 1;
  std::string builder;
  bool negate_q = false;
};

enum class IdentityKind {
  // Full two-variable comparison: tallies at every n against a builder.
  statistic_series,
  // Single-variable residue-class difference series along a progression.
  residue_difference,
};

struct IdentitySpec {
  std::string id;
  std::string statement;
  IdentityKind kind = IdentityKind::residue_difference;

  // statistic_series
  TallySource source = Statistic::crank;
  // Added to the tally side at the given power of q before comparing.
  std::vector<std::pair<std::size_t, LaurentPoly>> lhs_corrections;

  // residue_difference
  std::vector<ResidueTerm> lhs_terms;
  Progression progression;
  // The tally side is multiplied by q^lhs_q_shift; this is how a q^{-1} on
  // the series side is normalised away.
  std::size_t lhs_q_shift = 0;

  std::vector<SeriesTerm> rhs_terms;
  long rhs_constant = 0;

  std::size_t default_order = 8;
};

struct Mismatch {
  std::size_t n;
  LaurentPoly lhs;
  LaurentPoly rhs;
};

struct VerificationReport {
  std::string id;
  std::size_t order = 0;
  bool holds = true;
  std::optional<Mismatch> first_mismatch;

  std::string to_json() const;
};

QSeries diff_series(Statistic stat, int modulus, const std::map<int, long>& weights, Progression progression,
                    std::size_t order);
// Two-variable series whose q^n coefficient is the tally of source at n.
QSeries tally_series(const TallySource& source, std::size_t order);

const std::vector<IdentitySpec>& registry();
// Throws std::invalid_argument for unknown ids.
const IdentitySpec& find_identity(std::string_view id);

QSeries evaluate_lhs(const IdentitySpec& spec, std::size_t order);
QSeries evaluate_rhs(const IdentitySpec& spec, std::size_t order);
VerificationReport compare_series(std::string id, const QSeries& lhs, const QSeries& rhs);

VerificationReport verify(const IdentitySpec& spec, std::size_t order);
VerificationReport verify(std::string_view id, std::size_t order);
VerificationReport verify(std::string_view id);  // at the spec's default order

// Reports come back in the order of ids regardless of jobs.  A missing
// order means each identity's default order.
std::vector<VerificationReport> verify_many(const std::vector<std::string>& ids, std::optional<std::size_t> order,
                                            unsigned jobs);

}  // namespace ocrank
