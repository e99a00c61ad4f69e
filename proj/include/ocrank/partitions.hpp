#pragma once

// Partition classes, overpartitions and the crank/rank statistics on them.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ocrank/qseries.hpp"

namespace ocrank {

// Non-increasing sequence of positive integers.  The empty partition is the
// unique partition of 0.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument if parts are not positive and non-increasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int sum() const { return sum_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  bool contains(int part) const;
  std::size_t multiplicity(int part) const;
  bool has_distinct_parts() const;

  std::string to_string() const;  // "3+1+1"; empty renders as "0"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

enum class PartitionClass { unrestricted, distinct, odd, even, distinct_odd, no_repeated_odd };

bool belongs_to(const Partition& p, PartitionClass cls);

// Visits every partition of n in cls once, in descending lexicographic order.
void for_each_partition(int n, PartitionClass cls, const std::function<void(const Partition&)>& visit);
std::vector<Partition> gen_partitions(int n, PartitionClass cls);

// (overlined parts, plain parts).  The overlined parts are distinct.
struct Overpartition {
  Partition overlined;
  Partition plain;

  int sum() const { return overlined.sum() + plain.sum(); }
  // Merged listing with overlined parts marked by a trailing combining
  // overline, e.g. "2̄+1".
  std::string to_string() const;

  friend bool operator==(const Overpartition&, const Overpartition&) = default;
};

// Plain parts split by parity.
struct OverTriple {
  Partition overlined;
  Partition plain_even;
  Partition plain_odd;

  friend bool operator==(const OverTriple&, const OverTriple&) = default;
};

// A partition without repeated odd parts, as (distinct odd parts, even parts).
struct NoRepOddPair {
  Partition odd_distinct;
  Partition even;

  static NoRepOddPair split(const Partition& p);  // throws if an odd part repeats
  Partition merged() const;
  int sum() const { return odd_distinct.sum() + even.sum(); }
};

// Overpartitions of n.  Underlying partitions come in descending
// lexicographic order; for each, the overline choices run through a binary
// counter whose lowest bit is the largest distinct part value.  This is the
// row order of the tables in the reference material.
void for_each_overpartition(int n, const std::function<void(const Overpartition&)>& visit);
std::vector<Overpartition> gen_overpartitions(int n);

OverTriple to_triple(const Overpartition& op);
Overpartition from_triple(const OverTriple& t);

Partition merge(const Partition& a, const Partition& b);
// Halves every part; throws if any part is odd.
Partition halved(const Partition& p);

int crank(const Partition& p);
int rank(const Partition& p);
int lambda_stat(const Partition& p);
int kappa_stat(const Partition& p);
int theta_stat(const Partition& p);
int crank1(const Overpartition& op);
int crank2(const Overpartition& op);
int m2crank(const NoRepOddPair& pr);
int m2rank(const NoRepOddPair& pr);
int rank_over(const Overpartition& op);

enum class Statistic { crank, rank, crank1, crank2, m2crank, m2rank, rank_over };

std::string_view statistic_name(Statistic stat);
// Throws std::invalid_argument for unknown names.
Statistic parse_statistic(std::string_view name);
std::span<const Statistic> all_statistics();

// Size of the class that stat is defined on, per n: p(n), overpartitions,
// or partitions without repeated odd parts.
enum class ObjectFamily { partitions, overpartitions, no_repeated_odd };
ObjectFamily family_of(Statistic stat);

struct CountTable {
  int n = 0;
  std::string statistic;
  std::map<int, BigInt> counts;

  BigInt total() const;
  BigInt at(int m) const;
  LaurentPoly to_laurent() const;
};

// Tallies stat over its object family at size n.  The single object of size
// 0 gets value 0.
CountTable count_statistic(int n, Statistic stat);
// Residues 0..modulus-1 all present as keys.
CountTable count_residue(int n, Statistic stat, int modulus);
CountTable reduce_mod(const CountTable& table, int modulus);
// The adjusted first-crank tally: crank of the plain parts, with the plain
// partition {1} spread as -1 at 0 and +1 at +-1, and no plain parts read as 0.
CountTable blo_modified_count(int n);

}  // namespace ocrank
