#include "ocrank/partitions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ocrank {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
    sum_ += parts_[i];
  }
}

bool Partition::contains(int part) const {
  return std::binary_search(parts_.begin(), parts_.end(), part, std::greater<>());
}

std::size_t Partition::multiplicity(int part) const {
  auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), part, std::greater<>());
  return static_cast<std::size_t>(hi - lo);
}

bool Partition::has_distinct_parts() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += "+";
    s += std::to_string(parts_[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Classes and enumeration

namespace {

bool part_allowed(int k, PartitionClass cls) {
  switch (cls) {
    case PartitionClass::odd:
    case PartitionClass::distinct_odd:
      return k % 2 == 1;
    case PartitionClass::even:
      return k % 2 == 0;
    default:
      return true;
  }
}

bool part_repeatable(int k, PartitionClass cls) {
  switch (cls) {
    case PartitionClass::distinct:
    case PartitionClass::distinct_odd:
      return false;
    case PartitionClass::no_repeated_odd:
      return k % 2 == 0;
    default:
      return true;
  }
}

class PartitionWalker {
 public:
  PartitionWalker(PartitionClass cls, const std::function<void(const Partition&)>& visit)
      : cls_(cls), visit_(visit) {}

  void run(int n) {
    parts_.clear();
    descend(n, n, false);
  }

 private:
  // Next part is at most max_part; if equal_blocked, it must be < max_part.
  void descend(int remaining, int max_part, bool equal_blocked) {
    if (remaining == 0) {
      visit_(Partition(parts_));
      return;
    }
    int top = std::min(remaining, equal_blocked ? max_part - 1 : max_part);
    for (int k = top; k >= 1; --k) {
      if (!part_allowed(k, cls_)) continue;
      parts_.push_back(k);
      descend(remaining - k, k, !part_repeatable(k, cls_));
      parts_.pop_back();
    }
  }

  PartitionClass cls_;
  const std::function<void(const Partition&)>& visit_;
  std::vector<int> parts_;
};

}  // namespace

bool belongs_to(const Partition& p, PartitionClass cls) {
  for (std::size_t i = 0; i < p.length(); ++i) {
    int k = p.parts()[i];
    if (!part_allowed(k, cls)) return false;
    if (i > 0 && p.parts()[i - 1] == k && !part_repeatable(k, cls)) return false;
  }
  return true;
}

void for_each_partition(int n, PartitionClass cls, const std::function<void(const Partition&)>& visit) {
  if (n < 0) throw std::invalid_argument("partition size must be nonnegative");
  PartitionWalker(cls, visit).run(n);
}

std::vector<Partition> gen_partitions(int n, PartitionClass cls) {
  std::vector<Partition> out;
  for_each_partition(n, cls, [&](const Partition& p) { out.push_back(p); });
  return out;
}

// ---------------------------------------------------------------------------
// Overpartitions

std::string Overpartition::to_string() const {
  // Overlined copy of a value comes before its plain copies.
  std::vector<std::pair<int, bool>> shown;
  for (int k : overlined.parts()) shown.emplace_back(k, true);
  for (int k : plain.parts()) shown.emplace_back(k, false);
  std::stable_sort(shown.begin(), shown.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second && !b.second;
  });
  if (shown.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < shown.size(); ++i) {
    if (i > 0) s += "+";
    for (char digit : std::to_string(shown[i].first)) {
      s += digit;
      if (shown[i].second) s += "\u0305";
    }
  }
  return s;
}

void for_each_overpartition(int n, const std::function<void(const Overpartition&)>& visit) {
  std::vector<int> values;
  std::vector<int> over_parts;
  std::vector<int> plain_parts;
  for_each_partition(n, PartitionClass::unrestricted, [&](const Partition& p) {
    values.assign(p.parts().begin(), p.parts().end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const std::size_t masks = std::size_t{1} << values.size();
    for (std::size_t mask = 0; mask < masks; ++mask) {
      over_parts.clear();
      plain_parts.clear();
      std::size_t vi = 0;
      int prev = 0;
      for (int k : p.parts()) {
        bool first_copy = k != prev;
        if (first_copy && prev != 0) ++vi;
        prev = k;
        if (first_copy && (mask >> vi & 1U)) {
          over_parts.push_back(k);
        } else {
          plain_parts.push_back(k);
        }
      }
      visit(Overpartition{Partition(over_parts), Partition(plain_parts)});
    }
  });
}

std::vector<Overpartition> gen_overpartitions(int n) {
  std::vector<Overpartition> out;
  for_each_overpartition(n, [&](const Overpartition& op) { out.push_back(op); });
  return out;
}

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.length() + b.length());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(), std::back_inserter(parts),
             std::greater<>());
  return Partition(std::move(parts));
}

Partition halved(const Partition& p) {
  std::vector<int> parts;
  parts.reserve(p.length());
  for (int k : p.parts()) {
    if (k % 2 != 0) throw std::invalid_argument("halved: partition has an odd part");
    parts.push_back(k / 2);
  }
  return Partition(std::move(parts));
}

OverTriple to_triple(const Overpartition& op) {
  std::vector<int> even;
  std::vector<int> odd;
  for (int k : op.plain.parts()) (k % 2 == 0 ? even : odd).push_back(k);
  return OverTriple{op.overlined, Partition(std::move(even)), Partition(std::move(odd))};
}

Overpartition from_triple(const OverTriple& t) {
  return Overpartition{t.overlined, merge(t.plain_even, t.plain_odd)};
}

NoRepOddPair NoRepOddPair::split(const Partition& p) {
  if (!belongs_to(p, PartitionClass::no_repeated_odd)) {
    throw std::invalid_argument("partition " + p.to_string() + " repeats an odd part");
  }
  std::vector<int> odd;
  std::vector<int> even;
  for (int k : p.parts()) (k % 2 == 0 ? even : odd).push_back(k);
  return NoRepOddPair{Partition(std::move(odd)), Partition(std::move(even))};
}

Partition NoRepOddPair::merged() const { return merge(odd_distinct, even); }

// ---------------------------------------------------------------------------
// Statistics

int crank(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("crank of the empty partition is undefined");
  const auto ones = static_cast<int>(p.multiplicity(1));
  if (ones == 0) return p.largest();
  const auto larger = std::count_if(p.parts().begin(), p.parts().end(), [ones](int k) { return k > ones; });
  return static_cast<int>(larger) - ones;
}

int rank(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("rank of the empty partition is undefined");
  return p.largest() - static_cast<int>(p.length());
}

int lambda_stat(const Partition& p) {
  if (!p.has_distinct_parts()) throw std::invalid_argument("lambda needs distinct parts");
  if (p.empty()) return 0;
  return p.contains(p.largest() - 1) ? 0 : 1;
}

int kappa_stat(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("kappa of the empty partition is undefined");
  if (!p.has_distinct_parts()) throw std::invalid_argument("kappa needs distinct parts");
  const int l = p.largest();
  if (l >= 4) return (p.contains(l - 1) || p.contains(l - 2)) ? 0 : 1;
  if (l >= 2) return p.length() == 1 ? 1 : 0;
  return 0;
}

int theta_stat(const Partition& p) {
  if (!belongs_to(p, PartitionClass::distinct_odd)) {
    throw std::invalid_argument("theta needs distinct odd parts");
  }
  if (p.empty()) return 0;
  const int l = p.largest();
  if (l >= 5) return p.contains(l - 2) ? 0 : 1;
  return p.contains(1) ? 0 : 1;
}

int crank1(const Overpartition& op) {
  return op.plain.empty() ? lambda_stat(op.overlined) : crank(op.plain);
}

int crank2(const Overpartition& op) {
  const OverTriple t = to_triple(op);
  if (!t.plain_even.empty()) return crank(halved(t.plain_even));
  if (!t.overlined.empty()) return kappa_stat(t.overlined);
  return 0;
}

int m2crank(const NoRepOddPair& pr) {
  return pr.even.empty() ? theta_stat(pr.odd_distinct) : crank(halved(pr.even));
}

int m2rank(const NoRepOddPair& pr) {
  const Partition p = pr.merged();
  if (p.empty()) throw std::invalid_argument("M2-rank of the empty partition is undefined");
  return (p.largest() + 1) / 2 - static_cast<int>(p.length());
}

int rank_over(const Overpartition& op) {
  if (op.sum() == 0) throw std::invalid_argument("rank of the empty overpartition is undefined");
  const int largest = std::max(op.overlined.largest(), op.plain.largest());
  return largest - static_cast<int>(op.overlined.length() + op.plain.length());
}

namespace {

constexpr std::array kStatistics{Statistic::crank,  Statistic::rank,   Statistic::crank1,   Statistic::crank2,
                                 Statistic::m2crank, Statistic::m2rank, Statistic::rank_over};

}  // namespace

std::string_view statistic_name(Statistic stat) {
  switch (stat) {
    case Statistic::crank: return "crank";
    case Statistic::rank: return "rank";
    case Statistic::crank1: return "crank1";
    case Statistic::crank2: return "crank2";
    case Statistic::m2crank: return "m2crank";
    case Statistic::m2rank: return "m2rank";
    case Statistic::rank_over: return "rank_over";
  }
  throw std::logic_error("unhandled statistic");
}

Statistic parse_statistic(std::string_view name) {
  for (Statistic s : kStatistics) {
    if (statistic_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
}

std::span<const Statistic> all_statistics() { return kStatistics; }

ObjectFamily family_of(Statistic stat) {
  switch (stat) {
    case Statistic::crank:
    case Statistic::rank:
      return ObjectFamily::partitions;
    case Statistic::crank1:
    case Statistic::crank2:
    case Statistic::rank_over:
      return ObjectFamily::overpartitions;
    case Statistic::m2crank:
    case Statistic::m2rank:
      return ObjectFamily::no_repeated_odd;
  }
  throw std::logic_error("unhandled statistic");
}

// ---------------------------------------------------------------------------
// Count tables

BigInt CountTable::total() const {
  BigInt sum = 0;
  for (const auto& [m, c] : counts) sum += c;
  return sum;
}

BigInt CountTable::at(int m) const {
  auto it = counts.find(m);
  return it == counts.end() ? BigInt(0) : it->second;
}

LaurentPoly CountTable::to_laurent() const {
  LaurentPoly p;
  for (const auto& [m, c] : counts) p.add_term(m, c);
  return p;
}

namespace {

CountTable from_tally(int n, std::string_view name, const std::map<int, std::int64_t>& tally) {
  CountTable table{n, std::string(name), {}};
  for (const auto& [m, c] : tally) table.counts.emplace(m, BigInt(static_cast<long>(c)));
  return table;
}

int evaluate(Statistic stat, const Partition& p) {
  return stat == Statistic::crank ? crank(p) : rank(p);
}

int evaluate(Statistic stat, const Overpartition& op) {
  switch (stat) {
    case Statistic::crank1: return crank1(op);
    case Statistic::crank2: return crank2(op);
    default: return rank_over(op);
  }
}

int evaluate(Statistic stat, const NoRepOddPair& pr) {
  return stat == Statistic::m2crank ? m2crank(pr) : m2rank(pr);
}

}  // namespace

CountTable count_statistic(int n, Statistic stat) {
  if (n < 0) throw std::invalid_argument("count_statistic: n must be nonnegative");
  std::map<int, std::int64_t> tally;
  if (n == 0) {
    tally[0] = 1;
    return from_tally(n, statistic_name(stat), tally);
  }
  switch (family_of(stat)) {
    case ObjectFamily::partitions:
      for_each_partition(n, PartitionClass::unrestricted, [&](const Partition& p) { ++tally[evaluate(stat, p)]; });
      break;
    case ObjectFamily::overpartitions:
      for_each_overpartition(n, [&](const Overpartition& op) { ++tally[evaluate(stat, op)]; });
      break;
    case ObjectFamily::no_repeated_odd:
      for_each_partition(n, PartitionClass::no_repeated_odd,
                         [&](const Partition& p) { ++tally[evaluate(stat, NoRepOddPair::split(p))]; });
      break;
  }
  return from_tally(n, statistic_name(stat), tally);
}

CountTable reduce_mod(const CountTable& table, int modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be at least 1");
  CountTable out{table.n, table.statistic + " mod " + std::to_string(modulus), {}};
  for (int a = 0; a < modulus; ++a) out.counts[a] = 0;
  for (const auto& [m, c] : table.counts) out.counts[((m % modulus) + modulus) % modulus] += c;
  return out;
}

CountTable count_residue(int n, Statistic stat, int modulus) {
  return reduce_mod(count_statistic(n, stat), modulus);
}

CountTable blo_modified_count(int n) {
  if (n < 0) throw std::invalid_argument("blo_modified_count: n must be nonnegative");
  const Partition single_one({1});
  std::map<int, std::int64_t> tally;
  for_each_overpartition(n, [&](const Overpartition& op) {
    if (op.plain == single_one) {
      tally[0] -= 1;
      tally[-1] += 1;
      tally[1] += 1;
    } else if (op.plain.empty()) {
      tally[0] += 1;
    } else {
      tally[crank(op.plain)] += 1;
    }
  });
  return from_tally(n, "blo", tally);
}

}  // namespace ocrank
