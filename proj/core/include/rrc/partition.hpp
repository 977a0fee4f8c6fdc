#pragma once

// Partition-theoretic ground truth: Rogers-Ramanujan subpartitions, R_l(m),
// A_1(m), p(m), a(m), and the congruence checker.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrc/qseries.hpp"

namespace rrc {

class BoundExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Largest m accepted by the brute-force enumerator (p(60) = 966467).
inline constexpr std::int64_t kBruteForceBound = 60;

/// A partition stored as a nonincreasing sequence of positive parts.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::int64_t size() const;  // the partitioned integer

 private:
  std::vector<int> parts_;
};

/// Length of the Rogers-Ramanujan subpartition: the longest prefix whose
/// parts differ pairwise by at least 2 and whose last part exceeds the next
/// part (or 0 when the prefix is the whole partition).
int rr_subpartition(const Partition& lambda);
int rr_subpartition(const std::vector<int>& nonincreasing_parts);

/// Visits every partition of m in reverse lexicographic order.
void for_each_partition(int m, const std::function<void(const std::vector<int>&)>& visit);

struct RRProfile {
  std::int64_t m = 0;
  std::map<int, std::int64_t> counts;  // l -> R_l(m)
  std::int64_t a1 = 0;

  std::int64_t total() const;  // sum_l R_l(m) = p(m)
};

/// Enumerates all partitions of m (0 < m <= kBruteForceBound).
RRProfile a1_bruteforce(std::int64_t m);

/// p(0..max_m) by the pentagonal-number recurrence, plus the derived counts
/// A_1(m) = sum_{r>=1} p(m - r^2) and a(m) = p(m) + 2 A_1(m).
class PartitionTable {
 public:
  explicit PartitionTable(std::int64_t max_m);

  std::int64_t max_m() const { return static_cast<std::int64_t>(p_.size()) - 1; }
  const Integer& p(std::int64_t m) const;
  Integer a1(std::int64_t m) const;
  Integer a(std::int64_t m) const;

 private:
  std::vector<Integer> p_;
};

/// p(m) via a freshly built table.
Integer p_of(std::int64_t m);

/// sum_{m>=1} A_1(m) q^m = theta_onesided / (q;q)_inf.
LaurentSeries a1_series(Precision prec);
/// (q^2;q^2)^5 / ((q;q)^3 (q^4;q^4)^2) = sum a(m) q^m.
LaurentSeries a_series(Precision prec);

enum class CongruenceTarget { A1, P };

struct CongruenceEntry {
  std::int64_t m = 0;
  Integer value;
  bool divisible = false;
  Integer quotient;  // value / modulus when divisible
};

struct CongruenceReport {
  CongruenceTarget target = CongruenceTarget::A1;
  std::int64_t n = 0;
  Integer modulus;  // 5^n
  Integer progression_modulus;  // arguments satisfy 24 m = 1 mod this
  std::vector<CongruenceEntry> entries;
  bool all_pass() const;
};

/// The first `count` arguments m of the congruence family, in increasing
/// order: 24m = 1 (mod 5^{2n}) for A_1 and 24m = 1 (mod 5^n) for p.
std::vector<std::int64_t> congruence_arguments(CongruenceTarget target, std::int64_t n,
                                               std::int64_t count);

/// Checks 5^n | A_1(m) (resp. p(m)) along the family. A_1 values come from
/// a1_series at depth prec, so the largest argument must be below prec.depth.
CongruenceReport check_congruence(CongruenceTarget target, std::int64_t n, std::int64_t count,
                                  Precision prec);

std::string to_string(CongruenceTarget t);
CongruenceTarget congruence_target_from_string(const std::string& s);

}  // namespace rrc
