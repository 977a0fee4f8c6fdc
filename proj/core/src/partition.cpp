#include "rrc/partition.hpp"

#include <algorithm>

namespace rrc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be nonincreasing");
    }
  }
}

std::int64_t Partition::size() const {
  std::int64_t s = 0;
  for (int x : parts_) s += x;
  return s;
}

int rr_subpartition(const std::vector<int>& parts) {
  int best = 0;
  const int k = static_cast<int>(parts.size());
  for (int l = 1; l <= k; ++l) {
    if (l >= 2 && parts[l - 2] - parts[l - 1] < 2) break;
    const int next = (l < k) ? parts[l] : 0;
    if (parts[l - 1] > next) best = l;
  }
  return best;
}

int rr_subpartition(const Partition& lambda) { return rr_subpartition(lambda.parts()); }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& buf,
                    const std::function<void(const std::vector<int>&)>& visit) {
  if (remaining == 0) {
    visit(buf);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    buf.push_back(part);
    partitions_rec(remaining - part, part, buf, visit);
    buf.pop_back();
  }
}

}  // namespace

void for_each_partition(int m, const std::function<void(const std::vector<int>&)>& visit) {
  if (m < 0) return;
  std::vector<int> buf;
  buf.reserve(static_cast<std::size_t>(m));
  partitions_rec(m, m, buf, visit);
}

std::int64_t RRProfile::total() const {
  std::int64_t s = 0;
  for (const auto& [l, c] : counts) s += c;
  return s;
}

RRProfile a1_bruteforce(std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("a1_bruteforce requires m > 0");
  if (m > kBruteForceBound) {
    throw BoundExceeded("brute-force enumeration is capped at m = " +
                        std::to_string(kBruteForceBound));
  }
  RRProfile profile;
  profile.m = m;
  for_each_partition(static_cast<int>(m), [&](const std::vector<int>& parts) {
    ++profile.counts[rr_subpartition(parts)];
  });
  for (const auto& [l, c] : profile.counts) profile.a1 += l * c;
  return profile;
}

PartitionTable::PartitionTable(std::int64_t max_m) {
  if (max_m < 0) throw std::invalid_argument("PartitionTable requires max_m >= 0");
  p_.resize(static_cast<std::size_t>(max_m + 1));
  p_[0] = 1;
  // p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
  for (std::int64_t n = 1; n <= max_m; ++n) {
    Integer acc = 0;
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const std::int64_t g2 = k * (3 * k + 1) / 2;
      if (k % 2 == 1) {
        acc += p_[static_cast<std::size_t>(n - g1)];
        if (g2 <= n) acc += p_[static_cast<std::size_t>(n - g2)];
      } else {
        acc -= p_[static_cast<std::size_t>(n - g1)];
        if (g2 <= n) acc -= p_[static_cast<std::size_t>(n - g2)];
      }
    }
    p_[static_cast<std::size_t>(n)] = std::move(acc);
  }
}

const Integer& PartitionTable::p(std::int64_t m) const {
  if (m < 0 || m > max_m()) {
    throw BoundExceeded("p(" + std::to_string(m) + ") is outside the table");
  }
  return p_[static_cast<std::size_t>(m)];
}

Integer PartitionTable::a1(std::int64_t m) const {
  Integer acc = 0;
  for (std::int64_t r = 1; r * r <= m; ++r) acc += p(m - r * r);
  return acc;
}

Integer PartitionTable::a(std::int64_t m) const { return p(m) + 2 * a1(m); }

Integer p_of(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("p_of requires m >= 0");
  return PartitionTable(m).p(m);
}

LaurentSeries a1_series(Precision prec) {
  const LaurentSeries inv = invert(pentagonal(1, prec.depth), prec.depth);
  return mul(inv, theta_onesided(prec)).truncate(prec.depth);
}

LaurentSeries a_series(Precision prec) {
  const std::int64_t cap = prec.depth;
  LaurentSeries r = pow(pentagonal(2, cap), 5, cap);
  const LaurentSeries p1 = pentagonal(1, cap);
  const LaurentSeries p4 = pentagonal(4, cap);
  for (int i = 0; i < 3; ++i) r = divide(r, p1, cap);
  for (int i = 0; i < 2; ++i) r = divide(r, p4, cap);
  return r;
}

bool CongruenceReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const CongruenceEntry& e) { return e.divisible; });
}

std::vector<std::int64_t> congruence_arguments(CongruenceTarget target, std::int64_t n,
                                               std::int64_t count) {
  if (n < 0) throw std::invalid_argument("congruence exponent n must be >= 0");
  const Integer modulus = pow5(target == CongruenceTarget::A1 ? 2 * n : n);
  if (!modulus.fits_slong_p()) throw std::out_of_range("progression modulus too large");
  const std::int64_t mod = modulus.get_si();
  Integer inv;
  const Integer twenty_four = 24;
  if (mod == 1) {
    inv = 0;
  } else {
    mpz_invert(inv.get_mpz_t(), twenty_four.get_mpz_t(), modulus.get_mpz_t());
  }
  std::int64_t first = inv.get_si();
  // m = 0 satisfies the congruence only for the trivial modulus; start at 1.
  if (first == 0) first = mod;
  std::vector<std::int64_t> out;
  for (std::int64_t k = 0; k < count; ++k) out.push_back(first + k * mod);
  return out;
}

CongruenceReport check_congruence(CongruenceTarget target, std::int64_t n, std::int64_t count,
                                  Precision prec) {
  CongruenceReport report;
  report.target = target;
  report.n = n;
  report.modulus = pow5(n);
  report.progression_modulus = pow5(target == CongruenceTarget::A1 ? 2 * n : n);
  const auto args = congruence_arguments(target, n, count);
  if (args.empty()) return report;
  const std::int64_t largest = args.back();
  if (largest >= prec.depth) {
    throw InsufficientPrecision("argument m = " + std::to_string(largest) +
                                " needs depth > " + std::to_string(largest) + ", have " +
                                std::to_string(prec.depth));
  }

  auto value_of = [&]() -> std::function<Integer(std::int64_t)> {
    if (target == CongruenceTarget::A1) {
      auto series = std::make_shared<LaurentSeries>(a1_series(prec));
      return [series](std::int64_t m) { return series->coeff(m); };
    }
    auto table = std::make_shared<PartitionTable>(largest);
    return [table](std::int64_t m) { return table->p(m); };
  }();

  for (std::int64_t m : args) {
    CongruenceEntry e;
    e.m = m;
    e.value = value_of(m);
    e.divisible = mpz_divisible_p(e.value.get_mpz_t(), report.modulus.get_mpz_t()) != 0;
    if (e.divisible) e.quotient = e.value / report.modulus;
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::string to_string(CongruenceTarget t) { return t == CongruenceTarget::A1 ? "a1" : "p"; }

CongruenceTarget congruence_target_from_string(const std::string& s) {
  if (s == "a1" || s == "A1") return CongruenceTarget::A1;
  if (s == "p") return CongruenceTarget::P;
  throw std::invalid_argument("unknown congruence target '" + s + "' (expected a1 or p)");
}

}  // namespace rrc
