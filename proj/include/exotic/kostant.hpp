#pragma once

#include "exotic/weight.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <vector>

namespace exotic {

/// Which multiset of positive weights a partition function counts with.
enum class KostantKind {
    p,        ///< e_i - e_j, e_i + e_j (i<j) and the long roots 2e_i
    p_exotic, ///< e_i - e_j, e_i + e_j (i<j) and the short weights e_i
};

/// Summands in evaluation order: grouped by leading index i, the long (or
/// short) root last within each group.
std::vector<Weight> kostant_summands(int rank, KostantKind kind);

/// Counts the ways to write a weight as a nonnegative integer combination of
/// kostant_summands(rank, kind).
///
/// The recursion walks the summands in order, memoised on (summand index,
/// residual). After the summands with leading index i are spent, coordinates
/// 0..i of the residual must vanish; together with nonnegative prefix sums this
/// prunes every dead branch. The memo is shared between calls and threads. It
/// holds two generations: when the young one fills half the capacity it
/// replaces the old one, which approximates LRU eviction at no bookkeeping cost.
class KostantCounter {
  public:
    KostantCounter(int rank, KostantKind kind, std::size_t max_entries);
    ~KostantCounter();
    KostantCounter(const KostantCounter&) = delete;
    KostantCounter& operator=(const KostantCounter&) = delete;

    int rank() const;
    KostantKind kind() const;
    mpz_class count(const Weight& mu) const;
    std::size_t cached_entries() const;
    void clear() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Approximate memory cost of one memo entry, used to turn a byte budget into entries.
inline constexpr std::size_t kKostantEntryBytes = 96;

/// Byte budget for each process-wide counter created after the call.
void set_kostant_cache_bytes(std::size_t bytes);
std::size_t kostant_cache_bytes();

/// The process-wide counter for (rank, kind).
const KostantCounter& kostant_counter(int rank, KostantKind kind);

mpz_class kostant_p(const Weight& mu);
mpz_class kostant_p_exotic(const Weight& mu);

/// p'(mu) == sum over S ⊆ {1..n} of p(mu - sum_{i in S} e_i), both sides evaluated.
bool subset_identity_check(const Weight& mu);

} // namespace exotic
