#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace exotic {

/// Weakly decreasing positive parts; trailing zeros are dropped on construction.
class Partition {
  public:
    Partition() = default;
    /// Throws DomainError on a negative or increasing entry.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    /// Zero-padded access, 0-based.
    int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
    int size() const;
    std::string str() const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

/// All partitions of k, in reverse lexicographic order.
std::vector<Partition> partitions_of(int k);

/// Dominance order: a <= b iff every prefix sum of a is at most that of b.
bool dominance_leq(const Partition& a, const Partition& b);

/// Every odd part occurs with even multiplicity.
bool is_c_partition(const Partition& p);

struct Bipartition {
    Partition mu;
    Partition nu;

    int size() const { return mu.size() + nu.size(); }
    /// "mu|nu" with comma-separated parts, e.g. "1,1,1|3".
    std::string label() const;

    auto operator<=>(const Bipartition&) const = default;
    bool operator==(const Bipartition&) const = default;
};

/// All bipartitions of n, ordered by |mu| then by partitions_of order.
std::vector<Bipartition> enumerate_q(int n);

/// Closure order lower <= upper on exotic orbits; DomainError on size mismatch.
bool closure_leq(const Bipartition& lower, const Bipartition& upper);

bool is_c_distinguished(const Bipartition& b);

/// Interleave (2mu_1, 2nu_1, 2mu_2, ...) and merge adjacent increasing even
/// pairs (2s, 2t) into (s+t, s+t) until weakly decreasing.
Partition phi_c(const Bipartition& b);

/// phi_c with the merges chosen by `pick` among the eligible positions each round.
/// Used to check that the result does not depend on scan order.
template <class Pick>
Partition phi_c_with_order(const Bipartition& b, Pick&& pick);

/// Inverse of phi_c on C-distinguished bipartitions; DomainError unless lambda
/// has every odd part with even multiplicity and even size.
Bipartition phi_c_hat(const Partition& lambda);

/// phi_c_hat(phi_c(b)).
Bipartition collapse(const Bipartition& b);

/// dim V_{>=a} for the (mu, nu)-filtration.
class FiltrationProfile {
  public:
    FiltrationProfile(int dim, std::map<int, int> dims) : dim_(dim), dims_(std::move(dims)) {}
    /// Total dimension 2n.
    int dim() const { return dim_; }
    /// Stored levels cover [min_level(), max_level()]; below is 2n, above is 0.
    int at(int a) const;
    int min_level() const { return dims_.empty() ? 0 : dims_.begin()->first; }
    int max_level() const { return dims_.empty() ? 0 : dims_.rbegin()->first; }
    const std::map<int, int>& dims() const { return dims_; }

  private:
    int dim_;
    std::map<int, int> dims_;
};

FiltrationProfile filtration_dims(const Bipartition& b);

struct HasseDiagram {
    std::vector<Bipartition> nodes;
    /// (lower, upper) node indices of covering relations.
    std::vector<std::pair<int, int>> edges;
};

HasseDiagram hasse(int n);
std::string emit_dot(int n);

// ---------------------------------------------------------------------------

namespace detail {
std::vector<int> interleave(const Bipartition& b);
/// Replaces seq[i], seq[i+1] by their mean; InternalError when either is odd.
void merge_pair(std::vector<int>& seq, std::size_t i);
Partition finish_phi_c(const std::vector<int>& seq);
} // namespace detail

template <class Pick>
Partition phi_c_with_order(const Bipartition& b, Pick&& pick)
{
    std::vector<int> seq = detail::interleave(b);
    for (;;) {
        std::vector<std::size_t> eligible;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            if (seq[i] < seq[i + 1])
                eligible.push_back(i);
        if (eligible.empty())
            break;
        detail::merge_pair(seq, pick(eligible));
    }
    return detail::finish_phi_c(seq);
}

} // namespace exotic
