#include "exotic/bipartitions.hpp"

#include "exotic/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace exotic {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw DomainError("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::vector<Partition> partitions_of(int k)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int cap) -> void {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int part = std::min(left, cap); part >= 1; --part) {
            cur.push_back(part);
            self(self, left - part, part);
            cur.pop_back();
        }
    };
    if (k >= 0)
        rec(rec, k, k);
    return out;
}

bool dominance_leq(const Partition& a, const Partition& b)
{
    const int len = std::max(a.length(), b.length());
    int sa = 0, sb = 0;
    for (int i = 0; i < len; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb)
            return false;
    }
    return true;
}

bool is_c_partition(const Partition& p)
{
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        if (parts[i] % 2 != 0 && (j - i) % 2 != 0)
            return false;
        i = j;
    }
    return true;
}

std::string Bipartition::label() const { return mu.str() + "|" + nu.str(); }

std::vector<Bipartition> enumerate_q(int n)
{
    std::vector<Bipartition> out;
    for (int k = n; k >= 0; --k)
        for (const auto& mu : partitions_of(k))
            for (const auto& nu : partitions_of(n - k))
                out.push_back({mu, nu});
    return out;
}

bool closure_leq(const Bipartition& lower, const Bipartition& upper)
{
    const int n = upper.size();
    if (lower.size() != n)
        throw DomainError("closure order compares bipartitions of different sizes: " + lower.label() + " vs " +
                          upper.label());
    int s_up = 0, s_low = 0;
    for (int j = 0; j <= n; ++j) {
        // Prefix over i <= j uses 1-based i; entry j-1 in 0-based terms.
        if (j > 0) {
            s_up += upper.mu[j - 1] + upper.nu[j - 1];
            s_low += lower.mu[j - 1] + lower.nu[j - 1];
        }
        if (s_up < s_low)
            return false;
        if (upper.mu[j] + s_up < lower.mu[j] + s_low)
            return false;
    }
    return true;
}

bool is_c_distinguished(const Bipartition& b)
{
    const int len = std::max(b.mu.length(), b.nu.length()) + 1;
    for (int i = 0; i < len; ++i) {
        if (b.mu[i] < b.nu[i] - 1)
            return false;
        if (b.nu[i] < b.mu[i + 1] - 1)
            return false;
    }
    return true;
}

namespace detail {

std::vector<int> interleave(const Bipartition& b)
{
    const int len = std::max(b.mu.length(), b.nu.length());
    std::vector<int> seq;
    for (int i = 0; i < len; ++i) {
        seq.push_back(2 * b.mu[i]);
        seq.push_back(2 * b.nu[i]);
    }
    return seq;
}

void merge_pair(std::vector<int>& seq, std::size_t i)
{
    if (seq[i] % 2 != 0 || seq[i + 1] % 2 != 0) {
        std::ostringstream msg;
        msg << "phi_c met an increasing pair with an odd entry: (" << seq[i] << "," << seq[i + 1]
            << ") at position " << i;
        throw InternalError(msg.str());
    }
    const int merged = (seq[i] + seq[i + 1]) / 2;
    seq[i] = seq[i + 1] = merged;
}

Partition finish_phi_c(const std::vector<int>& seq)
{
    Partition out(seq);
    if (!is_c_partition(out))
        throw InternalError("phi_c produced " + out.str() + ", which has an odd part of odd multiplicity");
    return out;
}

} // namespace detail

Partition phi_c(const Bipartition& b)
{
    return phi_c_with_order(b, [](const std::vector<std::size_t>& eligible) { return eligible.front(); });
}

Bipartition phi_c_hat(const Partition& lambda)
{
    if (!is_c_partition(lambda))
        throw DomainError("phi_c_hat needs every odd part with even multiplicity, got (" + lambda.str() + ")");
    if (lambda.size() % 2 != 0)
        throw DomainError("phi_c_hat needs a partition of an even number, got (" + lambda.str() + ")");

    const auto& parts = lambda.parts();
    std::vector<int> halved;
    for (std::size_t i = 0; i < parts.size();) {
        if (parts[i] % 2 == 0) {
            halved.push_back(parts[i] / 2);
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        const int k = (parts[i] - 1) / 2;
        for (std::size_t t = i; t < j; ++t)
            halved.push_back((t - i) % 2 == 0 ? k : k + 1);
        i = j;
    }
    if (halved.size() % 2 != 0)
        halved.push_back(0);

    std::vector<int> mu, nu;
    for (std::size_t i = 0; i < halved.size(); ++i)
        (i % 2 == 0 ? mu : nu).push_back(halved[i]);
    auto decreasing = [](const std::vector<int>& v) { return std::is_sorted(v.rbegin(), v.rend()); };
    if (!decreasing(mu) || !decreasing(nu))
        throw InternalError("phi_c_hat split of (" + lambda.str() + ") is not a pair of partitions");
    return {Partition(std::move(mu)), Partition(std::move(nu))};
}

Bipartition collapse(const Bipartition& b) { return phi_c_hat(phi_c(b)); }

int FiltrationProfile::at(int a) const
{
    if (auto it = dims_.find(a); it != dims_.end())
        return it->second;
    if (dims_.empty())
        return a >= 1 ? 0 : dim_;
    return a > max_level() ? 0 : dim_;
}

FiltrationProfile filtration_dims(const Bipartition& b)
{
    const Partition lambda = phi_c(b);
    const int dim = 2 * b.size();
    auto upper = [&](int a) {
        int d = 0;
        for (int part : lambda.parts()) {
            const int diff = part - a;
            if (diff > 0)
                d += (diff + 1) / 2;
        }
        return d;
    };
    const int top = std::max(lambda[0], 1);
    std::map<int, int> dims;
    for (int a = 1; a <= top; ++a)
        dims[a] = upper(a);
    for (int a = 1 - top; a <= 0; ++a)
        dims[a] = dim - upper(1 - a);
    return FiltrationProfile(dim, std::move(dims));
}

HasseDiagram hasse(int n)
{
    HasseDiagram h;
    h.nodes = enumerate_q(n);
    const auto count = h.nodes.size();
    std::vector<std::vector<bool>> less(count, std::vector<bool>(count, false));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
            less[i][j] = i != j && closure_leq(h.nodes[i], h.nodes[j]);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) {
            if (!less[i][j])
                continue;
            bool covered = true;
            for (std::size_t k = 0; k < count && covered; ++k)
                if (less[i][k] && less[k][j])
                    covered = false;
            if (covered)
                h.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return h;
}

std::string emit_dot(int n)
{
    const HasseDiagram h = hasse(n);
    std::ostringstream out;
    out << "digraph Q" << n << " {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < h.nodes.size(); ++i) {
        out << "  n" << i << " [label=\"" << h.nodes[i].label() << "\"";
        if (is_c_distinguished(h.nodes[i]))
            out << ", peripheries=2";
        out << "];\n";
    }
    for (const auto& [lo, up] : h.edges)
        out << "  n" << lo << " -> n" << up << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace exotic
