#include "hecke/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace hecke {

namespace {

std::vector<int> strip_zeros(std::vector<int> parts, const char* what) {
    for (int p : parts) {
        if (p < 0)
            throw precondition_error(std::string(what) + ": negative part");
    }
    std::erase(parts, 0);
    return parts;
}

} // namespace

Partition::Partition(std::vector<int> parts)
    : parts_(strip_zeros(std::move(parts), "partition")) {
    for (size_t i = 1; i < parts_.size(); ++i) {
        if (parts_[i - 1] < parts_[i])
            throw precondition_error("partition: parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::row(int i) const {
    if (i < 1)
        throw precondition_error("partition row index starts at 1");
    return i <= length() ? parts_[i - 1] : 0;
}

Composition::Composition(std::vector<int> parts)
    : parts_(strip_zeros(std::move(parts), "composition")) {
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition conjugate(const Partition& lambda) {
    const auto& p = lambda.parts();
    if (p.empty())
        return {};
    std::vector<int> cols(p[0]);
    for (int j = 1; j <= p[0]; ++j) {
        int count = 0;
        for (int part : p) {
            if (part >= j)
                ++count;
            else
                break;
        }
        cols[j - 1] = count;
    }
    return Partition(std::move(cols));
}

std::vector<int> hook_lengths(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    std::vector<int> hooks;
    hooks.reserve(lambda.size());
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.row(i); ++j)
            hooks.push_back(lambda.row(i) - j + conj.row(j) - i + 1);
    std::sort(hooks.begin(), hooks.end(), std::greater<int>());
    return hooks;
}

int count_hooks_divisible(const Partition& lambda, int l) {
    if (l < 1)
        throw precondition_error("count_hooks_divisible: l must be >= 1");
    int count = 0;
    for (int h : hook_lengths(lambda))
        if (h % l == 0)
            ++count;
    return count;
}

bool is_l_restricted(const Partition& lambda, int l) {
    if (l < 2)
        throw precondition_error("is_l_restricted: l must be >= 2");
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda.row(i) - lambda.row(i + 1) > l - 1)
            return false;
    return true;
}

bool is_l_regular(const Partition& lambda, int l) {
    return is_l_restricted(conjugate(lambda), l);
}

bool is_l_parabolic(const Composition& lambda, int l) {
    if (l < 1)
        throw precondition_error("is_l_parabolic: l must be >= 1");
    for (int p : lambda.parts())
        if (p != 1 && p != l)
            return false;
    return true;
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
    long long sl = 0, sm = 0;
    const int rows = std::max(lambda.length(), mu.length());
    for (int i = 1; i <= rows; ++i) {
        sl += lambda.row(i);
        sm += mu.row(i);
        if (sl > sm)
            return false;
    }
    return true;
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0)
        throw precondition_error("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> current;
    // Descending-lex emission: largest available first part first.
    std::function<void(int, int)> emit = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(Partition(current));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            emit(remaining - p, p);
            current.pop_back();
        }
    };
    emit(n, n);
    return out;
}

LAdicExpansion l_adic_expansion(const Partition& lambda, int l) {
    if (l < 2)
        throw precondition_error("l_adic_expansion: l must be >= 2");
    const int rows = lambda.length();
    std::vector<int> lower(rows), upper(rows);
    int below = 0; // lambda0 value of the row beneath the current one
    for (int i = rows; i >= 1; --i) {
        const int residue = (lambda.row(i) - below) % l;
        lower[i - 1] = below + residue;
        upper[i - 1] = (lambda.row(i) - lower[i - 1]) / l;
        below = lower[i - 1];
    }
    for (size_t i = 1; i < upper.size(); ++i) {
        if (upper[i - 1] < upper[i])
            throw internal_error("l_adic_expansion: quotient part is not a partition");
    }
    LAdicExpansion expansion{Partition(std::move(lower)), Partition(std::move(upper)), l};
    if (expansion.lambda0.size() + l * expansion.lambda1.size() != lambda.size())
        throw internal_error("l_adic_expansion: size bookkeeping failed");
    return expansion;
}

Partition rho(const Partition& lambda, int l) {
    const LAdicExpansion e = l_adic_expansion(lambda, l);
    return parabolic_partition(l, e.lambda1.size(), e.lambda0.size());
}

Partition parabolic_partition(int l, int a, int s) {
    if (l < 1 || a < 0 || s < 0)
        throw precondition_error("parabolic_partition: need l >= 1, a, s >= 0");
    std::vector<int> parts;
    parts.reserve(a + s);
    parts.insert(parts.end(), a, l);
    parts.insert(parts.end(), s, 1);
    return Partition(std::move(parts));
}

} // namespace hecke
