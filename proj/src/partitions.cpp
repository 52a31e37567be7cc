#include "mz/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mz {

MultiPartition MultiPartition::of(int p, const std::vector<Index>& parts) {
    MultiPartition m(p);
    for (const auto& i : parts) m.add(i);
    return m;
}

MultiPartition MultiPartition::of1(const std::vector<int>& parts) {
    MultiPartition m(1);
    for (int x : parts) m.add({x});
    return m;
}

void MultiPartition::add(const Index& i, int mult) {
    if (static_cast<int>(i.size()) != p_) throw DomainError("index of the wrong dimension");
    bool nonzero = false;
    for (int x : i) {
        if (x < 0) throw DomainError("negative index entry");
        nonzero |= x != 0;
    }
    if (!nonzero) throw DomainError("partitions have no zero part");
    if (mult < 0) throw DomainError("negative multiplicity");
    if (mult > 0) m_[i] += mult;
}

int MultiPartition::size() const {
    int s = 0;
    for (const auto& [i, m] : m_) s += m;
    return s;
}

std::string MultiPartition::str() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [i, m] : m_)
        for (int k = 0; k < m; ++k) {
            if (!first) os << ",";
            first = false;
            if (p_ == 1) {
                os << i[0];
                continue;
            }
            os << "(";
            for (size_t j = 0; j < i.size(); ++j) os << (j ? "," : "") << i[j];
            os << ")";
        }
    os << "]";
    return os.str();
}

Index lambda_map(const MultiPartition& pi) {
    Index s(pi.dim(), 0);
    for (const auto& [i, m] : pi.entries())
        for (int j = 0; j < pi.dim(); ++j) s[j] += m * i[j];
    return s;
}

MultiPartition mu_map(const RefinedPartition& w, int p) {
    MultiPartition out(p);
    for (const auto& [pi, m] : w)
        for (const auto& [i, k] : pi.entries()) out.add(i, k * m);
    return out;
}

std::vector<RefinedPartition> mu_fiber(const MultiPartition& pi) {
    std::vector<Index> support;
    std::vector<int> mult;
    for (const auto& [i, m] : pi.entries()) {
        support.push_back(i);
        mult.push_back(m);
    }
    const size_t d = mult.size();
    std::vector<RefinedPartition> out;
    std::vector<std::vector<int>> chosen;
    // Vector partitions of mult with parts in non-increasing lexicographic order.
    std::function<void(std::vector<int>&, const std::vector<int>&)> rec = [&](std::vector<int>& rest,
                                                                               const std::vector<int>& cap) {
        bool done = std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; });
        if (done) {
            RefinedPartition w;
            for (const auto& part : chosen) {
                MultiPartition block(pi.dim());
                for (size_t j = 0; j < d; ++j) block.add(support[j], part[j]);
                w[block]++;
            }
            out.push_back(std::move(w));
            return;
        }
        std::vector<int> x(d, 0);
        while (true) {
            // advance x through the box [0, rest] in lexicographic order
            size_t j = d;
            while (j > 0) {
                --j;
                if (x[j] < rest[j]) {
                    ++x[j];
                    for (size_t k = j + 1; k < d; ++k) x[k] = 0;
                    break;
                }
                if (j == 0) return;
            }
            if (x > cap) return;
            for (size_t k = 0; k < d; ++k) rest[k] -= x[k];
            chosen.push_back(x);
            rec(rest, x);
            chosen.pop_back();
            for (size_t k = 0; k < d; ++k) rest[k] += x[k];
        }
    };
    if (d == 0) return {RefinedPartition{}};
    std::vector<int> rest = mult;
    rec(rest, mult);
    return out;
}

Ordered contraction(const Ordered& mu) {
    Ordered r;
    for (int x : mu)
        if (x != 0) r.push_back(x);
    return r;
}

HoweResult howe_check(const std::vector<Ordered>& nus, int max_blocks) {
    if (nus.empty()) throw DomainError("howe_check needs at least one partition");
    int total = 0, longest = 0;
    for (const auto& nu : nus) {
        for (int x : nu)
            if (x <= 0) throw DomainError("ordered partitions in the check have positive entries");
        total += static_cast<int>(nu.size());
        longest = std::max(longest, static_cast<int>(nu.size()));
    }
    if (total > max_blocks) throw BoundsError("too many blocks for exhaustive enumeration");
    HoweResult r;
    r.expected = (total % 2) ? -1 : 1;
    r.sum = 0;
    const size_t n = nus.size();
    // Subsets of [L] of each size, as bitmasks.
    for (int L = std::max(longest, 1); L <= std::max(total, 1); ++L) {
        std::vector<std::vector<unsigned>> masks(n);
        for (unsigned m = 0; m < (1u << L); ++m)
            for (size_t i = 0; i < n; ++i)
                if (__builtin_popcount(m) == static_cast<int>(nus[i].size())) masks[i].push_back(m);
        const unsigned full = (1u << L) - 1;
        // ways[acc] = number of partial tuples whose positions cover exactly acc
        std::vector<long> ways(1u << L, 0);
        ways[0] = 1;
        for (size_t i = 0; i < n; ++i) {
            std::vector<long> next(1u << L, 0);
            for (unsigned acc = 0; acc <= full; ++acc)
                if (ways[acc])
                    for (unsigned m : masks[i]) next[acc | m] += ways[acc];
            ways = std::move(next);
        }
        long count = ways[full];
        r.preimage_size += count;
        r.sum += (L % 2 ? -count : count);
    }
    if (total == 0) {
        // all partitions empty: the preimage is the single empty tuple
        r.sum = 1;
        r.preimage_size = 1;
    }
    r.equal = r.sum == r.expected;
    return r;
}

std::vector<Ordered> compositions(int n) {
    if (n < 0) return {};
    if (n == 0) return {Ordered{}};
    std::vector<Ordered> out;
    for (int first = 1; first <= n; ++first)
        for (auto rest : compositions(n - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    return out;
}

std::vector<Overlap> overlap_enumerate(const MultiPartition& kappa, const MultiPartition& lambda) {
    if (kappa.dim() != lambda.dim()) throw DomainError("partitions of different dimensions");
    const int p = kappa.dim();
    const Index zero(p, 0);
    std::vector<std::pair<Index, int>> rows(kappa.entries().begin(), kappa.entries().end());
    std::vector<std::pair<Index, int>> cols(lambda.entries().begin(), lambda.entries().end());
    const size_t R = rows.size(), C = cols.size();
    std::vector<int> cell(R * C, 0), row_left(R), col_left(C);
    for (size_t i = 0; i < R; ++i) row_left[i] = rows[i].second;
    for (size_t j = 0; j < C; ++j) col_left[j] = cols[j].second;
    std::vector<Overlap> out;
    auto add_index = [&](const Index& a, const Index& b) {
        Index s(p);
        for (int k = 0; k < p; ++k) s[k] = a[k] + b[k];
        return s;
    };
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == R * C) {
            Overlap o;
            o.deformal = MultiPartition(p);
            auto put = [&](const Index& a, const Index& b, int v) {
                if (v == 0) return;
                o.n[{a, b}] = v;
                o.deformal.add(add_index(a, b), v);
            };
            for (size_t i = 0; i < R; ++i)
                for (size_t j = 0; j < C; ++j) put(rows[i].first, cols[j].first, cell[i * C + j]);
            for (size_t i = 0; i < R; ++i) put(rows[i].first, zero, row_left[i]);
            for (size_t j = 0; j < C; ++j) put(zero, cols[j].first, col_left[j]);
            out.push_back(std::move(o));
            return;
        }
        size_t i = pos / C, j = pos % C;
        int top = std::min(row_left[i], col_left[j]);
        for (int v = 0; v <= top; ++v) {
            cell[pos] = v;
            row_left[i] -= v;
            col_left[j] -= v;
            rec(pos + 1);
            row_left[i] += v;
            col_left[j] += v;
        }
        cell[pos] = 0;
    };
    rec(0);
    return out;
}

HoweSweep howe_sweep(int max_blocks, int max_n) {
    if (max_blocks < 0 || max_n < 1) throw DomainError("howe sweep needs max_blocks >= 0 and max_n >= 1");
    std::vector<std::vector<Ordered>> by_size(max_blocks + 1);
    for (int k = 0; k <= max_blocks; ++k) by_size[k] = k ? compositions(k) : std::vector<Ordered>{Ordered{}};
    HoweSweep sweep;
    std::vector<Ordered> tuple;
    std::function<void(int, int)> rec = [&](int slots, int budget) {
        if (slots == 0) {
            ++sweep.cases;
            if (!howe_check(tuple, max_blocks).equal && sweep.failures++ == 0) sweep.first_failure = tuple;
            return;
        }
        for (int k = 0; k <= budget; ++k)
            for (const auto& nu : by_size[k]) {
                tuple.push_back(nu);
                rec(slots - 1, budget - k);
                tuple.pop_back();
            }
    };
    for (int n = 1; n <= max_n; ++n) rec(n, max_blocks);
    return sweep;
}

}  // namespace mz
