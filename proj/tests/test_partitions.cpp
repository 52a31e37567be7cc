#include <doctest.h>

#include <set>

#include "mz/partitions.hpp"

using namespace mz;

namespace {

// Bell numbers through the Bell triangle.
Int bell_number(int k) {
    std::vector<Int> row{1};
    for (int i = 0; i < k; ++i) {
        std::vector<Int> next{row.back()};
        for (const Int& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

// Integer partitions by the pentagonal-free DP.
long partition_count(int k) {
    std::vector<long> p(k + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= k; ++part)
        for (int s = part; s <= k; ++s) p[s] += p[s - part];
    return p[k];
}

// Inclusion-exclusion count of tuples of subsets of sizes k_i covering [L].
Int covering_tuples(const std::vector<int>& sizes, int L) {
    Int total = 0;
    for (int j = 0; j <= L; ++j) {
        Int term = binomial(L, j);
        for (int k : sizes) term *= binomial(L - j, k);
        total += (j % 2 ? -term : term);
    }
    return total;
}

}  // namespace

TEST_CASE("lambda map") {
    auto pi = MultiPartition::of(2, {{2, 1}, {2, 1}, {0, 3}});
    CHECK(lambda_map(pi) == Index{4, 5});
    CHECK(lambda_map(MultiPartition(3)) == Index{0, 0, 0});
    CHECK(lambda_map(MultiPartition::of1({3})) == Index{3});
    CHECK(pi.size() == 3);
    CHECK(pi.distinct() == 2);
    CHECK_THROWS_AS(MultiPartition::of(2, {{0, 0}}), DomainError);
}

TEST_CASE("mu map and its fibres") {
    auto pi = MultiPartition::of1({1, 1, 2});
    RefinedPartition w{{MultiPartition::of1({1}), 2}, {MultiPartition::of1({2}), 1}};
    CHECK(mu_map(w, 1) == pi);
    auto fib = mu_fiber(pi);
    CHECK(fib.size() == 4);
    std::set<RefinedPartition> expected = {
        {{MultiPartition::of1({1}), 2}, {MultiPartition::of1({2}), 1}},
        {{MultiPartition::of1({1, 1}), 1}, {MultiPartition::of1({2}), 1}},
        {{MultiPartition::of1({1}), 1}, {MultiPartition::of1({1, 2}), 1}},
        {{MultiPartition::of1({1, 1, 2}), 1}},
    };
    CHECK(std::set<RefinedPartition>(fib.begin(), fib.end()) == expected);
    auto single = mu_fiber(MultiPartition::of1({5}));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == RefinedPartition{{MultiPartition::of1({5}), 1}});
    CHECK(mu_fiber(MultiPartition(1)).size() == 1);
}

TEST_CASE("mu fibres are exact preimages") {
    std::vector<MultiPartition> cases = {
        MultiPartition::of1({1, 1, 1, 2, 2, 3}),
        MultiPartition::of(2, {{1, 0}, {1, 0}, {0, 1}, {1, 1}}),
        MultiPartition::of1({4, 4, 4, 4}),
    };
    for (const auto& pi : cases) {
        auto fib = mu_fiber(pi);
        std::set<RefinedPartition> distinct(fib.begin(), fib.end());
        CHECK(distinct.size() == fib.size());
        for (const auto& w : fib) CHECK(mu_map(w, pi.dim()) == pi);
    }
}

TEST_CASE("fibre over 1^k") {
    for (int k = 1; k <= 6; ++k) {
        auto fib = mu_fiber(MultiPartition::of1(std::vector<int>(k, 1)));
        // Unlabelled multisets: integer partitions of k.
        CHECK(static_cast<long>(fib.size()) == partition_count(k));
        // Weighting each block type by its number of labelled realizations recovers Bell(k).
        Int weighted = 0;
        for (const auto& w : fib) {
            Int denom = 1;
            for (const auto& [block, m] : w) {
                int j = block.size();
                denom *= ipow(factorial(j), m) * factorial(m);
            }
            weighted += factorial(k) / denom;
        }
        CHECK(weighted == bell_number(k));
    }
}

TEST_CASE("contraction") {
    CHECK(contraction({1, 0, 3}) == Ordered{1, 3});
    CHECK(contraction({2, 5}) == Ordered{2, 5});
    CHECK(contraction({0, 0, 2}) == Ordered{2});
    for (const Ordered& mu : {Ordered{0, 1, 0, 2, 0}, Ordered{3, 0, 0}, Ordered{}}) {
        CHECK(contraction(contraction(mu)) == contraction(mu));
        CHECK(blocks(contraction(mu)) == blocks(mu));
        int s = 0, t = 0;
        for (int x : mu) s += x;
        for (int x : contraction(mu)) t += x;
        CHECK(s == t);
    }
}

TEST_CASE("Howe lemma examples") {
    for (const Ordered& nu : {Ordered{1}, Ordered{2, 1}, Ordered{1, 1, 1}}) {
        auto r = howe_check({nu});
        CHECK(r.equal);
        CHECK(r.sum == ((nu.size() % 2) ? -1 : 1));
    }
    auto r = howe_check({{1}, {1}});
    CHECK(r.sum == 1);
    CHECK(r.expected == 1);
    CHECK(r.preimage_size == 3);
    auto r2 = howe_check({{1, 1}, {2}});
    CHECK(r2.sum == -1);
    CHECK(r2.equal);
    CHECK_THROWS_AS(howe_check({Ordered(7, 1), Ordered(6, 1)}), BoundsError);
}

TEST_CASE("Howe preimage sizes match inclusion-exclusion") {
    std::vector<std::vector<Ordered>> cases = {{{1, 2}, {3}, {1, 1}}, {{1, 1, 1}, {2, 2}}, {{4}, {1}, {2}}};
    for (const auto& nus : cases) {
        std::vector<int> sizes;
        int total = 0, longest = 0;
        for (const auto& nu : nus) {
            sizes.push_back(static_cast<int>(nu.size()));
            total += sizes.back();
            longest = std::max(longest, sizes.back());
        }
        Int count = 0;
        for (int L = longest; L <= total; ++L) count += covering_tuples(sizes, L);
        CHECK(Int(howe_check(nus).preimage_size) == count);
    }
}

TEST_CASE("overlaps") {
    auto one = MultiPartition::of1({1});
    auto ov = overlap_enumerate(one, one);
    REQUIRE(ov.size() == 2);
    std::set<MultiPartition> ds;
    for (const auto& o : ov) ds.insert(o.deformal);
    CHECK(ds == std::set<MultiPartition>{MultiPartition::of1({2}), MultiPartition::of1({1, 1})});
    auto empty = overlap_enumerate(MultiPartition::of1({1, 2}), MultiPartition(1));
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].deformal == MultiPartition::of1({1, 2}));
    CHECK(overlap_enumerate(MultiPartition::of1({1, 1}), one).size() == 2);
}

TEST_CASE("overlap marginals") {
    std::vector<std::pair<MultiPartition, MultiPartition>> cases = {
        {MultiPartition::of1({1, 1, 2}), MultiPartition::of1({1, 3})},
        {MultiPartition::of(2, {{1, 0}, {0, 1}, {0, 1}}), MultiPartition::of(2, {{1, 0}, {1, 1}})},
    };
    for (const auto& [kappa, lambda] : cases) {
        Index zero(kappa.dim(), 0);
        for (const auto& o : overlap_enumerate(kappa, lambda)) {
            std::map<Index, int> rows, cols;
            for (const auto& [ij, v] : o.n) {
                if (ij.first != zero) rows[ij.first] += v;
                if (ij.second != zero) cols[ij.second] += v;
            }
            CHECK(rows == kappa.entries());
            CHECK(cols == lambda.entries());
            Index s = lambda_map(kappa), t = lambda_map(lambda), d = lambda_map(o.deformal);
            for (size_t k = 0; k < s.size(); ++k) CHECK(d[k] == s[k] + t[k]);
        }
    }
}

TEST_CASE("Howe sweep") {
    // sizes 0, 1, 2 carry 1, 1, 2 compositions
    HoweSweep small = howe_sweep(2, 2);
    CHECK(small.cases == 4 + 8);
    CHECK(small.failures == 0);
    HoweSweep s = howe_sweep(6, 3);
    CHECK(s.failures == 0);
    CHECK(s.first_failure.empty());
    CHECK_THROWS_AS(howe_sweep(-1, 2), DomainError);
}
