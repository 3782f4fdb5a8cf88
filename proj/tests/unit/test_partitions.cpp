#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "symzeta/partitions.hpp"
#include "symzeta/symmetric_zeta.hpp"

using namespace symzeta;
using Catch::Approx;

TEST_CASE("partition counts follow the Bell recurrence", "[partitions]") {
    const auto bell = oracle::bell_numbers(10);
    for (int r = 1; r <= 8; ++r) {
        INFO("r = " << r);
        CHECK(static_cast<std::int64_t>(enumerate_partitions(r).size()) == bell[static_cast<std::size_t>(r)]);
    }
    CHECK(enumerate_partitions(5).size() == 52);
    CHECK(bell[10] == 115975);
}

TEST_CASE("r = 2 partitions", "[partitions]") {
    const auto p = enumerate_partitions(2);
    REQUIRE(p.size() == 2);
    CHECK(p[0].blocks == std::vector<std::vector<int>>{{0, 1}});
    CHECK(p[1].blocks == std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("partitions are canonical, covering and distinct", "[partitions][property]") {
    for (int r = 1; r <= 7; ++r) {
        std::set<std::vector<std::vector<int>>> seen;
        for (const auto& p : enumerate_partitions(r)) {
            std::vector<int> all;
            for (std::size_t b = 0; b < p.blocks.size(); ++b) {
                const auto& block = p.blocks[b];
                REQUIRE_FALSE(block.empty());
                CHECK(std::is_sorted(block.begin(), block.end()));
                if (b > 0) CHECK(p.blocks[b - 1].front() < block.front());
                all.insert(all.end(), block.begin(), block.end());
            }
            std::sort(all.begin(), all.end());
            std::vector<int> expect(static_cast<std::size_t>(r));
            std::iota(expect.begin(), expect.end(), 0);
            CHECK(all == expect);
            CHECK(seen.insert(p.blocks).second);
        }
    }
}

TEST_CASE("rank cap", "[partitions]") {
    CHECK(enumerate_partitions(10).size() == 115975);
    try {
        enumerate_partitions(11);
        FAIL("expected RankTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RankTooLarge);
    }
}

TEST_CASE("expansions for small weight vectors", "[expansion]") {
    SECTION("(1,1)") {
        const auto t = hoffman_expand(Weights({1, 1}));
        REQUIRE(t.size() == 2);
        CHECK(t[0].coefficient == 1);
        CHECK(t[0].block_sums == std::vector<double>{1, 1});
        CHECK(t[1].coefficient == -1);
        CHECK(t[1].block_sums == std::vector<double>{2});
    }
    SECTION("(1,1,1)") {
        const auto t = hoffman_expand(Weights({1, 1, 1}));
        REQUIRE(t.size() == 3);
        CHECK(t[0].coefficient == 1);
        CHECK(t[0].block_sums == std::vector<double>{1, 1, 1});
        CHECK(t[1].coefficient == -3);
        CHECK(t[1].block_sums == std::vector<double>{2, 1});
        CHECK(t[2].coefficient == 2);
        CHECK(t[2].block_sums == std::vector<double>{3});
    }
    SECTION("(2,1)") {
        const auto t = hoffman_expand(Weights({2, 1}));
        REQUIRE(t.size() == 2);
        CHECK(t[0].coefficient == 1);
        CHECK(t[0].block_sums == std::vector<double>{2, 1});
        CHECK(t[1].coefficient == -1);
        CHECK(t[1].block_sums == std::vector<double>{3});
    }
}

TEST_CASE("term invariants", "[expansion][property]") {
    oracle::PointSampler rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const int r = 2 + trial % 6;
        std::vector<double> values;
        for (int j = 0; j < r; ++j) values.push_back(trial % 3 == 0 ? 1.0 : rng.uniform(0.1, 3.0));
        const Weights w(values);
        std::int64_t coefficient_sum = 0;
        for (const auto& term : hoffman_expand(w)) {
            coefficient_sum += term.coefficient;
            const double sum = std::accumulate(term.block_sums.begin(), term.block_sums.end(), 0.0);
            CHECK(std::abs(sum - w.total()) <= 1e-12 * w.total());
            CHECK(std::is_sorted(term.block_sums.begin(), term.block_sums.end(), std::greater<>()));
            for (double c : term.block_sums) CHECK(c >= w.smallest() * (1 - 1e-12));
        }
        // sum over partitions of (-1)^(r-l) prod (|P|-1)! vanishes for r >= 2
        CHECK(coefficient_sum == 0);
    }
}

TEST_CASE("unmerged coefficients reproduce the partition formula", "[expansion]") {
    // With distinct incommensurable weights nothing merges: one term per partition.
    const Weights w({std::sqrt(7.0), std::sqrt(3.0), std::sqrt(2.0), 1.0});
    CHECK(hoffman_expand(w).size() == 15);
    std::int64_t abs_total = 0;
    for (const auto& t : hoffman_expand(w)) abs_total += std::abs(t.coefficient);
    // sum over partitions of prod (|P|-1)! counts permutations: 4! = 24
    CHECK(abs_total == 24);
}

TEST_CASE("weights: ordering and derived constants", "[weights]") {
    const Weights w({1, 3, 1, 1});
    CHECK(w.was_reordered());
    CHECK(std::vector<double>(w.values().begin(), w.values().end()) == std::vector<double>{3, 1, 1, 1});
    CHECK(b_constant(w) == 6);
    CHECK(b_constant(Weights({1, 1})) == 2);
    CHECK(b_constant(Weights({2, 1})) == 1);
    CHECK(b_constant(Weights({1, 1, 1, 1, 1})) == 120);
    CHECK(b_constant(Weights({5, 4, 3, 2})) == 1);
    CHECK(m_constant(Weights({1, 1})) == Approx(0.5).epsilon(1e-15));
    CHECK(m_constant(Weights({2, 1})) == Approx(0.5).epsilon(1e-15));
    CHECK(m_constant(Weights({1, 1, 1})) == Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(Weights({2.5, 0.5}).total() == 3.0);
    CHECK_FALSE(Weights({2, 1}).was_reordered());
}

TEST_CASE("weights validation", "[weights]") {
    CHECK_THROWS_AS(Weights({1}), Error);
    CHECK_THROWS_AS(Weights({1, 0}), Error);
    CHECK_THROWS_AS(Weights({1, -2}), Error);
    CHECK_THROWS_AS(Weights({1, std::nan("")}), Error);
}

TEST_CASE("expansion at s = 3 against the truncated multi-sum", "[expansion]") {
    for (const auto& values : {std::vector<double>{1, 1}, {2, 1}, {1, 1, 1}}) {
        const Weights w(values);
        const SymZeta z(w);
        const ComplexPoint expansion = eval_sym(z, {3.0, 0.0});
        const OracleResult direct = multisum_oracle(w, {3.0, 0.0}, 100000);
        INFO("weights rank " << w.rank());
        CHECK(std::abs(expansion - direct.value) / std::abs(expansion) <= 1e-8);
    }
}
