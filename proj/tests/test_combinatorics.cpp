// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "mgca/combinatorics.hpp"

using namespace mgca;

namespace {

// Stirling numbers of the second kind by the usual recurrence.
Count stirling2(int n, int k)
{
    std::vector<std::vector<Count>> s(static_cast<std::size_t>(n + 1),
                                      std::vector<Count>(static_cast<std::size_t>(k + 1), 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= std::min(i, k); ++j) {
            s[i][j] = static_cast<Count>(j) * s[i - 1][j] + s[i - 1][j - 1];
        }
    }
    return s[n][k];
}

Count choose(int n, int k)
{
    Count r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<Count>(n - k + i) / static_cast<Count>(i);
    }
    return r;
}

// Every labelling of G groups with {unused, 1..C}, reduced to the set of
// canonical families it induces.
std::set<std::vector<std::vector<int>>> brute_families(int g, int c)
{
    std::set<std::vector<std::vector<int>>> out;
    std::vector<int> label(static_cast<std::size_t>(g), 0);
    while (true) {
        std::vector<std::vector<int>> fam(static_cast<std::size_t>(c));
        for (int i = 0; i < g; ++i) {
            if (label[i] > 0) {
                fam[static_cast<std::size_t>(label[i] - 1)].push_back(i);
            }
        }
        if (std::none_of(fam.begin(), fam.end(), [](const auto& s) { return s.empty(); })) {
            std::sort(fam.begin(), fam.end(), [](const auto& a, const auto& b) {
                return a.size() != b.size() ? a.size() > b.size() : a.front() < b.front();
            });
            out.insert(fam);
        }
        int i = 0;
        while (i < g && label[i] == c) {
            label[i] = 0;
            ++i;
        }
        if (i == g) {
            break;
        }
        ++label[i];
    }
    return out;
}

bool admitted(const std::vector<std::vector<int>>& fam, const Selection& sel)
{
    std::size_t hi = 0;
    std::size_t lo = SIZE_MAX;
    for (const auto& s : fam) {
        hi = std::max(hi, s.size());
        lo = std::min(lo, s.size());
    }
    switch (sel.kind) {
    case Selection::Kind::all:
        return true;
    case Selection::Kind::almost_equal:
        return hi - lo <= 1;
    case Selection::Kind::equal:
        return hi == lo;
    case Selection::Kind::fixed:
        return hi == static_cast<std::size_t>(sel.n) && lo == hi;
    }
    return false;
}

}  // namespace

TEST(PaperCount, ReferenceTotals)
{
    EXPECT_EQ(paper_count(7, 3, Selection::all()), 1841U);
    EXPECT_EQ(paper_count(7, 3, Selection::equal()), 280U);
}

TEST(PaperCount, AlmostEqualTermByTerm)
{
    // q = 3..7: 70 + 210 + 315 + 210 + 105; [3,2,2] is 35 * 6 / 2.
    const auto by_q = paper_count_by_q(7, 3, Selection::almost_equal());
    const std::map<int, Count> expected = {{3, 70}, {4, 210}, {5, 315}, {6, 210}, {7, 105}};
    EXPECT_EQ(by_q, expected);
    EXPECT_EQ(paper_count(7, 3, Selection::almost_equal()), 910U);
    EXPECT_EQ(paper_count_term(7, {3, 2, 2}), 105U);
}

TEST(PaperCount, ReferenceBreakdownByTotal)
{
    const auto by_q = paper_count_by_q(7, 3, Selection::all());
    const std::map<int, Count> expected = {{3, 70}, {4, 210}, {5, 525}, {6, 735}, {7, 301}};
    EXPECT_EQ(by_q, expected);
}

TEST(ExactCount, SevenGroupsThreeChannels)
{
    EXPECT_EQ(exact_count(7, 3, Selection::all()), 1701U);
    EXPECT_EQ(exact_count(7, 3, Selection::equal()), 140U);
}

TEST(ExactCount, MatchesStirlingSum)
{
    for (int g = 1; g <= 12; ++g) {
        for (int c = 1; c <= std::min(g, 5); ++c) {
            Count expected = 0;
            for (int q = c; q <= g; ++q) {
                expected += choose(g, q) * stirling2(q, c);
            }
            EXPECT_EQ(exact_count(g, c, Selection::all()), expected) << g << "," << c;
        }
    }
}

TEST(ExactCount, MatchesBruteForceFamiliesPerSelection)
{
    const std::vector<Selection> sels = {Selection::all(), Selection::almost_equal(),
                                         Selection::equal(), Selection::fixed(1),
                                         Selection::fixed(2)};
    for (int g = 1; g <= 8; ++g) {
        for (int c = 1; c <= std::min(g, 4); ++c) {
            const auto fams = brute_families(g, c);
            for (const auto& sel : sels) {
                const auto n = std::count_if(fams.begin(), fams.end(),
                                             [&](const auto& f) { return admitted(f, sel); });
                EXPECT_EQ(exact_count(g, c, sel), static_cast<Count>(n))
                    << g << "," << c << "," << to_string(sel);
            }
        }
    }
}

TEST(Enumeration, PartitionsMatchBruteForce)
{
    for (int g = 1; g <= 8; ++g) {
        for (int c = 1; c <= std::min(g, 4); ++c) {
            std::vector<int> ids(static_cast<std::size_t>(g));
            std::iota(ids.begin(), ids.end(), 0);
            std::set<std::vector<std::vector<int>>> seen;
            std::size_t produced = 0;
            for (const auto& v : enumerate_size_vectors(g, c, Selection::all())) {
                const auto parts = enumerate_partitions(ids, v);
                EXPECT_EQ(parts.size(), static_cast<std::size_t>(exact_count_term(g, v)));
                EXPECT_TRUE(std::is_sorted(parts.begin(), parts.end()));
                for (const auto& p : parts) {
                    EXPECT_EQ(p.sizes(), v);
                    seen.insert(p.subsets);
                    ++produced;
                }
            }
            EXPECT_EQ(seen.size(), produced);
            EXPECT_EQ(seen, brute_families(g, c)) << g << "," << c;
        }
    }
}

TEST(Enumeration, SkipResumesTheSameWalk)
{
    const std::vector<int> ids = {3, 5, 8, 13, 21, 34, 55};
    const SizeVector sizes = {2, 2, 1};
    const auto all = enumerate_partitions(ids, sizes);
    for (std::size_t start : {0UL, 1UL, 17UL, all.size() - 1, all.size()}) {
        PartitionEnumerator it(ids, sizes);
        it.skip(start);
        EXPECT_EQ(it.position(), start);
        std::vector<SubsetCombination> rest;
        while (auto c = it.next()) {
            rest.push_back(*c);
        }
        EXPECT_TRUE(std::equal(rest.begin(), rest.end(), all.begin() + static_cast<long>(start),
                               all.end()));
        EXPECT_EQ(rest.size(), all.size() - start);
    }
}

TEST(Enumeration, RejectsBadInput)
{
    EXPECT_THROW(PartitionEnumerator({1, 1, 2}, {1}), ParameterError);
    EXPECT_THROW(PartitionEnumerator({1, 2, 3}, {1, 2}), ParameterError);
    EXPECT_THROW(PartitionEnumerator({1, 2}, {2, 1}), ParameterError);
    EXPECT_THROW(enumerate_size_vectors(2, 3, Selection::all()), ParameterError);
    EXPECT_THROW(enumerate_size_vectors(5, 2, Selection::fixed(0)), ParameterError);
}

TEST(SizeVectors, SevenThreeAll)
{
    const auto v = enumerate_size_vectors(7, 3, Selection::all());
    const std::vector<SizeVector> expected = {{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {2, 2, 2},
                                              {3, 1, 1}, {3, 2, 1}, {3, 2, 2}, {3, 3, 1},
                                              {4, 1, 1}, {4, 2, 1}, {5, 1, 1}};
    EXPECT_EQ(v, expected);
    EXPECT_EQ(enumerate_size_vectors(7, 3, Selection::equal()),
              (std::vector<SizeVector>{{1, 1, 1}, {2, 2, 2}}));
    EXPECT_EQ(enumerate_size_vectors(7, 3, Selection::fixed(2)), (std::vector<SizeVector>{{2, 2, 2}}));
    EXPECT_TRUE(enumerate_size_vectors(7, 3, Selection::fixed(3)).empty());
}

TEST(SearchSpace, IncludesChannelPermutations)
{
    EXPECT_EQ(allocation_search_space(3, 3, Selection::all()), 12U);
    EXPECT_EQ(allocation_search_space(7, 3, Selection::all()), 1841U * 6U);
}

TEST(LowerBound, HandValueAndBelowSearchSpace)
{
    // n = 1: 7*6*5/3 = 70, n = 2: 21*10*3/3 = 210
    EXPECT_EQ(complexity_lower_bound(7, 3), (70U + 210U) * 6U);
    for (int g = 2; g <= 14; ++g) {
        for (int c = 1; c <= std::min(g, 5); ++c) {
            EXPECT_LE(complexity_lower_bound(g, c), allocation_search_space(g, c, Selection::all()))
                << g << "," << c;
        }
    }
}

TEST(Counts, OverflowIsReported)
{
    EXPECT_THROW(exact_count(60, 20, Selection::all()), ParameterError);
}

TEST(Strings, Rendering)
{
    EXPECT_EQ(to_string(SizeVector{3, 2, 1}), "[3,2,1]");
    EXPECT_EQ(to_string(Selection::fixed(2)), "fixed:2");
}
