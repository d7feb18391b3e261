#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "ncps/combinatorics.hpp"

using namespace ncps;

namespace {

Word make_word(std::initializer_list<int> letters) { return Word(std::vector<int>(letters)); }

// Independent generator for the tree counts: parent arrays with parent(i) < i
// enumerate every increasing labeling, so deduplicating canonical forms yields
// every unlabeled rooted tree.
std::set<std::string> trees_by_parent_arrays(int n) {
    std::set<std::string> shapes;
    std::vector<int> parent(static_cast<size_t>(n), -1);
    auto build = [&]() {
        std::vector<std::vector<int>> children(static_cast<size_t>(n));
        for (int i = 1; i < n; ++i)
            children[static_cast<size_t>(parent[static_cast<size_t>(i)])].push_back(i);
        auto make = [&](auto&& self, int node) -> RootedTree {
            std::vector<RootedTree> kids;
            for (int child : children[static_cast<size_t>(node)]) kids.push_back(self(self, child));
            return RootedTree(std::move(kids));
        };
        shapes.insert(make(make, 0).encoding());
    };
    auto recurse = [&](auto&& self, int i) -> void {
        if (i == n) {
            build();
            return;
        }
        for (int p = 0; p < i; ++p) {
            parent[static_cast<size_t>(i)] = p;
            self(self, i + 1);
        }
    };
    recurse(recurse, 1);
    return shapes;
}

// All set partitions via restricted growth strings, for the crossing filter.
std::vector<std::vector<std::vector<int>>> all_set_partitions(int n) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> assignment(static_cast<size_t>(n), 0);
    auto recurse = [&](auto&& self, int index, int max_block) -> void {
        if (index == n) {
            std::vector<std::vector<int>> blocks(static_cast<size_t>(max_block));
            for (int i = 0; i < n; ++i)
                blocks[static_cast<size_t>(assignment[static_cast<size_t>(i)])].push_back(i + 1);
            out.push_back(std::move(blocks));
            return;
        }
        for (int block = 0; block <= max_block; ++block) {
            assignment[static_cast<size_t>(index)] = block;
            self(self, index + 1, std::max(max_block, block + 1));
        }
    };
    recurse(recurse, 0, 0);
    return out;
}

RootedTree node(std::vector<RootedTree> children) { return RootedTree(std::move(children)); }

const RootedTree leaf{};
const RootedTree ladder2 = node({leaf});
const RootedTree ladder3 = node({ladder2});
const RootedTree cherry = node({leaf, leaf});

} // namespace

TEST_CASE("word ordering is graded lexicographic") {
    CHECK(Word() < make_word({1}));
    CHECK(make_word({2}) < make_word({1, 1}));
    CHECK(make_word({1, 2}) < make_word({2, 1}));
    CHECK(make_word({1, 2}).concat(make_word({3})) == make_word({1, 2, 3}));
    CHECK_THROWS_AS(Word({0}), std::invalid_argument);
}

TEST_CASE("tensor words reject empty factors and order by degree") {
    CHECK(TensorWord().is_unit());
    CHECK(TensorWord::from_word(Word()).is_unit());
    CHECK_THROWS_AS(TensorWord({Word()}), std::invalid_argument);
    const TensorWord ab({make_word({1}), make_word({2})});
    CHECK(ab.total_degree() == 2);
    CHECK(TensorWord::from_word(make_word({1, 2})) < ab); // fewer factors first
    CHECK(to_string(ab) == "1|2");
}

TEST_CASE("subset_split extracts the subword and interval blocks") {
    const Word abc = make_word({1, 2, 3});
    SUBCASE("middle position") {
        const auto split = subset_split(abc, {2});
        CHECK(split.extracted == make_word({2}));
        CHECK(split.blocks == TensorWord({make_word({1}), make_word({3})}));
    }
    SUBCASE("full subset yields no blocks") {
        const auto split = subset_split(make_word({1, 2}), {1, 2});
        CHECK(split.extracted == make_word({1, 2}));
        CHECK(split.blocks.is_unit());
    }
    SUBCASE("empty subset yields one block") {
        const auto split = subset_split(make_word({1, 2}), {});
        CHECK(split.extracted.empty());
        CHECK(split.blocks == TensorWord({make_word({1, 2})}));
    }
    CHECK_THROWS_AS(subset_split(abc, {4}), std::invalid_argument);
    CHECK_THROWS_AS(subset_split(Word(), {}), std::invalid_argument);
}

TEST_CASE("subset degree bookkeeping over all subsets") {
    const Word w = make_word({1, 2, 1, 2});
    long long total = 0;
    for (const auto& subset : enumerate_subsets(w.length())) {
        const auto split = subset_split(w, subset);
        total += split.extracted.length() + split.blocks.total_degree();
        for (const Word& block : split.blocks.factors()) CHECK(!block.empty());
    }
    CHECK(total == 4ll << 4);
}

TEST_CASE("enumerate_subsets uses binary counter order") {
    const auto one = enumerate_subsets(1);
    REQUIRE(one.size() == 2);
    CHECK(one[0].empty());
    CHECK(one[1] == std::vector<int>{1});
    CHECK(enumerate_subsets(2).size() == 4);
    CHECK(enumerate_subsets(10).size() == 1024);
}

TEST_CASE("non-crossing partitions match the filter oracle") {
    const std::vector<long long> catalan{1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 1; n <= 8; ++n) {
        const auto produced = non_crossing_partitions(n);
        CHECK(static_cast<long long>(produced.size()) == catalan[static_cast<size_t>(n - 1)]);
        std::vector<NonCrossingPartition> filtered;
        for (auto& blocks : all_set_partitions(n)) {
            if (!is_crossing(blocks)) filtered.emplace_back(n, std::move(blocks));
        }
        std::sort(filtered.begin(), filtered.end());
        REQUIRE(filtered.size() == produced.size());
        CHECK(std::equal(filtered.begin(), filtered.end(), produced.begin()));
    }
    CHECK(non_crossing_partitions(1).size() == 1);
    CHECK_THROWS_AS(non_crossing_partitions(13), std::invalid_argument);
    CHECK_THROWS_AS(NonCrossingPartition(4, {{1, 3}, {2, 4}}), std::invalid_argument);
}

TEST_CASE("prefix splits") {
    CHECK(prefix_splits(make_word({1})) ==
          std::vector<std::pair<Word, Word>>{{Word(), make_word({1})}});
    const auto splits = prefix_splits(make_word({1, 2}));
    REQUIRE(splits.size() == 2);
    CHECK(splits[0] == std::pair<Word, Word>{Word(), make_word({1, 2})});
    CHECK(splits[1] == std::pair<Word, Word>{make_word({1}), make_word({2})});
    CHECK(prefix_splits(make_word({1, 2, 3})).size() == 3);
}

TEST_CASE("tree generation matches the parent-array oracle") {
    const std::vector<size_t> expected{1, 1, 2, 4, 9, 20, 48}; // A000081 prefix
    const auto trees = trees_up_to(7);
    std::map<int, std::set<std::string>> by_size;
    for (const RootedTree& tree : trees) {
        // Canonicalization is idempotent.
        CHECK(RootedTree(tree.children()) == tree);
        by_size[tree.size()].insert(tree.encoding());
    }
    for (int n = 1; n <= 7; ++n) {
        CHECK(by_size[n].size() == expected[static_cast<size_t>(n - 1)]);
        CHECK(by_size[n] == trees_by_parent_arrays(n));
    }
}

TEST_CASE("tree counts at the spec sizes") {
    CHECK(trees_up_to(1).size() == 1);
    CHECK(trees_up_to(3).size() == 4);
    CHECK(trees_up_to(4).size() == 8);
}

TEST_CASE("tree statistics") {
    CHECK(tree_factorial(leaf) == 1);
    CHECK(tree_factorial(ladder2) == 2);
    CHECK(tree_factorial(cherry) == 3);
    CHECK(tree_factorial(ladder3) == 6);

    CHECK(symmetry_factor(leaf) == 1);
    CHECK(symmetry_factor(cherry) == 2);
    CHECK(symmetry_factor(ladder3) == 1);

    CHECK(cm_coefficient(leaf) == 1);
    CHECK(cm_coefficient(ladder2) == 1);
    CHECK(cm_coefficient(cherry) == 1);

    for (const RootedTree& tree : trees_up_to(7)) {
        CHECK(cm_coefficient(tree) * Rational(tree_factorial(tree)) *
                  Rational(symmetry_factor(tree)) ==
              factorial(tree.size()));
    }
}

TEST_CASE("grafting") {
    const auto at_leaf = graft_everywhere(leaf, leaf);
    REQUIRE(at_leaf.size() == 1);
    CHECK(at_leaf[0] == ladder2);

    // ladder2 <| leaf grafts at both nodes: cherry at the root, ladder3 below.
    auto grafts = graft_everywhere(ladder2, leaf);
    REQUIRE(grafts.size() == 2);
    std::sort(grafts.begin(), grafts.end());
    CHECK(grafts[0] == ladder3);
    CHECK(grafts[1] == cherry);

    const auto below = graft_below_root(ladder2, leaf);
    REQUIRE(below.size() == 1);
    CHECK(below[0] == ladder3);

    // Grafting multiplicities: node count of the host.
    for (const RootedTree& host : trees_up_to(5)) {
        CHECK(graft_everywhere(host, ladder2).size() == static_cast<size_t>(host.size()));
    }
}

TEST_CASE("word and tensor word enumeration") {
    CHECK(all_words(2, 3).size() == 2 + 4 + 8);
    const auto words = all_words(2, 2);
    REQUIRE(words.size() == 6);
    CHECK(words.front() == make_word({1}));
    CHECK(words.back() == make_word({2, 2}));
    CHECK(std::is_sorted(words.begin(), words.end()));

    // Tensor words of total degree <= n over d letters: sum d^k 2^(k-1).
    CHECK(all_tensor_words(2, 3).size() == 2 + 8 + 32);
    CHECK(all_tensor_words(1, 4).size() == 1 + 2 + 4 + 8);
    const auto tensors = all_tensor_words(2, 2);
    CHECK(std::is_sorted(tensors.begin(), tensors.end()));
}
