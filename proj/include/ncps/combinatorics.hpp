#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncps/coefficient.hpp"
#include "ncps/word.hpp"

namespace ncps {

// Extraction of a subword together with the maximal interval blocks of the
// complementary positions, in left-to-right order.
struct SubsetSplit {
    std::vector<int> subset; // ascending 1-based positions
    Word extracted;          // letters at the subset positions
    TensorWord blocks;       // complement split into maximal intervals
};

SubsetSplit subset_split(const Word& w, const std::vector<int>& subset);

// All 2^n subsets of {1..n} in binary counter order (bit i-1 <-> element i).
std::vector<std::vector<int>> enumerate_subsets(int n);

inline constexpr int kNonCrossingCap = 12;

class NonCrossingPartition {
public:
    // Blocks are sorted internally and ordered by smallest element; they must
    // partition {1..n} without crossings.
    NonCrossingPartition(int n, std::vector<std::vector<int>> blocks);

    int ground_size() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    bool operator==(const NonCrossingPartition&) const = default;
    bool operator<(const NonCrossingPartition& other) const { return blocks_ < other.blocks_; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

// True when some a<b<c<d has a,c in one block and b,d in another.
bool is_crossing(const std::vector<std::vector<int>>& blocks);

// All non-crossing partitions of {1..n}, deterministically ordered
// (lexicographic on the block-leader canonical form).
std::vector<NonCrossingPartition> non_crossing_partitions(int n, int cap = kNonCrossingCap);

// All deconcatenations w = u.v with v non-empty, prefixes ascending.
std::vector<std::pair<Word, Word>> prefix_splits(const Word& w);

// Unlabeled non-planar rooted tree in canonical form: children sorted by
// (size, encoding) so equality is structural isomorphism.
class RootedTree {
public:
    RootedTree();
    explicit RootedTree(std::vector<RootedTree> children);

    int size() const { return size_; }
    const std::vector<RootedTree>& children() const { return children_; }
    const std::string& encoding() const { return encoding_; }

    bool operator==(const RootedTree& other) const { return encoding_ == other.encoding_; }
    bool operator<(const RootedTree& other) const {
        if (size_ != other.size_) return size_ < other.size_;
        return encoding_ < other.encoding_;
    }

private:
    std::vector<RootedTree> children_;
    int size_ = 1;
    std::string encoding_;
};

// All canonical rooted trees with at most max_size nodes, ordered by
// (size, encoding).
std::vector<RootedTree> trees_up_to(int max_size);

std::int64_t tree_factorial(const RootedTree& tree);
std::int64_t symmetry_factor(const RootedTree& tree);
// Connes-Moscovici coefficient |tau|! / (tau! * sigma(tau)).
Rational cm_coefficient(const RootedTree& tree);

// Trees obtained by attaching `graft` as a new child of each node of `host`
// (one entry per node, duplicates kept). graft_below_root omits the root.
std::vector<RootedTree> graft_everywhere(const RootedTree& host, const RootedTree& graft);
std::vector<RootedTree> graft_below_root(const RootedTree& host, const RootedTree& graft);

// All words over {1..alphabet} of length 1..max_degree, graded-lex order.
std::vector<Word> all_words(int alphabet, int max_degree);
// All non-unit tensor words of total degree <= max_degree, canonical order.
std::vector<TensorWord> all_tensor_words(int alphabet, int max_degree);

} // namespace ncps
