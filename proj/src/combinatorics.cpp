#include "ncps/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ncps {

SubsetSplit subset_split(const Word& w, const std::vector<int>& subset) {
    if (w.empty()) throw std::invalid_argument("subset_split requires a non-empty word");
    const int n = w.length();
    int previous = 0;
    for (int pos : subset) {
        if (pos < 1 || pos > n) throw std::invalid_argument("subset index out of range");
        if (pos <= previous) throw std::invalid_argument("subset must be strictly increasing");
        previous = pos;
    }

    SubsetSplit split;
    split.subset = subset;
    split.extracted = w.subword(subset);

    std::vector<bool> in_subset(static_cast<size_t>(n + 1), false);
    for (int pos : subset) in_subset[static_cast<size_t>(pos)] = true;

    std::vector<Word> blocks;
    std::vector<int> run;
    for (int pos = 1; pos <= n; ++pos) {
        if (in_subset[static_cast<size_t>(pos)]) {
            if (!run.empty()) {
                blocks.push_back(w.subword(run));
                run.clear();
            }
        } else {
            run.push_back(pos);
        }
    }
    if (!run.empty()) blocks.push_back(w.subword(run));
    split.blocks = TensorWord(std::move(blocks));
    return split;
}

std::vector<std::vector<int>> enumerate_subsets(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_subsets requires n >= 1");
    if (n > 24) throw std::invalid_argument("enumerate_subsets cap exceeded (n <= 24)");
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<size_t>(1) << n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) subset.push_back(i + 1);
        }
        out.push_back(std::move(subset));
    }
    return out;
}

NonCrossingPartition::NonCrossingPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    std::vector<bool> seen(static_cast<size_t>(n + 1), false);
    int covered = 0;
    for (auto& block : blocks_) {
        if (block.empty()) throw std::invalid_argument("empty block in partition");
        std::sort(block.begin(), block.end());
        for (int x : block) {
            if (x < 1 || x > n || seen[static_cast<size_t>(x)])
                throw std::invalid_argument("blocks must partition {1..n}");
            seen[static_cast<size_t>(x)] = true;
            ++covered;
        }
    }
    if (covered != n) throw std::invalid_argument("blocks must cover {1..n}");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    if (is_crossing(blocks_)) throw std::invalid_argument("partition has a crossing");
}

bool is_crossing(const std::vector<std::vector<int>>& blocks) {
    const size_t count = blocks.size();
    for (size_t i = 0; i < count; ++i) {
        for (size_t j = 0; j < count; ++j) {
            if (i == j) continue;
            // a < b < c < d with a,c in blocks[i] and b,d in blocks[j]?
            for (int a : blocks[i]) {
                for (int c : blocks[i]) {
                    if (c <= a) continue;
                    bool has_b = false;
                    bool has_d = false;
                    for (int x : blocks[j]) {
                        if (x > a && x < c) has_b = true;
                        if (x > c) has_d = true;
                    }
                    if (has_b && has_d) return true;
                }
            }
        }
    }
    return false;
}

namespace {

// Non-crossing partitions of an arbitrary ascending position list. The block
// of the first element is chosen; crossings confine every other block to a
// single run of positions between consecutive chosen elements.
void ncp_positions(const std::vector<int>& positions,
                   std::vector<std::vector<std::vector<int>>>& out) {
    if (positions.empty()) {
        out.push_back({});
        return;
    }
    const int m = static_cast<int>(positions.size()) - 1; // choices among the rest
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> block{positions[0]};
        std::vector<std::vector<int>> runs;
        std::vector<int> run;
        for (int i = 0; i < m; ++i) {
            if (mask & (1u << i)) {
                block.push_back(positions[static_cast<size_t>(i + 1)]);
                if (!run.empty()) {
                    runs.push_back(std::move(run));
                    run.clear();
                }
            } else {
                run.push_back(positions[static_cast<size_t>(i + 1)]);
            }
        }
        if (!run.empty()) runs.push_back(std::move(run));

        // Cartesian product of the runs' partitions.
        std::vector<std::vector<std::vector<int>>> partial{{block}};
        for (const auto& segment : runs) {
            std::vector<std::vector<std::vector<int>>> inner;
            ncp_positions(segment, inner);
            std::vector<std::vector<std::vector<int>>> next;
            next.reserve(partial.size() * inner.size());
            for (const auto& left : partial) {
                for (const auto& right : inner) {
                    auto combined = left;
                    combined.insert(combined.end(), right.begin(), right.end());
                    next.push_back(std::move(combined));
                }
            }
            partial = std::move(next);
        }
        for (auto& partition : partial) out.push_back(std::move(partition));
    }
}

} // namespace

std::vector<NonCrossingPartition> non_crossing_partitions(int n, int cap) {
    if (n < 1) throw std::invalid_argument("non_crossing_partitions requires n >= 1");
    if (n > cap) throw std::invalid_argument("non_crossing_partitions cap exceeded");
    std::vector<int> positions(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) positions[static_cast<size_t>(i)] = i + 1;
    std::vector<std::vector<std::vector<int>>> raw;
    ncp_positions(positions, raw);
    std::vector<NonCrossingPartition> out;
    out.reserve(raw.size());
    for (auto& blocks : raw) out.emplace_back(n, std::move(blocks));
    std::sort(out.begin(), out.end(),
              [](const NonCrossingPartition& a, const NonCrossingPartition& b) { return a < b; });
    return out;
}

std::vector<std::pair<Word, Word>> prefix_splits(const Word& w) {
    if (w.empty()) throw std::invalid_argument("prefix_splits requires a non-empty word");
    std::vector<std::pair<Word, Word>> out;
    out.reserve(static_cast<size_t>(w.length()));
    for (int k = 0; k < w.length(); ++k) {
        out.emplace_back(w.prefix(k), w.suffix_from(k));
    }
    return out;
}

RootedTree::RootedTree() : size_(1), encoding_("[]") {}

RootedTree::RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {
    std::sort(children_.begin(), children_.end());
    size_ = 1;
    encoding_ = "[";
    for (const RootedTree& child : children_) {
        size_ += child.size_;
        encoding_ += child.encoding_;
    }
    encoding_ += "]";
}

std::vector<RootedTree> trees_up_to(int max_size) {
    if (max_size < 1) throw std::invalid_argument("trees_up_to requires max_size >= 1");
    std::vector<RootedTree> all{RootedTree()};
    for (int size = 2; size <= max_size; ++size) {
        // Root plus a non-decreasing multiset of earlier trees totalling size-1.
        std::vector<RootedTree> stack;
        auto emit = [&](auto&& self, size_t start, int remaining) -> void {
            if (remaining == 0) {
                all.emplace_back(stack);
                return;
            }
            for (size_t i = start; i < all.size(); ++i) {
                if (all[i].size() > remaining) break; // list is size-sorted
                stack.push_back(all[i]);
                self(self, i, remaining - all[i].size());
                stack.pop_back();
            }
        };
        emit(emit, 0, size - 1);
        std::sort(all.begin(), all.end());
    }
    return all;
}

std::int64_t tree_factorial(const RootedTree& tree) {
    std::int64_t acc = tree.size();
    for (const RootedTree& child : tree.children()) acc *= tree_factorial(child);
    return acc;
}

std::int64_t symmetry_factor(const RootedTree& tree) {
    std::int64_t acc = 1;
    size_t i = 0;
    const auto& children = tree.children();
    while (i < children.size()) {
        size_t j = i;
        while (j < children.size() && children[j] == children[i]) ++j;
        const auto multiplicity = static_cast<std::int64_t>(j - i);
        for (std::int64_t k = 2; k <= multiplicity; ++k) acc *= k;
        const std::int64_t child_sigma = symmetry_factor(children[i]);
        for (std::int64_t k = 0; k < multiplicity; ++k) acc *= child_sigma;
        i = j;
    }
    return acc;
}

Rational cm_coefficient(const RootedTree& tree) {
    return factorial(tree.size()) /
           (Rational(tree_factorial(tree)) * Rational(symmetry_factor(tree)));
}

std::vector<RootedTree> graft_everywhere(const RootedTree& host, const RootedTree& graft) {
    std::vector<RootedTree> out;
    auto at_root = host.children();
    at_root.push_back(graft);
    out.emplace_back(std::move(at_root));
    auto below = graft_below_root(host, graft);
    out.insert(out.end(), below.begin(), below.end());
    return out;
}

std::vector<RootedTree> graft_below_root(const RootedTree& host, const RootedTree& graft) {
    std::vector<RootedTree> out;
    const auto& children = host.children();
    for (size_t i = 0; i < children.size(); ++i) {
        for (const RootedTree& replacement : graft_everywhere(children[i], graft)) {
            auto new_children = children;
            new_children[i] = replacement;
            out.emplace_back(std::move(new_children));
        }
    }
    return out;
}

std::vector<Word> all_words(int alphabet, int max_degree) {
    if (alphabet < 1) throw std::invalid_argument("alphabet must be positive");
    std::vector<Word> out;
    for (int length = 1; length <= max_degree; ++length) {
        std::vector<int> odometer(static_cast<size_t>(length), 1);
        while (true) {
            out.push_back(Word(odometer));
            int pos = length - 1;
            while (pos >= 0 && odometer[static_cast<size_t>(pos)] == alphabet) {
                odometer[static_cast<size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++odometer[static_cast<size_t>(pos)];
        }
    }
    return out;
}

std::vector<TensorWord> all_tensor_words(int alphabet, int max_degree) {
    std::vector<TensorWord> out;
    std::vector<Word> words = all_words(alphabet, max_degree);
    // Group the words by length for composition-wise assembly.
    std::map<int, std::vector<Word>> by_length;
    for (const Word& w : words) by_length[w.length()].push_back(w);

    std::vector<Word> stack;
    auto emit = [&](auto&& self, int remaining) -> void {
        if (!stack.empty()) out.push_back(TensorWord(stack));
        for (auto& [length, bucket] : by_length) {
            if (length > remaining) break;
            for (const Word& w : bucket) {
                stack.push_back(w);
                self(self, remaining - length);
                stack.pop_back();
            }
        }
    };
    emit(emit, max_degree);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ncps
