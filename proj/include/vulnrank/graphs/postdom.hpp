#pragma once

#include <vector>

#include "vulnrank/graphs/cfg.hpp"

namespace vulnrank::graphs {

// Fixed-size bitset over graph nodes.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(int n, bool full = false)
        : n_(n), words_((n + 63) / 64, full ? ~0ull : 0ull) {
        if (full && n % 64)
            words_.back() = (1ull << (n % 64)) - 1;
    }

    void set(int i) { words_[i >> 6] |= 1ull << (i & 63); }
    void clear(int i) { words_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    bool intersect_with(const NodeSet& o) { // returns true if changed
        bool changed = false;
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t nw = words_[w] & o.words_[w];
            changed |= nw != words_[w];
            words_[w] = nw;
        }
        return changed;
    }

    bool unite_with(const NodeSet& o) {
        bool changed = false;
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t nw = words_[w] | o.words_[w];
            changed |= nw != words_[w];
            words_[w] = nw;
        }
        return changed;
    }

    bool operator==(const NodeSet& o) const { return words_ == o.words_; }

    int count() const {
        int c = 0;
        for (uint64_t w : words_)
            c += __builtin_popcountll(w);
        return c;
    }

    int size() const { return n_; }

private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

// pdom[n] = set of nodes post-dominating n (reflexive). Iterative dataflow on
// the reversed CFG; throws GraphError if some node cannot reach exit.
std::vector<NodeSet> postdom_sets(const Cfg& g);

// Immediate post-dominator per node; ipdom[exit] == exit.
std::vector<int> post_dominators(const Cfg& g);
std::vector<int> post_dominators(const Cfg& g, const std::vector<NodeSet>& pdom);

} // namespace vulnrank::graphs
