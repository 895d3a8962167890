#pragma once

#include <string>
#include <vector>

#include "vulnrank/util/mat.hpp"

namespace vulnrank::neural {

// Flat storage for named parameter tensors. One contiguous buffer keeps the
// optimizer, serialization and finite-difference checks uniform; layers see
// their tensors through Eigen maps.
template <class S>
class ParamStore {
public:
    struct Entry {
        std::string name;
        size_t offset = 0;
        int rows = 0, cols = 0;
        bool is_bias = false;
    };

    size_t add(std::string name, int rows, int cols, bool is_bias = false) {
        entries_.push_back({std::move(name), total_, rows, cols, is_bias});
        total_ += static_cast<size_t>(rows) * static_cast<size_t>(cols);
        return entries_.size() - 1;
    }

    void allocate() { values_.assign(total_, S(0)); }
    void zero() { std::fill(values_.begin(), values_.end(), S(0)); }

    Eigen::Map<RowMat<S>> mat(size_t i) {
        const Entry& e = entries_[i];
        return {values_.data() + e.offset, e.rows, e.cols};
    }
    Eigen::Map<const RowMat<S>> mat(size_t i) const {
        const Entry& e = entries_[i];
        return {values_.data() + e.offset, e.rows, e.cols};
    }

    const std::vector<Entry>& entries() const { return entries_; }
    std::vector<S>& values() { return values_; }
    const std::vector<S>& values() const { return values_; }
    size_t size() const { return total_; }

    const Entry* find(const std::string& name) const {
        for (const auto& e : entries_)
            if (e.name == name)
                return &e;
        return nullptr;
    }

private:
    std::vector<Entry> entries_;
    std::vector<S> values_;
    size_t total_ = 0;
};

} // namespace vulnrank::neural
