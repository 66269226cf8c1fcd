#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace minorsum {

/// A sorted k-subset of [n] with 1-based elements. k = 0 is allowed.
class IndexSet {
  public:
    IndexSet() = default;

    IndexSet(std::vector<int> elements, int universe) : elems_(std::move(elements)), universe_(universe) {
        if (universe_ < 0) throw std::invalid_argument("IndexSet: negative universe");
        int prev = 0;
        for (int e : elems_) {
            if (e <= prev) throw std::invalid_argument("IndexSet: elements must be strictly increasing and >= 1");
            if (e > universe_) throw std::invalid_argument("IndexSet: element " + std::to_string(e) + " exceeds universe " + std::to_string(universe_));
            prev = e;
        }
    }

    std::size_t size() const { return elems_.size(); }
    int universe() const { return universe_; }
    const std::vector<int>& elements() const { return elems_; }

    bool contains(int t) const {
        for (int e : elems_) {
            if (e == t) return true;
            if (e > t) break;
        }
        return false;
    }

    /// Element at 1-based position p within the ascending order.
    int at(int p) const {
        if (p < 1 || static_cast<std::size_t>(p) > elems_.size())
            throw std::invalid_argument("IndexSet: position out of range");
        return elems_[static_cast<std::size_t>(p) - 1];
    }

    /// The subset {at(p) : p in positions}; positions is a sorted subset of
    /// [size()]. Used for the position-selection step of the sum expansion.
    IndexSet select(const IndexSet& positions) const {
        if (positions.universe() != static_cast<int>(size()))
            throw std::invalid_argument("IndexSet::select: position universe must equal set size");
        std::vector<int> out;
        out.reserve(positions.size());
        for (int p : positions.elements()) out.push_back(at(p));
        return IndexSet(std::move(out), universe_);
    }

    /// [universe] minus this set.
    IndexSet complement() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(universe_) - elems_.size());
        std::size_t i = 0;
        for (int v = 1; v <= universe_; ++v) {
            if (i < elems_.size() && elems_[i] == v) {
                ++i;
            } else {
                out.push_back(v);
            }
        }
        return IndexSet(std::move(out), universe_);
    }

    long element_sum() const {
        long s = 0;
        for (int e : elems_) s += e;
        return s;
    }

    friend bool operator==(const IndexSet& a, const IndexSet& b) {
        return a.universe_ == b.universe_ && a.elems_ == b.elems_;
    }

  private:
    std::vector<int> elems_;
    int universe_ = 0;
};

/// All k-subsets of [n] in lexicographic order of their sorted element
/// lists; this is the ordering used to index compound-matrix rows/columns.
inline std::vector<IndexSet> all_subsets(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("all_subsets: negative argument");
    std::vector<IndexSet> out;
    if (k > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.emplace_back(cur, n);
        // advance the rightmost element that still has headroom
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace minorsum
