#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsum {

/// Finite subset of Z, stored strictly increasing and duplicate-free.
class IntegerSet {
public:
    IntegerSet() = default;
    explicit IntegerSet(std::vector<long long> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }
    IntegerSet(std::initializer_list<long long> members) : IntegerSet(std::vector<long long>(members)) {}

    /// Closed integer interval [lo, hi]; empty when lo > hi.
    static IntegerSet interval(long long lo, long long hi) {
        std::vector<long long> v;
        if (lo <= hi) {
            v.reserve(static_cast<std::size_t>(hi - lo + 1));
            for (long long x = lo; x <= hi; ++x) v.push_back(x);
        }
        IntegerSet s;
        s.members_ = std::move(v);
        return s;
    }

    const std::vector<long long>& elements() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool contains(long long x) const {
        return std::binary_search(members_.begin(), members_.end(), x);
    }

    long long min() const {
        if (empty()) throw std::invalid_argument("min of empty set");
        return members_.front();
    }
    long long max() const {
        if (empty()) throw std::invalid_argument("max of empty set");
        return members_.back();
    }

    IntegerSet translate(long long c) const {
        IntegerSet out;
        out.members_.reserve(members_.size());
        for (long long x : members_) out.members_.push_back(x + c);
        return out;
    }

    IntegerSet negate() const {
        IntegerSet out;
        out.members_.reserve(members_.size());
        for (auto it = members_.rbegin(); it != members_.rend(); ++it) out.members_.push_back(-*it);
        return out;
    }

    IntegerSet unite(const IntegerSet& o) const {
        std::vector<long long> v;
        v.reserve(members_.size() + o.members_.size());
        std::set_union(members_.begin(), members_.end(), o.members_.begin(), o.members_.end(),
                       std::back_inserter(v));
        IntegerSet out;
        out.members_ = std::move(v);
        return out;
    }

    IntegerSet intersect(const IntegerSet& o) const {
        std::vector<long long> v;
        std::set_intersection(members_.begin(), members_.end(), o.members_.begin(), o.members_.end(),
                              std::back_inserter(v));
        IntegerSet out;
        out.members_ = std::move(v);
        return out;
    }

    IntegerSet difference(const IntegerSet& o) const {
        std::vector<long long> v;
        std::set_difference(members_.begin(), members_.end(), o.members_.begin(), o.members_.end(),
                            std::back_inserter(v));
        IntegerSet out;
        out.members_ = std::move(v);
        return out;
    }

    bool subset_of(const IntegerSet& o) const {
        return std::includes(o.members_.begin(), o.members_.end(), members_.begin(), members_.end());
    }

    bool operator==(const IntegerSet& o) const { return members_ == o.members_; }
    bool operator!=(const IntegerSet& o) const { return !(*this == o); }

private:
    std::vector<long long> members_;
};

} // namespace rsum
