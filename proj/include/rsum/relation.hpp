#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rsum/integer_set.hpp"
#include "rsum/residue_set.hpp"

namespace rsum {

/// Bipartite set of forbidden pairs R ⊆ A × B with exact degree indexes on
/// both sides. Pairs are kept sorted, so iteration order is canonical.
class Relation {
public:
    using Pair = std::pair<long long, long long>;

    Relation() = default;

    explicit Relation(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
        std::sort(pairs_.begin(), pairs_.end());
        pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
        for (const auto& [a, b] : pairs_) {
            ++deg_a_[a];
            ++deg_b_[b];
        }
    }

    const std::vector<Pair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }

    bool contains(long long a, long long b) const {
        return std::binary_search(pairs_.begin(), pairs_.end(), Pair{a, b});
    }

    int degree_a(long long a) const {
        auto it = deg_a_.find(a);
        return it == deg_a_.end() ? 0 : it->second;
    }
    int degree_b(long long b) const {
        auto it = deg_b_.find(b);
        return it == deg_b_.end() ? 0 : it->second;
    }

    int max_degree_a() const { return max_of(deg_a_); }
    int max_degree_b() const { return max_of(deg_b_); }

    bool is_symmetric() const {
        for (const auto& [a, b] : pairs_)
            if (!contains(b, a)) return false;
        return true;
    }

    Relation translated(long long da, long long db) const {
        std::vector<Pair> out;
        out.reserve(pairs_.size());
        for (const auto& [a, b] : pairs_) out.emplace_back(a + da, b + db);
        return Relation(std::move(out));
    }

    void require_within(const IntegerSet& a, const IntegerSet& b) const {
        for (const auto& [x, y] : pairs_)
            if (!a.contains(x) || !b.contains(y))
                throw std::invalid_argument("relation references elements outside A or B");
    }

    void require_within(const ResidueSet& a, const ResidueSet& b) const {
        for (const auto& [x, y] : pairs_)
            if (!a.contains(x) || !b.contains(y))
                throw std::invalid_argument("relation references elements outside A or B");
    }

    bool operator==(const Relation& o) const { return pairs_ == o.pairs_; }

private:
    static int max_of(const std::map<long long, int>& m) {
        int best = 0;
        for (const auto& [k, v] : m) best = std::max(best, v);
        return best;
    }

    std::vector<Pair> pairs_;
    std::map<long long, int> deg_a_, deg_b_;
};

/// Degree regime a relation must satisfy. FunctionBtoA coincides with
/// DegreeOnB(1) for feasibility; MatchingBtoA with DegreeBoth(1). The two
/// named kinds additionally ask search witnesses to be extended to total
/// maps where possible.
struct RelationConstraint {
    enum class Kind { DegreeOnB, DegreeBoth, FunctionBtoA, MatchingBtoA };

    Kind kind = Kind::DegreeOnB;
    int degree = 1;

    static RelationConstraint degree_on_b(int d) { return make(Kind::DegreeOnB, d); }
    static RelationConstraint degree_both(int d) { return make(Kind::DegreeBoth, d); }
    static RelationConstraint function_b_to_a() { return {Kind::FunctionBtoA, 1}; }
    static RelationConstraint matching_b_to_a() { return {Kind::MatchingBtoA, 1}; }

    int limit_a() const {
        switch (kind) {
            case Kind::DegreeOnB: return INT_MAX;
            case Kind::DegreeBoth: return degree;
            case Kind::FunctionBtoA: return INT_MAX;
            case Kind::MatchingBtoA: return 1;
        }
        return INT_MAX;
    }
    int limit_b() const {
        switch (kind) {
            case Kind::DegreeOnB: return degree;
            case Kind::DegreeBoth: return degree;
            case Kind::FunctionBtoA: return 1;
            case Kind::MatchingBtoA: return 1;
        }
        return 1;
    }

    bool wants_total_function() const { return kind == Kind::FunctionBtoA; }
    bool wants_total_matching() const { return kind == Kind::MatchingBtoA; }

    std::string name() const {
        switch (kind) {
            case Kind::DegreeOnB: return "deg-b:" + std::to_string(degree);
            case Kind::DegreeBoth: return "deg-both:" + std::to_string(degree);
            case Kind::FunctionBtoA: return "function-b";
            case Kind::MatchingBtoA: return "matching";
        }
        return "?";
    }

    static RelationConstraint parse(const std::string& text) {
        if (text == "function-b") return function_b_to_a();
        if (text == "matching") return matching_b_to_a();
        if (text.rfind("deg-b:", 0) == 0) return degree_on_b(std::stoi(text.substr(6)));
        if (text.rfind("deg-both:", 0) == 0) return degree_both(std::stoi(text.substr(9)));
        throw std::invalid_argument("unknown constraint: " + text);
    }

    bool satisfied_by(const Relation& r) const {
        return r.max_degree_a() <= limit_a() && r.max_degree_b() <= limit_b();
    }

private:
    static RelationConstraint make(Kind k, int d) {
        if (d < 1) throw std::invalid_argument("degree bound must be positive");
        return {k, d};
    }
};

} // namespace rsum
