#ifndef CREMFOL_SYMBOLS_HPP
#define CREMFOL_SYMBOLS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cremfol {

using SymbolId = std::size_t;

/// Ordered symbol universe of a computation: geometric variables first
/// (x,y,z or X,Y,Z), parameter symbols after them.  The partition and the
/// index order are fixed at construction, which makes every term order and
/// serialization deterministic.
class SymbolTable {
public:
    SymbolTable(std::vector<std::string> geometric, std::vector<std::string> parameters = {})
        : names_(std::move(geometric)), geo_count_(names_.size()) {
        names_.insert(names_.end(), parameters.begin(), parameters.end());
        for (SymbolId i = 0; i < names_.size(); ++i) {
            if (!index_.emplace(names_[i], i).second)
                throw std::invalid_argument("duplicate symbol name: " + names_[i]);
        }
    }

    std::size_t size() const { return names_.size(); }
    std::size_t geometric_count() const { return geo_count_; }
    bool is_geometric(SymbolId id) const { return id < geo_count_; }
    bool is_parameter(SymbolId id) const { return id >= geo_count_; }

    const std::string& name(SymbolId id) const { return names_.at(id); }

    SymbolId id(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw std::out_of_range("unknown symbol: " + name);
        return it->second;
    }

    bool contains(const std::string& name) const { return index_.count(name) != 0; }

    std::vector<SymbolId> geometric_ids() const {
        std::vector<SymbolId> ids(geo_count_);
        for (SymbolId i = 0; i < geo_count_; ++i) ids[i] = i;
        return ids;
    }

    bool same_content(const SymbolTable& other) const {
        return geo_count_ == other.geo_count_ && names_ == other.names_;
    }

private:
    std::vector<std::string> names_;
    std::size_t geo_count_;
    std::map<std::string, SymbolId> index_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

inline SymbolTablePtr make_table(std::vector<std::string> geometric,
                                 std::vector<std::string> parameters = {}) {
    return std::make_shared<const SymbolTable>(std::move(geometric), std::move(parameters));
}

/// Tables are interchangeable when they are the same object or carry the
/// same names in the same order with the same partition.
inline bool compatible(const SymbolTablePtr& a, const SymbolTablePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_content(*b);
}

inline void require_compatible(const SymbolTablePtr& a, const SymbolTablePtr& b) {
    if (!compatible(a, b)) throw std::invalid_argument("mismatched symbol tables");
}

}  // namespace cremfol

#endif
