#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yangian/ncalg.hpp"

namespace yangian {

/// Straightened brackets [a, b] for a > b. A pair is in range when the two
/// modes add up to at most the capacity, so every value the table can produce
/// stays inside the capacity as well.
class CommTable {
public:
    using Key = std::pair<GenId, GenId>;

    CommTable(std::vector<Family> families, int capacity, GenOrder ord = GenOrder());

    int capacity() const { return capacity_; }
    const GenOrder& order() const { return order_; }
    const std::vector<Family>& families() const { return families_; }
    bool has_family(Family f) const;
    bool in_range(GenId a, GenId b) const { return a.mode + b.mode <= capacity_; }

    /// Records [a, b] = value (stored as -value under (b, a) when b > a).
    /// value must be normal ordered and strictly below a*b in the filtration.
    void set(GenId a, GenId b, const NCPoly& value);
    void erase(GenId a, GenId b);
    bool contains(GenId a, GenId b) const;
    /// [a, b] for any a != b. Throws CapacityError outside the range and
    /// IncompletePresentation for a missing pair inside it.
    NCPoly bracket(GenId a, GenId b) const;
    /// Entries keyed with the larger generator first.
    const std::map<Key, NCPoly>& entries() const { return entries_; }

    /// All generators of the table's families with mode <= bound.
    std::vector<GenId> generators(int bound) const;
    /// Every in-range pair present. Returns the first missing pair, if any.
    std::optional<Key> first_missing() const;

private:
    std::vector<Family> families_;
    int capacity_;
    GenOrder order_;
    std::map<Key, NCPoly> entries_;
};

/// Rewrites words into normal form with a fixed table. Normal forms of words
/// are cached, so one Normalizer should be reused for many computations on
/// the same table. Not safe for concurrent use.
class Normalizer {
public:
    explicit Normalizer(const CommTable& table) : table_(&table) {}

    const CommTable& table() const { return *table_; }
    const NCPoly& normal_word(const Word& w) const;
    NCPoly normal_order(const NCPoly& x) const;
    TensorPoly normal_order(const TensorPoly& x) const;

    NCPoly multiply(const NCPoly& a, const NCPoly& b) const;
    NCPoly commutator(const NCPoly& a, const NCPoly& b) const;
    NCPoly anticommutator(const NCPoly& a, const NCPoly& b) const;
    TensorPoly multiply(const TensorPoly& a, const TensorPoly& b) const;
    TensorPoly commutator(const TensorPoly& a, const TensorPoly& b) const;

private:
    NCPoly rewrite(const Word& w) const;

    const CommTable* table_;
    mutable std::map<Word, NCPoly> cache_;
};

/// "[e_0, f_1] = h_1" per line, sorted by generator pair.
std::string dump(const CommTable& table);

} // namespace yangian
