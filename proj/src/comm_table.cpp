#include "yangian/comm_table.hpp"

#include <algorithm>
#include <sstream>

#include "yangian/errors.hpp"

namespace yangian {

CommTable::CommTable(std::vector<Family> families, int capacity, GenOrder ord)
    : families_(std::move(families)), capacity_(capacity), order_(ord)
{
    if (capacity < 0 || capacity > 200)
        throw CapacityError("mode capacity out of range");
}

bool CommTable::has_family(Family f) const
{
    return std::find(families_.begin(), families_.end(), f) != families_.end();
}

void CommTable::set(GenId a, GenId b, const NCPoly& value)
{
    if (a == b)
        throw AlgebraError("a generator commutes with itself");
    if (!in_range(a, b))
        throw CapacityError("bracket [" + to_string(a) + ", " + to_string(b) + "] exceeds capacity");
    const int bound = a.mode + b.mode;
    for (const auto& [w, c] : value.terms()) {
        if (!is_normal(w, order_))
            throw AlgebraError("table entry is not normal ordered: " + to_string(value));
        const int s = mode_sum(w);
        if (s > bound || (s == bound && w.size() >= 2))
            throw AlgebraError("table entry for [" + to_string(a) + ", " + to_string(b) +
                               "] does not decrease the filtration");
        for (GenId g : w) {
            if (!has_family(g.family))
                throw AlgebraError("table entry uses a foreign generator " + to_string(g));
        }
    }
    if (order_.less(a, b))
        entries_[{b, a}] = -value;
    else
        entries_[{a, b}] = value;
}

void CommTable::erase(GenId a, GenId b)
{
    entries_.erase(order_.less(a, b) ? Key{b, a} : Key{a, b});
}

bool CommTable::contains(GenId a, GenId b) const
{
    return entries_.count(order_.less(a, b) ? Key{b, a} : Key{a, b}) > 0;
}

NCPoly CommTable::bracket(GenId a, GenId b) const
{
    if (a == b)
        return {};
    const bool swapped = order_.less(a, b);
    auto it = entries_.find(swapped ? Key{b, a} : Key{a, b});
    if (it == entries_.end()) {
        const std::string pair = "[" + to_string(a) + ", " + to_string(b) + "]";
        if (!in_range(a, b))
            throw CapacityError("bracket " + pair + " needs modes beyond capacity " +
                                std::to_string(capacity_));
        throw IncompletePresentation("missing table entry " + pair);
    }
    return swapped ? -it->second : it->second;
}

std::vector<GenId> CommTable::generators(int bound) const
{
    std::vector<GenId> out;
    for (Family f : families_) {
        for (int k = 0; k <= bound; ++k)
            out.push_back({f, static_cast<std::uint8_t>(k)});
    }
    std::sort(out.begin(), out.end(), [&](GenId x, GenId y) { return order_.less(x, y); });
    return out;
}

std::optional<CommTable::Key> CommTable::first_missing() const
{
    const auto gens = generators(capacity_);
    for (GenId a : gens) {
        for (GenId b : gens) {
            if (order_.less(b, a) && in_range(a, b) && !entries_.count({a, b}))
                return Key{a, b};
        }
    }
    return std::nullopt;
}

const NCPoly& Normalizer::normal_word(const Word& w) const
{
    auto it = cache_.find(w);
    if (it != cache_.end())
        return it->second;
    NCPoly value = rewrite(w);
    return cache_.emplace(w, std::move(value)).first->second;
}

NCPoly Normalizer::rewrite(const Word& w) const
{
    const GenOrder& ord = table_->order();
    for (GenId g : w) {
        if (g.mode > table_->capacity())
            throw CapacityError("generator " + to_string(g) + " exceeds capacity " +
                                std::to_string(table_->capacity()));
    }
    std::size_t i = 0;
    while (i + 1 < w.size() && !ord.less(w[i + 1], w[i]))
        ++i;
    if (i + 1 >= w.size())
        return NCPoly::word(w);

    // a*b = b*a + [a, b]
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    NCPoly out = normal_word(swapped);
    const NCPoly br = table_->bracket(w[i], w[i + 1]);
    for (const auto& [mid, c] : br.terms()) {
        Word next(w.begin(), w.begin() + std::ptrdiff_t(i));
        next.insert(next.end(), mid.begin(), mid.end());
        next.insert(next.end(), w.begin() + std::ptrdiff_t(i) + 2, w.end());
        out += c * normal_word(next);
    }
    return out;
}

NCPoly Normalizer::normal_order(const NCPoly& x) const
{
    NCPoly out;
    for (const auto& [w, c] : x.terms())
        out += c * normal_word(w);
    return out;
}

TensorPoly Normalizer::normal_order(const TensorPoly& x) const
{
    TensorPoly out(x.degree());
    for (const auto& [k, c] : x.terms()) {
        std::vector<NCPoly> legs;
        legs.reserve(k.size());
        for (const Word& w : k)
            legs.push_back(normal_word(w));
        out += c * TensorPoly::product(legs);
    }
    return out;
}

NCPoly Normalizer::multiply(const NCPoly& a, const NCPoly& b) const
{
    return normal_order(a * b);
}

NCPoly Normalizer::commutator(const NCPoly& a, const NCPoly& b) const
{
    return normal_order(a * b - b * a);
}

NCPoly Normalizer::anticommutator(const NCPoly& a, const NCPoly& b) const
{
    return normal_order(a * b + b * a);
}

TensorPoly Normalizer::multiply(const TensorPoly& a, const TensorPoly& b) const
{
    return normal_order(a * b);
}

TensorPoly Normalizer::commutator(const TensorPoly& a, const TensorPoly& b) const
{
    return normal_order(a * b - b * a);
}

std::string dump(const CommTable& table)
{
    std::ostringstream out;
    for (const auto& [key, value] : table.entries())
        out << "[" << to_string(key.first) << ", " << to_string(key.second) << "] = "
            << to_string(value) << "\n";
    return out.str();
}

} // namespace yangian
