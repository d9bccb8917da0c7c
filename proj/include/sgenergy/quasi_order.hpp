#pragma once
// Componentwise quasi-order on nonnegative coefficient sequences. Two
// sequences are compared index by index after right-padding the shorter
// one with zeros; the result carries a witness index where strictness (or
// incomparability) was established.

#include <cstddef>
#include <optional>
#include <vector>

namespace sgenergy {

enum class QuasiOrder { Less, Greater, Equal, Incomparable };

struct QuasiOrderResult {
    QuasiOrder relation = QuasiOrder::Equal;
    // Less/Greater: first index with a strict inequality.
    // Incomparable: index whose strictness opposes an earlier one.
    // Equal: empty.
    std::optional<std::size_t> witness;
    friend bool operator==(const QuasiOrderResult&, const QuasiOrderResult&) = default;
};

template <typename Int>
QuasiOrderResult quasi_compare_sequences(const std::vector<Int>& a,
                                         const std::vector<Int>& b) {
    std::size_t len = std::max(a.size(), b.size());
    const Int zero{};
    bool less = false, greater = false;
    std::optional<std::size_t> firstLess, firstGreater;
    for (std::size_t i = 0; i < len; ++i) {
        const Int& x = i < a.size() ? a[i] : zero;
        const Int& y = i < b.size() ? b[i] : zero;
        if (x < y) {
            less = true;
            if (!firstLess) firstLess = i;
        } else if (x > y) {
            greater = true;
            if (!firstGreater) firstGreater = i;
        }
        if (less && greater)
            return {QuasiOrder::Incomparable, std::max(*firstLess, *firstGreater)};
    }
    if (less) return {QuasiOrder::Less, firstLess};
    if (greater) return {QuasiOrder::Greater, firstGreater};
    return {QuasiOrder::Equal, std::nullopt};
}

}  // namespace sgenergy
