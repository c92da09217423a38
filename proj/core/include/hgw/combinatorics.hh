#ifndef HGW_GUARD_HGW_COMBINATORICS_HH
#define HGW_GUARD_HGW_COMBINATORICS_HH 1

#include <functional>
#include <span>
#include <vector>

namespace hgw
{
    /// Calls f on every strictly increasing size-s list over [0, n), in lexicographic order.
    auto for_each_combination(unsigned n, unsigned s, const std::function<void(const std::vector<unsigned> &)> & f)
        -> void;

    /// Every strictly increasing size-s sub-list of items, in lexicographic order of positions.
    auto combinations_of(std::span<const unsigned> items, unsigned s) -> std::vector<std::vector<unsigned>>;

    auto binomial(unsigned n, unsigned s) -> unsigned long long;
}

#endif
