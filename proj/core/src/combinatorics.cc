#include <hgw/combinatorics.hh>

using std::function;
using std::span;
using std::vector;

namespace hgw
{
    auto for_each_combination(unsigned n, unsigned s, const function<void(const vector<unsigned> &)> & f) -> void
    {
        if (s > n)
            return;
        vector<unsigned> current(s);
        for (unsigned i = 0; i < s; ++i)
            current[i] = i;

        while (true) {
            f(current);

            // rightmost entry that can still move
            int pos = int(s) - 1;
            while (pos >= 0 && current[pos] == n - s + unsigned(pos))
                --pos;
            if (pos < 0)
                return;
            ++current[pos];
            for (unsigned i = pos + 1; i < s; ++i)
                current[i] = current[i - 1] + 1;
        }
    }

    auto combinations_of(span<const unsigned> items, unsigned s) -> vector<vector<unsigned>>
    {
        vector<vector<unsigned>> result;
        for_each_combination(unsigned(items.size()), s, [&](const vector<unsigned> & c) {
            vector<unsigned> picked;
            picked.reserve(s);
            for (auto i : c)
                picked.push_back(items[i]);
            result.push_back(std::move(picked));
        });
        return result;
    }

    auto binomial(unsigned n, unsigned s) -> unsigned long long
    {
        if (s > n)
            return 0;
        unsigned long long result = 1;
        for (unsigned i = 1; i <= s; ++i)
            result = result * (n - s + i) / i;
        return result;
    }
}
