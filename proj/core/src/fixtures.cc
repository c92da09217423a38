#include <hgw/fixtures.hh>
#include <hgw/minimality.hh>

#include <algorithm>

namespace hgw
{
    namespace
    {
        auto largest_bound(const GraphFamily & family) -> const FiniteGraph &
        {
            auto & bounds = family.bounds();
            return *std::max_element(bounds.begin(), bounds.end(),
                [](const FiniteGraph & a, const FiniteGraph & b) { return a.order() < b.order(); });
        }
    }

    auto fixture_i1(const GraphFamily & family) -> Instance
    {
        Instance inst{ family };
        inst.add_variables(2);
        inst.add_constraint({ 0, 1 }, "E");
        inst.add_constraint({ 0, 1 }, "N");
        return inst;
    }

    auto fixture_i2_source(const GraphFamily & family) -> Instance
    {
        Instance inst{ family };
        if (l_value(family) == 3) {
            inst.add_variables(3);
            inst.add_constraint({ 0, 1 }, "=");
            inst.add_constraint({ 1, 2 }, "=");
            inst.add_constraint({ 0, 2 }, "E");
            return inst;
        }

        auto & g = largest_bound(family);
        inst.add_variables(g.order());
        for (unsigned i = 0; i < g.order(); ++i)
            for (unsigned j = i + 1; j < g.order(); ++j)
                inst.add_constraint({ i, j }, g.adjacent(i, j) ? "E" : "N");
        return inst;
    }

    auto fixture_i2(const GraphFamily & family) -> Instance
    {
        auto source = fixture_i2_source(family);
        auto l = l_value(family);
        if (l == 3)
            return source;
        return establish_minimality(source, 2, l - 1).instance();
    }
}
