#ifndef HGW_GUARD_HGW_FIXTURES_HH
#define HGW_GUARD_HGW_FIXTURES_HH 1

#include <hgw/family.hh>
#include <hgw/instance.hh>

namespace hgw
{
    /// E(v1,v2) and N(v1,v2): (1, l)-minimal for every l, without solutions.
    auto fixture_i1(const GraphFamily & family) -> Instance;

    /**
     * The unsolvable instance before minimisation. With l_value 3 it is
     * =(v1,v2), =(v2,v3), E(v1,v3); otherwise it has one E or N constraint per
     * pair of vertices of the largest bound.
     */
    auto fixture_i2_source(const GraphFamily & family) -> Instance;

    /// fixture_i2_source itself when l_value is 3, else its (2, l_value - 1)-minimal equivalent.
    auto fixture_i2(const GraphFamily & family) -> Instance;
}

#endif
