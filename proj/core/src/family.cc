#include <hgw/errors.hh>
#include <hgw/family.hh>

#include <algorithm>

using std::make_shared;
using std::string;
using std::to_string;
using std::vector;

namespace hgw
{
    namespace
    {
        auto minimal_bounds(const vector<FiniteGraph> & candidates) -> vector<FiniteGraph>
        {
            // keep only the minimal ones, one per isomorphism class
            vector<FiniteGraph> result;
            for (unsigned i = 0; i < candidates.size(); ++i) {
                bool redundant = false;
                for (unsigned j = 0; j < candidates.size() && ! redundant; ++j) {
                    if (i == j)
                        continue;
                    if (isomorphic(candidates[i], candidates[j]))
                        redundant = j < i;
                    else if (embeds(candidates[j], candidates[i]))
                        redundant = true;
                }
                if (! redundant)
                    result.push_back(candidates[i]);
            }
            return result;
        }

        auto parameter_name(const CountOrOmega & p) -> string
        {
            return p ? to_string(*p) : string{ "omega" };
        }
    }

    GraphFamily::GraphFamily(Kind kind) :
        _kind(kind)
    {
    }

    auto GraphFamily::finish() -> GraphFamily &&
    {
        vector<FiniteGraph> candidates;
        switch (_kind) {
        case Kind::Random:
            _name = "random";
            break;

        case Kind::Henson:
            _name = "henson(" + to_string(_henson_k) + ")";
            candidates.push_back(FiniteGraph::complete(_henson_k));
            break;

        case Kind::Cliques:
            _name = "cliques(" + parameter_name(_size) + "," + parameter_name(_count) + ")";
            candidates.push_back(FiniteGraph::path3());
            if (_count)
                candidates.push_back(FiniteGraph::null(*_count + 1));
            if (_size)
                candidates.push_back(FiniteGraph::complete(*_size + 1));
            break;

        case Kind::Complement:
            _name = "complement(" + _inner->name() + ")";
            for (auto & g : _inner->bounds())
                candidates.push_back(g.complement());
            break;
        }

        _bounds = make_shared<const vector<FiniteGraph>>(minimal_bounds(candidates));
        return std::move(*this);
    }

    auto GraphFamily::random() -> GraphFamily
    {
        GraphFamily result{ Kind::Random };
        return std::move(result.finish());
    }

    auto GraphFamily::henson(unsigned k) -> GraphFamily
    {
        if (k < 3)
            throw InvalidFamily{ "Henson graphs need k >= 3, got " + to_string(k) };
        GraphFamily result{ Kind::Henson };
        result._henson_k = k;
        return std::move(result.finish());
    }

    auto GraphFamily::cliques(CountOrOmega size, CountOrOmega count) -> GraphFamily
    {
        if (size && count)
            throw InvalidFamily{ "disjoint cliques need either size or count to be omega" };
        if ((size && *size == 0) || (count && *count == 0))
            throw InvalidFamily{ "clique size and count must be at least 1" };
        GraphFamily result{ Kind::Cliques };
        result._size = size;
        result._count = count;
        return std::move(result.finish());
    }

    auto GraphFamily::complement(const GraphFamily & inner) -> GraphFamily
    {
        if (inner.kind() != Kind::Henson && inner.kind() != Kind::Cliques)
            throw InvalidFamily{ "only Henson and clique families can be complemented" };
        GraphFamily result{ Kind::Complement };
        result._inner = make_shared<const GraphFamily>(inner);
        return std::move(result.finish());
    }

    auto GraphFamily::inner() const -> const GraphFamily &
    {
        if (! _inner)
            throw InvalidFamily{ "family " + name() + " is not a complement" };
        return *_inner;
    }

    auto bounds_of(const GraphFamily & family) -> const vector<FiniteGraph> &
    {
        return family.bounds();
    }

    auto l_value(const GraphFamily & family) -> unsigned
    {
        unsigned result = 3;
        for (auto & g : family.bounds())
            result = std::max(result, g.order());
        return result;
    }

    auto realizable(const GraphFamily & family, const FiniteGraph & graph) -> bool
    {
        for (auto & bound : family.bounds())
            if (bound.order() <= graph.order() && embeds(bound, graph))
                return false;
        return true;
    }
}
