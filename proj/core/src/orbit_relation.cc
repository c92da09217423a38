#include <hgw/errors.hh>
#include <hgw/orbit_relation.hh>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

using std::map;
using std::mutex;
using std::pair;
using std::scoped_lock;
using std::span;
using std::string;
using std::unique_ptr;
using std::vector;

namespace hgw
{
    OrbitRelation::OrbitRelation(unsigned arity) :
        _arity(arity)
    {
        if (arity == 0)
            throw ArityMismatch{ "relations need arity at least 1" };
    }

    OrbitRelation::OrbitRelation(unsigned arity, vector<QfType> orbits) :
        _arity(arity),
        _orbits(std::move(orbits))
    {
        if (arity == 0)
            throw ArityMismatch{ "relations need arity at least 1" };
        for (auto & t : _orbits)
            if (t.arity() != arity)
                throw ArityMismatch{ "orbit '" + t.to_string() + "' does not have arity " + std::to_string(arity) };
        std::sort(_orbits.begin(), _orbits.end());
        _orbits.erase(std::unique(_orbits.begin(), _orbits.end()), _orbits.end());
    }

    auto OrbitRelation::from_orbitals(OrbitalSet labels) -> OrbitRelation
    {
        vector<QfType> orbits;
        for (auto l : labels.members())
            orbits.emplace_back(2, QfType::Labels{ l });
        return OrbitRelation{ 2, std::move(orbits) };
    }

    auto OrbitRelation::contains(const QfType & t) const -> bool
    {
        return std::binary_search(_orbits.begin(), _orbits.end(), t);
    }

    auto OrbitRelation::restricted_to(const GraphFamily & family) const -> OrbitRelation
    {
        vector<QfType> kept;
        for (auto & t : _orbits)
            if (realizable(family, t))
                kept.push_back(t);
        return OrbitRelation{ _arity, std::move(kept) };
    }

    auto OrbitRelation::is_subset_of(const OrbitRelation & other) const -> bool
    {
        return _arity == other._arity &&
            std::includes(other._orbits.begin(), other._orbits.end(), _orbits.begin(), _orbits.end());
    }

    auto intersection(const OrbitRelation & a, const OrbitRelation & b) -> OrbitRelation
    {
        if (a.arity() != b.arity())
            throw ArityMismatch{ "cannot intersect relations of different arity" };
        vector<QfType> result;
        std::set_intersection(a.orbits().begin(), a.orbits().end(), b.orbits().begin(), b.orbits().end(),
            std::back_inserter(result));
        return OrbitRelation{ a.arity(), std::move(result) };
    }

    auto union_of(const OrbitRelation & a, const OrbitRelation & b) -> OrbitRelation
    {
        if (a.arity() != b.arity())
            throw ArityMismatch{ "cannot unite relations of different arity" };
        vector<QfType> result;
        std::set_union(a.orbits().begin(), a.orbits().end(), b.orbits().begin(), b.orbits().end(),
            std::back_inserter(result));
        return OrbitRelation{ a.arity(), std::move(result) };
    }

    auto relation_project(const OrbitRelation & rel, span<const unsigned> positions) -> OrbitRelation
    {
        for (auto p : positions)
            if (p >= rel.arity())
                throw IndexOutOfRange{ "projection position " + std::to_string(p) + " out of range for arity " +
                    std::to_string(rel.arity()) };
        if (positions.empty())
            throw IndexOutOfRange{ "projection needs at least one position" };

        vector<QfType> result;
        result.reserve(rel.size());
        for (auto & t : rel.orbits())
            result.push_back(project(t, positions));
        return OrbitRelation{ static_cast<unsigned>(positions.size()), std::move(result) };
    }

    namespace
    {
        struct TypeEnumerator
        {
            const GraphFamily & family;
            unsigned arity;
            vector<QfType> result;

            // restricted growth string: class of each position
            vector<unsigned> class_of;

            auto partitions(unsigned position, unsigned classes) -> void
            {
                if (position == arity) {
                    labellings(classes);
                    return;
                }
                for (unsigned c = 0; c <= classes; ++c) {
                    class_of[position] = c;
                    partitions(position + 1, std::max(classes, c + 1));
                }
            }

            auto labellings(unsigned classes) -> void
            {
                vector<pair<unsigned, unsigned>> class_pairs;
                for (unsigned a = 0; a < classes; ++a)
                    for (unsigned b = a + 1; b < classes; ++b)
                        class_pairs.emplace_back(a, b);

                for (unsigned long mask = 0; mask < (1ul << class_pairs.size()); ++mask) {
                    vector<pair<unsigned, unsigned>> edges;
                    for (unsigned p = 0; p < class_pairs.size(); ++p)
                        if (mask & (1ul << p))
                            edges.push_back(class_pairs[p]);
                    FiniteGraph quotient{ classes, edges };
                    if (! realizable(family, quotient))
                        continue;
                    result.push_back(QfType::from_classes(class_of, [&](unsigned a, unsigned b) {
                        return quotient.adjacent(a, b) ? OrbitLabel::E : OrbitLabel::N;
                    }));
                }
            }
        };
    }

    auto enumerate_types(const GraphFamily & family, unsigned arity, unsigned max_arity) -> const OrbitRelation &
    {
        if (arity == 0)
            throw ArityMismatch{ "types need arity at least 1" };
        if (arity > max_arity || arity > default_max_arity)
            throw ArityTooLarge{ "cannot enumerate types of arity " + std::to_string(arity) + " (cap " +
                std::to_string(std::min(max_arity, default_max_arity)) + ")" };

        static mutex cache_mutex;
        static map<pair<string, unsigned>, unique_ptr<OrbitRelation>> cache;

        scoped_lock lock{ cache_mutex };
        auto & slot = cache[{ family.name(), arity }];
        if (! slot) {
            TypeEnumerator enumerator{ family, arity, {}, vector<unsigned>(arity, 0) };
            enumerator.partitions(0, 0);
            slot = std::make_unique<OrbitRelation>(arity, std::move(enumerator.result));
        }
        return *slot;
    }
}
