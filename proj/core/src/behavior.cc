#include <hgw/behavior.hh>
#include <hgw/errors.hh>

#include <algorithm>
#include <sstream>
#include <unordered_set>

using std::function;
using std::nullopt;
using std::optional;
using std::span;
using std::string;
using std::string_view;
using std::stringstream;
using std::unordered_set;
using std::vector;

namespace hgw
{
    namespace
    {
        constexpr auto Eq = OrbitLabel::Eq;
        constexpr auto E = OrbitLabel::E;
        constexpr auto N = OrbitLabel::N;

        auto row_of(span<const OrbitLabel> args) -> unsigned
        {
            unsigned row = 0;
            for (auto a : args)
                row = row * 3 + unsigned(a);
            return row;
        }

        auto labels_of_row(unsigned arity, unsigned row) -> vector<OrbitLabel>
        {
            vector<OrbitLabel> result(arity);
            for (unsigned p = arity; p-- > 0;) {
                result[p] = OrbitLabel(row % 3);
                row /= 3;
            }
            return result;
        }

        auto distinct_shape(BinaryShape shape, OrbitLabel a, OrbitLabel b) -> OrbitLabel
        {
            switch (shape) {
            case BinaryShape::Min: return (a == E && b == E) ? E : N;
            case BinaryShape::Max: return (a == N && b == N) ? N : E;
            case BinaryShape::Projection1: return a;
            case BinaryShape::Projection2: return b;
            case BinaryShape::Xor: return a != b ? E : N;
            case BinaryShape::Xnor: return a == b ? E : N;
            case BinaryShape::EConstant: return E;
            case BinaryShape::NConstant: return N;
            }
            throw IncoherentSpec{ "unknown binary shape" };
        }

        auto parse_shape(string_view word) -> optional<BinaryShape>
        {
            for (auto s : { BinaryShape::Min, BinaryShape::Max, BinaryShape::Projection1, BinaryShape::Projection2,
                     BinaryShape::Xor, BinaryShape::Xnor, BinaryShape::EConstant, BinaryShape::NConstant })
                if (to_string(s) == word)
                    return s;
            return nullopt;
        }

        auto parse_flavor(string_view word) -> optional<Flavor>
        {
            for (auto f : { Flavor::Balanced, Flavor::EDominated, Flavor::NDominated })
                if (to_string(f) == word)
                    return f;
            return nullopt;
        }

        auto split(string_view spec) -> vector<string_view>
        {
            vector<string_view> words;
            while (true) {
                auto colon = spec.find(':');
                words.push_back(spec.substr(0, colon));
                if (colon == string_view::npos)
                    break;
                spec.remove_prefix(colon + 1);
            }
            return words;
        }

        auto is_constant(BinaryShape shape) -> bool
        {
            return shape == BinaryShape::EConstant || shape == BinaryShape::NConstant;
        }
    }

    auto to_string(BinaryShape s) -> string_view
    {
        switch (s) {
        case BinaryShape::Min: return "min";
        case BinaryShape::Max: return "max";
        case BinaryShape::Projection1: return "projection1";
        case BinaryShape::Projection2: return "projection2";
        case BinaryShape::Xor: return "xor";
        case BinaryShape::Xnor: return "xnor";
        case BinaryShape::EConstant: return "e_constant";
        case BinaryShape::NConstant: return "n_constant";
        }
        return "?";
    }

    auto to_string(Flavor f) -> string_view
    {
        switch (f) {
        case Flavor::Balanced: return "balanced";
        case Flavor::EDominated: return "e_dominated";
        case Flavor::NDominated: return "n_dominated";
        }
        return "?";
    }

    auto to_string(TernaryShape s) -> string_view
    {
        switch (s) {
        case TernaryShape::Majority: return "majority";
        case TernaryShape::Minority: return "minority";
        case TernaryShape::HC2Omega: return "h_c2omega";
        }
        return "?";
    }

    Behavior::Behavior(unsigned arity, vector<OrbitLabel> table, string name) :
        _arity(arity),
        _table(std::move(table)),
        _name(std::move(name))
    {
        if (arity != 2 && arity != 3)
            throw ArityMismatch{ "behaviors are binary or ternary, not of arity " + std::to_string(arity) };
        if (_table.size() != (arity == 2 ? 9u : 27u))
            throw ArityMismatch{ "behavior table has the wrong number of entries" };
    }

    auto Behavior::operator()(span<const OrbitLabel> args) const -> OrbitLabel
    {
        if (args.size() != _arity)
            throw ArityMismatch{ "behavior '" + _name + "' applied to the wrong number of labels" };
        return _table[row_of(args)];
    }

    auto Behavior::operator()(OrbitLabel a, OrbitLabel b) const -> OrbitLabel
    {
        OrbitLabel args[] = { a, b };
        return (*this)(args);
    }

    auto Behavior::operator()(OrbitLabel a, OrbitLabel b, OrbitLabel c) const -> OrbitLabel
    {
        OrbitLabel args[] = { a, b, c };
        return (*this)(args);
    }

    auto Behavior::is_injective() const -> bool
    {
        for (unsigned row = 0; row < _table.size(); ++row) {
            auto args = labels_of_row(_arity, row);
            bool all_eq = std::all_of(args.begin(), args.end(), [](auto l) { return l == Eq; });
            if (all_eq != (_table[row] == Eq))
                return false;
        }
        return true;
    }

    auto make_binary(BinaryShape shape, optional<Flavor> flavor) -> Behavior
    {
        if (is_constant(shape) && flavor)
            throw IncoherentSpec{ string{ to_string(shape) } + " takes no flavor" };
        if (! is_constant(shape) && ! flavor)
            throw IncoherentSpec{ string{ to_string(shape) } + " needs a flavor" };

        vector<OrbitLabel> table(9);
        for (auto a : all_labels)
            for (auto b : all_labels) {
                OrbitLabel out;
                if (a == Eq && b == Eq)
                    out = Eq;
                else if (is_constant(shape))
                    out = distinct_shape(shape, a, b);
                else if (a == Eq || b == Eq) {
                    switch (*flavor) {
                    case Flavor::Balanced: out = (a == Eq ? b : a); break;
                    case Flavor::EDominated: out = E; break;
                    case Flavor::NDominated: out = N; break;
                    default: out = N;
                    }
                }
                else
                    out = distinct_shape(shape, a, b);
                table[unsigned(a) * 3 + unsigned(b)] = out;
            }

        string name{ to_string(shape) };
        if (flavor)
            name += ":" + string{ to_string(*flavor) };
        return Behavior{ 2, std::move(table), std::move(name) };
    }

    auto make_ternary(TernaryShape shape, const optional<Behavior> & hyperplane) -> Behavior
    {
        if (shape == TernaryShape::HC2Omega && hyperplane)
            throw IncoherentSpec{ "h_c2omega takes no hyperplane behavior" };
        if (shape != TernaryShape::HC2Omega) {
            if (! hyperplane)
                throw IncoherentSpec{ string{ to_string(shape) } + " needs a hyperplane behavior" };
            if (hyperplane->arity() != 2)
                throw IncoherentSpec{ "hyperplane behavior must be binary" };
        }

        vector<OrbitLabel> table(27);
        for (unsigned row = 0; row < 27; ++row) {
            auto args = labels_of_row(3, row);
            auto e_count = std::count(args.begin(), args.end(), E);
            auto eq_count = std::count(args.begin(), args.end(), Eq);
            auto n_count = std::count(args.begin(), args.end(), N);

            OrbitLabel out;
            if (shape == TernaryShape::HC2Omega) {
                // minority on {E,=}, N absorbs
                if (n_count > 0)
                    out = N;
                else
                    out = (e_count % 2 == 1) ? E : Eq;
            }
            else if (eq_count == 3)
                out = Eq;
            else if (eq_count == 2) {
                auto other = *std::find_if(args.begin(), args.end(), [](auto l) { return l != Eq; });
                out = (*hyperplane)(other, Eq);
            }
            else if (eq_count == 1) {
                vector<OrbitLabel> rest;
                for (auto l : args)
                    if (l != Eq)
                        rest.push_back(l);
                out = (*hyperplane)(rest[0], rest[1]);
            }
            else if (shape == TernaryShape::Majority)
                out = e_count >= 2 ? E : N;
            else
                out = (e_count % 2 == 1) ? E : N;
            table[row] = out;
        }

        string name{ to_string(shape) };
        if (hyperplane)
            name += ":" + hyperplane->name();
        return Behavior{ 3, std::move(table), std::move(name) };
    }

    auto parse_behavior(string_view spec) -> Behavior
    {
        auto words = split(spec);
        if (words.size() == 1 && words[0] == to_string(TernaryShape::HC2Omega))
            return make_ternary(TernaryShape::HC2Omega, nullopt);

        for (auto t : { TernaryShape::Majority, TernaryShape::Minority, TernaryShape::HC2Omega })
            if (words[0] == to_string(t)) {
                if (t == TernaryShape::HC2Omega)
                    throw IncoherentSpec{ "h_c2omega takes no hyperplane behavior" };
                if (words.size() < 2)
                    throw IncoherentSpec{ string{ to_string(t) } + " needs a hyperplane behavior" };
                string rest;
                for (unsigned w = 1; w < words.size(); ++w)
                    rest += (w > 1 ? ":" : "") + string{ words[w] };
                return make_ternary(t, parse_behavior(rest));
            }

        auto shape = parse_shape(words[0]);
        if (! shape)
            throw ParseError{ "unknown behavior '" + string{ words[0] } + "'" };
        if (words.size() > 2)
            throw ParseError{ "too many components in behavior spec '" + string{ spec } + "'" };
        optional<Flavor> flavor;
        if (words.size() == 2) {
            flavor = parse_flavor(words[1]);
            if (! flavor)
                throw ParseError{ "unknown flavor '" + string{ words[1] } + "'" };
        }
        return make_binary(*shape, flavor);
    }

    auto format_table(const Behavior & b) -> string
    {
        stringstream out;
        auto grid = [&](optional<OrbitLabel> first) {
            out << "    |";
            for (auto c : all_labels)
                out << " " << to_string(c);
            out << "\n";
            for (auto r : all_labels) {
                out << "  " << to_string(r) << " |";
                for (auto c : all_labels)
                    out << " " << to_string(first ? b(*first, r, c) : b(r, c));
                out << "\n";
            }
        };

        out << b.name() << "\n";
        if (b.arity() == 2)
            grid(nullopt);
        else
            for (auto first : all_labels) {
                out << "first = " << to_string(first) << "\n";
                grid(first);
            }
        return out.str();
    }

    auto apply_behavior(const Behavior & b, span<const QfType> args, const GraphFamily & family) -> optional<QfType>
    {
        if (args.size() != b.arity())
            throw ArityMismatch{ "behavior '" + b.name() + "' needs " + std::to_string(b.arity()) + " arguments" };
        auto arity = args[0].arity();
        for (auto & a : args)
            if (a.arity() != arity)
                throw ArityMismatch{ "behavior arguments have different arities" };

        auto pairs = args[0].labels().size();
        QfType::Labels labels(pairs);
        OrbitLabel column[3];
        for (unsigned p = 0; p < pairs; ++p) {
            for (unsigned a = 0; a < args.size(); ++a)
                column[a] = args[a].labels()[p];
            labels[p] = b(span<const OrbitLabel>{ column, args.size() });
        }

        auto result = QfType::try_make(arity, std::move(labels));
        if (! result || ! realizable(family, *result))
            return nullopt;
        return result;
    }

    auto to_string(PreservationReport::Status s) -> string_view
    {
        switch (s) {
        case PreservationReport::Status::Preserved: return "preserved";
        case PreservationReport::Status::Violated: return "violated";
        case PreservationReport::Status::Incompatible: return "incompatible";
        }
        return "?";
    }

    auto preserves(const Behavior & b, const OrbitRelation & rel, const GraphFamily & family) -> PreservationReport
    {
        auto & orbits = rel.orbits();
        auto n = orbits.size();
        vector<std::size_t> index(b.arity(), 0);
        vector<QfType> args(b.arity());

        if (n == 0)
            return {};

        while (true) {
            for (unsigned a = 0; a < b.arity(); ++a)
                args[a] = orbits[index[a]];

            auto image = apply_behavior(b, args, family);
            if (! image)
                return { PreservationReport::Status::Incompatible, args, nullopt };
            if (! rel.contains(*image))
                return { PreservationReport::Status::Violated, args, image };

            unsigned pos = b.arity();
            while (pos > 0) {
                --pos;
                if (++index[pos] < n)
                    break;
                index[pos] = 0;
                if (pos == 0)
                    return {};
            }
        }
    }

    namespace
    {
        // Semi-naive fixpoint: when the orbit at position n is processed, only
        // argument tuples over [0, n] that use n somewhere are new.
        auto close(span<const Behavior> bs, const OrbitRelation & rel, const GraphFamily & family,
            const function<bool(const QfType &)> * stop) -> OrbitRelation
        {
            vector<QfType> members = rel.orbits();
            unordered_set<QfType, QfTypeHash> seen(members.begin(), members.end());

            auto add = [&](const QfType & t) -> bool {
                if (seen.insert(t).second) {
                    members.push_back(t);
                    return stop && (*stop)(t);
                }
                return false;
            };

            if (stop)
                for (auto & t : members)
                    if ((*stop)(t))
                        return OrbitRelation{ rel.arity(), members };

            for (std::size_t n = 0; n < members.size(); ++n) {
                for (auto & b : bs) {
                    vector<std::size_t> index(b.arity(), 0);
                    vector<QfType> args(b.arity());
                    while (true) {
                        if (std::find(index.begin(), index.end(), n) != index.end()) {
                            for (unsigned a = 0; a < b.arity(); ++a)
                                args[a] = members[index[a]];
                            if (auto image = apply_behavior(b, args, family))
                                if (add(*image))
                                    return OrbitRelation{ rel.arity(), members };
                        }

                        unsigned pos = b.arity();
                        bool done = false;
                        while (true) {
                            --pos;
                            if (++index[pos] <= n)
                                break;
                            index[pos] = 0;
                            if (pos == 0) {
                                done = true;
                                break;
                            }
                        }
                        if (done)
                            break;
                    }
                }
            }

            return OrbitRelation{ rel.arity(), std::move(members) };
        }
    }

    auto closure(span<const Behavior> bs, const OrbitRelation & rel, const GraphFamily & family) -> OrbitRelation
    {
        return close(bs, rel, family, nullptr);
    }

    auto closure_until(span<const Behavior> bs, const OrbitRelation & rel, const GraphFamily & family,
        const function<bool(const QfType &)> & stop) -> OrbitRelation
    {
        return close(bs, rel, family, &stop);
    }
}
