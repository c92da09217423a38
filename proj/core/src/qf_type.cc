#include <hgw/errors.hh>
#include <hgw/qf_type.hh>

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

using std::optional;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace hgw
{
    auto to_string(OrbitLabel label) -> string_view
    {
        switch (label) {
        case OrbitLabel::Eq: return "=";
        case OrbitLabel::E: return "E";
        case OrbitLabel::N: return "N";
        }
        return "?";
    }

    auto parse_label(string_view text) -> OrbitLabel
    {
        if (text == "=")
            return OrbitLabel::Eq;
        if (text == "E")
            return OrbitLabel::E;
        if (text == "N")
            return OrbitLabel::N;
        throw ParseError{ "unknown orbit label '" + string{ text } + "'" };
    }

    auto OrbitalSet::size() const noexcept -> unsigned
    {
        return std::popcount(unsigned{ _bits });
    }

    auto OrbitalSet::members() const -> vector<OrbitLabel>
    {
        vector<OrbitLabel> result;
        for (auto l : all_labels)
            if (contains(l))
                result.push_back(l);
        return result;
    }

    auto OrbitalSet::name() const -> string
    {
        if (*this == eq())
            return "=";
        if (*this == e())
            return "E";
        if (*this == n())
            return "N";
        if (*this == uu_e())
            return "uuE";
        if (*this == uu_n())
            return "uuN";
        if (*this == neq())
            return "NEQ";
        if (*this == all())
            return "ALL";
        return "{}";
    }

    auto parse_orbital_set(string_view text) -> OrbitalSet
    {
        for (auto s : { OrbitalSet::eq(), OrbitalSet::e(), OrbitalSet::n(), OrbitalSet::uu_e(), OrbitalSet::uu_n(),
                 OrbitalSet::neq(), OrbitalSet::all() })
            if (s.name() == text)
                return s;
        throw ParseError{ "unknown orbital set '" + string{ text } + "'" };
    }

    auto QfType::pair_index(unsigned arity, unsigned i, unsigned j) -> unsigned
    {
        // i < j
        return i * arity - i * (i + 1) / 2 + (j - i - 1);
    }

    namespace
    {
        auto pair_count(unsigned arity) -> unsigned
        {
            return arity * (arity - 1) / 2;
        }

        // Classes of the "=" relation if the labelling is consistent.
        auto consistent_classes(unsigned arity, const QfType::Labels & labels) -> optional<vector<unsigned>>
        {
            vector<unsigned> parent(arity);
            std::iota(parent.begin(), parent.end(), 0u);
            auto find = [&](unsigned x) {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            };

            for (unsigned i = 0; i < arity; ++i)
                for (unsigned j = i + 1; j < arity; ++j)
                    if (labels[QfType::pair_index(arity, i, j)] == OrbitLabel::Eq) {
                        auto a = find(i), b = find(j);
                        if (a != b)
                            parent[std::max(a, b)] = std::min(a, b);
                    }

            vector<unsigned> representative(arity);
            for (unsigned i = 0; i < arity; ++i)
                representative[i] = find(i);

            for (unsigned i = 0; i < arity; ++i)
                for (unsigned j = i + 1; j < arity; ++j) {
                    auto l = labels[QfType::pair_index(arity, i, j)];
                    auto ri = representative[i], rj = representative[j];
                    if (ri == rj) {
                        if (l != OrbitLabel::Eq)
                            return std::nullopt;
                    }
                    else {
                        if (l == OrbitLabel::Eq)
                            return std::nullopt;
                        auto a = std::min(ri, rj), b = std::max(ri, rj);
                        if (a != b && labels[QfType::pair_index(arity, a, b)] != l)
                            return std::nullopt;
                    }
                }

            return representative;
        }
    }

    QfType::QfType(Unchecked, unsigned arity, Labels && labels) :
        _arity(arity),
        _labels(std::move(labels))
    {
    }

    QfType::QfType(unsigned arity, Labels labels) :
        _arity(arity),
        _labels(std::move(labels))
    {
        if (arity == 0)
            throw InvalidType{ "types need arity at least 1" };
        if (_labels.size() != pair_count(arity))
            throw InvalidType{ "arity " + std::to_string(arity) + " needs " + std::to_string(pair_count(arity)) +
                " pair labels, got " + std::to_string(_labels.size()) };
        if (! consistent_classes(arity, _labels))
            throw InvalidType{ "inconsistent labelling '" + to_string() + "'" };
    }

    auto QfType::try_make(unsigned arity, Labels labels) -> optional<QfType>
    {
        if (arity == 0 || labels.size() != pair_count(arity) || ! consistent_classes(arity, labels))
            return std::nullopt;
        return QfType{ Unchecked{}, arity, std::move(labels) };
    }

    auto QfType::single_class(unsigned arity) -> QfType
    {
        if (arity == 0)
            throw InvalidType{ "types need arity at least 1" };
        return QfType{ Unchecked{}, arity, Labels(pair_count(arity), OrbitLabel::Eq) };
    }

    auto QfType::from_classes(span<const unsigned> class_of,
        const std::function<OrbitLabel(unsigned, unsigned)> & class_label) -> QfType
    {
        auto arity = static_cast<unsigned>(class_of.size());
        Labels labels;
        labels.reserve(pair_count(arity));
        for (unsigned i = 0; i < arity; ++i)
            for (unsigned j = i + 1; j < arity; ++j)
                labels.push_back(class_of[i] == class_of[j] ? OrbitLabel::Eq : class_label(class_of[i], class_of[j]));
        return QfType{ arity, std::move(labels) };
    }

    auto QfType::parse(string_view text, unsigned arity) -> QfType
    {
        Labels labels;
        if (! text.empty()) {
            std::size_t start = 0;
            while (true) {
                auto comma = text.find(',', start);
                auto piece = text.substr(start, comma == string_view::npos ? string_view::npos : comma - start);
                while (! piece.empty() && piece.front() == ' ')
                    piece.remove_prefix(1);
                while (! piece.empty() && piece.back() == ' ')
                    piece.remove_suffix(1);
                labels.push_back(parse_label(piece));
                if (comma == string_view::npos)
                    break;
                start = comma + 1;
            }
        }

        if (arity == 0)
            throw ParseError{ "orbit arity must be at least 1" };
        if (labels.size() != pair_count(arity))
            throw ParseError{ "orbit '" + string{ text } + "' has " + std::to_string(labels.size()) +
                " labels but arity " + std::to_string(arity) + " needs " + std::to_string(pair_count(arity)) };
        if (! consistent_classes(arity, labels))
            throw ParseError{ "orbit '" + string{ text } + "' has an inconsistent labelling" };
        return QfType{ Unchecked{}, arity, std::move(labels) };
    }

    auto QfType::label(unsigned i, unsigned j) const -> OrbitLabel
    {
        if (i >= _arity || j >= _arity)
            throw IndexOutOfRange{ "position out of range for arity " + std::to_string(_arity) };
        if (i == j)
            return OrbitLabel::Eq;
        if (i > j)
            std::swap(i, j);
        return _labels[pair_index(_arity, i, j)];
    }

    auto QfType::class_of() const -> vector<unsigned>
    {
        vector<unsigned> result(_arity);
        unsigned classes = 0;
        for (unsigned i = 0; i < _arity; ++i) {
            result[i] = classes;
            for (unsigned j = 0; j < i; ++j)
                if (_labels[pair_index(_arity, j, i)] == OrbitLabel::Eq) {
                    result[i] = result[j];
                    break;
                }
            if (result[i] == classes)
                ++classes;
        }
        return result;
    }

    auto QfType::class_count() const -> unsigned
    {
        auto c = class_of();
        return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
    }

    auto QfType::to_string() const -> string
    {
        string result;
        for (auto l : _labels) {
            if (! result.empty())
                result += ',';
            result += hgw::to_string(l);
        }
        return result;
    }

    auto operator<=>(const QfType & a, const QfType & b) -> std::strong_ordering
    {
        if (auto c = a._arity <=> b._arity; c != 0)
            return c;
        return std::lexicographical_compare_three_way(a._labels.begin(), a._labels.end(), b._labels.begin(), b._labels.end());
    }

    auto project(const QfType & t, span<const unsigned> positions) -> QfType
    {
        auto arity = static_cast<unsigned>(positions.size());
        if (arity == 0)
            throw IndexOutOfRange{ "projection needs at least one position" };
        for (auto p : positions)
            if (p >= t._arity)
                throw IndexOutOfRange{ "projection position " + std::to_string(p) + " out of range for arity " +
                    std::to_string(t._arity) };

        QfType::Labels labels;
        labels.reserve(pair_count(arity));
        for (unsigned i = 0; i < arity; ++i)
            for (unsigned j = i + 1; j < arity; ++j) {
                auto a = positions[i], b = positions[j];
                if (a == b)
                    labels.push_back(OrbitLabel::Eq);
                else
                    labels.push_back(t._labels[QfType::pair_index(t._arity, std::min(a, b), std::max(a, b))]);
            }
        return QfType{ QfType::Unchecked{}, arity, std::move(labels) };
    }

    auto quotient_graph(const QfType & t) -> FiniteGraph
    {
        auto classes = t.class_of();
        unsigned count = classes.empty() ? 1 : *std::max_element(classes.begin(), classes.end()) + 1;
        vector<unsigned> representative(count);
        for (unsigned i = t.arity(); i-- > 0;)
            representative[classes[i]] = i;

        vector<std::pair<unsigned, unsigned>> edges;
        for (unsigned a = 0; a < count; ++a)
            for (unsigned b = a + 1; b < count; ++b)
                if (t.label(representative[a], representative[b]) == OrbitLabel::E)
                    edges.emplace_back(a, b);
        return FiniteGraph{ count, edges };
    }

    auto realizable(const GraphFamily & family, const QfType & t) -> bool
    {
        if (family.bounds().empty())
            return true;
        return realizable(family, quotient_graph(t));
    }

    auto make_realizable_type(const GraphFamily & family, unsigned arity, QfType::Labels labels) -> QfType
    {
        QfType result{ arity, std::move(labels) };
        if (! realizable(family, result))
            throw NotRealizable{ "type '" + result.to_string() + "' is not realizable in " + family.name() };
        return result;
    }

    auto QfTypeHash::operator()(const QfType & t) const noexcept -> std::size_t
    {
        std::size_t h = t.arity();
        for (auto l : t.labels())
            h = h * 3 + static_cast<std::size_t>(l);
        return h;
    }
}
