#include <hgw/document.hh>
#include <hgw/errors.hh>

#include <json.hpp>

using std::string;
using std::string_view;
using std::vector;

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace hgw
{
    namespace
    {
        auto location_of(string_view text, std::size_t byte) -> std::pair<std::size_t, std::size_t>
        {
            std::size_t line = 1, column = 1;
            for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
                if (text[i] == '\n') {
                    ++line;
                    column = 1;
                }
                else
                    ++column;
            }
            return { line, column };
        }

        auto parse_json(string_view text) -> json
        {
            try {
                return json::parse(text.begin(), text.end());
            }
            catch (const json::parse_error & e) {
                auto [line, column] = location_of(text, e.byte);
                string message = e.what();
                if (auto colon = message.find("syntax error"); colon != string::npos)
                    message = message.substr(colon);
                throw ParseError{ message, line, column };
            }
        }

        auto field(const json & object, const char * name, const string & where) -> const json &
        {
            if (! object.is_object())
                throw SchemaError{ where + " must be an object" };
            auto it = object.find(name);
            if (it == object.end())
                throw SchemaError{ where + " is missing \"" + name + "\"" };
            return *it;
        }

        auto unsigned_of(const json & value, const string & where) -> unsigned
        {
            if (! value.is_number_integer() || value.get<long long>() < 0)
                throw SchemaError{ where + " must be a non-negative integer" };
            return value.get<unsigned>();
        }

        auto string_of(const json & value, const string & where) -> string
        {
            if (! value.is_string())
                throw SchemaError{ where + " must be a string" };
            return value.get<string>();
        }

        auto count_or_omega(const json & value, const string & where) -> CountOrOmega
        {
            if (value.is_string() && value.get<string>() == "omega")
                return std::nullopt;
            return unsigned_of(value, where);
        }

        auto family_from(const json & j) -> GraphFamily
        {
            auto kind = string_of(field(j, "family", "domain"), "domain.family");
            try {
                if (kind == "random")
                    return GraphFamily::random();
                if (kind == "henson")
                    return GraphFamily::henson(unsigned_of(field(j, "k", "domain"), "domain.k"));
                if (kind == "cliques")
                    return GraphFamily::cliques(count_or_omega(field(j, "size", "domain"), "domain.size"),
                        count_or_omega(field(j, "count", "domain"), "domain.count"));
                if (kind == "complement")
                    return GraphFamily::complement(family_from(field(j, "of", "domain")));
            }
            catch (const InvalidFamily & e) {
                throw SchemaError{ string{ "invalid domain: " } + e.what() };
            }
            throw SchemaError{ "unknown family '" + kind + "'" };
        }

        auto count_json(CountOrOmega c) -> ordered_json
        {
            if (c)
                return *c;
            return "omega";
        }

        auto family_json(const GraphFamily & family) -> ordered_json
        {
            ordered_json j;
            switch (family.kind()) {
            case GraphFamily::Kind::Random: j["family"] = "random"; break;
            case GraphFamily::Kind::Henson:
                j["family"] = "henson";
                j["k"] = family.henson_k();
                break;
            case GraphFamily::Kind::Cliques:
                j["family"] = "cliques";
                j["size"] = count_json(family.clique_size());
                j["count"] = count_json(family.clique_count());
                break;
            case GraphFamily::Kind::Complement:
                j["family"] = "complement";
                j["of"] = family_json(family.inner());
                break;
            }
            return j;
        }

        auto dump(const ordered_json & j) -> string
        {
            return j.dump(2) + "\n";
        }
    }

    auto parse_family(string_view text) -> GraphFamily
    {
        return family_from(parse_json(text));
    }

    auto serialize_family(const GraphFamily & family) -> string
    {
        return dump(family_json(family));
    }

    auto parse_instance(string_view text) -> Instance
    {
        auto doc = parse_json(text);
        Instance inst{ family_from(field(doc, "domain", "document")) };

        if (doc.contains("relations")) {
            auto & relations = doc["relations"];
            if (! relations.is_object())
                throw SchemaError{ "\"relations\" must be an object" };
            for (auto & [name, body] : relations.items()) {
                auto where = "relation '" + name + "'";
                auto arity = unsigned_of(field(body, "arity", where), where + ".arity");
                if (arity == 0)
                    throw SchemaError{ where + " must have positive arity" };
                if (arity > default_max_arity)
                    throw SchemaError{ where + " exceeds the maximum arity " + std::to_string(default_max_arity) };
                auto & orbits = field(body, "orbits", where);
                if (! orbits.is_array())
                    throw SchemaError{ where + ".orbits must be an array" };
                vector<QfType> types;
                for (auto & o : orbits) {
                    auto text_of = string_of(o, where + " orbit");
                    try {
                        types.push_back(QfType::parse(text_of, arity));
                    }
                    catch (const ParseError & e) {
                        throw ParseError{ where + ": " + e.what() };
                    }
                }
                inst.add_relation(name, OrbitRelation{ arity, std::move(types) });
            }
        }

        auto & variables = field(doc, "variables", "document");
        if (! variables.is_array())
            throw SchemaError{ "\"variables\" must be an array" };
        for (auto & v : variables)
            inst.add_variable(string_of(v, "variable name"));

        if (doc.contains("constraints")) {
            auto & constraints = doc["constraints"];
            if (! constraints.is_array())
                throw SchemaError{ "\"constraints\" must be an array" };
            for (auto & c : constraints) {
                auto relation = string_of(field(c, "relation", "constraint"), "constraint.relation");
                auto & scope = field(c, "scope", "constraint");
                if (! scope.is_array())
                    throw SchemaError{ "constraint.scope must be an array" };
                vector<string> names;
                for (auto & v : scope)
                    names.push_back(string_of(v, "scope entry"));
                inst.add_constraint_by_name(names, relation);
            }
        }

        return inst;
    }

    auto serialize_instance(const Instance & inst) -> string
    {
        ordered_json doc;
        doc["domain"] = family_json(inst.family());
        doc["relations"] = ordered_json::object();
        for (auto & [name, rel] : inst.relations()) {
            if (is_builtin_relation_name(name))
                continue;
            ordered_json body;
            body["arity"] = rel.arity();
            body["orbits"] = ordered_json::array();
            for (auto & t : rel.orbits())
                body["orbits"].push_back(t.to_string());
            doc["relations"][name] = body;
        }
        doc["variables"] = inst.variables();
        doc["constraints"] = ordered_json::array();
        for (auto & c : inst.constraints()) {
            ordered_json con;
            con["scope"] = ordered_json::array();
            for (auto v : c.scope)
                con["scope"].push_back(inst.variables()[v]);
            con["relation"] = c.relation;
            doc["constraints"].push_back(con);
        }
        return dump(doc);
    }

    auto serialize_verdict(const Instance & inst, const Verdict & verdict) -> string
    {
        ordered_json doc;
        doc["status"] = string{ to_string(verdict.status) };
        doc["mode"] = string{ to_string(verdict.mode) };
        if (verdict.mode != Mode::Oracle) {
            doc["k"] = verdict.k;
            doc["l"] = verdict.l;
        }
        if (verdict.assumed_width)
            doc["assumed_width"] = true;
        if (verdict.certificate) {
            doc["certificate"] = verdict.certificate->to_string();
            auto realization = realize_certificate(*verdict.certificate, inst.family());
            ordered_json assignment = ordered_json::object();
            for (unsigned v = 0; v < inst.variable_count(); ++v)
                assignment[inst.variables()[v]] = realization.vertex_of[v];
            doc["assignment"] = assignment;
            ordered_json edges = ordered_json::array();
            for (unsigned a = 0; a < realization.graph.order(); ++a)
                for (unsigned b = a + 1; b < realization.graph.order(); ++b)
                    if (realization.graph.adjacent(a, b))
                        edges.push_back({ a, b });
            doc["graph"] = { { "order", realization.graph.order() }, { "edges", edges } };
        }
        return dump(doc);
    }

    auto serialize_translation(const TypeStructure & ts, const TranslatedInstance & ti) -> string
    {
        ordered_json doc;
        ordered_json domain;
        domain["family"] = "finite-types";
        domain["m"] = ts.m();
        domain["source"] = family_json(ts.family());
        domain["elements"] = ordered_json::array();
        for (auto & e : ts.elements())
            domain["elements"].push_back(e.to_string());
        doc["domain"] = domain;

        doc["relations"] = ordered_json::object();
        for (std::size_t c = 0; c < ti.instance.constraints.size(); ++c) {
            auto & con = ti.instance.constraints[c];
            ordered_json body;
            body["arity"] = con.scope.size();
            body["label"] = con.name;
            body["tuples"] = con.tuples;
            doc["relations"]["r" + std::to_string(c)] = body;
        }
        doc["variables"] = ti.instance.variables;
        doc["constraints"] = ordered_json::array();
        for (std::size_t c = 0; c < ti.instance.constraints.size(); ++c) {
            ordered_json con;
            con["scope"] = ordered_json::array();
            for (auto v : ti.instance.constraints[c].scope)
                con["scope"].push_back(ti.instance.variables[v]);
            con["relation"] = "r" + std::to_string(c);
            doc["constraints"].push_back(con);
        }
        return dump(doc);
    }
}
