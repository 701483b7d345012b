#ifndef RCGRAPH_JSON_IO_HPP
#define RCGRAPH_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "rcgraph/graph.hpp"
#include "rcgraph/insertion.hpp"
#include "rcgraph/lr.hpp"
#include "rcgraph/permutation.hpp"
#include "rcgraph/schubert.hpp"
#include "rcgraph/tableau.hpp"

// JSON wire formats:
//   permutation   [1,4,3,2]                      one-line images
//   partition     [2,2]                          parts
//   graph         {"crossings": [[row,col],...]} sorted lexicographically
//   tableau       {"shape":[...], "r":k, "entries":[[a,b]|null, ...]}
//   polynomial    [{"exp":[...], "coeff":k}, ...]
//   expansion     [{"perm":[...], "coeff":k}, ...]
namespace rcgraph::io {

using nlohmann::json;

inline json to_json(const Permutation& w)
{
    return json(w.images());
}

inline Permutation permutation_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("permutation JSON must be an array of images");
    return Permutation(j.get<std::vector<int>>());
}

inline json to_json(const Partition& p)
{
    return json(p.parts());
}

inline Partition partition_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("partition JSON must be an array of parts");
    return Partition(j.get<std::vector<int>>());
}

inline json to_json(const Graph& g)
{
    json crossings = json::array();
    for (const Place& p : g.places())
        crossings.push_back(json::array({p.row, p.col}));
    return json{{"crossings", std::move(crossings)}};
}

inline Graph graph_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("crossings") || !j["crossings"].is_array())
        throw std::invalid_argument("graph JSON must be {\"crossings\": [[row,col],...]}");
    std::vector<Place> places;
    for (const json& pair : j["crossings"]) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("each crossing must be a [row, col] pair");
        places.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    return Graph(std::move(places));
}

inline json to_json(const TranspositionTableau& t)
{
    json entries = json::array();
    for (int i = 1; i <= t.box_count(); ++i) {
        auto e = t.entry(i);
        entries.push_back(e ? json::array({e->a, e->b}) : json(nullptr));
    }
    return json{{"shape", to_json(t.shape())}, {"r", t.r()}, {"entries", std::move(entries)}};
}

inline TranspositionTableau tableau_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("shape") || !j.contains("r") || !j.contains("entries"))
        throw std::invalid_argument("tableau JSON must have shape, r, and entries");
    TranspositionTableau t(partition_from_json(j["shape"]), j["r"].get<int>());
    const json& entries = j["entries"];
    if (!entries.is_array() || static_cast<int>(entries.size()) != t.box_count())
        throw std::invalid_argument("entries must list every box of the shape");
    bool done = false;
    int i = 0;
    for (const json& e : entries) {
        ++i;
        if (e.is_null()) {
            done = true;
            continue;
        }
        if (done)
            throw std::invalid_argument("filled boxes must form a prefix of the box order");
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("each entry must be an [a, b] pair or null");
        try {
            t = t.with_entry(i, {e[0].get<int>(), e[1].get<int>()});
        } catch (const invariant_error& err) {
            throw std::invalid_argument(err.what());
        }
    }
    return t;
}

inline json to_json(const SchubertPolynomial& p)
{
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(json{{"exp", e}, {"coeff", c}});
    return terms;
}

inline SchubertPolynomial polynomial_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("polynomial JSON must be an array of terms");
    SchubertPolynomial p;
    for (const json& term : j) {
        if (!term.is_object() || !term.contains("exp") || !term.contains("coeff"))
            throw std::invalid_argument("each term must have exp and coeff");
        p.add_term(term["exp"].get<std::vector<int>>(), term["coeff"].get<long long>());
    }
    return p;
}

inline json to_json(const SchubertExpansion& e)
{
    json out = json::array();
    for (const auto& [u, c] : e.coeffs())
        out.push_back(json{{"perm", u.images()}, {"coeff", c}});
    return out;
}

inline SchubertExpansion expansion_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expansion JSON must be an array");
    SchubertExpansion e;
    for (const json& term : j) {
        if (!term.is_object() || !term.contains("perm") || !term.contains("coeff"))
            throw std::invalid_argument("each term must have perm and coeff");
        e.add(Permutation(term["perm"].get<std::vector<int>>()), term["coeff"].get<long long>());
    }
    return e;
}

inline json to_json(const StepRecord& rec)
{
    json added = json::array();
    for (const Place& p : rec.added)
        added.push_back(json::array({p.row, p.col}));
    json removed = json::array();
    for (const Place& p : rec.removed)
        removed.push_back(json::array({p.row, p.col}));
    return json{{"step", json::array({rec.row, rec.index})},
                {"kind", to_string(rec.kind)},
                {"added", std::move(added)},
                {"removed", std::move(removed)},
                {"tableau", rec.tableau_edit}};
}

inline json to_json(const VerifyReport& report)
{
    json entries = json::array();
    for (const VerifyEntry& e : report.entries)
        entries.push_back(json{{"u", e.u.images()},
                               {"c", e.coefficient},
                               {"methods",
                                json{{"chains", e.chains},
                                     {"insertion", e.insertion},
                                     {"oracle", e.oracle}}}});
    return json{{"w", report.w.images()},
                {"lambda", report.lambda.parts()},
                {"r", report.r},
                {"n", report.n},
                {"results", std::move(entries)}};
}

}  // namespace rcgraph::io

#endif
