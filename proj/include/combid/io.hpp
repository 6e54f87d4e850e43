#pragma once

// JSON input formats.
//   digraph: {"n": 3, "edges": [{"from": 0, "to": 1, "weight": "2/3"}, ...]}
//   matrix:  {"rows": [["1", "a"], ["0", "b"]]}
//   vector:  {"values": ["5", "6"]}  (a one-column matrix is accepted too)
// Weights are literals: integer, "p/q" or a variable name.

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <nlohmann/json.hpp>

#include "digraph.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "ring.hpp"

namespace combid::io {

using json = nlohmann::json;

struct MatrixInput {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Weight> entries;
};

struct DigraphInput {
    struct EdgeInput {
        std::size_t from;
        std::size_t to;
    };
    std::size_t n = 0;
    std::vector<EdgeInput> edges;
    std::vector<Weight> weights;
};

inline Weight literal_of(const json &v)
{
    if (v.is_string())
        return parse_literal(v.get<std::string>());
    if (v.is_number_integer())
        return Weight(Rational(v.get<long long>()));
    throw input_error("weight must be a string literal or an integer, got " + v.dump());
}

inline std::size_t index_of(const json &v, const char *what)
{
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw input_error(std::string(what) + " must be a non-negative integer, got " + v.dump());
    return v.get<std::size_t>();
}

inline json parse_json(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
}

inline MatrixInput read_matrix(const json &j)
{
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
        throw input_error("matrix JSON needs a \"rows\" array");
    MatrixInput m;
    const auto &rows = j["rows"];
    m.rows = rows.size();
    for (const auto &row : rows) {
        if (!row.is_array())
            throw input_error("matrix row must be an array");
        if (&row == &rows.front())
            m.cols = row.size();
        else if (row.size() != m.cols)
            throw input_error("ragged matrix rows");
        for (const auto &v : row)
            m.entries.push_back(literal_of(v));
    }
    return m;
}

inline std::vector<Weight> read_vector(const json &j)
{
    if (j.is_object() && j.contains("values")) {
        if (!j["values"].is_array())
            throw input_error("\"values\" must be an array");
        std::vector<Weight> out;
        for (const auto &v : j["values"])
            out.push_back(literal_of(v));
        return out;
    }
    MatrixInput m = read_matrix(j);
    if (m.cols != 1)
        throw input_error("right-hand side must be a \"values\" array or a one-column matrix");
    return m.entries;
}

inline DigraphInput read_digraph(const json &j)
{
    if (!j.is_object() || !j.contains("n"))
        throw input_error("digraph JSON needs \"n\"");
    DigraphInput g;
    g.n = index_of(j["n"], "n");
    if (j.contains("edges")) {
        if (!j["edges"].is_array())
            throw input_error("\"edges\" must be an array");
        for (const auto &e : j["edges"]) {
            if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("weight"))
                throw input_error("edge needs \"from\", \"to\" and \"weight\"");
            const std::size_t from = index_of(e["from"], "from");
            const std::size_t to = index_of(e["to"], "to");
            if (from >= g.n || to >= g.n)
                throw input_error("edge endpoint outside 0.." + std::to_string(g.n) + ")");
            g.edges.push_back({from, to});
            g.weights.push_back(literal_of(e["weight"]));
        }
    }
    return g;
}

// Comma-separated vertex indices, e.g. "0,2,5".
inline std::vector<std::size_t> parse_vertex_list(std::string_view text)
{
    std::vector<std::size_t> out;
    if (text.empty())
        return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view item = text.substr(pos, comma - pos);
        if (!detail::all_digits(item))
            throw input_error("malformed vertex list '" + std::string(text) + "'");
        out.push_back(static_cast<std::size_t>(std::stoull(std::string(item))));
        pos = comma + 1;
    }
    return out;
}

// Comma-separated weight literals, e.g. "-3,2".
inline std::vector<Weight> parse_literal_list(std::string_view text)
{
    std::vector<Weight> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        out.push_back(parse_literal(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

// Unifies the ring mode across several groups of literals in place.
inline Mode unify_modes(const std::vector<std::vector<Weight> *> &groups)
{
    std::vector<Weight> all;
    for (auto *g : groups)
        all.insert(all.end(), g->begin(), g->end());
    const Mode mode = combid::unify_modes(all);
    std::size_t k = 0;
    for (auto *g : groups)
        for (auto &w : *g)
            w = all[k++];
    return mode;
}

template <class T>
T weight_as(const Weight &w)
{
    if constexpr (std::is_same_v<T, Rational>) {
        if (w.mode() != Mode::rational)
            throw mode_mismatch();
        return w.rational();
    } else {
        if (w.mode() != Mode::symbolic)
            throw mode_mismatch();
        return w.poly();
    }
}

template <class T>
std::vector<T> weights_as(const std::vector<Weight> &ws)
{
    std::vector<T> out;
    out.reserve(ws.size());
    for (const auto &w : ws)
        out.push_back(weight_as<T>(w));
    return out;
}

template <class T>
Matrix<T> to_matrix(const MatrixInput &m)
{
    return Matrix<T>(m.rows, m.cols, weights_as<T>(m.entries));
}

template <class T>
Digraph<T> to_digraph(const DigraphInput &in)
{
    Digraph<T> g(in.n);
    for (std::size_t i = 0; i < in.edges.size(); ++i)
        g.add_edge(in.edges[i].from, in.edges[i].to, weight_as<T>(in.weights[i]));
    return g;
}

} // namespace combid::io
