#pragma once

#include <string>

#include <json.hpp>

#include "relucalc/network.hpp"

// Network file format:
//   {"dims": [l0, l1, ..., lL], "layers": [{"W": [[...]], "b": [...]}, ...]}
// Numbers are emitted as shortest round-trip decimals, so serialize followed
// by deserialize reproduces every entry bit-exactly.  Unknown top-level keys
// are ignored on input; tools may attach extra metadata (e.g. a "target"
// block) without breaking the format.

namespace relucalc {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

inline nlohmann::json network_to_json(const Network& net) {
    nlohmann::json doc;
    doc["dims"] = dims_of(net);
    nlohmann::json layers = nlohmann::json::array();
    for (const Layer& l : net.layers) {
        nlohmann::json jl;
        nlohmann::json w = nlohmann::json::array();
        for (int i = 0; i < l.out_dim(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < l.in_dim(); ++j) row.push_back(l.weights(i, j));
            w.push_back(std::move(row));
        }
        jl["W"] = std::move(w);
        jl["b"] = l.bias;
        layers.push_back(std::move(jl));
    }
    doc["layers"] = std::move(layers);
    return doc;
}

inline Network network_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("layers"))
        throw ParseError("network document must contain \"dims\" and \"layers\"");
    std::vector<int> dims;
    try {
        dims = doc.at("dims").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad \"dims\": ") + e.what());
    }
    if (dims.size() < 2) throw ParseError("\"dims\" must have length >= 2");
    const nlohmann::json& jlayers = doc.at("layers");
    if (!jlayers.is_array() || jlayers.size() != dims.size() - 1)
        throw ParseError("\"layers\" must be an array of length dims-1");

    std::vector<Layer> layers;
    for (size_t k = 0; k < jlayers.size(); ++k) {
        const std::string where = "layer " + std::to_string(k + 1);
        const nlohmann::json& jl = jlayers[k];
        if (!jl.is_object() || !jl.contains("W") || !jl.contains("b"))
            throw ParseError(where + ": missing \"W\" or \"b\"");
        const int rows = dims[k + 1], cols = dims[k];
        if (rows < 1 || cols < 1) throw ParseError(where + ": dims entries must be >= 1");
        const nlohmann::json& jw = jl.at("W");
        if (!jw.is_array() || static_cast<int>(jw.size()) != rows)
            throw ParseError(where + ": \"W\" must have " + std::to_string(rows) + " rows");
        Matrix w(rows, cols);
        for (int i = 0; i < rows; ++i) {
            const nlohmann::json& jrow = jw[i];
            if (!jrow.is_array() || static_cast<int>(jrow.size()) != cols)
                throw ParseError(where + ": row " + std::to_string(i + 1) + " of \"W\" must have " +
                                 std::to_string(cols) + " entries");
            for (int j = 0; j < cols; ++j) {
                if (!jrow[j].is_number()) throw ParseError(where + ": non-numeric weight entry");
                w(i, j) = jrow[j].get<double>();
            }
        }
        const nlohmann::json& jb = jl.at("b");
        if (!jb.is_array() || static_cast<int>(jb.size()) != rows)
            throw ParseError(where + ": \"b\" must have " + std::to_string(rows) + " entries (bias length mismatch)");
        Vector b(rows);
        for (int i = 0; i < rows; ++i) {
            if (!jb[i].is_number()) throw ParseError(where + ": non-numeric bias entry");
            b[i] = jb[i].get<double>();
        }
        if (!all_finite(w) || !all_finite(b)) throw ParseError(where + ": non-finite entry");
        layers.emplace_back(std::move(w), std::move(b));
    }
    try {
        return Network(std::move(layers));
    } catch (const ShapeError& e) {
        throw ParseError(e.what());
    }
}

inline std::string serialize(const Network& net) { return network_to_json(net).dump(); }

inline Network deserialize(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return network_from_json(doc);
}

}  // namespace relucalc
