#pragma once

#include <string>

#include <json.hpp>

#include <rclosure/encoder.hpp>

namespace rclosure {

/// Serialize a trace as a compact JSON document:
///   {"k":2,"s":1,"theta":{"1":2},"delta":[{"indices":[1],"color":0}]}
/// Keys appear in fixed order, theta keys ascend, delta entries are sorted by
/// their index sets, so identical traces serialize to identical bytes.
inline std::string trace_to_json(const EncodingTrace& trace) {
    nlohmann::ordered_json doc;
    doc["k"] = trace.k;
    doc["s"] = trace.steps;
    nlohmann::ordered_json theta = nlohmann::ordered_json::object();
    for (const auto& [i, n] : trace.theta) theta[std::to_string(i)] = n;
    doc["theta"] = std::move(theta);
    nlohmann::ordered_json delta = nlohmann::ordered_json::array();
    for (const auto& [indices, color] : trace.delta) {
        nlohmann::ordered_json entry;
        entry["indices"] = indices;
        entry["color"] = color;
        delta.push_back(std::move(entry));
    }
    doc["delta"] = std::move(delta);
    return doc.dump();
}

/// Parse a trace document. Raises trace_error on malformed JSON, wrong field
/// types, non-ascending or duplicate index sets, or duplicate theta keys.
/// Domain completeness (no gaps, exactly the index sets the construction
/// touches) is checked by decode, which knows the arity's shape.
inline EncodingTrace trace_from_json(const std::string& text) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw trace_error(std::string("trace_from_json: invalid JSON: ") + e.what());
    }

    EncodingTrace trace;
    try {
        if (!doc.is_object() || !doc.contains("k") || !doc.contains("s") ||
            !doc.contains("theta") || !doc.contains("delta"))
            throw trace_error("trace_from_json: document must carry k, s, theta, delta");
        trace.k = doc.at("k").get<int>();
        trace.steps = doc.at("s").get<long long>();

        const auto& theta = doc.at("theta");
        if (!theta.is_object()) throw trace_error("trace_from_json: theta must be an object");
        for (const auto& [key, value] : theta.items()) {
            std::size_t used = 0;
            long long i = 0;
            try {
                i = std::stoll(key, &used);
            } catch (const std::exception&) {
                throw trace_error("trace_from_json: theta key is not an integer: " + key);
            }
            if (used != key.size())
                throw trace_error("trace_from_json: theta key is not an integer: " + key);
            if (!trace.theta.emplace(i, value.get<long long>()).second)
                throw trace_error("trace_from_json: duplicate theta key " + key);
        }

        const auto& delta = doc.at("delta");
        if (!delta.is_array()) throw trace_error("trace_from_json: delta must be an array");
        for (const auto& entry : delta) {
            if (!entry.is_object() || !entry.contains("indices") || !entry.contains("color"))
                throw trace_error("trace_from_json: delta entry must carry indices and color");
            auto indices = entry.at("indices").get<std::vector<long long>>();
            for (std::size_t j = 0; j + 1 < indices.size(); ++j)
                if (indices[j] >= indices[j + 1])
                    throw trace_error("trace_from_json: delta indices must be strictly ascending");
            if (indices.empty() || indices.front() < 1)
                throw trace_error("trace_from_json: delta indices must be positive");
            if (!trace.delta.emplace(std::move(indices), entry.at("color").get<int>()).second)
                throw trace_error("trace_from_json: duplicate delta index set");
        }
    } catch (const nlohmann::json::exception& e) {
        throw trace_error(std::string("trace_from_json: malformed field: ") + e.what());
    }
    return trace;
}

} // namespace rclosure
