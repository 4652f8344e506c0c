#pragma once

#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "asph4/blocks.hpp"

namespace asph4::io {

using blocks::AssemblyGraph;
using blocks::Block;
using blocks::BlockKind;
using json = nlohmann::json;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void require_keys(const json& obj, const std::vector<std::string>& allowed,
                         const std::string& where) {
    if (!obj.is_object()) throw ParseError(where + ": expected an object");
    for (const auto& [key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ParseError(where + ": unknown field '" + key + "'");
    }
}

inline long long to_int64(const Int& x, const std::string& where) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw ParseError(where + ": entry does not fit in the file format");
    return x.convert_to<long long>();
}

inline json matrix_json(const sl2z::Sl2Matrix& m) {
    return json::array({to_int64(m.a(), "matrix"), to_int64(m.b(), "matrix"),
                        to_int64(m.c(), "matrix"), to_int64(m.d(), "matrix")});
}

inline sl2z::Sl2Matrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 4)
        throw ParseError(where + ": matrix must be four integers [a,b,c,d]");
    for (const auto& entry : j)
        if (!entry.is_number_integer()) throw ParseError(where + ": matrix entries must be integers");
    try {
        return {Int(j[0].get<long long>()), Int(j[1].get<long long>()),
                Int(j[2].get<long long>()), Int(j[3].get<long long>())};
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
}

/// Rebuilds the pristine factory block carrying the same parameters.
inline Block pristine_block(const Block& b) {
    switch (b.kind) {
        case BlockKind::Core: return blocks::core();
        case BlockKind::Splitter: return blocks::splitter();
        case BlockKind::Cap: return blocks::cap();
        case BlockKind::SixCap: return blocks::six_cap();
        case BlockKind::GenusThreeBundle: return blocks::genus_three_bundle();
        case BlockKind::Connector: return blocks::connector(*b.psi);
        case BlockKind::TwistCobordism: return blocks::twist_cobordism(b.genus_param);
        case BlockKind::TorusDiskBundle: return blocks::torus_disk_bundle(b.punctures);
    }
    throw std::logic_error("pristine_block: bad kind");
}

inline json parameters_json(const Block& b) {
    json params = json::object();
    switch (b.kind) {
        case BlockKind::Connector:
            params["psi"] = matrix_json(*b.psi);
            break;
        case BlockKind::TwistCobordism:
            params["genus"] = b.genus_param;
            break;
        case BlockKind::TorusDiskBundle: {
            json punctures = json::array();
            for (const auto& m : b.punctures) punctures.push_back(matrix_json(m));
            params["punctures"] = punctures;
            break;
        }
        default:
            break;
    }
    return params;
}

inline Block block_from_json(const std::string& kind, const json& params, const std::string& where) {
    if (kind == "core") {
        require_keys(params, {}, where);
        return blocks::core();
    }
    if (kind == "splitter") {
        require_keys(params, {}, where);
        return blocks::splitter();
    }
    if (kind == "cap") {
        require_keys(params, {}, where);
        return blocks::cap();
    }
    if (kind == "six_cap") {
        require_keys(params, {}, where);
        return blocks::six_cap();
    }
    if (kind == "genus_three_bundle") {
        require_keys(params, {}, where);
        return blocks::genus_three_bundle();
    }
    if (kind == "connector") {
        require_keys(params, {"psi"}, where);
        if (!params.contains("psi")) throw ParseError(where + ": connector needs 'psi'");
        return blocks::connector(matrix_from_json(params["psi"], where));
    }
    if (kind == "twist_cobordism") {
        require_keys(params, {"genus"}, where);
        if (!params.contains("genus") || !params["genus"].is_number_integer())
            throw ParseError(where + ": twist_cobordism needs integer 'genus'");
        try {
            return blocks::twist_cobordism(params["genus"].get<int>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (kind == "torus_disk_bundle") {
        require_keys(params, {"punctures"}, where);
        if (!params.contains("punctures") || !params["punctures"].is_array())
            throw ParseError(where + ": torus_disk_bundle needs 'punctures' array");
        std::vector<sl2z::Sl2Matrix> punctures;
        for (const auto& entry : params["punctures"])
            punctures.push_back(matrix_from_json(entry, where));
        try {
            return blocks::torus_disk_bundle(punctures);
        } catch (const std::invalid_argument& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    throw ParseError(where + ": unknown block kind '" + kind + "'");
}

}  // namespace detail

/// Version-1 assembly interchange document. Matrices appear as four integers
/// row-major; block ids are consecutive from zero.
inline std::string serialize(const AssemblyGraph& g) {
    json doc;
    doc["version"] = "1";
    json block_array = json::array();
    for (std::size_t i = 0; i < g.instances().size(); ++i) {
        const auto& [block, sign] = g.instances()[i];
        // A reversed factory block is the factory block with the opposite
        // instance orientation; the file stores the canonical form.
        const Block pristine = detail::pristine_block(block);
        int stored_sign = sign;
        if (block == pristine) {
        } else if (block == blocks::reversed(pristine)) {
            stored_sign = -sign;
        } else {
            throw std::invalid_argument("serialize: block is neither a factory block nor its reversal");
        }
        json entry;
        entry["id"] = i;
        entry["kind"] = blocks::kind_name(block.kind);
        entry["parameters"] = detail::parameters_json(block);
        entry["orientation"] = stored_sign;
        block_array.push_back(entry);
    }
    doc["blocks"] = block_array;
    json gluing_array = json::array();
    for (const auto& e : g.gluings()) {
        json entry;
        entry["from"] = json::array({e.from.instance, e.from.slot});
        entry["to"] = json::array({e.to.instance, e.to.slot});
        gluing_array.push_back(entry);
    }
    doc["gluings"] = gluing_array;
    return doc.dump(2) + "\n";
}

/// Strict parse: unknown fields, bad versions, out-of-order ids, and illegal
/// gluings are all rejected.
inline AssemblyGraph parse(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    detail::require_keys(doc, {"version", "blocks", "gluings"}, "document");
    if (!doc.contains("version") || doc["version"] != "1")
        throw ParseError("document: missing or unsupported version (expected \"1\")");
    if (!doc.contains("blocks") || !doc["blocks"].is_array())
        throw ParseError("document: missing 'blocks' array");
    if (!doc.contains("gluings") || !doc["gluings"].is_array())
        throw ParseError("document: missing 'gluings' array");

    AssemblyGraph g;
    std::size_t expected_id = 0;
    for (const auto& entry : doc["blocks"]) {
        const std::string where = "blocks[" + std::to_string(expected_id) + "]";
        detail::require_keys(entry, {"id", "kind", "parameters", "orientation"}, where);
        for (const char* field : {"id", "kind", "parameters", "orientation"})
            if (!entry.contains(field)) throw ParseError(where + ": missing '" + field + "'");
        if (!entry["id"].is_number_unsigned() || entry["id"].get<std::size_t>() != expected_id)
            throw ParseError(where + ": ids must be consecutive from 0");
        if (!entry["kind"].is_string()) throw ParseError(where + ": 'kind' must be a string");
        const int orientation = entry["orientation"].is_number_integer()
                                    ? entry["orientation"].get<int>()
                                    : 0;
        if (orientation != 1 && orientation != -1)
            throw ParseError(where + ": orientation must be 1 or -1");
        g.add_instance(detail::block_from_json(entry["kind"].get<std::string>(),
                                               entry["parameters"], where),
                       orientation);
        ++expected_id;
    }
    std::size_t edge_index = 0;
    for (const auto& entry : doc["gluings"]) {
        const std::string where = "gluings[" + std::to_string(edge_index++) + "]";
        detail::require_keys(entry, {"from", "to"}, where);
        for (const char* field : {"from", "to"}) {
            if (!entry.contains(field) || !entry[field].is_array() || entry[field].size() != 2 ||
                !entry[field][0].is_number_unsigned() || !entry[field][1].is_number_unsigned())
                throw ParseError(where + ": '" + field + "' must be [block id, slot index]");
        }
        try {
            g.add_gluing({entry["from"][0].get<std::size_t>(), entry["from"][1].get<std::size_t>()},
                         {entry["to"][0].get<std::size_t>(), entry["to"][1].get<std::size_t>()});
        } catch (const blocks::UnknownSlot& e) {
            throw ParseError(where + ": " + e.what());
        } catch (const blocks::SlotInUse& e) {
            throw ParseError(where + ": " + e.what());
        }
        // IllegalGluing propagates: the file describes an illegal assembly.
    }
    return g;
}

/// DOT rendering: one node per block instance, one edge per gluing labeled
/// with the monodromy identified along it.
inline std::string to_dot(const AssemblyGraph& g) {
    std::ostringstream os;
    os << "graph assembly {\n";
    os << "  node [shape=box];\n";
    for (std::size_t i = 0; i < g.instances().size(); ++i) {
        const auto& [block, sign] = g.instances()[i];
        os << "  b" << i << " [label=\"" << blocks::kind_name(block.kind) << " "
           << (sign > 0 ? "+" : "-") << " chi=" << block.chi << "\"];\n";
    }
    for (const auto& e : g.gluings()) {
        const auto label = g.slot_label(e.from);
        std::string text = label.fiber_genus == 1 ? label.effective_class().to_string()
                                                  : label.to_string();
        os << "  b" << e.from.instance << " -- b" << e.to.instance << " [label=\"" << text
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace asph4::io
