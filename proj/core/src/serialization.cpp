#include "sauto/serialization.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sauto {

using nlohmann::json;

namespace {

json automaton_json(const Transducer& t) {
    json doc;
    doc["states"] = t.state_names();
    doc["alphabet"] = t.letter_names();
    json transitions = json::array();
    for (const Transition& tr : t.transitions()) {
        transitions.push_back({{"from", tr.from}, {"in", tr.in}, {"out", tr.out}, {"to", tr.to}});
    }
    doc["transitions"] = std::move(transitions);
    return doc;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::vector<std::string> string_array(const json& value, const std::string& field) {
    if (!value.is_array()) throw ParseError("field '" + field + "' must be an array of strings");
    std::vector<std::string> result;
    for (const auto& entry : value) {
        if (!entry.is_string())
            throw ParseError("field '" + field + "' must contain only strings");
        result.push_back(entry.get<std::string>());
    }
    return result;
}

const json& required(const json& doc, const std::string& field) {
    auto it = doc.find(field);
    if (it == doc.end()) throw ParseError("missing field '" + field + "'");
    return *it;
}

// A tile component is either a string of single-character symbols or an
// array of symbol strings.
std::vector<std::string> tile_word(const json& value, const std::string& where) {
    if (value.is_string()) {
        std::vector<std::string> word;
        for (char c : value.get<std::string>()) word.emplace_back(1, c);
        return word;
    }
    if (value.is_array()) return string_array(value, where);
    throw ParseError(where + " must be a string or an array of symbols");
}

json tiles_json(const std::vector<std::vector<std::string>>& phi,
                const std::vector<std::vector<std::string>>& psi) {
    auto component = [](const std::vector<std::string>& word) -> json {
        bool single_chars = true;
        for (const auto& s : word) single_chars &= s.size() == 1;
        if (single_chars) {
            std::string text;
            for (const auto& s : word) text += s;
            return text;
        }
        return word;
    };
    json tiles = json::array();
    for (std::size_t i = 0; i < phi.size(); ++i) {
        tiles.push_back({{"phi", component(phi[i])}, {"psi", component(psi[i])}});
    }
    return tiles;
}

void parse_tiles(const json& doc, std::vector<std::vector<std::string>>& phi,
                 std::vector<std::vector<std::string>>& psi) {
    const json& tiles = required(doc, "tiles");
    if (!tiles.is_array() || tiles.empty())
        throw ParseError("field 'tiles' must be a non-empty array");
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        const json& tile = tiles[i];
        std::string where = "tile " + std::to_string(i + 1);
        if (!tile.is_object()) throw ParseError(where + " must be an object");
        phi.push_back(tile_word(required(tile, "phi"), where + " phi"));
        psi.push_back(tile_word(required(tile, "psi"), where + " psi"));
    }
}

} // namespace

std::string serialize_automaton(const Transducer& t) {
    return automaton_json(t).dump(2) + "\n";
}

TransducerSpec parse_automaton_spec(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("automaton document must be an object");
    TransducerSpec spec;
    spec.states = string_array(required(doc, "states"), "states");
    spec.alphabet = string_array(required(doc, "alphabet"), "alphabet");
    const json& transitions = required(doc, "transitions");
    if (!transitions.is_array()) throw ParseError("field 'transitions' must be an array");
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        const json& tr = transitions[i];
        std::string where = "transition " + std::to_string(i + 1);
        if (!tr.is_object()) throw ParseError(where + " must be an object");
        auto field = [&](const char* name) {
            auto it = tr.find(name);
            if (it == tr.end()) throw ParseError(where + ": missing field '" + name + "'");
            if (!it->is_string()) throw ParseError(where + " field '" + name + "' must be a string");
            return it->get<std::string>();
        };
        spec.transitions.push_back({field("from"), field("in"), field("out"), field("to")});
    }
    return spec;
}

Transducer parse_automaton(const std::string& text) {
    return Transducer::from_spec(parse_automaton_spec(text));
}

std::string serialize_instance(const PcpInstance& instance) {
    json doc;
    doc["lambda"] = instance.lambda;
    doc["tiles"] = tiles_json(instance.phi, instance.psi);
    if (instance.lambda_sharp) doc["lambda_sharp"] = *instance.lambda_sharp;
    if (instance.lambda_r) doc["lambda_r"] = *instance.lambda_r;
    return doc.dump(2) + "\n";
}

std::string serialize_instance(const EpcpInstance& instance) {
    json doc;
    doc["lambda"] = instance.lambda;
    doc["padding"] = instance.padding;
    doc["tiles"] = tiles_json(instance.phi, instance.psi);
    return doc.dump(2) + "\n";
}

AnyInstance parse_instance(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("instance document must be an object");
    try {
        if (doc.contains("padding")) {
            EpcpInstance instance;
            instance.lambda = string_array(required(doc, "lambda"), "lambda");
            const json& pad = required(doc, "padding");
            if (!pad.is_string()) throw ParseError("field 'padding' must be a string");
            instance.padding = pad.get<std::string>();
            parse_tiles(doc, instance.phi, instance.psi);
            instance.check();
            return instance;
        }
        PcpInstance instance;
        instance.lambda = string_array(required(doc, "lambda"), "lambda");
        parse_tiles(doc, instance.phi, instance.psi);
        if (doc.contains("lambda_sharp")) {
            instance.lambda_sharp = required(doc, "lambda_sharp").get<std::string>();
        }
        if (doc.contains("lambda_r")) {
            instance.lambda_r = required(doc, "lambda_r").get<std::string>();
        }
        instance.check();
        return instance;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string export_dot(const Transducer& t) {
    std::ostringstream os;
    os << "digraph transducer {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=circle];\n";
    for (const auto& s : t.state_names()) os << "  \"" << s << "\";\n";
    for (const Transition& tr : t.transitions()) {
        os << "  \"" << tr.from << "\" -> \"" << tr.to << "\" [label=\"" << tr.in << "/" << tr.out
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

} // namespace sauto
