#include "layrec/gml.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <variant>
#include <vector>

namespace layrec {

namespace {

struct Token {
    enum class Type { Key, Integer, Real, String, ListOpen, ListClose, End };
    Type type = Type::End;
    std::string text;
    long long int_value = 0;
    double real_value = 0.0;
    std::size_t line = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space_and_comments();
        Token token;
        token.line = line_;
        if (pos_ >= text_.size()) {
            token.type = Token::Type::End;
            return token;
        }
        const char c = text_[pos_];
        if (c == '[') {
            ++pos_;
            token.type = Token::Type::ListOpen;
            return token;
        }
        if (c == ']') {
            ++pos_;
            token.type = Token::Type::ListClose;
            return token;
        }
        if (c == '"') {
            token.type = Token::Type::String;
            token.text = read_string();
            return token;
        }
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            return read_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            token.type = Token::Type::Key;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                token.text += text_[pos_++];
            }
            return token;
        }
        throw ParseError(std::string("unexpected character '") + c + "' in GML input",
                         line_);
    }

private:
    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::string read_string() {
        const std::size_t start_line = line_;
        ++pos_;  // opening quote
        std::string out;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '"') {
                ++pos_;
                return out;
            }
            if (c == '\\' && pos_ + 1 < text_.size()) {
                out += text_[pos_ + 1];
                pos_ += 2;
                continue;
            }
            if (c == '\n') ++line_;
            out += c;
            ++pos_;
        }
        throw ParseError("unterminated string in GML input", start_line);
    }

    Token read_number() {
        Token token;
        token.line = line_;
        std::string digits;
        bool real = false;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
                digits += c;
            } else if (c == '.' || c == 'e' || c == 'E') {
                digits += c;
                real = true;
            } else {
                break;
            }
            ++pos_;
        }
        try {
            if (real) {
                token.type = Token::Type::Real;
                token.real_value = std::stod(digits);
            } else {
                token.type = Token::Type::Integer;
                token.int_value = std::stoll(digits);
            }
        } catch (const std::exception&) {
            throw ParseError("malformed number '" + digits + "' in GML input",
                             token.line);
        }
        return token;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

struct GmlValue;
using GmlList = std::vector<std::pair<std::string, GmlValue>>;

struct GmlValue {
    std::variant<long long, double, std::string, GmlList> data;
    std::size_t line = 0;
};

// Parses `key value` pairs until the closing token.
GmlList parse_list(Lexer& lexer, bool top_level) {
    GmlList entries;
    for (;;) {
        Token token = lexer.next();
        if (token.type == Token::Type::End) {
            if (top_level) return entries;
            throw ParseError("unexpected end of GML input inside a list", token.line);
        }
        if (token.type == Token::Type::ListClose) {
            if (top_level) {
                throw ParseError("unmatched ']' in GML input", token.line);
            }
            return entries;
        }
        if (token.type != Token::Type::Key) {
            throw ParseError("expected a key in GML input", token.line);
        }
        Token value = lexer.next();
        GmlValue entry;
        entry.line = value.line;
        switch (value.type) {
            case Token::Type::Integer: entry.data = value.int_value; break;
            case Token::Type::Real: entry.data = value.real_value; break;
            case Token::Type::String: entry.data = value.text; break;
            case Token::Type::ListOpen: entry.data = parse_list(lexer, false); break;
            default:
                throw ParseError("missing value for key '" + token.text + "'",
                                 value.line);
        }
        entries.emplace_back(token.text, std::move(entry));
    }
}

const GmlValue* find_entry(const GmlList& list, std::string_view key) {
    for (const auto& [k, v] : list) {
        if (k == key) return &v;
    }
    return nullptr;
}

std::optional<long long> int_entry(const GmlList& list, std::string_view key) {
    const GmlValue* value = find_entry(list, key);
    if (value == nullptr) return std::nullopt;
    if (const auto* i = std::get_if<long long>(&value->data)) return *i;
    throw ParseError("attribute '" + std::string(key) + "' must be an integer",
                     value->line);
}

std::optional<std::string> string_entry(const GmlList& list, std::string_view key) {
    const GmlValue* value = find_entry(list, key);
    if (value == nullptr) return std::nullopt;
    if (const auto* s = std::get_if<std::string>(&value->data)) return *s;
    throw ParseError("attribute '" + std::string(key) + "' must be a string",
                     value->line);
}

std::string escape_gml_string(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

DependencyNetwork parse_gml(std::string_view text) {
    Lexer lexer(text);
    GmlList document = parse_list(lexer, true);

    const GmlValue* graph = find_entry(document, "graph");
    if (graph == nullptr || !std::holds_alternative<GmlList>(graph->data)) {
        throw ParseError("GML input has no top-level 'graph [...]' block", 1);
    }
    const GmlList& body = std::get<GmlList>(graph->data);

    DependencyNetwork network;
    // Nodes first so edges can reference ids regardless of block order.
    for (const auto& [key, value] : body) {
        if (key != "node") continue;
        if (!std::holds_alternative<GmlList>(value.data)) {
            throw ParseError("'node' must be a [...] block", value.line);
        }
        const GmlList& attrs = std::get<GmlList>(value.data);
        auto id = int_entry(attrs, "id");
        if (!id) {
            throw ParseError("node block without an integer 'id'", value.line);
        }
        ProgramElement element;
        element.id = std::to_string(*id);
        element.name = string_entry(attrs, "label").value_or(element.id);
        if (auto kind = string_entry(attrs, "kind")) {
            element.kind = element_kind_from_string(*kind);
        }
        network.add_node(std::move(element));
    }
    for (const auto& [key, value] : body) {
        if (key != "edge") continue;
        if (!std::holds_alternative<GmlList>(value.data)) {
            throw ParseError("'edge' must be a [...] block", value.line);
        }
        const GmlList& attrs = std::get<GmlList>(value.data);
        auto source = int_entry(attrs, "source");
        auto target = int_entry(attrs, "target");
        if (!source || !target) {
            throw ParseError("edge block needs integer 'source' and 'target'",
                             value.line);
        }
        DependencyEdge edge;
        edge.source = std::to_string(*source);
        edge.target = std::to_string(*target);
        auto kind = string_entry(attrs, "kind");
        if (!kind) kind = string_entry(attrs, "relationship");
        if (kind) edge.kind = edge_kind_from_string(*kind);
        network.add_edge(std::move(edge));
    }
    return network;
}

std::string emit_gml(const DependencyNetwork& network) {
    std::vector<std::size_t> order(network.node_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return natural_id_less(network.node_at(a).id, network.node_at(b).id);
    });

    // Dense renumbering: identity is carried by the label.
    std::map<std::string, int> new_id;
    for (std::size_t i = 0; i < order.size(); ++i) {
        new_id[network.node_at(order[i]).id] = static_cast<int>(i);
    }

    std::ostringstream out;
    out << "graph [\n";
    out << "  directed 1\n";
    for (std::size_t index : order) {
        const ProgramElement& node = network.node_at(index);
        out << "  node [ id " << new_id[node.id] << " label \""
            << escape_gml_string(node.name) << "\"";
        if (node.kind != ElementKind::Unknown) {
            out << " kind \"" << to_string(node.kind) << "\"";
        }
        out << " ]\n";
    }

    std::vector<std::pair<std::pair<int, int>, EdgeKind>> edges;
    edges.reserve(network.edge_count());
    for (const DependencyEdge& edge : network.edges()) {
        edges.push_back({{new_id[edge.source], new_id[edge.target]}, edge.kind});
    }
    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [pair, kind] : edges) {
        out << "  edge [ source " << pair.first << " target " << pair.second;
        if (kind != EdgeKind::Unknown) {
            out << " kind \"" << to_string(kind) << "\"";
        }
        out << " ]\n";
    }
    out << "]\n";
    return out.str();
}

}  // namespace layrec
