#include "pebbling/graph_spec.hpp"

#include <cctype>
#include <fstream>

#include "pebbling/errors.hpp"

namespace pebbling {

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    GraphSpecNode parse() {
        GraphSpecNode node = parse_node();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("graph spec: trailing input '" + std::string(text_.substr(pos_)) + "'", pos_);
        return node;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("graph spec: unexpected end of input", pos_);
        return text_[pos_];
    }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("graph spec: expected '") + c + "', found '" + text_[pos_] + "'", pos_);
        ++pos_;
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000000) throw ParseError("graph spec: order too large", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError("graph spec: expected an integer", pos_);
        return static_cast<int>(value);
    }

    GraphSpecNode parse_node() {
        char c = peek();
        GraphSpecNode node;
        switch (c) {
            case 'P':
            case 'C':
            case 'K': {
                ++pos_;
                expect(':');
                node.kind = c == 'P' ? GraphSpecNode::Kind::path
                          : c == 'C' ? GraphSpecNode::Kind::cycle
                                     : GraphSpecNode::Kind::complete;
                node.order = parse_int();
                return node;
            }
            case 'T': {
                ++pos_;
                expect('(');
                node.kind = GraphSpecNode::Kind::total;
                node.children.push_back(parse_node());
                expect(')');
                return node;
            }
            case 'X': {
                ++pos_;
                expect('(');
                node.kind = GraphSpecNode::Kind::product;
                node.children.push_back(parse_node());
                expect(',');
                node.children.push_back(parse_node());
                expect(')');
                return node;
            }
            default:
                throw ParseError(std::string("graph spec: unexpected token '") + c + "'", pos_);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

GraphSpecNode parse_spec(std::string_view text) {
    return SpecParser(text).parse();
}

std::string render_spec(const GraphSpecNode& node) {
    switch (node.kind) {
        case GraphSpecNode::Kind::path:     return "P:" + std::to_string(node.order);
        case GraphSpecNode::Kind::cycle:    return "C:" + std::to_string(node.order);
        case GraphSpecNode::Kind::complete: return "K:" + std::to_string(node.order);
        case GraphSpecNode::Kind::total:    return "T(" + render_spec(node.children[0]) + ")";
        case GraphSpecNode::Kind::product:
            return "X(" + render_spec(node.children[0]) + "," + render_spec(node.children[1]) + ")";
    }
    throw InvalidParameter("render_spec: bad node");
}

Graph build_graph(const GraphSpecNode& node) {
    switch (node.kind) {
        case GraphSpecNode::Kind::path:     return build_path(node.order);
        case GraphSpecNode::Kind::cycle:    return build_cycle(node.order);
        case GraphSpecNode::Kind::complete: return build_complete(node.order);
        case GraphSpecNode::Kind::total:    return total_graph(build_graph(node.children[0]));
        case GraphSpecNode::Kind::product:
            return cartesian_product(build_graph(node.children[0]), build_graph(node.children[1]));
    }
    throw InvalidParameter("build_graph: bad node");
}

Graph parse_graph_spec(std::string_view text) {
    if (!text.empty() && text.front() == '@') {
        std::string path(text.substr(1));
        std::ifstream in(path);
        if (!in) throw InvalidParameter("cannot open edge-list file '" + path + "'");
        return read_edge_list(in, "@" + path);
    }
    return build_graph(parse_spec(text));
}

} // namespace pebbling
