#include "oriental/render.hpp"

#include <sstream>

namespace oriental {

namespace {

void emit_block(const Block& b, std::ostringstream& out, std::string path, int depth,
                std::vector<std::string>& leaf_ids) {
    std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    if (b.is_leaf()) {
        std::string id = "w" + path;
        out << indent << id << " [label=\"" << to_string(b.word()) << "\", shape=box];\n";
        leaf_ids.push_back(id);
        return;
    }
    out << indent << "subgraph cluster" << path << " {\n";
    out << indent << "  label=\"*" << b.level() - 1 << "\";\n";
    std::size_t i = 0;
    for (const auto& c : b.children()) {
        emit_block(c, out, path + "_" + std::to_string(i), depth + 1, leaf_ids);
        ++i;
    }
    out << indent << "}\n";
}

} // namespace

std::string render_block_dot(const Block& b, const std::string& title) {
    std::ostringstream out;
    out << "digraph \"" << title << "\" {\n";
    out << "  rankdir=LR;\n";
    std::vector<std::string> leaves;
    emit_block(b, out, "0", 1, leaves);
    for (std::size_t i = 0; i + 1 < leaves.size(); ++i)
        out << "  " << leaves[i] << " -> " << leaves[i + 1] << ";\n";
    out << "}\n";
    return out.str();
}

std::string render_trace_dot(const Trace& t, const std::string& title) {
    std::ostringstream out;
    out << "digraph \"" << title << "\" {\n";
    out << "  rankdir=LR;\n";
    for (std::size_t i = 0; i < t.state_count(); ++i) {
        const Pile& p = t.state(i);
        out << "  s" << i << " [shape=record, label=\"s" << i;
        for (std::size_t j = 0; j < p.levels().size(); ++j) {
            out << "|v" << j << ":";
            for (const auto& w : p.level(j)) out << " " << to_string(w);
        }
        out << "\"];\n";
    }
    for (std::size_t i = 0; i < t.steps.size(); ++i)
        out << "  s" << i << " -> s" << i + 1 << " [label=\"" << t.steps[i].label.to_string()
            << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace oriental
