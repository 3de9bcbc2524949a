#pragma once

#include <string>

#include "oriental/block.hpp"
#include "oriental/pile.hpp"

namespace oriental {

/// DOT digraph of a block: nesting as clustered subgraphs labeled by the
/// separator they carry, leaves in reading order. Deterministic output.
std::string render_block_dot(const Block& b, const std::string& title);

/// DOT digraph of a trace: one node per state, edges labeled by the
/// transition applied.
std::string render_trace_dot(const Trace& t, const std::string& title);

} // namespace oriental
