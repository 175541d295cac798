#pragma once

#include <lsdgen/core/circuit.hpp>

#include <iosfwd>
#include <string>

namespace lsdgen
{

/*! \brief Writes a circuit as GraphML.
 *
 * Node keys `type`, `name`, `tt` (16 hex digits) and optional `origin`; edge key `slot`
 * (pin position); graph keys `logic_type` and `design`. Nodes appear in topological
 * order with ids `n<index>`, edges sorted by (target, slot). Output is deterministic.
 */
void write_graphml( circuit const& c, std::ostream& out );
std::string write_graphml( circuit const& c );

/*! \brief Reads GraphML produced by `write_graphml`; throws `format_error`.
 *
 * Loads in two phases: all nodes first, then fanins wired per edge in slot order.
 */
circuit read_graphml( std::istream& in );
circuit read_graphml_string( std::string const& text );

} // namespace lsdgen
