#pragma once

#include <lsdgen/core/circuit.hpp>

#include <iosfwd>
#include <string>

namespace lsdgen
{

/*! \brief Writes a structural netlist.
 *
 * Primitive gates become built-in instantiations (`not buf and nand or nor xor xnor`).
 * Complex gates, LUTs and cells become continuous assignments of their expression,
 * followed by a tag comment `// <GATE> [cell] [table] <fanin nets...>` that the reader
 * uses to restore the node. The first line records the logic type.
 */
void write_verilog( circuit const& c, std::ostream& out );
std::string write_verilog( circuit const& c );

/*! \brief Reads the structural subset emitted by `write_verilog`.
 *
 * Untagged assignments over `~ & ^ |` become NOT/AND2/XOR2/OR2 trees. Behavioral
 * constructs raise `format_error` naming the offending line.
 */
circuit read_verilog( std::istream& in );
circuit read_verilog_string( std::string const& text );

} // namespace lsdgen
