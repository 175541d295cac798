#pragma once

#include <lsdgen/core/circuit.hpp>
#include <lsdgen/io/qor.hpp>
#include <lsdgen/techmap/library.hpp>

#include <vector>

namespace lsdgen
{

/*! \brief Static timing of a cell netlist.
 *
 * arrival(n) = max over pins i of arrival(fanin_i) + pin_delay_i + wire * max(0, fanout(fanin_i) - 1),
 * with PIs and constants at 0. The reported arrival is the latest PO. `arrivals`, when
 * given, receives the per-node values. Unknown cells raise `format_error`.
 */
qor_record sta( circuit const& netlist, cell_library const& lib, double wire_delay_per_fanout = 0.0,
                std::vector<double>* arrivals = nullptr );

/*! \brief LUT count as area, LUT levels as depth and arrival. */
qor_record fpga_qor( circuit const& netlist );

} // namespace lsdgen
