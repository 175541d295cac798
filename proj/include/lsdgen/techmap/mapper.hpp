#pragma once

#include <lsdgen/core/circuit.hpp>
#include <lsdgen/techmap/library.hpp>

#include <cstdint>

namespace lsdgen
{

enum class lut_mode
{
  area,
  depth
};

enum class asic_mode
{
  area,
  delay
};

/*! \brief K-LUT mapping of any circuit into an FPGA_NETLIST.
 *
 * Depth mode picks the cut with the lowest LUT level, area mode the lowest area flow;
 * each uses the other figure as tie-break. Nodes needing more than `k` inputs raise `usage_error`.
 */
circuit map_lut( circuit const& c, std::uint32_t k = 6u, lut_mode mode = lut_mode::depth );

/*! \brief Cut-based standard-cell mapping into an ASIC_NETLIST.
 *
 * Cuts of up to four leaves are matched against library cells by NPN class; negated
 * pins and outputs get shared inverter cells. Gates no cut can cover are first
 * decomposed into AND2/NOT, which a complete library always covers.
 */
circuit map_asic( circuit const& c, cell_library const& lib, asic_mode mode = asic_mode::area );

} // namespace lsdgen
