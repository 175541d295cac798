#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace lsdgen
{

/*! \brief Gate tags of the circuit model.
 *
 * Pin order for three-input gates is (A, B, C); fanin 0 is A.
 */
enum class gate_type : std::uint8_t
{
  const0,
  const1,
  pi,
  po,
  not_,
  buffer,
  and2,
  nand2,
  or2,
  nor2,
  xor2,
  xnor2,
  maj3,
  nand3,
  nor3,
  mux21,
  nmux21,
  aoi21,
  oai21,
  lut,
  cell
};

inline constexpr std::size_t num_gate_types = 21;

/*! \brief Network and netlist kinds, each with its own legal gate set. */
enum class logic_type : std::uint8_t
{
  aig,
  oig,
  xag,
  mig,
  primary,
  gtg,
  asic_netlist,
  fpga_netlist
};

inline constexpr std::size_t num_logic_types = 8;

/*! \brief The six network kinds produced by blasting, in canonical group order. */
inline constexpr std::array<logic_type, 6> network_types = { logic_type::aig, logic_type::oig, logic_type::xag,
                                                             logic_type::mig, logic_type::primary, logic_type::gtg };

struct arity_range
{
  std::uint32_t min;
  std::uint32_t max;
};

arity_range gate_arity( gate_type g );

/*! \brief True for gates with a fixed built-in function (everything except LUT and CELL). */
constexpr bool is_fixed_function( gate_type g ) { return g != gate_type::lut && g != gate_type::cell; }

/*! \brief Canonical 64-bit tiled truth table of a fixed gate.
 *
 * PI has no local function and reports 0. PO and BUFFER are the identity of fanin 0.
 */
std::uint64_t canonical_truth_table( gate_type g );

std::string_view gate_name( gate_type g );
std::optional<gate_type> parse_gate_name( std::string_view name );

std::string_view logic_type_name( logic_type t );
std::optional<logic_type> parse_logic_type( std::string_view name );

/*! \brief Whether a gate type belongs to the functionally complete set of a logic type.
 *
 * CONST0/CONST1/PI/PO/BUFFER are legal in every logic type.
 */
bool is_allowed( logic_type t, gate_type g );

} // namespace lsdgen
