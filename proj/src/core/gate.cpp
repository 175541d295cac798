#include <lsdgen/core/gate.hpp>
#include <lsdgen/core/truth_table.hpp>

#include <cctype>
#include <string>

namespace lsdgen
{

namespace
{

struct gate_info
{
  std::string_view name;
  arity_range arity;
};

constexpr std::array<gate_info, num_gate_types> gate_table = { {
    { "CONST0", { 0, 0 } },
    { "CONST1", { 0, 0 } },
    { "PI", { 0, 0 } },
    { "PO", { 1, 1 } },
    { "NOT", { 1, 1 } },
    { "BUFFER", { 1, 1 } },
    { "AND2", { 2, 2 } },
    { "NAND2", { 2, 2 } },
    { "OR2", { 2, 2 } },
    { "NOR2", { 2, 2 } },
    { "XOR2", { 2, 2 } },
    { "XNOR2", { 2, 2 } },
    { "MAJ3", { 3, 3 } },
    { "NAND3", { 3, 3 } },
    { "NOR3", { 3, 3 } },
    { "MUX21", { 3, 3 } },
    { "NMUX21", { 3, 3 } },
    { "AOI21", { 3, 3 } },
    { "OAI21", { 3, 3 } },
    { "LUT", { 1, 6 } },
    { "CELL", { 1, 6 } },
} };

constexpr std::array<std::string_view, num_logic_types> logic_names = {
    "AIG", "OIG", "XAG", "MIG", "PRIMARY", "GTG", "ASIC_NETLIST", "FPGA_NETLIST" };

constexpr std::uint64_t A = var_masks[0];
constexpr std::uint64_t B = var_masks[1];
constexpr std::uint64_t C = var_masks[2];

} // namespace

arity_range gate_arity( gate_type g ) { return gate_table[static_cast<std::size_t>( g )].arity; }

std::uint64_t canonical_truth_table( gate_type g )
{
  switch ( g )
  {
  case gate_type::const0:
  case gate_type::pi:
  case gate_type::lut:
  case gate_type::cell:
    return 0u;
  case gate_type::const1:
    return ~0ull;
  case gate_type::po:
  case gate_type::buffer:
    return A;
  case gate_type::not_:
    return ~A;
  case gate_type::and2:
    return A & B;
  case gate_type::nand2:
    return ~( A & B );
  case gate_type::or2:
    return A | B;
  case gate_type::nor2:
    return ~( A | B );
  case gate_type::xor2:
    return A ^ B;
  case gate_type::xnor2:
    return ~( A ^ B );
  case gate_type::maj3:
    return ( A & B ) | ( A & C ) | ( B & C );
  case gate_type::nand3:
    return ~( A & B & C );
  case gate_type::nor3:
    return ~( A | B | C );
  case gate_type::mux21:
    return ( C & B ) | ( ~C & A );
  case gate_type::nmux21:
    return ( C & A ) | ( ~C & B );
  case gate_type::aoi21:
    return ~( ( A & B ) | C );
  case gate_type::oai21:
    return ~( ( A | B ) & C );
  }
  return 0u;
}

std::string_view gate_name( gate_type g ) { return gate_table[static_cast<std::size_t>( g )].name; }

std::optional<gate_type> parse_gate_name( std::string_view name )
{
  for ( std::size_t i = 0; i < gate_table.size(); ++i )
  {
    if ( gate_table[i].name == name )
      return static_cast<gate_type>( i );
  }
  return std::nullopt;
}

std::string_view logic_type_name( logic_type t ) { return logic_names[static_cast<std::size_t>( t )]; }

std::optional<logic_type> parse_logic_type( std::string_view name )
{
  std::string upper( name );
  for ( auto& ch : upper )
    ch = static_cast<char>( std::toupper( static_cast<unsigned char>( ch ) ) );
  for ( std::size_t i = 0; i < logic_names.size(); ++i )
  {
    if ( logic_names[i] == upper )
      return static_cast<logic_type>( i );
  }
  return std::nullopt;
}

bool is_allowed( logic_type t, gate_type g )
{
  switch ( g )
  {
  case gate_type::const0:
  case gate_type::const1:
  case gate_type::pi:
  case gate_type::po:
  case gate_type::buffer:
    return true;
  default:
    break;
  }

  switch ( t )
  {
  case logic_type::aig:
    return g == gate_type::not_ || g == gate_type::and2;
  case logic_type::oig:
    return g == gate_type::not_ || g == gate_type::or2;
  case logic_type::xag:
    return g == gate_type::not_ || g == gate_type::xor2 || g == gate_type::and2;
  case logic_type::mig:
    return g == gate_type::not_ || g == gate_type::maj3;
  case logic_type::primary:
    return g == gate_type::not_ || g == gate_type::and2 || g == gate_type::nand2 || g == gate_type::or2 ||
           g == gate_type::nor2 || g == gate_type::xor2 || g == gate_type::xnor2;
  case logic_type::gtg:
    return is_allowed( logic_type::primary, g ) || g == gate_type::nand3 || g == gate_type::nor3 ||
           g == gate_type::mux21 || g == gate_type::nmux21 || g == gate_type::aoi21 || g == gate_type::oai21;
  case logic_type::fpga_netlist:
    return g == gate_type::lut;
  case logic_type::asic_netlist:
    return g == gate_type::cell;
  }
  return false;
}

} // namespace lsdgen
