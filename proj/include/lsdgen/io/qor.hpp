#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace lsdgen
{

enum class backend
{
  asic,
  fpga
};

/*! \brief Quality-of-results record of one mapped netlist.
 *
 * For FPGA netlists `area` is the LUT count and `arrival` equals `depth`.
 */
struct qor_record
{
  double area{ 0.0 };
  double arrival{ 0.0 };
  std::uint64_t gate_count{ 0 };
  std::uint32_t depth{ 0 };
  lsdgen::backend backend{ backend::asic };

  bool operator==( qor_record const& ) const = default;
};

/*! \brief JSON with numbers at 17 significant digits; key order area, arrival, gate_count, depth, backend. */
void write_qor( qor_record const& q, std::ostream& out );
std::string write_qor( qor_record const& q );

/*! \brief Throws `format_error` on missing fields or negative values. */
qor_record read_qor( std::istream& in );
qor_record read_qor_string( std::string const& text );

} // namespace lsdgen
