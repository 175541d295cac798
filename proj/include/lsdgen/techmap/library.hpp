#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace lsdgen
{

/*! \brief Library cell with 1 to 4 pins; `function` is tiled over the pin count, pin 0 is the LSB. */
struct cell
{
  std::string name;
  std::uint32_t inputs{ 0 };
  std::uint64_t function{ 0 };
  double area{ 0.0 };
  std::vector<double> pin_delays;

  bool operator==( cell const& ) const = default;
};

/*! \brief t(x) = output_negated ^ f(y) with y[i] = x[perm[i]] ^ bit i of input_negations. */
struct npn_transform
{
  std::array<std::uint8_t, 4> perm{ 0, 1, 2, 3 };
  std::uint8_t input_negations{ 0 };
  bool output_negated{ false };

  bool operator==( npn_transform const& ) const = default;
};

std::uint64_t apply_npn( std::uint64_t tt, std::uint32_t num_vars, npn_transform const& t );

/*! \brief Smallest table reachable by an NPN transform, found exhaustively (at most 4 inputs). */
std::pair<std::uint64_t, npn_transform> npn_canonical( std::uint64_t tt, std::uint32_t num_vars );

/*! \brief Cell list with an NPN-class index.
 *
 * Construction checks for duplicate names, malformed cells and completeness: an inverter
 * and a two-input cell NPN-equivalent to NAND2 must be present. Violations raise `format_error`.
 */
class cell_library
{
public:
  cell_library( std::string name, std::vector<cell> cells );

  std::string const& name() const { return name_; }
  std::vector<cell> const& cells() const { return cells_; }
  cell const* find( std::string const& name ) const;

  /*! \brief Indices of cells with `num_vars` pins in the same NPN class as `tt`. */
  std::vector<std::uint32_t> const& npn_class( std::uint64_t tt, std::uint32_t num_vars ) const;

  /*! \brief Index of the cheapest plain inverter. */
  std::uint32_t inverter() const { return inverter_; }

  bool operator==( cell_library const& other ) const { return name_ == other.name_ && cells_ == other.cells_; }

private:
  std::string name_;
  std::vector<cell> cells_;
  std::unordered_map<std::string, std::uint32_t> by_name_;
  std::map<std::pair<std::uint32_t, std::uint64_t>, std::vector<std::uint32_t>> classes_; /* (arity, NPN canonical) */
  std::uint32_t inverter_{ 0 };
};

/*! \brief JSON `{name, cells: [{name, inputs, function (16 hex digits), area, pin_delays}]}`. */
cell_library read_library( std::istream& in );
cell_library read_library_string( std::string const& text );
cell_library load_library( std::string const& path );
void write_library( cell_library const& lib, std::ostream& out );
std::string write_library( cell_library const& lib );

/*! \brief The bundled 12-cell library (data/mini_lib.json, compiled in). */
cell_library mini_library();

} // namespace lsdgen
