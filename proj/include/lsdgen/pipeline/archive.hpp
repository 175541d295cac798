#pragma once

#include <lsdgen/pipeline/flow.hpp>

#include <cstdint>
#include <filesystem>
#include <string>

namespace lsdgen
{

/*! \brief Lower-case directory name of a network kind (`aig`, `oig`, ...). */
std::string group_name( logic_type t );

/*! \brief Relative paths inside a design directory. */
std::string recipe_path( std::uint32_t recipe );
std::string artifact_stem( logic_type t, std::uint32_t recipe ); /* e.g. xag/r0003 */

std::string sha256_hex( std::string const& bytes );

/*! \brief Writes `<dir>/<item.name>/` with manifest.json, raw/ and one directory per logic type.
 *
 * Circuits are stored as GraphML with a Verilog mirror. Returns the design directory.
 */
std::filesystem::path pack( design_item const& item, std::filesystem::path const& dir );

/*! \brief Manifest text exactly as `pack` writes it. */
std::string manifest_text( design_item const& item );

/*! \brief Reads a design directory and checks every listed file against its hash.
 *
 * A missing file or a hash mismatch raises `format_error` naming the relative path.
 */
design_item unpack( std::filesystem::path const& design_dir );

struct item_counts
{
  std::size_t networks{ 0 };
  std::size_t asic_netlists{ 0 };
  std::size_t fpga_netlists{ 0 };
  std::size_t qor_records{ 0 };
};

item_counts count_artifacts( design_item const& item );

} // namespace lsdgen
