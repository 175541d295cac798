#pragma once

#include <lsdgen/core/circuit.hpp>

#include <filesystem>
#include <string>

namespace lsdgen
{

/*! \brief Loads a circuit by extension: `.graphml`, `.aag`, `.aig`, `.v`. */
circuit load_circuit( std::filesystem::path const& path );

/*! \brief Saves a circuit by extension; `.aag`/`.aig` require an AIG. */
void save_circuit( circuit const& c, std::filesystem::path const& path );

/*! \brief Whole-file byte I/O; an unopenable path raises `usage_error`. */
std::string read_file( std::filesystem::path const& path );
void write_file( std::filesystem::path const& path, std::string const& content );

} // namespace lsdgen
