#pragma once

#include <lsdgen/opt/recipe.hpp>

#include <iosfwd>
#include <string>

namespace lsdgen
{

/*! \brief One command per line, LF terminated. */
void write_recipe( recipe const& r, std::ostream& out );
std::string write_recipe( recipe const& r );

/*! \brief Blank lines and `#` comments are skipped; throws `format_error` on grammar errors. */
recipe read_recipe( std::istream& in, std::uint32_t id = 0 );
recipe read_recipe_string( std::string const& text, std::uint32_t id = 0 );

} // namespace lsdgen
