#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lsdgen
{

enum class command_kind : std::uint8_t
{
  balance,
  rewrite,
  refactor,
  resub
};

/*! \brief One optimization command. `balance` never carries flags. */
struct command
{
  command_kind kind{ command_kind::balance };
  bool preserve_level{ false }; /* -l */
  bool zero_gain{ false };      /* -z */

  std::string to_string() const;
  bool operator==( command const& ) const = default;
};

/*! \brief Parses `(balance|rewrite|refactor|resub)( -l)?( -z)?`; throws `format_error`. */
command parse_command( std::string_view text );

/*! \brief The 16-entry command pool: `balance` four times, then the twelve flagged variants. */
std::array<command, 16> const& command_pool();

struct recipe
{
  std::uint32_t id{ 0 };
  std::vector<command> commands;

  bool operator==( recipe const& ) const = default;
};

std::string_view command_kind_name( command_kind kind );

} // namespace lsdgen
