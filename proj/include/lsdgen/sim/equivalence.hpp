#pragma once

#include <lsdgen/core/circuit.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lsdgen
{

/*! \brief Outcome of a miter check.
 *
 * `equivalent` is a proof by exhaustive enumeration. `not_falsified` means random
 * simulation over `vectors` assignments found no difference.
 */
struct equivalence_verdict
{
  enum class kind
  {
    equivalent,
    not_equivalent,
    not_falsified
  };

  kind result{ kind::equivalent };
  std::vector<bool> counterexample; /* PI values in PI order, when not_equivalent */
  std::uint64_t vectors{ 0 };

  bool holds() const { return result != kind::not_equivalent; }
  std::string tier() const;
};

struct equivalence_options
{
  std::uint64_t budget_words{ 4096u };
  std::uint32_t exhaustive_limit{ 16u };
  std::uint64_t seed{ 0x5eedull };
};

/*! \brief Miter check with POs and PIs matched by position.
 *
 * Throws `usage_error` when the PI or PO counts differ. A counterexample is the lowest
 * differing assignment in exhaustive mode, and always replays to a differing PO.
 */
equivalence_verdict check_equivalence( circuit const& a, circuit const& b, equivalence_options const& options = {} );

} // namespace lsdgen
