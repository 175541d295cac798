#pragma once

#include <lsdgen/core/circuit.hpp>
#include <lsdgen/opt/recipe.hpp>

#include <cstdint>

namespace lsdgen
{

struct pass_options
{
  std::uint32_t cut_size{ 4u };       /* rewrite cut width */
  std::uint32_t cut_limit{ 8u };      /* priority cuts kept per node */
  std::uint32_t mffc_leaf_cap{ 10u }; /* refactor skips wider cones */
  std::uint32_t window_leaves{ 8u };  /* resub window width */
  std::uint32_t max_divisors{ 150u };
};

/*! \brief What a pass did. `reverted` is set when the global guard returned the input. */
struct pass_report
{
  std::uint64_t candidates{ 0 };
  std::uint64_t accepted{ 0 };
  std::uint64_t skipped_by_cap{ 0 };
  std::int64_t gain{ 0 };
  bool reverted{ false };
};

/*! \brief Structural hashing with constant propagation, buffer removal and dead-node sweeping.
 *
 * Every pass below returns a strashed circuit. Non-AIG input raises `usage_error`.
 */
circuit strash( circuit const& c );

/*! \brief Rebuilds AND supergates as depth-minimal trees, pairing the two shallowest operands first. */
circuit balance( circuit const& c, pass_report* report = nullptr );

/*! \brief Cut-based rewriting over 4-feasible priority cuts. */
circuit rewrite( circuit const& c, bool preserve_level, bool zero_gain, pass_options const& options = {},
                 pass_report* report = nullptr );

/*! \brief Collapses each maximum fanout-free cone of at least three nodes and resynthesizes it. */
circuit refactor( circuit const& c, bool preserve_level, bool zero_gain, pass_options const& options = {},
                  pass_report* report = nullptr );

/*! \brief Windowed 0- and 1-resubstitution. */
circuit resub( circuit const& c, bool preserve_level, bool zero_gain, pass_options const& options = {},
               pass_report* report = nullptr );

circuit run_command( circuit const& c, command const& cmd, pass_options const& options = {},
                     pass_report* report = nullptr );

/*! \brief Strash, then every command of the recipe in order. Deterministic. */
circuit apply_recipe( circuit const& c, recipe const& r, pass_options const& options = {} );

} // namespace lsdgen
