#pragma once

#include <lsdgen/core/circuit.hpp>
#include <lsdgen/io/qor.hpp>
#include <lsdgen/opt/passes.hpp>
#include <lsdgen/opt/recipe.hpp>
#include <lsdgen/sim/equivalence.hpp>
#include <lsdgen/techmap/library.hpp>
#include <lsdgen/techmap/mapper.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lsdgen
{

inline constexpr std::string_view toolkit_version = "lsdgen 0.1.0";

/*! \brief Node-wise conversion into the GTG gate set. */
circuit to_gtg( circuit const& c );

/*! \brief Node-wise AND2/NOT decomposition followed by structural hashing. */
circuit to_aig( circuit const& c );

/*! \brief `n` pairwise-distinct recipes of `length` uniform draws from the command pool.
 *
 * Draw i takes pool entry `rng() >> 60` from a xoshiro256** stream seeded with `seed`.
 * A recipe equal to an earlier one is discarded and redrawn. Throws `usage_error` when
 * `n` exceeds the number of distinct sequences.
 */
std::vector<recipe> gen_recipes( std::uint32_t n, std::uint32_t length = 10u, std::uint64_t seed = 1u );

struct flow_config
{
  std::uint32_t recipes{ 10u };
  std::uint32_t length{ 10u };
  std::uint64_t seed{ 1u };
  std::optional<cell_library> library; /* bundled mini library when empty */
  std::uint32_t lut_k{ 6u };
  asic_mode asic{ asic_mode::area };
  lut_mode lut{ lut_mode::depth };
  std::uint32_t jobs{ 1u };
  pass_options passes;
  equivalence_options verify{ 4096u, 16u, 0u }; /* 262144 random assignments above 16 PIs */
};

/*! \brief Everything produced for one (recipe, logic type) pair. */
struct flow_variant
{
  circuit network;
  circuit asic;
  circuit fpga;
  qor_record asic_qor;
  qor_record fpga_qor;
  std::string network_verdict;
  std::string asic_verdict;
  std::string fpga_verdict;
  std::string replay;
};

/*! \brief One design: raw group plus one group per logic type, indexed [type][recipe]. */
struct design_item
{
  std::string name;
  std::string source_file; /* file name inside raw/ */
  std::string source_text;
  circuit gtg;
  circuit base_aig;
  std::string gtg_verdict;
  std::string base_verdict;
  std::vector<recipe> recipes;
  std::vector<std::uint64_t> job_seeds;
  std::uint64_t seed{ 0 };
  std::uint32_t length{ 10u };
  std::uint32_t lut_k{ 6u };
  std::string library_text;
  std::string created;
  std::array<std::vector<flow_variant>, 6> groups;
};

/*! \brief Index of a network kind inside `design_item::groups`. */
std::size_t group_index( logic_type t );

/*! \brief load, GTG, AIG, recipes, optimize, blast, map, time and verify.
 *
 * Recipe jobs run on `jobs` threads; results do not depend on the thread count.
 * A failed equivalence check throws `verification_error` naming the artifact and
 * the counterexample.
 */
design_item run_flow( std::filesystem::path const& source, flow_config const& config );
design_item run_flow( circuit const& source, std::string const& name, flow_config const& config );

/*! \brief Creation timestamp: SOURCE_DATE_EPOCH when set, otherwise the Unix epoch. */
std::string creation_timestamp();

/*! \brief Worker count: the flag when given, else LSDGEN_JOBS, else 1. */
std::uint32_t resolve_jobs( std::optional<std::uint32_t> flag );

struct observation_report
{
  bool same_aig_different_qor{ false }; /* equal optimized AIG (ands, depth), different ASIC (area, arrival) */
  bool types_differ{ false };           /* some recipe where two logic types map to different ASIC QoR */
};

observation_report check_observations( design_item const& item );

} // namespace lsdgen
