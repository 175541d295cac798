#pragma once

#include <lsdgen/core/circuit.hpp>
#include <lsdgen/core/truth_table.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace lsdgen
{

/*! \brief Packed input patterns, 64 assignments per word, one word stream per PI. */
struct sim_vectors
{
  std::vector<std::vector<std::uint64_t>> pi_words;
  std::size_t word_count{ 0 };
  std::uint64_t seed{ 0 };

  static sim_vectors random( std::size_t num_pis, std::size_t word_count, std::uint64_t seed );

  /*! \brief All 2^num_pis assignments; assignment m sets PI i to bit i of m. */
  static sim_vectors exhaustive( std::size_t num_pis );
};

/*! \brief Per-node packed output words of one simulation run. */
class sim_result
{
public:
  sim_result( std::size_t num_nodes, std::size_t word_count )
      : word_count_( word_count ), data_( num_nodes * word_count, 0u )
  {
  }

  std::size_t word_count() const { return word_count_; }
  std::span<std::uint64_t const> operator[]( node_index n ) const
  {
    return { data_.data() + n * word_count_, word_count_ };
  }
  std::span<std::uint64_t> mutable_words( node_index n ) { return { data_.data() + n * word_count_, word_count_ }; }

private:
  std::size_t word_count_;
  std::vector<std::uint64_t> data_;
};

/*! \brief Bit-parallel simulation in topological order; throws `usage_error` on a PI count mismatch. */
sim_result simulate( circuit const& c, sim_vectors const& vectors );

/*! \brief Evaluates one node word from its fanin words. */
std::uint64_t evaluate_node( node const& nd, std::span<std::uint64_t const> fanin_words );

/*! \brief Reference evaluator: one assignment at a time, no packing. */
std::vector<bool> evaluate_assignment( circuit const& c, std::vector<bool> const& pi_values );

/*! \brief Per-PO truth tables over all PIs (PI 0 least significant); `usage_error` above `pi_limit`. */
std::vector<dyn_truth_table> exhaustive_truth_tables( circuit const& c, std::uint32_t pi_limit = 20u );

/*! \brief Probability that each node evaluates to 1 under independent uniform PIs.
 *
 * Exact when the PI count is at most `exhaustive_limit`, otherwise a Monte-Carlo
 * estimate over `vectors` random assignments seeded by `seed`.
 */
std::vector<double> node_probability( circuit const& c, std::uint64_t vectors = 16384u, std::uint64_t seed = 1u,
                                      std::uint32_t exhaustive_limit = 14u );

/*! \brief Transitive-fanin PIs of a PO node, reported as sorted PI positions. */
std::vector<std::uint32_t> support( circuit const& c, node_index po );

} // namespace lsdgen
