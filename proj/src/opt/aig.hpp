#pragma once

#include <lsdgen/core/circuit.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace lsdgen::detail
{

/* literal = 2 * var + complement; var 0 is constant false */
using lit = std::uint32_t;

inline constexpr lit lit_false = 0u;
inline constexpr lit lit_true = 1u;

constexpr std::uint32_t lit_var( lit l ) { return l >> 1u; }
constexpr bool lit_compl( lit l ) { return l & 1u; }
constexpr lit make_lit( std::uint32_t var, bool compl_ = false ) { return var * 2u + ( compl_ ? 1u : 0u ); }
constexpr lit lit_not( lit l ) { return l ^ 1u; }
constexpr lit lit_not_cond( lit l, bool c ) { return c ? l ^ 1u : l; }

/*! \brief Mutable and-inverter graph with complemented edges and structural hashing.
 *
 * Nodes are replaced in place by redirecting them to a literal; readers must go
 * through `resolve`. Reference counts track fanouts from live nodes and outputs.
 */
class aig
{
public:
  aig() { add_var( 0u ); }

  std::uint32_t size() const { return static_cast<std::uint32_t>( fanin0_.size() ); }
  bool is_const( std::uint32_t v ) const { return v == 0u; }
  bool is_pi( std::uint32_t v ) const { return kind_[v] == 1u; }
  bool is_and( std::uint32_t v ) const { return kind_[v] == 2u; }

  lit create_pi( std::string name = {} );
  void create_po( lit l, std::string name = {} );

  /*! \brief Hashed AND with constant propagation; new nodes reference their fanins. */
  lit and_( lit a, lit b );
  lit or_( lit a, lit b ) { return lit_not( and_( lit_not( a ), lit_not( b ) ) ); }
  lit xor_( lit a, lit b ) { return or_( and_( a, lit_not( b ) ), and_( lit_not( a ), b ) ); }

  /*! \brief Existing live node for AND(a, b) after normalization, or 0 when absent. */
  std::uint32_t lookup( lit a, lit b ) const;

  lit resolve( lit l ) const;
  lit fanin0( std::uint32_t v ) const { return resolve( fanin0_[v] ); }
  lit fanin1( std::uint32_t v ) const { return resolve( fanin1_[v] ); }

  std::uint32_t level( std::uint32_t v ) const { return level_[v]; }
  std::uint32_t refs( std::uint32_t v ) const { return refs_[v]; }
  bool is_dead( std::uint32_t v ) const { return dead_[v]; }
  bool is_replaced( std::uint32_t v ) const { return repr_[v] != no_repr; }
  bool is_live( std::uint32_t v ) const { return !dead_[v] && repr_[v] == no_repr; }
  std::vector<std::uint32_t> const& fanouts( std::uint32_t v ) const { return fanouts_[v]; }

  /*! \brief Releases the references held by `v` and, recursively, by fanins that drop to zero.
   *
   * Vars listed in `boundary` are decremented but never entered. Returns the number of
   * released AND nodes including `v`; `cone` collects them in post-order when given.
   */
  std::uint32_t deref( std::uint32_t v, std::span<std::uint32_t const> boundary = {},
                       std::vector<std::uint32_t>* cone = nullptr );
  /*! \brief Exact inverse of `deref` with the same boundary. */
  void ref( std::uint32_t v, std::span<std::uint32_t const> boundary = {} );

  /*! \brief Redirects `v` to `replacement` and deletes the part of its cone that loses all fanouts. */
  void replace( std::uint32_t v, lit replacement );

  std::vector<std::uint32_t> const& pis() const { return pis_; }
  std::vector<lit> const& pos() const { return pos_; }
  std::uint32_t num_ands() const;

  std::string const& name() const { return name_; }
  void set_name( std::string name ) { name_ = std::move( name ); }
  std::string const& pi_name( std::size_t i ) const { return pi_names_[i]; }
  std::string const& po_name( std::size_t i ) const { return po_names_[i]; }

  static aig from_circuit( circuit const& c );
  circuit to_circuit() const;

private:
  static constexpr lit no_repr = ~0u;

  std::uint32_t add_var( std::uint8_t kind );
  void kill( std::uint32_t v );
  static std::uint64_t key( lit a, lit b ) { return ( std::uint64_t( a ) << 32u ) | b; }

  std::vector<lit> fanin0_, fanin1_;
  std::vector<std::uint8_t> kind_;
  std::vector<std::uint32_t> level_;
  std::vector<std::uint32_t> refs_;
  std::vector<bool> dead_;
  std::vector<lit> repr_;
  std::vector<std::vector<std::uint32_t>> fanouts_;
  std::unordered_map<std::uint64_t, std::uint32_t> strash_;

  std::vector<std::uint32_t> pis_;
  std::vector<lit> pos_;
  std::vector<std::string> pi_names_, po_names_;
  std::string name_;
};

/*! \brief Levels recomputed from scratch over live nodes reachable from outputs. */
std::uint32_t aig_depth( aig const& a );

} // namespace lsdgen::detail
