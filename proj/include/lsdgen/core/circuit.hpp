#pragma once

#include <lsdgen/core/gate.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lsdgen
{

using node_index = std::uint32_t;

/*! \brief One gate of a circuit.
 *
 * `truth_table` holds the local function over `fanins` tiled to 64 bits, with
 * fanin 0 as the least-significant variable.
 */
struct node
{
  node_index index{ 0 };
  gate_type gate{ gate_type::const0 };
  std::string name;
  std::vector<node_index> fanins;
  std::uint64_t truth_table{ 0 };
  std::optional<std::uint64_t> origin_index;

  bool operator==( node const& ) const = default;
};

/*! \brief Typed combinational DAG; the common carrier for every network and netlist kind.
 *
 * Node indices are dense. PIs and POs are listed in creation order. Nodes are only
 * added, never removed; passes that restructure a circuit build a new one.
 */
class circuit
{
public:
  circuit() = default;
  circuit( logic_type type, std::string name );

  logic_type type() const { return type_; }
  void set_type( logic_type type ) { type_ = type; }
  std::string const& name() const { return name_; }
  void set_name( std::string name ) { name_ = std::move( name ); }

  /*! \brief Appends a node and wires its fanins.
   *
   * Fixed-function gates get their canonical table unless `truth_table` is given.
   * LUT and CELL tables are tiled over the fanin count. Constants are shared: adding
   * a second CONST0 returns the existing node. Throws `structural_error` on a fanin
   * index that does not exist yet.
   */
  node_index add_node( gate_type gate, std::span<node_index const> fanins, std::string name = {},
                       std::optional<std::uint64_t> truth_table = std::nullopt );
  node_index add_node( gate_type gate, std::initializer_list<node_index> fanins, std::string name = {},
                       std::optional<std::uint64_t> truth_table = std::nullopt )
  {
    return add_node( gate, std::span<node_index const>( fanins.begin(), fanins.size() ), std::move( name ),
                     truth_table );
  }

  node_index add_pi( std::string name = {} ) { return add_node( gate_type::pi, {}, std::move( name ) ); }
  node_index add_po( node_index driver, std::string name = {} )
  {
    return add_node( gate_type::po, { driver }, std::move( name ) );
  }
  node_index get_constant( bool value );

  /*! \brief Second phase of two-phase construction: appends one fanin to an existing node.
   *
   * The target may precede the fanin in index order; acyclicity is checked by `validate`.
   */
  void add_fanin( node_index target, node_index fanin );

  void set_origin_index( node_index n, std::uint64_t origin ) { nodes_.at( n ).origin_index = origin; }
  void rename( node_index n, std::string name ) { nodes_.at( n ).name = std::move( name ); }

  std::size_t size() const { return nodes_.size(); }
  node const& at( node_index n ) const { return nodes_.at( n ); }
  node const& operator[]( node_index n ) const { return nodes_[n]; }
  std::vector<node> const& nodes() const { return nodes_; }
  std::vector<node_index> const& pis() const { return pis_; }
  std::vector<node_index> const& pos() const { return pos_; }

  std::size_t num_pis() const { return pis_.size(); }
  std::size_t num_pos() const { return pos_.size(); }

  bool operator==( circuit const& ) const = default;

private:
  logic_type type_{ logic_type::aig };
  std::string name_;
  std::vector<node> nodes_;
  std::vector<node_index> pis_;
  std::vector<node_index> pos_;
  std::optional<node_index> const0_;
  std::optional<node_index> const1_;
};

circuit create_circuit( logic_type type, std::string name );

/*! \brief Topological order, ties broken by ascending index. Throws `structural_error` on a cycle. */
std::vector<node_index> topo_order( circuit const& c );

/*! \brief Checks acyclicity, arity, gate-set membership, fanin existence and fixed-gate tables.
 *
 * Returns an empty list when the circuit is well formed.
 */
std::vector<std::string> validate( circuit const& c );

/*! \brief Throws `structural_error` with the first violation, if any. */
void ensure_valid( circuit const& c );

/*! \brief Logic level per node. PI and constants are level 0; PO, NOT and BUFFER are
 * transparent; every other gate adds one level.
 */
std::vector<std::uint32_t> compute_levels( circuit const& c );

/*! \brief Number of fanout references per node (PO edges included). */
std::vector<std::uint32_t> compute_fanout_counts( circuit const& c );

} // namespace lsdgen
