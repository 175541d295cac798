#pragma once

#include <lsdgen/core/circuit.hpp>

#include <functional>

namespace lsdgen
{

/*! \brief Node-wise rewrite into AND2/NOT templates.
 *
 * Nodes accepted by `keep` are copied unchanged (fanins remapped). LUT and CELL nodes
 * are expanded from their truth tables by Shannon decomposition. Inverters are shared
 * per signal and double negations cancel. The result is not hashed.
 */
circuit decompose_to_aig( circuit const& c, logic_type result_type = logic_type::aig,
                          std::function<bool( node const& )> const& keep = {} );

/*! \brief Node-wise rewrite of gates outside the GTG set.
 *
 * MAJ3 becomes (A·B)+(A·C)+(B·C); LUT and CELL nodes become MUX21 Shannon trees.
 */
circuit decompose_to_gtg( circuit const& c );

} // namespace lsdgen
