#include <lsdgen/core/errors.hpp>
#include <lsdgen/sim/equivalence.hpp>
#include <lsdgen/sim/random.hpp>
#include <lsdgen/sim/simulate.hpp>

#include <algorithm>
#include <bit>

namespace lsdgen
{

std::string equivalence_verdict::tier() const
{
  switch ( result )
  {
  case kind::equivalent:
    return "equivalent";
  case kind::not_equivalent:
    return "not_equivalent";
  case kind::not_falsified:
    return "not_falsified";
  }
  return "unknown";
}

namespace
{

/* Compares one block of simulated outputs; returns the first differing bit position. */
std::optional<std::size_t> first_difference( circuit const& a, sim_result const& ra, circuit const& b,
                                             sim_result const& rb, std::size_t words, std::uint64_t last_mask )
{
  std::optional<std::size_t> best;
  for ( std::size_t o = 0; o < a.num_pos(); ++o )
  {
    auto const wa = ra[a.pos()[o]];
    auto const wb = rb[b.pos()[o]];
    for ( std::size_t w = 0; w < words; ++w )
    {
      auto diff = wa[w] ^ wb[w];
      if ( w + 1u == words )
        diff &= last_mask;
      if ( diff != 0u )
      {
        auto const pos = w * 64u + static_cast<std::size_t>( std::countr_zero( diff ) );
        if ( !best || pos < *best )
          best = pos;
        break;
      }
    }
  }
  return best;
}

} // namespace

equivalence_verdict check_equivalence( circuit const& a, circuit const& b, equivalence_options const& options )
{
  if ( a.num_pis() != b.num_pis() || a.num_pos() != b.num_pos() )
    throw usage_error( "interface mismatch: " + std::to_string( a.num_pis() ) + "/" + std::to_string( a.num_pos() ) +
                       " vs " + std::to_string( b.num_pis() ) + "/" + std::to_string( b.num_pos() ) + " PIs/POs" );

  auto const num_pis = a.num_pis();
  equivalence_verdict verdict;

  if ( num_pis <= options.exhaustive_limit )
  {
    auto const vectors = sim_vectors::exhaustive( num_pis );
    auto const ra = simulate( a, vectors );
    auto const rb = simulate( b, vectors );
    auto const mask = truth_table_mask( static_cast<std::uint32_t>( std::min<std::size_t>( num_pis, 6u ) ) );
    verdict.vectors = std::uint64_t{ 1 } << num_pis;
    if ( auto pos = first_difference( a, ra, b, rb, vectors.word_count, mask ) )
    {
      verdict.result = equivalence_verdict::kind::not_equivalent;
      for ( std::size_t i = 0; i < num_pis; ++i )
        verdict.counterexample.push_back( ( *pos >> i ) & 1u );
    }
    else
    {
      verdict.result = equivalence_verdict::kind::equivalent;
    }
    return verdict;
  }

  constexpr std::size_t block = 256u;
  std::uint64_t done = 0u;
  std::uint64_t block_index = 0u;
  while ( done < options.budget_words )
  {
    auto const words = static_cast<std::size_t>( std::min<std::uint64_t>( block, options.budget_words - done ) );
    auto const vectors = sim_vectors::random( num_pis, words, derive_seed( options.seed, "miter", block_index++ ) );
    auto const ra = simulate( a, vectors );
    auto const rb = simulate( b, vectors );
    if ( auto pos = first_difference( a, ra, b, rb, words, ~0ull ) )
    {
      verdict.result = equivalence_verdict::kind::not_equivalent;
      auto const w = *pos / 64u;
      auto const bit = *pos % 64u;
      for ( std::size_t i = 0; i < num_pis; ++i )
        verdict.counterexample.push_back( ( vectors.pi_words[i][w] >> bit ) & 1u );
      verdict.vectors = ( done + w ) * 64u + bit + 1u;
      return verdict;
    }
    done += words;
  }
  verdict.result = equivalence_verdict::kind::not_falsified;
  verdict.vectors = options.budget_words * 64u;
  return verdict;
}

} // namespace lsdgen
