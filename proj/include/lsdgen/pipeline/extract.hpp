#pragma once

#include <lsdgen/pipeline/flow.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lsdgen
{

/*! \brief Circuit reference `<design>/<relative path>` inside a packed dataset root. */
using circuit_ref = std::string;

struct class_sample
{
  circuit_ref circuit;
  std::uint32_t label{ 0 };
};

/*! \brief `a` precedes `b`: lower arrival, or equal arrival and lower area. */
struct ranking_pair
{
  circuit_ref a;
  circuit_ref b;
  std::uint32_t recipe{ 0 };
};

struct qor_sample
{
  std::string design;
  circuit_ref base_aig;
  std::uint32_t recipe{ 0 };
  std::vector<std::string> commands;
  double area{ 0.0 };
  double arrival{ 0.0 };
};

struct probability_sample
{
  circuit_ref network;
  std::vector<double> probabilities;
  std::uint64_t seed{ 0 };
  std::uint64_t vectors{ 0 };
  bool exhaustive{ false };
};

/*! \brief Every network of design i gets label i, in the given order. Empty input raises `usage_error`. */
std::vector<class_sample> extract_classification( std::vector<design_item> const& items );

/*! \brief Ordered pairs over all logic-type pairs per design and recipe; full ties are skipped. */
std::vector<ranking_pair> extract_ranking( std::vector<design_item> const& items );

/*! \brief One sample per (design, recipe) from the mapped AIG group. */
std::vector<qor_sample> extract_qor( std::vector<design_item> const& items );

/*! \brief Node probabilities of every network; exact up to 14 PIs, Monte-Carlo otherwise. */
std::vector<probability_sample> extract_probability( std::vector<design_item> const& items, std::uint64_t vectors,
                                                     std::uint64_t seed );

/*! \brief One JSON object per line. */
void write_jsonl( std::vector<class_sample> const& samples, std::ostream& out );
void write_jsonl( std::vector<ranking_pair> const& samples, std::ostream& out );
void write_jsonl( std::vector<qor_sample> const& samples, std::ostream& out );
void write_jsonl( std::vector<probability_sample> const& samples, std::ostream& out );

} // namespace lsdgen
