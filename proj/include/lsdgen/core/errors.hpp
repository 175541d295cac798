#pragma once

#include <stdexcept>
#include <string>

namespace lsdgen
{

/*! \brief Malformed input: parse errors, bad files, schema violations. */
class format_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Circuit structure violates a model invariant (cycle, dangling fanin, wrong gate set). */
class structural_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief A transformation produced a circuit that is not equivalent to its source. */
class verification_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Caller passed arguments outside an operation's contract. */
class usage_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace lsdgen
