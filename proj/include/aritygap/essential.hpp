/*!
  \file essential.hpp
  \brief Essential variables, identification minors and the arity gap

  A variable is essential when changing only that input can change the
  output; the remaining variables are fictive.  Identifying a variable
  with another one (substituting x_j for x_i everywhere) yields a minor
  of the function.  The arity gap is the essential-variable count of the
  function minus the largest essential-variable count among the minors
  obtained by identifying two *essential* variables; for Boolean
  functions it is always between 0 and 2.
*/

#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "truth_table.hpp"

namespace aritygap
{

/*! \brief Result of a gap analysis */
struct gap_report
{
  uint32_t ess_count;                   /*!< number of essential variables */
  variable_set essential;               /*!< the essential variables */
  uint32_t gap;                         /*!< ess_count minus the best minor's count */
  std::optional<minor_spec> best_minor; /*!< absent when ess_count <= 1 */
  uint32_t best_minor_ess;              /*!< equals ess_count when no minor exists */
};

/*! \brief Evaluates f at the point p */
inline bool eval( const truth_table& f, const point& p )
{
  if ( p.size() != f.arity() )
  {
    throw std::invalid_argument( "eval: point has " + std::to_string( p.size() ) + " coordinates but arity is " + std::to_string( f.arity() ) );
  }
  return f.get_bit( index_of( p ) );
}

namespace detail
{

inline void check_var_index( const truth_table& f, uint32_t i, const char* who )
{
  if ( i < 1 || i > f.arity() )
  {
    throw std::invalid_argument( std::string( who ) + ": variable index " + std::to_string( i ) + " out of range for arity " + std::to_string( f.arity() ) );
  }
}

} // namespace detail

/*! \brief True iff some pair of points differing only in coordinate i
    yields different outputs */
inline bool is_essential( const truth_table& f, uint32_t i )
{
  detail::check_var_index( f, i, "is_essential" );
  const uint32_t level = f.arity() - i;
  if ( f.arity() <= 6 )
  {
    return detail::word_has_var( f.word(), f.arity(), level );
  }
  const uint64_t stride = uint64_t( 1 ) << level;
  for ( uint64_t m = 0; m < f.num_bits(); ++m )
  {
    if ( ( m & stride ) == 0 && f.get_bit( m ) != f.get_bit( m | stride ) )
    {
      return true;
    }
  }
  return false;
}

inline variable_set essential_set( const truth_table& f )
{
  variable_set s;
  for ( uint32_t i = 1; i <= f.arity(); ++i )
  {
    if ( is_essential( f, i ) )
    {
      s.insert( i );
    }
  }
  return s;
}

/*! \brief Number of essential variables */
inline uint32_t ess( const truth_table& f )
{
  if ( f.arity() <= 6 )
  {
    return detail::word_support_size( f.word(), f.arity() );
  }
  return essential_set( f ).size();
}

/*! \brief The identification minor f[i <- j]: every occurrence of x_i is
    replaced by x_j.  The result keeps arity n; x_i becomes fictive.  When
    x_i is already fictive the substitution reproduces f bit for bit. */
inline truth_table identify( const truth_table& f, minor_spec spec )
{
  detail::check_var_index( f, spec.target, "identify" );
  detail::check_var_index( f, spec.source, "identify" );
  if ( spec.target == spec.source )
  {
    throw std::invalid_argument( "identify: target and source coincide" );
  }
  const uint32_t n = f.arity();
  const uint32_t level_i = n - spec.target;
  const uint32_t level_j = n - spec.source;
  if ( n <= 6 )
  {
    return truth_table::from_word( n, detail::word_identify( f.word(), n, level_i, level_j ) );
  }
  truth_table g( n );
  for ( uint64_t m = 0; m < f.num_bits(); ++m )
  {
    const uint64_t bit_i = ( m >> level_i ) & 1;
    const uint64_t bit_j = ( m >> level_j ) & 1;
    const uint64_t src = bit_i == bit_j ? m : m ^ ( uint64_t( 1 ) << level_i );
    g.set_bit( m, f.get_bit( src ) );
  }
  return g;
}

/*! \brief All n(n-1) ordered identification minors, target index
    ascending, then source index ascending */
inline std::vector<std::pair<minor_spec, truth_table>> minors( const truth_table& f )
{
  std::vector<std::pair<minor_spec, truth_table>> result;
  const uint32_t n = f.arity();
  if ( n < 2 )
  {
    return result;
  }
  result.reserve( size_t( n ) * ( n - 1 ) );
  for ( uint32_t i = 1; i <= n; ++i )
  {
    for ( uint32_t j = 1; j <= n; ++j )
    {
      if ( i != j )
      {
        result.emplace_back( minor_spec{i, j}, identify( f, {i, j} ) );
      }
    }
  }
  return result;
}

/*! \brief Computes the arity gap of f.

  The maximum ranges over the minors f[i <- j] with both x_i and x_j
  essential.  Functions with at most one essential variable admit no such
  pair and get gap 0.  Ties on the best minor are broken towards the
  lexicographically smallest (i, j).
*/
inline gap_report gap( const truth_table& f )
{
  gap_report report;
  report.essential = essential_set( f );
  report.ess_count = report.essential.size();
  report.gap = 0;
  report.best_minor_ess = report.ess_count;
  if ( report.ess_count <= 1 )
  {
    return report;
  }

  const auto vars = report.essential.indices();
  uint32_t best = 0;
  bool first = true;
  for ( auto i : vars )
  {
    for ( auto j : vars )
    {
      if ( i == j )
      {
        continue;
      }
      const uint32_t e = ess( identify( f, {i, j} ) );
      if ( first || e > best )
      {
        first = false;
        best = e;
        report.best_minor = minor_spec{i, j};
      }
      if ( best + 1 == report.ess_count )
      {
        /* no minor can retain more essential variables */
        report.gap = 1;
        report.best_minor_ess = best;
        return report;
      }
    }
  }
  report.best_minor_ess = best;
  report.gap = report.ess_count - best;
  return report;
}

/*! \brief g(x1, ..., xn) = f(!x1, ..., !xn) */
inline truth_table complement_inputs( const truth_table& f )
{
  const uint64_t top = f.num_bits() - 1;
  truth_table g( f.arity() );
  for ( uint64_t m = 0; m < f.num_bits(); ++m )
  {
    g.set_bit( m, f.get_bit( top - m ) );
  }
  return g;
}

/*! \brief g = !f */
inline truth_table complement_output( const truth_table& f )
{
  truth_table g( f.arity() );
  for ( uint64_t m = 0; m < f.num_bits(); ++m )
  {
    g.set_bit( m, !f.get_bit( m ) );
  }
  return g;
}

/*! \brief g(x1, ..., xn) = f(x_{perm[0]}, ..., x_{perm[n-1]}) for a
    bijection perm on {1, ..., n} (1-based entries) */
inline truth_table permute_vars( const truth_table& f, const std::vector<uint32_t>& perm )
{
  const uint32_t n = f.arity();
  if ( perm.size() != n )
  {
    throw std::invalid_argument( "permute_vars: permutation has wrong length" );
  }
  std::vector<bool> seen( n, false );
  for ( auto v : perm )
  {
    if ( v < 1 || v > n || seen[v - 1] )
    {
      throw std::invalid_argument( "permute_vars: not a bijection on {1..n}" );
    }
    seen[v - 1] = true;
  }
  truth_table g( n );
  for ( uint64_t m = 0; m < f.num_bits(); ++m )
  {
    uint64_t src = 0;
    for ( uint32_t k = 0; k < n; ++k )
    {
      const uint64_t bit = ( m >> ( n - 1 - ( perm[k] - 1 ) ) ) & 1;
      src |= bit << ( n - 1 - k );
    }
    g.set_bit( m, f.get_bit( src ) );
  }
  return g;
}

} // namespace aritygap
