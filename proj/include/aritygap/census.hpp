/*!
  \file census.hpp
  \brief Exhaustive census of truth tables by essential arity and gap

  Enumerates every one of the 2^(2^n) truth tables of arity n, computes
  the essential-variable count and the arity gap of each, and tabulates
  exact counts.  The gap-2 total is cross-checked against the closed
  form

      h(n) = 6 C(n,2) + 10 C(n,3) + 2 (2^n - 1 - n - C(n,2) - C(n,3))
           = 4 C(n,2) + 8 C(n,3) + 2^(n+1) - 2n - 2,

  which counts 6 gap-2 functions per 2-subset of essential variables,
  10 per 3-subset and 2 per m-subset for every m >= 4.

  Tables are enumerated as packed little-endian integers in ascending
  order, which makes the scan trivially partitionable into contiguous
  ranges; per-worker tallies merge by summation, so the result is
  identical for any worker count.
*/

#pragma once

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "truth_table.hpp"

namespace aritygap
{

/*! \brief C(n, k) with overflow-checked arithmetic */
inline uint64_t binomial( uint32_t n, uint32_t k )
{
  if ( k > n )
  {
    return 0;
  }
  k = std::min( k, n - k );
  uint64_t result = 1;
  for ( uint32_t i = 1; i <= k; ++i )
  {
    uint64_t next;
    if ( __builtin_mul_overflow( result, uint64_t( n - k + i ), &next ) )
    {
      throw std::overflow_error( "binomial: overflow" );
    }
    result = next / i; /* divisible at every step */
  }
  return result;
}

/*! \brief Closed-form count of the arity-n functions with gap 2 */
inline uint64_t h_formula( uint32_t n )
{
  if ( n < 2 )
  {
    throw std::invalid_argument( "h_formula: arity must be at least 2" );
  }
  if ( n > 62 )
  {
    throw std::overflow_error( "h_formula: arity too large for exact 64-bit arithmetic" );
  }
  if ( n == 2 )
  {
    return 6;
  }
  if ( n == 3 )
  {
    return 28;
  }
  const uint64_t pairs = binomial( n, 2 );
  const uint64_t triples = binomial( n, 3 );
  const uint64_t larger = ( uint64_t( 1 ) << n ) - 1 - n - pairs - triples;
  return 6 * pairs + 10 * triples + 2 * larger;
}

struct census_options
{
  uint32_t threads = 1; /*!< worker/partition count; merge order independent */
  bool deep = false;    /*!< required for n = 5 (2^32 tables) */
  std::function<void( uint64_t done, uint64_t total )> progress; /*!< optional, serialized */
};

class census_table
{
public:
  enum class source_kind
  {
    enumerated,
    formula_only
  };

  census_table( uint32_t arity, source_kind source )
      : arity_( arity ), source_( source ), counts_( arity + 1, {0, 0, 0} )
  {
  }

  uint32_t arity() const { return arity_; }
  source_kind source() const { return source_; }

  uint64_t count( uint32_t m, uint32_t g ) const
  {
    if ( m > arity_ || g > 2 )
    {
      throw std::invalid_argument( "census_table::count: cell out of range" );
    }
    return counts_[m][g];
  }

  void add( uint32_t m, uint32_t g, uint64_t amount )
  {
    if ( m > arity_ || g > 2 )
    {
      throw std::invalid_argument( "census_table::add: cell out of range" );
    }
    counts_[m][g] += amount;
  }

  /*! \brief Sum of every cell; 2^(2^n) for an enumerated census */
  uint64_t total() const
  {
    uint64_t t = 0;
    for ( const auto& row : counts_ )
    {
      t += row[0] + row[1] + row[2];
    }
    return t;
  }

  /*! \brief Gap-2 total over all essential arities */
  uint64_t gap2_total() const
  {
    uint64_t t = 0;
    for ( const auto& row : counts_ )
    {
      t += row[2];
    }
    return t;
  }

  uint64_t h_enumerated = 0;
  uint64_t h_formula_value = 0;
  double elapsed_seconds = 0.0;

  /* elapsed time is not part of the value */
  bool operator==( const census_table& other ) const
  {
    return arity_ == other.arity_ && source_ == other.source_ && counts_ == other.counts_ &&
           h_enumerated == other.h_enumerated && h_formula_value == other.h_formula_value;
  }

private:
  uint32_t arity_;
  source_kind source_;
  std::vector<std::array<uint64_t, 3>> counts_;
};

/*! \brief A census carrying only the closed-form value, for arities
    where enumeration is infeasible */
inline census_table census_formula_only( uint32_t n )
{
  census_table table( n, census_table::source_kind::formula_only );
  table.h_formula_value = h_formula( n );
  return table;
}

namespace detail
{

struct census_shard
{
  std::array<std::array<uint64_t, 3>, 7> counts{};
  bool gap_bound_violated = false;

  void scan( uint32_t n, uint64_t begin, uint64_t end,
             std::atomic<uint64_t>* done, std::mutex* progress_mutex,
             const std::function<void( uint64_t, uint64_t )>* progress, uint64_t total )
  {
    constexpr uint64_t chunk = uint64_t( 1 ) << 24;
    uint64_t next_report = begin + chunk;
    for ( uint64_t t = begin; t < end; ++t )
    {
      const ess_gap_result r = word_ess_gap( t, n );
      if ( r.gap > 2 )
      {
        gap_bound_violated = true;
        continue;
      }
      ++counts[r.ess][r.gap];
      if ( progress && t + 1 == next_report )
      {
        const uint64_t d = done->fetch_add( chunk, std::memory_order_relaxed ) + chunk;
        {
          std::lock_guard<std::mutex> lock( *progress_mutex );
          ( *progress )( d, total );
        }
        next_report += chunk;
      }
    }
  }
};

} // namespace detail

/*! \brief Scans every truth table of arity n and tallies (ess, gap).

  Supports 2 <= n <= 4 unconditionally; n = 5 visits 2^32 tables and
  must be opted into with census_options::deep.  Larger arities are
  refused: use census_formula_only.
*/
inline census_table enumerate_census( uint32_t n, const census_options& options = {} )
{
  if ( n < 2 || n > 5 )
  {
    throw std::invalid_argument( "enumerate_census: supported arities are 2..4, plus 5 with deep opt-in" );
  }
  if ( n == 5 && !options.deep )
  {
    throw std::invalid_argument( "enumerate_census: arity 5 scans 2^32 tables and requires the deep option" );
  }
  const uint32_t workers = std::max<uint32_t>( 1, options.threads );
  const uint64_t total = n == 5 ? ( uint64_t( 1 ) << 32 ) : ( uint64_t( 1 ) << ( 1u << n ) );

  const auto started = std::chrono::steady_clock::now();

  std::vector<detail::census_shard> shards( workers );
  std::atomic<uint64_t> done{0};
  std::mutex progress_mutex;
  const auto* progress = options.progress ? &options.progress : nullptr;

  if ( workers == 1 )
  {
    shards[0].scan( n, 0, total, &done, &progress_mutex, progress, total );
  }
  else
  {
    std::vector<std::thread> pool;
    pool.reserve( workers );
    const uint64_t per = total / workers;
    for ( uint32_t w = 0; w < workers; ++w )
    {
      const uint64_t begin = w * per;
      const uint64_t end = w + 1 == workers ? total : begin + per;
      pool.emplace_back( [&, w, begin, end] {
        shards[w].scan( n, begin, end, &done, &progress_mutex, progress, total );
      } );
    }
    for ( auto& thread : pool )
    {
      thread.join();
    }
  }

  census_table table( n, census_table::source_kind::enumerated );
  for ( const auto& shard : shards )
  {
    if ( shard.gap_bound_violated )
    {
      throw std::logic_error( "enumerate_census: a table produced gap > 2" );
    }
    for ( uint32_t m = 0; m <= n; ++m )
    {
      for ( uint32_t g = 0; g <= 2; ++g )
      {
        table.add( m, g, shard.counts[m][g] );
      }
    }
  }
  table.h_enumerated = table.gap2_total();
  table.h_formula_value = h_formula( n );
  table.elapsed_seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - started ).count();
  return table;
}

/* ------------------------------------------------------------------ */
/* verification against the closed-form constants                       */

struct verification_check
{
  std::string name;
  uint64_t expected;
  uint64_t actual;
  bool pass;
};

struct verification_report
{
  std::vector<verification_check> checks;
  bool pass = true;
};

/*! \brief Compares an enumerated census against every applicable
    closed-form constant: 6 gap-2 functions per 2-subset, 10 per
    3-subset, 2 per m-subset for m >= 4, and the h formula */
inline verification_report verify_theorems( const census_table& table )
{
  verification_report report;
  const uint32_t n = table.arity();
  auto expect = [&]( std::string name, uint64_t expected, uint64_t actual ) {
    const bool ok = expected == actual;
    report.checks.push_back( {std::move( name ), expected, actual, ok} );
    report.pass = report.pass && ok;
  };

  if ( table.source() != census_table::source_kind::enumerated )
  {
    throw std::invalid_argument( "verify_theorems: census was not enumerated" );
  }

  expect( "total = 2^(2^n)", uint64_t( 1 ) << ( uint64_t( 1 ) << n ), table.total() );
  expect( "count(ess=2, gap=2) = 6 C(n,2)", 6 * binomial( n, 2 ), table.count( 2, 2 ) );
  if ( n >= 3 )
  {
    expect( "count(ess=3, gap=2) = 10 C(n,3)", 10 * binomial( n, 3 ), table.count( 3, 2 ) );
  }
  for ( uint32_t m = 4; m <= n; ++m )
  {
    expect( "count(ess=" + std::to_string( m ) + ", gap=2) = 2 C(n," + std::to_string( m ) + ")",
            2 * binomial( n, m ), table.count( m, 2 ) );
  }
  expect( "h enumerated = h formula", table.h_formula_value, table.h_enumerated );
  return report;
}

} // namespace aritygap
