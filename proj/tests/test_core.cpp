#include <doctest.h>

#include <aritygap/essential.hpp>
#include <aritygap/truth_table.hpp>

#include "oracle.hpp"

using namespace aritygap;

namespace
{

const truth_table xor2 = truth_table::from_values( 2, {0, 1, 1, 0} );
const truth_table and2 = truth_table::from_values( 2, {0, 0, 0, 1} );
const truth_table maj3 = truth_table::from_values( 3, {0, 0, 0, 1, 0, 1, 1, 1} );
const truth_table not_x2 = truth_table::from_values( 2, {1, 0, 1, 0} ); /* x2^0 */
const truth_table proj_x1 = truth_table::from_values( 2, {0, 0, 1, 1} );
const truth_table parity3 = truth_table::from_values( 3, {0, 1, 1, 0, 1, 0, 0, 1} );

} // namespace

TEST_CASE( "index_of and tuple_of are mutually inverse" )
{
  CHECK( index_of( point{0, 0, 0} ) == 0 );
  CHECK( index_of( point{1, 0, 1} ) == 5 );
  CHECK( tuple_of( 6, 3 ) == point{1, 1, 0} );
  for ( uint32_t n = 0; n <= 6; ++n )
  {
    for ( uint64_t m = 0; m < ( uint64_t( 1 ) << n ); ++m )
    {
      CHECK( index_of( tuple_of( m, n ) ) == m );
    }
  }
  CHECK_THROWS_AS( tuple_of( 8, 3 ), std::invalid_argument );
}

TEST_CASE( "eval looks up the table by tuple index" )
{
  CHECK( eval( xor2, point{1, 0} ) == true );
  CHECK( eval( truth_table( 2 ), point{1, 1} ) == false );
  CHECK( eval( maj3, point{1, 0, 1} ) == true );
  CHECK_THROWS_AS( eval( xor2, point{1, 0, 1} ), std::invalid_argument );
}

TEST_CASE( "is_essential detects dependence on a coordinate" )
{
  CHECK_FALSE( is_essential( not_x2, 1 ) );
  CHECK( is_essential( not_x2, 2 ) );
  CHECK( is_essential( maj3, 3 ) );
  CHECK( oracle::is_essential( maj3, 3 ) );
  CHECK_THROWS_AS( is_essential( xor2, 0 ), std::invalid_argument );
  CHECK_THROWS_AS( is_essential( xor2, 3 ), std::invalid_argument );
}

TEST_CASE( "essential_set and ess" )
{
  truth_table const1( 3 );
  for ( uint64_t m = 0; m < 8; ++m )
  {
    const1.set_bit( m, true );
  }
  CHECK( essential_set( const1 ).empty() );
  CHECK( essential_set( proj_x1 ) == variable_set::of( {1} ) );
  CHECK( essential_set( maj3 ) == variable_set::of( {1, 2, 3} ) );
  CHECK( ess( maj3 ) == 3 );
  CHECK( ess( truth_table( 0 ) ) == 0 );
}

TEST_CASE( "identify substitutes one variable for another" )
{
  /* x2^0 with x2 := x1 becomes x1^0 */
  CHECK( identify( not_x2, {2, 1} ) == truth_table::from_values( 2, {1, 1, 0, 0} ) );
  /* substituting into a fictive position changes nothing */
  CHECK( identify( proj_x1, {2, 1} ) == proj_x1 );
  /* parity of three with x2 := x1 collapses to the third projection */
  CHECK( identify( parity3, {2, 1} ) == truth_table::from_values( 3, {0, 1, 0, 1, 0, 1, 0, 1} ) );
  CHECK_THROWS_AS( identify( xor2, {1, 1} ), std::invalid_argument );
  CHECK_THROWS_AS( identify( xor2, {0, 1} ), std::invalid_argument );
  CHECK_THROWS_AS( identify( xor2, {1, 3} ), std::invalid_argument );
}

TEST_CASE( "identify agrees with the point-by-point oracle" )
{
  std::mt19937_64 rng( 7 );
  for ( uint32_t n = 2; n <= 6; ++n )
  {
    for ( int round = 0; round < 50; ++round )
    {
      const truth_table f = oracle::random_table( rng, n );
      for ( uint32_t i = 1; i <= n; ++i )
      {
        for ( uint32_t j = 1; j <= n; ++j )
        {
          if ( i != j )
          {
            CHECK( identify( f, {i, j} ) == oracle::identify( f, i, j ) );
          }
        }
      }
    }
  }
}

TEST_CASE( "minors enumerates ordered pairs deterministically" )
{
  CHECK( minors( truth_table( 1 ) ).empty() );
  CHECK( minors( xor2 ).size() == 2 );
  CHECK( minors( truth_table( 4 ) ).size() == 12 );

  const auto list = minors( xor2 );
  CHECK( list[0].first == minor_spec{1, 2} );
  CHECK( list[1].first == minor_spec{2, 1} );
  CHECK( list[0].second == truth_table( 2 ) );
  CHECK( list[1].second == truth_table( 2 ) );

  const auto list3 = minors( maj3 );
  REQUIRE( list3.size() == 6 );
  CHECK( list3[0].first == minor_spec{1, 2} );
  CHECK( list3[1].first == minor_spec{1, 3} );
  CHECK( list3[2].first == minor_spec{2, 1} );
  CHECK( list3[5].first == minor_spec{3, 2} );
}

TEST_CASE( "gap on the worked examples" )
{
  SUBCASE( "xor of two variables has gap 2" )
  {
    const auto report = gap( xor2 );
    CHECK( report.ess_count == 2 );
    CHECK( report.gap == 2 );
    REQUIRE( report.best_minor.has_value() );
    CHECK( *report.best_minor == minor_spec{1, 2} );
    CHECK( report.best_minor_ess == 0 );
  }
  SUBCASE( "and of two variables has gap 1" )
  {
    const auto report = gap( and2 );
    CHECK( report.gap == 1 );
    CHECK( report.best_minor_ess == 1 );
  }
  SUBCASE( "parity of four has gap 2" )
  {
    truth_table parity4( 4 );
    for ( uint64_t m = 0; m < 16; ++m )
    {
      parity4.set_bit( m, __builtin_popcountll( m ) & 1 );
    }
    CHECK( gap( parity4 ).gap == 2 );
  }
  SUBCASE( "and of three variables has gap 1" )
  {
    truth_table and3( 3 );
    and3.set_bit( 7, true );
    const auto report = gap( and3 );
    CHECK( report.gap == 1 );
    CHECK( report.best_minor_ess == 2 );
    CHECK( oracle::gap_value( and3 ) == 1 );
  }
  SUBCASE( "degenerate inputs get gap 0" )
  {
    CHECK( gap( truth_table( 0 ) ).gap == 0 );
    CHECK( gap( truth_table( 3 ) ).gap == 0 );
    CHECK( gap( proj_x1 ).gap == 0 );
    CHECK_FALSE( gap( proj_x1 ).best_minor.has_value() );
    CHECK( gap( proj_x1 ).best_minor_ess == gap( proj_x1 ).ess_count );
  }
}

TEST_CASE( "gap agrees with the definition-level oracle" )
{
  /* exhaustive over every table of arity up to 3 */
  for ( uint32_t n = 0; n <= 3; ++n )
  {
    for ( uint64_t code = 0; code < ( uint64_t( 1 ) << ( 1u << n ) ); ++code )
    {
      const truth_table f = truth_table::from_word( n, code );
      CHECK( gap( f ).gap == oracle::gap_value( f ) );
    }
  }
  std::mt19937_64 rng( 11 );
  for ( uint32_t n = 4; n <= 6; ++n )
  {
    for ( int round = 0; round < 200; ++round )
    {
      const truth_table f = oracle::random_table( rng, n );
      CHECK( gap( f ).gap == oracle::gap_value( f ) );
    }
  }
}

TEST_CASE( "transform operations" )
{
  CHECK( complement_output( truth_table( 2 ) ) == truth_table::from_values( 2, {1, 1, 1, 1} ) );
  CHECK( permute_vars( proj_x1, {2, 1} ) == truth_table::from_values( 2, {0, 1, 0, 1} ) );
  CHECK( complement_inputs( xor2 ) == xor2 );
  CHECK_THROWS_AS( permute_vars( xor2, {1, 1} ), std::invalid_argument );
  CHECK_THROWS_AS( permute_vars( xor2, {1} ), std::invalid_argument );
  CHECK_THROWS_AS( permute_vars( xor2, {0, 1} ), std::invalid_argument );

  /* permuting twice by inverse permutations is the identity */
  std::mt19937_64 rng( 3 );
  for ( int round = 0; round < 20; ++round )
  {
    const truth_table f = oracle::random_table( rng, 5 );
    const auto perm = oracle::random_permutation( rng, 5 );
    std::vector<uint32_t> inverse( 5 );
    for ( uint32_t k = 0; k < 5; ++k )
    {
      inverse[perm[k] - 1] = k + 1;
    }
    CHECK( permute_vars( permute_vars( f, perm ), inverse ) == f );
  }
}

TEST_CASE( "wide tables use the multi-word paths" )
{
  /* arities above 6 leave the single-word fast path; cross-check the
     generic code against the point-by-point oracle */
  std::mt19937_64 rng( 77 );
  for ( uint32_t n : {7u, 8u} )
  {
    for ( int round = 0; round < 10; ++round )
    {
      const truth_table f = oracle::random_table( rng, n );
      for ( uint32_t i = 1; i <= n; ++i )
      {
        CHECK( is_essential( f, i ) == oracle::is_essential( f, i ) );
      }
      const uint32_t i = 1 + rng() % n;
      uint32_t j = 1 + rng() % ( n - 1 );
      j += j >= i ? 1 : 0;
      CHECK( identify( f, {i, j} ) == oracle::identify( f, i, j ) );
    }
  }

  /* a random wide function almost surely has gap 1; the parity table is
     the known gap-2 witness */
  truth_table parity7( 7 );
  for ( uint64_t m = 0; m < parity7.num_bits(); ++m )
  {
    parity7.set_bit( m, __builtin_popcountll( m ) & 1 );
  }
  const auto report = gap( parity7 );
  CHECK( report.ess_count == 7 );
  CHECK( report.gap == 2 );

  /* embedding a narrow function into a wide one preserves its gap */
  const truth_table wide = [] {
    truth_table t( 8 );
    for ( uint64_t m = 0; m < t.num_bits(); ++m )
    {
      const bool x3 = ( m >> 5 ) & 1, x7 = ( m >> 1 ) & 1;
      t.set_bit( m, x3 != x7 );
    }
    return t;
  }();
  CHECK( essential_set( wide ) == variable_set::of( {3, 7} ) );
  CHECK( gap( wide ).gap == 2 );
}

TEST_CASE( "truth_table basics" )
{
  CHECK( truth_table( 0 ).num_bits() == 1 );
  CHECK( truth_table( 6 ).num_bits() == 64 );
  CHECK( xor2.word() == 0x6 );
  CHECK( truth_table::from_word( 2, 0x6 ) == xor2 );
  CHECK_THROWS_AS( truth_table( 30 ), std::invalid_argument );
  CHECK_THROWS_AS( xor2.get_bit( 4 ), std::invalid_argument );
  CHECK_THROWS_AS( truth_table::from_values( 2, {0, 1} ), std::invalid_argument );
  CHECK( ( truth_table( 2 ) < xor2 ) );
}
