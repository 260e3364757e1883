#include <doctest.h>

#include <random>

#include <aritygap/essential.hpp>
#include <aritygap/fcnf.hpp>

#include "oracle.hpp"

using namespace aritygap;

namespace
{

const truth_table xor2 = truth_table::from_values( 2, {0, 1, 1, 0} );
const truth_table maj3 = truth_table::from_values( 3, {0, 0, 0, 1, 0, 1, 1, 1} );

std::vector<uint64_t> one_positions( const fcnf_expr& e )
{
  std::vector<uint64_t> out;
  for ( uint64_t m = 0; m < e.num_coefficients(); ++m )
  {
    if ( e.coefficient( m ) )
    {
      out.push_back( m );
    }
  }
  return out;
}

} // namespace

TEST_CASE( "to_fcnf reads coefficients off the table" )
{
  CHECK( one_positions( to_fcnf( xor2 ) ) == std::vector<uint64_t>{1, 2} );

  truth_table const1( 2 );
  for ( uint64_t m = 0; m < 4; ++m )
  {
    const1.set_bit( m, true );
  }
  CHECK( one_positions( to_fcnf( const1 ) ) == std::vector<uint64_t>{0, 1, 2, 3} );

  CHECK( one_positions( to_fcnf( maj3 ) ) == std::vector<uint64_t>{3, 5, 6, 7} );
}

TEST_CASE( "coefficient identity: a_m equals the output at tuple(m)" )
{
  for ( uint32_t n = 0; n <= 3; ++n )
  {
    for ( uint64_t code = 0; code < ( uint64_t( 1 ) << ( 1u << n ) ); ++code )
    {
      const truth_table f = truth_table::from_word( n, code );
      const fcnf_expr e = to_fcnf( f );
      for ( uint64_t m = 0; m < f.num_bits(); ++m )
      {
        CHECK( e.coefficient( m ) == eval( f, tuple_of( m, n ) ) );
      }
    }
  }
}

TEST_CASE( "from_fcnf inverts to_fcnf" )
{
  fcnf_expr xnor_coeffs( 2 );
  xnor_coeffs.set_coefficient( 0, true );
  xnor_coeffs.set_coefficient( 3, true );
  CHECK( from_fcnf( xnor_coeffs ) == truth_table::from_values( 2, {1, 0, 0, 1} ) );

  CHECK( from_fcnf( fcnf_expr( 3 ) ) == truth_table( 3 ) );

  /* alternating form with alpha = 1 on three variables is the odd parity:
     x3^1 (x1^0 x2^0 + x1^1 x2^1) + x3^0 (x1^0 x2^1 + x1^1 x2^0) */
  fcnf_expr alternating( 3 );
  alternating.set_coefficient( index_of( point{0, 0, 1} ), true );
  alternating.set_coefficient( index_of( point{1, 1, 1} ), true );
  alternating.set_coefficient( index_of( point{0, 1, 0} ), true );
  alternating.set_coefficient( index_of( point{1, 0, 0} ), true );
  CHECK( from_fcnf( alternating ) == truth_table::from_values( 3, {0, 1, 1, 0, 1, 0, 0, 1} ) );

  /* round trip is the identity: exhaustive for small arities */
  for ( uint32_t n = 0; n <= 3; ++n )
  {
    for ( uint64_t code = 0; code < ( uint64_t( 1 ) << ( 1u << n ) ); ++code )
    {
      const truth_table f = truth_table::from_word( n, code );
      CHECK( from_fcnf( to_fcnf( f ) ) == f );
    }
  }
  std::mt19937_64 rng( 23 );
  for ( uint32_t n = 4; n <= 6; ++n )
  {
    for ( int round = 0; round < 2000; ++round )
    {
      const truth_table f = oracle::random_table( rng, n );
      CHECK( from_fcnf( to_fcnf( f ) ) == f );
    }
  }
}

TEST_CASE( "is_fictive_by_split compares the two cofactors" )
{
  const truth_table not_x2 = truth_table::from_values( 2, {1, 0, 1, 0} );
  CHECK( is_fictive_by_split( not_x2, 1 ) );
  CHECK_FALSE( is_fictive_by_split( xor2, 2 ) );
  CHECK_THROWS_AS( is_fictive_by_split( xor2, 3 ), std::invalid_argument );

  /* agrees with the negation of is_essential on every arity-3 table */
  for ( uint64_t code = 0; code < 256; ++code )
  {
    const truth_table f = truth_table::from_word( 3, code );
    for ( uint32_t i = 1; i <= 3; ++i )
    {
      CHECK( is_fictive_by_split( f, i ) == !is_essential( f, i ) );
    }
  }
}

TEST_CASE( "parse_fcnf on the worked examples" )
{
  CHECK( from_fcnf( parse_fcnf( "x1^0 x2^1 + x1^1 x2^0", 2 ) ) == xor2 );
  CHECK( parse_fcnf( "0", 2 ) == fcnf_expr( 2 ) );
  CHECK_THROWS_AS( parse_fcnf( "x1^0 + x1^1 x2^0", 2 ), parse_error );
}

TEST_CASE( "parse_fcnf accepts the xor sign and flexible spacing" )
{
  CHECK( parse_fcnf( "x1^0 x2^1 \xe2\x8a\x95 x1^1 x2^0", 2 ) == parse_fcnf( "x1^0 x2^1 + x1^1 x2^0", 2 ) );
  CHECK( parse_fcnf( "  x1^1 x2^1  ", 2 ) == parse_fcnf( "x1^1 x2^1", 2 ) );
  /* whitespace between the tokens of one literal is insignificant */
  CHECK( parse_fcnf( "x 1 ^ 0 x2^1", 2 ) == parse_fcnf( "x1^0 x2^1", 2 ) );
  /* literal order inside a monomial is normalized away */
  CHECK( parse_fcnf( "x2^1 x1^0", 2 ) == parse_fcnf( "x1^0 x2^1", 2 ) );
}

TEST_CASE( "parse_fcnf rejects malformed input with a position" )
{
  SUBCASE( "missing variable" )
  {
    try
    {
      parse_fcnf( "x1^0 x3^1", 3 );
      FAIL( "expected parse_error" );
    }
    catch ( const parse_error& e )
    {
      CHECK( std::string( e.what() ).find( "missing variable x2" ) != std::string::npos );
    }
  }
  SUBCASE( "duplicate monomial" )
  {
    try
    {
      parse_fcnf( "x1^0 x2^1 + x1^0 x2^1", 2 );
      FAIL( "expected parse_error" );
    }
    catch ( const parse_error& e )
    {
      CHECK( std::string( e.what() ).find( "duplicate monomial" ) != std::string::npos );
      CHECK( e.position() == 12 );
    }
  }
  SUBCASE( "duplicate literal" )
  {
    CHECK_THROWS_AS( parse_fcnf( "x1^0 x1^1", 2 ), parse_error );
  }
  SUBCASE( "index out of declared arity" )
  {
    try
    {
      parse_fcnf( "x1^0 x2^1 x3^0", 2 );
      FAIL( "expected parse_error" );
    }
    catch ( const parse_error& e )
    {
      CHECK( std::string( e.what() ).find( "out of declared arity" ) != std::string::npos );
      CHECK( e.position() == 11 );
    }
  }
  SUBCASE( "bad exponent" )
  {
    CHECK_THROWS_AS( parse_fcnf( "x1^2 x2^0", 2 ), parse_error );
  }
  SUBCASE( "missing whitespace between literals" )
  {
    CHECK_THROWS_AS( parse_fcnf( "x1^0x2^1", 2 ), parse_error );
  }
  SUBCASE( "trailing separator" )
  {
    CHECK_THROWS_AS( parse_fcnf( "x1^0 x2^1 +", 2 ), parse_error );
  }
  SUBCASE( "zero must stand alone" )
  {
    CHECK_THROWS_AS( parse_fcnf( "0 + x1^0 x2^1", 2 ), parse_error );
  }
  SUBCASE( "empty input" )
  {
    CHECK_THROWS_AS( parse_fcnf( "", 2 ), parse_error );
    CHECK_THROWS_AS( parse_fcnf( "   ", 2 ), parse_error );
  }
}

TEST_CASE( "format_fcnf canonical rendering" )
{
  CHECK( format_fcnf( to_fcnf( xor2 ) ) == "x1^0 x2^1 + x1^1 x2^0" );
  CHECK( format_fcnf( fcnf_expr( 2 ) ) == "0" );
  CHECK( format_fcnf( to_fcnf( maj3 ) ) == "x1^0 x2^1 x3^1 + x1^1 x2^0 x3^1 + x1^1 x2^1 x3^0 + x1^1 x2^1 x3^1" );

  fcnf_expr unit( 0 );
  unit.set_coefficient( 0, true );
  CHECK( format_fcnf( unit ) == "1" );
  CHECK( parse_fcnf( "1", 0 ) == unit );
  CHECK( parse_fcnf( "0", 0 ) == fcnf_expr( 0 ) );
}

TEST_CASE( "grammar round trip: parse after format is the identity" )
{
  for ( uint32_t n = 0; n <= 3; ++n )
  {
    for ( uint64_t code = 0; code < ( uint64_t( 1 ) << ( 1u << n ) ); ++code )
    {
      const fcnf_expr e = to_fcnf( truth_table::from_word( n, code ) );
      CHECK( parse_fcnf( format_fcnf( e ), n ) == e );
    }
  }
  std::mt19937_64 rng( 37 );
  for ( uint32_t n = 4; n <= 5; ++n )
  {
    for ( int round = 0; round < 200; ++round )
    {
      const fcnf_expr e = to_fcnf( oracle::random_table( rng, n ) );
      CHECK( parse_fcnf( format_fcnf( e ), n ) == e );
    }
  }
}

TEST_CASE( "monomial structure lists literals in ascending variable order" )
{
  const auto monos = to_fcnf( xor2 ).monomials();
  REQUIRE( monos.size() == 2 );
  CHECK( monos[0].literals == std::vector<literal>{{1, false}, {2, true}} );
  CHECK( monos[1].literals == std::vector<literal>{{1, true}, {2, false}} );
}
