/*!
  \file specifier.hpp
  \brief Text forms for naming a Boolean function on the command line

  Accepted forms:

  - "b:<bits>"  binary string; character at 0-based position m is the
    output at input index m, so the two-variable xor is "b:0110".  The
    length fixes the arity.
  - "h:<hex>"   packed little-endian integer, sum of f(tuple(m)) * 2^m;
    needs an explicit arity (xor of two variables is "h:0x6").
  - named builtins: const0, const1, proj:<i> (all with explicit arity),
    maj3, xor:<n>, xnor:<n>, and:<n>, parity-odd:<n>, parity-even:<n>.
  - anything else is parsed as normal-form text (explicit arity).
*/

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "classify.hpp"
#include "fcnf.hpp"
#include "truth_table.hpp"

namespace aritygap
{

class specifier_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Output bits in index order, e.g. "0110" for xor */
inline std::string to_binary_string( const truth_table& f )
{
  std::string s( f.num_bits(), '0' );
  for ( uint64_t m = 0; m < f.num_bits(); ++m )
  {
    if ( f.get_bit( m ) )
    {
      s[m] = '1';
    }
  }
  return s;
}

inline truth_table from_binary_string( std::string_view bits )
{
  const uint64_t length = bits.size();
  if ( length == 0 || ( length & ( length - 1 ) ) != 0 )
  {
    throw specifier_error( "binary form must have power-of-two length, got " + std::to_string( length ) );
  }
  uint32_t arity = 0;
  while ( ( uint64_t( 1 ) << arity ) < length )
  {
    ++arity;
  }
  truth_table f( arity );
  for ( uint64_t m = 0; m < length; ++m )
  {
    if ( bits[m] != '0' && bits[m] != '1' )
    {
      throw specifier_error( std::string( "binary form admits only 0 and 1, got '" ) + bits[m] + "'" );
    }
    f.set_bit( m, bits[m] == '1' );
  }
  return f;
}

/*! \brief Little-endian packed hex with fixed width 2^n / 4 digits,
    e.g. "0x6" for xor of two variables */
inline std::string to_hex_string( const truth_table& f )
{
  const uint64_t digits = std::max<uint64_t>( 1, f.num_bits() / 4 );
  std::string s( digits, '0' );
  for ( uint64_t d = 0; d < digits; ++d )
  {
    uint32_t nibble = 0;
    for ( uint32_t b = 0; b < 4; ++b )
    {
      const uint64_t m = 4 * d + b;
      if ( m < f.num_bits() && f.get_bit( m ) )
      {
        nibble |= 1u << b;
      }
    }
    s[digits - 1 - d] = "0123456789abcdef"[nibble];
  }
  return "0x" + s;
}

inline truth_table from_hex_string( std::string_view hex, uint32_t arity )
{
  if ( hex.substr( 0, 2 ) == "0x" || hex.substr( 0, 2 ) == "0X" )
  {
    hex.remove_prefix( 2 );
  }
  if ( hex.empty() )
  {
    throw specifier_error( "hex form is empty" );
  }
  truth_table f( arity );
  for ( size_t d = 0; d < hex.size(); ++d )
  {
    const char c = hex[hex.size() - 1 - d];
    uint32_t nibble;
    if ( c >= '0' && c <= '9' )
    {
      nibble = c - '0';
    }
    else if ( c >= 'a' && c <= 'f' )
    {
      nibble = 10 + ( c - 'a' );
    }
    else if ( c >= 'A' && c <= 'F' )
    {
      nibble = 10 + ( c - 'A' );
    }
    else
    {
      throw specifier_error( std::string( "invalid hex digit '" ) + c + "'" );
    }
    for ( uint32_t b = 0; b < 4; ++b )
    {
      const uint64_t m = 4 * uint64_t( d ) + b;
      const bool value = ( nibble >> b ) & 1;
      if ( m >= f.num_bits() )
      {
        if ( value )
        {
          throw specifier_error( "hex value out of range for arity " + std::to_string( arity ) );
        }
        continue;
      }
      f.set_bit( m, value );
    }
  }
  return f;
}

namespace detail
{

inline uint32_t parse_decimal_suffix( std::string_view text, const std::string& name )
{
  if ( text.empty() )
  {
    throw specifier_error( name + " needs a decimal suffix" );
  }
  uint64_t value = 0;
  for ( char c : text )
  {
    if ( c < '0' || c > '9' )
    {
      throw specifier_error( name + " needs a decimal suffix, got '" + std::string( text ) + "'" );
    }
    value = value * 10 + ( c - '0' );
    if ( value > truth_table::max_arity )
    {
      throw specifier_error( name + ": value too large" );
    }
  }
  return static_cast<uint32_t>( value );
}

inline uint32_t require_arity( const std::optional<uint32_t>& arity, const char* form )
{
  if ( !arity )
  {
    throw specifier_error( std::string( form ) + " needs an explicit arity (-n)" );
  }
  return *arity;
}

inline void check_arity_match( const std::optional<uint32_t>& declared, uint32_t actual, const char* form )
{
  if ( declared && *declared != actual )
  {
    throw specifier_error( std::string( form ) + ": declared arity " + std::to_string( *declared ) + " does not match " + std::to_string( actual ) );
  }
}

} // namespace detail

/*! \brief Resolves any accepted text form into a truth table */
inline truth_table parse_specifier( std::string_view text, std::optional<uint32_t> arity = std::nullopt )
{
  using detail::check_arity_match;
  using detail::parse_decimal_suffix;
  using detail::require_arity;

  if ( text.substr( 0, 2 ) == "b:" )
  {
    truth_table f = from_binary_string( text.substr( 2 ) );
    check_arity_match( arity, f.arity(), "binary form" );
    return f;
  }
  if ( text.substr( 0, 2 ) == "h:" )
  {
    return from_hex_string( text.substr( 2 ), require_arity( arity, "hex form" ) );
  }

  if ( text == "const0" || text == "const1" )
  {
    const uint32_t n = require_arity( arity, "const builtin" );
    truth_table f( n );
    if ( text == "const1" )
    {
      for ( uint64_t m = 0; m < f.num_bits(); ++m )
      {
        f.set_bit( m, true );
      }
    }
    return f;
  }
  if ( text.substr( 0, 5 ) == "proj:" )
  {
    const uint32_t n = require_arity( arity, "proj builtin" );
    const uint32_t i = parse_decimal_suffix( text.substr( 5 ), "proj" );
    if ( i < 1 || i > n )
    {
      throw specifier_error( "proj: index " + std::to_string( i ) + " out of range for arity " + std::to_string( n ) );
    }
    truth_table f( n );
    for ( uint64_t m = 0; m < f.num_bits(); ++m )
    {
      f.set_bit( m, ( m >> ( n - i ) ) & 1 );
    }
    return f;
  }
  if ( text == "maj3" )
  {
    check_arity_match( arity, 3, "maj3" );
    return truth_table::from_values( 3, {0, 0, 0, 1, 0, 1, 1, 1} );
  }

  const auto suffix_builtin = [&]( std::string_view prefix ) -> std::optional<uint32_t> {
    if ( text.substr( 0, prefix.size() ) == prefix )
    {
      const uint32_t n = parse_decimal_suffix( text.substr( prefix.size() ), std::string( prefix ) );
      if ( n < 1 )
      {
        throw specifier_error( std::string( prefix ) + " needs arity at least 1" );
      }
      check_arity_match( arity, n, std::string( prefix ).c_str() );
      return n;
    }
    return std::nullopt;
  };

  if ( auto n = suffix_builtin( "xor:" ) )
  {
    return parity_support( *n, parity_kind::odd );
  }
  if ( auto n = suffix_builtin( "xnor:" ) )
  {
    return parity_support( *n, parity_kind::even );
  }
  if ( auto n = suffix_builtin( "parity-odd:" ) )
  {
    return parity_support( *n, parity_kind::odd );
  }
  if ( auto n = suffix_builtin( "parity-even:" ) )
  {
    return parity_support( *n, parity_kind::even );
  }
  if ( auto n = suffix_builtin( "and:" ) )
  {
    truth_table f( *n );
    f.set_bit( f.num_bits() - 1, true );
    return f;
  }

  /* fall back to normal-form text */
  const uint32_t n = require_arity( arity, "normal-form text" );
  try
  {
    return from_fcnf( parse_fcnf( text, n ) );
  }
  catch ( const parse_error& e )
  {
    throw specifier_error( std::string( "cannot parse specifier: " ) + e.what() );
  }
}

} // namespace aritygap
