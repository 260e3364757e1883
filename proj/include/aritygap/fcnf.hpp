/*!
  \file fcnf.hpp
  \brief Full conjunctive normal form over the two-element ring

  Every n-ary Boolean function has a unique expansion

      f = XOR over m of  a_m * x1^{a1} * ... * xn^{an},

  where m runs through the tuple indices, x^e is the indicator of x = e,
  and the coefficient a_m equals the table value f(tuple(m)) because at
  any point exactly one full conjunct is satisfied.  Coefficients are
  stored positionally by m, which makes uniqueness structural.

  Text grammar (arity is declared out of band, never inferred):

      expr     := "0" | monomial ( "+" monomial )*
      monomial := literal ( literal )*
      literal  := "x" index "^" ( "0" | "1" )

  "+" may also be written as the XOR sign U+2295.  Whitespace is
  insignificant between tokens but required between adjacent literals.
  Each monomial must contain every declared variable exactly once.
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "truth_table.hpp"

namespace aritygap
{

/*! \brief The indicator literal x^e: evaluates to 1 iff x = e */
struct literal
{
  uint32_t var;  /*!< 1-based variable index */
  bool exponent; /*!< the e in x^e */

  bool operator==( const literal& other ) const = default;
};

/*! \brief A full conjunct: one literal per variable, ascending index */
struct monomial
{
  std::vector<literal> literals;

  bool operator==( const monomial& other ) const = default;
};

/*! \brief The full conjunct with exponent tuple equal to tuple(m) */
inline monomial monomial_of( uint64_t m, uint32_t arity )
{
  const point p = tuple_of( m, arity );
  monomial mono;
  mono.literals.reserve( arity );
  for ( uint32_t k = 0; k < arity; ++k )
  {
    mono.literals.push_back( {k + 1, p[k] != 0} );
  }
  return mono;
}

/*! \brief Positional coefficient vector (a_0, ..., a_{2^n - 1}) */
class fcnf_expr
{
public:
  explicit fcnf_expr( uint32_t arity = 0 )
      : table_( arity )
  {
  }

  uint32_t arity() const { return table_.arity(); }
  uint64_t num_coefficients() const { return table_.num_bits(); }

  bool coefficient( uint64_t m ) const { return table_.get_bit( m ); }
  void set_coefficient( uint64_t m, bool value ) { table_.set_bit( m, value ); }

  /*! \brief Monomials with coefficient 1, ascending m */
  std::vector<monomial> monomials() const
  {
    std::vector<monomial> result;
    for ( uint64_t m = 0; m < num_coefficients(); ++m )
    {
      if ( coefficient( m ) )
      {
        result.push_back( monomial_of( m, arity() ) );
      }
    }
    return result;
  }

  bool operator==( const fcnf_expr& other ) const = default;

private:
  truth_table table_;
};

/*! \brief Expands f into its normal form; a_m = f(tuple(m)) */
inline fcnf_expr to_fcnf( const truth_table& f )
{
  fcnf_expr e( f.arity() );
  for ( uint64_t m = 0; m < f.num_bits(); ++m )
  {
    e.set_coefficient( m, f.get_bit( m ) );
  }
  return e;
}

/*! \brief Evaluates the normal form back into a table; inverse of to_fcnf */
inline truth_table from_fcnf( const fcnf_expr& e )
{
  truth_table f( e.arity() );
  for ( uint64_t m = 0; m < e.num_coefficients(); ++m )
  {
    f.set_bit( m, e.coefficient( m ) );
  }
  return f;
}

/*! \brief Fictivity test by cofactor comparison.

  Splits f = x_i^0 * f1 (+) x_i^1 * f2 into the two subtables obtained by
  fixing coordinate i and reports whether f1 = f2.  Agrees with the
  negation of is_essential on every function; the two tests take
  different routes on purpose.
*/
inline bool is_fictive_by_split( const truth_table& f, uint32_t i )
{
  if ( i < 1 || i > f.arity() )
  {
    throw std::invalid_argument( "is_fictive_by_split: variable index out of range" );
  }
  const uint32_t n = f.arity();
  truth_table low( n - 1 ), high( n - 1 );
  for ( uint64_t sub = 0; sub < low.num_bits(); ++sub )
  {
    point p = tuple_of( sub, n - 1 );
    p.coords.insert( p.coords.begin() + ( i - 1 ), 0 );
    low.set_bit( sub, f.get_bit( index_of( p ) ) );
    p[i - 1] = 1;
    high.set_bit( sub, f.get_bit( index_of( p ) ) );
  }
  return low == high;
}

/*! \brief Parse failure with the byte offset of the offending token */
class parse_error : public std::runtime_error
{
public:
  parse_error( const std::string& message, size_t position )
      : std::runtime_error( message + " (at byte " + std::to_string( position ) + ")" ),
        position_( position )
  {
  }

  size_t position() const { return position_; }

private:
  size_t position_;
};

namespace detail
{

inline bool is_space( char c )
{
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

struct fcnf_parser
{
  std::string_view text;
  uint32_t arity;
  size_t pos = 0;

  void skip_space()
  {
    while ( pos < text.size() && is_space( text[pos] ) )
    {
      ++pos;
    }
  }

  bool at_end()
  {
    skip_space();
    return pos == text.size();
  }

  /* "+" or the three-byte XOR sign */
  bool accept_separator()
  {
    skip_space();
    if ( pos < text.size() && text[pos] == '+' )
    {
      ++pos;
      return true;
    }
    if ( pos + 3 <= text.size() && text.substr( pos, 3 ) == "\xe2\x8a\x95" )
    {
      pos += 3;
      return true;
    }
    return false;
  }

  literal parse_literal()
  {
    if ( pos >= text.size() || text[pos] != 'x' )
    {
      throw parse_error( "expected literal 'x<i>^<0|1>'", pos );
    }
    ++pos;
    skip_space();
    const size_t digits_begin = pos;
    while ( pos < text.size() && text[pos] >= '0' && text[pos] <= '9' )
    {
      ++pos;
    }
    if ( pos == digits_begin )
    {
      throw parse_error( "expected variable index after 'x'", pos );
    }
    unsigned long var = 0;
    try
    {
      var = std::stoul( std::string( text.substr( digits_begin, pos - digits_begin ) ) );
    }
    catch ( const std::out_of_range& )
    {
      throw parse_error( "variable index too large", digits_begin );
    }
    if ( var < 1 || var > arity )
    {
      throw parse_error( "variable index " + std::to_string( var ) + " out of declared arity " + std::to_string( arity ), digits_begin );
    }
    skip_space();
    if ( pos >= text.size() || text[pos] != '^' )
    {
      throw parse_error( "expected '^' after variable", pos );
    }
    ++pos;
    skip_space();
    if ( pos >= text.size() || ( text[pos] != '0' && text[pos] != '1' ) )
    {
      throw parse_error( "expected exponent 0 or 1", pos );
    }
    const bool exponent = text[pos] == '1';
    ++pos;
    return {static_cast<uint32_t>( var ), exponent};
  }

  /* index m of one full conjunct */
  uint64_t parse_monomial()
  {
    const size_t start = pos;
    std::vector<int> exponent( arity, -1 );
    while ( true )
    {
      const literal lit = parse_literal();
      if ( exponent[lit.var - 1] != -1 )
      {
        throw parse_error( "duplicate literal for variable x" + std::to_string( lit.var ), start );
      }
      exponent[lit.var - 1] = lit.exponent ? 1 : 0;
      const size_t before = pos;
      skip_space();
      if ( pos < text.size() && text[pos] == 'x' )
      {
        if ( before == pos )
        {
          throw parse_error( "whitespace required between literals", pos );
        }
        continue;
      }
      pos = before;
      break;
    }
    uint64_t m = 0;
    for ( uint32_t k = 0; k < arity; ++k )
    {
      if ( exponent[k] == -1 )
      {
        throw parse_error( "monomial missing variable x" + std::to_string( k + 1 ), start );
      }
      m = ( m << 1 ) | uint64_t( exponent[k] );
    }
    return m;
  }
};

} // namespace detail

/*! \brief Parses the text grammar into a coefficient vector.

  Rejects non-full monomials, duplicate monomials and variable indices
  outside the declared arity.  "0" is the empty sum; for arity 0 the
  single full conjunct is the empty product, written "1".
*/
inline fcnf_expr parse_fcnf( std::string_view text, uint32_t arity )
{
  detail::fcnf_parser parser{text, arity};
  fcnf_expr e( arity );

  parser.skip_space();
  if ( parser.pos < text.size() && text[parser.pos] == '0' )
  {
    ++parser.pos;
    if ( !parser.at_end() )
    {
      throw parse_error( "'0' must stand alone", parser.pos );
    }
    return e;
  }
  if ( arity == 0 )
  {
    if ( parser.pos < text.size() && text[parser.pos] == '1' )
    {
      ++parser.pos;
      if ( !parser.at_end() )
      {
        throw parse_error( "'1' must stand alone", parser.pos );
      }
      e.set_coefficient( 0, true );
      return e;
    }
    throw parse_error( "expected '0' or '1' for arity 0", parser.pos );
  }

  while ( true )
  {
    parser.skip_space();
    if ( parser.pos == text.size() )
    {
      throw parse_error( "expected monomial", parser.pos );
    }
    const size_t mono_at = parser.pos;
    const uint64_t m = parser.parse_monomial();
    if ( e.coefficient( m ) )
    {
      throw parse_error( "duplicate monomial", mono_at );
    }
    e.set_coefficient( m, true );
    if ( parser.at_end() )
    {
      break;
    }
    if ( !parser.accept_separator() )
    {
      throw parse_error( "expected '+' between monomials", parser.pos );
    }
  }
  return e;
}

/*! \brief Canonical rendering: monomials ascending by m, literals
    ascending by variable, "0" for the empty sum */
inline std::string format_fcnf( const fcnf_expr& e )
{
  std::string out;
  for ( uint64_t m = 0; m < e.num_coefficients(); ++m )
  {
    if ( !e.coefficient( m ) )
    {
      continue;
    }
    if ( !out.empty() )
    {
      out += " + ";
    }
    if ( e.arity() == 0 )
    {
      out += "1";
      continue;
    }
    const point p = tuple_of( m, e.arity() );
    for ( uint32_t k = 0; k < e.arity(); ++k )
    {
      if ( k > 0 )
      {
        out += ' ';
      }
      out += 'x';
      out += std::to_string( k + 1 );
      out += '^';
      out += p[k] ? '1' : '0';
    }
  }
  return out.empty() ? "0" : out;
}

} // namespace aritygap
