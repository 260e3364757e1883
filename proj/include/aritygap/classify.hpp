/*!
  \file classify.hpp
  \brief Closed-form recognition and generation of gap-2 functions

  The functions with arity gap 2 admit a complete description by the
  essential-variable count m of the function:

  - m = 2: f = a0 (x1^0 x2^0 (+) x1^1 x2^1) (+) a1 x1^0 x2^1 (+) a2 x1^1 x2^0
    with a1 != a0 or a2 != a0; there are 6 such functions.

  - m = 3: up to a permutation of the variables, either the selector form
    f = x3^a (x1^0 x2^1 (+) x1^1 x2^0) (+) x1^b x2^b, or the alternating
    form f = x3^a (x1^0 x2^0 (+) x1^1 x2^1) (+) x3^!a (x1^0 x2^1 (+) x1^1 x2^0);
    there are 10 such functions.

  - m >= 4: exactly the two parity indicator functions (output 1 on the
    inputs with an odd, respectively even, number of ones).

  Functions are classified on their restriction to the essential
  variables; fictive variables are projected away first and reported via
  the essential set.
*/

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "essential.hpp"
#include "truth_table.hpp"

namespace aritygap
{

enum class parity_kind
{
  odd,
  even
};

/*! \brief Indicator of the tuples whose number of ones has the given
    parity; for n >= 4 these are the only gap-2 functions of full
    essential arity */
inline truth_table parity_support( uint32_t n, parity_kind parity )
{
  if ( n < 1 )
  {
    throw std::invalid_argument( "parity_support: arity must be at least 1" );
  }
  truth_table t( n );
  const int want = parity == parity_kind::odd ? 1 : 0;
  for ( uint64_t m = 0; m < t.num_bits(); ++m )
  {
    t.set_bit( m, ( __builtin_popcountll( m ) & 1 ) == want );
  }
  return t;
}

/*! \brief Restriction of f to the variables in `vars`: the |vars|-ary
    function obtained by reading only those coordinates.  Meaningful when
    the essential set of f is contained in vars. */
inline truth_table restrict_to( const truth_table& f, const variable_set& vars )
{
  const auto idx = vars.indices();
  const uint32_t m = static_cast<uint32_t>( idx.size() );
  for ( auto i : idx )
  {
    if ( i > f.arity() )
    {
      throw std::invalid_argument( "restrict_to: variable index out of range" );
    }
  }
  truth_table g( m );
  for ( uint64_t y = 0; y < g.num_bits(); ++y )
  {
    uint64_t src = 0;
    for ( uint32_t k = 0; k < m; ++k )
    {
      const uint64_t bit = ( y >> ( m - 1 - k ) ) & 1;
      src |= bit << ( f.arity() - idx[k] );
    }
    g.set_bit( y, f.get_bit( src ) );
  }
  return g;
}

/*! \brief Inverse of restrict_to: place g on the variables in `vars`
    inside ambient arity n, leaving the others fictive */
inline truth_table embed( const truth_table& g, const variable_set& vars, uint32_t n )
{
  const auto idx = vars.indices();
  if ( idx.size() != g.arity() )
  {
    throw std::invalid_argument( "embed: variable set size differs from arity" );
  }
  for ( auto i : idx )
  {
    if ( i > n )
    {
      throw std::invalid_argument( "embed: variable index out of ambient range" );
    }
  }
  truth_table f( n );
  for ( uint64_t m = 0; m < f.num_bits(); ++m )
  {
    uint64_t y = 0;
    for ( uint32_t k = 0; k < idx.size(); ++k )
    {
      const uint64_t bit = ( m >> ( n - idx[k] ) ) & 1;
      y = ( y << 1 ) | bit;
    }
    f.set_bit( m, g.get_bit( y ) );
  }
  return f;
}

/* ------------------------------------------------------------------ */
/* classification result                                                */

struct not_gap2
{
  bool operator==( const not_gap2& ) const = default;
};

/*! \brief m = 2 member with coefficients (a0, a1, a2, a0) */
struct gap2_m2
{
  bool a0, a1, a2;
  bool operator==( const gap2_m2& ) const = default;
};

/*! \brief m = 3 selector form x3^alpha (x1^0 x2^1 (+) x1^1 x2^0) (+)
    x1^beta x2^beta, applied after the variable permutation `perm` */
struct gap2_m3_form3
{
  bool alpha, beta;
  std::array<uint32_t, 3> perm; /*!< 1-based, restricted positions */
  bool operator==( const gap2_m3_form3& ) const = default;
};

/*! \brief m = 3 alternating form x3^alpha (x1^0 x2^0 (+) x1^1 x2^1) (+)
    x3^!alpha (x1^0 x2^1 (+) x1^1 x2^0); equals the arity-3 parity
    indicator (odd for alpha = 1) */
struct gap2_m3_form4
{
  bool alpha;
  bool operator==( const gap2_m3_form4& ) const = default;
};

/*! \brief m >= 4 member: a parity indicator on the essential variables */
struct gap2_parity
{
  parity_kind parity;
  bool operator==( const gap2_parity& ) const = default;
};

using gap2_form = std::variant<not_gap2, gap2_m2, gap2_m3_form3, gap2_m3_form4, gap2_parity>;

/*! \brief Which closed form a function matches, if any.  Form parameters
    refer to the restriction of the function to `essential`, with the
    essential variables renumbered 1..m in ascending order. */
struct classification
{
  gap2_form form;
  variable_set essential;

  bool is_gap2() const { return !std::holds_alternative<not_gap2>( form ); }

  bool operator==( const classification& ) const = default;
};

namespace detail
{

/* selector form on 3 variables: x_d^alpha picks the xor of the other two,
   else their corner conjunct x_p^beta x_q^beta */
inline truth_table m3_selector_table( bool alpha, bool beta, uint32_t distinguished )
{
  truth_table t( 3 );
  for ( uint64_t m = 0; m < 8; ++m )
  {
    const point p = tuple_of( m, 3 );
    const uint8_t d = p[distinguished - 1];
    uint8_t others[2];
    uint32_t w = 0;
    for ( uint32_t k = 1; k <= 3; ++k )
    {
      if ( k != distinguished )
      {
        others[w++] = p[k - 1];
      }
    }
    const bool gate = d == ( alpha ? 1 : 0 );
    const bool value = ( gate && ( others[0] != others[1] ) ) != ( others[0] == ( beta ? 1 : 0 ) && others[1] == ( beta ? 1 : 0 ) );
    t.set_bit( m, value );
  }
  return t;
}

struct m3_entry
{
  truth_table table;
  gap2_form form;
};

/* the ten arity-3 gap-2 functions with their canonical parameters:
   2 alternating, 2 selector with beta = alpha, 6 selector with
   beta = !alpha over the three choices of the distinguished variable */
inline const std::vector<m3_entry>& m3_catalog()
{
  static const std::vector<m3_entry> catalog = [] {
    std::vector<m3_entry> list;
    for ( int alpha = 0; alpha <= 1; ++alpha )
    {
      list.push_back( {parity_support( 3, alpha ? parity_kind::odd : parity_kind::even ),
                       gap2_m3_form4{alpha != 0}} );
    }
    for ( int alpha = 0; alpha <= 1; ++alpha )
    {
      list.push_back( {m3_selector_table( alpha != 0, alpha != 0, 3 ),
                       gap2_m3_form3{alpha != 0, alpha != 0, {1, 2, 3}}} );
    }
    for ( int alpha = 0; alpha <= 1; ++alpha )
    {
      for ( uint32_t d = 1; d <= 3; ++d )
      {
        std::array<uint32_t, 3> perm{};
        uint32_t w = 0;
        for ( uint32_t k = 1; k <= 3; ++k )
        {
          if ( k != d )
          {
            perm[w++] = k;
          }
        }
        perm[2] = d;
        list.push_back( {m3_selector_table( alpha != 0, alpha == 0, d ),
                         gap2_m3_form3{alpha != 0, alpha == 0, perm}} );
      }
    }
    return list;
  }();
  return catalog;
}

} // namespace detail

/*! \brief Matches f against the complete catalogue of gap-2 closed
    forms.  Returns a non-trivial form exactly when the arity gap of f
    is 2.  When a form matches under several parameter choices the
    lexicographically least (alpha, beta, perm) is reported. */
inline classification classify( const truth_table& f )
{
  classification result;
  result.essential = essential_set( f );
  result.form = not_gap2{};
  const uint32_t m = result.essential.size();
  if ( m < 2 )
  {
    return result;
  }

  const truth_table r = restrict_to( f, result.essential );

  if ( m == 2 )
  {
    const bool a0 = r.get_bit( 0 ), a1 = r.get_bit( 1 ), a2 = r.get_bit( 2 ), a3 = r.get_bit( 3 );
    if ( a0 == a3 && ( a1 != a0 || a2 != a0 ) )
    {
      result.form = gap2_m2{a0, a1, a2};
    }
    return result;
  }

  if ( m == 3 )
  {
    for ( const auto& entry : detail::m3_catalog() )
    {
      if ( entry.table == r )
      {
        result.form = entry.form;
        return result;
      }
    }
    return result;
  }

  if ( r == parity_support( m, parity_kind::odd ) )
  {
    result.form = gap2_parity{parity_kind::odd};
  }
  else if ( r == parity_support( m, parity_kind::even ) )
  {
    result.form = gap2_parity{parity_kind::even};
  }
  return result;
}

/*! \brief The complete list of functions of ambient arity n whose
    essential set is exactly `vars` (of size m) and whose gap is 2.

  List lengths are 6 (m = 2), 10 (m = 3) and 2 (m >= 4); order is
  deterministic and follows the closed forms.
*/
inline std::vector<truth_table> generate_gap2( uint32_t m, const variable_set& vars, uint32_t n )
{
  if ( m < 2 )
  {
    throw std::invalid_argument( "generate_gap2: essential arity must be at least 2" );
  }
  if ( vars.size() != m )
  {
    throw std::invalid_argument( "generate_gap2: variable set size differs from m" );
  }
  if ( m > n )
  {
    throw std::invalid_argument( "generate_gap2: essential arity exceeds ambient arity" );
  }
  for ( auto i : vars.indices() )
  {
    if ( i > n )
    {
      throw std::invalid_argument( "generate_gap2: variable index out of ambient range" );
    }
  }

  std::vector<truth_table> restricted;
  if ( m == 2 )
  {
    for ( int a0 = 0; a0 <= 1; ++a0 )
    {
      for ( int a1 = 0; a1 <= 1; ++a1 )
      {
        for ( int a2 = 0; a2 <= 1; ++a2 )
        {
          if ( a1 == a0 && a2 == a0 )
          {
            continue;
          }
          restricted.push_back( truth_table::from_values( 2, {a0, a1, a2, a0} ) );
        }
      }
    }
  }
  else if ( m == 3 )
  {
    for ( const auto& entry : detail::m3_catalog() )
    {
      restricted.push_back( entry.table );
    }
  }
  else
  {
    restricted.push_back( parity_support( m, parity_kind::odd ) );
    restricted.push_back( parity_support( m, parity_kind::even ) );
  }

  std::vector<truth_table> result;
  result.reserve( restricted.size() );
  for ( const auto& r : restricted )
  {
    result.push_back( embed( r, vars, n ) );
  }
  return result;
}

/* ------------------------------------------------------------------ */
/* cofactor decomposition                                               */

/*! \brief The two subfunctions f = x_i^0 * negative (+) x_i^1 * positive */
struct cofactors
{
  truth_table negative; /*!< coordinate i fixed to 0 */
  truth_table positive; /*!< coordinate i fixed to 1 */
};

/*! \brief Splits f on coordinate i into its two (n-1)-ary cofactors */
inline cofactors cofactor_split( const truth_table& f, uint32_t i )
{
  if ( i < 1 || i > f.arity() || f.arity() < 1 )
  {
    throw std::invalid_argument( "cofactor_split: variable index out of range" );
  }
  const uint32_t n = f.arity();
  cofactors co{truth_table( n - 1 ), truth_table( n - 1 )};
  for ( uint64_t sub = 0; sub < co.negative.num_bits(); ++sub )
  {
    point p = tuple_of( sub, n - 1 );
    p.coords.insert( p.coords.begin() + ( i - 1 ), 0 );
    co.negative.set_bit( sub, f.get_bit( index_of( p ) ) );
    p[i - 1] = 1;
    co.positive.set_bit( sub, f.get_bit( index_of( p ) ) );
  }
  return co;
}

/*! \brief Structural facts about a gap-2 function of full essential
    arity n >= 4, split on its last variable */
struct gap2_structure_report
{
  uint32_t split_var;           /*!< the variable split on (always n) */
  bool cofactors_full_ess;      /*!< both cofactors have essential arity n-1 */
  bool cofactors_gap2;          /*!< both cofactors have gap 2 */
  bool complement_pair;         /*!< positive cofactor = complement of negative */
  bool cofactor_minors_shallow; /*!< n = 4 only: every cofactor minor has ess < 2 */

  bool pass() const
  {
    return cofactors_full_ess && cofactors_gap2 && complement_pair && cofactor_minors_shallow;
  }
};

/*! \brief Verifies the cofactor structure of a member of the m >= 4
    class: both cofactors keep full essential arity, both have gap 2,
    they are complements, and for n = 4 every cofactor minor has fewer
    than 2 essential variables.  Diagnostic harness, not the classifier. */
inline gap2_structure_report check_gap2_structure( const truth_table& f )
{
  const uint32_t n = f.arity();
  if ( n < 4 || ess( f ) != n )
  {
    throw std::invalid_argument( "check_gap2_structure: requires full essential arity n >= 4" );
  }
  if ( gap( f ).gap != 2 )
  {
    throw std::invalid_argument( "check_gap2_structure: requires gap 2" );
  }

  const cofactors co = cofactor_split( f, n );
  gap2_structure_report report{};
  report.split_var = n;
  report.cofactors_full_ess = ess( co.negative ) == n - 1 && ess( co.positive ) == n - 1;
  report.cofactors_gap2 = gap( co.negative ).gap == 2 && gap( co.positive ).gap == 2;
  report.complement_pair = co.positive == complement_output( co.negative );
  report.cofactor_minors_shallow = true;
  if ( n == 4 )
  {
    for ( const auto& [spec, minor] : minors( co.negative ) )
    {
      ( void )spec;
      if ( ess( minor ) >= 2 )
      {
        report.cofactor_minors_shallow = false;
      }
    }
    for ( const auto& [spec, minor] : minors( co.positive ) )
    {
      ( void )spec;
      if ( ess( minor ) >= 2 )
      {
        report.cofactor_minors_shallow = false;
      }
    }
  }
  return report;
}

} // namespace aritygap
