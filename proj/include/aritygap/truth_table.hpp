/*!
  \file truth_table.hpp
  \brief Packed truth-table representation of Boolean functions

  An n-ary Boolean function f : {0,1}^n -> {0,1} is stored as the bit
  sequence f(tuple(0)), f(tuple(1)), ..., f(tuple(2^n - 1)), where the
  input tuple (a1, ..., an) is ordered by its integer index

      m = a1 * 2^(n-1) + a2 * 2^(n-2) + ... + an,

  i.e. the first variable is the most significant digit of m.  Bit m of
  the table lives in block m / 64 at position m % 64, so for n <= 6 the
  whole table is one machine word with value sum_m f(tuple(m)) * 2^m.
  Variable indices are 1-based throughout.
*/

#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace aritygap
{

/*! \brief An input tuple (a1, ..., an) with each coordinate in {0,1} */
struct point
{
  point() = default;
  point( std::initializer_list<uint8_t> cs ) : coords( cs ) {}
  explicit point( std::vector<uint8_t> cs ) : coords( std::move( cs ) ) {}

  uint32_t size() const { return static_cast<uint32_t>( coords.size() ); }
  uint8_t operator[]( uint32_t k ) const { return coords[k]; }
  uint8_t& operator[]( uint32_t k ) { return coords[k]; }

  bool operator==( const point& other ) const = default;

  std::vector<uint8_t> coords;
};

/*! \brief Integer index of a tuple: m = a1 * 2^(n-1) + ... + an */
inline uint64_t index_of( const point& p )
{
  uint64_t m = 0;
  for ( uint32_t k = 0; k < p.size(); ++k )
  {
    m = ( m << 1 ) | ( p[k] & 1 );
  }
  return m;
}

/*! \brief Inverse of index_of: the arity-n tuple whose index is m */
inline point tuple_of( uint64_t m, uint32_t arity )
{
  if ( arity < 64 && m >= ( uint64_t( 1 ) << arity ) )
  {
    throw std::invalid_argument( "tuple_of: index " + std::to_string( m ) + " out of range for arity " + std::to_string( arity ) );
  }
  std::vector<uint8_t> cs( arity );
  for ( uint32_t k = 0; k < arity; ++k )
  {
    cs[k] = static_cast<uint8_t>( ( m >> ( arity - 1 - k ) ) & 1 );
  }
  return point( std::move( cs ) );
}

namespace detail
{

/* positions m whose index bit `level` is 0; level 0 is the least
   significant index bit (the last variable) */
inline constexpr std::array<uint64_t, 6> level_off_masks = {
    0x5555555555555555ull,
    0x3333333333333333ull,
    0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull,
    0x0000ffff0000ffffull,
    0x00000000ffffffffull};

inline constexpr uint64_t table_mask( uint32_t arity )
{
  return arity >= 6 ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << ( uint64_t( 1 ) << arity ) ) - 1 );
}

/*! \brief True iff a single-word table (arity <= 6) depends on the
    variable whose index bit is `level` */
inline bool word_has_var( uint64_t t, uint32_t arity, uint32_t level )
{
  const uint64_t lo = level_off_masks[level] & table_mask( arity );
  return ( ( t >> ( uint32_t( 1 ) << level ) ) & lo ) != ( t & lo );
}

/*! \brief Single-word substitution: replace the variable at index bit
    `level_i` by the one at `level_j` (level_i != level_j) */
inline uint64_t word_identify( uint64_t t, uint32_t arity, uint32_t level_i, uint32_t level_j )
{
  const uint64_t mask = table_mask( arity );
  const uint64_t bi = ~level_off_masks[level_i];
  const uint64_t bj = ~level_off_masks[level_j];
  const uint64_t d0 = ~bi & bj & mask; /* bit_i = 0, bit_j = 1: read m + 2^level_i */
  const uint64_t d1 = bi & ~bj & mask; /* bit_i = 1, bit_j = 0: read m - 2^level_i */
  const uint32_t stride = uint32_t( 1 ) << level_i;
  return ( ( t & ~( d0 | d1 ) ) | ( ( t >> stride ) & d0 ) | ( ( t << stride ) & d1 ) ) & mask;
}

inline uint32_t word_support_size( uint64_t t, uint32_t arity )
{
  uint32_t count = 0;
  for ( uint32_t level = 0; level < arity; ++level )
  {
    count += word_has_var( t, arity, level ) ? 1 : 0;
  }
  return count;
}

struct ess_gap_result
{
  uint32_t ess;
  uint32_t gap;
};

/*! \brief Essential-variable count and arity gap of a single-word table.

  The gap maximum ranges over substitutions between pairs of essential
  variables; once a minor of essential size ess - 1 is seen the gap is 1
  and the scan stops early.  Functions with at most one essential
  variable have gap 0 by convention.
*/
inline ess_gap_result word_ess_gap( uint64_t t, uint32_t arity )
{
  uint32_t levels[6];
  uint32_t m = 0;
  for ( uint32_t level = 0; level < arity; ++level )
  {
    if ( word_has_var( t, arity, level ) )
    {
      levels[m++] = level;
    }
  }
  if ( m <= 1 )
  {
    return {m, 0};
  }
  uint32_t best = 0;
  for ( uint32_t a = 0; a < m; ++a )
  {
    for ( uint32_t b = 0; b < m; ++b )
    {
      if ( a == b )
      {
        continue;
      }
      const uint32_t e = word_support_size( word_identify( t, arity, levels[a], levels[b] ), arity );
      if ( e + 1 == m )
      {
        return {m, 1};
      }
      if ( e > best )
      {
        best = e;
      }
    }
  }
  return {m, m - best};
}

} // namespace detail

/*! \brief A subset of the variable indices {1, ..., n} */
class variable_set
{
public:
  variable_set() = default;

  static variable_set of( std::initializer_list<uint32_t> indices )
  {
    variable_set s;
    for ( auto i : indices )
    {
      s.insert( i );
    }
    return s;
  }

  /*! \brief The contiguous set {lo, lo+1, ..., hi} (empty if hi < lo) */
  static variable_set range( uint32_t lo, uint32_t hi )
  {
    variable_set s;
    for ( uint32_t i = lo; i <= hi; ++i )
    {
      s.insert( i );
    }
    return s;
  }

  void insert( uint32_t i )
  {
    check_index( i );
    mask_ |= uint64_t( 1 ) << ( i - 1 );
  }

  bool contains( uint32_t i ) const
  {
    return i >= 1 && i <= 64 && ( mask_ >> ( i - 1 ) ) & 1;
  }

  uint32_t size() const { return static_cast<uint32_t>( __builtin_popcountll( mask_ ) ); }
  bool empty() const { return mask_ == 0; }

  /*! \brief Member indices in ascending order */
  std::vector<uint32_t> indices() const
  {
    std::vector<uint32_t> v;
    v.reserve( size() );
    for ( uint32_t i = 1; i <= 64; ++i )
    {
      if ( contains( i ) )
      {
        v.push_back( i );
      }
    }
    return v;
  }

  uint64_t mask() const { return mask_; }

  bool operator==( const variable_set& other ) const = default;

private:
  static void check_index( uint32_t i )
  {
    if ( i < 1 || i > 64 )
    {
      throw std::invalid_argument( "variable_set: index " + std::to_string( i ) + " out of range" );
    }
  }

  uint64_t mask_ = 0;
};

/*! \brief A substitution request: replace variable `target` by variable
    `source` everywhere, written f[target <- source] */
struct minor_spec
{
  uint32_t target;
  uint32_t source;

  bool operator==( const minor_spec& other ) const = default;
};

class truth_table
{
public:
  /*! \brief The constant-0 function of the given arity */
  explicit truth_table( uint32_t arity = 0 )
      : arity_( arity ), bits_( block_count( arity ), 0 )
  {
    if ( arity > max_arity )
    {
      throw std::invalid_argument( "truth_table: arity " + std::to_string( arity ) + " exceeds limit " + std::to_string( max_arity ) );
    }
  }

  /*! \brief Builds an arity <= 6 table from its packed word */
  static truth_table from_word( uint32_t arity, uint64_t word )
  {
    if ( arity > 6 )
    {
      throw std::invalid_argument( "truth_table::from_word: arity exceeds 6" );
    }
    truth_table t( arity );
    t.bits_[0] = word & detail::table_mask( arity );
    return t;
  }

  /*! \brief Builds a table from output bits listed in index order */
  static truth_table from_values( uint32_t arity, std::initializer_list<int> values )
  {
    truth_table t( arity );
    if ( values.size() != t.num_bits() )
    {
      throw std::invalid_argument( "truth_table::from_values: expected " + std::to_string( t.num_bits() ) + " values" );
    }
    uint64_t m = 0;
    for ( auto v : values )
    {
      t.set_bit( m++, v != 0 );
    }
    return t;
  }

  uint32_t arity() const { return arity_; }
  uint64_t num_bits() const { return uint64_t( 1 ) << arity_; }

  bool get_bit( uint64_t m ) const
  {
    check_position( m );
    return ( bits_[m >> 6] >> ( m & 63 ) ) & 1;
  }

  void set_bit( uint64_t m, bool value )
  {
    check_position( m );
    const uint64_t bit = uint64_t( 1 ) << ( m & 63 );
    if ( value )
    {
      bits_[m >> 6] |= bit;
    }
    else
    {
      bits_[m >> 6] &= ~bit;
    }
  }

  /*! \brief The packed word of an arity <= 6 table */
  uint64_t word() const
  {
    if ( arity_ > 6 )
    {
      throw std::logic_error( "truth_table::word: table wider than one word" );
    }
    return bits_[0] & detail::table_mask( arity_ );
  }

  const std::vector<uint64_t>& blocks() const { return bits_; }

  bool operator==( const truth_table& other ) const = default;

  bool operator<( const truth_table& other ) const
  {
    if ( arity_ != other.arity_ )
    {
      return arity_ < other.arity_;
    }
    for ( size_t b = bits_.size(); b-- > 0; )
    {
      if ( bits_[b] != other.bits_[b] )
      {
        return bits_[b] < other.bits_[b];
      }
    }
    return false;
  }

  static constexpr uint32_t max_arity = 24;

private:
  static size_t block_count( uint32_t arity )
  {
    return arity <= 6 ? 1 : ( size_t( 1 ) << ( arity - 6 ) );
  }

  void check_position( uint64_t m ) const
  {
    if ( m >= num_bits() )
    {
      throw std::invalid_argument( "truth_table: bit index " + std::to_string( m ) + " out of range" );
    }
  }

  uint32_t arity_;
  std::vector<uint64_t> bits_;
};

} // namespace aritygap
