/*!
  \file aritygap_cli.cpp
  \brief Command-line interface: analyze, classify, convert, generate, census

  Exit codes: 0 on success (census: all checks PASS), 1 when a census
  verification check fails, 2 on usage errors.  Output is byte-stable
  across identical invocations; wall-clock timing is only printed behind
  --timing and progress goes to stderr.
*/

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <aritygap/aritygap.hpp>

using nlohmann::ordered_json;

namespace
{

constexpr uint32_t max_cli_arity = 16;

std::string set_text( const aritygap::variable_set& vars )
{
  std::string out = "{";
  bool first = true;
  for ( auto i : vars.indices() )
  {
    if ( !first )
    {
      out += ", ";
    }
    first = false;
    out += std::to_string( i );
  }
  return out + "}";
}

std::string form_text( const aritygap::classification& c )
{
  using namespace aritygap;
  if ( std::holds_alternative<not_gap2>( c.form ) )
  {
    return "NotGap2";
  }
  if ( const auto* m2 = std::get_if<gap2_m2>( &c.form ) )
  {
    std::ostringstream os;
    os << "Gap2_M2 {a0=" << m2->a0 << ", a1=" << m2->a1 << ", a2=" << m2->a2 << "}";
    return os.str();
  }
  if ( const auto* f3 = std::get_if<gap2_m3_form3>( &c.form ) )
  {
    std::ostringstream os;
    os << "Gap2_M3_Form3 {alpha=" << f3->alpha << ", beta=" << f3->beta << ", pi=("
       << f3->perm[0] << "," << f3->perm[1] << "," << f3->perm[2] << ")}";
    return os.str();
  }
  if ( const auto* f4 = std::get_if<gap2_m3_form4>( &c.form ) )
  {
    std::ostringstream os;
    os << "Gap2_M3_Form4 {alpha=" << f4->alpha << "}";
    return os.str();
  }
  const auto& par = std::get<gap2_parity>( c.form );
  return std::string( "Gap2_Parity {parity=" ) + ( par.parity == aritygap::parity_kind::odd ? "odd" : "even" ) + "}";
}

ordered_json form_json( const aritygap::classification& c )
{
  using namespace aritygap;
  ordered_json j;
  ordered_json params = ordered_json::object();
  if ( std::holds_alternative<not_gap2>( c.form ) )
  {
    j["tag"] = "NotGap2";
  }
  else if ( const auto* m2 = std::get_if<gap2_m2>( &c.form ) )
  {
    j["tag"] = "Gap2_M2";
    params["a0"] = m2->a0 ? 1 : 0;
    params["a1"] = m2->a1 ? 1 : 0;
    params["a2"] = m2->a2 ? 1 : 0;
  }
  else if ( const auto* f3 = std::get_if<gap2_m3_form3>( &c.form ) )
  {
    j["tag"] = "Gap2_M3_Form3";
    params["alpha"] = f3->alpha ? 1 : 0;
    params["beta"] = f3->beta ? 1 : 0;
    params["pi"] = {f3->perm[0], f3->perm[1], f3->perm[2]};
  }
  else if ( const auto* f4 = std::get_if<gap2_m3_form4>( &c.form ) )
  {
    j["tag"] = "Gap2_M3_Form4";
    params["alpha"] = f4->alpha ? 1 : 0;
  }
  else
  {
    j["tag"] = "Gap2_Parity";
    params["parity"] = std::get<gap2_parity>( c.form ).parity == parity_kind::odd ? "odd" : "even";
  }
  j["params"] = params;
  return j;
}

ordered_json gap_json( const aritygap::truth_table& f, const aritygap::gap_report& report )
{
  ordered_json j;
  j["arity"] = f.arity();
  j["ess"] = report.ess_count;
  j["essential_vars"] = report.essential.indices();
  j["gap"] = report.gap;
  if ( report.best_minor )
  {
    j["best_minor"] = {{"i", report.best_minor->target}, {"j", report.best_minor->source}, {"ess", report.best_minor_ess}};
  }
  else
  {
    j["best_minor"] = nullptr;
  }
  return j;
}

struct function_input
{
  std::string specifier;
  std::optional<uint32_t> arity;

  aritygap::truth_table resolve() const
  {
    std::string text = specifier;
    if ( text == "-" )
    {
      std::ostringstream buffer;
      buffer << std::cin.rdbuf();
      text = buffer.str();
      while ( !text.empty() && ( text.back() == '\n' || text.back() == '\r' || text.back() == ' ' ) )
      {
        text.pop_back();
      }
    }
    if ( arity && *arity > max_cli_arity )
    {
      throw aritygap::specifier_error( "arity above " + std::to_string( max_cli_arity ) + " is not supported on the command line" );
    }
    aritygap::truth_table f = aritygap::parse_specifier( text, arity );
    if ( f.arity() > max_cli_arity )
    {
      throw aritygap::specifier_error( "arity above " + std::to_string( max_cli_arity ) + " is not supported on the command line" );
    }
    return f;
  }
};

void add_function_options( CLI::App* cmd, function_input& input )
{
  cmd->add_option( "specifier", input.specifier, "function specifier (b:…, h:…, builtin, or normal-form text)" )->required();
  cmd->add_option( "-n,--n,--arity", input.arity, "arity for forms that need it" );
}

int run_analyze( const function_input& input, bool show_minors, bool as_json )
{
  const aritygap::truth_table f = input.resolve();
  const aritygap::gap_report report = aritygap::gap( f );

  if ( as_json )
  {
    std::cout << gap_json( f, report ).dump() << "\n";
    return 0;
  }

  std::cout << "arity: " << f.arity() << "\n";
  std::cout << "table: " << aritygap::to_binary_string( f ) << "\n";
  std::cout << "ess: " << report.ess_count << "\n";
  std::cout << "essential: " << set_text( report.essential ) << "\n";
  std::cout << "gap: " << report.gap << "\n";
  if ( report.best_minor )
  {
    std::cout << "best-minor: f[" << report.best_minor->target << "<-" << report.best_minor->source
              << "] ess=" << report.best_minor_ess << "\n";
  }
  else
  {
    std::cout << "best-minor: none\n";
  }
  if ( show_minors )
  {
    std::cout << "minors:\n";
    for ( const auto& [spec, minor] : aritygap::minors( f ) )
    {
      std::cout << "  f[" << spec.target << "<-" << spec.source << "] = "
                << aritygap::to_binary_string( minor ) << " ess=" << aritygap::ess( minor ) << "\n";
    }
  }
  return 0;
}

int run_classify( const function_input& input, bool as_json )
{
  const aritygap::truth_table f = input.resolve();
  const aritygap::classification c = aritygap::classify( f );

  if ( as_json )
  {
    ordered_json j = gap_json( f, aritygap::gap( f ) );
    j["classification"] = form_json( c );
    std::cout << j.dump() << "\n";
    return 0;
  }

  std::cout << "classification: " << form_text( c ) << "\n";
  std::cout << "essential: " << set_text( c.essential ) << "\n";
  return 0;
}

int run_convert( const function_input& input, const std::string& target )
{
  const aritygap::truth_table f = input.resolve();
  if ( target == "binary" )
  {
    std::cout << aritygap::to_binary_string( f ) << "\n";
  }
  else if ( target == "hex" )
  {
    std::cout << aritygap::to_hex_string( f ) << "\n";
  }
  else if ( target == "fcnf" )
  {
    std::cout << aritygap::format_fcnf( aritygap::to_fcnf( f ) ) << "\n";
  }
  else
  {
    throw CLI::ValidationError( "--to", "target must be binary, hex or fcnf" );
  }
  return 0;
}

int run_generate( uint32_t m, std::optional<uint32_t> ambient, const std::vector<uint32_t>& var_list )
{
  aritygap::variable_set vars;
  if ( var_list.empty() )
  {
    vars = aritygap::variable_set::range( 1, m );
  }
  else
  {
    for ( auto v : var_list )
    {
      vars.insert( v );
    }
  }
  uint32_t n = ambient.value_or( std::max<uint32_t>( m, vars.empty() ? 0 : vars.indices().back() ) );
  const auto tables = aritygap::generate_gap2( m, vars, n );
  for ( const auto& t : tables )
  {
    const auto c = aritygap::classify( t );
    std::cout << aritygap::to_binary_string( t ) << "  " << form_text( c );
    if ( n > m )
    {
      std::cout << " on " << set_text( c.essential );
    }
    std::cout << "\n";
  }
  return 0;
}

struct census_args
{
  uint32_t n = 0;
  bool deep = false;
  bool formula_only = false;
  bool timing = false;
  bool progress = false;
  std::optional<uint32_t> threads;
  std::string json_path;
};

ordered_json census_json( const aritygap::census_table& table, const aritygap::verification_report* report )
{
  ordered_json counts = ordered_json::array();
  if ( table.source() == aritygap::census_table::source_kind::enumerated )
  {
    for ( uint32_t m = 0; m <= table.arity(); ++m )
    {
      for ( uint32_t g = 0; g <= 2; ++g )
      {
        if ( table.count( m, g ) != 0 )
        {
          counts.push_back( {m, g, table.count( m, g )} );
        }
      }
    }
  }
  ordered_json inner;
  inner["counts"] = counts;
  if ( table.source() == aritygap::census_table::source_kind::enumerated )
  {
    inner["h_enumerated"] = table.h_enumerated;
  }
  else
  {
    inner["h_enumerated"] = nullptr;
  }
  inner["h_formula"] = table.h_formula_value;
  inner["pass"] = report ? report->pass : true;
  ordered_json j;
  j["arity"] = table.arity();
  j["census"] = inner;
  return j;
}

int run_census( const census_args& args )
{
  if ( args.formula_only )
  {
    const auto table = aritygap::census_formula_only( args.n );
    std::cout << "census: n=" << args.n << ", formula only\n";
    std::cout << "h formula: " << table.h_formula_value << "\n";
    if ( !args.json_path.empty() )
    {
      const ordered_json j = census_json( table, nullptr );
      if ( args.json_path == "-" )
      {
        std::cout << j.dump() << "\n";
      }
      else
      {
        std::ofstream out( args.json_path );
        out << j.dump() << "\n";
      }
    }
    return 0;
  }

  if ( args.n < 2 || args.n > 5 )
  {
    throw CLI::ValidationError( "--n", "enumeration supports n=2..4 (n=5 with --deep); larger n: use --formula-only" );
  }
  if ( args.n == 5 )
  {
    if ( !args.deep )
    {
      throw CLI::ValidationError( "--n", "n=5 scans 2^32 tables; opt in with --deep" );
    }
    if ( !args.threads )
    {
      throw CLI::ValidationError( "--deep", "the deep census requires an explicit --threads count" );
    }
    if ( !args.progress )
    {
      throw CLI::ValidationError( "--deep", "the deep census requires --progress" );
    }
  }
  if ( args.deep && args.n != 5 )
  {
    throw CLI::ValidationError( "--deep", "--deep only applies to n=5" );
  }

  aritygap::census_options options;
  options.threads = args.threads.value_or( 1 );
  options.deep = args.deep;
  if ( args.progress )
  {
    options.progress = []( uint64_t done, uint64_t total ) {
      std::cerr << "\rscanned " << done << " / " << total << " tables" << std::flush;
      if ( done == total )
      {
        std::cerr << "\n";
      }
    };
  }

  const auto table = aritygap::enumerate_census( args.n, options );
  const auto report = aritygap::verify_theorems( table );

  std::cout << "census: n=" << args.n << ", " << table.total() << " tables\n";
  for ( uint32_t m = 0; m <= args.n; ++m )
  {
    for ( uint32_t g = 0; g <= 2; ++g )
    {
      if ( table.count( m, g ) != 0 )
      {
        std::cout << "  ess=" << m << " gap=" << g << ": " << table.count( m, g ) << "\n";
      }
    }
  }
  std::cout << "h enumerated: " << table.h_enumerated << "\n";
  std::cout << "h formula: " << table.h_formula_value << "\n";
  for ( const auto& check : report.checks )
  {
    std::cout << "check: " << check.name << ": expected " << check.expected << ", got "
              << check.actual << ": " << ( check.pass ? "PASS" : "FAIL" ) << "\n";
  }
  std::cout << "result: " << ( report.pass ? "PASS" : "FAIL" ) << "\n";
  if ( args.timing )
  {
    std::cout << "elapsed: " << table.elapsed_seconds << "s\n";
  }

  if ( !args.json_path.empty() )
  {
    const ordered_json j = census_json( table, &report );
    if ( args.json_path == "-" )
    {
      std::cout << j.dump() << "\n";
    }
    else
    {
      std::ofstream out( args.json_path );
      out << j.dump() << "\n";
    }
  }
  return report.pass ? 0 : 1;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{"essential arity gap analysis of Boolean functions"};
  app.require_subcommand( 1 );

  function_input analyze_input;
  bool analyze_minors = false;
  bool analyze_json = false;
  auto* analyze = app.add_subcommand( "analyze", "essential variables, minors and gap" );
  add_function_options( analyze, analyze_input );
  analyze->add_flag( "--minors", analyze_minors, "list every identification minor" );
  analyze->add_flag( "--json", analyze_json, "machine-readable output" );

  function_input classify_input;
  bool classify_json = false;
  auto* classify = app.add_subcommand( "classify", "match against the gap-2 closed forms" );
  add_function_options( classify, classify_input );
  classify->add_flag( "--json", classify_json, "machine-readable output" );

  function_input convert_input;
  std::string convert_target;
  auto* convert = app.add_subcommand( "convert", "convert between binary, hex and normal-form text" );
  add_function_options( convert, convert_input );
  convert->add_option( "--to", convert_target, "target form: binary, hex or fcnf" )->required();

  uint32_t generate_m = 0;
  std::optional<uint32_t> generate_n;
  std::vector<uint32_t> generate_vars;
  auto* generate = app.add_subcommand( "generate", "emit the complete gap-2 list for an essential arity" );
  generate->add_option( "-m,--m", generate_m, "essential arity (>= 2)" )->required();
  generate->add_option( "-n,--n", generate_n, "ambient arity (default: m)" );
  generate->add_option( "--vars", generate_vars, "essential variable indices (default: 1..m)" )->delimiter( ',' );

  census_args census;
  auto* census_cmd = app.add_subcommand( "census", "exhaustive (ess, gap) counts with verification" );
  census_cmd->add_option( "-n,--n", census.n, "arity to enumerate" )->required();
  census_cmd->add_flag( "--deep", census.deep, "allow the 2^32-table n=5 scan" );
  census_cmd->add_flag( "--formula-only", census.formula_only, "skip enumeration, report the closed form" );
  census_cmd->add_flag( "--timing", census.timing, "print elapsed wall time" );
  census_cmd->add_flag( "--progress", census.progress, "report scan progress on stderr" );
  census_cmd->add_option( "--threads", census.threads, "worker count (deep census: required)" );
  census_cmd->add_option( "--json", census.json_path, "write a JSON report to this path ('-' for stdout)" );

  try
  {
    app.parse( argc, argv );

    if ( *analyze )
    {
      return run_analyze( analyze_input, analyze_minors, analyze_json );
    }
    if ( *classify )
    {
      return run_classify( classify_input, classify_json );
    }
    if ( *convert )
    {
      return run_convert( convert_input, convert_target );
    }
    if ( *generate )
    {
      return run_generate( generate_m, generate_n, generate_vars );
    }
    return run_census( census );
  }
  catch ( const CLI::ParseError& e )
  {
    if ( e.get_exit_code() == 0 )
    {
      return app.exit( e );
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  catch ( const aritygap::specifier_error& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  catch ( const std::invalid_argument& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
