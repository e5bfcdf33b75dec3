#pragma once

// Command-line front end.  run_cli parses argv-style arguments (without the
// program name) and writes to the supplied streams, so the whole interface
// is testable in-process.
//
// Subcommands:
//   table      one table section (--j given) or the full survey (--j omitted)
//   construct  the exponents for one admissible divisor d
//   verify     walk R_{n,a} over the projective line and compare with theory
//   field      print the field modulus in use for q
//   cycles     print the full cycle listing of R_{n,a}
//
// Exit codes: 0 success; 1 invalid input; 2 valid input but no such object
// (inadmissible d, or no permutation with only 1- and j-cycles exists).
//
// The environment variable REDEI_MODULUS_OVERRIDE (comma-separated ascending
// coefficients of a monic irreducible polynomial) pins the field modulus.

#include "redei.hpp"
#include "report.hpp"

#include <CLI11.hpp>

#include <cstdlib>

namespace redei {

namespace detail {

inline int parse_chi_option(const std::string& s) {
  if (s == "+1" || s == "1" || s == "plus") return 1;
  if (s == "-1" || s == "minus") return -1;
  throw std::domain_error("chi must be one of +1, -1, 1, plus, minus (got '" + s + "')");
}

// q must be an odd prime power; returns (p, k).
inline std::pair<u64, unsigned> prime_power_of(u64 q) {
  if (q < 3 || q % 2 == 0)
    throw std::domain_error("q must be an odd prime power >= 3, got " + std::to_string(q));
  const Factorization f = factorize(q);
  if (f.factors.size() != 1)
    throw std::domain_error("q = " + std::to_string(q) + " = " + format_factorization(f) +
                            " is not a prime power");
  return {f.factors[0].first, f.factors[0].second};
}

inline std::vector<u64> parse_u64_list(const std::string& text, const char* what) {
  std::vector<u64> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    std::size_t pos = 0;
    u64 v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      throw std::domain_error(std::string(what) + ": '" + item + "' is not a number");
    }
    if (pos != item.size())
      throw std::domain_error(std::string(what) + ": '" + item + "' is not a number");
    out.push_back(v);
  }
  if (out.empty()) throw std::domain_error(std::string(what) + ": empty coefficient list");
  return out;
}

// The field for q, honoring REDEI_MODULUS_OVERRIDE when set.
inline FieldSpec resolve_field(u64 q) {
  const auto [p, k] = prime_power_of(q);
  const char* env = std::getenv("REDEI_MODULUS_OVERRIDE");
  if (env != nullptr && *env != '\0') {
    std::vector<u64> coeffs = parse_u64_list(env, "REDEI_MODULUS_OVERRIDE");
    try {
      return FieldSpec::make(p, k, std::move(coeffs));
    } catch (const std::domain_error& e) {
      throw std::domain_error(std::string("REDEI_MODULUS_OVERRIDE: ") + e.what());
    }
  }
  return FieldSpec::make(p, k);
}

// First nonzero element (in enumeration order) with the requested character.
inline Element default_a(const FieldSpec& fs, int chi) {
  for (u64 i = 1; i < fs.q(); ++i) {
    Element a = fs.from_index(i);
    if (fs.quadratic_character(a) == chi) return a;
  }
  throw internal_error("default_a: no element of the requested character");
}

// A section report for a (q, chi, j) with j > q - chi: nothing exists, and
// the counting formulas degenerate to zero, but the report is still printable.
inline TableReport oversized_j_report(u64 q, int chi, u64 j, const Factorization& qminus) {
  TableReport rep;
  rep.q = q;
  rep.chi = chi;
  rep.j = j;
  rep.exists = exists_1j(qminus, chi, j);
  rep.total_M = count_M(qminus, chi, j);
  if (j != 2) {
    rep.witness_prime = std::nullopt;
    if (j != 4) rep.square_divides = qminus.exponent_of(j) >= 2;
  }
  return rep;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "construct, count, and verify permutations of the projective line over F_q\n"
      "induced by Redei functions whose cycles all have length 1 or j"};
  app.name("redei");
  app.require_subcommand(1);

  u64 q = 0, j = 0, d = 0, n = 0;
  std::string chi_text, format_text = "text", a_text;
  bool list_cycles = false;

  CLI::App* cmd_table = app.add_subcommand("table", "table of all 1-and-j-cycle permutations");
  cmd_table->add_option("--q", q, "odd prime power")->required();
  cmd_table->add_option("--chi", chi_text, "character class: +1, -1, 1, plus, minus")->required();
  CLI::Option* table_j =
      cmd_table->add_option("--j", j, "cycle length: 2, 4, or an odd prime (omit for the full survey)");
  cmd_table->add_option("--format", format_text, "text, json, or csv")->capture_default_str();

  CLI::App* cmd_construct =
      app.add_subcommand("construct", "exponents n for one admissible divisor d");
  cmd_construct->add_option("--q", q, "odd prime power")->required();
  cmd_construct->add_option("--chi", chi_text, "character class: +1, -1, 1, plus, minus")
      ->required();
  cmd_construct->add_option("--j", j, "cycle length: 2, 4, or an odd prime")->required();
  cmd_construct->add_option("--d", d, "divisor of q - chi with gcd(n-1, q-chi) = d")->required();
  cmd_construct->add_option("--format", format_text, "text, json, or csv")->capture_default_str();

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "walk R_{n,a} over P^1(F_q) and compare with theory");
  cmd_verify->add_option("--q", q, "odd prime power")->required();
  cmd_verify->add_option("--chi", chi_text, "character class of a")->required();
  cmd_verify->add_option("--n", n, "exponent of the Redei function")->required();
  cmd_verify->add_option("--a", a_text,
                         "element a (comma-separated coefficients, ascending degree); "
                         "defaults to the first element with the requested character");
  cmd_verify->add_flag("--list-cycles", list_cycles, "also print every cycle");

  CLI::App* cmd_field = app.add_subcommand("field", "print the field modulus used for q");
  cmd_field->add_option("--q", q, "odd prime power")->required();

  CLI::App* cmd_cycles = app.add_subcommand("cycles", "print the full cycle listing of R_{n,a}");
  cmd_cycles->add_option("--q", q, "odd prime power")->required();
  cmd_cycles->add_option("--n", n, "exponent of the Redei function")->required();
  cmd_cycles->add_option("--a", a_text, "element a (comma-separated coefficients)")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(cmd_table)) {
      detail::prime_power_of(q);
      const int chi = detail::parse_chi_option(chi_text);
      const Format format = parse_format(format_text);
      const std::string modulus = format_element(detail::resolve_field(q).modulus());
      const u64 m = q_minus_chi(q, chi);
      const Factorization qminus = factorize(m);
      if (table_j->count() > 0) {
        validate_cycle_length(j);
        const TableReport rep =
            j > m ? detail::oversized_j_report(q, chi, j, qminus) : build_table(q, chi, j);
        out << render_report(rep, modulus, format);
        return rep.exists ? 0 : 2;
      }
      out << render_table_set(build_table_set(q, chi), modulus, format);
      return 0;
    }

    if (app.got_subcommand(cmd_construct)) {
      detail::prime_power_of(q);
      const int chi = detail::parse_chi_option(chi_text);
      const Format format = parse_format(format_text);
      validate_cycle_length(j);
      const std::string modulus = format_element(detail::resolve_field(q).modulus());
      const u64 m = q_minus_chi(q, chi);
      const Factorization qminus = factorize(m);
      if (j > m) {
        err << "no such object: cycle length " << j << " exceeds q - chi = " << m << "\n";
        return 2;
      }
      AdmissibleQuery query(qminus, chi, j);
      std::optional<std::string> why;
      try {
        why = admissibility_violation(query, d);
      } catch (const std::domain_error& e) {
        err << "no such object: " << e.what() << "\n";
        return 2;
      }
      if (why) {
        err << "no such object: d = " << d << " is not admissible: " << *why << "\n";
        return 2;
      }
      TableReport rep;
      rep.q = q;
      rep.chi = chi;
      rep.j = j;
      rep.exists = true;
      rep.total_M = count_M(qminus, chi, j);
      if (j != 2) {
        for (const auto& [p, e] : qminus.factors) {
          (void)e;
          if (p % j == 1) {
            rep.witness_prime = p;
            break;
          }
        }
        if (j != 4) rep.square_divides = qminus.exponent_of(j) >= 2;
      }
      ConstructionRow row;
      row.d = d;
      row.Md = count_Md(query, d);
      row.n_values = construct_for(query, d);
      row.fixed_points = static_cast<u64>(static_cast<i64>(d) + chi + 1);
      row.j_cycles = (static_cast<u64>(static_cast<i64>(q) - static_cast<i64>(d) - chi)) / j;
      rep.rows.push_back(std::move(row));
      out << render_report(rep, modulus, format);
      return 0;
    }

    if (app.got_subcommand(cmd_verify)) {
      detail::prime_power_of(q);
      const int chi = detail::parse_chi_option(chi_text);
      const FieldSpec fs = detail::resolve_field(q);
      const Element a = a_text.empty() ? detail::default_a(fs, chi) : parse_element(a_text, fs);
      if (fs.is_zero(a)) {
        err << "error: a must be nonzero\n";
        return 1;
      }
      if (fs.quadratic_character(a) != chi) {
        err << "error: chi(a) = " << chi_string(fs.quadratic_character(a))
            << " does not match --chi " << chi_string(chi) << "\n";
        return 1;
      }
      const RedeiSpec rs = make_redei(fs, a, n);
      if (!is_permutation(rs)) {
        err << "error: gcd(n, q - chi) = " << std::gcd(rs.n, rs.modulus)
            << " is not 1: R_{n,a} is not a permutation\n";
        return 1;
      }
      const CycleStructure empirical = empirical_cycles(rs);
      const CycleStructure theoretical = theoretical_cycles(rs);
      const u64 fixed_formula = fixed_point_count(rs);
      const u64 fixed_walked = empirical.count(1) ? empirical.at(1) : 0;
      const bool structure_ok = empirical == theoretical;
      const bool fixed_ok = fixed_walked == fixed_formula;
      out << "q = " << q << ", chi = " << chi_string(chi) << ", n = " << rs.n
          << ", a = " << format_element(a) << "\n";
      out << "empirical:   " << format_cycle_structure(empirical) << "\n";
      out << "theoretical: " << format_cycle_structure(theoretical) << "\n";
      out << "structure match: " << (structure_ok ? "PASS" : "FAIL") << "\n";
      out << "fixed points: walked " << fixed_walked << ", formula " << fixed_formula << ": "
          << (fixed_ok ? "PASS" : "FAIL") << "\n";
      if (list_cycles) {
        const CycleListing listing = cycle_listing(rs);
        for (const std::vector<ProjPoint>& cycle : listing.cycles) {
          out << "(";
          for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i) out << " ";
            out << format_point(cycle[i]);
          }
          out << ")\n";
        }
      }
      return structure_ok && fixed_ok ? 0 : 1;
    }

    if (app.got_subcommand(cmd_field)) {
      const auto [p, k] = detail::prime_power_of(q);
      const FieldSpec fs = detail::resolve_field(q);
      out << "q = " << q << " = " << p << "^" << k << "\n";
      out << "modulus: " << format_element(fs.modulus()) << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_cycles)) {
      detail::prime_power_of(q);
      const FieldSpec fs = detail::resolve_field(q);
      const Element a = parse_element(a_text, fs);
      if (fs.is_zero(a)) {
        err << "error: a must be nonzero\n";
        return 1;
      }
      const int chi = fs.quadratic_character(a);
      const RedeiSpec rs = make_redei(fs, a, n);
      if (!is_permutation(rs)) {
        err << "error: gcd(n, q - chi) = " << std::gcd(rs.n, rs.modulus)
            << " is not 1: R_{n,a} is not a permutation\n";
        return 1;
      }
      const CycleListing listing = cycle_listing(rs);
      out << "q = " << q << ", a = " << format_element(a) << ", chi(a) = " << chi_string(chi)
          << ", n = " << rs.n << "\n";
      u64 total = 0;
      for (const std::vector<ProjPoint>& cycle : listing.cycles) {
        out << "(";
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          if (i) out << " ";
          out << format_point(cycle[i]);
        }
        out << ")\n";
        total += cycle.size();
      }
      out << "structure: " << format_cycle_structure(listing.structure) << "\n";
      out << "total points: " << total << "\n";
      return 0;
    }
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand given\n";
  return 1;
}

}  // namespace redei
