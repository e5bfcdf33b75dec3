#pragma once

// Rendering of table reports and table sets as text, JSON, or CSV.
//
// The three formats carry identical numeric content.  JSON uses a fixed
// key order so output is byte-deterministic; absent existence witnesses
// render as null.  CSV emits one line per (d, n-list) row under a fixed
// header, with the n list joined by ';'.

#include "structure.hpp"

#include <json.hpp>

#include <map>
#include <sstream>

namespace redei {

enum class Format { text, json, csv };

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw std::domain_error("unknown format '" + s + "' (expected text, json, or csv)");
}

inline std::string chi_string(int chi) {
  validate_chi(chi);
  return chi == 1 ? "+1" : "-1";
}

inline std::string join_values(const std::vector<u64>& values, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << sep;
    os << values[i];
  }
  return os.str();
}

inline std::string format_factorization(const Factorization& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (i) os << " * ";
    os << f.factors[i].first;
    if (f.factors[i].second > 1) os << "^" << f.factors[i].second;
  }
  return os.str();
}

// "{1: 42, 3: 28}" - shared by the verify and cycles commands.
inline std::string format_cycle_structure(const std::map<u64, u64>& cs) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [len, cnt] : cs) {
    if (!first) os << ", ";
    first = false;
    os << len << ": " << cnt;
  }
  os << "}";
  return os.str();
}

using ojson = nlohmann::ordered_json;

inline ojson report_json(const TableReport& rep, const std::string& field_modulus) {
  ojson doc;
  doc["q"] = rep.q;
  doc["chi"] = rep.chi;
  doc["j"] = rep.j;
  doc["exists"] = rep.exists;
  doc["total_M"] = rep.total_M;
  doc["field_modulus"] = field_modulus;
  doc["witness_prime"] = rep.witness_prime ? ojson(*rep.witness_prime) : ojson(nullptr);
  doc["square_divides"] = rep.square_divides ? ojson(*rep.square_divides) : ojson(nullptr);
  doc["rows"] = ojson::array();
  for (const ConstructionRow& row : rep.rows) {
    ojson r;
    r["d"] = row.d;
    r["Md"] = row.Md;
    r["n"] = row.n_values;
    r["fixed_points"] = row.fixed_points;
    r["j_cycles"] = row.j_cycles;
    doc["rows"].push_back(std::move(r));
  }
  return doc;
}

inline void report_text_header(std::ostream& os, u64 q, int chi, const std::string& field_modulus) {
  const u64 m = q_minus_chi(q, chi);
  os << "q = " << q << ", chi = " << chi_string(chi) << ", q - chi = " << m << " = "
     << format_factorization(factorize(m)) << "\n";
  os << "field modulus: " << field_modulus << "\n";
}

inline void report_text_section(std::ostream& os, const TableReport& rep) {
  os << "[j = " << rep.j << "]";
  if (rep.j != 2) {
    os << "  prime = 1 (mod " << rep.j << ") divides q - chi: ";
    if (rep.witness_prime)
      os << "yes (" << *rep.witness_prime << ")";
    else
      os << "no";
    if (rep.square_divides)
      os << "  " << rep.j << "^2 divides q - chi: " << (*rep.square_divides ? "yes" : "no");
  }
  os << "  M = " << rep.total_M << "\n";
  if (rep.rows.empty()) {
    os << "  (none exist)\n";
    return;
  }
  for (const ConstructionRow& row : rep.rows) {
    os << "  d = " << row.d << "  M_d = " << row.Md << "  n = {"
       << join_values(row.n_values, ", ") << "}  fixed points = " << row.fixed_points << "  "
       << rep.j << "-cycles = " << row.j_cycles << "\n";
  }
}

inline std::string csv_header() { return "q,chi,j,d,Md,n,fixed_points,j_cycles"; }

inline void report_csv_rows(std::ostream& os, const TableReport& rep) {
  for (const ConstructionRow& row : rep.rows)
    os << rep.q << ',' << rep.chi << ',' << rep.j << ',' << row.d << ',' << row.Md << ','
       << join_values(row.n_values, ";") << ',' << row.fixed_points << ',' << row.j_cycles
       << "\n";
}

inline std::string render_report(const TableReport& rep, const std::string& field_modulus,
                                 Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::text:
      report_text_header(os, rep.q, rep.chi, field_modulus);
      os << "\n";
      report_text_section(os, rep);
      break;
    case Format::json:
      os << report_json(rep, field_modulus).dump(2) << "\n";
      break;
    case Format::csv:
      os << csv_header() << "\n";
      report_csv_rows(os, rep);
      break;
  }
  return os.str();
}

inline std::string render_table_set(const TableSet& set, const std::string& field_modulus,
                                    Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::text:
      report_text_header(os, set.q, set.chi, field_modulus);
      for (const TableReport& rep : set.sections) {
        os << "\n";
        report_text_section(os, rep);
      }
      os << "\nno prime j >= " << set.no_prime_from
         << " yields a permutation with only 1- and j-cycles\n";
      break;
    case Format::json: {
      ojson doc;
      doc["q"] = set.q;
      doc["chi"] = set.chi;
      doc["field_modulus"] = field_modulus;
      doc["sections"] = ojson::array();
      for (const TableReport& rep : set.sections)
        doc["sections"].push_back(report_json(rep, field_modulus));
      doc["no_prime_from"] = set.no_prime_from;
      os << doc.dump(2) << "\n";
      break;
    }
    case Format::csv:
      os << csv_header() << "\n";
      for (const TableReport& rep : set.sections) report_csv_rows(os, rep);
      break;
  }
  return os.str();
}

}  // namespace redei
