#pragma once

#include "skein/closures.hpp"
#include "skein/expr.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace skein {

// One class of 2-string tangle shadows with at most four crossings, keyed
// by its bracket pair. Values with a known misprint in the source tables
// store the corrected pair; the misprinted variant is kept for reporting.
struct CatalogEntry {
  int index = 0;                      // 1..35
  std::string id;                     // "A1".."A35"
  BracketPair pair;
  std::vector<std::string> members;   // expressions listed for the class
  std::optional<int> skeleton_of;     // prime entry index, knotted classes only
  std::optional<KnotId> knot;         // connected-sum factor, knotted classes only
  std::optional<int> table_d, table_n, table_r;  // coefficient table numbers
  std::optional<BracketPair> printed_pair;       // as misprinted, when it differs
  std::string note;                   // human-readable correction notes

  bool prime() const { return !skeleton_of.has_value(); }
};

// One published coefficient table: rows n = 0, 1, ... of the closure of
// the n-fold repetition of the owning entry. Several entries can share a
// repeated-denominator table; the extra owners are listed in shared_with.
struct TableSpec {
  int number = 0;  // 1..81
  int entry = 0;   // owning entry index
  ClosureKind kind = ClosureKind::D;
  std::vector<int> shared_with;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::vector<TableSpec> tables;

  const CatalogEntry& entry(int index) const;
  const CatalogEntry* find(const std::string& id) const;
  const TableSpec* find_table(int number) const;
};

const Catalog& load_catalog();

// Coefficient rows n = 0..n_max of a table, each row padded to k_max + 1
// columns. Throws std::out_of_range when a row's degree exceeds k_max.
std::vector<std::vector<BigInt>> table(const TableSpec& t, std::size_t n_max, std::size_t k_max);
// Same, with k_max picked as the widest row's degree.
std::vector<std::vector<BigInt>> table(const TableSpec& t, std::size_t n_max);

enum class TableFormat { csv, markdown, json };
std::optional<TableFormat> table_format_from_name(const std::string& name);
std::string render_table(const TableSpec& t, std::size_t n_max, TableFormat format);

struct VerifyIssue {
  std::string where;   // "B5", "A12 member [2]*1/[2]", "T29 share", ...
  std::string detail;
  bool expected_misprint = false;  // one of the four known source typos
};

struct VerifyReport {
  int entries_checked = 0;
  int members_checked = 0;
  int tables_checked = 0;
  int oracle_checked = 0;
  std::vector<VerifyIssue> issues;
  // True when every issue is one of the four expected misprints and all
  // four were in fact detected.
  bool ok() const;
};

// Recompute the whole catalog: every member expression against its stored
// pair, shared-table groups against each other, prime entries against the
// brute-force state sum, skeleton data against the gcd split, and the four
// known misprints against their corrections.
VerifyReport verify_catalog();

// Group expressions by their bracket pair, preserving first-seen order.
struct BracketGroup {
  BracketPair pair;
  std::vector<std::string> members;
};
std::vector<BracketGroup> group_by_bracket(const std::vector<std::string>& exprs);

// Compare a table's value stream against a local OEIS b-file snapshot.
// Rows are flattened in reading order; when drop_first_column is set the
// k = 0 cell of each row is skipped (tables carry a structural zero there
// that the sequences do not). Values are compared from the top of the
// file for as many complete rows as it covers. Empty result means match;
// otherwise a description of the first divergence.
std::string check_against_bfile(const TableSpec& t, const std::string& bfile_path,
                                bool drop_first_column);

struct OeisCrossCheck {
  int table_number;
  std::string sequence;  // "A007318"
  bool drop_first_column;
};
const std::vector<OeisCrossCheck>& oeis_cross_checks();

}  // namespace skein
