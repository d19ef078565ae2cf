#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "goalval/truth_table.hpp"

namespace goalval {

enum class FormKind : std::uint8_t { Dnf, Cnf };

// A conjunction (DNF term) or disjunction (CNF clause) of literals, stored as
// bitmasks over variables.
struct LiteralSet {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;

  bool operator==(const LiteralSet& o) const { return pos == o.pos && neg == o.neg; }
};

struct NormalForm {
  FormKind kind = FormKind::Dnf;
  int n = 0;
  std::vector<LiteralSet> groups;  // terms (DNF) or clauses (CNF)

  bool operator==(const NormalForm& o) const {
    return kind == o.kind && n == o.n && groups == o.groups;
  }
};

bool eval_term(const LiteralSet& t, std::uint32_t x);    // conjunction
bool eval_clause(const LiteralSet& c, std::uint32_t x);  // disjunction
bool eval_normal_form(const NormalForm& nf, std::uint32_t x);
TruthTable to_truth_table(const NormalForm& nf);

// Groups separated by '|', literals x3 / ~x3 joined by '&'.  The kind flag is
// carried out of band; an empty string denotes zero groups.
std::string to_text(const NormalForm& nf);
NormalForm parse_normal_form(const std::string& text, FormKind kind, int n);

// Prime implicants of f as partial-assignment codes (maximal 1-certificates),
// ascending code order.
std::vector<PaCode> prime_implicants(const TruthTable& f);

struct DsCs {
  int ds = 0;
  int cs = 0;
  NormalForm dnf;
  NormalForm cnf;
};

// Exact minimum DNF term count and CNF clause count.  ds is found by exact
// minimum cover of the on-set by prime implicants (lexicographically least
// minimum cover); cs is ds of the complement with literals complemented.
// Conventions for constants: ds(0)=0, ds(1)=1 (empty term), cs(1)=0,
// cs(0)=1 (empty clause).
DsCs exact_ds_cs(const TruthTable& f, int max_n = 6);

}  // namespace goalval
