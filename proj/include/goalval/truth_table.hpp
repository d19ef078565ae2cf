#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "goalval/partial_assignment.hpp"
#include "goalval/rational.hpp"

namespace goalval {

inline constexpr int kMaxArity = 12;

// A Boolean function on n variables as a 2^n-bit vector.  Input x maps to
// index sum_i x_i * 2^(i-1), i.e. x_1 is the least significant bit.
class TruthTable {
 public:
  TruthTable() = default;
  explicit TruthTable(int n);
  TruthTable(int n, std::uint64_t bits);  // n <= 6

  int n() const { return n_; }
  std::size_t size() const { return std::size_t{1} << n_; }

  bool bit(std::size_t idx) const {
    return (words_[idx >> 6] >> (idx & 63)) & 1u;
  }
  void set_bit(std::size_t idx, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (idx & 63);
    if (v)
      words_[idx >> 6] |= mask;
    else
      words_[idx >> 6] &= ~mask;
  }

  std::uint64_t as_uint64() const;  // n <= 6

  bool is_constant() const;

  TruthTable complement() const;
  TruthTable permute(const std::vector<int>& perm) const;  // new var i reads old var perm[i]
  // table'(x) = f(x ^ input_mask) ^ output_flip
  TruthTable transform(std::uint32_t input_mask, bool output_flip) const;

  std::string to_hex() const;  // most significant hex digit = highest index
  static TruthTable from_hex(int n, const std::string& hex);

  bool operator==(const TruthTable& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator<(const TruthTable& o) const;  // numeric order of the bit vector

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// --- evaluation ------------------------------------------------------------

bool evaluate(const TruthTable& f, const std::vector<int>& x);
inline bool evaluate_index(const TruthTable& f, std::size_t idx) { return f.bit(idx); }

// --- certificates ----------------------------------------------------------

enum class CertKind : std::uint8_t { NotCert = 0, ZeroCert = 1, OneCert = 2 };

// Flags for all 3^n partial assignments, indexed by code.
class CertificateTable {
 public:
  explicit CertificateTable(const TruthTable& f);

  int n() const { return n_; }
  CertKind kind(PaCode code) const { return flags_[code]; }
  bool is_cert(PaCode code) const { return flags_[code] != CertKind::NotCert; }

 private:
  int n_;
  std::vector<CertKind> flags_;
};

// Direct scan of all extensions of b (the precomputed table is the fast path).
CertKind certificate_kind(const TruthTable& f, const PartialAssignment& b);

// Minimum weight of a sub-assignment of x that certifies f.
int min_certificate_size_within(const TruthTable& f, const CertificateTable& certs,
                                std::size_t x_index);
int min_certificate_size_within(const TruthTable& f, const std::vector<int>& x);

// Exact average of min_certificate_size_within over all 2^n inputs.
Rat expected_certificate_size(const TruthTable& f);

// Minimal k-certificates (no strict sub-assignment is a certificate),
// ascending code order.
std::vector<PaCode> minimal_certificates(const CertificateTable& certs, CertKind kind);

// --- restrictions and dependence --------------------------------------------

// Induced function f_b on the star variables of b, variable order preserved.
TruthTable restrict(const TruthTable& f, const PartialAssignment& b);

std::uint32_t relevant_variables_mask(const TruthTable& f);
int relevant_variable_count(const TruthTable& f);

// First (i, l), i ascending then l in {0,1}, whose restriction keeps the
// function dependent on the remaining n-1 variables.  Requires f to depend
// on all n variables (n >= 2); existence is then guaranteed.
std::pair<int, int> find_dependence_preserving_restriction(const TruthTable& f);

// --- ring-sum expansion ------------------------------------------------------

// GF(2) polynomial as a sorted list of monomial masks (bit i-1 = variable x_i).
std::vector<std::uint32_t> gf2_polynomial(const TruthTable& f);
bool eval_gf2(const std::vector<std::uint32_t>& monomials, std::uint32_t x);

// --- complementation equivalence ---------------------------------------------

// Lexicographically least table over all 2^(n+1) input/output complementations.
TruthTable c_canonical(const TruthTable& f);
// Canonical table plus one transform (input_mask, output_flip) reaching it;
// among transforms producing the canonical table the least (output_flip,
// input_mask) pair is reported.
std::pair<TruthTable, std::pair<std::uint32_t, bool>> c_canonical_ex(const TruthTable& f);

std::uint64_t count_c_classes(int n, int max_n = 4);         // by enumeration
std::uint64_t c_class_count_formula(int n);                  // closed formula

// --- named families ----------------------------------------------------------

TruthTable family_kofn(int k, int n);
TruthTable family_and(int n);
TruthTable family_or(int n);
TruthTable family_xor(int n);
TruthTable family_pairs(int n);    // x1 x2 | x3 x4 | ...  (2 | n)
TruthTable family_triples(int n);  // x1 x2 x3 | x4 x5 x6 | ...  (3 | n)
// 1 iff the number (x_1..x_{n/2}, x_1 most significant) is strictly less than
// the number (x_{n/2+1}..x_n, x_{n/2+1} most significant).  (2 | n)
TruthTable family_less_than(int n);
TruthTable family_unique_sat(const std::vector<int>& b);     // 1 only at b
TruthTable family_agree_k(const std::vector<int>& b, int k); // >= k bits agree with b

// Dispatcher for the CLI: name in {kofn, and, or, xor, pairs, triples, lt,
// usa, agreek}; params as needed.
TruthTable family(const std::string& name, int n, int k = -1,
                  const std::vector<int>& b = {});

}  // namespace goalval
