#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace goalval {

// Trit values of a partial assignment.  The encoding 0 -> 0, 1 -> 1, * -> 2
// makes the base-3 code of an assignment usable as a direct index into
// utility tables of size 3^n.
inline constexpr std::uint8_t kTritZero = 0;
inline constexpr std::uint8_t kTritOne = 1;
inline constexpr std::uint8_t kTritStar = 2;

using PaCode = std::uint32_t;

std::uint64_t pow3(int n);

// A partial assignment in {0,1,*}^n.  Codes are least-significant-first:
// code = sum_i trit_i * 3^(i-1).  The empty (all-star) assignment therefore
// has code 3^n - 1.
class PartialAssignment {
 public:
  PartialAssignment() = default;
  PartialAssignment(int n, PaCode code);
  PartialAssignment(int n, const std::vector<std::uint8_t>& trits);

  static PartialAssignment all_star(int n);
  // Parses a string over {0,1,*}; position i (0-based) is variable x_{i+1}.
  static PartialAssignment parse(const std::string& text);

  int n() const { return n_; }
  PaCode code() const { return code_; }
  std::uint8_t trit(int i) const { return trits_[i]; }
  const std::vector<std::uint8_t>& trits() const { return trits_; }

  int weight() const;      // number of non-star positions
  int star_count() const;  // n - weight
  bool is_full() const { return star_count() == 0; }

  PartialAssignment with(int i, std::uint8_t value) const;

  std::string to_string() const;

  bool operator==(const PartialAssignment& o) const {
    return n_ == o.n_ && code_ == o.code_;
  }

 private:
  int n_ = 0;
  PaCode code_ = 0;
  std::vector<std::uint8_t> trits_;
};

PaCode pa_code_of(const std::vector<std::uint8_t>& trits);
std::vector<std::uint8_t> pa_trits_of(int n, PaCode code);

// a extends b (a >= b): a agrees with b on every non-star position of b.
bool extends(const PartialAssignment& a, const PartialAssignment& b);

// All one-step extensions (one star replaced by 0 or 1), ascending code order.
std::vector<PartialAssignment> extensions_one_step(const PartialAssignment& b);

// Closed-form counts for the extension graph on {0,1,*}^n.
std::uint64_t vertex_count(int n);                  // 3^n
std::uint64_t edge_count(int n);                    // 2n * 3^(n-1)
std::uint64_t small_diagram_count(int n);           // 2n(n-1) * 3^(n-2), n >= 2

// A 4-cycle in the extension graph: alpha has stars at i and j; the corners
// are alpha, alpha[x_i <- li], alpha[x_j <- lj], and both together.
struct SmallDiagram {
  PaCode alpha;
  int i, j;  // i < j
  std::uint8_t li, lj;

  struct Corners {
    PaCode alpha, beta, alpha_prime, beta_prime;
  };
};

SmallDiagram::Corners diagram_corners(int n, const SmallDiagram& d);

// Enumeration order is canonical: alpha code ascending, then the star pair
// (i, j) ascending, then (li, lj) in order 00, 01, 10, 11.  Diagram ids used
// in constraint names are ordinals in this sequence.
void for_each_small_diagram(int n, const std::function<void(const SmallDiagram&)>& fn);

// Edges in canonical order: parent code ascending, then revealed variable i
// ascending, then the assigned bit l in {0,1}.
void for_each_edge(int n, const std::function<void(PaCode parent, PaCode child, int i, int l)>& fn);

}  // namespace goalval
