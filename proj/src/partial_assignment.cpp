#include "goalval/partial_assignment.hpp"

#include <algorithm>
#include <stdexcept>

namespace goalval {

std::uint64_t pow3(int n) {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

PartialAssignment::PartialAssignment(int n, PaCode code)
    : n_(n), code_(code), trits_(pa_trits_of(n, code)) {}

PartialAssignment::PartialAssignment(int n, const std::vector<std::uint8_t>& trits)
    : n_(n), trits_(trits) {
  if (static_cast<int>(trits.size()) != n) throw std::invalid_argument("trit count != n");
  code_ = pa_code_of(trits);
}

PartialAssignment PartialAssignment::all_star(int n) {
  return PartialAssignment(n, static_cast<PaCode>(pow3(n) - 1));
}

PartialAssignment PartialAssignment::parse(const std::string& text) {
  std::vector<std::uint8_t> trits;
  trits.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '0': trits.push_back(kTritZero); break;
      case '1': trits.push_back(kTritOne); break;
      case '*': trits.push_back(kTritStar); break;
      default: throw std::invalid_argument("bad character in partial assignment");
    }
  }
  if (trits.empty()) throw std::invalid_argument("empty partial assignment");
  return PartialAssignment(static_cast<int>(trits.size()), trits);
}

int PartialAssignment::weight() const {
  int w = 0;
  for (auto t : trits_) w += (t != kTritStar);
  return w;
}

int PartialAssignment::star_count() const { return n_ - weight(); }

PartialAssignment PartialAssignment::with(int i, std::uint8_t value) const {
  if (i < 0 || i >= n_) throw std::out_of_range("variable index");
  auto t = trits_;
  t[i] = value;
  return PartialAssignment(n_, t);
}

std::string PartialAssignment::to_string() const {
  std::string s;
  s.reserve(n_);
  for (auto t : trits_) s.push_back(t == kTritStar ? '*' : char('0' + t));
  return s;
}

PaCode pa_code_of(const std::vector<std::uint8_t>& trits) {
  PaCode code = 0;
  std::uint64_t place = 1;
  for (auto t : trits) {
    code += static_cast<PaCode>(t * place);
    place *= 3;
  }
  return code;
}

std::vector<std::uint8_t> pa_trits_of(int n, PaCode code) {
  std::vector<std::uint8_t> trits(n);
  for (int i = 0; i < n; ++i) {
    trits[i] = static_cast<std::uint8_t>(code % 3);
    code /= 3;
  }
  if (code != 0) throw std::invalid_argument("code out of range for arity");
  return trits;
}

bool extends(const PartialAssignment& a, const PartialAssignment& b) {
  if (a.n() != b.n()) throw std::invalid_argument("arity mismatch");
  for (int i = 0; i < a.n(); ++i) {
    if (b.trit(i) != kTritStar && a.trit(i) != b.trit(i)) return false;
  }
  return true;
}

std::vector<PartialAssignment> extensions_one_step(const PartialAssignment& b) {
  std::vector<PartialAssignment> out;
  for (int i = 0; i < b.n(); ++i) {
    if (b.trit(i) != kTritStar) continue;
    out.push_back(b.with(i, kTritZero));
    out.push_back(b.with(i, kTritOne));
  }
  std::sort(out.begin(), out.end(),
            [](const PartialAssignment& x, const PartialAssignment& y) { return x.code() < y.code(); });
  return out;
}

std::uint64_t vertex_count(int n) { return pow3(n); }

std::uint64_t edge_count(int n) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  return 2ull * n * pow3(n - 1);
}

std::uint64_t small_diagram_count(int n) {
  if (n < 2) throw std::invalid_argument("n >= 2 required");
  return 2ull * n * (n - 1) * pow3(n - 2);
}

SmallDiagram::Corners diagram_corners(int n, const SmallDiagram& d) {
  std::uint64_t pi = pow3(d.i), pj = pow3(d.j);
  (void)n;
  // alpha has trit 2 (star) at both i and j; setting to value v subtracts (2-v)*3^pos.
  PaCode beta = d.alpha - static_cast<PaCode>((2 - d.li) * pi);
  PaCode alpha_prime = d.alpha - static_cast<PaCode>((2 - d.lj) * pj);
  PaCode beta_prime = beta - static_cast<PaCode>((2 - d.lj) * pj);
  return {d.alpha, beta, alpha_prime, beta_prime};
}

void for_each_small_diagram(int n, const std::function<void(const SmallDiagram&)>& fn) {
  if (n < 2) return;
  const PaCode total = static_cast<PaCode>(pow3(n));
  std::vector<std::uint8_t> trits(n);
  for (PaCode alpha = 0; alpha < total; ++alpha) {
    PaCode c = alpha;
    int stars = 0;
    for (int i = 0; i < n; ++i) {
      trits[i] = static_cast<std::uint8_t>(c % 3);
      c /= 3;
      stars += (trits[i] == kTritStar);
    }
    if (stars < 2) continue;
    for (int i = 0; i < n; ++i) {
      if (trits[i] != kTritStar) continue;
      for (int j = i + 1; j < n; ++j) {
        if (trits[j] != kTritStar) continue;
        for (std::uint8_t li = 0; li <= 1; ++li)
          for (std::uint8_t lj = 0; lj <= 1; ++lj) fn(SmallDiagram{alpha, i, j, li, lj});
      }
    }
  }
}

void for_each_edge(int n, const std::function<void(PaCode, PaCode, int, int)>& fn) {
  const PaCode total = static_cast<PaCode>(pow3(n));
  std::vector<std::uint8_t> trits(n);
  for (PaCode parent = 0; parent < total; ++parent) {
    PaCode c = parent;
    for (int i = 0; i < n; ++i) {
      trits[i] = static_cast<std::uint8_t>(c % 3);
      c /= 3;
    }
    std::uint64_t place = 1;
    for (int i = 0; i < n; ++i, place *= 3) {
      if (trits[i] != kTritStar) continue;
      for (int l = 0; l <= 1; ++l) {
        PaCode child = parent - static_cast<PaCode>((2 - l) * place);
        fn(parent, child, i, l);
      }
    }
  }
}

}  // namespace goalval
