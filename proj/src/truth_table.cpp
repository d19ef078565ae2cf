#include "goalval/truth_table.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace goalval {

namespace {

void check_arity(int n) {
  if (n < 1 || n > kMaxArity) throw std::invalid_argument("arity out of range");
}

}  // namespace

TruthTable::TruthTable(int n) : n_(n) {
  check_arity(n);
  words_.assign((size() + 63) / 64, 0);
}

TruthTable::TruthTable(int n, std::uint64_t bits) : TruthTable(n) {
  if (n > 6) throw std::invalid_argument("uint64 constructor needs n <= 6");
  if (n < 6) bits &= (std::uint64_t{1} << size()) - 1;
  words_[0] = bits;
}

std::uint64_t TruthTable::as_uint64() const {
  if (n_ > 6) throw std::logic_error("table too large for uint64");
  return words_[0];
}

bool TruthTable::is_constant() const {
  bool first = bit(0);
  for (std::size_t i = 1; i < size(); ++i)
    if (bit(i) != first) return false;
  return true;
}

TruthTable TruthTable::complement() const {
  TruthTable g(n_);
  for (std::size_t w = 0; w < words_.size(); ++w) g.words_[w] = ~words_[w];
  // mask tail bits
  std::size_t used = size() & 63;
  if (used) g.words_.back() &= (std::uint64_t{1} << used) - 1;
  return g;
}

TruthTable TruthTable::permute(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size");
  TruthTable g(n_);
  for (std::size_t x = 0; x < size(); ++x) {
    std::size_t y = 0;  // old index read by new input x
    for (int i = 0; i < n_; ++i)
      if ((x >> i) & 1) y |= std::size_t{1} << perm[i];
    g.set_bit(x, bit(y));
  }
  return g;
}

TruthTable TruthTable::transform(std::uint32_t input_mask, bool output_flip) const {
  TruthTable g(n_);
  for (std::size_t x = 0; x < size(); ++x)
    g.set_bit(x, bit(x ^ input_mask) ^ output_flip);
  return g;
}

std::string TruthTable::to_hex() const {
  std::size_t digits = (size() + 3) / 4;
  std::string s(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned v = 0;
    for (unsigned b = 0; b < 4; ++b) {
      std::size_t idx = d * 4 + b;
      if (idx < size() && bit(idx)) v |= 1u << b;
    }
    s[digits - 1 - d] = "0123456789abcdef"[v];
  }
  return s;
}

TruthTable TruthTable::from_hex(int n, const std::string& hex) {
  check_arity(n);
  TruthTable f(n);
  std::size_t digits = (f.size() + 3) / 4;
  if (hex.size() != digits) throw std::invalid_argument("hex length != 2^n/4");
  for (std::size_t d = 0; d < digits; ++d) {
    char c = hex[digits - 1 - d];
    unsigned v;
    if (c >= '0' && c <= '9')
      v = c - '0';
    else if (c >= 'a' && c <= 'f')
      v = 10 + c - 'a';
    else if (c >= 'A' && c <= 'F')
      v = 10 + c - 'A';
    else
      throw std::invalid_argument("bad hex digit");
    for (unsigned b = 0; b < 4; ++b) {
      std::size_t idx = d * 4 + b;
      if (idx < f.size()) f.set_bit(idx, (v >> b) & 1);
    }
  }
  return f;
}

bool TruthTable::operator<(const TruthTable& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (std::size_t w = words_.size(); w-- > 0;) {
    if (words_[w] != o.words_[w]) return words_[w] < o.words_[w];
  }
  return false;
}

bool evaluate(const TruthTable& f, const std::vector<int>& x) {
  if (static_cast<int>(x.size()) != f.n()) throw std::invalid_argument("arity mismatch");
  std::size_t idx = 0;
  for (int i = 0; i < f.n(); ++i) {
    if (x[i] != 0 && x[i] != 1) throw std::invalid_argument("assignment bit not in {0,1}");
    idx |= static_cast<std::size_t>(x[i]) << i;
  }
  return f.bit(idx);
}

CertificateTable::CertificateTable(const TruthTable& f) : n_(f.n()) {
  const std::uint64_t total = pow3(n_);
  flags_.assign(total, CertKind::NotCert);

  // Codes are processed by descending weight (ascending star count): a code's
  // one-step extensions always have smaller codes only when the changed trit
  // goes 2 -> {0,1}, so grouping by star count gives a valid evaluation order.
  std::vector<std::vector<PaCode>> by_stars(n_ + 1);
  std::vector<std::uint8_t> trits(n_);
  for (PaCode code = 0; code < total; ++code) {
    PaCode c = code;
    int stars = 0;
    for (int i = 0; i < n_; ++i) {
      trits[i] = static_cast<std::uint8_t>(c % 3);
      c /= 3;
      stars += (trits[i] == kTritStar);
    }
    by_stars[stars].push_back(code);
  }

  // Full assignments: code over {0,1} trits equals a mixed-radix number; map
  // to the binary index.
  for (PaCode code : by_stars[0]) {
    PaCode c = code;
    std::size_t idx = 0;
    for (int i = 0; i < n_; ++i) {
      idx |= static_cast<std::size_t>(c % 3) << i;
      c /= 3;
    }
    flags_[code] = f.bit(idx) ? CertKind::OneCert : CertKind::ZeroCert;
  }

  for (int s = 1; s <= n_; ++s) {
    for (PaCode code : by_stars[s]) {
      // locate the lowest star
      PaCode c = code;
      std::uint64_t place = 1;
      int star_pos = -1;
      for (int i = 0; i < n_; ++i) {
        if (c % 3 == kTritStar) {
          star_pos = i;
          break;
        }
        c /= 3;
        place *= 3;
      }
      PaCode child0 = code - static_cast<PaCode>(2 * place);
      PaCode child1 = code - static_cast<PaCode>(1 * place);
      (void)star_pos;
      CertKind k0 = flags_[child0], k1 = flags_[child1];
      flags_[code] = (k0 == k1) ? k0 : CertKind::NotCert;
    }
  }
}

CertKind certificate_kind(const TruthTable& f, const PartialAssignment& b) {
  if (b.n() != f.n()) throw std::invalid_argument("arity mismatch");
  std::vector<int> star_positions;
  std::size_t base = 0;
  for (int i = 0; i < b.n(); ++i) {
    if (b.trit(i) == kTritStar)
      star_positions.push_back(i);
    else
      base |= static_cast<std::size_t>(b.trit(i)) << i;
  }
  bool first = true, value = false;
  for (std::size_t m = 0; m < (std::size_t{1} << star_positions.size()); ++m) {
    std::size_t idx = base;
    for (std::size_t j = 0; j < star_positions.size(); ++j)
      if ((m >> j) & 1) idx |= std::size_t{1} << star_positions[j];
    bool v = f.bit(idx);
    if (first) {
      value = v;
      first = false;
    } else if (v != value) {
      return CertKind::NotCert;
    }
  }
  return value ? CertKind::OneCert : CertKind::ZeroCert;
}

int min_certificate_size_within(const TruthTable& f, const CertificateTable& certs,
                                std::size_t x_index) {
  const int n = f.n();
  // Precompute 3^i place values once.
  int best = n + 1;
  for (std::uint32_t keep = 0; keep < (1u << n); ++keep) {
    int w = std::popcount(keep);
    if (w >= best) continue;
    PaCode code = 0;
    std::uint64_t place = 1;
    for (int i = 0; i < n; ++i, place *= 3) {
      std::uint8_t t = ((keep >> i) & 1) ? static_cast<std::uint8_t>((x_index >> i) & 1)
                                         : kTritStar;
      code += static_cast<PaCode>(t * place);
    }
    if (certs.is_cert(code)) best = w;
  }
  return best;
}

int min_certificate_size_within(const TruthTable& f, const std::vector<int>& x) {
  if (static_cast<int>(x.size()) != f.n()) throw std::invalid_argument("arity mismatch");
  std::size_t idx = 0;
  for (int i = 0; i < f.n(); ++i) idx |= static_cast<std::size_t>(x[i] & 1) << i;
  CertificateTable certs(f);
  return min_certificate_size_within(f, certs, idx);
}

Rat expected_certificate_size(const TruthTable& f) {
  CertificateTable certs(f);
  Rat sum = 0;
  for (std::size_t x = 0; x < f.size(); ++x)
    sum += min_certificate_size_within(f, certs, x);
  return sum / Rat(static_cast<long>(f.size()));
}

std::vector<PaCode> minimal_certificates(const CertificateTable& certs, CertKind kind) {
  const int n = certs.n();
  const PaCode total = static_cast<PaCode>(pow3(n));
  std::vector<PaCode> out;
  for (PaCode code = 0; code < total; ++code) {
    if (certs.kind(code) != kind) continue;
    // minimal iff starring any set position destroys the certificate
    bool minimal = true;
    PaCode c = code;
    std::uint64_t place = 1;
    for (int i = 0; i < n && minimal; ++i, place *= 3) {
      int t = static_cast<int>(c % 3);
      c /= 3;
      if (t == kTritStar) continue;
      PaCode widened = code + static_cast<PaCode>((2 - t) * place);
      if (certs.is_cert(widened)) minimal = false;
    }
    if (minimal) out.push_back(code);
  }
  return out;
}

TruthTable restrict(const TruthTable& f, const PartialAssignment& b) {
  if (b.n() != f.n()) throw std::invalid_argument("arity mismatch");
  std::vector<int> stars;
  std::size_t base = 0;
  for (int i = 0; i < b.n(); ++i) {
    if (b.trit(i) == kTritStar)
      stars.push_back(i);
    else
      base |= static_cast<std::size_t>(b.trit(i)) << i;
  }
  if (stars.empty()) throw std::invalid_argument("restriction needs at least one star");
  TruthTable g(static_cast<int>(stars.size()));
  for (std::size_t a = 0; a < g.size(); ++a) {
    std::size_t idx = base;
    for (std::size_t j = 0; j < stars.size(); ++j)
      if ((a >> j) & 1) idx |= std::size_t{1} << stars[j];
    g.set_bit(a, f.bit(idx));
  }
  return g;
}

std::uint32_t relevant_variables_mask(const TruthTable& f) {
  std::uint32_t mask = 0;
  for (int i = 0; i < f.n(); ++i) {
    for (std::size_t x = 0; x < f.size(); ++x) {
      if ((x >> i) & 1) continue;
      if (f.bit(x) != f.bit(x | (std::size_t{1} << i))) {
        mask |= 1u << i;
        break;
      }
    }
  }
  return mask;
}

int relevant_variable_count(const TruthTable& f) {
  return std::popcount(relevant_variables_mask(f));
}

std::pair<int, int> find_dependence_preserving_restriction(const TruthTable& f) {
  const int n = f.n();
  if (n < 2) throw std::invalid_argument("n >= 2 required");
  if (relevant_variable_count(f) != n)
    throw std::invalid_argument("function must depend on all variables");
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l <= 1; ++l) {
      auto b = PartialAssignment::all_star(n).with(i, static_cast<std::uint8_t>(l));
      TruthTable g = restrict(f, b);
      if (relevant_variable_count(g) == n - 1) return {i, l};
    }
  }
  throw std::logic_error("no dependence-preserving restriction found");
}

std::vector<std::uint32_t> gf2_polynomial(const TruthTable& f) {
  // Moebius / Reed-Muller transform over GF(2).
  std::vector<std::uint8_t> a(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) a[x] = f.bit(x);
  for (int i = 0; i < f.n(); ++i) {
    std::size_t bit = std::size_t{1} << i;
    for (std::size_t x = 0; x < f.size(); ++x)
      if (x & bit) a[x] ^= a[x ^ bit];
  }
  std::vector<std::uint32_t> monomials;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (a[x]) monomials.push_back(static_cast<std::uint32_t>(x));
  return monomials;
}

bool eval_gf2(const std::vector<std::uint32_t>& monomials, std::uint32_t x) {
  int acc = 0;
  for (auto m : monomials) acc ^= ((x & m) == m);
  return acc;
}

TruthTable c_canonical(const TruthTable& f) { return c_canonical_ex(f).first; }

std::pair<TruthTable, std::pair<std::uint32_t, bool>> c_canonical_ex(const TruthTable& f) {
  TruthTable best = f;
  std::uint32_t best_mask = 0;
  bool best_flip = false;
  bool have = false;
  for (int o = 0; o <= 1; ++o) {
    for (std::uint32_t m = 0; m < (1u << f.n()); ++m) {
      TruthTable t = f.transform(m, o != 0);
      if (!have || t < best) {
        best = t;
        best_mask = m;
        best_flip = (o != 0);
        have = true;
      }
    }
  }
  return {best, {best_mask, best_flip}};
}

std::uint64_t count_c_classes(int n, int max_n) {
  if (n < 1 || n > max_n) throw std::invalid_argument("class counting arity over cap");
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << n);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    TruthTable f(n, bits);
    if (c_canonical(f) == f) ++count;
  }
  return count;
}

std::uint64_t c_class_count_formula(int n) {
  // (2^(2^n) + (2^n - 1) * 2^(2^(n-1)+1)) / 2^(n+1)
  Int num = 1;
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 1ull << n);
  Int second = 1;
  mpz_mul_2exp(second.get_mpz_t(), second.get_mpz_t(), (1ull << (n - 1)) + 1);
  num += Int((1ll << n) - 1) * second;
  Int den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), n + 1);
  Int q = num / den;
  return q.get_ui();
}

TruthTable family_kofn(int k, int n) {
  check_arity(n);
  if (k < 1 || k > n) throw std::invalid_argument("k out of range");
  TruthTable f(n);
  for (std::size_t x = 0; x < f.size(); ++x)
    f.set_bit(x, std::popcount(x) >= k);
  return f;
}

TruthTable family_and(int n) { return family_kofn(n, n); }
TruthTable family_or(int n) { return family_kofn(1, n); }

TruthTable family_xor(int n) {
  check_arity(n);
  TruthTable f(n);
  for (std::size_t x = 0; x < f.size(); ++x) f.set_bit(x, std::popcount(x) & 1);
  return f;
}

TruthTable family_pairs(int n) {
  check_arity(n);
  if (n % 2) throw std::invalid_argument("pairs needs 2 | n");
  TruthTable f(n);
  for (std::size_t x = 0; x < f.size(); ++x) {
    bool v = false;
    for (int i = 0; i < n; i += 2) v = v || (((x >> i) & 1) && ((x >> (i + 1)) & 1));
    f.set_bit(x, v);
  }
  return f;
}

TruthTable family_triples(int n) {
  check_arity(n);
  if (n % 3) throw std::invalid_argument("triples needs 3 | n");
  TruthTable f(n);
  for (std::size_t x = 0; x < f.size(); ++x) {
    bool v = false;
    for (int i = 0; i < n; i += 3)
      v = v || (((x >> i) & 1) && ((x >> (i + 1)) & 1) && ((x >> (i + 2)) & 1));
    f.set_bit(x, v);
  }
  return f;
}

TruthTable family_less_than(int n) {
  check_arity(n);
  if (n % 2) throw std::invalid_argument("less-than needs 2 | n");
  const int h = n / 2;
  TruthTable f(n);
  for (std::size_t x = 0; x < f.size(); ++x) {
    unsigned a = 0, b = 0;
    for (int i = 0; i < h; ++i) {
      a = (a << 1) | ((x >> i) & 1);          // x_1 is the most significant bit of a
      b = (b << 1) | ((x >> (h + i)) & 1);
    }
    f.set_bit(x, a < b);
  }
  return f;
}

TruthTable family_unique_sat(const std::vector<int>& b) {
  const int n = static_cast<int>(b.size());
  check_arity(n);
  std::size_t target = 0;
  for (int i = 0; i < n; ++i) target |= static_cast<std::size_t>(b[i] & 1) << i;
  TruthTable f(n);
  f.set_bit(target, true);
  return f;
}

TruthTable family_agree_k(const std::vector<int>& b, int k) {
  const int n = static_cast<int>(b.size());
  check_arity(n);
  if (k < 0 || k > n) throw std::invalid_argument("k out of range");
  std::size_t target = 0;
  for (int i = 0; i < n; ++i) target |= static_cast<std::size_t>(b[i] & 1) << i;
  TruthTable f(n);
  for (std::size_t x = 0; x < f.size(); ++x)
    f.set_bit(x, n - std::popcount(x ^ target) >= k);
  return f;
}

TruthTable family(const std::string& name, int n, int k, const std::vector<int>& b) {
  if (name == "kofn") return family_kofn(k, n);
  if (name == "and") return family_and(n);
  if (name == "or") return family_or(n);
  if (name == "xor") return family_xor(n);
  if (name == "pairs") return family_pairs(n);
  if (name == "triples") return family_triples(n);
  if (name == "lt") return family_less_than(n);
  if (name == "usa") return family_unique_sat(b);
  if (name == "agreek") return family_agree_k(b, k);
  throw std::invalid_argument("unknown family: " + name);
}

}  // namespace goalval
