#include "cubelab/bool_function.hpp"

#include <cstdlib>
#include <stdexcept>

#include "cubelab/bits.hpp"

namespace cubelab {

namespace {

int read_cap_from_env() {
  if (const char* v = std::getenv("CUBELAB_MAX_N")) {
    const int n = std::atoi(v);
    if (n >= 1 && n <= 30) return n;
  }
  return 24;
}

int& cap_ref() {
  static int cap = read_cap_from_env();
  return cap;
}

void check_dimension(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  if (n > max_dimension())
    throw std::invalid_argument("dimension " + std::to_string(n) + " exceeds exact-mode cap " +
                                std::to_string(max_dimension()) +
                                " (use the sampling path for larger n)");
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  throw std::invalid_argument(std::string("bad hex digit '") + c + "'");
}

}  // namespace

int max_dimension() { return cap_ref(); }
void set_max_dimension(int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("cap out of range");
  cap_ref() = n;
}

BooleanFunction::BooleanFunction(int n, bool fill) : n_(n) {
  check_dimension(n);
  const uint64_t nwords = (domain_size() + 63) >> 6;
  words_.assign(nwords, fill ? ~uint64_t{0} : 0);
  if (fill) mask_tail();
}

void BooleanFunction::mask_tail() {
  if (n_ < 6) words_[0] &= (uint64_t{1} << domain_size()) - 1;
}

uint64_t BooleanFunction::count_ones() const {
  uint64_t total = 0;
  for (uint64_t w : words_) total += static_cast<uint64_t>(popcount64(w));
  return total;
}

bool BooleanFunction::is_constant() const {
  const uint64_t ones = count_ones();
  return ones == 0 || ones == domain_size();
}

BooleanFunction BooleanFunction::restrict_coord(int i, int b) const {
  if (i < 1 || i > n_) throw std::out_of_range("coordinate out of range");
  if (n_ < 2) throw std::invalid_argument("cannot restrict a 1-dimensional function");
  const int p = i - 1;
  BooleanFunction out(n_ - 1);
  if (n_ - 1 < 6) {
    // Tiny tables: plain bit gather.
    for (uint64_t y = 0; y < out.domain_size(); ++y) {
      const uint64_t low = y & ((uint64_t{1} << p) - 1);
      const uint64_t x = ((y >> p) << (p + 1)) | (static_cast<uint64_t>(b) << p) | low;
      out.set(y, get(x));
    }
    return out;
  }
  const size_t out_words = out.words_.size();
  if (p >= 6) {
    const int q = p - 6;
    for (size_t jw = 0; jw < out_words; ++jw) {
      const size_t low = jw & ((size_t{1} << q) - 1);
      const size_t src = ((jw >> q) << (q + 1)) | (static_cast<size_t>(b) << q) | low;
      out.words_[jw] = words_[src];
    }
  } else {
    for (size_t jw = 0; jw < out_words; ++jw) {
      out.words_[jw] = compress_half(words_[2 * jw], p, b) |
                       (compress_half(words_[2 * jw + 1], p, b) << 32);
    }
  }
  return out;
}

BooleanFunction BooleanFunction::permute(const std::vector<int>& pi) const {
  if (static_cast<int>(pi.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  std::vector<char> seen(n_, 0);
  for (int v : pi) {
    if (v < 1 || v > n_ || seen[v - 1]) throw std::invalid_argument("not a permutation of [n]");
    seen[v - 1] = 1;
  }
  BooleanFunction out(n_);
  for (uint64_t y = 0; y < domain_size(); ++y) {
    uint64_t x = 0;
    for (int i = 0; i < n_; ++i)
      if ((y >> (pi[i] - 1)) & 1) x |= uint64_t{1} << i;
    if (get(x)) out.set(y, true);
  }
  return out;
}

BooleanFunction BooleanFunction::negate_inputs(uint32_t coord_mask) const {
  if (coord_mask & ~full_coord_mask()) throw std::invalid_argument("coordinate set out of range");
  BooleanFunction out(n_);
  const uint64_t high = coord_mask >> 6;
  const int low = static_cast<int>(coord_mask & 63);
  for (size_t w = 0; w < words_.size(); ++w) {
    uint64_t v = words_[w ^ high];
    for (int p = 0; p < 6 && p < n_; ++p)
      if ((low >> p) & 1) v = swap_halves(v, p);
    out.words_[w] = v;
  }
  out.mask_tail();
  return out;
}

BooleanFunction BooleanFunction::complement() const {
  BooleanFunction out(n_);
  for (size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
  out.mask_tail();
  return out;
}

std::string BooleanFunction::to_hex() const {
  std::string out = "n=" + std::to_string(n_) + ":";
  const int digits = n_ >= 2 ? static_cast<int>(domain_size() >> 2) : 1;
  std::string hex(digits, '0');
  for (int d = 0; d < digits; ++d) {
    // digit d holds table bits [4d, 4d+4); most significant digit first
    const int nibble = static_cast<int>((words_[static_cast<size_t>(d) >> 4] >> ((d & 15) * 4)) &
                                        (n_ == 1 ? 0x3 : 0xf));
    hex[digits - 1 - d] = "0123456789abcdef"[nibble];
  }
  return out + hex;
}

BooleanFunction BooleanFunction::from_hex(const std::string& text) {
  if (text.rfind("n=", 0) != 0) throw std::invalid_argument("inline-hex must start with \"n=<k>:\"");
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("inline-hex missing ':'");
  const int n = std::stoi(text.substr(2, colon - 2));
  check_dimension(n);
  const std::string hex = text.substr(colon + 1);
  const size_t digits = n >= 2 ? ((size_t{1} << n) >> 2) : 1;
  if (hex.size() != digits)
    throw std::invalid_argument("inline-hex for n=" + std::to_string(n) + " needs exactly " +
                                std::to_string(digits) + " hex digits, got " +
                                std::to_string(hex.size()));
  BooleanFunction out(n);
  for (size_t d = 0; d < digits; ++d) {
    const int v = hex_value(hex[digits - 1 - d]);
    if (n == 1 && v > 3) throw std::invalid_argument("n=1 table has only 2 bits");
    out.words_[d >> 4] |= static_cast<uint64_t>(v) << ((d & 15) * 4);
  }
  return out;
}

bool evaluate(const BooleanFunction& f, uint64_t x, int n_of_x) {
  if (n_of_x != f.n()) throw std::invalid_argument("point dimension does not match function");
  if (x >= f.domain_size()) throw std::out_of_range("point outside {0,1}^n");
  return f.get(x);
}

uint32_t coord_mask(const std::vector<int>& coords, int n) {
  uint32_t mask = 0;
  for (int c : coords) {
    if (c < 1 || c > n) throw std::invalid_argument("coordinate out of range: " + std::to_string(c));
    const uint32_t bit = 1u << (c - 1);
    if (mask & bit) throw std::invalid_argument("repeated coordinate: " + std::to_string(c));
    mask |= bit;
  }
  return mask;
}

}  // namespace cubelab
