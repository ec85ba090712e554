#include "infoplane/nat.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace infoplane {

Nat isqrt(const Nat& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  if (n < 2) return n;
  // Start from 2^ceil(bits/2) >= sqrt(n); the iteration decreases
  // monotonically onto floor(sqrt(n)).
  const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Nat x = Nat(1) << static_cast<unsigned long>((bits + 1) / 2);
  for (;;) {
    Nat y = (x + n / x) / 2;
    if (y >= x) return x;
    x = std::move(y);
  }
}

Bits info(const Nat& n) {
  if (n < 0) throw std::invalid_argument("info: negative argument");
  if (n <= 1) return 0.0;
  return log2_nat(n);
}

double log2_nat(const Nat& n) {
  signed long exp = 0;
  const double d = mpz_get_d_2exp(&exp, n.get_mpz_t());  // d in [0.5, 1)
  return static_cast<double>(exp) + std::log2(d);
}

Nat parse_nat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a decimal natural number: '" + text + "'");
    }
  }
  return Nat(text, 10);
}

std::vector<Nat> parse_nat_list(const std::string& text) {
  std::vector<Nat> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(parse_nat(text.substr(start, comma - start)));
    start = comma + 1;
    if (comma == text.size()) break;
  }
  return out;
}

std::string to_string(const Nat& n) { return n.get_str(10); }

std::string format_bits(Bits b) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", b);
  return buf;
}

}  // namespace infoplane
