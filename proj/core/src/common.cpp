#include "permlab/common.hpp"

#include <cstdlib>

namespace permlab {

int env_max_order_override() {
  const char* v = std::getenv("PERMLAB_MAX_ORDER");
  if (!v || !*v) return 0;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || n <= 0) return 0;
  return static_cast<int>(n);
}

bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> prime_divisors(long n) {
  std::vector<int> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

long p_part(long n, int p) {
  long r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

long pi_part(long n, const std::vector<int>& pi) {
  long r = 1;
  for (int p : pi) r *= p_part(n, p);
  return r;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

} // namespace permlab
