#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace permlab {

/// Thrown when a closure or lattice enumeration grows past its configured
/// cap. A truncated group would silently poison every downstream predicate,
/// so the overflow is always an error, never a partial result.
class CapExceeded : public std::runtime_error {
public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed group file / cycle text. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_ = 0;
};

struct Limits {
  int max_order = 5000;        // cap on |G| during closure
  long max_subgroups = 100000; // cap on lattice node count
};

/// PERMLAB_MAX_ORDER, when set to a positive integer, overrides the built-in
/// order cap. An explicit CLI flag still wins over the environment.
int env_max_order_override();

// small number-theory helpers used all over
bool is_prime(long n);
std::vector<int> prime_divisors(long n);
long p_part(long n, int p);
long pi_part(long n, const std::vector<int>& pi);

// FNV-1a, used for platform-stable seeding of documented sampling sweeps
std::uint64_t fnv1a(const std::string& s);

} // namespace permlab
