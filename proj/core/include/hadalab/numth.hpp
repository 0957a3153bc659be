#pragma once

// Modular arithmetic over Z_n: units, multiplicative orders, cyclotomic
// cosets, square-root-of-unity counts and the Turyn admissibility filter.

#include <cstdint>
#include <utility>
#include <vector>

namespace hadalab::numth {

using u64 = std::uint64_t;

u64 gcd(u64 a, u64 b) noexcept;
u64 mul_mod(u64 a, u64 b, u64 n) noexcept;
u64 pow_mod(u64 base, u64 exp, u64 n) noexcept;
// Inverse of a modulo n; throws NotAUnit.
u64 inverse_mod(u64 a, u64 n);

// Trial-division factorization, ascending primes with multiplicities.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);
bool is_prime(u64 n) noexcept;
bool is_prime_power(u64 n) noexcept;
u64 totient(u64 n);
// Largest r with r*r <= n.
u64 isqrt(u64 n) noexcept;
bool is_perfect_square(u64 n) noexcept;

struct UnitGroupInfo {
  u64 n = 0;
  std::vector<u64> units;   // sorted
  u64 phi = 0;
  std::vector<u64> orders;  // orders[i] is the order of units[i]

  u64 order_of(u64 a) const;
  // Least common multiple of all element orders.
  u64 exponent() const;
};

UnitGroupInfo unit_group(u64 n);

// Least t >= 1 with a^t = 1 (mod n); throws NotAUnit.
u64 mult_order(u64 a, u64 n);

// Elements of the cyclic subgroup <a> of Z_n^*, sorted.
std::vector<u64> cyclic_subgroup(u64 a, u64 n);

// Partition of Z_n into orbits of x -> a x mod n.
struct CosetPartition {
  u64 n = 0;
  u64 a = 0;
  std::vector<std::vector<u64>> cosets;  // each sorted; cosets ordered by representative
  std::vector<u64> reps;                 // minimal element of each coset
  std::vector<std::uint32_t> coset_of;   // coset index of every residue

  std::size_t rank() const noexcept { return cosets.size(); }
  const std::vector<u64>& coset_containing(u64 s) const { return cosets[coset_of[s % n]]; }

  friend bool operator==(const CosetPartition&, const CosetPartition&) = default;
};

CosetPartition cyclotomic_cosets(u64 a, u64 n);

struct MuCount {
  u64 by_enumeration = 0;
  u64 by_formula = 0;
};

// Number of solutions of x^2 = 1 mod N, by enumeration and by the
// Chinese-remainder closed form; throws BadModulus unless 4 | N.
MuCount mu_count(u64 N);

// All units x of Z_N with x^p = 1, sorted; throws NotPrime.
std::vector<u64> solutions_xp(u64 N, u64 p);

struct TurynVerdict {
  u64 N = 0;
  bool is_4m2 = false;
  u64 m = 0;
  bool m_odd = false;
  bool m_not_prime_power = false;
  bool admissible = false;
  bool known_order = false;  // N == 4
};

// N = 4 m^2 with m odd and not a prime power.
TurynVerdict turyn_admissible(u64 N);

}  // namespace hadalab::numth
