#include "hadalab/numth.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hadalab/error.hpp"

namespace hadalab::numth {

namespace {

__extension__ using u128 = unsigned __int128;

void require_unit(u64 a, u64 n) {
  if (n == 0 || gcd(a % n, n) != 1) {
    throw Error(ErrorKind::NotAUnit, std::to_string(a) + " is not a unit modulo " + std::to_string(n));
  }
}

}  // namespace

u64 gcd(u64 a, u64 b) noexcept { return std::gcd(a, b); }

u64 mul_mod(u64 a, u64 b, u64 n) noexcept {
  return static_cast<u64>((static_cast<u128>(a) * b) % n);
}

u64 pow_mod(u64 base, u64 exp, u64 n) noexcept {
  if (n == 1) return 0;
  u64 result = 1;
  base %= n;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return result;
}

u64 inverse_mod(u64 a, u64 n) {
  require_unit(a, n);
  if (n == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a % n);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(n);
  return static_cast<u64>(t);
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e != 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime_power(u64 n) noexcept {
  if (n < 2) return false;
  return factorize(n).size() == 1;
}

u64 totient(u64 n) {
  if (n == 0) return 0;
  u64 phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

u64 isqrt(u64 n) noexcept {
  u64 r = static_cast<u64>(__builtin_sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(u64 n) noexcept {
  const u64 r = isqrt(n);
  return r * r == n;
}

u64 UnitGroupInfo::order_of(u64 a) const {
  const auto it = std::lower_bound(units.begin(), units.end(), a % n);
  if (it == units.end() || *it != a % n) require_unit(a, n);
  return orders[static_cast<std::size_t>(it - units.begin())];
}

u64 UnitGroupInfo::exponent() const {
  u64 e = 1;
  for (u64 o : orders) e = std::lcm(e, o);
  return e;
}

UnitGroupInfo unit_group(u64 n) {
  if (n == 0) throw Error(ErrorKind::BadModulus, "modulus must be positive");
  UnitGroupInfo info;
  info.n = n;
  if (n == 1) {
    info.units = {0};
    info.orders = {1};
    info.phi = 1;
    return info;
  }
  for (u64 a = 1; a < n; ++a) {
    if (gcd(a, n) == 1) {
      info.units.push_back(a);
      info.orders.push_back(mult_order(a, n));
    }
  }
  info.phi = info.units.size();
  return info;
}

u64 mult_order(u64 a, u64 n) {
  require_unit(a, n);
  if (n == 1) return 1;
  a %= n;
  u64 t = 1;
  u64 x = a;
  while (x != 1) {
    x = mul_mod(x, a, n);
    ++t;
  }
  return t;
}

std::vector<u64> cyclic_subgroup(u64 a, u64 n) {
  require_unit(a, n);
  if (n == 1) return {0};
  std::vector<u64> out;
  u64 x = 1;
  do {
    out.push_back(x);
    x = mul_mod(x, a, n);
  } while (x != 1);
  std::sort(out.begin(), out.end());
  return out;
}

CosetPartition cyclotomic_cosets(u64 a, u64 n) {
  require_unit(a, n);
  CosetPartition part;
  part.n = n;
  part.a = a % n;
  constexpr auto unassigned = static_cast<std::uint32_t>(-1);
  part.coset_of.assign(n, unassigned);
  for (u64 s = 0; s < n; ++s) {
    if (part.coset_of[s] != unassigned) continue;
    const auto index = static_cast<std::uint32_t>(part.cosets.size());
    std::vector<u64> coset;
    u64 x = s;
    do {
      coset.push_back(x);
      part.coset_of[x] = index;
      x = mul_mod(x, a, n);
    } while (x != s);
    std::sort(coset.begin(), coset.end());
    part.reps.push_back(s);
    part.cosets.push_back(std::move(coset));
  }
  return part;
}

MuCount mu_count(u64 N) {
  if (N == 0 || N % 4 != 0) {
    throw Error(ErrorKind::BadModulus, std::to_string(N) + " is not divisible by 4");
  }
  MuCount mu;
  for (u64 x = 1; x < N; ++x) {
    if (mul_mod(x, x, N) == 1) ++mu.by_enumeration;
  }
  unsigned m = 0;
  unsigned d = 0;
  for (const auto& [p, e] : factorize(N)) {
    if (p == 2) {
      m = e;
    } else {
      ++d;
    }
  }
  mu.by_formula = m == 2 ? (u64{1} << (d + 1)) : (u64{1} << (d + 2));
  return mu;
}

std::vector<u64> solutions_xp(u64 N, u64 p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (N == 0) throw Error(ErrorKind::BadModulus, "modulus must be positive");
  if (N == 1) return {0};
  std::vector<u64> out;
  for (u64 x = 1; x < N; ++x) {
    if (gcd(x, N) == 1 && pow_mod(x, p, N) == 1) out.push_back(x);
  }
  return out;
}

TurynVerdict turyn_admissible(u64 N) {
  TurynVerdict v;
  v.N = N;
  v.known_order = N == 4;
  if (N % 4 == 0 && is_perfect_square(N / 4)) {
    v.is_4m2 = true;
    v.m = isqrt(N / 4);
    v.m_odd = v.m % 2 == 1;
    v.m_not_prime_power = !is_prime_power(v.m);
  }
  v.admissible = v.is_4m2 && v.m_odd && v.m_not_prime_power;
  return v;
}

}  // namespace hadalab::numth
