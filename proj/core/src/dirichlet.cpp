#include "zetalab/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; (std::uint64_t)p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// Smallest primitive root mod p^k (p odd prime).
std::uint64_t primitive_root(std::uint64_t pk, std::uint64_t p) {
  const std::uint64_t phi = pk / p * (p - 1);
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t f = phi;
  for (std::uint64_t d = 2; d * d <= f; ++d) {
    if (f % d) continue;
    prime_factors.push_back(d);
    while (f % d == 0) f /= d;
  }
  if (f > 1) prime_factors.push_back(f);
  for (std::uint64_t g = 2;; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (std::uint64_t q : prime_factors) {
      if (pow_mod(g, phi / q, pk) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

// One cyclic component of (Z/q)^*: a generator residue and its order.
struct CyclicPart {
  std::uint64_t generator;
  std::uint32_t order;
};

// Decomposition of (Z/q)^* via CRT over the prime powers in q. For 2^e with
// e >= 3 the group is {+-1} x <5>.
struct UnitGroup {
  std::uint32_t q;
  std::vector<CyclicPart> parts;         // generators as residues mod q
  std::vector<std::uint32_t> prime_pows; // CRT moduli (for discrete logs)
};

std::uint64_t crt_lift(std::uint32_t q, std::uint32_t pk, std::uint64_t g) {
  // residue that is g mod pk and 1 mod q/pk
  const std::uint64_t rest = q / pk;
  for (std::uint64_t x = 1; x <= q; ++x) {
    if (x % pk == g % pk && (rest == 1 || x % rest == 1)) return x;
  }
  throw std::logic_error("crt_lift: no residue found");
}

UnitGroup unit_group(std::uint32_t q) {
  UnitGroup ug;
  ug.q = q;
  std::uint32_t n = q;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pps;  // (p, p^e)
  for (std::uint32_t p = 2; (std::uint64_t)p * p <= n; ++p) {
    if (n % p) continue;
    std::uint32_t pk = 1;
    while (n % p == 0) {
      n /= p;
      pk *= p;
    }
    pps.push_back({p, pk});
  }
  if (n > 1) pps.push_back({n, n});

  for (auto [p, pk] : pps) {
    ug.prime_pows.push_back(pk);
    if (p == 2) {
      if (pk == 2) continue;  // trivial group
      if (pk == 4) {
        ug.parts.push_back({crt_lift(q, pk, 3), 2});
      } else {
        ug.parts.push_back({crt_lift(q, pk, pk - 1), 2});  // -1
        ug.parts.push_back({crt_lift(q, pk, 5), pk / 4});
      }
    } else {
      const std::uint64_t g = primitive_root(pk, p);
      ug.parts.push_back({crt_lift(q, pk, g), pk / p * (p - 1)});
    }
  }
  return ug;
}

// Exponent vector of n in the cyclic decomposition (brute-force logs; q is
// desk scale).
std::vector<std::uint32_t> discrete_log(const UnitGroup& ug, std::uint64_t n) {
  std::vector<std::uint32_t> exps(ug.parts.size(), 0);
  // Solve by walking each component independently mod its prime power.
  std::size_t idx = 0;
  for (std::size_t c = 0; c < ug.prime_pows.size(); ++c) {
    const std::uint32_t pk = ug.prime_pows[c];
    const std::uint64_t target = n % pk;
    if (pk % 2 == 0 && pk >= 8) {
      // {+-1} x <5>
      const std::uint32_t half = pk / 4;
      bool found = false;
      for (std::uint32_t s = 0; s < 2 && !found; ++s) {
        std::uint64_t base = s ? pk - 1 : 1;
        std::uint64_t acc = base % pk;
        for (std::uint32_t e = 0; e < half; ++e) {
          if (acc == target) {
            exps[idx] = s;
            exps[idx + 1] = e;
            found = true;
            break;
          }
          acc = acc * 5 % pk;
        }
      }
      if (!found) throw std::logic_error("discrete_log: unit not found");
      idx += 2;
    } else if (pk == 2) {
      // trivial component, no generator
    } else {
      const CyclicPart& part = ug.parts[idx];
      std::uint64_t g = part.generator % pk;
      std::uint64_t acc = 1;
      bool found = false;
      for (std::uint32_t e = 0; e < part.order; ++e) {
        if (acc == target) {
          exps[idx] = e;
          found = true;
          break;
        }
        acc = acc * g % pk;
      }
      if (!found) throw std::logic_error("discrete_log: unit not found");
      idx += 1;
    }
  }
  return exps;
}

std::uint32_t conductor_of(const std::vector<Complex>& values, std::uint32_t q) {
  // Smallest divisor d of q with chi(n) = 1 whenever n = 1 mod d, gcd(n,q)=1.
  for (std::uint32_t d = 1; d <= q; ++d) {
    if (q % d) continue;
    bool ok = true;
    for (std::uint32_t n = 1; n < q && ok; ++n) {
      if (std::gcd(n, q) != 1) continue;
      if (n % d == 1 % d && std::abs(values[n] - Complex(1.0, 0.0)) > 1e-9)
        ok = false;
    }
    if (ok) return d;
  }
  return q;
}

}  // namespace

bool DirichletCharacter::is_trivial() const {
  for (std::uint32_t n = 0; n < modulus; ++n) {
    if (std::gcd<std::uint64_t>(n, modulus) != 1) continue;
    if (std::abs(values[n] - Complex(1.0, 0.0)) > 1e-12) return false;
  }
  return true;
}

bool DirichletCharacter::is_real() const {
  for (const Complex& v : values)
    if (std::abs(v.imag()) > 1e-12) return false;
  return true;
}

std::uint32_t character_count(std::uint32_t q) { return euler_phi(q); }

DirichletCharacter make_character(std::uint32_t q, std::uint32_t index) {
  if (q == 0) throw domain_violation("make_character: q must be >= 1");
  if (index >= character_count(q))
    throw domain_violation("make_character: index out of range");

  DirichletCharacter chi;
  chi.modulus = q;
  chi.values.assign(q == 0 ? 1 : q, Complex(0.0, 0.0));
  if (q == 1) {
    chi.values[0] = Complex(1.0, 0.0);
    chi.parity = 0;
    chi.conductor = 1;
    chi.primitive = true;
    return chi;
  }

  const UnitGroup ug = unit_group(q);
  // Mixed-radix digits of index select one root of unity per component.
  std::vector<std::uint32_t> digits(ug.parts.size(), 0);
  std::uint32_t rest = index;
  for (std::size_t i = 0; i < ug.parts.size(); ++i) {
    digits[i] = rest % ug.parts[i].order;
    rest /= ug.parts[i].order;
  }

  for (std::uint32_t n = 0; n < q; ++n) {
    if (std::gcd<std::uint64_t>(n, q) != 1) continue;
    const auto exps = discrete_log(ug, n);
    double angle = 0.0;
    for (std::size_t i = 0; i < ug.parts.size(); ++i) {
      angle += 2.0 * kPi * (double)digits[i] * (double)exps[i] /
               (double)ug.parts[i].order;
    }
    chi.values[n] = Complex(std::cos(angle), std::sin(angle));
  }
  // Snap exact values; every character value is a root of unity and the
  // real ones land on the axes.
  for (auto& v : chi.values) {
    if (std::abs(v.real()) < 1e-12) v.real(0.0);
    if (std::abs(v.imag()) < 1e-12) v.imag(0.0);
    if (std::abs(v.real() - 1.0) < 1e-12) v.real(1.0);
    if (std::abs(v.real() + 1.0) < 1e-12) v.real(-1.0);
    if (std::abs(v.imag() - 1.0) < 1e-12) v.imag(1.0);
    if (std::abs(v.imag() + 1.0) < 1e-12) v.imag(-1.0);
  }

  chi.parity = (std::abs(chi.values[q - 1].real() - 1.0) < 1e-9) ? 0 : 1;
  chi.conductor = conductor_of(chi.values, q);
  chi.primitive = (chi.conductor == q);
  return chi;
}

DirichletCharacter chi3() { return make_character(3, 1); }

DirichletCharacter chi4() { return make_character(4, 1); }

DirichletCharacter product_character(const DirichletCharacter& chi1,
                                     const DirichletCharacter& chi2) {
  const std::uint32_t q = std::lcm(chi1.modulus, chi2.modulus);
  std::vector<Complex> vals(q, Complex(0.0, 0.0));
  for (std::uint32_t n = 0; n < q; ++n) {
    if (std::gcd<std::uint64_t>(n, q) != 1) continue;
    vals[n] = chi1(n) * std::conj(chi2(n));
  }
  const std::uint32_t f = conductor_of(vals, q);
  // Re-extract the primitive character of conductor f matching these values.
  for (std::uint32_t idx = 0; idx < character_count(f); ++idx) {
    DirichletCharacter cand = make_character(f, idx);
    bool match = true;
    for (std::uint32_t n = 0; n < q && match; ++n) {
      if (std::gcd<std::uint64_t>(n, q) != 1) continue;
      if (std::abs(cand(n) - vals[n]) > 1e-9) match = false;
    }
    if (match) return cand;
  }
  throw std::logic_error("product_character: no inducing primitive character");
}

GaussData gauss_sum(const DirichletCharacter& chi) {
  if (!chi.primitive)
    throw domain_violation("gauss_sum: character must be primitive");
  const std::uint32_t q = chi.modulus;
  Complex tau(0.0, 0.0);
  for (std::uint32_t x = 0; x < q; ++x) {
    const double ang = 2.0 * kPi * (double)x / (double)q;
    tau += chi.values[x] * Complex(std::cos(ang), std::sin(ang));
  }
  GaussData g;
  g.tau = tau;
  const double rq = 1.0 / std::sqrt((double)q);
  g.epsilon = (chi.parity == 0) ? rq * tau : Complex(0.0, -1.0) * rq * tau;
  return g;
}

}  // namespace zetalab
