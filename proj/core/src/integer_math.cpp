#include "quadell/integer_math.hpp"

#include <algorithm>

#include "quadell/errors.hpp"

namespace quadell {

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Int> exact_sqrt(const Int& n) {
  if (!is_perfect_square(n)) return std::nullopt;
  Int root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  auto rn = exact_sqrt(num(r));
  auto rd = exact_sqrt(den(r));
  if (!rn || !rd) return std::nullopt;
  return make_rational(*rn, *rd);
}

namespace {

Int pollard_rho(const Int& n, unsigned long c0) {
  // Brent's cycle variant; n odd composite, not a prime power of small prime.
  Int y = 2, c = c0, m = 128, g = 1, r = 1, q = 1, x, ys;
  gmp_randstate_t state;
  gmp_randinit_default(state);
  gmp_randseed_ui(state, 0x51ab5eedUL + c0);
  mpz_urandomm(y.get_mpz_t(), state, n.get_mpz_t());
  gmp_randclear(state);
  auto f = [&](const Int& v) { return Int((v * v + c) % n); };
  do {
    x = y;
    for (Int i = 0; i < r; ++i) y = f(y);
    Int k = 0;
    while (k < r && g == 1) {
      ys = y;
      Int limit = std::min(m, Int(r - k));
      for (Int i = 0; i < limit; ++i) {
        y = f(y);
        q = q * abs(x - y) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  } while (g == 1);
  if (g == n) {
    // backtrack one step at a time
    do {
      ys = f(ys);
      Int d = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 32) != 0) {
    out[n] += 1;
    return;
  }
  // perfect powers fall out of rho eventually, but roots are cheaper
  for (unsigned long e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
    Int root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
      std::map<Int, unsigned> sub;
      factor_into(root, sub);
      for (auto& [p, k] : sub) out[p] += k * static_cast<unsigned>(e);
      return;
    }
  }
  Int d = n;
  for (unsigned long c = 1; d == n; ++c) d = pollard_rho(n, c);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<Int, unsigned> factorize(const Int& n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "factorize", "zero has no factorization");
  std::map<Int, unsigned> out;
  Int m = abs(n);
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out[Int(p)] += 1;
      m /= p;
    }
  }
  // wheel over 6k+-1 up to 10^6, which covers every factor the pipeline
  // produces from moderate inputs; rho handles stragglers exactly
  for (long p = 17; p <= 1000000 && m > 1; p += (p % 6 == 5) ? 2 : 4) {
    if (Int(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out[Int(p)] += 1;
      m /= p;
    }
  }
  if (m > 1) factor_into(m, out);
  return out;
}

unsigned valuation(const Int& n, const Int& p) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "valuation", "valuation of zero");
  unsigned v = 0;
  Int m = n;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

Int max_scaling_factor(const Int& n1, const Int& n2, const Int& n3) {
  if (n1 == 0 && n2 == 0 && n3 == 0)
    throw Error(ErrorKind::InvalidArgument, "max_scaling_factor", "all arguments zero");
  // any prime of the factor divides every nonzero argument, so only the
  // gcd needs factoring; the arguments themselves may be far too hard
  Int g = 0;
  for (const Int* n : {&n1, &n2, &n3})
    if (*n != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n->get_mpz_t());
  Int phi = 1;
  if (g <= 1) return phi;
  for (auto& [p, unused] : factorize(g)) {
    unsigned e1 = (n1 == 0) ? ~0u : valuation(n1, p) / 2;
    unsigned e2 = (n2 == 0) ? ~0u : valuation(n2, p) / 4;
    unsigned e3 = (n3 == 0) ? ~0u : valuation(n3, p) / 6;
    unsigned e = std::min({e1, e2, e3});
    for (unsigned i = 0; i < e; ++i) phi *= p;
  }
  return phi;
}

std::optional<std::array<Int, 3>> monic_cubic_integer_roots(const Int& a2, const Int& a4,
                                                            const Int& a6) {
  auto f = [&](const Int& x) -> Int { return ((x + a2) * x + a4) * x + a6; };

  auto quadratic_roots = [](const Int& b, const Int& c) -> std::optional<std::array<Int, 2>> {
    // x^2 + b x + c
    Int disc = b * b - 4 * c;
    auto s = exact_sqrt(disc);
    if (!s) return std::nullopt;
    Int r1 = (-b + *s), r2 = (-b - *s);
    if (!mpz_divisible_ui_p(r1.get_mpz_t(), 2)) return std::nullopt;
    return std::array<Int, 2>{r1 / 2, r2 / 2};
  };

  auto finish = [&](const Int& r) -> std::optional<std::array<Int, 3>> {
    // deflate by (x - r): x^2 + (a2 + r) x + (a4 + r(a2 + r))
    Int b = a2 + r, c = a4 + r * b;
    auto q = quadratic_roots(b, c);
    if (!q) return std::nullopt;
    std::array<Int, 3> roots = {r, (*q)[0], (*q)[1]};
    std::sort(roots.begin(), roots.end());
    return roots;
  };

  if (a6 == 0) return finish(Int(0));

  /* One integer root by exact bisection on the monotone pieces of f; the
   * divisor search of the rational root theorem is exact too, but would
   * need the full factorization of a6, which arbitrary inputs make
   * arbitrarily hard. */
  auto bisect = [&](Int lo, Int hi) -> std::optional<Int> {
    if (lo > hi) return std::nullopt;
    Int flo = f(lo), fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo < 0) == (fhi < 0)) return std::nullopt;
    bool increasing = flo < 0;
    while (hi - lo > 1) {
      Int mid = lo + (hi - lo) / 2;
      Int fm = f(mid);
      if (fm == 0) return mid;
      if ((fm < 0) == increasing)
        lo = mid;
      else
        hi = mid;
    }
    return std::nullopt;
  };

  Int bound = 1 + std::max({Int(abs(a2)), Int(abs(a4)), Int(abs(a6))});  // Cauchy bound
  Int d = a2 * a2 - 3 * a4;                               // from f' = 3x^2 + 2 a2 x + a4
  std::optional<Int> root;
  if (d <= 0) {
    root = bisect(-bound, bound);
  } else {
    // critical points (-a2 -+ sqrt(d)) / 3: integer predicates against the
    // irrational bounds keep everything exact
    Int s;
    mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
    auto below_c1 = [&](const Int& n) {  // n <= (-a2 - sqrt(d)) / 3
      Int t = -a2 - 3 * n;
      return t >= 0 && t * t >= d;
    };
    auto above_c2 = [&](const Int& n) {  // n >= (-a2 + sqrt(d)) / 3
      Int t = 3 * n + a2;
      return t >= 0 && t * t >= d;
    };
    Int floor_c1;
    mpz_fdiv_q_ui(floor_c1.get_mpz_t(), Int(-a2 - s).get_mpz_t(), 3);
    while (!below_c1(floor_c1)) --floor_c1;
    while (below_c1(floor_c1 + 1)) ++floor_c1;
    Int ceil_c2;
    mpz_cdiv_q_ui(ceil_c2.get_mpz_t(), Int(-a2 + s).get_mpz_t(), 3);
    while (!above_c2(ceil_c2)) ++ceil_c2;
    while (above_c2(ceil_c2 - 1)) --ceil_c2;

    for (auto [lo, hi] : {std::pair{Int(-bound), floor_c1},
                          std::pair{Int(floor_c1 + 1), Int(ceil_c2 - 1)},
                          std::pair{ceil_c2, bound}}) {
      root = bisect(std::max(lo, Int(-bound)), std::min(hi, bound));
      if (root) break;
    }
  }
  if (!root) return std::nullopt;
  return finish(*root);
}

}  // namespace quadell
