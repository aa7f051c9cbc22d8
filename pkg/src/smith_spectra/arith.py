"""Exact arithmetical-function machinery.

Everything here is computed in Python's unbounded integers (reduced to
`fractions.Fraction` where a ratio is needed), so the identity checks against
brute-force oracles are exact equalities, never tolerance comparisons.

Core identities used by the trace statistics of the gcd and lcm matrices on
{1..n}:

    sum_{j<=i} gcd(i,j)^2  =  (N^2 * phi)(i)                      (Cesaro)
    sum_{k<=t, gcd(k,t)=1} k^2  =  (t/6) sum_{d|t} d mu(d) (t/d + 1)(2 t/d + 1)
    sum_{j<=i} lcm(i,j)^2  =  i^2 (g * zeta)(i),   g = the coprime square sum

where ``*`` is Dirichlet convolution, N(k) = k, phi is Euler's totient and
mu the Moebius function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ArithTable:
    """Values of an arithmetical function on 1..limit, 1-indexed.

    ``values`` has ``limit + 1`` slots; slot 0 is unused and kept at 0 so
    that ``table[k]`` is the value at k.
    """

    limit: int
    values: tuple[int, ...]
    label: str

    def __post_init__(self):
        if self.limit < 1:
            raise ValueError("table limit must be >= 1")
        if len(self.values) != self.limit + 1:
            raise ValueError(
                f"table of limit {self.limit} needs {self.limit + 1} slots, "
                f"got {len(self.values)}"
            )

    def __getitem__(self, k: int) -> int:
        if not 1 <= k <= self.limit:
            raise IndexError(f"index {k} outside 1..{self.limit}")
        return self.values[k]

    def __len__(self) -> int:
        return self.limit

    def to_list(self) -> list[int]:
        """Values at 1..limit as a plain list."""
        return list(self.values[1:])


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"argument must be a positive integer, got {n}")


def _table(limit: int, slots: list[int], label: str) -> ArithTable:
    return ArithTable(limit, tuple(slots), label)


def sieve_totient(n: int) -> ArithTable:
    """Euler's totient phi on 1..n by a linear (Euler) sieve, O(n)."""
    _require_positive(n)
    phi = [0] * (n + 1)
    phi[1] = 1
    smallest = [0] * (n + 1)  # smallest prime factor, 0 = not yet seen
    primes: list[int] = []
    for i in range(2, n + 1):
        if smallest[i] == 0:
            smallest[i] = i
            phi[i] = i - 1
            primes.append(i)
        for p in primes:
            if p > smallest[i] or i * p > n:
                break
            smallest[i * p] = p
            phi[i * p] = phi[i] * (p - 1) if p != smallest[i] else phi[i] * p
    return _table(n, phi, "phi")


def sieve_mobius(n: int) -> ArithTable:
    """Moebius mu on 1..n by a linear sieve, O(n)."""
    _require_positive(n)
    mu = [0] * (n + 1)
    mu[1] = 1
    smallest = [0] * (n + 1)
    primes: list[int] = []
    for i in range(2, n + 1):
        if smallest[i] == 0:
            smallest[i] = i
            mu[i] = -1
            primes.append(i)
        for p in primes:
            if p > smallest[i] or i * p > n:
                break
            smallest[i * p] = p
            mu[i * p] = 0 if p == smallest[i] else -mu[i]
    return _table(n, mu, "mu")


def zeta_table(n: int) -> ArithTable:
    """The constant function zeta(k) = 1 on 1..n."""
    _require_positive(n)
    return _table(n, [0] + [1] * n, "zeta")


def power_table(n: int, k: int) -> ArithTable:
    """N_k(m) = m^k on 1..n, for integer k >= 0."""
    _require_positive(n)
    if k < 0:
        raise ValueError(f"power exponent must be >= 0, got {k}")
    return _table(n, [0] + [m**k for m in range(1, n + 1)], f"N^{k}")


def jordan_totient(n: int, k: int) -> ArithTable:
    """Jordan totient J_k = N^k * mu on 1..n (J_1 = phi, J_0 = unit at 1)."""
    _require_positive(n)
    if k < 0:
        raise ValueError(f"Jordan totient order must be >= 0, got {k}")
    mu = sieve_mobius(n)
    out = [0] * (n + 1)
    for d in range(1, n + 1):
        dk = d**k
        for q in range(1, n // d + 1):
            out[d * q] += dk * mu[q]
    return _table(n, out, f"jordan_{k}")


def dirichlet_convolve(f: ArithTable, g: ArithTable, label: str | None = None) -> ArithTable:
    """Dirichlet convolution (f * g)(m) = sum_{d|m} f(d) g(m/d).

    Both tables must share the same limit; divisor iteration gives
    O(n log n) exact integer work.
    """
    if f.limit != g.limit:
        raise ValueError(f"table limits differ: {f.limit} != {g.limit}")
    n = f.limit
    out = [0] * (n + 1)
    for d in range(1, n + 1):
        fd = f.values[d]
        if fd == 0:
            continue
        for q in range(1, n // d + 1):
            out[d * q] += fd * g.values[q]
    return _table(n, out, label or f"({f.label})*({g.label})")


def divisors(t: int) -> list[int]:
    """Sorted divisors of t by trial division up to sqrt(t)."""
    _require_positive(t)
    small, large = [], []
    d = 1
    while d * d <= t:
        if t % d == 0:
            small.append(d)
            if d * d != t:
                large.append(t // d)
        d += 1
    return small + large[::-1]


def gcd_square_row_sum(n: int) -> ArithTable:
    """Row sums sum_{j<=i} gcd(i,j)^2 for i = 1..n, via (N^2 * phi)(i)."""
    _require_positive(n)
    return dirichlet_convolve(power_table(n, 2), sieve_totient(n), label="N^2*phi")


def coprime_square_sum(t: int) -> int:
    """Sum of k^2 over 1 <= k <= t with gcd(k, t) = 1.

    Uses the Moebius closed form (t/6) sum_{d|t} d mu(d) (t/d + 1)(2 t/d + 1).
    The pre-division value is always divisible by 6; a failed division means
    the formula was transcribed wrong, so it is asserted rather than rounded.
    """
    _require_positive(t)
    mu = sieve_mobius(t)
    total = 0
    for d in divisors(t):
        q = t // d
        total += d * mu[d] * (q + 1) * (2 * q + 1)
    total *= t
    assert total % 6 == 0, f"coprime square sum of {t}: {total} not divisible by 6"
    return total // 6


def _coprime_square_sum_table(n: int) -> list[int]:
    """coprime_square_sum(t) for all t <= n in one O(n log n) pass."""
    mu = sieve_mobius(n)
    pre = [0] * (n + 1)
    for d in range(1, n + 1):
        md = mu.values[d]
        if md == 0:
            continue
        dm = d * md
        for q in range(1, n // d + 1):
            pre[d * q] += dm * (q + 1) * (2 * q + 1)
    out = [0] * (n + 1)
    for t in range(1, n + 1):
        total = t * pre[t]
        assert total % 6 == 0, f"coprime square sum of {t}: {total} not divisible by 6"
        out[t] = total // 6
    return out


def lcm_square_row_sum(n: int) -> ArithTable:
    """Row sums sum_{j<=i} lcm(i,j)^2 for i = 1..n.

    Computed through the identity i^2 (g * zeta)(i) with g the coprime
    square sum, exact integers throughout.
    """
    _require_positive(n)
    g = _coprime_square_sum_table(n)
    gz = [0] * (n + 1)
    for d in range(1, n + 1):
        gd = g[d]
        for m in range(d, n + 1, d):
            gz[m] += gd
    return _table(n, [0] + [i * i * gz[i] for i in range(1, n + 1)], "lcm_sq_rowsum")


def _centering_constant(n: int) -> Fraction:
    # (1/n) sum i^2 + ((n+1)/2)^2 collapses to (7n^2 + 12n + 5)/12
    return Fraction(7 * n * n + 12 * n + 5, 12)


def s_squared_gcd(n: int) -> Fraction:
    """Spectral variance s^2 = tr(A^2)/n - (tr A / n)^2 of the gcd matrix on {1..n}.

    Exact rational: (2/n) sum_{i<=n} (N^2 * phi)(i) - (7n^2 + 12n + 5)/12.
    """
    if n < 2:
        raise ValueError(f"s^2 needs n >= 2, got {n}")
    rows = gcd_square_row_sum(n)
    return Fraction(2 * sum(rows.values[1:]), n) - _centering_constant(n)


def s_squared_lcm(n: int) -> Fraction:
    """Spectral variance s^2 = tr(A^2)/n - (tr A / n)^2 of the lcm matrix on {1..n}.

    Exact rational: (2/n) sum_{i<=n} i^2 (g * zeta)(i) - (7n^2 + 12n + 5)/12.
    """
    if n < 2:
        raise ValueError(f"s^2 needs n >= 2, got {n}")
    rows = lcm_square_row_sum(n)
    return Fraction(2 * sum(rows.values[1:]), n) - _centering_constant(n)


def smith_determinant(n: int) -> int:
    """Determinant of the gcd matrix on {1..n}: the product phi(1) ... phi(n)."""
    _require_positive(n)
    phi = sieve_totient(n)
    det = 1
    for k in range(1, n + 1):
        det *= phi.values[k]
    return det
