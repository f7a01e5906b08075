"""Symmetric-function combinatorics and the boson action on wedges.

The wedge space at ``q = 1`` has a basis of ordered wedges: strictly
decreasing integer sequences that eventually coincide with the vacuum tail
``s - k + 1`` of a fixed charge ``s``.  Such a sequence is the same thing
as a partition charged by ``s``, which is how the basis is keyed here.
Linear combinations carry exact ``Fraction`` coefficients.

The boson ``p_m`` acts on a wedge by replacing, one index at a time, the
k-th entry by its translate ``e*l*m`` steps down, the results being
antisymmetrized back to ordered wedges.  Only finitely many k survive:
deep in the vacuum tail the translate collides with another entry.  Out of
the bosons one assembles the complete operators ``h_m`` (weighted by the
centralizer orders ``z_pi``) and the Schur operators ``s_sigma`` (via
inverse Kostka numbers).

The polynomial half of this module expands monomial, complete, power-sum
and Schur bases in finitely many variables, enough to verify the classical
transition identities exactly at small degree.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Iterable, Mapping, Optional

from .core import Partition, as_partition, conjugate_partition, partitions_of

Coeff = Fraction


class WedgeVector:
    """Finite linear combination of ordered wedges of one charge.

    Terms map the partition underlying each ordered wedge to its
    coefficient; zero coefficients are dropped on construction.
    """

    __slots__ = ("charge", "terms")

    def __init__(self, charge: int, terms: Optional[Mapping[Partition, object]] = None):
        self.charge = charge
        clean: dict[Partition, Coeff] = {}
        for key, value in (terms or {}).items():
            coeff = Fraction(value)
            if coeff:
                clean[as_partition(key)] = coeff
        self.terms = clean

    @classmethod
    def basis(cls, lam: Iterable[int], charge: int) -> "WedgeVector":
        return cls(charge, {as_partition(lam): 1})

    @classmethod
    def vacuum(cls, charge: int) -> "WedgeVector":
        return cls(charge, {(): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, WedgeVector)
            and self.charge == other.charge
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.charge, frozenset(self.terms.items())))

    def __add__(self, other: "WedgeVector") -> "WedgeVector":
        if self.charge != other.charge:
            raise ValueError("cannot add wedges of different charges")
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + coeff
        return WedgeVector(self.charge, out)

    def __sub__(self, other: "WedgeVector") -> "WedgeVector":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "WedgeVector":
        scalar = Fraction(scalar)
        return WedgeVector(
            self.charge, {key: scalar * coeff for key, coeff in self.terms.items()}
        )

    def __repr__(self):
        body = " + ".join(f"{c}*u{list(k)}" for k, c in sorted(self.terms.items()))
        return f"WedgeVector(charge={self.charge}, {body or '0'})"

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())


def beta_sequence(lam: Partition, charge: int, length: int) -> list[int]:
    """First ``length`` entries ``lam_k + charge - k + 1`` of the bead sequence."""
    return [
        (lam[k - 1] if k <= len(lam) else 0) + charge - k + 1
        for k in range(1, length + 1)
    ]


def normalize_wedge(indices: Iterable[int], charge: int) -> tuple[int, Optional[Partition]]:
    """Antisymmetrize a finite prefix over the vacuum tail of ``charge``.

    Returns ``(sign, partition)`` for the ordered wedge equal to
    ``u_{i_1} ^ u_{i_2} ^ ...`` followed by the tail, or ``(0, None)`` when
    an index is repeated (including collisions with the implied tail).
    """
    prefix = list(indices)
    r = len(prefix)
    if len(set(prefix)) != r:
        return 0, None
    tail_top = charge - r  # the tail occupies every integer <= charge - r
    if any(v <= tail_top for v in prefix):
        return 0, None
    sign = 1
    # insertion sort, counting swaps; prefixes are short
    for i in range(1, r):
        j = i
        while j > 0 and prefix[j - 1] < prefix[j]:
            prefix[j - 1], prefix[j] = prefix[j], prefix[j - 1]
            sign = -sign
            j -= 1
    lam = []
    for k, value in enumerate(prefix, start=1):
        part = value - charge + k - 1
        if part:  # strictly decreasing values over the tail give parts >= 0
            lam.append(part)
    return sign, tuple(lam)


def p_action(m: int, v: WedgeVector, e: int, l: int) -> WedgeVector:
    """Boson ``p_m``: replace the k-th index by its shift ``e*l*m`` down, summed
    over k and antisymmetrized.  Charge is preserved.

    Terms with k beyond ``len(lam) + e*l*|m|`` vanish identically: there the
    shifted entry equals another tail entry.
    """
    if m == 0:
        raise ValueError("p_0 is not a generator")
    if e < 2 or l < 2:
        raise ValueError("parameters must satisfy e >= 2 and l >= 2")
    step = e * l * m
    out: dict[Partition, Coeff] = {}
    for lam, coeff in v.terms.items():
        depth = len(lam) + e * l * abs(m)
        beta = beta_sequence(lam, v.charge, depth)
        for k in range(depth):
            shifted = beta.copy()
            shifted[k] -= step
            sign, key = normalize_wedge(shifted, v.charge)
            if sign:
                out[key] = out.get(key, Fraction(0)) + sign * coeff
    return WedgeVector(v.charge, out)


def p_partition_action(pi: Iterable[int], v: WedgeVector, e: int, l: int) -> WedgeVector:
    """Composite boson ``p_pi = p_{pi_1} p_{pi_2} ...`` for a partition pi."""
    out = v
    for m in reversed(as_partition(pi)):
        out = p_action(m, out, e, l)
    return out


def z_value(pi: Iterable[int]) -> int:
    """Centralizer order of a permutation of cycle type ``pi``:
    the product of ``k^{m_k} m_k!`` over the part multiplicities."""
    pi = as_partition(pi)
    out = 1
    for k in set(pi):
        mult = pi.count(k)
        out *= k**mult * factorial(mult)
    return out


# ---------------------------------------------------------------------------
# Kostka numbers


def _dominates(sigma: Partition, pi: Partition) -> bool:
    """Dominance order on partitions of equal size."""
    total_s = total_p = 0
    for i in range(max(len(sigma), len(pi))):
        total_s += sigma[i] if i < len(sigma) else 0
        total_p += pi[i] if i < len(pi) else 0
        if total_s < total_p:
            return False
    return True


@lru_cache(maxsize=None)
def _kostka_cached(sigma: Partition, pi: Partition) -> int:
    if sum(sigma) != sum(pi):
        return 0
    if not sigma:
        return 1
    if not _dominates(sigma, pi):
        return 0
    if len(pi) == 1:
        return 1 if len(sigma) == 1 else 0
    # fill the largest entry of the content into a horizontal strip and recurse
    last = pi[-1]
    rest = pi[:-1]
    total = 0
    for smaller in _horizontal_strip_removals(sigma, last):
        total += _kostka_cached(smaller, rest)
    return total


def _horizontal_strip_removals(sigma: Partition, size: int):
    """Partitions obtained from ``sigma`` by removing a horizontal strip of
    ``size`` boxes (at most one box per column)."""
    rows = len(sigma)

    def rec(i: int, remaining: int, upper: int, acc: list[int]):
        if i == rows:
            if remaining == 0:
                yield as_partition(acc)
            return
        row = sigma[i]
        below = sigma[i + 1] if i + 1 < rows else 0
        # new row length must stay >= below and the removed boxes must not
        # overlap columns removed from the row above: new length >= ... and
        # previous new length >= old current row keeps the strip horizontal
        lo = max(below, row - remaining)
        hi = min(row, upper)
        for new in range(hi, lo - 1, -1):
            acc.append(new)
            yield from rec(i + 1, remaining - (row - new), sigma[i], acc)
            acc.pop()

    yield from rec(0, size, 10**9, [])


def kostka(sigma: Iterable[int], pi: Iterable[int]) -> int:
    """Number of semistandard tableaux of shape ``sigma`` and content ``pi``."""
    return _kostka_cached(as_partition(sigma), as_partition(pi))


@lru_cache(maxsize=None)
def _kostka_block(n: int) -> tuple[tuple[Partition, ...], tuple[tuple[int, ...], ...]]:
    """Partitions of ``n`` (reverse lex, refines dominance) and the Kostka
    matrix K[i][j] = K_{parts[i], parts[j]}, which is unitriangular."""
    parts = partitions_of(n)
    matrix = tuple(
        tuple(_kostka_cached(s, p) for p in parts) for s in parts
    )
    return parts, matrix


@lru_cache(maxsize=None)
def _inverse_kostka_block(n: int) -> tuple[tuple[Partition, ...], tuple[tuple[int, ...], ...]]:
    parts, k = _kostka_block(n)
    size = len(parts)
    inv = [[0] * size for _ in range(size)]
    # back substitution on an upper unitriangular integer matrix
    for j in range(size):
        inv[j][j] = 1
        for i in range(j - 1, -1, -1):
            inv[i][j] = -sum(k[i][t] * inv[t][j] for t in range(i + 1, j + 1))
    return parts, tuple(tuple(row) for row in inv)


def inverse_kostka(pi: Iterable[int], sigma: Iterable[int]) -> int:
    """Entry of the inverse of the Kostka matrix (an integer)."""
    pi, sigma = as_partition(pi), as_partition(sigma)
    if sum(pi) != sum(sigma):
        return 0
    parts, inv = _inverse_kostka_block(sum(pi))
    return inv[parts.index(pi)][parts.index(sigma)]


# ---------------------------------------------------------------------------
# operator tower on wedges


def h_operator(m: int, v: WedgeVector, e: int, l: int) -> WedgeVector:
    """Complete operator ``h_m = sum over |pi| = m of p_pi / z_pi``."""
    if m < 0:
        raise ValueError("h_m is defined for m >= 0")
    if m == 0:
        return v
    out = WedgeVector(v.charge)
    for pi in partitions_of(m):
        out = out + Fraction(1, z_value(pi)) * p_partition_action(pi, v, e, l)
    return out


def h_sigma(sigma: Iterable[int], v: WedgeVector, e: int, l: int) -> WedgeVector:
    """Product ``h_{sigma_1} h_{sigma_2} ...`` applied to ``v``."""
    out = v
    for m in reversed(as_partition(sigma)):
        out = h_operator(m, out, e, l)
    return out


def s_sigma(sigma: Iterable[int], v: WedgeVector, e: int, l: int) -> WedgeVector:
    """Schur operator ``s_sigma = sum over pi of K^{-1}_{pi, sigma} h_pi``.

    The assembled coefficients are integral on wedge basis vectors; this is
    asserted, rationals only appearing in intermediate terms.
    """
    sigma = as_partition(sigma)
    out = WedgeVector(v.charge)
    n = sum(sigma)
    for pi in partitions_of(n):
        coeff = inverse_kostka(pi, sigma)
        if coeff:
            out = out + coeff * h_sigma(pi, v, e, l)
    if not out.is_integral():
        raise ArithmeticError(f"s_{sigma} produced non-integral coefficients: {out}")
    return out


# ---------------------------------------------------------------------------
# polynomial oracle: symmetric functions in finitely many variables
#
# Polynomials are dicts mapping exponent tuples to integer coefficients.

Poly = dict[tuple[int, ...], int]


def poly_zero() -> Poly:
    return {}


def poly_add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for mono, c in q.items():
        new = out.get(mono, 0) + c
        if new:
            out[mono] = new
        else:
            out.pop(mono, None)
    return out


def poly_scale(c: int, p: Poly) -> Poly:
    return {mono: c * v for mono, v in p.items()} if c else {}


def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            mono = tuple(a + b for a, b in zip(m1, m2))
            new = out.get(mono, 0) + c1 * c2
            if new:
                out[mono] = new
            else:
                out.pop(mono, None)
    return out


def monomial_sym(sigma: Iterable[int], nvars: int) -> Poly:
    """Monomial symmetric function: sum of all distinct permutations of the
    exponent vector ``sigma`` padded with zeros."""
    sigma = as_partition(sigma)
    if len(sigma) > nvars:
        return {}
    padded = tuple(sigma) + (0,) * (nvars - len(sigma))
    return {mono: 1 for mono in set(itertools.permutations(padded))}


def power_sum(m: int, nvars: int) -> Poly:
    out: Poly = {}
    for i in range(nvars):
        mono = [0] * nvars
        mono[i] = m
        out[tuple(mono)] = 1
    return out


def complete_hom(m: int, nvars: int) -> Poly:
    """Complete homogeneous sum of all degree-``m`` monomials."""
    if m == 0:
        return {(0,) * nvars: 1}
    out: Poly = {}
    for combo in itertools.combinations_with_replacement(range(nvars), m):
        mono = [0] * nvars
        for i in combo:
            mono[i] += 1
        out[tuple(mono)] = out.get(tuple(mono), 0) + 1
    return out


def product_over_parts(factory, sigma: Iterable[int], nvars: int) -> Poly:
    out: Poly = {(0,) * nvars: 1}
    for part in as_partition(sigma):
        out = poly_mul(out, factory(part, nvars))
    return out


def schur_poly(sigma: Iterable[int], nvars: int) -> Poly:
    """Schur polynomial via its Kostka expansion in monomial functions."""
    sigma = as_partition(sigma)
    out: Poly = {}
    for pi in partitions_of(sum(sigma)):
        c = kostka(sigma, pi)
        if c:
            out = poly_add(out, poly_scale(c, monomial_sym(pi, nvars)))
    return out


def verify_complete_schur(degree: int) -> list[tuple[Partition, bool]]:
    """Check ``H_sigma = sum over pi of K_{pi, sigma} S_pi`` for every sigma
    of each degree up to ``degree``, by exact expansion in max(degree, 8)
    variables.  Returns one (sigma, ok) entry per sigma."""
    nvars = max(degree, 8)
    report = []
    for n in range(degree + 1):
        for sigma in partitions_of(n):
            lhs = product_over_parts(complete_hom, sigma, nvars)
            rhs: Poly = {}
            for pi in partitions_of(n):
                c = kostka(pi, sigma)
                if c:
                    rhs = poly_add(rhs, poly_scale(c, schur_poly(pi, nvars)))
            report.append((sigma, lhs == rhs))
    return report


def power_sum_in_complete(m: int, nvars: Optional[int] = None) -> bool:
    """Check ``H_m = sum over |pi| = m of P_pi / z_pi`` exactly.

    Cleared of denominators: ``z * H_m = sum (z / z_pi) P_pi`` with
    ``z = lcm`` of the centralizer orders, so integer arithmetic suffices.
    """
    nvars = nvars if nvars is not None else max(m, 8)
    parts = partitions_of(m)
    denom = 1
    for pi in parts:
        denom = denom * z_value(pi) // gcd(denom, z_value(pi))
    lhs = poly_scale(denom, complete_hom(m, nvars))
    rhs: Poly = {}
    for pi in parts:
        rhs = poly_add(
            rhs, poly_scale(denom // z_value(pi), product_over_parts(power_sum, pi, nvars))
        )
    return lhs == rhs
