"""Eigenvalues of the fundamental invariant and what they determine.

The fundamental invariant of the Hecke algebra acts on the irrep labeled
by a Young diagram as the sum of the q-contents of its boxes.  For
generic q that single Laurent polynomial separates all irreps, encodes
the diagonal lengths of the diagram in its coefficients, and, through
the substitution q = exp(delta), generates the power sums of the box
contents and hence the central characters of the symmetric group.  This
module implements the eigenvalue, its inversion back to a diagram, the
content power sums, the closed-form central characters of the
single-cycle class-sums for cycle lengths 2 through 5, and the depth at
which consecutive power sums separate the irreps of S_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagrams import YoungDiagram, partitions
from .laurent import DeltaSeries, LaurentPoly, exp_series, q_content

__all__ = [
    "InvalidSpectrum",
    "NonIntegerPowerSum",
    "UnsupportedCycle",
    "CentralCharacterTable",
    "invariant_eigenvalue",
    "rescaled_invariant_eigenvalue",
    "reconstruct_diagram",
    "content_power_sum",
    "central_character",
    "central_character_table",
    "power_sums_from_eigenvalue",
    "separating_depth",
    "MAX_SEPARATION_N",
]

# Partitions of n up to here are cheap to sweep when probing separation
# depths; beyond this the partition count makes the probe pointless at
# desk scale.
MAX_SEPARATION_N = 41


class InvalidSpectrum(ValueError):
    """The polynomial does not encode a valid diagram of the stated size."""


class NonIntegerPowerSum(ValueError):
    """A recovered content power sum is not an integer (bad input)."""


class UnsupportedCycle(ValueError):
    """No closed form is implemented for this cycle length."""


def invariant_eigenvalue(g: YoungDiagram) -> LaurentPoly:
    """Eigenvalue of the fundamental invariant on the irrep labeled by g.

    The sum of q-contents q*[j-i]_q over the boxes (i, j) of g.  At q = 1
    it collapses to the content sum, the eigenvalue of the transposition
    class-sum of S_n.
    """
    total = LaurentPoly.zero()
    for c in g.contents():
        total = total + q_content(c)
    return total


def rescaled_invariant_eigenvalue(g: YoungDiagram) -> LaurentPoly:
    """The (q-1)/q rescaling of the invariant eigenvalue.

    Equals the sum of (q^(j-i) - 1) over boxes, which vanishes at q = 1;
    its expansion around q = exp(delta) has the content power sums as
    Taylor data.
    """
    terms = [(c, 1) for c in g.contents()]
    terms.append((0, -g.n))
    return LaurentPoly(terms)


def content_power_sum(g: YoungDiagram, k: int) -> int:
    """The k-th power sum of the box contents of g (k >= 1)."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("power sum index must be a positive integer")
    return sum(c**k for c in g.contents())


def _diagonals_to_rows(beta: dict[int, int]) -> tuple[int, ...]:
    """Convert diagonal lengths {content: count} to row lengths.

    Boxes of content k >= 0 occupy rows 1..beta_k; boxes of content
    k < 0 occupy rows 1-k..beta_k-k.  Row i collects one box from each
    diagonal passing through it.
    """
    n_rows = 0
    for k, b in beta.items():
        n_rows = max(n_rows, b if k >= 0 else b - k)
    rows = []
    for i in range(1, n_rows + 1):
        length = sum(1 for k, b in beta.items() if k >= 0 and b >= i)
        length += sum(1 for k, b in beta.items() if k < 0 and 1 <= i + k <= b)
        rows.append(length)
    return tuple(rows)


def reconstruct_diagram(p: LaurentPoly, n: int) -> YoungDiagram:
    """Recover the Young diagram of n boxes whose invariant eigenvalue is p.

    The coefficient of q^k for k > 0 counts boxes of content >= k, and
    the coefficient of q^(k+1) for k < 0 counts (negated) boxes of
    content <= k; first differences give the diagonal lengths, which in
    turn give the row lengths.  Rather than assuming the input is
    well-formed, the reconstructed diagram is validated by recomputing
    its eigenvalue, so malformed input raises `InvalidSpectrum`.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    terms = p.terms
    for coeff in terms.values():
        if coeff.denominator != 1:
            raise InvalidSpectrum(f"non-integer coefficient in {p}")

    pos = sorted(e for e in terms if e > 0)
    if pos and pos != list(range(1, pos[-1] + 1)):
        raise InvalidSpectrum(f"positive exponents of {p} are not contiguous from 1")
    k_max = pos[-1] if pos else 0
    pi = {k: int(terms[k]) for k in pos}

    nonpos = sorted((e for e in terms if e <= 0), reverse=True)
    if nonpos and nonpos != list(range(0, nonpos[-1] - 1, -1)):
        raise InvalidSpectrum(f"nonpositive exponents of {p} are not contiguous from 0")
    k_min = (nonpos[-1] - 1) if nonpos else 0
    nu = {e - 1: -int(terms[e]) for e in nonpos}

    beta: dict[int, int] = {}
    for k in range(1, k_max + 1):
        beta[k] = pi[k] - pi.get(k + 1, 0)
    for k in range(k_min, 0):
        beta[k] = nu[k] - nu.get(k - 1, 0)
    beta[0] = n - pi.get(1, 0) - nu.get(-1, 0)

    if any(b < 0 for b in beta.values()) or beta[0] < 1:
        raise InvalidSpectrum(f"{p} does not yield valid diagonal lengths for n={n}")
    if (k_max and beta[k_max] != 1) or (k_min and beta[k_min] != 1):
        raise InvalidSpectrum(f"extreme diagonals of {p} must hold a single box")

    rows = _diagonals_to_rows({k: b for k, b in beta.items() if b})
    try:
        diagram = YoungDiagram(rows)
    except ValueError as exc:
        raise InvalidSpectrum(f"{p} does not reconstruct to a Young diagram") from exc
    if diagram.n != n or invariant_eigenvalue(diagram) != p:
        raise InvalidSpectrum(f"{p} is not the eigenvalue of any diagram of {n} boxes")
    return diagram


def central_character(p: int, n: int, g: YoungDiagram) -> Fraction:
    """Eigenvalue of the single-cycle class-sum of cycle length p on g.

    Closed forms in the content power sums s_k are implemented for
    p = 2..5:

        p=2: s_1
        p=3: s_2 - n(n-1)/2
        p=4: s_3 - (2n-3) s_1
        p=5: s_4 - (3n-10) s_2 - 2 s_1^2 + n(n-1)(5n-19)/6

    When the class is empty (p > n) the formulas evaluate to zero.
    """
    if g.n != n:
        raise ValueError(f"diagram {g} has {g.n} boxes, expected n={n}")
    if p == 2:
        return Fraction(content_power_sum(g, 1))
    if p == 3:
        return Fraction(content_power_sum(g, 2)) - Fraction(n * (n - 1), 2)
    if p == 4:
        return Fraction(content_power_sum(g, 3) - (2 * n - 3) * content_power_sum(g, 1))
    if p == 5:
        s1 = content_power_sum(g, 1)
        s2 = content_power_sum(g, 2)
        s4 = content_power_sum(g, 4)
        return Fraction(s4 - (3 * n - 10) * s2 - 2 * s1 * s1) + Fraction(n * (n - 1) * (5 * n - 19), 6)
    raise UnsupportedCycle(f"no closed form for cycle length {p} (supported: 2..5)")


@dataclass(frozen=True)
class CentralCharacterTable:
    """Central characters of the single-cycle class-sums, p in 2..5."""

    n: int
    entries: dict[tuple[int, YoungDiagram], Fraction]

    def value(self, p: int, g: YoungDiagram) -> Fraction:
        return self.entries[(p, g)]


def central_character_table(n: int) -> CentralCharacterTable:
    entries = {
        (p, g): central_character(p, n, g)
        for p in (2, 3, 4, 5)
        for g in partitions(n)
    }
    return CentralCharacterTable(n, entries)


def power_sums_from_eigenvalue(p: LaurentPoly, kmax: int) -> list[int]:
    """Recover content power sums s_1..s_kmax from a rescaled eigenvalue.

    Expanding p(exp(delta)) in delta, the k-th coefficient times k! is
    s_k.  Contents are integers, so a non-integral value means the input
    was not a rescaled invariant eigenvalue and raises
    `NonIntegerPowerSum`; likewise a nonzero constant term.
    """
    if not isinstance(kmax, int) or kmax < 1:
        raise ValueError("kmax must be a positive integer")
    series = exp_series(p, kmax)
    if series[0] != 0:
        raise NonIntegerPowerSum("nonzero constant term: not a rescaled eigenvalue")
    sigmas = []
    fact = 1
    for k in range(1, kmax + 1):
        fact *= k
        value = series[k] * fact
        if value.denominator != 1:
            raise NonIntegerPowerSum(f"power sum s_{k} = {value} is not an integer")
        sigmas.append(int(value))
    return sigmas


def rescaled_eigenvalue_series(g: YoungDiagram, order: int) -> DeltaSeries:
    """Series of the rescaled eigenvalue around q = exp(delta)."""
    return exp_series(rescaled_invariant_eigenvalue(g), order)


def separating_depth(n: int) -> int:
    """Minimal k such that (s_1, ..., s_k) separates the partitions of n.

    The tuples of content power sums are compared across all partitions
    of n; the depth never exceeds n - 1 because the full eigenvalue
    already separates.
    """
    if not isinstance(n, int) or not 1 <= n <= MAX_SEPARATION_N:
        raise ValueError(f"n must lie in 1..{MAX_SEPARATION_N}")
    parts = partitions(n)
    if len(parts) == 1:
        return 1
    contents = [g.contents() for g in parts]
    signatures: list[tuple[int, ...]] = [() for _ in parts]
    for k in range(1, n):
        signatures = [
            sig + (sum(c**k for c in cs),) for sig, cs in zip(signatures, contents)
        ]
        if len(set(signatures)) == len(parts):
            return k
    raise AssertionError(f"power sums up to {n - 1} failed to separate partitions of {n}")
