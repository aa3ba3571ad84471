"""Exact regular representation of the Hecke algebra at a rational q0.

Elements are sparse maps from permutations (one-line tuples) to Fraction
coefficients with respect to the word basis {g_w}.  Products reduce to
repeated application of the generator rewriting rule

    g_w g_i = g_{w s_i}                    if len(w s_i) > len(w)
    g_w g_i = (q0-1) g_w + q0 g_{w s_i}    otherwise

and its mirror image on the left, which between them carry all the
defining relations.  On top of the arithmetic sit the fundamental
invariant (the sum of the Murphy operators), central projectors obtained
by Lagrange interpolation on its spectrum at q0, and the trace of left
multiplication on the word basis.  Together these produce exact
irreducible traces, the oracle every symbolic result in the package is
checked against.

The representation is specialized at a rational q0 rather than kept
symbolic because any rational with |q0| not in {0, 1} is never a root
of unity, which is all the genericity the spectrum needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache, lru_cache

from .diagrams import YoungDiagram, dimension, partitions
from .invariant import invariant_eigenvalue

__all__ = [
    "MAX_ORACLE_N",
    "DegenerateSpecialization",
    "HeckeElement",
    "ProjectorPoly",
    "word_element",
    "fundamental_invariant",
    "murphy_element",
    "regular_trace",
    "hecke_projector",
    "apply_projector",
    "projector_element",
    "irreducible_trace",
]

# Word-basis arithmetic scales with n!; S_7 is the intended ceiling.
MAX_ORACLE_N = 7


class DegenerateSpecialization(ValueError):
    """Two invariant eigenvalues collide at the chosen q0."""


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    if n > MAX_ORACLE_N:
        raise ValueError(f"the regular-representation oracle is capped at n <= {MAX_ORACLE_N}")


def _check_q0(q0) -> Fraction:
    value = Fraction(q0)
    if value == 0:
        raise ValueError("q0 = 0 is outside the algebra's parameter range")
    return value


class HeckeElement:
    """A Hecke-algebra element at specialized q0, in the word basis.

    Treated as immutable: all arithmetic returns new objects, and the
    heavily-used constructors (invariant, Murphy elements, projector
    elements) hand out cached instances whose coefficient maps must not
    be mutated.
    """

    __slots__ = ("n", "q0", "coeffs")

    def __init__(self, n: int, q0, coeffs: dict[tuple[int, ...], Fraction] | None = None):
        _check_n(n)
        self.n = n
        self.q0 = _check_q0(q0)
        clean: dict[tuple[int, ...], Fraction] = {}
        if coeffs:
            expected = frozenset(range(1, n + 1))
            for perm, c in coeffs.items():
                if len(perm) != n or frozenset(perm) != expected:
                    raise ValueError(f"{perm} is not a permutation of 1..{n}")
                f = Fraction(c)
                if f:
                    clean[tuple(perm)] = f
        self.coeffs = clean

    @classmethod
    def _make(cls, n: int, q0: Fraction, coeffs: dict[tuple[int, ...], Fraction]) -> "HeckeElement":
        obj = cls.__new__(cls)
        obj.n = n
        obj.q0 = q0
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, n: int, q0) -> "HeckeElement":
        _check_n(n)
        return cls._make(n, _check_q0(q0), {})

    @classmethod
    def identity(cls, n: int, q0) -> "HeckeElement":
        _check_n(n)
        return cls._make(n, _check_q0(q0), {tuple(range(1, n + 1)): Fraction(1)})

    @classmethod
    def generator(cls, n: int, q0, i: int) -> "HeckeElement":
        return cls.identity(n, q0).times_generator(i)

    def coefficient(self, perm: tuple[int, ...]) -> Fraction:
        return self.coeffs.get(tuple(perm), Fraction(0))

    @property
    def support_size(self) -> int:
        return len(self.coeffs)

    def _check_compatible(self, other: "HeckeElement") -> None:
        if self.n != other.n or self.q0 != other.q0:
            raise ValueError("mixing elements of different algebras or specializations")

    def times_generator(self, i: int, side: str = "right") -> "HeckeElement":
        """Multiply by the i-th generator on the given side.

        Right multiplication swaps the entries at positions i, i+1 of
        each basis word; left multiplication swaps the values i, i+1.
        Whichever swap raises the word length contributes one term,
        otherwise the quadratic relation contributes two.
        """
        n, q0 = self.n, self.q0
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} must lie in 1..{n - 1}")
        if side not in ("right", "left"):
            raise ValueError(f"side must be 'right' or 'left', got {side!r}")
        qm1 = q0 - 1
        out: dict[tuple[int, ...], Fraction] = {}
        get = out.get
        if side == "right":
            a = i - 1
            for w, c in self.coeffs.items():
                w2 = w[:a] + (w[i], w[a]) + w[i + 1 :]
                if w[a] < w[i]:
                    prev = get(w2)
                    out[w2] = c if prev is None else prev + c
                else:
                    prev = get(w)
                    out[w] = c * qm1 if prev is None else prev + c * qm1
                    prev = get(w2)
                    out[w2] = c * q0 if prev is None else prev + c * q0
        else:
            for w, c in self.coeffs.items():
                pi = w.index(i)
                pj = w.index(i + 1)
                lst = list(w)
                lst[pi], lst[pj] = i + 1, i
                w2 = tuple(lst)
                if pi < pj:
                    prev = get(w2)
                    out[w2] = c if prev is None else prev + c
                else:
                    prev = get(w)
                    out[w] = c * qm1 if prev is None else prev + c * qm1
                    prev = get(w2)
                    out[w2] = c * q0 if prev is None else prev + c * q0
        # collisions can cancel exactly; strip zeros in one pass
        return HeckeElement._make(n, q0, {w: c for w, c in out.items() if c})

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            s = out.get(w, Fraction(0)) + c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return HeckeElement._make(self.n, self.q0, out)

    def __neg__(self):
        return HeckeElement._make(self.n, self.q0, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            self._check_compatible(other)
            out: dict[tuple[int, ...], Fraction] = {}
            for w, c in other.coeffs.items():
                partial = self
                for i in reduced_word(w):
                    partial = partial.times_generator(i)
                for v, cv in partial.coeffs.items():
                    s = out.get(v, Fraction(0)) + c * cv
                    if s:
                        out[v] = s
                    elif v in out:
                        del out[v]
            return HeckeElement._make(self.n, self.q0, out)
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if not f:
                return HeckeElement._make(self.n, self.q0, {})
            return HeckeElement._make(self.n, self.q0, {w: c * f for w, c in self.coeffs.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self.q0 == other.q0 and self.coeffs == other.coeffs

    def __repr__(self):
        return f"HeckeElement(n={self.n}, q0={self.q0}, {len(self.coeffs)} basis terms)"


@cache
def reduced_word(perm: tuple[int, ...]) -> tuple[int, ...]:
    """A fixed reduced word for the permutation (first-descent stripping).

    Repeatedly swapping away the first descent sorts the one-line
    notation in exactly inversion-count many adjacent swaps; reading the
    recorded swaps backwards gives a deterministic reduced word.
    """
    w = list(perm)
    n = len(w)
    removed: list[int] = []
    while True:
        for i in range(n - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                removed.append(i + 1)
                break
        else:
            break
    return tuple(reversed(removed))


def word_element(n: int, q0, word: tuple[int, ...] | list[int]) -> HeckeElement:
    """The product of generators g_{i1} ... g_{ik} for the given word."""
    element = HeckeElement.identity(n, q0)
    for i in word:
        element = element.times_generator(i)
    return element


@lru_cache(maxsize=128)
def murphy_element(n: int, q0: Fraction, i: int) -> HeckeElement:
    """The i-th Murphy operator inside the n-strand algebra.

    The difference of consecutive fundamental invariants expands into
    the sandwich words ending at generator i-1:

        L_i = sum_{j=1}^{i-1} q0^(j-i+1) g_j g_{j+1} ... g_{i-1} ... g_{j+1} g_j

    so each summand is a single basis word (a transposition).
    """
    _check_n(n)
    q0 = _check_q0(q0)
    if not 2 <= i <= n:
        raise ValueError(f"Murphy index {i} must lie in 2..{n}")
    total = HeckeElement.zero(n, q0)
    for j in range(1, i):
        word = tuple(range(j, i)) + tuple(range(i - 2, j - 1, -1))
        total = total + word_element(n, q0, word) * q0 ** (j - i + 1)
    return total


@lru_cache(maxsize=64)
def fundamental_invariant(n: int, q0: Fraction) -> HeckeElement:
    """The fundamental invariant: the sum of all Murphy operators.

    Central in the algebra; its spectrum is given by `invariant_eigenvalue`
    specialized at q0.  For n = 1 the sum is empty.
    """
    _check_n(n)
    q0 = _check_q0(q0)
    total = HeckeElement.zero(n, q0)
    for m in range(2, n + 1):
        total = total + murphy_element(n, q0, m)
    return total


def regular_trace(x: HeckeElement) -> Fraction:
    """Trace of left multiplication by x on the word basis.

    The diagonal entry at basis word w is the coefficient of w in
    x * g_w.  Instead of recomputing x * g_w from scratch per word, the
    words are walked along a spanning tree of the right weak order
    (parent = remove the first descent), so each of the n! columns costs
    one generator application.
    """
    n = x.n
    total = Fraction(0)
    identity = tuple(range(1, n + 1))
    stack: list[tuple[tuple[int, ...], HeckeElement]] = [(identity, x)]
    while stack:
        w, elem = stack.pop()
        c = elem.coeffs.get(w)
        if c is not None:
            total += c
        # first descent of w (n if none): children append a descent at i
        # while keeping every earlier position an ascent
        d = n
        for i in range(1, n):
            if w[i - 1] > w[i]:
                d = i
                break
        for i in range(1, d):
            w2 = w[: i - 1] + (w[i], w[i - 1]) + w[i + 1 :]
            stack.append((w2, elem.times_generator(i)))
        i = d + 1
        if i <= n - 1 and w[d] < w[i] and w[d - 1] < w[i]:
            w2 = w[: i - 1] + (w[i], w[i - 1]) + w[i + 1 :]
            stack.append((w2, elem.times_generator(i)))
    return total


@dataclass(frozen=True)
class ProjectorPoly:
    """A central projector expressed as a polynomial in the invariant.

    `coeffs` lists the coefficients in ascending degree; the degree is
    one less than the number of partitions of n.
    """

    diagram: YoungDiagram
    n: int
    q0: Fraction
    coeffs: tuple[Fraction, ...]


def hecke_projector(g: YoungDiagram, n: int, q0) -> ProjectorPoly:
    """Lagrange interpolation onto g's eigenvalue of the invariant.

    Requires all invariant eigenvalues to be distinct at q0, which is
    asserted rather than assumed.  q0 = 1 and q0 = -1 are refused
    outright: they are roots of unity, where the word basis stops being
    semisimple-generic.
    """
    if g.n != n:
        raise ValueError(f"diagram {g} has {g.n} boxes, expected n={n}")
    _check_n(n)
    q0 = _check_q0(q0)
    if q0 == 1 or q0 == -1:
        raise DegenerateSpecialization(f"q0 = {q0} is a root of unity")
    parts = partitions(n)
    values = {h: invariant_eigenvalue(h).evaluate(q0) for h in parts}
    if len(set(values.values())) != len(parts):
        raise DegenerateSpecialization(f"invariant eigenvalues collide at q0 = {q0}")
    mine = values[g]
    coeffs: list[Fraction] = [Fraction(1)]
    denominator = Fraction(1)
    for h in parts:
        if h == g:
            continue
        ev = values[h]
        denominator *= mine - ev
        # multiply the accumulated polynomial by (X - ev)
        shifted = [Fraction(0)] + coeffs
        coeffs = [shifted[k] - (coeffs[k] if k < len(coeffs) else Fraction(0)) * ev for k in range(len(shifted))]
    return ProjectorPoly(g, n, q0, tuple(c / denominator for c in coeffs))


def apply_projector(p: ProjectorPoly, x: HeckeElement) -> HeckeElement:
    """Evaluate the projector polynomial on the invariant against x.

    Horner's scheme with repeated multiplication by the invariant, so no
    powers of the invariant are ever stored.
    """
    if x.n != p.n or x.q0 != p.q0:
        raise ValueError("element and projector live in different algebras")
    invariant = fundamental_invariant(p.n, p.q0)
    result = x * p.coeffs[-1]
    for a in reversed(p.coeffs[:-1]):
        result = result * invariant + x * a
    return result


@lru_cache(maxsize=64)
def projector_element(p: ProjectorPoly) -> HeckeElement:
    """The projector itself as an element (the polynomial applied to 1)."""
    return apply_projector(p, HeckeElement.identity(p.n, p.q0))


def irreducible_trace(g: YoungDiagram, word: tuple[int, ...], n: int, q0) -> Fraction:
    """Exact trace of a generator word in the irrep labeled by g.

    The regular representation contains each irrep with multiplicity
    equal to its dimension, so the irreducible trace is the regular
    trace of (projector * word) divided by dim(g).
    """
    p = hecke_projector(g, n, q0)
    x = word_element(n, p.q0, tuple(word))
    return regular_trace(projector_element(p) * x) / dimension(g)
