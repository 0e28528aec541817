"""
Exact arithmetic over the integer multiples of 8th roots of unity.

With ``A = exp(i*pi/4)`` every value ``p * A^k`` is stored as a pair
``(mag, exp)`` with ``exp`` in ``0..3``; the relation ``A^4 = -1`` is absorbed
into the sign of ``mag``. Sums that stay inside this set are exactly the sums
of coherent summands (equal exponents). Intermediate sums that leave it are
carried by :class:`Cyc8`, the integer span of ``1, A, A^2, A^3``.

The module also hosts projective integer matrices (integer matrices modulo a
global sign) and the lexicographic tensor ``xi`` of two-entry columns.

Python integers are arbitrary precision, so no operation here can overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Iterable, Sequence

from .errors import NonCoherentPhases, ResultNotInPhi, ShapeError

__all__ = [
    "PhiScalar",
    "Cyc8",
    "ProjMatrix",
    "MultiIndex",
    "phi_mul",
    "phi_add",
    "proj_matmul",
    "xi",
    "xi_proj",
    "det2",
    "gcd_list",
    "t_sequence",
    "ONE",
    "ZERO",
    "I_UNIT",
    "MINUS_I",
]


def _reduce_exp(mag: int, exp: int) -> tuple[int, int]:
    """Bring ``mag * A^exp`` to the canonical pair with exp in 0..3."""
    if mag == 0:
        return 0, 0
    exp %= 8
    if exp >= 4:
        return -mag, exp - 4
    return mag, exp


@dataclass(frozen=True)
class PhiScalar:
    """The value ``mag * A^exp`` with ``A = exp(i*pi/4)``.

    Always construct through :meth:`of` unless the pair is already canonical;
    the initializer still normalizes so equality is structural.
    """

    mag: int
    exp: int = 0

    def __post_init__(self):
        mag, exp = _reduce_exp(int(self.mag), int(self.exp))
        object.__setattr__(self, "mag", mag)
        object.__setattr__(self, "exp", exp)

    @classmethod
    def of(cls, mag: int, exp: int = 0) -> "PhiScalar":
        return cls(mag, exp)

    @property
    def magnitude(self) -> int:
        return abs(self.mag)

    def is_zero(self) -> bool:
        return self.mag == 0

    def __mul__(self, other: "PhiScalar") -> "PhiScalar":
        return phi_mul(self, other)

    def __add__(self, other: "PhiScalar") -> "PhiScalar":
        return phi_add(self, other)

    def __neg__(self) -> "PhiScalar":
        return PhiScalar(-self.mag, self.exp)

    def conjugate(self) -> "PhiScalar":
        """Complex conjugate, i.e. ``A -> A^-1``."""
        return PhiScalar(self.mag, -self.exp)

    def to_cyc(self) -> "Cyc8":
        coeffs = [0, 0, 0, 0]
        coeffs[self.exp] = self.mag
        return Cyc8(tuple(coeffs))

    def to_complex(self) -> complex:
        return self.mag * complex(math.cos(math.pi * self.exp / 4), math.sin(math.pi * self.exp / 4))

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.mag)
        return f"{self.mag}*A^{self.exp}"


ONE = PhiScalar(1, 0)
ZERO = PhiScalar(0, 0)
I_UNIT = PhiScalar(1, 2)
MINUS_I = PhiScalar(-1, 2)


def phi_mul(x: PhiScalar, y: PhiScalar) -> PhiScalar:
    """Product in Z[Phi].

    Args:
        x: left factor.
        y: right factor.

    Returns:
        ``(x.mag*y.mag) * A^(x.exp+y.exp)`` in canonical form.
    """
    return PhiScalar(x.mag * y.mag, x.exp + y.exp)


def phi_add(x: PhiScalar, y: PhiScalar) -> PhiScalar:
    """Sum of two coherent elements.

    Raises:
        NonCoherentPhases: both summands are nonzero with different exponents.
    """
    if x.mag == 0:
        return y
    if y.mag == 0:
        return x
    if x.exp != y.exp:
        raise NonCoherentPhases(f"{x} + {y} is not a multiple of a single root of unity")
    return PhiScalar(x.mag + y.mag, x.exp)


@dataclass(frozen=True)
class Cyc8:
    """Element ``c0 + c1*A + c2*A^2 + c3*A^3`` of Z[A] with ``A^4 = -1``."""

    coeffs: tuple[int, int, int, int] = (0, 0, 0, 0)

    @classmethod
    def unit(cls, exp: int) -> "Cyc8":
        return PhiScalar(1, exp).to_cyc()

    def __add__(self, other: "Cyc8") -> "Cyc8":
        return Cyc8(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Cyc8":
        return Cyc8(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "Cyc8") -> "Cyc8":
        return self + (-other)

    def __mul__(self, other: "Cyc8") -> "Cyc8":
        out = [0, 0, 0, 0]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                k = i + j
                if k >= 4:
                    out[k - 4] -= a * b
                else:
                    out[k] += a * b
        return Cyc8(tuple(out))

    def shift(self, k: int) -> "Cyc8":
        """Multiply by ``A^k``."""
        return Cyc8(cyc_shift(self.coeffs, k))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_phi(self) -> PhiScalar:
        """Convert to a single-axis value.

        Raises:
            ResultNotInPhi: more than one coefficient is nonzero.
        """
        return cyc_to_phi(self.coeffs)


def cyc_shift(c: Sequence[int], k: int) -> tuple[int, int, int, int]:
    """Multiply the coefficient tuple ``c`` by ``A^k``."""
    k %= 8
    sign = 1
    if k >= 4:
        sign, k = -1, k - 4
    out = [0, 0, 0, 0]
    for i in range(4):
        j = i + k
        if j >= 4:
            out[j - 4] = -sign * c[i]
        else:
            out[j] = sign * c[i]
    return tuple(out)


def cyc_to_phi(c: Sequence[int]) -> PhiScalar:
    nz = [i for i in range(4) if c[i]]
    if not nz:
        return ZERO
    if len(nz) > 1:
        raise ResultNotInPhi(f"coefficients {tuple(c)} span several axes")
    return PhiScalar(c[nz[0]], nz[0])


# ---------------------------------------------------------------------------
# projective matrices


def _canonical_sign(entries: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    for row in entries:
        for x in row:
            if x:
                if x < 0:
                    return tuple(tuple(-y for y in r) for r in entries)
                return entries
    return entries


@dataclass(frozen=True)
class ProjMatrix:
    """Integer matrix modulo multiplication by -1.

    The stored representative has its first nonzero entry (row-major) positive,
    so two matrices are equal as classes exactly when they compare equal.
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        if not rows or not rows[0]:
            raise ShapeError("a projective matrix needs at least one row and column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ShapeError("ragged matrix rows")
        object.__setattr__(self, "entries", _canonical_sign(rows))

    @classmethod
    def column(cls, values: Iterable[int]) -> "ProjMatrix":
        return cls(tuple((int(v),) for v in values))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def flat(self) -> tuple[int, ...]:
        return tuple(x for r in self.entries for x in r)

    def is_zero(self) -> bool:
        return not any(self.flat())

    def __neg__(self) -> "ProjMatrix":
        return self

    def __matmul__(self, other: "ProjMatrix") -> "ProjMatrix":
        return proj_matmul(self, other)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __str__(self) -> str:
        if self.cols == 1:
            return "[" + ";".join(str(r[0]) for r in self.entries) + "]"
        return "[" + ",".join("[" + ",".join(str(x) for x in r) + "]" for r in self.entries) + "]"


def proj_matmul(x: ProjMatrix, y: ProjMatrix) -> ProjMatrix:
    """Product of projective matrices; the sign ambiguity multiplies out.

    Raises:
        ShapeError: ``x.cols != y.rows``.
    """
    if x.cols != y.rows:
        raise ShapeError(f"cannot multiply {x.shape} by {y.shape}")
    ycols = [y.col(j) for j in range(y.cols)]
    return ProjMatrix(
        tuple(tuple(sum(a * b for a, b in zip(row, c)) for c in ycols) for row in x.entries)
    )


def det2(m: ProjMatrix) -> int:
    """Determinant of a 2x2 projective matrix (sign-invariant)."""
    if m.shape != (2, 2):
        raise ShapeError(f"det2 needs a 2x2 matrix, got {m.shape}")
    (a, b), (c, d) = m.entries
    return a * d - b * c


def gcd_list(values: Iterable[int]) -> int:
    """Greatest common divisor with ``gcd(0, 0) = 0``."""
    return reduce(math.gcd, (int(v) for v in values), 0)


# ---------------------------------------------------------------------------
# multi-indices and xi


@dataclass(frozen=True)
class MultiIndex:
    """Position ``rank`` (1-based) in the lexicographic order of ``{1,2}^n``."""

    n: int
    rank: int

    def __post_init__(self):
        if self.n < 0 or not 1 <= self.rank <= 2**self.n:
            raise ValueError(f"rank {self.rank} out of range for n={self.n}")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "MultiIndex":
        r = 0
        for b in bits:
            if b not in (1, 2):
                raise ValueError("multi-index entries must be 1 or 2")
            r = 2 * r + (b - 1)
        return cls(len(bits), r + 1)

    @property
    def bits(self) -> tuple[int, ...]:
        r = self.rank - 1
        return tuple(((r >> (self.n - 1 - k)) & 1) + 1 for k in range(self.n))

    @property
    def weight(self) -> int:
        return bin(self.rank - 1).count("1")

    @classmethod
    def all(cls, n: int) -> list["MultiIndex"]:
        return [cls(n, r) for r in range(1, 2**n + 1)]


def t_sequence(n: int) -> tuple[int, ...]:
    """Weights ``t_1..t_{2^n}`` built by the doubling recursion.

    Starting from ``(0,)``, each step appends the current sequence shifted by
    one; no bit counting is involved, so this cross-checks :attr:`MultiIndex.weight`.
    """
    seq = [0]
    for _ in range(n):
        seq = seq + [t + 1 for t in seq]
    return tuple(seq)


def xi(vectors: Sequence[Sequence[int]]) -> tuple:
    """Lexicographic tensor of two-entry vectors.

    Args:
        vectors: ``n >= 1`` sequences of length 2 (integers or any ring values).

    Returns:
        Tuple of length ``2^n``; entry ``i`` is the product of ``v_j[alpha_ij - 1]``.
    """
    if len(vectors) == 0:
        raise ShapeError("xi needs at least one vector")
    for v in vectors:
        if len(v) != 2:
            raise ShapeError("xi only accepts two-entry vectors")
    out = []
    for choice in product((0, 1), repeat=len(vectors)):
        acc = 1
        for v, c in zip(vectors, choice):
            acc = acc * v[c]
        out.append(acc)
    return tuple(out)


def xi_proj(vectors: Sequence[ProjMatrix]) -> ProjMatrix:
    """Projective ``xi`` on 2x1 classes; well defined since signs factor out."""
    for v in vectors:
        if v.shape != (2, 1):
            raise ShapeError(f"xi_proj needs 2x1 columns, got {v.shape}")
    return ProjMatrix.column(xi([v.col(0) for v in vectors]))
