"""Table-driven arithmetic in GF(q) and GF(q^2) for prime q.

An element of GF(q^2) is stored as the integer ``a + b*q`` standing for
``a + b*w`` where ``w`` is a root of the reduction polynomial.  GF(q) sits
inside as the integers ``0..q-1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MAX_ORDER = 37


class UnsupportedOrder(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def smallest_nonresidue(q: int) -> int:
    squares = {(a * a) % q for a in range(1, q)}
    for n in range(2, q):
        if n not in squares:
            return n
    raise UnsupportedOrder(f"no quadratic non-residue mod {q}")


@dataclass(frozen=True)
class FieldCtx:
    """GF(q^2) with full addition/multiplication tables.

    ``poly`` holds ``(c0, c1)`` such that ``w^2 = c0 + c1*w``.
    """

    q: int
    poly: tuple[int, int]
    add: np.ndarray = field(repr=False)
    mul: np.ndarray = field(repr=False)
    neg: np.ndarray = field(repr=False)
    inv: np.ndarray = field(repr=False)
    exp: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return self.q * self.q

    @property
    def generator(self) -> int:
        return int(self.exp[1])

    @property
    def w(self) -> int:
        """The adjoined root, encoded as ``0 + 1*w``."""
        return self.q

    def power(self, a: int, k: int) -> int:
        if a == 0:
            return 0 if k > 0 else 1
        return int(self.exp[(int(self.log[a]) * k) % (self.order - 1)])

    def conj(self, a: int) -> int:
        """Frobenius map a -> a^q."""
        return self.power(a, self.q)

    def elements(self) -> range:
        return range(self.order)

    def describe(self, a: int) -> str:
        lo, hi = a % self.q, a // self.q
        if hi == 0:
            return str(lo)
        head = "w" if hi == 1 else f"{hi}w"
        return head if lo == 0 else f"{head}+{lo}"


def _generator_powers(mul: np.ndarray, size: int) -> np.ndarray:
    for g in range(2, size):
        powers = [1]
        x = int(mul[1, g])
        while x != 1:
            powers.append(x)
            x = int(mul[x, g])
        if len(powers) == size - 1:
            return np.array(powers, dtype=np.int64)
    raise UnsupportedOrder("multiplicative group is not cyclic")  # pragma: no cover


def build_field(q: int, max_order: int = MAX_ORDER) -> FieldCtx:
    """Build GF(q^2) tables for a prime ``q`` not exceeding ``max_order``."""
    if not is_prime(q) or q > max_order:
        raise UnsupportedOrder(f"unsupported order q={q}: need a prime <= {max_order}")
    if q == 2:
        poly = (1, 1)  # w^2 = w + 1
    else:
        poly = (smallest_nonresidue(q), 0)  # w^2 = n
    size = q * q
    idx = np.arange(size)
    lo, hi = idx % q, idx // q
    add = ((lo[:, None] + lo[None, :]) % q) + ((hi[:, None] + hi[None, :]) % q) * q
    neg = ((-lo) % q) + ((-hi) % q) * q

    mul = np.empty((size, size), dtype=np.int64)
    c0, c1 = poly
    hh = hi[:, None] * hi[None, :]
    mul[:] = ((lo[:, None] * lo[None, :] + hh * c0) % q) + (
        (lo[:, None] * hi[None, :] + hi[:, None] * lo[None, :] + hh * c1) % q
    ) * q

    exp = _generator_powers(mul, size)
    log = np.full(size, -1, dtype=np.int64)
    log[exp] = np.arange(size - 1)
    inv = np.zeros(size, dtype=np.int64)
    inv[1:] = exp[(-log[1:]) % (size - 1)]
    return FieldCtx(q=q, poly=poly, add=add, mul=mul, neg=neg, inv=inv, exp=exp, log=log)


def hermitian_norm(a: int, ctx: FieldCtx) -> int:
    """Return a^(q+1), which always lies in GF(q)."""
    return ctx.power(a, ctx.q + 1)
