"""Exact arithmetic in GF(p^h).

An element is stored as the integer ``c_0 + c_1 p + ... + c_{h-1} p^{h-1}``
where ``c_i`` is the coefficient of ``x^i`` in its reduced representative
modulo the defining polynomial.  With this encoding the integer order of
codes coincides with the lexicographic order of the digit string written
highest power first, which is the order used to pick canonical choices
(modulus, primitive element, roots).

All arithmetic goes through exp/log/Zech tables.  The ``GF`` methods accept
either Python integers (scalar fast path on lists) or numpy integer arrays
(vectorised path with broadcasting).
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
import sympy

from .exceptions import FieldError, NoRootError

TABLE_LIMIT = 2**20


def _is_scalar(x) -> bool:
    return isinstance(x, (int, np.integer))


def _is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    x = sympy.Symbol("x")
    return sympy.Poly(list(coeffs), x, modulus=p).is_irreducible


def smallest_irreducible(p: int, h: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``h`` over GF(p).

    Coefficients are returned leading first, ``(1, c_{h-1}, ..., c_0)``.
    """
    if h == 1:
        return (1, 0)
    for tail in itertools.product(range(p), repeat=h):
        if tail[-1] == 0:
            continue
        cand = (1,) + tail
        if _is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {h} over GF({p})")  # pragma: no cover


class GF:
    """The finite field GF(p^h) with a fixed modulus and primitive element.

    Parameters
    ----------
    p : int
        Characteristic, must be prime.
    h : int
        Extension degree, ``h >= 1``.
    modulus : sequence of int, optional
        Monic irreducible polynomial of degree ``h`` given leading
        coefficient first.  Defaults to the lexicographically smallest one.
    """

    def __init__(self, p: int, h: int, modulus: Sequence[int] | None = None):
        if not isinstance(p, (int, np.integer)) or not sympy.isprime(int(p)):
            raise FieldError(f"characteristic {p!r} is not prime")
        if h < 1:
            raise FieldError(f"extension degree must be >= 1, got {h}")
        p, h = int(p), int(h)
        q = p**h
        if q > TABLE_LIMIT:
            raise FieldError(f"GF({p}^{h}) exceeds the table limit {TABLE_LIMIT}")
        if modulus is None:
            modulus = smallest_irreducible(p, h)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != h + 1 or modulus[0] != 1:
                raise FieldError(f"modulus must be monic of degree {h}: {modulus}")
            if not _is_irreducible(modulus, p):
                raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.h = h
        self.q = q
        self.order = q - 1
        self.modulus = tuple(modulus)
        # x^h = -(c_{h-1} x^{h-1} + ... + c_0), constant-first
        self._red = [(-c) % p for c in reversed(self.modulus[1:])]
        self._pw = [p**i for i in range(h)]
        self.generator = self._find_generator()
        self._build_tables()

    # ------------------------------------------------------------------
    # construction helpers (table-free arithmetic)

    def digits(self, x: int) -> list[int]:
        """Coefficients of ``x`` in the power basis, constant term first."""
        out = []
        for _ in range(self.h):
            x, r = divmod(x, self.p)
            out.append(r)
        return out

    def _code(self, digits: Sequence[int]) -> int:
        return sum(d * w for d, w in zip(digits, self._pw))

    def _slow_mul(self, a: int, b: int) -> int:
        p, h = self.p, self.h
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * h - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        for d in range(2 * h - 2, h - 1, -1):
            c = prod[d] % p
            if c:
                for i, r in enumerate(self._red):
                    prod[d - h + i] += c * r
        return self._code([c % p for c in prod[:h]])

    def _slow_pow(self, a: int, n: int) -> int:
        result = 1
        while n:
            if n & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            n >>= 1
        return result

    def _find_generator(self) -> int:
        if self.q == 2:
            return 1
        primes = list(sympy.factorint(self.order))
        for c in range(2, self.q):
            if all(self._slow_pow(c, self.order // r) != 1 for r in primes):
                return c
        raise FieldError("no primitive element found")  # pragma: no cover

    def _build_tables(self) -> None:
        p, h, q, n = self.p, self.h, self.q, self.order
        pw = np.array(self._pw, dtype=np.int64)
        codes = np.arange(q, dtype=np.int64)
        D = (codes[:, None] // pw[None, :]) % p
        # row j: digits of x^j * g
        xj = [self._slow_mul(self._code([int(i == j) for i in range(h)]), self.generator) for j in range(h)]
        Mg = np.array([self.digits(c) for c in xj], dtype=np.int64)
        times_g = ((D @ Mg) % p) @ pw

        exp = np.zeros(n, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        tg = times_g.tolist()
        cur = 1
        for i in range(n):
            exp[i] = cur
            log[cur] = i
            cur = tg[cur]
        if cur != 1 or len(set(exp.tolist())) != n:
            raise FieldError("generator does not have full order")  # pragma: no cover

        plus_one = exp - (exp % p) + ((exp % p) + 1) % p
        zech = np.where(plus_one == 0, -1, log[plus_one])
        neg = (((-D) % p) @ pw)

        self._exp = np.concatenate([exp, exp])
        self._log = log
        self._zech = zech
        self._neg = neg
        self._exp_l = self._exp.tolist()
        self._log_l = log.tolist()
        self._zech_l = zech.tolist()
        self._neg_l = neg.tolist()
        self._digits = D

    # ------------------------------------------------------------------
    # arithmetic

    def add(self, a, b):
        if _is_scalar(a) and _is_scalar(b):
            a, b = int(a), int(b)
            if a == 0:
                return b
            if b == 0:
                return a
            if self.p == 2:
                return a ^ b
            la = self._log_l[a]
            z = self._zech_l[(self._log_l[b] - la) % self.order]
            return 0 if z < 0 else self._exp_l[la + z]
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % self.order]
        out = np.where(z < 0, 0, self._exp[la + np.maximum(z, 0)])
        return np.where(a == 0, b, np.where(b == 0, a, out))

    def neg(self, a):
        if _is_scalar(a):
            return self._neg_l[int(a)]
        return self._neg[np.asarray(a, dtype=np.int64)]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if _is_scalar(a) and _is_scalar(b):
            a, b = int(a), int(b)
            if a == 0 or b == 0:
                return 0
            return self._exp_l[self._log_l[a] + self._log_l[b]]
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        if _is_scalar(a):
            a = int(a)
            if a == 0:
                raise ZeroDivisionError("0 has no inverse")
            return self._exp_l[(self.order - self._log_l[a]) % self.order]
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[(self.order - self._log[a]) % self.order]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        k = int(k)
        if _is_scalar(a):
            a = int(a)
            if a == 0:
                if k < 0:
                    raise ZeroDivisionError("0 has no inverse")
                return 1 if k == 0 else 0
            return self._exp_l[(self._log_l[a] * k) % self.order]
        a = np.asarray(a, dtype=np.int64)
        if k < 0 and np.any(a == 0):
            raise ZeroDivisionError("0 has no inverse")
        out = self._exp[(self._log[a] * (k % self.order)) % self.order]
        if k == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, out)

    def frob(self, a, e: int):
        """``a ** (p ** e)``; ``e`` is taken modulo ``h``."""
        return self.pow(a, self.p ** (int(e) % self.h))

    def log(self, a: int) -> int:
        """Discrete logarithm with respect to :attr:`generator`."""
        a = int(a)
        if a == 0:
            raise FieldError("log of zero")
        return self._log_l[a]

    def exp(self, k: int) -> int:
        return self._exp_l[int(k) % self.order]

    def sum(self, values: Iterable[int]) -> int:
        return functools.reduce(self.add, values, 0)

    def prod(self, values: Iterable[int]) -> int:
        return functools.reduce(self.mul, values, 1)

    # ------------------------------------------------------------------
    # structure

    def elements(self) -> range:
        return range(self.q)

    def prime_element(self, c: int) -> int:
        """Code of the prime-field element ``c mod p``."""
        return int(c) % self.p

    def subfield(self, m: int) -> list[int]:
        """Codes of GF(p^m) inside this field: 0 first, then by discrete log."""
        if m < 1 or self.h % m:
            raise FieldError(f"{m} does not divide {self.h}")
        step = self.order // (self.p**m - 1)
        return [0] + [self._exp_l[j] for j in range(0, self.order, step)]

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise FieldError("element belongs to a different field")
            return value
        value = int(value)
        if not 0 <= value < self.q:
            raise FieldError(f"code {value} out of range for GF({self.q})")
        return FieldElement(self, value)

    @property
    def gen(self) -> "FieldElement":
        return FieldElement(self, self.generator)

    # ------------------------------------------------------------------
    # serialisation

    def serialize(self) -> str:
        return " ".join(str(c) for c in (self.p, self.h) + self.modulus)

    @classmethod
    def deserialize(cls, text: str) -> "GF":
        vals = [int(t) for t in text.split()]
        p, h, modulus = vals[0], vals[1], vals[2:]
        return field_create(p, h, modulus)

    def to_dict(self) -> dict:
        return {"p": self.p, "h": self.h, "modulus": list(self.modulus)}

    def element_digits(self, x: int) -> list[int]:
        """Digits of ``x`` with the highest power first."""
        return self.digits(int(x))[::-1]

    def from_digits(self, digits: Sequence[int]) -> int:
        digits = list(digits)
        if len(digits) != self.h or any(not 0 <= d < self.p for d in digits):
            raise FieldError(f"bad digit vector {digits} for GF({self.p}^{self.h})")
        return self._code(digits[::-1])

    def serialize_element(self, x: int) -> str:
        return " ".join(str(d) for d in self.element_digits(x))

    def deserialize_element(self, text: str) -> int:
        return self.from_digits([int(t) for t in text.split()])

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.h}, modulus={list(self.modulus)})"


@functools.lru_cache(maxsize=None)
def _field_cached(p: int, h: int, modulus: tuple[int, ...] | None) -> GF:
    return GF(p, h, modulus)


def field_create(p: int, h: int, modulus: Sequence[int] | None = None) -> GF:
    """Return the (cached) field GF(p^h).

    The same ``(p, h, modulus)`` always yields the same object, so elements
    from repeated calls are interoperable.
    """
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
        if h >= 1 and sympy.isprime(p):
            modulus = tuple(c % p for c in modulus)
            if modulus == smallest_irreducible(p, h):
                modulus = None
    return _field_cached(int(p), int(h), modulus)


@dataclass(frozen=True)
class FieldElement:
    """An element of a :class:`GF` instance, with operator overloading."""

    field: GF
    value: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldError("elements of different fields")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.field.prime_element(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.div(o, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == self.field.prime_element(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.value))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Power-basis coordinates, constant term first."""
        return tuple(self.field.digits(self.value))

    def order(self) -> int:
        if self.value == 0:
            raise FieldError("0 has no multiplicative order")
        n = self.field.order
        return n // np.gcd(n, self.field.log(self.value)).item()

    def __repr__(self) -> str:
        return f"FieldElement({self.field.serialize_element(self.value)} in GF({self.field.q}))"


def frobenius(x: FieldElement, e: int) -> FieldElement:
    """Return ``x ** (p ** e)``; ``e`` is reduced modulo ``h``."""
    return FieldElement(x.field, x.field.frob(x.value, e))


def nth_root(x: FieldElement, d: int) -> FieldElement:
    """A ``d``-th root of ``x``, the one with the smallest discrete log.

    Raises :class:`NoRootError` when ``x`` is not a ``d``-th power.  Zero
    is its own root.
    """
    F = x.field
    if d < 1:
        raise FieldError("root index must be positive")
    if x.value == 0:
        return x
    return FieldElement(F, _nth_root_code(F, x.value, d))


def _nth_root_code(F: GF, x: int, d: int) -> int:
    n = F.order
    L = F.log(x)
    g = int(np.gcd(d, n))
    if L % g:
        raise NoRootError(f"{F.serialize_element(x)} is not a {d}-th power in GF({F.q})")
    m = n // g
    j = (L // g) * pow(d // g, -1, m) % m if m > 1 else 0
    return F.exp(j)


def find_alpha(F: GF, e_prime: int) -> FieldElement:
    """An element with ``alpha ** (p**e' + 1) != 1``: the field generator."""
    if (p_e := F.p**e_prime + 1) % F.order == 0:
        raise FieldError(f"q-1={F.order} divides p^{e_prime}+1={p_e}: every alpha^(p^e'+1) is 1")
    return F.gen


def in_subfield(x: FieldElement, m: int) -> bool:
    """True iff ``x`` lies in GF(p^m), i.e. is fixed by ``x -> x^(p^m)``."""
    F = x.field
    if m < 1 or F.h % m:
        raise FieldError(f"{m} does not divide {F.h}")
    return F.frob(x.value, m) == x.value
