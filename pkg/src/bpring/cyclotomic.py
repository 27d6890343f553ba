"""Exact arithmetic in the cyclotomic field Q(zeta_p), p prime.

Elements are stored on the power basis 1, zeta, ..., zeta^(p-1) with the
canonical normalisation coeffs[p-1] == 0, obtained by subtracting the top
coefficient from every entry (legal because 1 + zeta + ... + zeta^(p-1) = 0).
Equality of canonical forms is plain componentwise comparison.
"""

from __future__ import annotations

from fractions import Fraction

# Exact rational scalar used throughout the engine.
Rational = Fraction

_SMALL_PRIMES = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n in _SMALL_PRIMES:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")


def _canonical(p: int, raw: list[Fraction]) -> tuple[Fraction, ...]:
    top = raw[p - 1]
    if top == 0:
        return tuple(raw)
    return tuple(c - top for c in raw)


class CyclotomicScalar:
    """An element of Q(zeta_p) with exact rational coefficients."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs):
        require_prime(p)
        raw = [Fraction(c) for c in coeffs]
        if len(raw) != p:
            raise ValueError(f"need {p} coefficients, got {len(raw)}")
        self.p = p
        self.coeffs = _canonical(p, raw)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "CyclotomicScalar":
        return cls(p, [0] * p)

    @classmethod
    def one(cls, p: int) -> "CyclotomicScalar":
        return cls.from_rational(p, 1)

    @classmethod
    def from_rational(cls, p: int, value) -> "CyclotomicScalar":
        coeffs = [Fraction(value)] + [Fraction(0)] * (p - 1)
        return cls(p, coeffs)

    # -- ring structure ----------------------------------------------------

    def _check_compatible(self, other: "CyclotomicScalar") -> None:
        if not isinstance(other, CyclotomicScalar):
            raise TypeError(f"expected CyclotomicScalar, got {type(other).__name__}")
        if self.p != other.p:
            raise ValueError(f"mismatched primes {self.p} and {other.p}")

    def __add__(self, other):
        self._check_compatible(other)
        return CyclotomicScalar(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check_compatible(other)
        return CyclotomicScalar(self.p, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return CyclotomicScalar(self.p, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_compatible(other)
        p = self.p
        raw = [Fraction(0)] * p
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                raw[(i + j) % p] += a * b
        return CyclotomicScalar(p, raw)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, factor) -> "CyclotomicScalar":
        f = Fraction(factor)
        return CyclotomicScalar(self.p, [a * f for a in self.coeffs])

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = CyclotomicScalar.one(self.p)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- field structure ---------------------------------------------------

    def galois(self, k: int) -> "CyclotomicScalar":
        """Apply the automorphism zeta -> zeta^k, gcd(k, p) = 1."""
        p = self.p
        raw = [Fraction(0)] * p
        for i, a in enumerate(self.coeffs):
            raw[(i * k) % p] += a
        return CyclotomicScalar(p, raw)

    def inv(self) -> "CyclotomicScalar":
        p = self.p
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_p)")
        # x^-1 = (prod of nontrivial conjugates) / norm; the norm is rational.
        cofactor = CyclotomicScalar.one(p)
        for k in range(2, p):
            cofactor = cofactor * self.galois(k)
        norm = self * cofactor
        if any(c != 0 for c in norm.coeffs[1:]):
            raise ArithmeticError("norm computation produced a non-rational value")
        return cofactor.scale(Fraction(1, 1) / norm.coeffs[0])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1, 1) / Fraction(other))
        self._check_compatible(other)
        return self * other.inv()

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclotomicScalar):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*z" if c != 1 else "z")
            else:
                terms.append(f"{c}*z^{i}" if c != 1 else f"z^{i}")
        body = " + ".join(terms) if terms else "0"
        return f"Cyc(p={self.p}: {body})"


def root_of_unity(p: int, k: int) -> CyclotomicScalar:
    """zeta_p^k in canonical form."""
    require_prime(p)
    coeffs = [Fraction(0)] * p
    coeffs[k % p] = Fraction(1)
    return CyclotomicScalar(p, coeffs)


def phase_exponent(x: CyclotomicScalar) -> int | None:
    """Return k with x == zeta^k exactly, or None if x is not a root of unity."""
    for k in range(x.p):
        if x == root_of_unity(x.p, k):
            return k
    return None
