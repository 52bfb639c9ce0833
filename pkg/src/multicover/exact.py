"""Exact scalar arithmetic for equivariant weight computations.

Every quantity in the fixed-point sums is one of three things:

* an arbitrary-precision rational (``fractions.Fraction``),
* a single Laurent monomial ``c * a^k`` in the equivariant parameter ``a``
  (``k`` may be negative),
* a nilpotent pair ``u + v*psi`` with ``psi**2 == 0``, used while a
  one-dimensional family contribution is still waiting to be integrated.

The module also implements the factored-rational text format used by the
shipped results table (e.g. ``-1/(2^3*5^2)``), together with the integer
factorization needed to emit it.  No floating point anywhere.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

__all__ = [
    "Rational",
    "AlphaMonomial",
    "PsiLinear",
    "FactoredRational",
    "FactoredFormatError",
    "mono_mul",
    "alpha_flip",
    "format_factored",
    "parse_factored",
    "factorize",
    "is_prime",
]

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class AlphaMonomial:
    """``coeff * a^power`` with an exact rational coefficient.

    The zero monomial is canonicalized to power 0 so equality works.
    """

    coeff: Fraction
    power: int = 0

    def __post_init__(self):
        coeff = self.coeff if isinstance(self.coeff, Fraction) else Fraction(self.coeff)
        power = self.power
        if coeff == 0:
            coeff, power = _ZERO, 0
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "power", int(power))

    def __bool__(self) -> bool:
        return self.coeff != 0

    def __mul__(self, other: "AlphaMonomial") -> "AlphaMonomial":
        if isinstance(other, (int, Fraction)):
            return AlphaMonomial(self.coeff * other, self.power)
        return AlphaMonomial(self.coeff * other.coeff, self.power + other.power)

    __rmul__ = __mul__

    def __neg__(self) -> "AlphaMonomial":
        return AlphaMonomial(-self.coeff, self.power)

    def __add__(self, other: "AlphaMonomial") -> "AlphaMonomial":
        # Monomials only close under addition at equal powers; zero absorbs.
        if not other:
            return self
        if not self:
            return other
        if self.power != other.power:
            raise ValueError(
                f"cannot add monomials of powers {self.power} and {other.power}"
            )
        return AlphaMonomial(self.coeff + other.coeff, self.power)

    def flip(self) -> "AlphaMonomial":
        """Substitute a -> -a, i.e. multiply the coefficient by (-1)^power."""
        if self.power % 2:
            return AlphaMonomial(-self.coeff, self.power)
        return self

    def __str__(self) -> str:
        return f"{self.coeff}*a^{self.power}"


MONO_ZERO = AlphaMonomial(_ZERO, 0)
MONO_ONE = AlphaMonomial(_ONE, 0)


def mono_mul(a: AlphaMonomial, b: AlphaMonomial) -> AlphaMonomial:
    """Product of two monomials: coefficients multiply, powers add."""
    return a * b


@dataclass(frozen=True)
class PsiLinear:
    """``const + psi * psi_part`` where ``psi**2 == 0``."""

    const: AlphaMonomial = MONO_ZERO
    psi: AlphaMonomial = MONO_ZERO

    def __bool__(self) -> bool:
        return bool(self.const) or bool(self.psi)

    def __mul__(self, other: "PsiLinear") -> "PsiLinear":
        if isinstance(other, AlphaMonomial):
            other = PsiLinear(other)
        return PsiLinear(
            self.const * other.const,
            self.const * other.psi + self.psi * other.const,
        )

    __rmul__ = __mul__

    def __add__(self, other: "PsiLinear") -> "PsiLinear":
        return PsiLinear(self.const + other.const, self.psi + other.psi)

    def flip(self) -> "PsiLinear":
        return PsiLinear(self.const.flip(), self.psi.flip())

    def __str__(self) -> str:
        if not self.psi:
            return str(self.const)
        return f"({self.const}) + psi*({self.psi})"


def alpha_flip(x):
    """Apply a -> -a: each monomial c*a^k becomes (-1)^k * c * a^k.

    Works on monomials and on psi-linear pairs; an involution and a ring
    homomorphism in either case.
    """
    return x.flip()


# ---------------------------------------------------------------------------
# integer factorization
# ---------------------------------------------------------------------------

def _small_primes(limit: int) -> list:
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(limit) if sieve[i]]

_TRIAL_PRIMES = _small_primes(10_000)

# Smallest composite passing Miller-Rabin for the first 12 prime bases.
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_BASES_WIDE = tuple(_TRIAL_PRIMES[:25])


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test, deterministic for n < ~3.3e24."""
    if n < 2:
        return False
    for p in _TRIAL_PRIMES[:60]:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES if n < _MR_DETERMINISTIC_BOUND else _MR_BASES_WIDE
    for a in bases:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of composite odd n (Brent's cycle variant)."""
    rng = random.Random(n)  # deterministic per input
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _int_nth_root(n: int, e: int) -> int:
    """Floor of the e-th root of n, by integer Newton iteration."""
    if n < (1 << e):
        return 1
    x = 1 << ((n.bit_length() + e - 1) // e)
    while True:
        y = ((e - 1) * x + n // x ** (e - 1)) // e
        if y >= x:
            return x
        x = y


def _perfect_power(n: int):
    """Return (root, e) with root**e == n and e maximal (e == 1 if none)."""
    for e in range(n.bit_length(), 1, -1):
        root = _int_nth_root(n, e)
        if root > 1 and root**e == n:
            return root, e
    return n, 1


def _factor_into(n: int, out: dict) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    root, e = _perfect_power(n)
    if e > 1:
        sub: dict = {}
        _factor_into(root, sub)
        for p, m in sub.items():
            out[p] = out.get(p, 0) + m * e
        return
    d = _pollard_brent(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


def factorize(n: int) -> list:
    """Prime factorization of n >= 1 as a sorted list of (prime, exponent).

    Trial division by small primes first; larger cofactors are split with
    perfect-power extraction and Pollard rho, with Miller-Rabin certifying
    the prime pieces.  Exact for everything this package produces (prime
    factors up to ~1e17); cryptographic-scale semiprimes are out of scope.
    """
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict = {}
    for p in _TRIAL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        _factor_into(n, out)
    return sorted(out.items())


# ---------------------------------------------------------------------------
# factored-rational text format
# ---------------------------------------------------------------------------

class FactoredFormatError(ValueError):
    """Raised when factored-rational text does not conform to the grammar."""


@dataclass(frozen=True)
class FactoredRational:
    """A nonzero rational as sign and prime-power factor lists.

    Invariants: all bases prime and strictly ascending within each list,
    exponents >= 1, no base shared between numerator and denominator.
    An empty list denotes 1.
    """

    sign: int
    numerator_factors: tuple
    denominator_factors: tuple

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        for name, factors in (
            ("numerator", self.numerator_factors),
            ("denominator", self.denominator_factors),
        ):
            prev = 1
            for p, e in factors:
                if not is_prime(p):
                    raise ValueError(f"{name} base {p} is not prime")
                if e < 1:
                    raise ValueError(f"{name} exponent for {p} must be >= 1")
                if p <= prev:
                    raise ValueError(f"{name} primes not strictly ascending at {p}")
                prev = p
        shared = {p for p, _ in self.numerator_factors} & {
            p for p, _ in self.denominator_factors
        }
        if shared:
            raise ValueError(f"base {min(shared)} appears in both products")

    @classmethod
    def from_rational(cls, q: Fraction) -> "FactoredRational":
        if q == 0:
            raise ValueError("zero has no factored form")
        return cls(
            1 if q > 0 else -1,
            tuple(factorize(abs(q.numerator))),
            tuple(factorize(q.denominator)),
        )

    def value(self) -> Fraction:
        num = math.prod(p**e for p, e in self.numerator_factors)
        den = math.prod(p**e for p, e in self.denominator_factors)
        return Fraction(self.sign * num, den)

    def text(self) -> str:
        """Canonical form: ascending primes, ``*`` separators, denominator
        always parenthesized, multi-factor numerators parenthesized, bare
        ``1`` for unity."""
        num = _product_text(self.numerator_factors)
        sign = "-" if self.sign < 0 else ""
        if not self.denominator_factors:
            return sign + num
        if len(self.numerator_factors) > 1:
            num = f"({num})"
        return f"{sign}{num}/({_product_text(self.denominator_factors)})"

    @classmethod
    def from_text(cls, s: str) -> "FactoredRational":
        return _parse_factored_text(s)


def _product_text(factors: Iterable) -> str:
    parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in factors]
    return "*".join(parts) if parts else "1"


def format_factored(q: Fraction) -> str:
    """Render a nonzero rational in the factored grammar, e.g. -1/200 ->
    ``-1/(2^3*5^2)``."""
    return FactoredRational.from_rational(q).text()


def _parse_int(token: str, what: str) -> int:
    if not token or not token.isdigit() or (token[0] == "0" and token != "0"):
        raise FactoredFormatError(f"malformed {what} {token!r}")
    return int(token)


def _parse_product(text: str) -> tuple:
    if text == "1":
        return ()
    if not text:
        raise FactoredFormatError("empty product")
    factors = []
    prev = 1
    for token in text.split("*"):
        base_text, sep, exp_text = token.partition("^")
        base = _parse_int(base_text, "base")
        exp = _parse_int(exp_text, "exponent") if sep else 1
        if exp == 0:
            raise FactoredFormatError(f"zero exponent in {token!r}")
        if not is_prime(base):
            raise FactoredFormatError(f"base {base_text!r} is not prime")
        if base <= prev:
            raise FactoredFormatError(f"primes out of order at {token!r}")
        prev = base
        factors.append((base, exp))
    return tuple(factors)


def _parse_factored_text(s: str) -> FactoredRational:
    if not s or any(ch.isspace() for ch in s):
        raise FactoredFormatError(f"malformed value {s!r}")
    body = s
    sign = 1
    if body.startswith("-"):
        sign, body = -1, body[1:]
    num_text, slash, den_text = body.partition("/")
    if slash:
        if not (den_text.startswith("(") and den_text.endswith(")")):
            raise FactoredFormatError(f"denominator {den_text!r} must be parenthesized")
        den_text = den_text[1:-1]
        if num_text.startswith("(") and num_text.endswith(")"):
            num_text = num_text[1:-1]
    elif "(" in num_text or ")" in num_text:
        raise FactoredFormatError(f"unexpected parentheses in {s!r}")
    num = _parse_product(num_text)
    den = _parse_product(den_text) if slash else ()
    try:
        return FactoredRational(sign, num, den)
    except ValueError as exc:
        raise FactoredFormatError(str(exc)) from exc


def parse_factored(s: str) -> Fraction:
    """Inverse of :func:`format_factored` (accepts the full grammar)."""
    return _parse_factored_text(s).value()
