"""Galois ring arithmetic.

A Galois ring GR(p^r, s) is realized as Z_{p^r}[x]/(f) where f is the
lexicographically smallest monic degree-s polynomial over F_p that is
primitive (its root generates the multiplicative group of F_{p^s}),
lifted coefficient-by-coefficient into Z_{p^r}.  Elements are stored as
coefficient tuples, lowest degree first, entries reduced into [0, p^r).

The class of x need not itself be a root of unity once lifted, so the
canonical Teichmuller generator xi is obtained by iterating t -> t^(p^s)
on the class of x; xi has exact multiplicative order p^s - 1 and every
element has a unique expansion sum(a_i * p^i) with Teichmuller digits a_i.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache

from .errors import BoundExceededError, DomainError, InternalInvariantError
from .numth import factorize, is_prime

# discrete logs in the Teichmuller set are done with a lookup table over
# the residue field; refuse to build absurdly large ones
_MAX_DLOG_TABLE = 1 << 21


def _poly_mul_mod(a: tuple[int, ...], b: tuple[int, ...], modulus: tuple[int, ...], m: int) -> tuple[int, ...]:
    """Product of two reduced coefficient tuples modulo a monic polynomial."""
    s = len(modulus) - 1
    t = [0] * (2 * s - 1) if s > 1 else [0]
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    t[i + j] = (t[i + j] + ai * bj) % m
    for i in range(len(t) - 1, s - 1, -1):
        c = t[i]
        if c:
            t[i] = 0
            for j in range(s):
                if modulus[j]:
                    t[i - s + j] = (t[i - s + j] - c * modulus[j]) % m
    return tuple(t[:s])


def _poly_reduce(t: list[int], modulus: tuple[int, ...], m: int) -> tuple[int, ...]:
    s = len(modulus) - 1
    t = [c % m for c in t]
    for i in range(len(t) - 1, s - 1, -1):
        c = t[i]
        if c:
            t[i] = 0
            for j in range(s):
                t[i - s + j] = (t[i - s + j] - c * modulus[j]) % m
    t = t[:s] + [0] * (s - len(t))
    return tuple(t[:s])


def _poly_pow_mod(base: tuple[int, ...], e: int, modulus: tuple[int, ...], m: int) -> tuple[int, ...]:
    s = len(modulus) - 1
    acc = tuple([1] + [0] * (s - 1))
    while e:
        if e & 1:
            acc = _poly_mul_mod(acc, base, modulus, m)
        base = _poly_mul_mod(base, base, modulus, m)
        e >>= 1
    return acc


def _x_has_full_order(modulus: tuple[int, ...], p: int, s: int, prime_divs: tuple[int, ...]) -> bool:
    """True when the class of x modulo (modulus, p) has order exactly p^s - 1."""
    target = p**s - 1
    x = _poly_reduce([0, 1] if s >= 1 else [0], modulus, p)
    one = tuple([1] + [0] * (s - 1))
    if _poly_pow_mod(x, target, modulus, p) != one:
        return False
    for q in prime_divs:
        if _poly_pow_mod(x, target // q, modulus, p) == one:
            return False
    return True


@lru_cache(maxsize=None)
def _primitive_polynomial(p: int, s: int) -> tuple[int, ...]:
    """Lexicographically smallest monic primitive degree-s polynomial over F_p.

    A monic f of degree s with f(0) != 0 is primitive iff x has order
    p^s - 1 modulo (f, p): any factorization would force the order of x
    below p^s - 1, so no separate irreducibility test is needed.
    """
    prime_divs = tuple(q for q, _ in factorize(p**s - 1)) if p**s > 2 else ()
    for tail in itertools.product(range(p), repeat=s):
        if tail[0] == 0:
            continue
        modulus = tail + (1,)
        if _x_has_full_order(modulus, p, s, prime_divs):
            return modulus
    raise InternalInvariantError(f"no primitive polynomial of degree {s} over F_{p}")


class GaloisRingSpec:
    """Immutable description of GR(p^r, s) plus cached arithmetic data."""

    __slots__ = ("p", "r", "s", "modulus", "char", "size", "residue_size",
                 "_xi", "_dlog", "__weakref__")

    def __init__(self, p: int, r: int, s: int, modulus: tuple[int, ...]):
        self.p = p
        self.r = r
        self.s = s
        self.modulus = modulus
        self.char = p**r
        self.size = p ** (r * s)
        self.residue_size = p**s
        self._xi: GaloisRingElement | None = None
        self._dlog: dict[tuple[int, ...], int] | None = None

    def __repr__(self) -> str:
        return ring_name(self)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GaloisRingSpec)
                and (self.p, self.r, self.s) == (other.p, other.r, other.s))

    def __hash__(self) -> int:
        return hash((self.p, self.r, self.s))

    def element(self, coeffs) -> GaloisRingElement:
        cs = tuple(int(c) % self.char for c in coeffs)
        if len(cs) != self.s:
            raise DomainError(f"expected {self.s} coefficients, got {len(cs)}")
        return GaloisRingElement(self, cs)

    def zero(self) -> GaloisRingElement:
        return GaloisRingElement(self, (0,) * self.s)

    def one(self) -> GaloisRingElement:
        return GaloisRingElement(self, (1,) + (0,) * (self.s - 1))

    def from_int(self, scalar: int) -> GaloisRingElement:
        return GaloisRingElement(self, (scalar % self.char,) + (0,) * (self.s - 1))

    def from_index(self, index: int) -> GaloisRingElement:
        """Inverse of GaloisRingElement.index(): base-p^r digit expansion."""
        m = self.char
        cs = []
        for _ in range(self.s):
            cs.append(index % m)
            index //= m
        return GaloisRingElement(self, tuple(cs))

    def elements(self):
        """Iterate the whole ring in index order (exhaustive; small rings only)."""
        for index in range(self.size):
            yield self.from_index(index)

    @property
    def xi(self) -> GaloisRingElement:
        """Canonical Teichmuller generator: the lift of the class of x."""
        if self._xi is None:
            x = self.element((0, 1) + (0,) * (self.s - 2)) if self.s > 1 else \
                self.element((-self.modulus[0],))
            self._xi = teichmuller_lift(x)
        return self._xi

    def dlog(self, t: GaloisRingElement) -> int:
        """Discrete log of a nonzero Teichmuller element with respect to xi."""
        if self._dlog is None:
            if self.residue_size > _MAX_DLOG_TABLE:
                raise BoundExceededError(
                    f"discrete-log table for {ring_name(self)} would need "
                    f"{self.residue_size} entries")
            table = {}
            acc = self.one()
            for e in range(self.residue_size - 1):
                table[acc.residue()] = e
                acc = acc * self.xi
            self._dlog = table
        try:
            return self._dlog[t.residue()]
        except KeyError:
            raise InternalInvariantError(f"{t} is not a unit Teichmuller element") from None


class GaloisRingElement:
    """One element of a fixed GR(p^r, s); immutable coefficient tuple."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: GaloisRingSpec, coeffs: tuple[int, ...]):
        self.spec = spec
        self.coeffs = coeffs

    def _coerce(self, other) -> "GaloisRingElement":
        if isinstance(other, GaloisRingElement):
            if other.spec != self.spec:
                raise DomainError(f"mixed rings: {self.spec} vs {other.spec}")
            return other
        if isinstance(other, int):
            return self.spec.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        m = self.spec.char
        return GaloisRingElement(self.spec, tuple((a + b) % m for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        m = self.spec.char
        return GaloisRingElement(self.spec, tuple((a - b) % m for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        m = self.spec.char
        return GaloisRingElement(self.spec, tuple(-a % m for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            m = self.spec.char
            k = other % m
            return GaloisRingElement(self.spec, tuple(a * k % m for a in self.coeffs))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaloisRingElement(
            self.spec, _poly_mul_mod(self.coeffs, o.coeffs, self.spec.modulus, self.spec.char))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative powers are not defined here")
        spec = self.spec
        acc = spec.one()
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GaloisRingElement)
                and self.spec == other.spec and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.spec, self.coeffs))

    def __repr__(self) -> str:
        return f"<{element_text(self)} in {ring_name(self.spec)}>"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_unit(self) -> bool:
        p = self.spec.p
        return any(c % p for c in self.coeffs)

    def residue(self) -> tuple[int, ...]:
        """Image in the residue field F_{p^s}, as a coefficient tuple mod p."""
        p = self.spec.p
        return tuple(c % p for c in self.coeffs)

    def index(self) -> int:
        """Integer encoding: coefficient digits in base p^r, low digit first."""
        m = self.spec.char
        out = 0
        for c in reversed(self.coeffs):
            out = out * m + c
        return out


def teichmuller_lift(a: GaloisRingElement) -> GaloisRingElement:
    """The unique Teichmuller element congruent to a modulo p.

    Iterating t -> t^(p^s) gains one p-adic digit of stability per step,
    so exactly r - 1 iterations suffice.
    """
    spec = a.spec
    for _ in range(spec.r - 1):
        a = a ** spec.residue_size
    return a


def teichmuller_digits(a: GaloisRingElement) -> tuple[GaloisRingElement, ...]:
    """Digits (a_0, ..., a_{r-1}) with a = sum(a_i * p^i), each a Teichmuller element.

    Digits are peeled low to high: a_0 is the lift of a mod p and the
    recursion continues on (a - a_0) / p.
    """
    spec = a.spec
    p = spec.p
    digits = []
    cur = a
    for _ in range(spec.r):
        d = teichmuller_lift(cur)
        digits.append(d)
        m = spec.char
        cur = GaloisRingElement(spec, tuple(((x - y) % m) // p for x, y in zip(cur.coeffs, d.coeffs)))
    return tuple(digits)


def from_teichmuller_digits(spec: GaloisRingSpec, digits) -> GaloisRingElement:
    acc = spec.zero()
    for i, d in enumerate(digits):
        acc = acc + d * spec.p**i
    return acc


def generalized_frobenius(a: GaloisRingElement, k: int) -> GaloisRingElement:
    """Apply the digit-wise power map a_i -> a_i^(p^k); a ring automorphism.

    k is taken modulo s (digit orders divide p^s - 1), so negative k means
    the inverse automorphism.  k = 0 (mod s) is the identity.
    """
    spec = a.spec
    k %= spec.s
    if k == 0:
        return a
    e = spec.p**k
    return from_teichmuller_digits(spec, [d**e for d in teichmuller_digits(a)])


@lru_cache(maxsize=None)
def construct_ring(p: int, r: int, s: int) -> GaloisRingSpec:
    """Build (and cache) the canonical GR(p^r, s)."""
    if not is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    if r < 1 or s < 1:
        raise DomainError(f"need r >= 1 and s >= 1, got r = {r}, s = {s}")
    base = _primitive_polynomial(p, s)
    return GaloisRingSpec(p, r, s, base)


_EMBED_EXPONENT: dict = {}


def _embedding_exponent(src: GaloisRingSpec, target: GaloisRingSpec) -> int:
    """Smallest j such that xi_target^(j*K), K = (q2-1)/(q1-1), is a root of
    the source modulus mod p.  That element is where a ring homomorphism must
    send xi_src: the candidate K-th powers exhaust the subgroup of order
    q1 - 1, but only the conjugates of xi_src among them extend to a
    homomorphism, and the plain j = 1 choice usually is not one."""
    key = (src.p, src.r, src.s, target.s)
    if key not in _EMBED_EXPONENT:
        step = (target.residue_size - 1) // (src.residue_size - 1)
        base = target.xi ** step
        cand = target.one()
        for j in range(src.residue_size - 1):
            if j:
                cand = cand * base
            acc = target.zero()
            for c in reversed(src.modulus):
                acc = acc * cand + target.from_int(c)
            if all(d % src.p == 0 for d in acc.coeffs):
                _EMBED_EXPONENT[key] = j
                break
        else:
            raise InternalInvariantError(
                f"no conjugate of the degree-{src.s} generator in {target}")
    return _EMBED_EXPONENT[key]


def embed(a: GaloisRingElement, target: GaloisRingSpec) -> GaloisRingElement:
    """Canonical embedding GR(p^r, d) -> GR(p^r, D) for d | D.

    Determined on Teichmuller generators by xi_d -> xi_D^(j*(p^D-1)/(p^d-1))
    for the smallest j making the image a conjugate of xi_d, then extended
    digit-wise over the p-adic expansion.
    """
    src = a.spec
    if (src.p, src.r) != (target.p, target.r):
        raise DomainError(f"incompatible rings {src} -> {target}")
    if target.s % src.s:
        raise DomainError(f"degree {src.s} does not divide {target.s}")
    if src == target:
        return a
    step = (target.residue_size - 1) // (src.residue_size - 1)
    step *= _embedding_exponent(src, target)
    out = []
    for d in teichmuller_digits(a):
        if d.is_zero():
            out.append(target.zero())
        else:
            out.append(target.xi ** (src.dlog(d) * step))
    return from_teichmuller_digits(target, out)


def unembed(a: GaloisRingElement, target: GaloisRingSpec) -> GaloisRingElement:
    """Inverse of embed on its image; raises if a is outside the subring."""
    big = a.spec
    if (big.p, big.r) != (target.p, target.r):
        raise DomainError(f"incompatible rings {big} -> {target}")
    if big.s % target.s:
        raise DomainError(f"degree {target.s} does not divide {big.s}")
    if big == target:
        return a
    step = (big.residue_size - 1) // (target.residue_size - 1)
    order = target.residue_size - 1
    jinv = pow(_embedding_exponent(target, big), -1, order) if order > 1 else 0
    out = []
    for d in teichmuller_digits(a):
        if d.is_zero():
            out.append(target.zero())
        else:
            e = big.dlog(d)
            if e % step:
                raise InternalInvariantError(
                    f"element is not in the degree-{target.s} subring of {big}")
            out.append(target.xi ** (e // step * jinv % order if order > 1 else 0))
    return from_teichmuller_digits(target, out)


def root_of_unity(spec: GaloisRingSpec, order: int) -> GaloisRingElement:
    """The canonical root of unity of exact multiplicative order `order`."""
    if order < 1:
        raise DomainError(f"order must be positive, got {order}")
    if (spec.residue_size - 1) % order:
        raise DomainError(f"{order} does not divide {spec.residue_size - 1}")
    return spec.xi ** ((spec.residue_size - 1) // order)


# -- text formats ------------------------------------------------------------

_RING_RE = re.compile(r"^GR\((\d+)\^(\d+),(\d+)\)$")


def ring_name(spec: GaloisRingSpec) -> str:
    return f"GR({spec.p}^{spec.r},{spec.s})"


def parse_ring_name(text: str) -> GaloisRingSpec:
    m = _RING_RE.match(text.strip())
    if not m:
        raise DomainError(f"cannot parse ring name {text!r}; expected GR(p^r,s)")
    p, r, s = (int(g) for g in m.groups())
    return construct_ring(p, r, s)


def element_text(a: GaloisRingElement) -> str:
    """Comma-separated coefficients, lowest degree first, e.g. '3,1'."""
    return ",".join(str(c) for c in a.coeffs)


def parse_element(spec: GaloisRingSpec, text: str) -> GaloisRingElement:
    parts = text.strip().split(",")
    if len(parts) != spec.s:
        raise DomainError(f"expected {spec.s} coefficients in {text!r}")
    try:
        return spec.element(int(c) for c in parts)
    except ValueError as exc:
        raise DomainError(f"bad element text {text!r}: {exc}") from None


def modulus_text(spec: GaloisRingSpec) -> str:
    """Human-readable modulus polynomial, highest degree first."""
    terms = []
    for i in range(spec.s, -1, -1):
        c = spec.modulus[i] if i < len(spec.modulus) else 0
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            xpow = "x" if i == 1 else f"x^{i}"
            terms.append(xpow if c == 1 else f"{c}{xpow}")
    return " + ".join(terms) if terms else "0"
