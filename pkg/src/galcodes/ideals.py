"""Abelian codes as explicit ideals of GR(p^r, s)[G], exhaustively.

An element is flattened to a vector of s*|G| coefficient digits mod p^r
(blocks of s per group element, groups in lexicographic order).  The ideal
generated by v is the span over Z_{p^r} of {x^j * Y^g * v}, since the
powers of the residue generator form a module basis of the coefficient
ring; each ideal is held in Howell normal form, the canonical echelon form
over Z_{p^r}, so ideal identity is basis identity and the module size
falls out of the pivot valuations.

Everything here walks all p^(r*s*|G|) ring elements at some point, so the
engine refuses rings larger than the exhaustive bound (environment
variable GALCODES_MAX_RING_SIZE, default 2^16).

Also hosts the two constructive results: a self-dual code built whenever
the existence criterion allows one, and the componentwise enumeration of
self-dual codes when |G| is coprime to p.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .errors import BoundExceededError, DomainError, InternalInvariantError
from .galois import GaloisRingSpec, construct_ring, generalized_frobenius
from .groups import AbelianGroup, sylow_decompose
from .group_ring import (AmbientDecomposition, DecomposedElement, GroupRing,
                         GroupRingElement, ambient, compose, compose_nested,
                         sylow_merge)

DEFAULT_BOUND = 1 << 16
BOUND_ENV_VAR = "GALCODES_MAX_RING_SIZE"

EUCLIDEAN = "euclidean"
HERMITIAN = "hermitian"


def exhaustive_bound() -> int:
    raw = os.environ.get(BOUND_ENV_VAR)
    if raw is None:
        return DEFAULT_BOUND
    try:
        val = int(raw)
    except ValueError:
        raise DomainError(f"{BOUND_ENV_VAR}={raw!r} is not an integer") from None
    if val < 1:
        raise DomainError(f"{BOUND_ENV_VAR} must be positive, got {val}")
    return val


def _validate_form(form: str, s: int) -> None:
    if form not in (EUCLIDEAN, HERMITIAN):
        raise DomainError(f"unknown form {form!r}")
    if form == HERMITIAN and s % 2:
        raise DomainError("Hermitian form needs even degree s")


class ExhaustiveGroupRing:
    """Flat-vector arithmetic for one group ring small enough to enumerate."""

    def __init__(self, ring: GroupRing, bound: int | None = None):
        spec = ring.coeff
        if not isinstance(spec, GaloisRingSpec):
            raise DomainError("exhaustive engine needs Galois-ring coefficients")
        self.ring = ring
        self.spec = spec
        self.group = ring.group
        self.s = spec.s
        self.p = spec.p
        self.r = spec.r
        self.m = spec.char
        self.n = spec.s * self.group.order
        self.ring_size = self.m**self.n
        limit = exhaustive_bound() if bound is None else bound
        if self.ring_size > limit:
            raise BoundExceededError(
                f"|ring| = {self.ring_size} exceeds the exhaustive bound {limit}")
        self._group_index = {g: i for i, g in enumerate(self.group.elements())}
        self._perms = self._shift_permutations()
        self._ppow = [self.p**i for i in range(self.r + 1)]
        self._unit_inv = {u: pow(u, -1, self.m)
                          for u in range(1, self.m) if u % self.p}
        # x^s = -(low coefficients of the modulus)
        self._xtail = tuple(-c % self.m for c in spec.modulus[:-1])
        self._xpow_blocks = self._residue_generator_powers()
        self._conj_blocks = None
        if self.s % 2 == 0:
            self._conj_blocks = tuple(
                generalized_frobenius(spec.element(b), self.s // 2).coeffs
                for b in self._xpow_blocks)

    def __repr__(self) -> str:
        return f"ExhaustiveGroupRing({self.ring!r})"

    def _shift_permutations(self) -> tuple[tuple[int, ...], ...]:
        elems = self.group.elements()
        s = self.s
        perms = []
        for g in elems:
            perm = [0] * self.n
            for i, h in enumerate(elems):
                target = self._group_index[self.group.add(h, g)]
                for j in range(s):
                    perm[target * s + j] = i * s + j
            perms.append(tuple(perm))
        return tuple(perms)

    def _residue_generator_powers(self) -> tuple[tuple[int, ...], ...]:
        out = [tuple(1 if j == k else 0 for j in range(self.s)) for k in range(self.s)]
        return tuple(out)

    # -- element <-> vector ---------------------------------------------------

    def to_vector(self, x: GroupRingElement) -> tuple[int, ...]:
        if x.ring != self.ring:
            raise DomainError("element belongs to a different ring")
        vec = [0] * self.n
        s = self.s
        for g, c in x.coeffs.items():
            base = self._group_index[g] * s
            for j, d in enumerate(c.coeffs):
                vec[base + j] = d
        return tuple(vec)

    def from_vector(self, vec) -> GroupRingElement:
        s = self.s
        coeffs = {}
        for g, i in self._group_index.items():
            block = tuple(vec[i * s:(i + 1) * s])
            if any(block):
                coeffs[g] = self.spec.element(block)
        return GroupRingElement(self.ring, coeffs)

    def decode_vector(self, k: int) -> tuple[int, ...]:
        m = self.m
        out = []
        for _ in range(self.n):
            k, d = divmod(k, m)
            out.append(d)
        return tuple(out)

    def encode_vector(self, vec) -> int:
        out = 0
        for d in reversed(vec):
            out = out * self.m + d
        return out

    def _mul_by_x(self, vec) -> tuple[int, ...]:
        """Multiply every coefficient block by the residue generator."""
        m, s = self.m, self.s
        out = []
        for base in range(0, self.n, s):
            top = vec[base + s - 1]
            block = [0] + list(vec[base:base + s - 1])
            if top:
                for j, t in enumerate(self._xtail):
                    block[j] = (block[j] + top * t) % m
            out.extend(block)
        return tuple(out)

    def principal_rows(self, vec) -> list[tuple[int, ...]]:
        """Module generators of the ideal (vec): all x^j * Y^g * vec."""
        xmults = [tuple(vec)]
        for _ in range(self.s - 1):
            xmults.append(self._mul_by_x(xmults[-1]))
        rows = []
        for perm in self._perms:
            for base in xmults:
                rows.append(tuple(base[k] for k in perm))
        return rows

    # -- Howell normal form ---------------------------------------------------

    def howell(self, rows) -> tuple[tuple[int, ...], ...]:
        """Canonical basis of the Z_{p^r}-span of rows.

        Echelon with pivot entries normalized to powers of p, spans
        saturated with p^(r-e) multiples of each pivot row, entries above
        a pivot reduced modulo its leading value.  Two row sets span the
        same module iff their forms are identical.
        """
        m, p, r, n = self.m, self.p, self.r, self.n
        ppow = self._ppow
        inv = self._unit_inv
        pivots: list = [None] * n
        stack = [list(row) for row in rows if any(row)]
        while stack:
            row = stack.pop()
            c = 0
            while c < n and not row[c]:
                c += 1
            if c == n:
                continue
            v = row[c]
            e = 0
            while v % p == 0:
                v //= p
                e += 1
            if v != 1:
                u = inv[v]
                row = [a * u % m for a in row]
            cur = pivots[c]
            if cur is None:
                pivots[c] = row
                if e:
                    extra = [a * ppow[r - e] % m for a in row]
                    if any(extra):
                        stack.append(extra)
                continue
            if row[c] < cur[c]:
                # strictly smaller valuation takes over the pivot slot
                pivots[c] = row
                if e:
                    extra = [a * ppow[r - e] % m for a in row]
                    if any(extra):
                        stack.append(extra)
                row, cur = cur, row
            q = row[c] // cur[c]
            new = [(a - q * b) % m for a, b in zip(row, cur)]
            if any(new):
                stack.append(new)
        out = [pivots[c] for c in range(n) if pivots[c] is not None]
        cols = [next(i for i, a in enumerate(row) if a) for row in out]
        for k in range(len(out)):
            lead = out[k][cols[k]]
            for j in range(k):
                q = out[j][cols[k]] // lead
                if q:
                    out[j] = [(a - q * b) % m for a, b in zip(out[j], out[k])]
        return tuple(tuple(row) for row in out)

    # -- ideals ----------------------------------------------------------------

    def ideal_from_rows(self, rows) -> "Ideal":
        return Ideal(self, self.howell(rows))

    def principal_ideal(self, x) -> "Ideal":
        vec = self.to_vector(x) if isinstance(x, GroupRingElement) else tuple(x)
        return self.ideal_from_rows(self.principal_rows(vec))

    def zero_ideal(self) -> "Ideal":
        return Ideal(self, ())

    def unit_ideal(self) -> "Ideal":
        return self.principal_ideal(self.ring.one())

    def join(self, a: "Ideal", b: "Ideal") -> "Ideal":
        return self.ideal_from_rows(a.basis + b.basis)

    def ideal_stream(self):
        """Every ideal exactly once: principal ideals, then join closure."""
        seen: dict = {}
        found: list[Ideal] = []
        for k in range(self.ring_size):
            ideal = self.principal_ideal(self.decode_vector(k))
            if ideal.basis not in seen:
                seen[ideal.basis] = ideal
                found.append(ideal)
                yield ideal
        i = 0
        while i < len(found):
            a = found[i]
            i += 1
            for j in range(len(found)):
                joined = self.join(a, found[j])
                if joined.basis not in seen:
                    seen[joined.basis] = joined
                    found.append(joined)
                    yield joined

    def enumerate_ideals(self) -> tuple["Ideal", ...]:
        return tuple(sorted(self.ideal_stream(), key=lambda c: (c.size, c.basis)))

    # -- forms and duality ------------------------------------------------------

    def _block_mul(self, a, b) -> list[int]:
        m, s = self.m, self.s
        acc = [0] * (2 * s - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        acc[i + j] = (acc[i + j] + ai * bj) % m
        for k in range(2 * s - 2, s - 1, -1):
            top = acc[k]
            if top:
                acc[k] = 0
                for j, t in enumerate(self._xtail):
                    acc[k - s + j] = (acc[k - s + j] + top * t) % m
        return acc[:s]

    def _conj_block(self, b) -> list[int]:
        out = [0] * self.s
        m = self.m
        for j, d in enumerate(b):
            if d:
                col = self._conj_blocks[j]
                for k in range(self.s):
                    out[k] = (out[k] + d * col[k]) % m
        return out

    def form_coefficients(self, row, form: str) -> tuple[tuple[int, ...], ...]:
        """Digits of form(row, e_i) for each unit vector e_i.

        The form is Z_{p^r}-bilinear, so orthogonality of w against row
        reduces to s digit sums over these coefficients.
        """
        _validate_form(form, self.s)
        s = self.s
        out = []
        for i in range(self.n):
            g, j = divmod(i, s)
            block = row[g * s:(g + 1) * s]
            other = self._xpow_blocks[j] if form == EUCLIDEAN else self._conj_blocks[j]
            out.append(tuple(self._block_mul(block, other)))
        return tuple(out)

    def _orthogonal(self, coeffs, w) -> bool:
        m = self.m
        for d in range(self.s):
            acc = 0
            for i, wi in enumerate(w):
                if wi:
                    acc += wi * coeffs[i][d]
            if acc % m:
                return False
        return True

    def dual(self, code: "Ideal", form: str = EUCLIDEAN) -> "Ideal":
        """Annihilator {w : form(u, w) = 0 for all u in the code}.

        The basis rows span the code over Z_{p^r} and already absorb all
        monomial shifts (the code is an ideal), so checking w against the
        rows alone is exhaustive.
        """
        _validate_form(form, self.s)
        mats = [self.form_coefficients(row, form) for row in code.basis]
        rows = []
        for k in range(self.ring_size):
            w = self.decode_vector(k)
            if all(self._orthogonal(mat, w) for mat in mats):
                rows.append(w)
        return self.ideal_from_rows(rows)

    def is_self_orthogonal(self, code: "Ideal", form: str = EUCLIDEAN) -> bool:
        _validate_form(form, self.s)
        mats = [self.form_coefficients(row, form) for row in code.basis]
        for i, mat in enumerate(mats):
            for row in code.basis[i:]:
                if not self._orthogonal(mat, row):
                    return False
        return True

    def is_self_dual(self, code: "Ideal", form: str = EUCLIDEAN) -> bool:
        """size matches and the code sits inside its own annihilator.

        |C| * |dual C| = |ring| over these rings, so inclusion plus the
        size condition pins C = dual(C) without scanning the ring.
        """
        if code.size * code.size != self.ring_size:
            return False
        return self.is_self_orthogonal(code, form)

    def self_dual_ideals(self, form: str = EUCLIDEAN) -> tuple["Ideal", ...]:
        return tuple(c for c in self.enumerate_ideals() if self.is_self_dual(c, form))

    def count_self_dual(self, form: str = EUCLIDEAN) -> int:
        return sum(1 for c in self.ideal_stream() if self.is_self_dual(c, form))

    def exists_self_dual_brute(self, form: str = EUCLIDEAN) -> bool:
        return any(self.is_self_dual(c, form) for c in self.ideal_stream())


class Ideal:
    """An ideal held by its Howell basis; identity is basis identity."""

    __slots__ = ("engine", "basis", "_size", "_generators", "_encodings")

    def __init__(self, engine: ExhaustiveGroupRing, basis):
        self.engine = engine
        self.basis = basis
        size = 1
        for row in basis:
            lead = row[next(i for i, a in enumerate(row) if a)]
            e = 0
            while lead % engine.p == 0:
                lead //= engine.p
                e += 1
            size *= engine._ppow[engine.r - e]
        self._size = size
        self._generators = None
        self._encodings = None

    @property
    def size(self) -> int:
        return self._size

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Ideal)
                and self.engine.ring == other.engine.ring and self.basis == other.basis)

    def __hash__(self) -> int:
        return hash((self.engine.ring, self.basis))

    def __repr__(self) -> str:
        return f"Ideal(size={self.size}, rank={len(self.basis)})"

    def contains_vector(self, vec) -> bool:
        engine = self.engine
        w = list(vec)
        for row in self.basis:
            c = next(i for i, a in enumerate(row) if a)
            lead = row[c]
            a = w[c]
            if a % lead:
                return False
            q = a // lead
            if q:
                w = [(x - q * y) % engine.m for x, y in zip(w, row)]
        return not any(w)

    def contains(self, x: GroupRingElement) -> bool:
        return self.contains_vector(self.engine.to_vector(x))

    def element_encodings(self) -> tuple[int, ...]:
        """All member elements as digit encodings, sorted."""
        if self._encodings is None:
            engine = self.engine
            members = [tuple([0] * engine.n)]
            for row in self.basis:
                lead = row[next(i for i, a in enumerate(row) if a)]
                e = 0
                while lead % engine.p == 0:
                    lead //= engine.p
                    e += 1
                reps = range(engine._ppow[engine.r - e])
                members = [tuple((x + k * y) % engine.m for x, y in zip(v, row))
                           for v in members for k in reps]
            self._encodings = tuple(sorted(engine.encode_vector(v) for v in members))
            if len(self._encodings) != self._size:
                raise InternalInvariantError("size disagrees with element expansion")
        return self._encodings

    def elements(self) -> list[GroupRingElement]:
        engine = self.engine
        return [engine.from_vector(engine.decode_vector(k))
                for k in self.element_encodings()]

    def generators(self) -> list[GroupRingElement]:
        """A short generating list found greedily from the basis rows."""
        if self._generators is None:
            engine = self.engine
            for row in self.basis:
                if engine.principal_ideal(row) == self:
                    self._generators = [engine.from_vector(row)]
                    break
            else:
                gens = []
                current = engine.zero_ideal()
                for row in self.basis:
                    if not current.contains_vector(row):
                        gens.append(row)
                        current = engine.join(current, engine.principal_ideal(row))
                    if current == self:
                        break
                if current != self:
                    raise InternalInvariantError("basis rows failed to regenerate ideal")
                self._generators = [engine.from_vector(row) for row in gens]
        return list(self._generators)


# -- constructive self-dual codes ----------------------------------------------


def _existence_conditions_hold(p: int, r: int, group: AbelianGroup) -> bool:
    return r % 2 == 0 or (p == 2 and group.order % 2 == 0)


def _component_rings(ctx: AmbientDecomposition, pairing: str, p_group: AbelianGroup):
    parts = ctx.parts
    if pairing == EUCLIDEAN:
        singles, pairs = parts.euclidean_singles, parts.euclidean_pairs
    else:
        singles, pairs = parts.hermitian_singles, parts.hermitian_pairs
    ring_of = {i: GroupRing(ctx.component_spec(parts.classes[i].cardinality), p_group)
               for i in itertools.chain(singles, (i for i, _ in pairs))}
    return singles, pairs, ring_of


def _nested_decomposed(ctx, pairing, singles, pairs, ring_of,
                       single_value, pair_value) -> DecomposedElement:
    """Assemble a componentwise element from per-slot value callbacks."""
    svals = {i: single_value(i, ring_of[i]) for i in singles}
    pvals = {i: pair_value(i, ring_of[i]) for i, _ in pairs}
    return DecomposedElement(ctx, pairing, svals, pvals)


@dataclass(frozen=True)
class SelfDualConstruction:
    """Output of construct_self_dual: generators, and the ideal if small enough."""

    p: int
    r: int
    s: int
    group: AbelianGroup
    form: str
    generators: tuple[GroupRingElement, ...]
    ideal: Ideal | None

    def generator_count(self) -> int:
        return len(self.generators)


def construct_self_dual(p: int, r: int, s: int, group: AbelianGroup,
                        form: str = EUCLIDEAN, bound: int | None = None) -> SelfDualConstruction:
    """A self-dual abelian code in GR(p^r, s)[G], when one exists.

    r even: the principal ideal of p^(r/2).  Otherwise p = 2 and |G| even
    are required, and the code is assembled componentwise: each single
    component K[P] carries 2^r' K[P] + 2^(r'-1) K[P] (Y^x + 1) with
    r = 2r' - 1 and x of order 2 in P, while each paired component carries
    (everything, zero).  The ideal is materialized when the ring is within
    the exhaustive bound; the generators are returned either way.
    """
    _validate_form(form, s)
    spec = construct_ring(p, r, s)
    if not _existence_conditions_hold(p, r, group):
        raise DomainError(
            f"no self-dual code in GR({p}^{r},{s})[{group!r}]: "
            "needs r even, or p = 2 with |G| even")
    ring = GroupRing(spec, group)
    if r % 2 == 0:
        gens = [ring.one() * (p**(r // 2))]
    else:
        dec = sylow_decompose(group, p)
        p_group = dec.p_part
        ctx = ambient(spec, dec.coprime_part)
        singles, pairs, ring_of = _component_rings(ctx, form, p_group)
        # an order-2 element of P; the factors are powers of 2 and at
        # least one is nontrivial since |G| is even
        x2 = tuple((f // 2 if k == 0 else 0) for k, f in enumerate(p_group.factors))
        rp = (r + 1) // 2
        gens = []
        g1 = _nested_decomposed(
            ctx, form, singles, pairs, ring_of,
            lambda i, kr: kr.one() * (kr.coeff.from_int(p**rp)),
            lambda i, kr: (kr.one(), kr.zero()))
        g2 = _nested_decomposed(
            ctx, form, singles, pairs, ring_of,
            lambda i, kr: (kr.monomial(x2) + kr.one()) * kr.coeff.from_int(p**(rp - 1)),
            lambda i, kr: (kr.zero(), kr.zero()))
        for dec_el in (g1, g2):
            merged = sylow_merge(compose_nested(dec_el, p_group), dec)
            if not merged.is_zero():
                gens.append(merged)
    limit = exhaustive_bound() if bound is None else bound
    ideal = None
    if spec.char**(s * group.order) <= limit:
        engine = ExhaustiveGroupRing(ring, limit)
        acc = engine.zero_ideal()
        for g in gens:
            acc = engine.join(acc, engine.principal_ideal(g))
        ideal = acc
    return SelfDualConstruction(p, r, s, group, form, tuple(gens), ideal)


@dataclass(frozen=True)
class SemisimpleSelfDualFamily:
    """All self-dual codes of GR(p^r, s)[A] with |A| coprime to p.

    Each representative is the generator list of one code: a scaled
    idempotent per component slot, the paired slots carrying the two
    complementary chain-ring ideals.
    """

    p: int
    r: int
    s: int
    group: AbelianGroup
    form: str
    count: int
    representatives: tuple[tuple[GroupRingElement, ...], ...]


def _scaled_idempotent(ctx: AmbientDecomposition, pairing: str, singles, pairs,
                       slot: int, scale: int, pair_member: int | None = None) -> GroupRingElement:
    """Pull p^scale at one component slot (zeros elsewhere) back to GR[A]."""
    parts = ctx.parts
    svals = {i: ctx.component_spec(parts.classes[i].cardinality).zero() for i in singles}
    pvals = {i: [ctx.component_spec(parts.classes[i].cardinality).zero()] * 2
             for i, _ in pairs}
    spec_at = ctx.component_spec(parts.classes[slot].cardinality)
    value = spec_at.from_int(ctx.spec.p**scale)
    if pair_member is None:
        svals[slot] = value
    else:
        pvals[slot][pair_member] = value
    pvals = {i: tuple(v) for i, v in pvals.items()}
    return compose(DecomposedElement(ctx, pairing, svals, pvals))


def enumerate_semisimple_selfdual(p: int, r: int, s: int, group: AbelianGroup,
                                  form: str = EUCLIDEAN,
                                  max_representatives: int | None = 10000) -> SemisimpleSelfDualFamily:
    """Componentwise enumeration: singles are forced to p^(r/2) K, pairs
    range over the chain (p^i K, p^(r-i) K), i = 0..r."""
    _validate_form(form, s)
    spec = construct_ring(p, r, s)
    if group.order % p == 0 and group.order > 1:
        raise DomainError(f"|A| = {group.order} is not coprime to p = {p}")
    ctx = ambient(spec, group)
    parts = ctx.parts
    if form == EUCLIDEAN:
        singles, pairs = parts.euclidean_singles, parts.euclidean_pairs
    else:
        singles, pairs = parts.hermitian_singles, parts.hermitian_pairs
    if r % 2:
        return SemisimpleSelfDualFamily(p, r, s, group, form, 0, ())
    count = (r + 1)**len(pairs)
    reps = []
    if max_representatives is None or count <= max_representatives:
        for choice in itertools.product(range(r + 1), repeat=len(pairs)):
            gens = [_scaled_idempotent(ctx, form, singles, pairs, i, r // 2)
                    for i in singles]
            for (i, _), w in zip(pairs, choice):
                for member, exp in ((0, w), (1, r - w)):
                    if exp < r:
                        gens.append(_scaled_idempotent(ctx, form, singles, pairs,
                                                       i, exp, member))
            reps.append(tuple(gens))
    return SemisimpleSelfDualFamily(p, r, s, group, form, count, tuple(reps))
