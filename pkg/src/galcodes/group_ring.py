"""Group rings over Galois rings, their pairings, and spectral decompositions.

An element of GR(p^r, s)[G] is a finitely supported map g -> coefficient
with convolution product.  The coefficient ring is duck-typed (anything
with zero()/one() whose elements support +, *, unary -) so the same class
also covers nested rings R[P] with R itself a group ring; that nesting is
produced by sylow_split, which re-indexes GR[G] as (GR[A])[P] along the
Sylow decomposition G = A + P.

For A of order coprime to p, evaluation at characters diagonalizes GR[A]:
with M = exponent(A), mu = ord_M(p^s), zeta a root of unity of order M in
the extension GR(p^r, s*mu), the transform of c at h is
sum_a c_a * zeta^gamma_h(a).  The value at h lands in the subring of
degree s*nu, nu the size of the cyclotomic class of h, and the values on
one class are Frobenius shifts of the value at its representative, so the
whole ring splits into one Galois-ring component per class.  Components
are indexed by class representatives; for paired classes (type III /
type III') the two member values form an ordered pair.  The second member
of a Hermitian pair is Frobenius-normalized (by the inverse half-degree
power) so that the conjugate involution acts as a plain swap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import ClassPartition, CyclotomicClass, partition
from .errors import DomainError, InternalInvariantError
from .galois import (GaloisRingElement, GaloisRingSpec, construct_ring, embed,
                     generalized_frobenius, root_of_unity, unembed)
from .groups import AbelianGroup, SylowDecomposition, character_exponent, sylow_decompose
from .numth import multiplicative_order


class GroupRing:
    """The ring coeff[G]; coeff is a GaloisRingSpec or another GroupRing."""

    __slots__ = ("coeff", "group")

    def __init__(self, coeff, group: AbelianGroup):
        self.coeff = coeff
        self.group = group

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GroupRing)
                and self.coeff == other.coeff and self.group == other.group)

    def __hash__(self) -> int:
        return hash((self.coeff, self.group))

    def __repr__(self) -> str:
        return f"{self.coeff!r}[{self.group!r}]"

    def zero(self) -> GroupRingElement:
        return GroupRingElement(self, {})

    def one(self) -> GroupRingElement:
        return GroupRingElement(self, {self.group.identity: self.coeff.one()})

    def monomial(self, g, c=None) -> GroupRingElement:
        """c * Y^g (c defaults to 1)."""
        g = self.group.element(g)
        c = self.coeff.one() if c is None else c
        return self.element({g: c})

    def element(self, coeffs: dict) -> GroupRingElement:
        clean = {}
        for g, c in coeffs.items():
            g = self.group.element(g)
            if not c.is_zero():
                clean[g] = c
        return GroupRingElement(self, clean)

    def from_coeff_list(self, cs) -> GroupRingElement:
        """Coefficients aligned with the lexicographic element order."""
        elems = self.group.elements()
        cs = list(cs)
        if len(cs) != len(elems):
            raise DomainError(f"expected {len(elems)} coefficients, got {len(cs)}")
        return self.element(dict(zip(elems, cs)))

    def random_element(self, rng) -> GroupRingElement:
        spec = self.coeff
        if isinstance(spec, GroupRing):
            return self.element({g: spec.random_element(rng) for g in self.group.elements()})
        return self.element({
            g: spec.element(tuple(rng.randrange(spec.char) for _ in range(spec.s)))
            for g in self.group.elements()})


class GroupRingElement:
    """Immutable sparse element of a GroupRing."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: GroupRing, coeffs: dict):
        self.ring = ring
        self.coeffs = coeffs

    def coefficient(self, g):
        g = self.ring.group.element(g)
        c = self.coeffs.get(g)
        return c if c is not None else self.ring.coeff.zero()

    def support(self):
        return sorted(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _require_same_ring(self, other: "GroupRingElement") -> None:
        if self.ring != other.ring:
            raise DomainError("mixed group rings")

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._require_same_ring(other)
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            acc = out.get(g)
            acc = c if acc is None else acc + c
            if acc.is_zero():
                out.pop(g, None)
            else:
                out[g] = acc
        return GroupRingElement(self.ring, out)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.ring, {g: -c for g, c in self.coeffs.items()})

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupRingElement) and isinstance(other.ring.coeff, type(self.ring.coeff)):
            self._require_same_ring(other)
            add = self.ring.group.add
            out: dict = {}
            for g1, c1 in self.coeffs.items():
                for g2, c2 in other.coeffs.items():
                    g = add(g1, g2)
                    prod = c1 * c2
                    acc = out.get(g)
                    acc = prod if acc is None else acc + prod
                    if acc.is_zero():
                        out.pop(g, None)
                    else:
                        out[g] = acc
            return GroupRingElement(self.ring, out)
        # scalar from the coefficient ring, or an int
        scaled = {g: c * other for g, c in self.coeffs.items()}
        return GroupRingElement(self.ring, {g: c for g, c in scaled.items() if not c.is_zero()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e: int) -> "GroupRingElement":
        acc = self.ring.one()
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def shift(self, g) -> "GroupRingElement":
        """Multiplication by the monomial Y^g."""
        g = self.ring.group.element(g)
        add = self.ring.group.add
        return GroupRingElement(self.ring, {add(h, g): c for h, c in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GroupRingElement)
                and self.ring == other.ring and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        if self.is_zero():
            return "<0>"
        parts = [f"{c!r}*Y{g}" for g, c in sorted(self.coeffs.items())]
        return "<" + " + ".join(parts) + ">"


# -- pairings and involutions -------------------------------------------------

def form_euclidean(u: GroupRingElement, v: GroupRingElement):
    """sum_g u_g * v_g, valued in the coefficient ring."""
    u._require_same_ring(v)
    acc = u.ring.coeff.zero()
    for g, c in u.coeffs.items():
        d = v.coeffs.get(g)
        if d is not None:
            acc = acc + c * d
    return acc


def form_hermitian(u: GroupRingElement, v: GroupRingElement):
    """sum_g u_g * conj(v_g) with conj the half-degree Frobenius (s even)."""
    u._require_same_ring(v)
    spec = u.ring.coeff
    if not isinstance(spec, GaloisRingSpec) or spec.s % 2:
        raise DomainError("Hermitian form needs Galois-ring coefficients of even degree")
    half = spec.s // 2
    acc = spec.zero()
    for g, c in u.coeffs.items():
        d = v.coeffs.get(g)
        if d is not None:
            acc = acc + c * generalized_frobenius(d, half)
    return acc


def conjugate(a: GaloisRingElement) -> GaloisRingElement:
    """Half-degree Frobenius; the ring involution of GR(p^r, s) for s even."""
    if a.spec.s % 2:
        raise DomainError(f"{a.spec} has odd degree; no conjugation")
    return generalized_frobenius(a, a.spec.s // 2)


def involution(x: GroupRingElement) -> GroupRingElement:
    """Support reversal Y^g -> Y^(-g), coefficients untouched."""
    neg = x.ring.group.neg
    return GroupRingElement(x.ring, {neg(g): c for g, c in x.coeffs.items()})


def conjugate_involution(x: GroupRingElement) -> GroupRingElement:
    """Support reversal with conjugated coefficients (coefficient degree even)."""
    neg = x.ring.group.neg
    return GroupRingElement(x.ring, {neg(g): conjugate(c) for g, c in x.coeffs.items()})


def involution_pairing(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    """sum_b x_b * involution(y_b) for nested elements over P; valued in R."""
    x._require_same_ring(y)
    inner = x.ring.coeff
    if not isinstance(inner, GroupRing):
        raise DomainError("involution pairing expects nested coefficients")
    acc = inner.zero()
    for b, xb in x.coeffs.items():
        yb = y.coeffs.get(b)
        if yb is not None:
            acc = acc + xb * involution(yb)
    return acc


def conjugate_involution_pairing(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    """sum_b x_b * conjugate_involution(y_b); valued in R."""
    x._require_same_ring(y)
    inner = x.ring.coeff
    if not isinstance(inner, GroupRing):
        raise DomainError("conjugate involution pairing expects nested coefficients")
    acc = inner.zero()
    for b, xb in x.coeffs.items():
        yb = y.coeffs.get(b)
        if yb is not None:
            acc = acc + xb * conjugate_involution(yb)
    return acc


# -- Sylow re-indexing ---------------------------------------------------------

def sylow_split(u: GroupRingElement, dec: SylowDecomposition) -> GroupRingElement:
    """Re-index GR[G] as (GR[A])[P]: coefficient of Y^b at Y^a is u_{a+b}."""
    spec = u.ring.coeff
    inner = GroupRing(spec, dec.coprime_part)
    outer = GroupRing(inner, dec.p_part)
    buckets: dict = {}
    for g, c in u.coeffs.items():
        a, b = dec.split(g)
        buckets.setdefault(b, {})[a] = c
    return GroupRingElement(outer, {b: GroupRingElement(inner, cs) for b, cs in buckets.items()})


def sylow_merge(x: GroupRingElement, dec: SylowDecomposition) -> GroupRingElement:
    """Inverse of sylow_split."""
    inner = x.ring.coeff
    if not isinstance(inner, GroupRing):
        raise DomainError("sylow_merge expects nested coefficients")
    ring = GroupRing(inner.coeff, dec.group)
    out: dict = {}
    for b, xb in x.coeffs.items():
        for a, c in xb.coeffs.items():
            out[dec.join(a, b)] = c
    return GroupRingElement(ring, out)


# -- character transform and component decomposition ---------------------------

class AmbientDecomposition:
    """Cached spectral data for GR(p^r, s)[A], |A| coprime to p."""

    def __init__(self, spec: GaloisRingSpec, group: AbelianGroup):
        if group.order % spec.p == 0 and group.order > 1:
            raise DomainError(f"|A| = {group.order} is not coprime to p = {spec.p}")
        self.spec = spec
        self.group = group
        self.ring = GroupRing(spec, group)
        self.parts = partition(group, spec.residue_size)
        self.exponent = group.exponent
        self.extension_degree = multiplicative_order(spec.residue_size, self.exponent)
        self.big = construct_ring(spec.p, spec.r, spec.s * self.extension_degree)
        zeta = root_of_unity(self.big, self.exponent)
        pows = [self.big.one()]
        for _ in range(self.exponent - 1):
            pows.append(pows[-1] * zeta)
        self.zeta_pows = pows
        self.inv_group_order = pow(group.order, -1, spec.char)
        self._component_specs: dict[int, GaloisRingSpec] = {}

    def component_spec(self, nu: int) -> GaloisRingSpec:
        out = self._component_specs.get(nu)
        if out is None:
            out = construct_ring(self.spec.p, self.spec.r, self.spec.s * nu)
            self._component_specs[nu] = out
        return out

    def transform_at(self, x: GroupRingElement, h) -> GaloisRingElement:
        """sum_a x_a * zeta^gamma_h(a), valued in the extension ring."""
        acc = self.big.zero()
        for a, c in x.coeffs.items():
            e = character_exponent(self.group, h, a)
            acc = acc + embed(c, self.big) * self.zeta_pows[e]
        return acc


@lru_cache(maxsize=None)
def _ambient_cached(p: int, r: int, s: int, factors: tuple[int, ...]) -> AmbientDecomposition:
    return AmbientDecomposition(construct_ring(p, r, s), AbelianGroup(factors))


def ambient(spec: GaloisRingSpec, group: AbelianGroup) -> AmbientDecomposition:
    return _ambient_cached(spec.p, spec.r, spec.s, group.factors)


@dataclass(frozen=True)
class Spectrum:
    """Character values of one ring element, indexed by group element."""

    context: AmbientDecomposition
    values: dict

    def __getitem__(self, h) -> GaloisRingElement:
        return self.values[self.context.group.element(h)]


def dft(x: GroupRingElement, ctx: AmbientDecomposition | None = None) -> Spectrum:
    """Evaluate x at every character; values live in the extension ring."""
    if ctx is None:
        ctx = ambient(x.ring.coeff, x.ring.group)
    if x.ring != ctx.ring:
        raise DomainError("element does not belong to the decomposed ring")
    return Spectrum(ctx, {h: ctx.transform_at(x, h) for h in ctx.group.elements()})


def idft(spec: Spectrum) -> GroupRingElement:
    """Inverse transform: x_a = |A|^(-1) * sum_h values[h] * zeta^(-gamma_h(a)).

    The result must have coefficients in the base ring; landing outside its
    embedded image means the spectrum was not Frobenius-coherent, which is
    reported as a broken invariant.
    """
    ctx = spec.context
    group = ctx.group
    M = ctx.exponent
    out = {}
    for a in group.elements():
        acc = ctx.big.zero()
        for h, v in spec.values.items():
            e = (-character_exponent(group, h, a)) % M
            acc = acc + v * ctx.zeta_pows[e]
        out[a] = unembed(acc * ctx.inv_group_order, ctx.spec)
    return ctx.ring.element(out)


def _class_component(ctx: AmbientDecomposition, values: dict, cls: CyclotomicClass,
                     at=None, twist: int = 0) -> GaloisRingElement:
    """Pull one spectral value down into the class's component ring."""
    h = cls.rep if at is None else at
    v = values[h]
    if twist:
        v = generalized_frobenius(v, twist % ctx.big.s)
    return unembed(v, ctx.component_spec(cls.cardinality))


@dataclass(frozen=True)
class DecomposedElement:
    """Component image of a ring element under one of the two pairings.

    singles maps class index -> component value; pairs maps primary class
    index -> (value, partner value).  Ordering and pairing follow the
    partition layout for the chosen pairing ('euclidean' or 'hermitian').
    """

    context: AmbientDecomposition
    pairing: str
    singles: dict
    pairs: dict

    def multiply(self, other: "DecomposedElement") -> "DecomposedElement":
        if self.context is not other.context or self.pairing != other.pairing:
            raise DomainError("mismatched decompositions")
        singles = {i: a * other.singles[i] for i, a in self.singles.items()}
        pairs = {i: (a * other.pairs[i][0], b * other.pairs[i][1])
                 for i, (a, b) in self.pairs.items()}
        return DecomposedElement(self.context, self.pairing, singles, pairs)

    def add(self, other: "DecomposedElement") -> "DecomposedElement":
        if self.context is not other.context or self.pairing != other.pairing:
            raise DomainError("mismatched decompositions")
        singles = {i: a + other.singles[i] for i, a in self.singles.items()}
        pairs = {i: (a + other.pairs[i][0], b + other.pairs[i][1])
                 for i, (a, b) in self.pairs.items()}
        return DecomposedElement(self.context, self.pairing, singles, pairs)

    def component_list(self) -> list:
        """Components flattened in partition order: singles, then pairs."""
        parts = self.context.parts
        if self.pairing == "euclidean":
            return ([self.singles[i] for i in parts.euclidean_singles]
                    + [self.pairs[i] for i, _ in parts.euclidean_pairs])
        return ([self.singles[i] for i in parts.hermitian_singles]
                + [self.pairs[i] for i, _ in parts.hermitian_pairs])


def decompose_euclidean(x: GroupRingElement, ctx: AmbientDecomposition | None = None) -> DecomposedElement:
    """Component image for the Euclidean pairing layout.

    Type-I/II classes contribute the value at their representative a;
    type-III pairs contribute (value at a, value at -a).
    """
    if ctx is None:
        ctx = ambient(x.ring.coeff, x.ring.group)
    values = dft(x, ctx).values
    parts = ctx.parts
    singles = {i: _class_component(ctx, values, parts.classes[i])
               for i in parts.euclidean_singles}
    pairs = {}
    for i, _ in parts.euclidean_pairs:
        cls = parts.classes[i]
        first = _class_component(ctx, values, cls)
        second = unembed(values[ctx.group.neg(cls.rep)], ctx.component_spec(cls.cardinality))
        pairs[i] = (first, second)
    return DecomposedElement(ctx, "euclidean", singles, pairs)


def decompose_hermitian(x: GroupRingElement, ctx: AmbientDecomposition | None = None) -> DecomposedElement:
    """Component image for the Hermitian pairing layout (s even).

    Type-II' classes contribute the value at their representative b;
    type-III' pairs contribute (value at b, w) where w is the value at
    -p^(s/2)*b twisted by the inverse half-degree Frobenius, the
    normalization that turns the conjugate involution into a plain swap.
    """
    if ctx is None:
        ctx = ambient(x.ring.coeff, x.ring.group)
    if ctx.spec.s % 2:
        raise DomainError("Hermitian decomposition needs even degree s")
    values = dft(x, ctx).values
    parts = ctx.parts
    group = ctx.group
    half = ctx.spec.s // 2
    singles = {i: _class_component(ctx, values, parts.classes[i])
               for i in parts.hermitian_singles}
    pairs = {}
    for i, _ in parts.hermitian_pairs:
        cls = parts.classes[i]
        partner_pt = group.neg(group.scale(pow(ctx.spec.p, half, max(ctx.exponent, 1)), cls.rep))
        first = _class_component(ctx, values, cls)
        second = _class_component(ctx, values, cls, at=partner_pt, twist=-half)
        pairs[i] = (first, second)
    return DecomposedElement(ctx, "hermitian", singles, pairs)


def _spread_class(ctx: AmbientDecomposition, out: dict, cls_points, value_big: GaloisRingElement) -> None:
    """Fill a class orbit with Frobenius shifts of the value at its first point."""
    s = ctx.spec.s
    v = value_big
    for k, point in enumerate(cls_points):
        out[point] = v if k == 0 else generalized_frobenius(value_big, s * k)


def compose(dec: DecomposedElement) -> GroupRingElement:
    """Inverse of decompose_euclidean / decompose_hermitian."""
    ctx = dec.context
    parts = ctx.parts
    group = ctx.group
    values: dict = {}
    if dec.pairing == "euclidean":
        single_idx, pair_idx = parts.euclidean_singles, parts.euclidean_pairs
    else:
        single_idx, pair_idx = parts.hermitian_singles, parts.hermitian_pairs
    for i in single_idx:
        cls = parts.classes[i]
        _spread_class(ctx, values, cls.elements, embed(dec.singles[i], ctx.big))
    half = ctx.spec.s // 2
    for i, j in pair_idx:
        cls, partner = parts.classes[i], parts.classes[j]
        first, second = dec.pairs[i]
        _spread_class(ctx, values, cls.elements, embed(first, ctx.big))
        if dec.pairing == "euclidean":
            start = group.neg(cls.rep)
            v = embed(second, ctx.big)
        else:
            start = group.neg(group.scale(pow(ctx.spec.p, half, max(ctx.exponent, 1)), cls.rep))
            v = generalized_frobenius(embed(second, ctx.big), half % ctx.big.s)
        pts = _orbit_from(group, ctx.spec.residue_size, start)
        if set(pts) != set(partner.elements):
            raise InternalInvariantError("partner orbit mismatch")
        _spread_class(ctx, values, pts, v)
    if len(values) != group.order:
        raise InternalInvariantError("decomposition did not cover the group")
    return idft(Spectrum(ctx, values))


def _orbit_from(group: AbelianGroup, q: int, start):
    qr = q % group.exponent if group.exponent > 1 else 0
    out = [start]
    cur = group.scale(qr, start)
    while cur != start:
        out.append(cur)
        cur = group.scale(qr, cur)
    return tuple(out)


def decompose_nested(x: GroupRingElement, ctx: AmbientDecomposition, pairing: str) -> DecomposedElement:
    """Componentwise image of an element of R[P], R = GR[A].

    Coefficients over P are decomposed one by one and regrouped, so each
    class contributes an element of (component ring)[P]; pairs contribute
    ordered pairs of such elements.
    """
    inner = x.ring.coeff
    if not isinstance(inner, GroupRing):
        raise DomainError("decompose_nested expects nested coefficients")
    p_group = x.ring.group
    decompose = decompose_euclidean if pairing == "euclidean" else decompose_hermitian
    per_b = {b: decompose(xb, ctx) for b, xb in x.coeffs.items()}
    parts = ctx.parts
    single_idx = parts.euclidean_singles if pairing == "euclidean" else parts.hermitian_singles
    pair_idx = parts.euclidean_pairs if pairing == "euclidean" else parts.hermitian_pairs
    singles = {}
    for i in single_idx:
        comp_ring = GroupRing(ctx.component_spec(parts.classes[i].cardinality), p_group)
        singles[i] = comp_ring.element({b: d.singles[i] for b, d in per_b.items()})
    pairs = {}
    for i, _ in pair_idx:
        comp_ring = GroupRing(ctx.component_spec(parts.classes[i].cardinality), p_group)
        pairs[i] = (comp_ring.element({b: d.pairs[i][0] for b, d in per_b.items()}),
                    comp_ring.element({b: d.pairs[i][1] for b, d in per_b.items()}))
    return DecomposedElement(ctx, pairing, singles, pairs)


def compose_nested(dec: DecomposedElement, p_group: AbelianGroup) -> GroupRingElement:
    """Inverse of decompose_nested."""
    ctx = dec.context
    inner = ctx.ring
    outer = GroupRing(inner, p_group)
    per_b: dict = {}
    for b in p_group.elements():
        singles = {i: v.coefficient(b) for i, v in dec.singles.items()}
        pairs = {i: (v0.coefficient(b), v1.coefficient(b)) for i, (v0, v1) in dec.pairs.items()}
        xb = compose(DecomposedElement(ctx, dec.pairing, singles, pairs))
        if not xb.is_zero():
            per_b[b] = xb
    return GroupRingElement(outer, per_b)


# -- text format ---------------------------------------------------------------

def element_text(x: GroupRingElement) -> str:
    """Dense coefficient list in lexicographic group order, ';' separated."""
    from .galois import element_text as scalar_text
    spec = x.ring.coeff
    if not isinstance(spec, GaloisRingSpec):
        raise DomainError("text format applies to Galois-ring coefficients")
    return ";".join(scalar_text(x.coefficient(g)) for g in x.ring.group.elements())


def parse_element(ring: GroupRing, text: str) -> GroupRingElement:
    from .galois import parse_element as scalar_parse
    spec = ring.coeff
    if not isinstance(spec, GaloisRingSpec):
        raise DomainError("text format applies to Galois-ring coefficients")
    parts = text.strip().split(";")
    elems = ring.group.elements()
    if len(parts) != len(elems):
        raise DomainError(f"expected {len(elems)} coefficients in {text!r}")
    return ring.element({g: scalar_parse(spec, t) for g, t in zip(elems, parts)})
