"""Closed-form counts of abelian codes and their self-dual subfamilies.

The ambient group splits as G = A + P with |A| coprime to p.  Each divisor
d of exp(A) contributes one factor to every count: the order-d elements
fall into classes of size ord_d(p^s), each class owning a component ring
GR(p^r, s*ord)[P], and the duality type of those classes (decided by the
good-pair classification of (d, p^s) or (d, p^(s/2))) dictates whether the
factor counts all ideals, Euclidean self-dual ones, or Hermitian self-dual
ones of the component.  The component base counts themselves come from a
provider: closed forms exist for trivial P and for r = 2 with cyclic P;
anything else is brute-forced within the exhaustive bound or rejected.

All arithmetic is exact; every division in an exponent is asserted exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cyclotomic import bad_pair_indicator, even_pair_indicator
from .errors import DomainError, InternalInvariantError, ProviderDomainError
from .galois import construct_ring
from .groups import AbelianGroup, format_group, order_census, sylow_decompose
from .numth import multiplicative_order, valuation

EUCLIDEAN = "euclidean"
HERMITIAN = "hermitian"

_TRIVIAL_GROUP = AbelianGroup(())


def _validate_duality(duality: str, s: int) -> None:
    if duality not in (EUCLIDEAN, HERMITIAN):
        raise DomainError(f"unknown duality {duality!r}")
    if duality == HERMITIAN and s % 2:
        raise DomainError("Hermitian duality needs even degree s")


def exists_self_dual(p: int, r: int, group: AbelianGroup,
                     duality: str = EUCLIDEAN, s: int = 1) -> bool:
    """Self-dual abelian codes exist iff r is even, or p = 2 and |G| is even."""
    _validate_duality(duality, s)
    return r % 2 == 0 or (p == 2 and group.order % 2 == 0)


def is_principal_ideal_group_ring(p: int, r: int, group: AbelianGroup) -> bool:
    """GR(p^r, s)[G] is a principal ideal ring iff the Sylow p-part of G is
    cyclic (r = 1) or trivial (r >= 2); independent of s."""
    if r == 1:
        return len(sylow_decompose(group, p).p_part.factors) <= 1
    return math.gcd(p, group.order) == 1


# -- closed forms over GR(p^2, s), cyclic length p^a ---------------------------

def _geometric(base: int, terms: int) -> int:
    """1 + base + ... + base^(terms-1), exactly."""
    total = base**terms - 1
    if total % (base - 1):
        raise InternalInvariantError("geometric series not integral")
    return total // (base - 1)


def cyclic_count_p2(p: int, s: int, a: int) -> int:
    """Number of cyclic codes of length p^a over GR(p^2, s).

    The a = 0 ring is the chain ring itself with its r + 1 = 3 ideals.
    """
    if a < 0:
        raise DomainError(f"a must be >= 0, got {a}")
    if a == 0:
        return 3
    q = p**s
    cap = p**(a - 1)
    total = 0
    for d in range(p**a):
        total += _geometric(q, min(d // 2, cap) + 1)
    return 2 * total + _geometric(q, cap + 1)


def euclidean_cyclic_count_p2(p: int, s: int, a: int) -> int:
    """Euclidean self-dual cyclic codes of length p^a over GR(p^2, s)."""
    if a < 0:
        raise DomainError(f"a must be >= 0, got {a}")
    if a == 0:
        return 1
    q = p**s
    if p == 2:
        if a == 1:
            return 1
        if a == 2:
            return 1 + q
        return 1 + q + 2 * q**2 * _geometric(q, 2**(a - 2) - 1)
    exp = (p**(a - 1) + 1) // 2
    return 2 * _geometric(q, exp)


def hermitian_cyclic_count_p2(p: int, s: int, a: int) -> int:
    """Hermitian self-dual cyclic codes of length p^a over GR(p^2, s), s even."""
    if s % 2:
        raise DomainError("Hermitian count needs even degree s")
    if a < 0:
        raise DomainError(f"a must be >= 0, got {a}")
    if a == 0:
        return 1
    return _geometric(p**(s // 2), p**(a - 1) + 1)


# -- base-count providers --------------------------------------------------------

TOTAL = "total"

_KIND_LABEL = {TOTAL: "all ideals", EUCLIDEAN: "Euclidean self-dual",
               HERMITIAN: "Hermitian self-dual"}


def _describe_base(p: int, r: int, s2: int, p_group: AbelianGroup, kind: str) -> str:
    return f"{_KIND_LABEL[kind]} count of GR({p}^{r},{s2})[{format_group(p_group)}]"


class TrivialSylowProvider:
    """Base counts for trivial P: the chain ring has r + 1 ideals, and
    p^(r/2) GR is the unique self-dual one (either form) when r is even."""

    name = "trivial"

    def supports(self, p: int, r: int, s2: int, p_group: AbelianGroup, kind: str) -> bool:
        return p_group.order == 1

    def count(self, p: int, r: int, s2: int, p_group: AbelianGroup, kind: str) -> int:
        if not self.supports(p, r, s2, p_group, kind):
            raise ProviderDomainError(
                f"{_describe_base(p, r, s2, p_group, kind)} unavailable: "
                "the trivial provider needs a trivial Sylow subgroup")
        if kind == TOTAL:
            return r + 1
        if kind == HERMITIAN and s2 % 2:
            raise DomainError("Hermitian base count needs even degree")
        return 1 if r % 2 == 0 else 0


class ClosedFormProvider:
    """The r = 2 closed forms; requires a cyclic Sylow subgroup."""

    name = "closed-form"

    def supports(self, p: int, r: int, s2: int, p_group: AbelianGroup, kind: str) -> bool:
        return r == 2 and len(p_group.factors) <= 1

    def count(self, p: int, r: int, s2: int, p_group: AbelianGroup, kind: str) -> int:
        if not self.supports(p, r, s2, p_group, kind):
            raise ProviderDomainError(
                f"{_describe_base(p, r, s2, p_group, kind)} unavailable: "
                "closed forms exist only for r = 2 with cyclic Sylow subgroup")
        a = valuation(p_group.order, p)
        if p**a != p_group.order:
            raise DomainError(f"{format_group(p_group)} is not a {p}-group")
        if kind == TOTAL:
            return cyclic_count_p2(p, s2, a)
        if kind == EUCLIDEAN:
            return euclidean_cyclic_count_p2(p, s2, a)
        return hermitian_cyclic_count_p2(p, s2, a)


_BRUTE_CACHE: dict = {}


class BruteForceProvider:
    """Exhaustive enumeration of the component group ring, within bound."""

    name = "brute-force"

    def __init__(self, bound: int | None = None):
        from .ideals import exhaustive_bound
        self.bound = exhaustive_bound() if bound is None else bound

    def _ring_size(self, p: int, r: int, s2: int, p_group: AbelianGroup) -> int:
        return p**(r * s2 * p_group.order)

    def supports(self, p: int, r: int, s2: int, p_group: AbelianGroup, kind: str) -> bool:
        return self._ring_size(p, r, s2, p_group) <= self.bound

    def count(self, p: int, r: int, s2: int, p_group: AbelianGroup, kind: str) -> int:
        from .group_ring import GroupRing
        from .ideals import ExhaustiveGroupRing
        if not self.supports(p, r, s2, p_group, kind):
            raise ProviderDomainError(
                f"{_describe_base(p, r, s2, p_group, kind)} unavailable: ring size "
                f"{self._ring_size(p, r, s2, p_group)} exceeds the bound {self.bound}")
        key = (p, r, s2, p_group.factors, kind)
        if key not in _BRUTE_CACHE:
            engine = ExhaustiveGroupRing(GroupRing(construct_ring(p, r, s2), p_group),
                                         self.bound)
            if kind == TOTAL:
                value = len(engine.enumerate_ideals())
            else:
                value = engine.count_self_dual(kind)
            _BRUTE_CACHE[key] = value
        return _BRUTE_CACHE[key]


class AutoProvider:
    """trivial, then closed-form, then brute force; first applicable wins."""

    name = "auto"

    def __init__(self, bound: int | None = None):
        self.chain = (TrivialSylowProvider(), ClosedFormProvider(),
                      BruteForceProvider(bound))

    def supports(self, p, r, s2, p_group, kind) -> bool:
        return any(prov.supports(p, r, s2, p_group, kind) for prov in self.chain)

    def select(self, p, r, s2, p_group, kind):
        for prov in self.chain:
            if prov.supports(p, r, s2, p_group, kind):
                return prov
        raise ProviderDomainError(
            f"{_describe_base(p, r, s2, p_group, kind)} unavailable: no closed form "
            "is known and the ring exceeds the brute-force bound")

    def count(self, p, r, s2, p_group, kind) -> int:
        return self.select(p, r, s2, p_group, kind).count(p, r, s2, p_group, kind)


_PROVIDERS = {"auto": AutoProvider, "trivial": TrivialSylowProvider,
              "closed": ClosedFormProvider, "brute": BruteForceProvider}


def get_provider(provider):
    """Accept a provider instance or one of the names auto/trivial/closed/brute."""
    if isinstance(provider, str):
        if provider not in _PROVIDERS:
            raise DomainError(f"unknown provider {provider!r}; "
                              f"choose from {sorted(_PROVIDERS)}")
        return _PROVIDERS[provider]()
    return provider


def _query(provider, p, r, s2, p_group, kind):
    """Resolve one base count, reporting which strategy produced it."""
    if isinstance(provider, AutoProvider):
        chosen = provider.select(p, r, s2, p_group, kind)
        return chosen.count(p, r, s2, p_group, kind), chosen.name
    return provider.count(p, r, s2, p_group, kind), provider.name


# -- the product formula ----------------------------------------------------------

@dataclass(frozen=True)
class DivisorFactor:
    """One divisor's contribution to a count."""

    divisor: int
    element_count: int  # elements of this order in A
    orbit_size: int     # ord_d(p^s) = size of each class
    slot_type: str      # single / conjugate-single / pair
    base_kind: str      # which base count the component contributes
    base_degree: int    # s' of the component ring GR(p^r, s')
    exponent: int       # number of independent component choices
    base_value: int
    provider: str

    @property
    def factor(self) -> int:
        return self.base_value**self.exponent


@dataclass(frozen=True)
class CountReport:
    """A count with its per-divisor breakdown; the factors multiply to count."""

    p: int
    r: int
    s: int
    coprime_group: AbelianGroup
    p_group: AbelianGroup
    duality: str
    count: int
    factors: tuple[DivisorFactor, ...]
    provider: str

    def __post_init__(self):
        prod = 1
        for f in self.factors:
            prod *= f.factor
        if prod != self.count:
            raise InternalInvariantError("breakdown does not multiply to the count")


def _exact_div(a: int, b: int) -> int:
    if a % b:
        raise InternalInvariantError(f"expected {b} | {a}")
    return a // b


def _divisor_factor(p, r, s, d, count_d, duality, provider, p_group) -> DivisorFactor:
    q = p**s
    nu = multiplicative_order(q, d)
    if duality == TOTAL:
        kind, degree, exponent, slot = TOTAL, s * nu, _exact_div(count_d, nu), "component"
    elif duality == EUCLIDEAN:
        if bad_pair_indicator(d, q):
            kind, degree = TOTAL, s * nu
            exponent, slot = _exact_div(count_d, 2 * nu), "pair"
        elif nu == 1:
            kind, degree, exponent, slot = EUCLIDEAN, s, count_d, "single"
        else:
            kind, degree = HERMITIAN, s * nu
            exponent, slot = _exact_div(count_d, nu), "conjugate-single"
    else:
        if even_pair_indicator(d, p**(s // 2)):
            kind, degree = TOTAL, s * nu
            exponent, slot = _exact_div(count_d, 2 * nu), "pair"
        else:
            kind, degree = HERMITIAN, s * nu
            exponent, slot = _exact_div(count_d, nu), "conjugate-single"
    value, via = _query(provider, p, r, degree, p_group, kind)
    return DivisorFactor(d, count_d, nu, slot, kind, degree, exponent, value, via)


def _product_count(p, r, s, coprime_group, p_group, duality, provider) -> CountReport:
    if duality != TOTAL:
        _validate_duality(duality, s)
    construct_ring(p, r, s)  # validates p prime, r/s positive
    if coprime_group.order % p == 0 and coprime_group.order > 1:
        raise DomainError(
            f"|A| = {coprime_group.order} is not coprime to p = {p}")
    if p_group.order > 1 and p**valuation(p_group.order, p) != p_group.order:
        raise DomainError(f"{format_group(p_group)} is not a {p}-group")
    provider = get_provider(provider)
    factors = []
    count = 1
    for d in sorted(order_census(coprime_group)):
        f = _divisor_factor(p, r, s, d, order_census(coprime_group)[d],
                            duality, provider, p_group)
        factors.append(f)
        count *= f.factor
    return CountReport(p, r, s, coprime_group, p_group,
                       duality, count, tuple(factors), provider.name)


def abelian_count(p: int, r: int, s: int, coprime_group: AbelianGroup,
                  p_group: AbelianGroup = _TRIVIAL_GROUP,
                  provider="auto") -> CountReport:
    """Total number of abelian codes in GR(p^r, s)[A + P]."""
    return _product_count(p, r, s, coprime_group, p_group, TOTAL, provider)


def euclidean_abelian_count(p: int, r: int, s: int, coprime_group: AbelianGroup,
                            p_group: AbelianGroup = _TRIVIAL_GROUP,
                            provider="auto") -> CountReport:
    """Euclidean self-dual abelian codes in GR(p^r, s)[A + P]."""
    return _product_count(p, r, s, coprime_group, p_group, EUCLIDEAN, provider)


def hermitian_abelian_count(p: int, r: int, s: int, coprime_group: AbelianGroup,
                            p_group: AbelianGroup = _TRIVIAL_GROUP,
                            provider="auto") -> CountReport:
    """Hermitian self-dual abelian codes in GR(p^r, s)[A + P]; s even."""
    return _product_count(p, r, s, coprime_group, p_group, HERMITIAN, provider)


def euclidean_semisimple_count(p: int, r: int, s: int,
                               group: AbelianGroup) -> CountReport:
    """Euclidean self-dual codes in the semisimple case gcd(|A|, p) = 1.

    Equals (r + 1)^(number of paired classes) when r is even, 0 otherwise.
    """
    return _product_count(p, r, s, group, _TRIVIAL_GROUP, EUCLIDEAN,
                          TrivialSylowProvider())


def hermitian_semisimple_count(p: int, r: int, s: int,
                               group: AbelianGroup) -> CountReport:
    """Hermitian analog of euclidean_semisimple_count; s even."""
    return _product_count(p, r, s, group, _TRIVIAL_GROUP, HERMITIAN,
                          TrivialSylowProvider())


# -- arbitrary cyclic length over GR(p^2, s) --------------------------------------

def _split_length(p: int, s: int, n: int) -> tuple[AbelianGroup, AbelianGroup]:
    if n < 1:
        raise DomainError(f"length must be positive, got {n}")
    a = valuation(n, p)
    m = n // p**a
    coprime = AbelianGroup((m,)) if m > 1 else _TRIVIAL_GROUP
    p_part = AbelianGroup((p**a,)) if a else _TRIVIAL_GROUP
    return coprime, p_part


def cyclic_count_n(p: int, s: int, n: int) -> CountReport:
    """Cyclic codes of any length n over GR(p^2, s)."""
    coprime, p_part = _split_length(p, s, n)
    return _product_count(p, 2, s, coprime, p_part, TOTAL, ClosedFormProvider())


def euclidean_cyclic_count_n(p: int, s: int, n: int) -> CountReport:
    """Euclidean self-dual cyclic codes of any length n over GR(p^2, s)."""
    coprime, p_part = _split_length(p, s, n)
    return _product_count(p, 2, s, coprime, p_part, EUCLIDEAN, ClosedFormProvider())


def hermitian_cyclic_count_n(p: int, s: int, n: int) -> CountReport:
    """Hermitian self-dual cyclic codes of any length n over GR(p^2, s); s even."""
    coprime, p_part = _split_length(p, s, n)
    return _product_count(p, 2, s, coprime, p_part, HERMITIAN, ClosedFormProvider())
