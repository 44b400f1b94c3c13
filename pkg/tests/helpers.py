"""Shared test utilities: group generation and engine construction."""

from functools import lru_cache

from galcodes import AbelianGroup, construct_ring
from galcodes.group_ring import GroupRing
from galcodes.ideals import ExhaustiveGroupRing
from galcodes.numth import factorize


def partitions(n: int):
    """All integer partitions of n as non-increasing tuples."""
    if n == 0:
        yield ()
        return
    def rec(n, cap):
        if n == 0:
            yield ()
            return
        for first in range(min(n, cap), 0, -1):
            for rest in rec(n - first, first):
                yield (first,) + rest
    yield from rec(n, n)


def abelian_groups_of_order(n: int):
    """Every abelian group of order n, one per isomorphism class.

    Factor lists are built per prime from exponent partitions, so Z6 shows
    up as (2, 3) rather than (6,); the isomorphism class is what matters.
    """
    if n == 1:
        yield AbelianGroup(())
        return
    per_prime = []
    for p, e in factorize(n):
        per_prime.append([tuple(p**k for k in part) for part in partitions(e)])
    def rec(i):
        if i == len(per_prime):
            yield ()
            return
        for head in per_prime[i]:
            for tail in rec(i + 1):
                yield head + tail
    for factors in rec(0):
        yield AbelianGroup(factors)


def abelian_groups_up_to(bound: int):
    for n in range(1, bound + 1):
        yield from abelian_groups_of_order(n)


@lru_cache(maxsize=None)
def engine(p: int, r: int, s: int, factors: tuple, bound: int | None = None):
    ring = GroupRing(construct_ring(p, r, s), AbelianGroup(factors))
    return ExhaustiveGroupRing(ring, bound)
