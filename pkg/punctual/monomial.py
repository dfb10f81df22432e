# -*- coding: UTF-8 -*-
"""
Monomial ideals of finite colength: staircases, Hilbert functions, strong
stability and exhaustive enumeration
"""

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-09-30 18:27

import math
from collections import deque
from functools import cached_property

from flotils import get_logger

from .errors import ValueException, ParseException, \
    InfiniteColengthException, InadmissibleException, ResourceCapException
from .exact import grevlex_key, lex_key, monomial_basis, monomial_divides, \
    format_monomial, variable, Polynomial, parse_generators
from .hilbert import HilbertFunction, is_o_sequence


logger = get_logger()

DEFAULT_NODE_CAP = 10 ** 7


def _divisors_by_variable(m):
    """ m / x_j for every variable x_j dividing m """
    for j, e in enumerate(m):
        if e:
            yield m[:j] + (e - 1,) + m[j + 1:]


def _multiples_by_variable(m):
    for j in range(len(m)):
        yield m[:j] + (m[j] + 1,) + m[j + 1:]


def _immediate_moves(m):
    """ m * x_(i+1) / x_i for every x_i dividing m (towards larger index) """
    for i in range(len(m) - 1):
        if m[i]:
            yield m[:i] + (m[i] - 1, m[i + 1] + 1) + m[i + 2:]


class MonomialIdeal(object):
    """
    Monomial ideal given by its minimal generators

    Immutable; staircase and Hilbert function are computed on first use.
    """

    def __init__(self, n, generators):
        """
        :param n: Number of variables
        :type n: int
        :param generators: Monomials (exponent vectors); made minimal
        :type generators: collections.abc.Iterable[tuple[int]]
        :raises ValueException: Empty or malformed generator set
        """
        gens = {tuple(g) for g in generators}

        if not gens:
            raise ValueException("Need at least one generator")
        if any(len(g) != n for g in gens):
            raise ValueException("Generator of wrong length for n={}".format(n))
        minimal = [
            g for g in gens
            if not any(h != g and monomial_divides(h, g) for h in gens)
        ]
        minimal.sort(key=grevlex_key, reverse=True)
        self.n = n
        """ Number of variables """
        self.generators = tuple(minimal)
        """ Minimal generators, descending grevlex """

    @classmethod
    def from_staircase(cls, n, staircase):
        """
        Ideal whose standard monomials are a finite order ideal

        The minimal generators are the outer corners: monomials outside the
        staircase all of whose divisors by a variable lie inside it.

        :param n: Number of variables
        :type n: int
        :param staircase: Division closed monomial set
        :type staircase: collections.abc.Iterable[tuple[int]]
        :rtype: MonomialIdeal
        """
        stairs = frozenset(tuple(m) for m in staircase)

        if not stairs:
            return cls(n, [(0,) * n])
        corners = set()

        for m in stairs:
            for c in _multiples_by_variable(m):
                if c in stairs:
                    continue
                if all(d in stairs for d in _divisors_by_variable(c)):
                    corners.add(c)
        new = cls(n, corners)
        new.__dict__['staircase'] = stairs
        return new

    @classmethod
    def parse(cls, text, n=None):
        """
        Parse comma separated monomial generators, e.g. "x1^3, x2^2, x1*x3"

        :rtype: MonomialIdeal
        :raises ParseException: Non-monomial or malformed generator
        """
        polys = parse_generators(text, n=n, dual=False)
        n = polys[0].n
        gens = []
        offset = 0

        for part, p in zip(text.split(","), polys):
            if len(p.items()) != 1:
                raise ParseException(
                    "Not a monomial: '{}'".format(part.strip()), text, offset
                )
            gens.append(next(iter(p.items()))[0])
            offset += len(part) + 1
        return cls(n, gens)

    def to_dict(self):
        return {
            'n': self.n,
            'gens': [format_monomial(g) for g in self.generators],
        }

    @classmethod
    def from_dict(cls, d):
        return cls.parse(",".join(d['gens']), n=d['n'])

    @property
    def key(self):
        """ Canonical sort key """
        return tuple(grevlex_key(g) for g in self.generators)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.generators == other.generators

    def __hash__(self):
        return hash((self.n, self.generators))

    def __repr__(self):
        return "<MonomialIdeal>({})".format(
            ", ".join(format_monomial(g) for g in self.generators)
        )

    def contains(self, m):
        """ Monomial membership """
        return any(monomial_divides(g, m) for g in self.generators)

    __contains__ = contains

    def is_finite(self):
        """ Every variable has a pure power among the generators """
        pure = set()

        for g in self.generators:
            support = [i for i, e in enumerate(g) if e]

            if len(support) == 1:
                pure.add(support[0])
            elif not support:
                return True
        return len(pure) == self.n

    @cached_property
    def staircase(self):
        """
        Standard monomials

        :rtype: frozenset[tuple[int]]
        :raises InfiniteColengthException: Infinite colength
        """
        if not self.is_finite():
            raise InfiniteColengthException(
                "Ideal {} has infinite colength".format(self)
            )
        seen = set()
        queue = deque()
        one = (0,) * self.n

        if not self.contains(one):
            seen.add(one)
            queue.append(one)
        while queue:
            m = queue.popleft()

            for c in _multiples_by_variable(m):
                if c not in seen and not self.contains(c):
                    seen.add(c)
                    queue.append(c)
        return frozenset(seen)

    @cached_property
    def hilbert(self):
        """
        :rtype: HilbertFunction
        :raises InfiniteColengthException: Infinite colength
        """
        stairs = self.staircase

        if not stairs:
            raise InfiniteColengthException("Zero quotient has no Hilbert function")
        counts = [0] * (max(sum(m) for m in stairs) + 1)

        for m in stairs:
            counts[sum(m)] += 1
        return HilbertFunction(counts)

    def standard_basis(self, d):
        """ Standard monomials of degree d, descending grevlex """
        if d < 0:
            return []
        stairs = self.staircase
        return [m for m in monomial_basis(self.n, d) if m in stairs]

    def degree_part(self, d):
        """ Monomials of I in degree d, descending grevlex """
        if d < 0:
            return []
        return [m for m in monomial_basis(self.n, d) if self.contains(m)]

    def generator_polynomials(self):
        return [Polynomial.monomial(g) for g in self.generators]


def minimal_generators(gens, n=None):
    """
    Divisibility minimal generating set

    :param gens: Monomials
    :type gens: collections.abc.Iterable[tuple[int]]
    :rtype: MonomialIdeal
    """
    gens = [tuple(g) for g in gens]

    if not gens:
        raise ValueException("Need at least one generator")
    return MonomialIdeal(n or len(gens[0]), gens)


def colength(ideal):
    """
    dim R/I, math.inf when some variable has no pure power in I

    :type ideal: MonomialIdeal
    :rtype: int | float
    """
    if not ideal.is_finite():
        return math.inf
    return len(ideal.staircase)


def hilbert_function(ideal):
    """ :rtype: punctual.hilbert.HilbertFunction """
    return ideal.hilbert


def is_strongly_stable(ideal):
    """
    Closed under x_j -> x_i for i < j (x1 dominant)

    :type ideal: MonomialIdeal
    :rtype: bool
    """
    for u in ideal.generators:
        for j, e in enumerate(u):
            if not e:
                continue
            for i in range(j):
                moved = list(u)
                moved[j] -= 1
                moved[i] += 1

                if not ideal.contains(tuple(moved)):
                    return False
    return True


def _removable(stairs):
    """ Maximal elements of an order ideal """
    return [
        m for m in stairs
        if not any(c in stairs for c in _multiples_by_variable(m))
    ]


def enumerate_monomial_ideals(n, k, node_cap=DEFAULT_NODE_CAP):
    """
    All monomial ideals of colength exactly k in n variables

    Reverse search over staircases: a staircase is the parent of every
    staircase obtained by adding an outer corner c for which c is the
    grevlex largest removable element of the result, so every staircase is
    visited exactly once.

    :param n: Number of variables
    :type n: int
    :param k: Colength
    :type k: int
    :param node_cap: Maximal number of visited staircases
    :type node_cap: int
    :return: Ideals sorted by canonical key
    :rtype: list[MonomialIdeal]
    :raises ResourceCapException: More than node_cap staircases visited
    """
    if n < 1 or k < 1:
        raise ValueException("Need n, k >= 1 (n={}, k={})".format(n, k))
    one = (0,) * n
    res = []
    visited = 0
    stack = [frozenset([one])]

    while stack:
        stairs = stack.pop()
        visited += 1

        if visited > node_cap:
            logger.error(
                "Node cap {} exceeded for n={}, k={}".format(node_cap, n, k)
            )
            raise ResourceCapException(
                "Enumeration of n={}, k={} exceeds {} nodes".format(
                    n, k, node_cap
                ), node_cap
            )
        if len(stairs) == k:
            res.append(MonomialIdeal.from_staircase(n, stairs))
            continue
        corners = set()

        for m in stairs:
            for c in _multiples_by_variable(m):
                if c not in stairs and all(
                        d in stairs for d in _divisors_by_variable(c)
                ):
                    corners.add(c)
        for c in corners:
            child = stairs | {c}
            top = max(_removable(child), key=grevlex_key)

            if top == c:
                stack.append(child)
    res.sort(key=lambda ideal: ideal.key)
    logger.debug("n={}, k={}: {} monomial ideals ({} nodes)".format(
        n, k, len(res), visited
    ))
    return res


def _closed_slices(candidates, limit):
    """
    Nonempty subsets of a degree slice closed under moves x_i -> x_j, i < j

    Grown one element at a time: c may join once all its immediate moves
    are present.

    :param candidates: Admissible monomials of the slice
    :type candidates: frozenset[tuple[int]]
    :param limit: Maximal subset size
    :type limit: int
    :rtype: list[frozenset[tuple[int]]]
    """
    found = []
    seen = {frozenset()}
    frontier = [frozenset()]

    for _ in range(limit):
        nxt = []

        for subset in frontier:
            for c in candidates:
                if c in subset:
                    continue
                if all(mv in subset for mv in _immediate_moves(c)):
                    grown = subset | {c}

                    if grown not in seen:
                        seen.add(grown)
                        nxt.append(grown)
        found.extend(nxt)
        frontier = nxt

        if not frontier:
            break
    return found


def enumerate_strongly_stable(n, k):
    """
    All strongly stable ideals of colength k in n variables

    The staircase grows one degree slice at a time. Slice d is chosen among
    the move-closed subsets of the monomials whose divisors all lie in
    slice d-1; the staircase is complete when the total reaches k.

    :param n: Number of variables
    :type n: int
    :param k: Colength
    :type k: int
    :return: Ideals sorted by canonical key
    :rtype: list[MonomialIdeal]
    """
    if n < 1 or k < 1:
        raise ValueException("Need n, k >= 1 (n={}, k={})".format(n, k))
    one = (0,) * n
    res = []

    def grow(staircase, last, remaining):
        if remaining == 0:
            res.append(MonomialIdeal.from_staircase(n, staircase))
            return
        candidates = set()

        for m in last:
            for c in _multiples_by_variable(m):
                if all(d in last for d in _divisors_by_variable(c)):
                    candidates.add(c)
        for subset in _closed_slices(frozenset(candidates), remaining):
            grow(staircase | subset, subset, remaining - len(subset))

    grow(frozenset([one]), frozenset([one]), k - 1)
    res.sort(key=lambda ideal: ideal.key)
    logger.debug("n={}, k={}: {} strongly stable ideals".format(n, k, len(res)))
    return res


def lex_segment_ideal(H, n):
    """
    Lexicographic segment ideal with Hilbert function H

    In every degree the standard monomials are the lex smallest H(d)
    monomials.

    :param H: Admissible Hilbert function
    :type H: punctual.hilbert.HilbertFunction | collections.abc.Sequence[int]
    :param n: Number of variables
    :type n: int
    :rtype: MonomialIdeal
    :raises InadmissibleException: H is no O-sequence or H(1) > n
    """
    if not isinstance(H, HilbertFunction):
        H = HilbertFunction(H)
    if not is_o_sequence(H):
        raise InadmissibleException("{} is not an O-sequence".format(H))
    if H[1] > n:
        raise InadmissibleException(
            "H(1)={} exceeds n={}".format(H[1], n)
        )
    staircase = set()

    for d in range(len(H)):
        slice_ = sorted(monomial_basis(n, d), key=lex_key)
        staircase.update(slice_[:H[d]])
    ideal = MonomialIdeal.from_staircase(n, staircase)

    if MonomialIdeal(n, ideal.generators).hilbert != H:
        raise InadmissibleException(
            "{} is not realized by a lex ideal".format(H)
        )
    return ideal


def curvilinear_ideal(n, k):
    """ (x1, ..., x_(n-1), x_n^k) """
    gens = [variable(n, i) for i in range(n - 1)]
    gens.append((0,) * (n - 1) + (k,))
    return MonomialIdeal(n, gens)
