# -*- coding: UTF-8 -*-
"""
Admissible Hilbert functions (O-sequences)
"""

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-09-29 19:12

from math import comb

from flotils import get_logger

from .errors import ValueException


logger = get_logger()


class HilbertFunction(object):
    """ H = (1, H(1), ..., H(s)) """

    __slots__ = ("_values",)

    def __init__(self, values):
        """
        :param values: H(0), ..., H(s); trailing zeros are dropped
        :type values: collections.abc.Iterable[int]
        :raises ValueException: H(0) != 1 or a zero before the end
        """
        values = list(values)

        while values and values[-1] == 0:
            values.pop()
        if not values or values[0] != 1:
            raise ValueException(
                "Hilbert function must start with 1: {}".format(values)
            )
        if any(v <= 0 for v in values):
            raise ValueException(
                "Hilbert function values must be positive: {}".format(values)
            )
        self._values = tuple(int(v) for v in values)

    @property
    def values(self):
        return self._values

    @property
    def k(self):
        """ Colength """
        return sum(self._values)

    @property
    def socle_degree(self):
        return len(self._values) - 1

    s = socle_degree

    def __getitem__(self, d):
        if d < 0:
            raise IndexError(d)
        if d >= len(self._values):
            return 0
        return self._values[d]

    def __len__(self):
        return len(self._values)

    def __iter__(self):
        return iter(self._values)

    def __eq__(self, other):
        if isinstance(other, HilbertFunction):
            return self._values == other.values
        if isinstance(other, (tuple, list)):
            return self._values == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._values)

    def __lt__(self, other):
        return self._values < other.values

    def to_list(self):
        return list(self._values)

    def __repr__(self):
        return "<HilbertFunction>({})".format(
            ",".join(str(v) for v in self._values)
        )


class HFConstraints(object):
    """ Filters for O-sequence enumeration """

    def __init__(
            self, h1=None, minimum=None, maximum=None, exact=None,
            max_trailing=None
    ):
        """
        :param h1: Exact H(1)
        :type h1: None | int
        :param minimum: Index -> lower bound; an index past the end counts
            as value 0
        :type minimum: None | dict[int, int]
        :param maximum: Index -> upper bound
        :type maximum: None | dict[int, int]
        :param exact: Index -> required value
        :type exact: None | dict[int, int]
        :param max_trailing: Upper bound on H(s) (H(s) <= tau filter)
        :type max_trailing: None | int
        """
        self.h1 = h1
        self.minimum = dict(minimum or {})
        self.maximum = dict(maximum or {})
        self.exact = dict(exact or {})

        if h1 is not None:
            self.exact[1] = h1
        self.max_trailing = max_trailing

        for bounds in (self.minimum, self.maximum, self.exact):
            if any(v < 0 or i < 0 for i, v in bounds.items()):
                raise ValueException("Constraints must be natural numbers")

    def upper(self, index):
        """ Upper bound at index or None """
        bounds = [
            b for b in (self.maximum.get(index), self.exact.get(index))
            if b is not None
        ]
        return min(bounds) if bounds else None

    def accepts(self, values):
        """
        Check a complete sequence

        :param values: H(0..s)
        :type values: tuple[int]
        :rtype: bool
        """
        def at(i):
            return values[i] if i < len(values) else 0

        for i, v in self.minimum.items():
            if at(i) < v:
                return False
        for i, v in self.maximum.items():
            if at(i) > v:
                return False
        for i, v in self.exact.items():
            if at(i) != v:
                return False
        if self.max_trailing is not None and values[-1] > self.max_trailing:
            return False
        return True


def macaulay_representation(h, d):
    """
    d-th Macaulay representation h = C(a_d, d) + C(a_(d-1), d-1) + ...

    :param h: Value to represent
    :type h: int
    :param d: Degree
    :type d: int
    :return: Pairs (a_i, i) with a_d > a_(d-1) > ... >= i
    :rtype: list[(int, int)]
    :raises ValueException: h < 0 or d < 1
    """
    if h < 0 or d < 1:
        raise ValueException("Need h >= 0 and d >= 1 (h={}, d={})".format(h, d))
    res = []
    i = d

    while h > 0 and i >= 1:
        a = i

        while comb(a + 1, i) <= h:
            a += 1
        res.append((a, i))
        h -= comb(a, i)
        i -= 1
    return res


def macaulay_growth_bound(h, d):
    """
    Maximal H(d+1) given H(d) = h

    :param h: H(d)
    :type h: int
    :param d: Degree, d >= 1
    :type d: int
    :rtype: int
    """
    return sum(comb(a + 1, i + 1) for a, i in macaulay_representation(h, d))


def is_o_sequence(H):
    """
    Check Macaulay's growth condition in every degree

    :param H: Hilbert function or its values
    :type H: HilbertFunction | collections.abc.Sequence[int]
    :rtype: bool
    """
    if not isinstance(H, HilbertFunction):
        try:
            H = HilbertFunction(H)
        except ValueException:
            return False
    values = H.values

    for d in range(1, len(values) - 1):
        if values[d + 1] > macaulay_growth_bound(values[d], d):
            return False
    return True


def enumerate_o_sequences(k, constraints=None):
    """
    All O-sequences with sum k, lexicographically ordered

    Degree by degree depth first search, pruned by Macaulay's bound, the
    remaining sum and upper constraints.

    :param k: Colength
    :type k: int
    :param constraints: Filters
    :type constraints: None | HFConstraints
    :rtype: list[HilbertFunction]
    :raises ValueException: k < 1
    """
    if k < 1:
        raise ValueException("Need k >= 1 (k={})".format(k))
    c = constraints or HFConstraints()
    res = []
    prefix = [1]

    def grow(remaining):
        if remaining == 0:
            if c.accepts(prefix):
                res.append(HilbertFunction(prefix))
            return
        d = len(prefix)

        if d == 1:
            cap = remaining
        else:
            cap = min(remaining, macaulay_growth_bound(prefix[-1], d - 1))
        upper = c.upper(d)

        if upper is not None:
            cap = min(cap, upper)

        for v in range(1, cap + 1):
            prefix.append(v)
            grow(remaining - v)
            prefix.pop()

    grow(k - 1)
    logger.debug("{} O-sequences with sum {}".format(len(res), k))
    return res


def expected_dimension(n, k):
    """
    Dimension (n-1)(k-1) of the curvilinear locus

    :rtype: int
    :raises ValueException: n < 1 or k < 1
    """
    if n < 1 or k < 1:
        raise ValueException("Need n, k >= 1 (n={}, k={})".format(n, k))
    return (n - 1) * (k - 1)
