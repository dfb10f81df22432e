# -*- coding: UTF-8 -*-
"""
Closed form locus dimensions, bounds and counterexample margins
"""

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-10-06 19:58

from math import comb

from flotils import get_logger

from .errors import ValueException
from .hilbert import HilbertFunction, expected_dimension, is_o_sequence
from .model import DimensionEstimate, MarginReport


logger = get_logger()

CITE_NEGLIGIBLE = "H=(1,n,b,1,...,1) negligible up to sum 12, sharp at 13"
CITE_TAU_GEQ_3 = "tau>=3 counterexample, family Gr(3, C(n+1,2))"
CITE_TAU_1 = "tau=1 counterexample, H=(1,n,n,1)"
CITE_TAU_2 = "tau=2 counterexample, general cubic and quadric"
CITE_1N32 = "H=(1,n,3,2) loci"
CITE_1442 = "H=(1,4,4,2) locus"
CITE_14321 = "H=(1,4,3,2,1) loci"

COUNTEREXAMPLE_KINDS = ("tau_geq_3", "tau_1", "tau_2")

MARGIN_14321_CASES = (
    ("quartic in two variables", 17, 8),
    ("perfect quartic with cubic", 18, 10),
    ("l1^4+l2^4, q", 14, 14),
    ("l1^3*l2, q", 14, 14),
    ("special quadrics", 12, 18),
    ("general", 17, 13),
)
""" (case, graded locus bound, positive tangent dimension) """


def gorenstein_locus_dim(n, b, s):
    """
    Dimension of the Gorenstein locus with H = (1, n, b, 1, ..., 1)

    (n-1)(s-3) + (n-b)b + C(b+2,3) - 1 + C(n+2,2) - (1+n+b)

    :param n: Embedding dimension H(1)
    :type n: int
    :param b: H(2)
    :type b: int
    :param s: Socle degree
    :type s: int
    :rtype: int
    :raises ValueException: s < 3 or b outside 1..n
    """
    if s < 3 or not 1 <= b <= n:
        raise ValueException(
            "Need s >= 3 and 1 <= b <= n (n={}, b={}, s={})".format(n, b, s)
        )
    return (n - 1) * (s - 3) + (n - b) * b + comb(b + 2, 3) - 1 \
        + comb(n + 2, 2) - (1 + n + b)


def _h3eq1_shape(H):
    values = H.values if isinstance(H, HilbertFunction) else tuple(H)

    if len(values) < 4 or values[0] != 1 or any(v != 1 for v in values[3:]):
        raise ValueException(
            "Expected H=(1,n,b,1,...,1), got {}".format(values)
        )
    return values[1], values[2], len(values) - 1


def h3eq1_bound(H, n=None):
    """
    max(dim Gor(H - T^2) + C(n+1,2) - b - 1, dim Gor(H))

    The first branch (a minimal generator in degree two) needs 2 <= b <= n+1,
    the second b <= n.

    :param H: (1, n, b, 1, ..., 1)
    :type H: punctual.hilbert.HilbertFunction | collections.abc.Sequence[int]
    :param n: Embedding dimension (must equal H(1))
    :type n: None | int
    :rtype: int
    :raises ValueException: Malformed H or no applicable branch
    """
    h1, b, s = _h3eq1_shape(H)

    if n is not None and n != h1:
        raise ValueException("H(1)={} but n={}".format(h1, n))
    n = h1
    branches = []

    if 2 <= b <= n + 1:
        branches.append(
            gorenstein_locus_dim(n, b - 1, s) + comb(n + 1, 2) - b - 1
        )
    if 1 <= b <= n:
        branches.append(gorenstein_locus_dim(n, b, s))
    if not branches:
        raise ValueException("No branch applies to H={}".format(H))
    return max(branches)


def check_h3eq1_negligible(sum_cap=12):
    """
    Margins of all H = (1, n, b, 1) with sum <= sum_cap and b <= n+1

    Longer tails only add n-1 to both sides, so s = 3 suffices.

    :rtype: list[punctual.model.MarginReport]
    """
    res = []

    for n in range(1, sum_cap):
        for b in range(1, n + 2):
            values = (1, n, b, 1)
            k = sum(values)

            if k > sum_cap or not is_o_sequence(values):
                continue
            res.append(MarginReport(
                name="H=({})".format(",".join(str(v) for v in values)),
                locus=h3eq1_bound(values),
                expected=expected_dimension(n, k),
                citation=CITE_NEGLIGIBLE
            ))
    violating = [r.name for r in res if not r.negligible]

    if violating:
        logger.info("Violating up to sum {}: {}".format(sum_cap, violating))
    return res


def h2eq2_tangent_series(n, s, t):
    """
    Nonnegative tangent series at the Borel ideal with H(2..t) = 2

    T^(s-t-1) + (C(n+1,2)-2-(n-1)) (T^(t-2) + T^(s-2))
    + (n-1) sum_(i=2..s) H(i) T^(i-2), negative powers dropped.

    :param n: Embedding dimension
    :type n: int
    :param s: Socle degree
    :type s: int
    :param t: Last degree with H = 2 (h2_last_degree)
    :type t: int
    :return: Degree -> dimension
    :rtype: dict[int, int]
    :raises ValueException: Outside 1 <= t <= s, n >= 2
    """
    if n < 2 or not 1 <= t <= s:
        raise ValueException(
            "Need n >= 2 and 1 <= t <= s (n={}, s={}, t={})".format(n, s, t)
        )
    res = {}

    def add(exponent, value):
        if exponent >= 0 and value:
            res[exponent] = res.get(exponent, 0) + value

    add(s - t - 1, 1)
    quadrics = comb(n + 1, 2) - 2 - (n - 1)
    add(t - 2, quadrics)
    add(s - 2, quadrics)

    for i in range(2, s + 1):
        add(i - 2, (n - 1) * (2 if i <= t else 1))
    return dict(sorted(res.items()))


def h2eq2_hilbert(n, s, t):
    """ (1, n, 2, ..., 2, 1, ..., 1) with the last 2 in degree t """
    return HilbertFunction(
        [1, n] + [2 if i <= t else 1 for i in range(2, s + 1)]
    )


def fiber_dim(n, a, b):
    """
    Fiber dimension (C(n+1,2) - a) * b for H = (1, n, a, b)

    :rtype: int
    :raises ValueException: a > C(n+1,2)
    """
    quad_gen_count = comb(n + 1, 2) - a

    if quad_gen_count < 0 or b < 0:
        raise ValueException(
            "Inadmissible H=(1,{},{},{})".format(n, a, b)
        )
    return quad_gen_count * b


def N_bound(tau, k, n):
    """
    Target dimension bound for k-regular maps to Gr(tau, N)

    (n-1)(k-1) + tau*k when k <= 8 or (tau <= 2 and k <= 11),
    kn - 1 + tau*k otherwise.

    :rtype: int
    :raises ValueException: Argument < 1
    """
    if tau < 1 or k < 1 or n < 1:
        raise ValueException(
            "Need tau, k, n >= 1 (tau={}, k={}, n={})".format(tau, k, n)
        )
    if k <= 8 or (tau <= 2 and k <= 11):
        return (n - 1) * (k - 1) + tau * k
    return k * n - 1 + tau * k


def areole_bound(tau, k, dims):
    """
    max over i = 1..k of tau*i - 1 + dims[i-1]

    :param dims: dims[i-1] = dim of the tau-punctual locus of degree i
    :type dims: collections.abc.Sequence[int]
    :rtype: int
    :raises ValueException: len(dims) != k
    """
    if len(dims) != k or k < 1:
        raise ValueException("Need exactly k={} dimensions".format(k))
    return max(tau * i - 1 + dims[i - 1] for i in range(1, k + 1))


def counterexample_margin(kind, n):
    """
    Locus minus expected dimension for the three counterexample families

    :param kind: One of COUNTEREXAMPLE_KINDS
    :type kind: str
    :param n: Number of variables
    :type n: int
    :rtype: punctual.model.MarginReport
    :raises ValueException: Unknown kind or n out of range
    """
    if kind == "tau_geq_3":
        if n < 3:
            raise ValueException("tau_geq_3 needs n >= 3")
        # H = (1, n, 3), k = n + 4
        return MarginReport(
            name="tau_geq_3 n={}".format(n),
            locus=3 * (comb(n + 1, 2) - 3),
            expected=expected_dimension(n, n + 4),
            citation=CITE_TAU_GEQ_3
        )
    if kind == "tau_1":
        if n < 2:
            raise ValueException("tau_1 needs n >= 2")
        # H = (1, n, n, 1), k = 2n + 2
        return MarginReport(
            name="tau_1 n={}".format(n),
            locus=gorenstein_locus_dim(n, n, 3),
            expected=expected_dimension(n, 2 * n + 2),
            citation=CITE_TAU_1
        )
    if kind == "tau_2":
        if n < 2:
            raise ValueException("tau_2 needs n >= 2")
        # H = (1, n, n+1, 1), k = 2n + 3
        graded = comb(n + 2, 3) - 1 + (comb(n + 1, 2) - n - 1)
        return MarginReport(
            name="tau_2 n={}".format(n),
            locus=graded + fiber_dim(n, n + 1, 1),
            expected=expected_dimension(n, 2 * n + 3),
            citation=CITE_TAU_2
        )
    raise ValueException("Unknown counterexample kind: {}".format(kind))


def dimension_estimates(t_zero, t_pos, base_dim=None, fiber_dim=None):
    """
    The tangent, base-and-tangent-to-fiber, tangent-to-base-and-fiber and
    base-and-fiber estimates

    :rtype: punctual.model.DimensionEstimate
    :raises ValueException: Missing tangent data
    """
    if t_zero is None or t_pos is None:
        raise ValueException("Need both T0 and T>0")
    return DimensionEstimate(
        t_zero=t_zero, t_pos=t_pos, base_dim=base_dim, fiber_dim=fiber_dim
    )


def stratum_1n321_loci(n):
    """
    Locus dimensions for H = (1, n, 3, 2, 1)

    :return: [l1^4, l2^3, q], [Q, q], [general quartic], [l^4, cubic]
    :rtype: list[int]
    """
    if n < 2:
        raise ValueException("Need n >= 2")
    return [
        2 * n + comb(n + 1, 2) - 5,
        2 * n + comb(n + 1, 2) - 4,
        2 * n,
        3 * n - 2,
    ]


def stratum_13421_loci():
    """ Locus dimensions for H = (1, 3, 4, 2, 1) """
    return [8, 9, 10, 8, 9]


def margin_1n32(n, tau_bounded=True):
    """
    H = (1, n, 3, 2)

    With tau <= 2 the graded locus is at most 3n+1; without the restriction
    it is 2(n-1) + C(n+1,2) - 2. The fiber is n(n+1) - 6 in both cases.

    :rtype: punctual.model.MarginReport
    """
    if n < 2:
        raise ValueException("Need n >= 2")

    if tau_bounded:
        graded = 3 * n + 1
    else:
        graded = 2 * (n - 1) + comb(n + 1, 2) - 2
    return MarginReport(
        name="H=(1,{},3,2){}".format(n, " tau<=2" if tau_bounded else ""),
        locus=graded + fiber_dim(n, 3, 2),
        expected=expected_dimension(n, n + 6),
        citation=CITE_1N32
    )


def margin_1442():
    """ H = (1, 4, 4, 2), tau = 2 """
    return MarginReport(
        name="H=(1,4,4,2)",
        locus=18 + fiber_dim(4, 4, 2),
        expected=expected_dimension(4, 11),
        citation=CITE_1442
    )


def margin_14321(graded, t_pos, case=None):
    """
    H = (1, 4, 3, 2, 1), tau = 2: graded locus plus positive tangent part

    :rtype: punctual.model.MarginReport
    """
    return MarginReport(
        name="H=(1,4,3,2,1) {}".format(case or "").strip(),
        locus=graded + t_pos,
        expected=expected_dimension(4, 11),
        citation=CITE_14321
    )


def margins_14321():
    """ All cases of MARGIN_14321_CASES """
    return [
        margin_14321(graded, t_pos, case)
        for case, graded, t_pos in MARGIN_14321_CASES
    ]
