# -*- coding: UTF-8 -*-
"""
Monomial k-regular maps, the tau-lift and sampled rank verification
"""

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-10-08 21:16

from fractions import Fraction
from math import comb

import numpy as np
from flotils import get_logger

from .errors import ValueException
from .exact import Matrix, Polynomial, monomial_basis, monomials_up_to, \
    variable
from .model import RegularityVerdict
from .tangent import graded_ideal_from_generators


logger = get_logger()

POINT_RANGE = (-20, 20)
""" Inclusive coordinate range of sample points """
PROJECTION_RANGE = (-9, 9)


class PolyMap(object):
    """ x -> (f_1(x) : ... : f_N(x)) """

    def __init__(self, coordinates):
        """
        :param coordinates: Polynomials in one common ring
        :type coordinates: list[punctual.exact.Polynomial]
        :raises ValueException: No coordinates or mixed rings
        """
        coordinates = list(coordinates)

        if not coordinates:
            raise ValueException("Map needs at least one coordinate")
        n = coordinates[0].n

        if any(f.n != n for f in coordinates):
            raise ValueException("Coordinates live in different rings")
        self.coordinates = coordinates
        self.n = n
        """ Source dimension """

    @property
    def N(self):
        return len(self.coordinates)

    def evaluate(self, point):
        """ :rtype: list[fractions.Fraction] """
        return [f.evaluate(point) for f in self.coordinates]

    def __repr__(self):
        return "<PolyMap>(n={}, N={})".format(self.n, self.N)


class BlockMap(object):
    """
    f^tau: x -> span(f(x) e_1, ..., f(x) e_tau) in k^(tau N)

    An optional projection (M x tau N rows) composes the lift with a linear
    map k^(tau N) -> k^M.
    """

    def __init__(self, base, tau=1, projection=None):
        if tau < 1:
            raise ValueException("Need tau >= 1 (tau={})".format(tau))
        self.base = base
        """ :type : PolyMap """
        self.tau = tau
        self.projection = projection
        """ :type : None | list[list[fractions.Fraction]] """

        if projection is not None and any(
                len(row) != tau * base.N for row in projection
        ):
            raise ValueException("Projection has wrong width")

    @property
    def ambient(self):
        if self.projection is not None:
            return len(self.projection)
        return self.tau * self.base.N

    def rows(self, point):
        """
        Spanning vectors of the subspace at point

        :rtype: list[list[fractions.Fraction]]
        """
        value = self.base.evaluate(point)
        N = self.base.N
        res = []

        for j in range(self.tau):
            row = [Fraction(0)] * (self.tau * N)
            row[j * N:(j + 1) * N] = value
            res.append(row)
        if self.projection is None:
            return res
        return [
            [sum((p * v for p, v in zip(prow, row)), Fraction(0))
             for prow in self.projection]
            for row in res
        ]

    def subspace_dim(self, point):
        return Matrix.from_rows(self.rows(point), self.ambient).rank()

    def __repr__(self):
        return "<BlockMap>(tau={}, ambient={})".format(self.tau, self.ambient)


def monomial_regular_map(n, k):
    """
    All monomials of degree <= k-1, ascending degree

    :rtype: PolyMap
    """
    if n < 1 or k < 1:
        raise ValueException("Need n, k >= 1 (n={}, k={})".format(n, k))
    res = PolyMap(Polynomial.monomial(m) for m in monomials_up_to(n, k - 1))

    if res.N != comb(n + k - 1, n):
        raise ValueException("Unexpected coordinate count {}".format(res.N))
    return res


def tau_power(f, tau):
    """ :rtype: BlockMap """
    return BlockMap(f, tau)


def _as_block(F):
    if isinstance(F, PolyMap):
        return BlockMap(F, 1)
    return F


def _sample_points(rng, n, k):
    """ k distinct integer points in POINT_RANGE^n """
    low, high = POINT_RANGE

    if k > (high - low + 1) ** n:
        raise ValueException("Cannot draw {} distinct points".format(k))
    points = []
    seen = set()

    while len(points) < k:
        p = tuple(int(v) for v in rng.integers(low, high + 1, size=n))

        if p not in seen:
            seen.add(p)
            points.append(p)
    return points


def tuple_rank(F, points):
    """
    Rank of the stacked blocks of F at a k-tuple and its sorted witness form

    Blocks are stacked in sorted point order, so any ordering of the same
    tuple gives the same matrix.

    :type F: PolyMap | BlockMap
    :param points: Distinct points of the source
    :type points: list[tuple[int]]
    :rtype: (int, list[list[int]])
    """
    F = _as_block(F)
    ordered = sorted(tuple(p) for p in points)
    rows = [row for p in ordered for row in F.rows(p)]
    return Matrix.from_rows(rows, F.ambient).rank(), [list(p) for p in ordered]


def check_k_regular(F, k, trials=100, seed=None):
    """
    Sampled k-regularity: k distinct points span a k*tau dimensional space

    :param F: Map or lifted map
    :type F: PolyMap | BlockMap
    :param k: Number of points
    :type k: int
    :param trials: Number of sampled k-tuples
    :type trials: int
    :param seed: Seed of the numpy generator
    :type seed: int
    :rtype: punctual.model.RegularityVerdict
    """
    if trials < 1 or k < 1:
        raise ValueException("Need trials, k >= 1")
    if seed is None:
        raise ValueException("Regularity sampling needs a seed")
    F = _as_block(F)
    rng = np.random.default_rng(seed)
    target = k * F.tau

    for trial in range(trials):
        points = _sample_points(rng, F.base.n, k)
        rank, witness = tuple_rank(F, points)

        if rank < target:
            logger.debug("Trial {}: rank {} < {}".format(trial, rank, target))
            return RegularityVerdict(
                passed=False, k=k, tau=F.tau, trials=trial + 1, seed=seed,
                witness=witness
            )
    return RegularityVerdict(
        passed=True, k=k, tau=F.tau, trials=trials, seed=seed
    )


def project_map(F, target_dim, seed):
    """
    Compose with a random integer projection k^(tau N) -> k^target_dim

    :type F: PolyMap | BlockMap
    :rtype: BlockMap
    """
    F = _as_block(F)

    if target_dim < 1:
        raise ValueException("Need target_dim >= 1")
    rng = np.random.default_rng(seed)
    low, high = PROJECTION_RANGE
    draw = rng.integers(low, high + 1, size=(target_dim, F.ambient))
    projection = [[Fraction(int(v)) for v in row] for row in draw]

    if F.projection is not None:
        projection = [
            [
                sum((p * F.projection[r][c] for r, p in enumerate(prow)),
                    Fraction(0))
                for c in range(F.tau * F.base.N)
            ]
            for prow in projection
        ]
    return BlockMap(F.base, F.tau, projection)


def check_projected(F, k, target_dim, trials=100, seed=None, max_draws=20):
    """
    Project with seeds seed, seed+1, ... until the projection stays k-regular

    :return: Passing verdict, or the last failing one after max_draws
    :rtype: punctual.model.RegularityVerdict
    """
    if seed is None:
        raise ValueException("Projection needs a seed")
    verdict = None

    for draw in range(max_draws):
        projected = project_map(F, target_dim, seed + draw)
        verdict = check_k_regular(projected, k, trials, seed + draw)
        verdict.draws = draw + 1

        if verdict.passed:
            if draw:
                logger.info("Projection regular after {} draws (seed {})".format(
                    draw + 1, seed + draw
                ))
            return verdict
        logger.debug("Non-generic projection for seed {}".format(seed + draw))
    logger.warning("No regular projection to dimension {} in {} draws".format(
        target_dim, max_draws
    ))
    return verdict


def _taylor_coefficients(poly, p, k):
    """
    Coefficients of (t-p)^m, m < k, of a univariate polynomial

    :rtype: list[fractions.Fraction]
    """
    p = Fraction(p)
    res = []

    for m in range(k):
        res.append(sum(
            (c * comb(e[0], m) * p ** (e[0] - m)
             for e, c in poly.items() if e[0] >= m),
            Fraction(0)
        ))
    return res


def curvilinear_span_dim(f, gamma, p, k):
    """
    Dimension of the span of f over the k-jet of the curve gamma at p

    Rank of the k x N matrix of Taylor coefficients of f(gamma(t)) at p.

    :param f: Map
    :type f: PolyMap
    :param gamma: One univariate polynomial per source variable
    :type gamma: list[punctual.exact.Polynomial]
    :param p: Curve parameter
    :type p: int | fractions.Fraction
    :param k: Jet length
    :type k: int
    :rtype: int
    """
    if len(gamma) != f.n or any(g.n != 1 for g in gamma):
        raise ValueException("Need {} univariate polynomials".format(f.n))
    columns = [
        _taylor_coefficients(c.substitute(gamma), p, k) for c in f.coordinates
    ]
    rows = [[col[m] for col in columns] for m in range(k)]
    return Matrix.from_rows(rows, f.N).rank()


def socle_reduction_example(alpha, beta, lam=None):
    """
    Point of the tangent span of Spec k[x1,x2,x3]/m^2 reduced to Z' = V(lam)

    p = sum alpha_i e_(i+1) + beta_i f_(i+1) lies in the span for Z' iff both
    coordinate functionals factor through m/(m^2 + lam). The span is built
    from the normal forms modulo the ideal (lam, m^2), independently of how
    lam was chosen.

    :param alpha: (alpha_1, alpha_2, alpha_3)
    :param beta: (beta_1, beta_2, beta_3)
    :param lam: Explicit normal vector (default: first kernel vector)
    :return: {"lambda": [..], "verification": bool}
    :rtype: dict
    :raises ValueException: alpha and beta both zero or lam zero
    """
    alpha = [Fraction(v) for v in alpha]
    beta = [Fraction(v) for v in beta]

    if len(alpha) != 3 or len(beta) != 3:
        raise ValueException("alpha and beta need three coordinates")
    if not any(alpha) and not any(beta):
        raise ValueException("alpha and beta are both zero")
    if lam is None:
        lam = list(Matrix.from_rows([alpha, beta]).kernel_basis()[0])
    lam = [Fraction(v) for v in lam]

    if len(lam) != 3 or not any(lam):
        raise ValueException("lambda must be a nonzero vector of length 3")
    xs = [variable(3, i) for i in range(3)]
    ideal = graded_ideal_from_generators(
        [Polynomial(3, {x: v for x, v in zip(xs, lam) if v})]
        + [Polynomial.monomial(m) for m in monomial_basis(3, 2)],
        n=3
    )
    # functionals on m/(m^2 + lam), read off the normal forms of x1, x2, x3
    functionals = [
        [ideal.reduce_monomial(x).get(q, Fraction(0)) for x in xs]
        for q in ideal.quotient_basis(1)
    ]
    zero = [Fraction(0)] * 3
    span = [phi + zero for phi in functionals] \
        + [zero + phi for phi in functionals]
    base_rank = Matrix.from_rows(span, 6).rank() if span else 0
    verified = Matrix.from_rows(span + [alpha + beta], 6).rank() == base_rank
    return {
        'lambda': [str(v) for v in lam],
        'verification': verified,
    }
