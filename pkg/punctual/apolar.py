# -*- coding: UTF-8 -*-
"""
Macaulay inverse systems: apolar ideals, partials and local invariants
"""

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-10-04 17:41

from fractions import Fraction

import numpy as np
from flotils import get_logger

from .errors import ValueException, ResourceCapException
from .exact import Matrix, Polynomial, contract_monomial, monomial_basis, \
    monomials_up_to, row_basis, span_rank, parse_generators, variable
from .hilbert import HilbertFunction
from .model import ApolarReport
from .tangent import GradedIdeal


logger = get_logger()

COEFFICIENT_RANGE = (-9, 9)
""" Inclusive range of random coefficients """


class InverseSystem(object):
    """ Dual generators f_1, ..., f_t in S = k[y1, ..., yn] """

    def __init__(self, generators, n=None):
        """
        :param generators: Nonzero dual polynomials
        :type generators: list[punctual.exact.Polynomial]
        :param n: Number of variables (default: from the generators)
        :type n: None | int
        :raises ValueException: Empty system, zero or mismatched generator
        """
        generators = list(generators)

        if not generators:
            raise ValueException("Inverse system needs a generator")
        n = n or generators[0].n

        for f in generators:
            if f.n != n:
                raise ValueException(
                    "Generator {} not in {} variables".format(f, n)
                )
            if f.is_zero():
                raise ValueException("Zero generator in inverse system")
        self.n = n
        self.generators = [f.with_dual(True) for f in generators]
        """ :type : list[punctual.exact.Polynomial] """

    @classmethod
    def parse(cls, text, n=None):
        """
        From comma separated dual polynomials ("y2*y3^3, y1^2")

        :rtype: InverseSystem
        :raises punctual.errors.ParseException: Malformed text
        """
        return cls(parse_generators(text, n=n, dual=True), n=n)

    def to_dict(self):
        return [f.format() for f in self.generators]

    @classmethod
    def from_dict(cls, d, n=None):
        return cls.parse(",".join(d), n=n)

    @property
    def max_degree(self):
        return max(f.degree for f in self.generators)

    def is_homogeneous(self):
        return all(f.is_homogeneous() for f in self.generators)

    def __eq__(self, other):
        if not isinstance(other, InverseSystem):
            return NotImplemented
        return self.n == other.n and self.generators == other.generators

    def __repr__(self):
        return "<InverseSystem>({})".format(", ".join(self.to_dict()))


def _dual_columns(n, top):
    """ Monomials of S of degree <= top, highest degree first """
    res = []

    for e in range(top, -1, -1):
        res.extend(monomial_basis(n, e))
    return res


def apolar_ideal(fs):
    """
    Ann(fs) degree by degree

    Ann_e is the common kernel of g -> g o f_i on R_e; beyond the largest
    generator degree everything annihilates.

    :param fs: Homogeneous inverse system
    :type fs: InverseSystem
    :rtype: punctual.tangent.GradedIdeal
    :raises ValueException: Inhomogeneous generator
    """
    if not fs.is_homogeneous():
        raise ValueException(
            "Apolar ideal needs homogeneous generators, use "
            "apolar_local_invariants for inhomogeneous systems"
        )
    n = fs.n
    top = fs.max_degree
    bases = {}

    for e in range(top + 2):
        columns = monomial_basis(n, e)
        rows = {}
        entries = {}

        for c, a in enumerate(columns):
            for i, f in enumerate(fs.generators):
                for b, v in contract_monomial(a, f).items():
                    r = rows.setdefault((i, b), len(rows))
                    entries.setdefault(r, {})[c] = v
        matrix = Matrix(max(len(rows), 1), len(columns), entries)
        bases[e] = [
            {columns[j]: v for j, v in enumerate(vec) if v}
            for vec in matrix.kernel_basis()
        ]
    return GradedIdeal(n, bases)


def partials_module(fs):
    """
    Basis of M = R o {f_i}, reduced echelon over descending monomials

    :type fs: InverseSystem
    :rtype: list[punctual.exact.Polynomial]
    """
    columns = _dual_columns(fs.n, fs.max_degree)
    vectors = [
        dict(contract_monomial(a, f).items())
        for f in fs.generators
        for a in monomials_up_to(fs.n, f.degree)
    ]
    rows, _ = row_basis(vectors, columns)
    return [Polynomial(fs.n, row, dual=True) for row in rows]


def _action_vectors(fs):
    """
    (monomial g, tuple of g o f_i as one sparse vector) for deg g <= max deg

    :rtype: list[(tuple[int], dict)]
    """
    res = []

    for g in monomials_up_to(fs.n, fs.max_degree):
        vec = {}

        for i, f in enumerate(fs.generators):
            for b, v in contract_monomial(g, f).items():
                vec[(i, b)] = v
        res.append((g, vec))
    return res


def apolar_local_invariants(fs):
    """
    Dimension, local Hilbert function and socle dimension of R/Ann(fs)

    The algebra acts faithfully on the generator tuples: an element is
    identified with (g o f_1, ..., g o f_t). m^i is spanned by the monomials
    of degree >= i, so H(i) is a rank difference. tau = dim M - dim m o M.

    :type fs: InverseSystem
    :rtype: punctual.model.ApolarReport
    """
    top = fs.max_degree
    action = _action_vectors(fs)
    columns = [
        (i, b)
        for i, f in enumerate(fs.generators)
        for b in _dual_columns(fs.n, f.degree)
    ]
    ranks = []

    for i in range(top + 2):
        ranks.append(span_rank(
            (vec for g, vec in action if sum(g) >= i), columns
        ))
    hilbert = HilbertFunction(
        ranks[i] - ranks[i + 1] for i in range(top + 1)
    )
    dual_columns = _dual_columns(fs.n, top)
    module = [
        dict(contract_monomial(g, f).items())
        for f in fs.generators for g in monomials_up_to(fs.n, f.degree)
    ]
    shifted = [
        dict(contract_monomial(g, f).items())
        for f in fs.generators for g in monomials_up_to(fs.n, f.degree)
        if sum(g) >= 1
    ]
    tau = span_rank(module, dual_columns) - span_rank(shifted, dual_columns)
    return ApolarReport(
        generators=fs.to_dict(),
        k=ranks[0],
        hilbert=hilbert.to_list(),
        socle_dim=tau,
        graded=fs.is_homogeneous()
    )


def random_inverse_system(shape, n, seed):
    """
    One random homogeneous generator per entry of shape

    Coefficients are uniform integers in COEFFICIENT_RANGE; an all zero
    draw is repeated.

    :param shape: Generator degrees
    :type shape: list[int]
    :param n: Number of variables
    :type n: int
    :param seed: Seed of the numpy generator
    :type seed: int
    :rtype: InverseSystem
    """
    if seed is None:
        raise ValueException("Random inverse systems need a seed")
    if not shape or any(d < 0 for d in shape):
        raise ValueException("Invalid shape {}".format(shape))
    rng = np.random.default_rng(seed)
    low, high = COEFFICIENT_RANGE
    gens = []

    for d in shape:
        basis = monomial_basis(n, d)

        while True:
            coefficients = rng.integers(low, high + 1, size=len(basis))

            if np.any(coefficients):
                break
        gens.append(Polynomial(
            n, {m: int(c) for m, c in zip(basis, coefficients)}, dual=True
        ))
    return InverseSystem(gens, n=n)


def generic_inverse_system(shape, n, seed, accept, max_draws=20):
    """
    Draw random systems with seeds seed, seed+1, ... until accept holds

    :param accept: Genericity test on the local invariants
    :type accept: (punctual.model.ApolarReport) -> bool
    :param max_draws: Give up after this many draws
    :type max_draws: int
    :return: System, its report and the number of draws used
    :rtype: (InverseSystem, punctual.model.ApolarReport, int)
    :raises ResourceCapException: No accepted draw within max_draws
    """
    for draw in range(max_draws):
        fs = random_inverse_system(shape, n, seed + draw)
        report = apolar_local_invariants(fs)

        if accept(report):
            if draw:
                logger.info("Redrew {} times, accepted seed {}".format(
                    draw, seed + draw
                ))
            return fs, report, draw + 1
        logger.debug("Seed {} not generic: {}".format(seed + draw, report))
    raise ResourceCapException(
        "No generic draw among {} seeds from {}".format(max_draws, seed),
        cap=max_draws
    )


def _as_dual(value, n):
    if isinstance(value, Polynomial):
        return value.with_dual(True)
    if isinstance(value, (int, Fraction)):
        return Polynomial.one(n, dual=True) * value
    return Polynomial.parse(value, n=n, dual=True)


def standard_form_sample(alpha, cubic, low=0):
    """
    g = y1^4 + alpha*y1^2*y3 + F3(y1, y2) + F<=2(y1, y2, y3)

    :param alpha: Coefficient of y1^2*y3
    :type alpha: int | fractions.Fraction
    :param cubic: Cubic form in y1, y2
    :type cubic: str | punctual.exact.Polynomial
    :param low: Terms of degree <= 2
    :type low: int | str | punctual.exact.Polynomial
    :rtype: InverseSystem
    :raises ValueException: Cubic or low part of the wrong shape
    """
    cubic = _as_dual(cubic, 3)
    low = _as_dual(low, 3)

    if not cubic.is_zero() and (
            not cubic.is_homogeneous() or cubic.degree != 3
            or any(m[2] for m, _ in cubic.items())
    ):
        raise ValueException("F3 must be a cubic form in y1, y2")
    if not low.is_zero() and low.degree > 2:
        raise ValueException("Low part must have degree <= 2")
    y1, _, y3 = (Polynomial.var(3, i, dual=True) for i in range(3))
    f = y1 ** 4 + y1 ** 2 * y3 * Fraction(alpha) + cubic + low
    return InverseSystem([f])


def inverse_system_of(ideal):
    """
    Minimal generators of the inverse system I^perp

    In degree e, I^perp_e is the kernel of the I_e basis under the perfect
    pairing x^a o y^b = [a = b]; generators complement R_1 o I^perp_(e+1).

    :param ideal: Finite colength homogeneous ideal
    :type ideal: punctual.tangent.GradedIdeal
    :rtype: InverseSystem
    """
    n = ideal.n
    perp = {}

    for e in range(ideal.s + 1):
        columns = monomial_basis(n, e)
        index = {m: j for j, m in enumerate(columns)}
        entries = {
            r: {index[m]: v for m, v in poly.items()}
            for r, poly in enumerate(ideal.degree_basis(e))
        }
        matrix = Matrix(max(len(entries), 1), len(columns), entries)
        perp[e] = [
            {columns[j]: v for j, v in enumerate(vec) if v}
            for vec in matrix.kernel_basis()
        ]
    gens = []

    for e in range(ideal.s, -1, -1):
        columns = monomial_basis(n, e)
        lower = []

        if e < ideal.s:
            for vec in perp[e + 1]:
                f = Polynomial(n, vec, dual=True)

                for j in range(n):
                    lower.append(dict(contract_monomial(variable(n, j), f).items()))
        lower_rows, lower_pivots = row_basis(lower, columns)
        residues = []

        for vec in perp[e]:
            res = dict(vec)

            for lrow, p in zip(lower_rows, lower_pivots):
                c = res.get(p)

                if not c:
                    continue
                for m, v in lrow.items():
                    res[m] = res.get(m, 0) - c * v
            residues.append({m: v for m, v in res.items() if v})
        new_rows, _ = row_basis(residues, columns)
        gens.extend(Polynomial(n, row, dual=True) for row in new_rows)
    return InverseSystem(gens, n=n)
