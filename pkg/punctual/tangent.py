# -*- coding: UTF-8 -*-
"""
Graded tangent spaces dim Hom_R(I, R/I)_d of homogeneous ideals
"""

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-10-02 20:05

from fractions import Fraction

from flotils import get_logger

from .errors import ValueException, InfiniteColengthException
from .exact import Matrix, Polynomial, monomial_basis, monomial_mul, \
    monomial_divides, monomial_quotient, monomial_lcm, row_basis, span_rank, \
    variable
from .hilbert import HilbertFunction, expected_dimension
from .model import TangentSeries
from .monomial import MonomialIdeal, enumerate_strongly_stable


logger = get_logger()

DEFAULT_DEGREE_CAP = 64


class GradedIdeal(object):
    """
    Homogeneous ideal of finite colength stored degree by degree

    For every degree e <= s + 1 the ideal keeps a reduced echelon basis of
    I_e over the monomials of R_e in descending grevlex order; the non-pivot
    monomials form the quotient basis of (R/I)_e. I_e = R_e for e > s.
    """

    def __init__(self, n, bases):
        """
        :param n: Number of variables
        :type n: int
        :param bases: Degree -> spanning vectors of I_e ({monomial: value});
            must reach I_e = R_e, missing degrees below count as zero
        :type bases: dict[int, list[dict[tuple[int], fractions.Fraction]]]
        :raises InfiniteColengthException: No degree with I_e = R_e
        :raises ValueException: Vector of mixed or wrong degree
        """
        self.n = n
        """ Number of variables """
        self._rows = {}
        """ :type : dict[int, list[dict[tuple[int], fractions.Fraction]]] """
        self._pivots = {}
        """ :type : dict[int, list[tuple[int]]] """
        self._quotient = {}
        """ :type : dict[int, list[tuple[int]]] """
        self._generators = None
        self._syzygies = {}
        self._reduced = {}
        full = None

        for e in range(max(bases) + 1 if bases else 0):
            columns = monomial_basis(n, e)

            for vec in bases.get(e, []):
                if any(sum(m) != e or len(m) != n for m in vec):
                    raise ValueException(
                        "Vector not in degree {} of {} variables".format(e, n)
                    )
            rows, pivots = row_basis(bases.get(e, []), columns)
            self._rows[e] = rows
            self._pivots[e] = pivots
            pivot_set = set(pivots)
            self._quotient[e] = [m for m in columns if m not in pivot_set]

            if not self._quotient[e]:
                full = e
                break
        if full is None:
            raise InfiniteColengthException(
                "Ideal does not reach finite colength"
            )
        self.s = full - 1
        """ Socle degree of R/I """
        self.hilbert = HilbertFunction(
            len(self._quotient[e]) for e in range(full)
        )
        """ Quotient Hilbert function """

    def __eq__(self, other):
        if not isinstance(other, GradedIdeal):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self):
        return hash((self.n, self.s, self.hilbert))

    def __repr__(self):
        return "<GradedIdeal>(n={}, H={})".format(self.n, self.hilbert.values)

    @property
    def colength(self):
        return self.hilbert.k

    def to_dict(self):
        return {
            'n': self.n,
            'gens': [g.format() for g in self.generators()],
        }

    def quotient_basis(self, e):
        """ Monomials representing a basis of (R/I)_e """
        if e < 0 or e > self.s:
            return []
        return self._quotient[e]

    def degree_basis(self, e):
        """ Reduced echelon basis of I_e as polynomials """
        if e < 0:
            return []
        if e > self.s + 1:
            return [Polynomial.monomial(m) for m in monomial_basis(self.n, e)]
        return [Polynomial(self.n, row) for row in self._rows[e]]

    def degree_dim(self, e):
        if e < 0:
            return 0
        if e > self.s + 1:
            return len(monomial_basis(self.n, e))
        return len(self._rows[e])

    def reduce(self, vec, e):
        """
        Normal form of a degree e vector in the quotient basis

        :param vec: {monomial: value}
        :type vec: dict[tuple[int], fractions.Fraction]
        :param e: Degree
        :type e: int
        :return: Coordinates on quotient_basis(e)
        :rtype: dict[tuple[int], fractions.Fraction]
        """
        if e < 0 or e > self.s:
            return {}
        res = dict(vec)

        for row, p in zip(self._rows[e], self._pivots[e]):
            c = res.get(p)

            if not c:
                continue
            for m, v in row.items():
                res[m] = res.get(m, 0) - c * v
        return {m: v for m, v in res.items() if v}

    def reduce_monomial(self, m):
        """ Normal form of a single monomial (memoized) """
        res = self._reduced.get(m)

        if res is None:
            res = self.reduce({m: Fraction(1)}, sum(m))
            self._reduced[m] = res
        return res

    def generators(self):
        """
        Minimal generators, degree by degree

        In degree e they span a complement of R_1 * I_(e-1) in I_e.

        :rtype: list[punctual.exact.Polynomial]
        """
        if self._generators is not None:
            return list(self._generators)
        gens = []

        for e in range(self.s + 2):
            columns = monomial_basis(self.n, e)

            if e == 0:
                lower = []
            else:
                lower = [
                    {monomial_mul(m, variable(self.n, j)): v
                     for m, v in row.items()}
                    for row in self._rows[e - 1]
                    for j in range(self.n)
                ]
            lower_rows, lower_pivots = row_basis(lower, columns)
            residues = []

            for row in self._rows[e]:
                res = dict(row)

                for lrow, p in zip(lower_rows, lower_pivots):
                    c = res.get(p)

                    if not c:
                        continue
                    for m, v in lrow.items():
                        res[m] = res.get(m, 0) - c * v
                residues.append({m: v for m, v in res.items() if v})
            new_rows, _ = row_basis(residues, columns)
            gens.extend(Polynomial(self.n, row) for row in new_rows)
        self._generators = gens
        return list(gens)

    def generator_degrees(self):
        return [g.degree for g in self.generators()]

    def minimal_generator_count(self, e):
        """ dim I_e - dim R_1 * I_(e-1), computed from the echelon bases """
        if e < 0 or e > self.s + 1:
            return 0
        lower = [
            {monomial_mul(m, variable(self.n, j)): v for m, v in g.items()}
            for g in self.degree_basis(e - 1)
            for j in range(self.n)
        ]
        return self.degree_dim(e) - span_rank(
            lower, monomial_basis(self.n, e)
        )

    def syzygies(self, e):
        """
        Degree e relations among the minimal generators

        Kernel of (u_i) -> sum u_i * g_i from the sum of R_(e - deg g_i) to
        R_e, one entry list [(generator index, monomial u, value)] per
        kernel basis vector.

        :rtype: list[list[(int, tuple[int], fractions.Fraction)]]
        """
        if e in self._syzygies:
            return self._syzygies[e]
        gens = self.generators()
        columns = [
            (i, u)
            for i, g in enumerate(gens) if g.degree <= e
            for u in monomial_basis(self.n, e - g.degree)
        ]
        targets = {m: r for r, m in enumerate(monomial_basis(self.n, e))}
        entries = {}

        for c, (i, u) in enumerate(columns):
            for m, v in gens[i].items():
                r = targets[monomial_mul(m, u)]
                entries.setdefault(r, {})[c] = v
        res = []

        if columns:
            matrix = Matrix(len(targets), len(columns), entries)

            for vec in matrix.kernel_basis():
                res.append([
                    (columns[c][0], columns[c][1], v)
                    for c, v in enumerate(vec) if v
                ])
        self._syzygies[e] = res
        return res


def graded_ideal_from_monomial(ideal):
    """
    Degreewise bases of a monomial ideal

    :type ideal: punctual.monomial.MonomialIdeal
    :rtype: GradedIdeal
    :raises InfiniteColengthException: Infinite colength
    """
    s = ideal.hilbert.socle_degree
    bases = {
        e: [{m: Fraction(1)} for m in ideal.degree_part(e)]
        for e in range(s + 2)
    }
    return GradedIdeal(ideal.n, bases)


def graded_ideal_from_generators(polys, n=None, degree_cap=DEFAULT_DEGREE_CAP):
    """
    Ideal generated by homogeneous polynomials

    I_e is the span of R_1 * I_(e-1) and the generators of degree e,
    computed until I_e = R_e.

    :param polys: Homogeneous generators
    :type polys: list[punctual.exact.Polynomial]
    :param n: Number of variables (default: from the generators)
    :type n: None | int
    :param degree_cap: Give up beyond this degree
    :type degree_cap: int
    :rtype: GradedIdeal
    :raises ValueException: Inhomogeneous or zero generator
    :raises InfiniteColengthException: Not finite within degree_cap
    """
    polys = [p for p in polys]

    if not polys:
        raise ValueException("Need at least one generator")
    n = n or polys[0].n

    for p in polys:
        if p.n != n:
            raise ValueException("Generator in wrong ring: {}".format(p))
        if p.is_zero():
            raise ValueException("Zero generator")
        if not p.is_homogeneous():
            raise ValueException("Generator {} is not homogeneous".format(p))
    bases = {}
    previous = []

    for e in range(degree_cap + 1):
        vectors = [
            {monomial_mul(m, variable(n, j)): v for m, v in row.items()}
            for row in previous for j in range(n)
        ]
        vectors.extend(dict(p.items()) for p in polys if p.degree == e)
        rows, _ = row_basis(vectors, monomial_basis(n, e))
        bases[e] = rows
        previous = rows

        if len(rows) == len(monomial_basis(n, e)):
            return GradedIdeal(n, bases)
    logger.warning("No finite colength below degree {}".format(degree_cap))
    raise InfiniteColengthException(
        "Colength not finite within degree {}".format(degree_cap)
    )


def hom_dim_syzygy(ideal, d):
    """
    dim Hom_R(I, R/I)_d of a monomial ideal from its pairwise syzygies

    Unknowns are the coordinates of phi(m_i) on the standard monomials of
    degree deg m_i + d; every pair i < j with L = lcm(m_i, m_j) imposes
    (L/m_i) phi(m_i) = (L/m_j) phi(m_j) in R/I.

    :param ideal: Finite colength monomial ideal
    :type ideal: punctual.monomial.MonomialIdeal
    :param d: Degree
    :type d: int
    :rtype: int
    """
    gens = ideal.generators
    s = ideal.hilbert.socle_degree
    unknowns = {}

    for i, g in enumerate(gens):
        for b in ideal.standard_basis(sum(g) + d):
            unknowns[(i, b)] = len(unknowns)
    if not unknowns:
        return 0
    entries = {}
    row = 0

    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            lcm = monomial_lcm(gens[i], gens[j])
            degree = sum(lcm) + d

            if degree < 0 or degree > s:
                continue
            u_i = monomial_quotient(lcm, gens[i])
            u_j = monomial_quotient(lcm, gens[j])

            for w in ideal.standard_basis(degree):
                cells = {}

                if monomial_divides(u_i, w):
                    c = unknowns.get((i, monomial_quotient(w, u_i)))

                    if c is not None:
                        cells[c] = 1
                if monomial_divides(u_j, w):
                    c = unknowns.get((j, monomial_quotient(w, u_j)))

                    if c is not None:
                        cells[c] = cells.get(c, 0) - 1
                cells = {c: v for c, v in cells.items() if v}

                if cells:
                    entries[row] = cells
                    row += 1
    if not entries:
        return len(unknowns)
    return len(unknowns) - Matrix(row, len(unknowns), entries).rank()


def hom_dim_kernel(ideal, d):
    """
    dim Hom_R(I, R/I)_d of an arbitrary homogeneous ideal

    Unknowns are the coordinates of phi(g_i) in (R/I)_(deg g_i + d) for the
    minimal generators g_i. Every degree e relation sum u_i g_i = 0 forces
    sum u_i phi(g_i) = 0 in (R/I)_(e+d); only e with 0 <= e + d <= s can
    impose anything, and relations of an Artinian ideal are generated in
    degrees <= s + 2.

    :param ideal: Finite colength homogeneous ideal
    :type ideal: GradedIdeal
    :param d: Degree
    :type d: int
    :rtype: int
    """
    gens = ideal.generators()
    s = ideal.s
    unknowns = {}

    for i, g in enumerate(gens):
        for q in ideal.quotient_basis(g.degree + d):
            unknowns[(i, q)] = len(unknowns)
    if not unknowns:
        return 0
    active = {i for i, _ in unknowns}
    low = max(min(g.degree for g in gens), -d)
    high = min(s - d, s + 2)
    entries = {}
    row = 0

    for e in range(low, high + 1):
        targets = ideal.quotient_basis(e + d)

        if not targets:
            continue
        for relation in ideal.syzygies(e):
            if not any(i in active for i, _, _ in relation):
                continue
            # coordinates of sum_i u_i * phi(g_i) on (R/I)_(e+d)
            image = {}

            for i, u, c in relation:
                if i not in active:
                    continue
                for q in ideal.quotient_basis(gens[i].degree + d):
                    col = unknowns[(i, q)]

                    for w, v in ideal.reduce_monomial(monomial_mul(u, q)).items():
                        cell = image.setdefault(w, {})
                        cell[col] = cell.get(col, 0) + c * v
            for w in targets:
                cells = {c: v for c, v in image.get(w, {}).items() if v}

                if cells:
                    entries[row] = cells
                    row += 1
    if not entries:
        return len(unknowns)
    return len(unknowns) - Matrix(row, len(unknowns), entries).rank()


def hom_dim(ideal, d):
    """ Backend by ideal type: syzygies for monomial, kernels otherwise """
    if isinstance(ideal, MonomialIdeal):
        return hom_dim_syzygy(ideal, d)
    return hom_dim_kernel(ideal, d)


def _socle_degree(ideal):
    if isinstance(ideal, MonomialIdeal):
        return ideal.hilbert.socle_degree
    return ideal.s


def tangent_series(ideal, window=None):
    """
    dim Hom_R(I, R/I)_d for every d in the window

    :param ideal: Monomial or graded ideal
    :type ideal: punctual.monomial.MonomialIdeal | GradedIdeal
    :param window: Degree interval (default [-(s+1), s])
    :type window: None | (int, int)
    :rtype: dict[int, int]
    """
    s = _socle_degree(ideal)

    if window is None:
        window = (-(s + 1), s)
    low, high = window
    return {d: hom_dim(ideal, d) for d in range(low, high + 1)}


def tangent_report(ideal, expected=None, window=None):
    """
    Tangent series plus T>=0, T>0, T0 and D = T>=0 - expected

    :param ideal: Monomial or graded ideal
    :type ideal: punctual.monomial.MonomialIdeal | GradedIdeal
    :param expected: Threshold; default (n-1)(k-1)
    :type expected: None | int
    :param window: Degree interval (default [-(s+1), s])
    :type window: None | (int, int)
    :rtype: punctual.model.TangentSeries
    """
    k = ideal.hilbert.k

    if expected is None:
        expected = expected_dimension(ideal.n, k)
    return TangentSeries(
        ideal=ideal.to_dict(),
        dims=tangent_series(ideal, window),
        k=k,
        expected=expected
    )


def nonnegative_dim(ideal):
    """ T>=0 only (degrees 0..s) """
    return sum(hom_dim(ideal, d) for d in range(_socle_degree(ideal) + 1))


def graded_socle_dimension(ideal):
    """
    Socle dimension of R/I

    Sum over e of the dimension of {a in (R/I)_e : x_j a in I for all j}.

    :param ideal: Monomial or graded ideal
    :type ideal: punctual.monomial.MonomialIdeal | GradedIdeal
    :rtype: int
    """
    if isinstance(ideal, MonomialIdeal):
        ideal = graded_ideal_from_monomial(ideal)
    tau = 0

    for e in range(ideal.s + 1):
        basis = ideal.quotient_basis(e)

        if e == ideal.s:
            tau += len(basis)
            continue
        targets = {
            (j, w): r for r, (j, w) in enumerate(
                (j, w) for j in range(ideal.n)
                for w in ideal.quotient_basis(e + 1)
            )
        }
        entries = {}

        for c, q in enumerate(basis):
            for j in range(ideal.n):
                image = ideal.reduce_monomial(monomial_mul(q, variable(ideal.n, j)))

                for w, v in image.items():
                    entries.setdefault(targets[(j, w)], {})[c] = v
        tau += len(basis) - Matrix(len(targets), len(basis), entries).rank()
    return tau


def threshold_count(n, k, expected=None, ideals=None):
    """
    Number of strongly stable ideals with T>=0 >= expected

    :param n: Number of variables
    :type n: int
    :param k: Colength
    :type k: int
    :param expected: Threshold (default (n-1)(k-1))
    :type expected: None | int
    :param ideals: Precomputed enumerate_strongly_stable(n, k)
    :type ideals: None | list[punctual.monomial.MonomialIdeal]
    :rtype: int
    """
    if expected is None:
        expected = expected_dimension(n, k)
    if ideals is None:
        ideals = enumerate_strongly_stable(n, k)
    return sum(1 for ideal in ideals if nonnegative_dim(ideal) >= expected)


def exceptional_ideals(n, k_max, k_min=1):
    """
    Strongly stable ideals with D(I) >= 0 for colengths k_min..k_max

    :rtype: list[(punctual.monomial.MonomialIdeal, int)]
    :return: (ideal, D) sorted by colength then canonical key
    """
    res = []

    for k in range(k_min, k_max + 1):
        expected = expected_dimension(n, k)

        for ideal in enumerate_strongly_stable(n, k):
            d = nonnegative_dim(ideal) - expected

            if d >= 0:
                res.append((ideal, d))
    logger.debug("{} exceptional ideals up to k={}".format(len(res), k_max))
    return res
