# -*- coding: UTF-8 -*-
"""
Exact rational arithmetic: monomials, sparse polynomials, the contraction
action of R = k[x1..xn] on S = k[y1..yn] and exact matrices
"""

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-09-28 21:02

import functools
import itertools
import re
from fractions import Fraction
from tokenize import TokenError

from flotils import get_logger
from sympy import Poly, Symbol, QQ
from sympy.parsing.sympy_parser import parse_expr, \
    standard_transformations, convert_xor
from sympy.polys.matrices import DomainMatrix
from sympy.polys.polyerrors import PolynomialError

from .errors import ValueException, ParseException


logger = get_logger()

_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_VARIABLE = re.compile(r"^([xy])([1-9][0-9]*)$")
_FLOAT = re.compile(r"\d*\.\d+|\d+\.")


# --- monomials ------------------------------------------------------------

def grevlex_key(m):
    """
    Sort key for graded reverse lexicographic order with x1 > ... > xn

    :param m: Exponent vector
    :type m: tuple[int]
    :rtype: tuple
    """
    return sum(m), tuple(-e for e in reversed(m))


def lex_key(m):
    """ Sort key for lexicographic order with x1 > ... > xn """
    return tuple(m)


@functools.lru_cache(maxsize=None)
def monomial_basis(n, d):
    """
    All monomials of degree exactly d in n variables, descending grevlex

    :param n: Number of variables
    :type n: int
    :param d: Degree
    :type d: int
    :return: Exponent vectors
    :rtype: tuple[tuple[int]]
    :raises ValueException: n < 1
    """
    if n < 1:
        raise ValueException("Need at least one variable (n={})".format(n))
    if d < 0:
        return ()
    res = []

    for combo in itertools.combinations_with_replacement(range(n), d):
        exps = [0] * n

        for i in combo:
            exps[i] += 1
        res.append(tuple(exps))
    res.sort(key=grevlex_key, reverse=True)
    return tuple(res)


def monomials_up_to(n, d):
    """ All monomials of degree <= d, by degree then descending grevlex """
    res = []

    for e in range(d + 1):
        res.extend(monomial_basis(n, e))
    return res


def monomial_divides(a, b):
    """ a | b """
    return all(x <= y for x, y in zip(a, b))


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_quotient(b, a):
    """ b / a, assuming a | b """
    return tuple(y - x for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def variable(n, i):
    """ Exponent vector of x_(i+1) (0-based index i) """
    exps = [0] * n
    exps[i] = 1
    return tuple(exps)


def format_monomial(m, letter="x"):
    parts = []

    for i, e in enumerate(m):
        if e == 1:
            parts.append("{}{}".format(letter, i + 1))
        elif e > 1:
            parts.append("{}{}^{}".format(letter, i + 1, e))
    if not parts:
        return "1"
    return "*".join(parts)


def _format_coefficient(c):
    if c.denominator == 1:
        return str(c.numerator)
    return "{}/{}".format(c.numerator, c.denominator)


# --- polynomials ----------------------------------------------------------

class Polynomial(object):
    """
    Sparse polynomial with exact rational coefficients

    Immutable. The same type serves elements of R (letter x) and of the dual
    ring S (letter y); the flag only affects printing and parsing.
    """

    __slots__ = ("_n", "_terms", "_dual", "_hash")

    def __init__(self, n, terms=None, dual=False):
        """
        :param n: Number of variables
        :type n: int
        :param terms: Mapping exponent vector -> coefficient
        :type terms: None | dict[tuple[int], int | fractions.Fraction]
        :param dual: Element of the dual ring (prints with y)
        :type dual: bool
        :raises ValueException: Exponent vector of wrong length
        """
        if n < 1:
            raise ValueException("Need at least one variable (n={})".format(n))
        clean = {}

        for mono, c in (terms or {}).items():
            mono = tuple(mono)

            if len(mono) != n or any(e < 0 for e in mono):
                raise ValueException(
                    "Invalid exponent vector {} for n={}".format(mono, n)
                )
            c = Fraction(c)

            if not c:
                continue
            c += clean.get(mono, 0)

            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self._n = n
        self._terms = clean
        self._dual = dual
        self._hash = None

    @classmethod
    def zero(cls, n, dual=False):
        return cls(n, dual=dual)

    @classmethod
    def one(cls, n, dual=False):
        return cls(n, {(0,) * n: 1}, dual=dual)

    @classmethod
    def monomial(cls, m, coefficient=1, dual=False):
        return cls(len(m), {tuple(m): coefficient}, dual=dual)

    @classmethod
    def var(cls, n, i, dual=False):
        """ x_(i+1) / y_(i+1) """
        return cls.monomial(variable(n, i), dual=dual)

    @property
    def n(self):
        return self._n

    @property
    def dual(self):
        return self._dual

    @property
    def terms(self):
        """ Copy of the term map """
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        """ Support, descending grevlex """
        return sorted(self._terms, key=grevlex_key, reverse=True)

    def coefficient(self, m):
        return self._terms.get(tuple(m), Fraction(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def degree(self):
        """
        Total degree

        :rtype: int
        :raises ValueException: Zero polynomial
        """
        if not self._terms:
            raise ValueException("Degree of the zero polynomial")
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self):
        return len({sum(m) for m in self._terms}) <= 1

    def homogeneous_part(self, d):
        return Polynomial(
            self._n,
            {m: c for m, c in self._terms.items() if sum(m) == d},
            dual=self._dual
        )

    def with_dual(self, dual):
        return Polynomial(self._n, self._terms, dual=dual)

    def _check(self, other):
        if self._n != other.n:
            raise ValueException(
                "Variable count mismatch ({} vs {})".format(self._n, other.n)
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.one(self._n, self._dual) * other
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        terms = dict(self._terms)

        for m, c in other.items():
            terms[m] = terms.get(m, 0) + c
        return Polynomial(self._n, terms, dual=self._dual)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(
            self._n, {m: -c for m, c in self._terms.items()}, dual=self._dual
        )

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return Polynomial(
                self._n,
                {m: c * other for m, c in self._terms.items()},
                dual=self._dual
            )
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        terms = {}

        for a, c in self._terms.items():
            for b, d in other.items():
                m = monomial_mul(a, b)
                terms[m] = terms.get(m, 0) + c * d
        return Polynomial(self._n, terms, dual=self._dual)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueException("Only natural powers supported")
        res = Polynomial.one(self._n, self._dual)
        base = self

        while e:
            if e & 1:
                res = res * base
            base = base * base
            e >>= 1
        return res

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.one(self._n) * other
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._n == other.n and self._terms == other._terms

    def __ne__(self, other):
        res = self.__eq__(other)
        if res is NotImplemented:
            return res
        return not res

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def evaluate(self, point):
        """
        Value at a rational point

        :param point: Coordinates
        :type point: collections.abc.Sequence[int | fractions.Fraction]
        :rtype: fractions.Fraction
        """
        if len(point) != self._n:
            raise ValueException("Point has wrong dimension")
        res = Fraction(0)

        for m, c in self._terms.items():
            t = c

            for x, e in zip(point, m):
                if e:
                    t *= Fraction(x) ** e
            res += t
        return res

    def substitute(self, values):
        """
        Composition: replace x_i by values[i]

        :param values: One polynomial per variable, all in the same ring
        :type values: collections.abc.Sequence[Polynomial]
        :rtype: Polynomial
        """
        if len(values) != self._n:
            raise ValueException("Need one value per variable")
        target = values[0]
        powers = [{0: Polynomial.one(target.n, target.dual)} for _ in values]
        res = Polynomial.zero(target.n, target.dual)

        for m, c in self._terms.items():
            t = Polynomial.one(target.n, target.dual) * c

            for i, e in enumerate(m):
                if not e:
                    continue
                if e not in powers[i]:
                    powers[i][e] = values[i] ** e
                t = t * powers[i][e]
            res = res + t
        return res

    def format(self):
        """ Text form, descending grevlex (3/2*x1^2*x3 - x2) """
        if not self._terms:
            return "0"
        letter = "y" if self._dual else "x"
        out = []

        for m in self.monomials():
            c = self._terms[m]
            sign = "-" if c < 0 else "+"
            c = abs(c)
            mono = format_monomial(m, letter)

            if mono == "1":
                body = _format_coefficient(c)
            elif c == 1:
                body = mono
            else:
                body = "{}*{}".format(_format_coefficient(c), mono)
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first

        for sign, body in out[1:]:
            text += " {} {}".format(sign, body)
        return text

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "<Polynomial>({})".format(self.format())

    @classmethod
    def parse(cls, text, n=None, dual=None):
        """
        Parse the polynomial text grammar

        Variables are x1..xn (ring) or y1..yn (dual ring), coefficients
        integers or fractions, ^ or ** for powers.

        :param text: Input
        :type text: str
        :param n: Ambient variable count (default: largest index used)
        :type n: None | int
        :param dual: Force ring (True: y, False: x); None infers from text
        :type dual: None | bool
        :rtype: Polynomial
        :raises ParseException: Malformed input
        """
        if text is None or not text.strip():
            raise ParseException("Empty polynomial", text, 0)
        mo = _FLOAT.search(text)

        if mo:
            raise ParseException(
                "Floating point coefficient", text, mo.start()
            )
        letters = set()
        max_index = 0

        for mo in _IDENTIFIER.finditer(text):
            vm = _VARIABLE.match(mo.group(0))

            if not vm:
                raise ParseException(
                    "Unknown symbol '{}'".format(mo.group(0)),
                    text, mo.start()
                )
            if letters and vm.group(1) not in letters:
                raise ParseException(
                    "Mixed ring and dual variables", text, mo.start()
                )
            letters.add(vm.group(1))
            index = int(vm.group(2))

            if n is not None and index > n:
                raise ParseException(
                    "Variable {} exceeds n={}".format(mo.group(0), n),
                    text, mo.start()
                )
            max_index = max(max_index, index)
        if dual is None:
            dual = letters == {"y"}
        elif letters and (letters == {"y"}) != dual:
            raise ParseException(
                "Expected {} variables".format("y" if dual else "x"), text, 0
            )
        if n is None:
            n = max(max_index, 1)
        letter = "y" if dual else "x"
        gens = [Symbol("{}{}".format(letter, i + 1)) for i in range(n)]
        local = {str(g): g for g in gens}

        try:
            expr = parse_expr(
                text, local_dict=local, transformations=_TRANSFORMATIONS
            )
        except SyntaxError as e:
            offset = (e.offset - 1) if e.offset else None
            raise ParseException("Syntax error", text, offset)
        except (TokenError, TypeError) as e:
            raise ParseException("Syntax error: {}".format(e), text, None)

        try:
            poly = Poly(expr, *gens, domain=QQ)
        except PolynomialError as e:
            raise ParseException("Not a polynomial: {}".format(e), text, None)
        terms = {}

        for mono, c in poly.terms():
            terms[tuple(int(e) for e in mono)] = Fraction(int(c.p), int(c.q))
        return cls(n, terms, dual=dual)


def contract(g, f):
    """
    Contraction g o f of a dual polynomial f by g

    x^a o y^b = y^(b-a) when b >= a componentwise, else 0, extended
    bilinearly.

    :param g: Element of R
    :type g: Polynomial
    :param f: Element of S
    :type f: Polynomial
    :rtype: Polynomial
    :raises ValueException: Variable counts differ
    """
    if g.n != f.n:
        raise ValueException(
            "Variable count mismatch ({} vs {})".format(g.n, f.n)
        )
    terms = {}

    for a, c in g.items():
        for b, d in f.items():
            if monomial_divides(a, b):
                m = monomial_quotient(b, a)
                terms[m] = terms.get(m, 0) + c * d
    return Polynomial(f.n, terms, dual=True)


def contract_monomial(a, f):
    """ x^a o f for a single exponent vector a """
    terms = {}

    for b, d in f.items():
        if monomial_divides(a, b):
            terms[monomial_quotient(b, a)] = d
    return Polynomial(f.n, terms, dual=True)


# --- matrices -------------------------------------------------------------

def _to_qq(value):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _from_qq(value):
    return Fraction(int(value.numerator), int(value.denominator))


class Matrix(object):
    """
    Exact rational matrix

    Entries are held sparsely as {row: {col: Fraction}}; rank, row reduction
    and kernels are delegated to sympy's DomainMatrix over QQ.
    """

    def __init__(self, rows, cols, entries=None):
        """
        :param rows: Row count
        :type rows: int
        :param cols: Column count
        :type cols: int
        :param entries: Sparse entries {row: {col: value}}
        :type entries: None | dict[int, dict[int, int | fractions.Fraction]]
        """
        self.rows = rows
        """ Row count """
        self.cols = cols
        """ Column count """
        self._entries = {}
        """ :type : dict[int, dict[int, fractions.Fraction]] """

        for i, row in (entries or {}).items():
            if not 0 <= i < rows:
                raise ValueException("Row index {} out of range".format(i))
            clean = {}

            for j, v in row.items():
                if not 0 <= j < cols:
                    raise ValueException(
                        "Column index {} out of range".format(j)
                    )
                v = Fraction(v)

                if v:
                    clean[j] = v
            if clean:
                self._entries[i] = clean

    @classmethod
    def from_rows(cls, rows, cols=None):
        """
        Build from a dense list of rows

        :param rows: Dense rows
        :type rows: list[list[int | fractions.Fraction]]
        :param cols: Column count (needed for an empty row list)
        :type cols: None | int
        :rtype: Matrix
        """
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries = {}

        for i, row in enumerate(rows):
            if len(row) != cols:
                raise ValueException("Ragged row {}".format(i))
            entries[i] = {j: v for j, v in enumerate(row) if v}
        return cls(len(rows), cols, entries)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {i: {i: 1} for i in range(n)})

    def entry(self, i, j):
        return self._entries.get(i, {}).get(j, Fraction(0))

    def sparse_rows(self):
        """ Copy of the nonzero entries, {row: {col: value}} """
        return {i: dict(row) for i, row in self._entries.items()}

    def is_zero(self):
        return not self._entries

    def permuted_rows(self, order):
        """ Rows reordered so that new row r is old row order[r] """
        return Matrix(self.rows, self.cols, {
            r: self._entries[old]
            for r, old in enumerate(order) if old in self._entries
        })

    def apply(self, vector):
        """ M * v """
        if len(vector) != self.cols:
            raise ValueException("Vector has wrong length")
        res = [Fraction(0)] * self.rows

        for i, row in self._entries.items():
            res[i] = sum((v * vector[j] for j, v in row.items()), Fraction(0))
        return res

    def _domain_matrix(self):
        return DomainMatrix(
            {
                i: {j: _to_qq(v) for j, v in row.items()}
                for i, row in self._entries.items()
            },
            (self.rows, self.cols), QQ
        )

    def rank(self):
        """
        Exact rank over QQ

        :rtype: int
        """
        if not self._entries:
            return 0
        return int(self._domain_matrix().rank())

    def rref(self):
        """
        Reduced row echelon form

        :return: Reduced matrix, pivot columns
        :rtype: (Matrix, tuple[int])
        """
        if not self._entries:
            return Matrix(self.rows, self.cols), ()
        reduced, pivots = self._domain_matrix().rref()
        entries = {}

        for i, row in reduced.to_sparse().rep.items():
            entries[i] = {j: _from_qq(v) for j, v in row.items()}
        return Matrix(self.rows, self.cols, entries), tuple(pivots)

    def kernel_basis(self):
        """
        Canonical basis of the right null space

        One vector per non-pivot column f of the reduced echelon form,
        scaled so its first nonzero entry is 1.

        :rtype: list[tuple[fractions.Fraction]]
        """
        reduced, pivots = self.rref()
        rows = reduced.sparse_rows()
        pivot_set = set(pivots)
        basis = []

        for f in range(self.cols):
            if f in pivot_set:
                continue
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)

            for r, p in enumerate(pivots):
                v[p] = -rows.get(r, {}).get(f, Fraction(0))
            lead = next(x for x in v if x)
            basis.append(tuple(x / lead for x in v))
        return basis

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self._entries) == \
            (other.rows, other.cols, other._entries)

    def __repr__(self):
        return "<Matrix>({}x{})".format(self.rows, self.cols)


def rank(m):
    """ Exact rank of a Matrix """
    return m.rank()


def kernel_basis(m):
    """ Canonical right null space basis of a Matrix """
    return m.kernel_basis()


def rref(m):
    return m.rref()


def row_basis(vectors, columns):
    """
    Reduced echelon basis of the span of sparse vectors

    :param vectors: Vectors as {column key: value}
    :type vectors: collections.abc.Iterable[dict]
    :param columns: Ordered column keys (order fixes pivot choice)
    :type columns: collections.abc.Sequence
    :return: Basis rows as {column key: value}, pivot keys
    :rtype: (list[dict], list)
    """
    index = {c: j for j, c in enumerate(columns)}
    entries = {}

    for i, vec in enumerate(vectors):
        row = {index[c]: v for c, v in vec.items() if v}

        if row:
            entries[len(entries)] = row
    if not entries:
        return [], []
    m = Matrix(len(entries), len(columns), entries)
    reduced, pivots = m.rref()
    rows = reduced.sparse_rows()
    basis = [
        {columns[j]: v for j, v in rows[r].items()}
        for r in range(len(pivots))
    ]
    return basis, [columns[p] for p in pivots]


def span_rank(vectors, columns):
    """ Dimension of the span of sparse vectors """
    index = {c: j for j, c in enumerate(columns)}
    entries = {}

    for vec in vectors:
        row = {index[c]: v for c, v in vec.items() if v}

        if row:
            entries[len(entries)] = row
    if not entries:
        return 0
    return Matrix(len(entries), len(columns), entries).rank()


def parse_generators(text, n=None, dual=None):
    """
    Parse a comma separated list of polynomials living in one ring

    Positions in errors refer to the whole text.

    :param text: e.g. "y1^4, y2^3, y3*y4"
    :type text: str
    :param n: Variable count (default: largest index in the text)
    :type n: None | int
    :param dual: Force ring; None infers it from the letters used
    :type dual: None | bool
    :rtype: list[Polynomial]
    :raises ParseException: Malformed item
    """
    if text is None or not text.strip():
        raise ParseException("Empty generator list", text, 0)
    found = [
        _VARIABLE.match(mo.group(0)) for mo in _IDENTIFIER.finditer(text)
    ]
    found = [vm for vm in found if vm]

    if n is None:
        n = max([int(vm.group(2)) for vm in found] or [1])
    if dual is None:
        dual = bool(found) and all(vm.group(1) == "y" for vm in found)
    res = []
    offset = 0

    for part in text.split(","):
        if not part.strip():
            raise ParseException("Empty item", text, offset)
        try:
            res.append(Polynomial.parse(part, n=n, dual=dual))
        except ParseException as e:
            position = None if e.position is None else offset + e.position
            raise ParseException(e.reason, text, position)
        offset += len(part) + 1
    return res
