# -*- coding: UTF-8 -*-

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-09-28 21:16

import abc


def format_vars(instance):
    attrs = vars(instance)
    return ", ".join(
        "{}={}".format(key, value) for key, value in sorted(attrs.items())
    )


class FromToDictBase(abc.ABC):

    @classmethod
    def from_dict(cls, d):
        new = cls()
        if not d:
            return new
        attrs = vars(new)
        for key in d:
            if key in attrs:
                # both in dict and this class
                setattr(new, key, d[key])
        return new

    def to_dict(self):
        attrs = vars(self)
        res = {}
        for key, value in attrs.items():
            if isinstance(value, FromToDictBase):
                res[key] = value.to_dict()
            elif isinstance(value, (list, tuple)):
                res[key] = [
                    v.to_dict() if isinstance(v, FromToDictBase) else v
                    for v in value
                ]
            else:
                res[key] = value
        return res


class PrintableBase(abc.ABC):

    def __str__(self):
        return "<{}>({})".format(self.__class__.__name__, format_vars(self))

    def __repr__(self):
        return self.__str__()


def format_series(coefficients, variable="T"):
    """
    Render {exponent: coefficient} as 5T+3T^2

    :param coefficients: Series coefficients
    :type coefficients: dict[int, int]
    :rtype: str
    """
    parts = []

    for e in sorted(coefficients):
        c = coefficients[e]
        if not c:
            continue
        if e == 0:
            mono = ""
        elif e == 1:
            mono = variable
        else:
            mono = "{}^{}".format(variable, e)
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append("{}{}".format(c, mono))
    return "+".join(parts) if parts else "0"


class TangentSeries(PrintableBase, FromToDictBase):
    """ Graded pieces dim Hom(I, R/I)_d over a degree window """

    def __init__(self, ideal=None, dims=None, k=None, expected=None):
        super(TangentSeries, self).__init__()
        self.ideal = ideal
        """ Ideal as serialized by its own to_dict()
            :type : None | dict """
        self.dims = dims or {}
        """ :type : dict[int, int] """
        self.k = k
        """ Colength """
        self.expected = expected
        """ Threshold D is measured against """

    @property
    def window(self):
        if not self.dims:
            return None
        return min(self.dims), max(self.dims)

    @property
    def t_nonneg(self):
        return sum(v for d, v in self.dims.items() if d >= 0)

    @property
    def t_pos(self):
        return sum(v for d, v in self.dims.items() if d > 0)

    @property
    def t_zero(self):
        return self.dims.get(0, 0)

    @property
    def d(self):
        """ D = T>=0 - expected """
        if self.expected is None:
            return None
        return self.t_nonneg - self.expected

    def positive_series(self):
        """ Strictly positive part as T-series, e.g. 5T+3T^2 """
        return format_series({d: v for d, v in self.dims.items() if d > 0})

    def to_dict(self):
        return {
            'ideal': self.ideal,
            'k': self.k,
            'expected': self.expected,
            'series': {str(d): self.dims[d] for d in sorted(self.dims)},
            'T_nonneg': self.t_nonneg,
            'T_pos': self.t_pos,
            'T_zero': self.t_zero,
            'D': self.d,
        }

    @classmethod
    def from_dict(cls, d):
        new = cls()
        if not d:
            return new
        new.ideal = d.get('ideal')
        new.k = d.get('k')
        new.expected = d.get('expected')
        new.dims = {int(key): v for key, v in d.get('series', {}).items()}
        return new


class ApolarReport(PrintableBase, FromToDictBase):
    """ Invariants of the apolar algebra of an inverse system """

    def __init__(
            self, generators=None, k=None, hilbert=None, socle_dim=None,
            graded=None
    ):
        super(ApolarReport, self).__init__()
        self.generators = generators or []
        """ Dual generators as text
            :type : list[str] """
        self.k = k
        """ Algebra dimension """
        self.hilbert = hilbert or []
        """ Local Hilbert function
            :type : list[int] """
        self.socle_dim = socle_dim
        """ Socle dimension (tau) """
        self.graded = graded
        """ All generators homogeneous """


class DimensionEstimate(PrintableBase, FromToDictBase):
    """ The four tangent/base/fiber dimension estimates """

    def __init__(self, t_zero=None, t_pos=None, base_dim=None, fiber_dim=None):
        super(DimensionEstimate, self).__init__()
        self.t_zero = t_zero
        self.t_pos = t_pos
        self.base_dim = base_dim
        self.fiber_dim = fiber_dim

    @property
    def bounds(self):
        """
        Present bounds by name

        :rtype: dict[str, int]
        """
        res = {}

        if self.t_zero is not None and self.t_pos is not None:
            res['tangent'] = self.t_zero + self.t_pos
        if self.base_dim is not None and self.t_pos is not None:
            res['base_and_tangent_to_fiber'] = self.base_dim + self.t_pos
        if self.t_zero is not None and self.fiber_dim is not None:
            res['tangent_to_base_and_fiber'] = self.t_zero + self.fiber_dim
        if self.base_dim is not None and self.fiber_dim is not None:
            res['base_and_fiber'] = self.base_dim + self.fiber_dim
        return res

    @property
    def estimate(self):
        bounds = self.bounds
        return min(bounds.values()) if bounds else None

    @property
    def best(self):
        """ Name of the minimal bound (first by name on ties) """
        bounds = self.bounds
        if not bounds:
            return None
        return min(sorted(bounds), key=lambda key: bounds[key])

    def to_dict(self):
        res = super(DimensionEstimate, self).to_dict()
        res['bounds'] = self.bounds
        res['estimate'] = self.estimate
        return res


class MarginReport(PrintableBase, FromToDictBase):
    """ Locus dimension against the expected dimension """

    NEGLIGIBLE = "negligible"
    VIOLATING = "violating"

    def __init__(self, name=None, locus=None, expected=None, citation=None):
        super(MarginReport, self).__init__()
        self.name = name
        """ What was measured, e.g. H=(1,5,6,1) """
        self.locus = locus
        """ Locus dimension (or its bound) """
        self.expected = expected
        """ Expected dimension (n-1)(k-1) """
        self.citation = citation

    @property
    def margin(self):
        return self.locus - self.expected

    @property
    def verdict(self):
        return self.VIOLATING if self.margin > 0 else self.NEGLIGIBLE

    @property
    def negligible(self):
        return self.verdict == self.NEGLIGIBLE

    def to_dict(self):
        res = super(MarginReport, self).to_dict()
        res['margin'] = self.margin
        res['verdict'] = self.verdict
        return res


class RegularityVerdict(PrintableBase, FromToDictBase):
    """ Outcome of a sampled k-regularity test """

    def __init__(
            self, passed=None, k=None, tau=None, trials=None, seed=None,
            witness=None, draws=1
    ):
        super(RegularityVerdict, self).__init__()
        self.passed = passed
        self.k = k
        self.tau = tau
        self.trials = trials
        self.seed = seed
        self.witness = witness
        """ Failing point tuple (sorted), None on pass
            :type : None | list[list[int]] """
        self.draws = draws
        """ Random projections drawn (1 without projection) """


class CheckReport(PrintableBase, FromToDictBase):
    """ Result of one named verification """

    def __init__(self, name=None, passed=None, citation=None, details=None):
        super(CheckReport, self).__init__()
        self.name = name
        self.passed = passed
        self.citation = citation
        self.details = details if details is not None else {}
        """ Computed vs published values
            :type : dict """


class GoldenTable(PrintableBase, FromToDictBase):
    """ Published table embedded with its citation """

    def __init__(self, table_id=None, rows=None, citation=None, columns=None):
        super(GoldenTable, self).__init__()
        self.table_id = table_id
        self.rows = rows or {}
        """ Row label -> values
            :type : dict[str, list] """
        self.citation = citation
        self.columns = columns or []
        """ Column labels (k values) """


class RunConfig(PrintableBase, FromToDictBase):
    """ Effective command line configuration """

    def __init__(
            self, subcommand=None, seed=None, jobs=None, output_format="json",
            cache_dir=None, cap=None
    ):
        super(RunConfig, self).__init__()
        self.subcommand = subcommand
        self.seed = seed
        self.jobs = jobs
        self.output_format = output_format
        self.cache_dir = cache_dir
        self.cap = cap
