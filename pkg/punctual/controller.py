# -*- coding: UTF-8 -*-

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-10-12 20:10

import multiprocessing

import numpy as np
from flotils.loadable import Loadable

from .cache import FileCache, cache_key
from .errors import ValueException, UnknownCheckException
from .hilbert import enumerate_o_sequences, expected_dimension
from .model import TangentSeries
from .monomial import MonomialIdeal, enumerate_monomial_ideals, \
    enumerate_strongly_stable, DEFAULT_NODE_CAP
from .tangent import tangent_report, DEFAULT_DEGREE_CAP


def _enumerate_monomial(args, options):
    ideals = enumerate_monomial_ideals(
        args['n'], args['k'], node_cap=options.get('node_cap', DEFAULT_NODE_CAP)
    )
    return [ideal.to_dict() for ideal in ideals]


def _enumerate_borel(args, options):
    return [
        ideal.to_dict()
        for ideal in enumerate_strongly_stable(args['n'], args['k'])
    ]


def _o_sequences(args, options):
    return [H.to_list() for H in enumerate_o_sequences(args['k'])]


def _nonnegative_report(args, options):
    ideal = MonomialIdeal.from_dict(args['ideal'])
    s = ideal.hilbert.socle_degree
    return tangent_report(ideal, args['expected'], window=(0, s)).to_dict()


def _tangent_report(args, options):
    ideal = MonomialIdeal.from_dict(args['ideal'])
    return tangent_report(ideal, args.get('expected')).to_dict()


OPERATIONS = {
    ("monomial", "enumerate_monomial_ideals"): _enumerate_monomial,
    ("monomial", "enumerate_strongly_stable"): _enumerate_borel,
    ("hilbert", "enumerate_o_sequences"): _o_sequences,
    ("tangent", "nonnegative_report"): _nonnegative_report,
    ("tangent", "tangent_report"): _tangent_report,
}
""" Cacheable operations: (module, operation) -> fn(args, options) """


def run_operation(item):
    """
    Pool worker: evaluate one registered operation

    :param item: (module, operation, args, options)
    :type item: (str, str, dict, dict)
    :return: JSON compatible result
    """
    module, operation, args, options = item
    return OPERATIONS[(module, operation)](args, options)


class Punctual(Loadable):
    """ Settings, worker pool and result cache around the computations """

    def __init__(self, settings=None):
        if settings is None:
            settings = {}
        super(Punctual, self).__init__(settings)
        self.node_cap = settings.get('node_cap', DEFAULT_NODE_CAP)
        """ Monomial enumeration node cap """
        self.degree_cap = settings.get('degree_cap', DEFAULT_DEGREE_CAP)
        """ Degree cap for ideals given by generators """
        self.seed = settings.get('seed', None)
        """ Seed of randomized operations """
        self.trials = settings.get('trials', 100)
        self.max_draws = settings.get('max_draws', 20)
        self.cache_sample = settings.get('cache_sample', 1)
        """ Cache hits recomputed per run """
        self.tables_k = settings.get('tables_k', 11)
        """ Largest colength of recomputed table rows """
        self.cache = None
        """ :type : None | punctual.cache.FileCache """

        if settings.get('cache_dir'):
            self.cache = FileCache({
                'cache_dir': settings['cache_dir'],
                'path_prefix': settings.get('path_prefix'),
            })
        self._threading_mode = None
        self.pool = None
        self.pool_size = settings.get('jobs') or multiprocessing.cpu_count()
        self.threading_mode = settings.get(
            'threading_mode', "pool" if self.pool_size > 1 else None
        )

    @property
    def threading_mode(self):
        return self._threading_mode

    @threading_mode.setter
    def threading_mode(self, value):
        if self._threading_mode == value:
            return
        if self.pool:
            self.pool.close()
            self.pool.join()
            self.pool = None
        if value == "pool":
            self.debug("Process pool of {}".format(self.pool_size))
            self.pool = multiprocessing.Pool(processes=self.pool_size)
        self._threading_mode = value

    def close(self):
        self.threading_mode = None

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()

    @property
    def options(self):
        return {'node_cap': self.node_cap}

    def map(self, fn, items):
        """
        Order preserving map, in the pool when one is running

        :param fn: Module level function
        :param items: Picklable arguments
        :rtype: list
        """
        items = list(items)

        if self.pool and len(items) > 1:
            return self.pool.map(fn, items)
        return [fn(item) for item in items]

    def run_many(self, module, operation, arg_list):
        """
        Evaluate a registered operation for many arguments through the cache

        :param module: Module name of the operation
        :type module: str
        :param operation: Operation name
        :type operation: str
        :param arg_list: JSON compatible argument dicts
        :type arg_list: list[dict]
        :return: Results in argument order
        :rtype: list
        """
        if (module, operation) not in OPERATIONS:
            raise ValueException("Unknown operation {}.{}".format(
                module, operation
            ))
        keys = [cache_key(module, operation, args) for args in arg_list]
        results = [None] * len(keys)
        hits = []

        if self.cache:
            for i, key in enumerate(keys):
                value = self.cache.get(key)

                if value is not None:
                    results[i] = value
                    hits.append(i)
        misses = [i for i, value in enumerate(results) if value is None]

        if misses:
            computed = self.map(run_operation, [
                (module, operation, arg_list[i], self.options) for i in misses
            ])

            for i, value in zip(misses, computed):
                results[i] = value

                if self.cache:
                    self.cache.put(keys[i], value)
        if hits:
            self.debug("{}.{}: {} cache hits, {} computed".format(
                module, operation, len(hits), len(misses)
            ))
            self._spot_check(module, operation, arg_list, results, hits)
        return results

    def run(self, module, operation, args):
        return self.run_many(module, operation, [args])[0]

    def _spot_check(self, module, operation, arg_list, results, hits):
        size = min(self.cache_sample, len(hits))

        if size < 1:
            return
        rng = np.random.default_rng(self.seed)

        for i in sorted(rng.choice(hits, size=size, replace=False)):
            fresh = run_operation((module, operation, arg_list[i], self.options))

            if fresh != results[i]:
                self.warning("Cache entry differs from fresh result: {}.{} {}".format(
                    module, operation, arg_list[i]
                ))
                results[i] = fresh
                self.cache.put(cache_key(module, operation, arg_list[i]), fresh)

    # --- computations used by tables and checks -------------------------

    def o_sequences(self, k):
        return self.run("hilbert", "enumerate_o_sequences", {'k': k})

    def enumerate_ideals(self, kind, n, k):
        """
        :param kind: "monomial" or "borel"
        :type kind: str
        :rtype: list[punctual.monomial.MonomialIdeal]
        """
        if kind == "monomial":
            operation = "enumerate_monomial_ideals"
        elif kind == "borel":
            operation = "enumerate_strongly_stable"
        else:
            raise ValueException("Unknown ideal kind: {}".format(kind))
        return [
            MonomialIdeal.from_dict(d)
            for d in self.run("monomial", operation, {'n': n, 'k': k})
        ]

    def nonnegative_reports(self, ideals, expected=None):
        """
        Tangent reports over degrees 0..s

        :param ideals: Monomial ideals
        :type ideals: list[punctual.monomial.MonomialIdeal]
        :param expected: Threshold (default (n-1)(k-1) per ideal)
        :type expected: None | int
        :rtype: list[punctual.model.TangentSeries]
        """
        arg_list = [
            {
                'ideal': ideal.to_dict(),
                'expected': expected if expected is not None
                else expected_dimension(ideal.n, ideal.hilbert.k),
            }
            for ideal in ideals
        ]
        return [
            TangentSeries.from_dict(d)
            for d in self.run_many("tangent", "nonnegative_report", arg_list)
        ]

    def threshold_count(self, n, k, expected=None):
        """ Strongly stable ideals with T>=0 >= expected """
        reports = self.nonnegative_reports(
            self.enumerate_ideals("borel", n, k), expected
        )
        return sum(1 for report in reports if report.d >= 0)

    def exceptional(self, n, k_max):
        """
        Strongly stable ideals with D >= 0 for k = 1..k_max

        :rtype: list[(punctual.monomial.MonomialIdeal, punctual.model.TangentSeries)]
        """
        res = []

        for k in range(1, k_max + 1):
            ideals = self.enumerate_ideals("borel", n, k)

            for ideal, report in zip(ideals, self.nonnegative_reports(ideals)):
                if report.d >= 0:
                    res.append((ideal, report))
        return res

    def table_rows(self, which, k_max=None):
        """
        Recompute the rows of one table for k = 1..k_max

        :param which: o_sequences, n3_counts or nk_counts
        :type which: str
        :rtype: dict[str, list[int]]
        """
        k_max = k_max or self.tables_k
        ks = range(1, k_max + 1)

        if which == "o_sequences":
            return {
                'hilbert_functions': [len(self.o_sequences(k)) for k in ks],
            }
        if which == "n3_counts":
            return {
                'monomial': [
                    len(self.enumerate_ideals("monomial", 3, k)) for k in ks
                ],
                'borel': [len(self.enumerate_ideals("borel", 3, k)) for k in ks],
                'threshold': [self.threshold_count(3, k) for k in ks],
            }
        if which == "nk_counts":
            return {
                'borel': [len(self.enumerate_ideals("borel", k, k)) for k in ks],
                'threshold': [self.threshold_count(k, k) for k in ks],
            }
        raise ValueException("Unknown table: {}".format(which))

    def verify(self, name):
        """
        Run a named check (or "all")

        :rtype: list[punctual.model.CheckReport]
        :raises UnknownCheckException: Name not registered
        """
        from .checks import CHECKS

        if name == "all":
            names = sorted(CHECKS)
        elif name in CHECKS:
            names = [name]
        else:
            raise UnknownCheckException(
                "Unknown check '{}' (known: {})".format(
                    name, ", ".join(sorted(CHECKS) + ["all"])
                )
            )
        res = []

        for check in names:
            report = CHECKS[check](self)
            level = self.info if report.passed else self.error
            level("{}: {}".format(check, "passed" if report.passed else "FAILED"))
            res.append(report)
        return res

    # --- cache maintenance ----------------------------------------------

    def cache_status(self):
        """ :rtype: dict """
        if not self.cache:
            return {'cache_dir': None, 'entries': 0}
        entries = self.cache.entries()
        ops = {}

        for key, _ in entries:
            name = "{}.{}".format(key.get('module'), key.get('operation'))
            ops[name] = ops.get(name, 0) + 1
        return {
            'cache_dir': self.cache.path,
            'entries': len(entries),
            'operations': ops,
        }

    def cache_clear(self):
        if not self.cache:
            return {'cache_dir': None, 'removed': 0}
        return {'cache_dir': self.cache.path, 'removed': self.cache.clear()}

    def cache_rebuild(self):
        """
        Recompute every entry and report those that changed

        :rtype: dict
        """
        if not self.cache:
            return {'cache_dir': None, 'entries': 0, 'diffs': []}
        entries = [
            (key, value) for key, value in self.cache.entries()
            if (key.get('module'), key.get('operation')) in OPERATIONS
        ]
        fresh = self.map(run_operation, [
            (key['module'], key['operation'], key['args'], self.options)
            for key, _ in entries
        ])
        diffs = []

        for (key, value), new in zip(entries, fresh):
            if new != value:
                diffs.append(key)
                self.cache.put(key, new)
        if diffs:
            self.warning("{} cache entries changed".format(len(diffs)))
        return {
            'cache_dir': self.cache.path,
            'entries': len(entries),
            'diffs': diffs,
        }
