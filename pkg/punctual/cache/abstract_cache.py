# -*- coding: UTF-8 -*-

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-10-11 19:05

import hashlib
import json
from abc import ABCMeta, abstractmethod

from flotils.loadable import Loadable

from ..__version__ import __version__ as code_version


def cache_key(module, operation, args):
    """
    Cache key of one operation call

    :param module: Package module, e.g. "monomial"
    :type module: str
    :param operation: Operation name
    :type operation: str
    :param args: JSON compatible arguments
    :type args: dict
    :rtype: dict
    """
    return {
        'module': module,
        'operation': operation,
        'args': args,
        'version': code_version,
    }


def key_digest(key):
    """ SHA-1 of the canonical JSON of a key """
    text = json.dumps(key, sort_keys=True, separators=(",", ":"))
    return hashlib.sha1(text.encode("utf-8")).hexdigest()


class AbstractCache(Loadable):
    """ Store of computed operation results """
    __metaclass__ = ABCMeta

    def __init__(self, settings=None):
        if settings is None:
            settings = {}
        super(AbstractCache, self).__init__(settings)

    @abstractmethod
    def get(self, key):
        """
        Cached result

        :param key: Key as built by cache_key()
        :type key: dict
        :return: Result or None if not cached
        :rtype: None | object
        :raises punctual.errors.CacheException: On failure
        """
        raise NotImplementedError("Please implement")

    @abstractmethod
    def put(self, key, value):
        """
        Store a result

        :param key: Key as built by cache_key()
        :type key: dict
        :param value: JSON compatible result
        :type value: object
        :rtype: None
        :raises punctual.errors.CacheException: On failure
        """
        raise NotImplementedError("Please implement")

    @abstractmethod
    def entries(self):
        """
        All stored (key, value) pairs, sorted by digest

        :rtype: list[(dict, object)]
        :raises punctual.errors.CacheException: On failure
        """
        raise NotImplementedError("Please implement")

    @abstractmethod
    def clear(self):
        """
        Remove every entry

        :return: Number of removed entries
        :rtype: int
        :raises punctual.errors.CacheException: On failure
        """
        raise NotImplementedError("Please implement")
