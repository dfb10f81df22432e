# -*- coding: UTF-8 -*-

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-10-11 19:31

import os

from flotils.loadable import save_file, load_file

from .abstract_cache import AbstractCache, key_digest
from ..errors import CacheException


class FileCache(AbstractCache):
    """ One JSON file per entry, named by the key digest """

    def __init__(self, settings=None):
        if settings is None:
            settings = {}
        super(FileCache, self).__init__(settings)
        path = settings.get('cache_dir')

        if not path:
            raise CacheException("No cache directory")
        self.path = self.join_path_prefix(path)
        """ Cache directory """

    def _file(self, key):
        return os.path.join(self.path, key_digest(key) + ".json")

    def _files(self):
        if not os.path.isdir(self.path):
            return []
        try:
            names = os.listdir(self.path)
        except OSError as e:
            raise CacheException("{}".format(e))
        return sorted(
            os.path.join(self.path, name)
            for name in names if name.endswith(".json")
        )

    def get(self, key):
        path = self._file(key)

        if not os.path.isfile(path):
            self.debug("Cache miss {}".format(os.path.basename(path)))
            return None
        try:
            loaded = load_file(path)
        except Exception as e:
            raise CacheException("{}".format(e))
        if not isinstance(loaded, dict) or loaded.get('key') != key:
            self.warning("Stale cache entry {}".format(path))
            return None
        self.debug("Cache hit {}".format(os.path.basename(path)))
        return loaded.get('value')

    def put(self, key, value):
        try:
            os.makedirs(self.path, exist_ok=True)
            save_file(self._file(key), {'key': key, 'value': value})
        except CacheException:
            raise
        except Exception as e:
            raise CacheException("{}".format(e))

    def entries(self):
        res = []

        for path in self._files():
            try:
                loaded = load_file(path)
            except Exception as e:
                raise CacheException("{}".format(e))
            res.append((loaded.get('key'), loaded.get('value')))
        return res

    def clear(self):
        removed = 0

        for path in self._files():
            try:
                os.remove(path)
            except OSError as e:
                raise CacheException("{}".format(e))
            removed += 1
        self.info("Removed {} cache entries".format(removed))
        return removed
