# -*- coding: UTF-8 -*-

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-10-11 19:02

from .abstract_cache import AbstractCache, cache_key, key_digest
from .file_cache import FileCache

__all__ = ["AbstractCache", "FileCache", "cache_key", "key_digest"]
