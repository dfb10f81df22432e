# -*- coding: UTF-8 -*-
# flake8: noqa

VERSION = (0, 1, 0)


__version__ = '.'.join(map(str, VERSION))
