# -*- coding: UTF-8 -*-

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-09-28 20:41

import sys

from .cli import main


sys.exit(main())
