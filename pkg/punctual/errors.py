# -*- coding: UTF-8 -*-

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-09-28 20:44


class PunctualException(Exception):
    """ Punctual base exception """
    pass


class CacheException(PunctualException):
    """ Result cache failure """
    pass


class ValueException(PunctualException, ValueError):
    """ Value outside of the operation domain """
    pass


class ParseException(ValueException):
    """ Text could not be parsed """

    def __init__(self, message, text=None, position=None):
        self.reason = message
        """ Message without position """
        if position is not None:
            message = "{} (at position {})".format(message, position)
        super(ParseException, self).__init__(message)
        self.text = text
        """ Offending input """
        self.position = position
        """ 0-based character offset or None """


class InadmissibleException(ValueException):
    """ Hilbert function violates Macaulay's bound """
    pass


class InfiniteColengthException(ValueException):
    """ Quotient is not finite dimensional """
    pass


class UnknownCheckException(ValueException):
    """ No verification registered under that name """
    pass


class ResourceCapException(PunctualException):
    """ Configured resource cap exceeded """

    def __init__(self, message, cap=None):
        super(ResourceCapException, self).__init__(message)
        self.cap = cap
