""" Bookramsey exceptions """


class BookRamseyError(Exception):
    """ Base class for bookramsey errors """


class InputError(BookRamseyError, ValueError):
    """ Subclass for invalid arguments (vertices, patterns, vertex sets) """


class UnsupportedParameterError(InputError):
    """ Subclass for parameters outside the supported range (e.g. prime powers) """


class CapacityError(BookRamseyError):
    """ Subclass for requests exceeding a hard size cap """

    def __init__(self, what, requested, cap):
        self.what = what
        self.requested = requested
        self.cap = cap
        super(CapacityError, self).__init__(self._get_message())

    def _get_message(self):
        return (
            "Capacity exceeded for {}: requested {}, cap is {}"
            .format(self.what, self.requested, self.cap)
        )


class ParseError(InputError):
    """ Subclass for malformed graph6/sparse6/pattern text """

    def __init__(self, offset, reason):
        self.offset = offset
        self.reason = reason
        super(ParseError, self).__init__(self._get_message())

    def _get_message(self):
        return (
            "Parsing failed at byte offset {}.\nReason: {}"
            .format(self.offset, self.reason)
        )


class ConfigurationError(BookRamseyError):
    """ Subclass for bookramsey configuration file errors """


class ConfigurationSectionError(ConfigurationError):
    """ Subclass of configuration file errors """
