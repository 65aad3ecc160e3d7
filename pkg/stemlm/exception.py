# -*- coding: utf-8 -*-
class StemLMError(Exception):
    pass


class StemLMUsageError(StemLMError):
    pass


class StemLMDataError(StemLMError):
    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = 'line {}: {}'.format(line_number, message)
        super(StemLMDataError, self).__init__(message)
        self.line_number = line_number


class StemLMParseError(StemLMDataError):
    def __init__(self, message, line_number=None, order=None):
        super(StemLMParseError, self).__init__(message, line_number)
        self.order = order


class DegenerateStatisticsWarning(UserWarning):
    pass
