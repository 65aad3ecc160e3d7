# -*- coding: utf-8 -*-
import logging

from . import const
from .exception import StemLMUsageError

_logger = logging.getLogger(__name__)


class RejoinConfig(object):
    def __init__(self, marker=const.MARKER):
        if len(marker) != 1:
            raise StemLMUsageError('marker must be a single character (got {!r})'.format(marker))
        self.marker = marker

    def __str__(self):
        return u'<RejoinConfig>: [marker:{}]'.format(self.marker)

    def __repr__(self):
        return self.__str__()


class RejoinReport(object):
    def __init__(self, sentence_count=0, joined_count=0, orphan_count=0):
        self.sentence_count = sentence_count
        self.joined_count = joined_count
        self.orphan_count = orphan_count

    def json_pack(self):
        return {
            "sentence_count": self.sentence_count,
            "joined_count": self.joined_count,
            "orphan_count": self.orphan_count
        }

    def __str__(self):
        return '<RejoinReport>: [sentences:{}, joined:{}, orphans:{}]'.format(
            self.sentence_count, self.joined_count, self.orphan_count)

    def __repr__(self):
        return self.__str__()


def _rejoin(tokens, marker):
    out = []
    joined = 0
    orphans = 0
    for token in tokens:
        if token.startswith(marker):
            piece = token[len(marker):]
            if out:
                out[-1] += piece
                joined += 1
            else:
                orphans += 1
                out.append(piece)
        else:
            out.append(token)
    return tuple(token for token in out if token), joined, orphans


def rejoin(tokens, config=None):
    """
    glue every marked token onto the word before it

    a marked token with nothing before it is kept with the marker stripped.

    :param tokens: token sequence
    :param config: RejoinConfig, the default marker when None
    :return: tuple of tokens
    """
    config = config or RejoinConfig()
    return _rejoin(tokens, config.marker)[0]


def rejoin_corpus(corpus, config=None):
    """
    rejoin every sentence

    :return: (list of token tuples, RejoinReport)
    """
    config = config or RejoinConfig()
    report = RejoinReport()
    sentences = []
    for tokens in corpus:
        out, joined, orphans = _rejoin(tokens, config.marker)
        report.sentence_count += 1
        report.joined_count += joined
        report.orphan_count += orphans
        sentences.append(out)
    if report.orphan_count:
        _logger.warning('stripped %i markers with no word to join', report.orphan_count)
    _logger.info('%s', report)
    return sentences, report
