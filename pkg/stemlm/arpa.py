# -*- coding: utf-8 -*-
import io
import logging
import re

from . import const
from .corpus import read_lines
from .exception import StemLMParseError, StemLMUsageError
from .smoothing import BackoffModel

_logger = logging.getLogger(__name__)

_NGRAM_LINE = re.compile(r'^ngram\s+(\d+)\s*=\s*(\d+)$')
_SECTION_LINE = re.compile(r'^\\(\d+)-grams:$')


def format_number(value):
    """
    7 significant digits, never below the log floor
    """
    value = max(float(value), const.LOG_FLOOR) + 0.0
    return '{:.{}g}'.format(value, const.ARPA_PRECISION)


def write_arpa(model, sink):
    """
    write a BackoffModel in ARPA format

    entries are sorted by their token strings; the back-off column is
    written only where a back-off weight is stored.

    :param model: BackoffModel
    :param sink: text stream
    """
    if model is None or model.order < 1 or not model.ngram_count(1):
        raise StemLMUsageError("can't write an empty model")
    sink.write(u'\\data\\\n')
    for k in range(1, model.order + 1):
        sink.write(u'ngram {}={}\n'.format(k, model.ngram_count(k)))
    for k in range(1, model.order + 1):
        sink.write(u'\n\\{}-grams:\n'.format(k))
        for ngram, logprob, backoff in model.entries(k):
            line = u'{}\t{}'.format(format_number(logprob), u' '.join(ngram))
            if backoff is not None:
                line += u'\t{}'.format(format_number(backoff))
            sink.write(line + u'\n')
    sink.write(u'\n\\end\\\n')


def write_arpa_file(model, path):
    _logger.info("Saving model to '%s'...", path)
    with io.open(path, 'w', encoding='utf-8', newline='\n') as f:
        write_arpa(model, f)
    _logger.info("Done.")


def _number(text, line_number):
    try:
        return float(text)
    except ValueError:
        raise StemLMParseError('malformed number {!r}'.format(text), line_number)


def _parse_entry(line, k, line_number):
    if '\t' in line:
        fields = line.split('\t')
        if len(fields) not in (2, 3):
            raise StemLMParseError('expected 2 or 3 tab separated fields', line_number, k)
        words = fields[1].split()
        rest = fields[2:]
    else:
        parts = line.split()
        fields = parts
        words = parts[1:k + 1]
        rest = parts[k + 1:]
        if len(rest) > 1:
            raise StemLMParseError('too many fields for a {}-gram'.format(k), line_number, k)
    if len(words) != k:
        raise StemLMParseError('expected {} tokens, found {}'.format(k, len(words)), line_number, k)
    logprob = _number(fields[0], line_number)
    backoff = _number(rest[0], line_number) if rest else None
    return tuple(words), logprob, backoff


def read_arpa(source):
    """
    parse an ARPA document

    :param source: text stream or iterable of lines
    :return: BackoffModel
    """
    declared = {}
    probs = []
    backoffs = []
    state = 'preamble'
    current = 0
    line_number = 0
    for line_number, line in enumerate(source, 1):
        line = line.strip()
        if state == 'preamble':
            if line == '\\data\\':
                state = 'counts'
            continue
        if not line:
            continue
        if state == 'counts':
            match = _NGRAM_LINE.match(line)
            if match:
                k, count = int(match.group(1)), int(match.group(2))
                if k != len(declared) + 1:
                    raise StemLMParseError('ngram {} declared out of sequence'.format(k), line_number, k)
                declared[k] = count
                continue
            if not declared:
                raise StemLMParseError('no "ngram k=N" lines after \\data\\', line_number)
            state = 'entries'
        if state == 'done':
            raise StemLMParseError('text after \\end\\', line_number)
        if line == '\\end\\':
            state = 'done'
            continue
        match = _SECTION_LINE.match(line)
        if match:
            k = int(match.group(1))
            if k != current + 1 or k not in declared:
                raise StemLMParseError('unexpected section \\{}-grams:'.format(k), line_number, k)
            current = k
            probs.append({})
            backoffs.append({})
            continue
        if not current:
            raise StemLMParseError('entry outside an n-gram section', line_number)
        ngram, logprob, backoff = _parse_entry(line, current, line_number)
        if ngram in probs[current - 1]:
            raise StemLMParseError('duplicate {}-gram {}'.format(current, u' '.join(ngram)), line_number, current)
        probs[current - 1][ngram] = logprob
        if backoff is not None:
            backoffs[current - 1][ngram] = backoff
    if state == 'preamble':
        raise StemLMParseError('missing \\data\\ header', line_number)
    if state != 'done':
        raise StemLMParseError('missing \\end\\', line_number)
    for k in sorted(declared):
        if k > len(probs):
            raise StemLMParseError('missing \\{}-grams: section'.format(k), line_number, k)
        if len(probs[k - 1]) != declared[k]:
            raise StemLMParseError('ngram {} declares {} entries, section has {}'.format(
                k, declared[k], len(probs[k - 1])), order=k)
    order = len(probs)
    return BackoffModel(order, probs, backoffs[:order - 1])


def read_arpa_file(path):
    _logger.info("Loading model from '%s'...", path)
    model = read_arpa(line for _, line in read_lines(path, StemLMParseError))
    _logger.info("Done. %s", model)
    return model
