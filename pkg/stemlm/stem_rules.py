# -*- coding: utf-8 -*-
import logging
import os

from . import const
from .corpus import normalize, read_lines
from .exception import StemLMDataError, StemLMUsageError

_logger = logging.getLogger(__name__)


class SuffixRule(object):
    """
    a suffix split off words whose stem, optionally, ends with stem_final_constraint
    """

    def __init__(self, suffix, stem_final_constraint=''):
        self.suffix = normalize(suffix or u'')
        self.stem_final_constraint = normalize(stem_final_constraint or u'')
        if not self.suffix:
            raise StemLMDataError('empty suffix')

    @property
    def constrained(self):
        return bool(self.stem_final_constraint)

    def key(self):
        return self.suffix, self.stem_final_constraint

    def sort_key(self):
        # longest suffix first, constrained before unconstrained on equal length
        return -len(self.suffix), not self.constrained, self.suffix, self.stem_final_constraint

    def match(self, word, min_stem_length=const.MIN_STEM_LENGTH):
        """
        :return: the residual stem if this rule splits word, None otherwise
        """
        if not word.endswith(self.suffix):
            return None
        stem = word[:len(word) - len(self.suffix)]
        if len(stem) < max(min_stem_length, 1):
            return None
        if not stem.endswith(self.stem_final_constraint):
            return None
        return stem

    def __eq__(self, other):
        return isinstance(other, SuffixRule) and self.key() == other.key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        if self.constrained:
            return u'<SuffixRule>: [{} after {}]'.format(self.suffix, self.stem_final_constraint)
        return u'<SuffixRule>: [{}]'.format(self.suffix)

    def __repr__(self):
        return self.__str__()


class SuffixRuleSet(object):
    """
    deduplicated rules, kept in matching order so file order never matters

    :param rules: iterable of SuffixRule
    :param min_stem_length: shortest stem (code points) a split may leave
    :param marker: single character prepended to split-off suffixes
    """

    def __init__(self, rules, min_stem_length=const.MIN_STEM_LENGTH, marker=const.MARKER):
        if int(min_stem_length) < 1:
            raise StemLMUsageError('min_stem_length must be >= 1 (got {})'.format(min_stem_length))
        if len(marker) != 1:
            raise StemLMUsageError('marker must be a single character (got {!r})'.format(marker))
        unique = dict((rule.key(), rule) for rule in rules)
        self.rules = sorted(unique.values(), key=SuffixRule.sort_key)
        for rule in self.rules:
            if marker in rule.suffix or marker in rule.stem_final_constraint:
                raise StemLMDataError(u'marker {!r} appears in rule {}'.format(marker, rule))
        self.min_stem_length = int(min_stem_length)
        self.marker = marker

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def __contains__(self, rule):
        return rule in self.rules

    def match(self, word):
        """
        :return: (rule, stem) of the longest matching rule, None if none matches
        """
        for rule in self.rules:
            stem = rule.match(word, self.min_stem_length)
            if stem is not None:
                return rule, stem
        return None

    def __str__(self):
        return '<SuffixRuleSet>: [rules:{}, min_stem:{}, marker:{}]'.format(
            len(self.rules), self.min_stem_length, self.marker)

    def __repr__(self):
        return self.__str__()


class SplitReport(object):
    """
    what a corpus splitting pass did
    """

    def __init__(self):
        self.split_types = set()
        self.unique_before = 0
        self.unique_after = 0
        self.tokens_before = 0
        self.tokens_after = 0

    @property
    def split_type_count(self):
        return len(self.split_types)

    def json_pack(self):
        return {
            "split_type_count": self.split_type_count,
            "unique_before": self.unique_before,
            "unique_after": self.unique_after,
            "tokens_before": self.tokens_before,
            "tokens_after": self.tokens_after
        }

    def __str__(self):
        return '<SplitReport>: [split types:{}, unique {} -> {}]'.format(
            self.split_type_count, self.unique_before, self.unique_after)

    def __repr__(self):
        return self.__str__()


def default_rules_path():
    """
    bundled Telugu rules, looked up in $STEMLM_DATA_DIR first
    """
    data_dir = os.environ.get(const.DATA_DIR_ENV) or os.path.join(os.path.dirname(__file__), 'data')
    return os.path.join(data_dir, const.DEFAULT_RULES)


def load_rules(source=None, min_stem_length=const.MIN_STEM_LENGTH, marker=const.MARKER):
    """
    read a rule file: one rule per line, SUFFIX[<TAB>STEM_FINAL_CONSTRAINT]

    blank lines and lines starting with # are skipped.

    :param source: file name or text stream, the bundled Telugu rules when None
    :return: SuffixRuleSet
    """
    if source is None:
        source = default_rules_path()
    if isinstance(source, str):
        _logger.info("Reading rules from '%s'...", source)
        return load_rules((line for _, line in read_lines(source)), min_stem_length, marker)
    rules = []
    for line_number, line in enumerate(source, 1):
        line = line.rstrip(u'\r\n')
        if not line.strip() or line.lstrip().startswith(u'#'):
            continue
        fields = line.split(u'\t')
        if len(fields) > 2 or not fields[0].strip():
            raise StemLMDataError(u'malformed rule {!r}'.format(line), line_number)
        suffix = fields[0].strip()
        constraint = fields[1].strip() if len(fields) > 1 else u''
        if len(suffix.split()) != 1 or len(constraint.split()) > 1:
            raise StemLMDataError(u'malformed rule {!r}'.format(line), line_number)
        rules.append(SuffixRule(suffix, constraint))
    if not rules:
        raise StemLMDataError('rule file has no rules')
    rule_set = SuffixRuleSet(rules, min_stem_length, marker)
    _logger.debug('%s', rule_set)
    return rule_set


def split_word_supervised(word, rules):
    """
    split word into stem and marked suffix with the longest matching rule

    :return: (stem, marker + suffix) or (word,)
    """
    found = rules.match(word)
    if found is None:
        return (word,)
    rule, stem = found
    return stem, rules.marker + rule.suffix


def apply_splitter(corpus, split_word, marker):
    """
    run split_word over every token of every sentence

    :param corpus: iterable of token sequences
    :param split_word: token -> tuple of one or two tokens
    :param marker: the splitter's marker; a corpus token containing it is an error
    :return: (list of token tuples, SplitReport)
    """
    report = SplitReport()
    before = set()
    after = set()
    cache = {}
    sentences = []
    for tokens in corpus:
        out = []
        for token in tokens:
            parts = cache.get(token)
            if parts is None:
                if marker in token:
                    raise StemLMDataError(u'token {!r} contains the marker {!r}'.format(token, marker))
                parts = cache[token] = tuple(split_word(token))
                before.add(token)
                after.update(parts)
                if len(parts) > 1:
                    report.split_types.add(token)
            out.extend(parts)
        report.tokens_before += len(tokens)
        report.tokens_after += len(out)
        sentences.append(tuple(out))
    report.unique_before = len(before)
    report.unique_after = len(after)
    _logger.info('%s', report)
    return sentences, report


def split_corpus_supervised(corpus, rules):
    """
    apply split_word_supervised to every token

    :return: (list of token tuples, SplitReport)
    """
    return apply_splitter(corpus, lambda word: split_word_supervised(word, rules), rules.marker)
