# -*- coding: utf-8 -*-
import logging
import math

import numpy as np

from . import const
from .exception import StemLMDataError
from .smoothing import sequence_logprob

_logger = logging.getLogger(__name__)


def _percent(part, whole):
    return 100.0 * part / whole if whole else 0.0


class PerplexityReport(object):
    """
    perplexity, OOV rate and per-order hit counts of a test text

    word_count counts every test word token, OOVs included. scored tokens
    are the in-vocabulary words plus one end symbol per sentence; hits are
    tallied over the in-vocabulary words only.
    """

    def __init__(self, word_count=0, sentence_count=0, oov_count=0,
                 scored_token_count=0, total_log10_prob=0.0, hit_counts=None):
        self.word_count = word_count
        self.sentence_count = sentence_count
        self.oov_count = oov_count
        self.scored_token_count = scored_token_count
        self.total_log10_prob = total_log10_prob
        self.hit_counts = dict((int(k), v) for k, v in (hit_counts or {}).items())

    @property
    def scored_word_count(self):
        return self.word_count - self.oov_count

    @property
    def perplexity(self):
        if not self.scored_token_count:
            return float('inf')
        return 10.0 ** (-self.total_log10_prob / self.scored_token_count)

    @property
    def oov_rate(self):
        return _percent(self.oov_count, self.word_count)

    def hit_rate(self, order):
        return _percent(self.hit_counts.get(order, 0), self.scored_word_count)

    @property
    def hits_per_order(self):
        """
        :return: dict order -> (count, percent of scored words)
        """
        return dict((k, (count, self.hit_rate(k))) for k, count in self.hit_counts.items())

    @staticmethod
    def json_unpack(json):
        return PerplexityReport(
            word_count=json['word_count'],
            sentence_count=json['sentence_count'],
            oov_count=json['oov_count'],
            scored_token_count=json['scored_token_count'],
            total_log10_prob=json['total_log10_prob'],
            hit_counts=dict((int(k), v['count']) for k, v in json['hits_per_order'].items())
        )

    def json_pack(self):
        return {
            "word_count": self.word_count,
            "sentence_count": self.sentence_count,
            "oov_count": self.oov_count,
            "oov_rate": self.oov_rate,
            "scored_token_count": self.scored_token_count,
            "total_log10_prob": self.total_log10_prob,
            "perplexity": self.perplexity,
            "hits_per_order": dict(
                (str(k), {"count": count, "percent": percent})
                for k, (count, percent) in sorted(self.hits_per_order.items()))
        }

    def merge(self, other):
        hits = dict(self.hit_counts)
        for k, count in other.hit_counts.items():
            hits[k] = hits.get(k, 0) + count
        return PerplexityReport(
            self.word_count + other.word_count,
            self.sentence_count + other.sentence_count,
            self.oov_count + other.oov_count,
            self.scored_token_count + other.scored_token_count,
            math.fsum((self.total_log10_prob, other.total_log10_prob)),
            hits)

    __add__ = merge

    def __eq__(self, other):
        return isinstance(other, PerplexityReport) and self.json_pack() == other.json_pack()

    def __ne__(self, other):
        return not self == other

    def __str__(self):
        return '<PerplexityReport>: [ppl:{:.2f}, words:{}, oov:{} ({:.2f}%)]'.format(
            self.perplexity, self.word_count, self.oov_count, self.oov_rate)

    def __repr__(self):
        return self.__str__()


def evaluate_perplexity(model, test, vocab=None):
    """
    score a test text with a model

    :param model: BackoffModel
    :param test: iterable of token sequences
    :param vocab: training vocabulary deciding what is OOV, defaults to the model's
    :return: PerplexityReport
    """
    hits = dict((k, 0) for k in range(1, model.order + 1))
    logprobs = []
    report = PerplexityReport(hit_counts=hits)
    for tokens in test:
        score = sequence_logprob(model, tokens, vocab)
        report.sentence_count += 1
        report.word_count += len(tokens)
        report.oov_count += score.oov_count
        report.scored_token_count += score.scored_token_count
        logprobs.append(score.logprob)
        for hit in score.word_hit_orders:
            hits[hit] += 1
    if not report.word_count:
        raise StemLMDataError('test corpus has no words')
    report.total_log10_prob = math.fsum(logprobs)
    _logger.info('%s', report)
    return report


class WerReport(object):
    """
    word error counts of one or more aligned sentence pairs

    :param ops: alignment trace, list of (op, reference token, hypothesis token)
    """

    def __init__(self, reference_length=0, insertions=0, deletions=0, substitutions=0, ops=None):
        self.reference_length = reference_length
        self.insertions = insertions
        self.deletions = deletions
        self.substitutions = substitutions
        self.ops = list(ops or [])

    @property
    def errors(self):
        return self.insertions + self.deletions + self.substitutions

    @property
    def correct(self):
        return self.reference_length - self.deletions - self.substitutions

    @property
    def wer_percent(self):
        if not self.reference_length:
            return 100.0 if self.insertions else 0.0
        return 100.0 * self.errors / self.reference_length

    @property
    def word_accuracy_percent(self):
        if not self.reference_length:
            return 0.0 if self.insertions else 100.0
        return 100.0 * (self.reference_length - self.errors) / self.reference_length

    @staticmethod
    def json_unpack(json):
        report = WerReport(
            reference_length=json['reference_length'],
            insertions=json['insertions'],
            deletions=json['deletions'],
            substitutions=json['substitutions']
        )
        if 'correct' in json and json['correct'] != report.correct:
            raise StemLMDataError('correct is {}, counts give {}'.format(json['correct'], report.correct))
        return report

    def json_pack(self):
        return {
            "reference_length": self.reference_length,
            "correct": self.correct,
            "insertions": self.insertions,
            "deletions": self.deletions,
            "substitutions": self.substitutions,
            "wer_percent": self.wer_percent,
            "word_accuracy_percent": self.word_accuracy_percent
        }

    def merge(self, other):
        return WerReport(
            self.reference_length + other.reference_length,
            self.insertions + other.insertions,
            self.deletions + other.deletions,
            self.substitutions + other.substitutions,
            self.ops + other.ops)

    __add__ = merge

    def update(self, other):
        """
        add the counts and trace of other to this report in place
        """
        self.reference_length += other.reference_length
        self.insertions += other.insertions
        self.deletions += other.deletions
        self.substitutions += other.substitutions
        self.ops.extend(other.ops)
        return self

    def __eq__(self, other):
        return isinstance(other, WerReport) and self.json_pack() == other.json_pack()

    def __ne__(self, other):
        return not self == other

    def __str__(self):
        return '<WerReport>: [N:{}, I:{}, D:{}, S:{}, wer:{:.2f}%]'.format(
            self.reference_length, self.insertions, self.deletions, self.substitutions, self.wer_percent)

    def __repr__(self):
        return self.__str__()


def _trellis(reference, hypothesis):
    d = np.zeros((len(reference) + 1, len(hypothesis) + 1), dtype=np.int64)
    d[:, 0] = np.arange(len(reference) + 1)
    d[0, :] = np.arange(len(hypothesis) + 1)
    for i in range(1, len(reference) + 1):
        for j in range(1, len(hypothesis) + 1):
            diagonal = d[i - 1, j - 1] + (0 if reference[i - 1] == hypothesis[j - 1] else 1)
            d[i, j] = min(diagonal, d[i - 1, j] + 1, d[i, j - 1] + 1)
    return d


def align_wer(reference, hypothesis):
    """
    minimum edit distance alignment with unit costs

    the trace is read back from the end preferring match, then
    substitution, deletion and insertion.

    :param reference: token sequence
    :param hypothesis: token sequence
    :return: WerReport with ops
    """
    reference = tuple(reference)
    hypothesis = tuple(hypothesis)
    d = _trellis(reference, hypothesis)
    ops = []
    i, j = len(reference), len(hypothesis)
    while i or j:
        if i and j and reference[i - 1] == hypothesis[j - 1] and d[i, j] == d[i - 1, j - 1]:
            ops.append((const.OP_MATCH, reference[i - 1], hypothesis[j - 1]))
            i, j = i - 1, j - 1
        elif i and j and d[i, j] == d[i - 1, j - 1] + 1:
            ops.append((const.OP_SUBSTITUTION, reference[i - 1], hypothesis[j - 1]))
            i, j = i - 1, j - 1
        elif i and d[i, j] == d[i - 1, j] + 1:
            ops.append((const.OP_DELETION, reference[i - 1], None))
            i -= 1
        else:
            ops.append((const.OP_INSERTION, None, hypothesis[j - 1]))
            j -= 1
    ops.reverse()
    kinds = [op for op, _, _ in ops]
    return WerReport(
        reference_length=len(reference),
        insertions=kinds.count(const.OP_INSERTION),
        deletions=kinds.count(const.OP_DELETION),
        substitutions=kinds.count(const.OP_SUBSTITUTION),
        ops=ops)


def score_wer_corpus(references, hypotheses):
    """
    align line by line and sum the counts

    :param references: iterable of token sequences
    :param hypotheses: iterable of token sequences, one per reference
    :return: WerReport
    """
    references = list(references)
    hypotheses = list(hypotheses)
    if len(references) != len(hypotheses):
        raise StemLMDataError('{} reference lines but {} hypothesis lines'.format(
            len(references), len(hypotheses)))
    report = WerReport()
    for reference, hypothesis in zip(references, hypotheses):
        report.update(align_wer(reference, hypothesis))
    _logger.info('%s', report)
    return report
