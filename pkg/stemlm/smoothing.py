# -*- coding: utf-8 -*-
import logging
import math
import warnings
from collections import defaultdict

from . import const
from .corpus import Vocabulary
from .exception import StemLMDataError, StemLMUsageError, DegenerateStatisticsWarning

_logger = logging.getLogger(__name__)

_EPS = 1e-12

_ALIASES = {
    'goodturing': const.GOOD_TURING,
    'gt': const.GOOD_TURING,
    'katz': const.GOOD_TURING,
    'lineardiscount': const.LINEAR,
    'absolutediscount': const.ABSOLUTE,
    'wittenbell': const.WITTEN_BELL,
    'wb': const.WITTEN_BELL,
    'kneserney': const.KNESER_NEY,
    'kn': const.KNESER_NEY,
}


def _warn(message):
    warnings.warn(message, DegenerateStatisticsWarning, stacklevel=3)


class SmoothingMethod(object):
    """
    one of the five smoothing schemes plus its parameters

    :param kind: good-turing, linear, absolute, witten-bell or kneser-ney
    :param cutoff: Good-Turing count cutoff k, counts above it are not discounted
    :param discount: fixed discount D for absolute and kneser-ney, None to
        estimate it per order from the count-of-counts
    """

    def __init__(self, kind, cutoff=const.GT_CUTOFF, discount=None):
        name = str(kind).strip().lower().replace('_', '-')
        name = _ALIASES.get(name.replace('-', ''), name)
        if name not in const.METHODS:
            raise StemLMUsageError('unknown smoothing method {!r} (expected one of {})'.format(
                kind, ', '.join(const.METHODS)))
        if int(cutoff) < 1:
            raise StemLMUsageError('Good-Turing cutoff must be >= 1 (got {})'.format(cutoff))
        if discount is not None and not 0.0 < float(discount) < 1.0:
            raise StemLMUsageError('discount must be in (0, 1) (got {})'.format(discount))
        self.kind = name
        self.cutoff = int(cutoff)
        self.discount = None if discount is None else float(discount)

    @property
    def interpolated(self):
        return self.kind in const.INTERPOLATED_METHODS

    def __eq__(self, other):
        return isinstance(other, SmoothingMethod) and self.__dict__ == other.__dict__

    def __ne__(self, other):
        return not self == other

    def __str__(self):
        if self.kind == const.GOOD_TURING:
            return '<SmoothingMethod>: [{} k={}]'.format(self.kind, self.cutoff)
        if self.discount is not None:
            return '<SmoothingMethod>: [{} D={}]'.format(self.kind, self.discount)
        return '<SmoothingMethod>: [{}]'.format(self.kind)

    def __repr__(self):
        return self.__str__()


class BackoffModel(object):
    """
    back-off n-gram model keyed by token strings

    probs[k-1] maps k-tuples to log10 probabilities, backoffs[k-1] maps
    k-tuples used as contexts to log10 back-off weights (orders 1..n-1).
    """

    def __init__(self, order, probs, backoffs=None, vocab=None):
        if order < 1 or len(probs) != order:
            raise StemLMUsageError('a model of order {} needs {} probability tables (got {})'.format(
                order, max(order, 0), len(probs)))
        backoffs = list(backoffs or [])
        if len(backoffs) > order - 1:
            raise StemLMUsageError('back-off weights given for order {}'.format(len(backoffs)))
        backoffs += [{} for _ in range(order - 1 - len(backoffs))]
        self.order = order
        self.__probs = [dict(table) for table in probs]
        self.__backoffs = [dict(table) for table in backoffs]
        if vocab is None:
            vocab = Vocabulary(ngram[0] for ngram in self.__probs[0])
        self.vocab = vocab

    def logprob(self, ngram):
        """
        :return: stored log10 probability of ngram, None when not stored
        """
        ngram = tuple(ngram)
        if not 1 <= len(ngram) <= self.order:
            return None
        return self.__probs[len(ngram) - 1].get(ngram)

    def backoff(self, context):
        """
        :return: stored log10 back-off weight of context, 0.0 when not stored
        """
        context = tuple(context)
        if not 1 <= len(context) < self.order:
            return 0.0
        return self.__backoffs[len(context) - 1].get(context, 0.0)

    def has_backoff(self, ngram):
        ngram = tuple(ngram)
        return 1 <= len(ngram) < self.order and ngram in self.__backoffs[len(ngram) - 1]

    def ngram_count(self, k):
        return len(self.__probs[k - 1])

    def entries(self, k):
        """
        :return: list of (ngram, log10 prob, log10 back-off or None) sorted by tokens
        """
        backoffs = self.__backoffs[k - 1] if k < self.order else {}
        return [(ngram, self.__probs[k - 1][ngram], backoffs.get(ngram))
                for ngram in sorted(self.__probs[k - 1])]

    def resolve(self, token):
        return token if token in self.vocab else const.UNKNOWN

    def predicted_tokens(self):
        return [token for token in self.vocab if token != const.SENTENCE_BEGIN]

    def conditional_prob(self, context, word):
        return conditional_prob(self, context, word)

    def prob_sum(self, context):
        """
        brute-force sum of P(w | context) over every predicted token
        """
        return math.fsum(conditional_prob(self, context, word)[0] for word in self.predicted_tokens())

    def __eq__(self, other):
        if not isinstance(other, BackoffModel) or self.order != other.order:
            return False
        return all(self.entries(k) == other.entries(k) for k in range(1, self.order + 1))

    def __ne__(self, other):
        return not self == other

    def __str__(self):
        return '<BackoffModel>: [order:{}, {}]'.format(
            self.order, ', '.join('{}-grams:{}'.format(k, self.ngram_count(k)) for k in range(1, self.order + 1)))

    def __repr__(self):
        return self.__str__()


class SentenceScore(object):
    """
    sequence_logprob result; unpacks as (logprob, hit_orders, oov_count, scored_token_count)
    """

    def __init__(self, logprob, hit_orders, oov_count, scored_token_count):
        self.logprob = logprob
        self.hit_orders = hit_orders
        self.oov_count = oov_count
        self.scored_token_count = scored_token_count

    @property
    def word_hit_orders(self):
        # the last scored event is always the end symbol
        return self.hit_orders[:-1]

    def __iter__(self):
        return iter((self.logprob, self.hit_orders, self.oov_count, self.scored_token_count))

    def __str__(self):
        return '<SentenceScore>: [logprob:{:.4f}, scored:{}, oov:{}]'.format(
            self.logprob, self.scored_token_count, self.oov_count)

    def __repr__(self):
        return self.__str__()


def good_turing_adjusted_count(r, count_of_counts):
    """
    r* = (r + 1) n_{r+1} / n_r
    """
    n_r = count_of_counts.get(r, 0)
    if n_r <= 0:
        raise StemLMUsageError('n_{} is zero, no adjusted count exists'.format(r))
    return (r + 1) * count_of_counts.get(r + 1, 0) / float(n_r)


def katz_discounts(count_of_counts, cutoff=const.GT_CUTOFF):
    """
    Katz discount ratios d_r for 1 <= r <= cutoff

    d_r = (r*/r - A) / (1 - A) with A = (k + 1) n_{k+1} / n_1, so counts above
    the cutoff keep their full mass. ratios that fall outside (0, 1] are
    dropped (no adjustment for that r) with a warning.

    :return: dict r -> d_r; missing r means d_r = 1
    """
    n_1 = count_of_counts.get(1, 0)
    if n_1 == 0:
        _warn('Good-Turing: n_1 = 0, counts are not discounted')
        return {}
    common = (cutoff + 1) * count_of_counts.get(cutoff + 1, 0) / float(n_1)
    if common >= 1.0:
        _warn('Good-Turing: Katz renormalization impossible ((k+1) n_{k+1} >= n_1), using plain Turing ratios')
        common = 0.0
    discounts = {}
    for r in range(1, cutoff + 1):
        if not count_of_counts.get(r, 0):
            continue
        r_star = good_turing_adjusted_count(r, count_of_counts)
        d_r = (r_star / r - common) / (1.0 - common)
        if r_star == 0.0 or not 0.0 < d_r <= 1.0:
            _warn('Good-Turing: no usable adjustment for r = {} (n_r = {}, n_r+1 = {})'.format(
                r, count_of_counts[r], count_of_counts.get(r + 1, 0)))
            continue
        discounts[r] = d_r
    return discounts


def absolute_discount(count_of_counts):
    """
    D = n_1 / (n_1 + 2 n_2), 0.5 when either count is zero
    """
    n_1 = count_of_counts.get(1, 0)
    n_2 = count_of_counts.get(2, 0)
    if n_1 == 0 or n_2 == 0:
        _warn('discount: n_1 = {}, n_2 = {}; using D = {}'.format(n_1, n_2, const.FALLBACK_DISCOUNT))
        return const.FALLBACK_DISCOUNT
    return n_1 / float(n_1 + 2 * n_2)


def linear_discount(count_of_counts):
    """
    lambda = n_1 / N, the singleton fraction; 0.5 when that is not in (0, 1)
    """
    total = sum(r * n_r for r, n_r in count_of_counts.items())
    lam = count_of_counts.get(1, 0) / float(total) if total else 0.0
    if not 0.0 < lam < 1.0:
        _warn('linear discount: lambda = {:.4f}; using {}'.format(lam, const.FALLBACK_DISCOUNT))
        return const.FALLBACK_DISCOUNT
    return lam


def witten_bell_prob(count, context_total, successor_types, lower_prob):
    """
    P(w|h) = [c(h,w) + T(h) P_lower(w|h')] / [c(h) + T(h)]
    """
    return (count + successor_types * lower_prob) / float(context_total + successor_types)


def kneser_ney_continuation_probs(table):
    """
    continuation probability of every predicted unigram, N1+(. w) / N1+(. .)

    :return: dict token -> probability
    """
    if table.order < 2:
        raise StemLMUsageError('continuation counts need a table of order >= 2')
    counts = dict((ngram[0], count) for ngram, count in table.continuation_counts(1).items()
                  if ngram[0] != const.BEGIN_ID)
    total = float(sum(counts.values()))
    return dict((table.vocab.token_of(idx), count / total) for idx, count in sorted(counts.items()))


def _count_of_counts(counts):
    coc = defaultdict(int)
    for count in counts.values():
        coc[count] += 1
    return dict(coc)


def _effective_counts(table, method, order, k):
    """
    counts order k is estimated from; kneser-ney below the top order uses
    continuation counts except for n-grams starting at the sentence begin
    """
    raw = table.ngrams(k)
    if k == 1:
        raw = dict((ngram, count) for ngram, count in raw.items() if ngram[0] != const.BEGIN_ID)
    if method.kind != const.KNESER_NEY or k == order:
        return raw
    counts = {}
    for ngram, count in raw.items():
        if ngram[0] == const.BEGIN_ID:
            counts[ngram] = count
        else:
            counts[ngram] = table.continuation_count(ngram)
    return counts


def _order_params(method, counts):
    coc = _count_of_counts(counts)
    if method.kind == const.GOOD_TURING:
        return katz_discounts(coc, method.cutoff)
    if method.kind == const.LINEAR:
        return linear_discount(coc)
    if method.kind in (const.ABSOLUTE, const.KNESER_NEY):
        return method.discount if method.discount is not None else absolute_discount(coc)
    return None


def _discount_seen(method, params, successors):
    """
    :return: (dict w -> discounted probability, left-over mass)
    """
    total = float(sum(successors.values()))
    types = len(successors)
    kind = method.kind
    if kind == const.GOOD_TURING:
        seen = dict((w, params.get(c, 1.0) * c / total) for w, c in successors.items())
        return seen, 1.0 - math.fsum(seen.values())
    if kind == const.LINEAR:
        return dict((w, (1.0 - params) * c / total) for w, c in successors.items()), params
    if kind in (const.ABSOLUTE, const.KNESER_NEY):
        seen = dict((w, max(c - params, 0.0) / total) for w, c in successors.items())
        return seen, params * types / total
    seen = dict((w, witten_bell_prob(c, total, types, 0.0)) for w, c in successors.items())
    return seen, types / (total + types)


def _lookup(probs, backoffs, context, word):
    weight = 1.0
    while True:
        prob = probs[len(context)].get(context + (word,))
        if prob is not None:
            return weight * prob
        if not context:
            return 0.0
        weight *= backoffs[len(context) - 1].get(context, 1.0)
        context = context[1:]


def _estimate_unigrams(table, method, order, predicted):
    counts = _effective_counts(table, method, order, 1)
    counts = dict((ngram[0], count) for ngram, count in counts.items() if count > 0)
    if not counts:
        raise StemLMDataError('no unigram counts to estimate from')
    params = _order_params(method, counts)
    seen, left = _discount_seen(method, params, counts)
    unseen = [w for w in predicted if w not in counts]
    if method.interpolated:
        uniform = 1.0 / len(predicted)
        dist = dict((w, seen.get(w, 0.0) + left * uniform) for w in predicted)
    else:
        dist = dict(seen)
        for w in unseen:
            dist[w] = left / len(unseen)
    for w in unseen:
        dist[w] = max(dist[w], const.PROB_FLOOR)
    total = math.fsum(dist.values())
    _logger.debug('unigrams: %i seen, %i unseen, params %s', len(counts), len(unseen), params)
    return dict(((w,), dist[w] / total) for w in predicted)


def _estimate_order(table, method, order, k, probs, backoffs, predicted_count):
    counts = _effective_counts(table, method, order, k)
    by_context = defaultdict(dict)
    for ngram, count in counts.items():
        if count > 0:
            by_context[ngram[:-1]][ngram[-1]] = count
    params = _order_params(method, counts)
    _logger.debug('%i-grams: %i contexts, params %s', k, len(by_context), params)
    stored = {}
    weights = {}
    for context in sorted(by_context):
        successors = by_context[context]
        seen, left = _discount_seen(method, params, successors)
        lower = dict((w, _lookup(probs, backoffs, context[1:], w)) for w in successors)
        if method.interpolated:
            for w in successors:
                stored[context + (w,)] = seen[w] + left * lower[w]
            weights[context] = left
            continue
        uncovered = 1.0 - math.fsum(lower.values())
        if len(successors) >= predicted_count or uncovered <= _EPS:
            norm = math.fsum(seen.values())
            for w in successors:
                stored[context + (w,)] = seen[w] / norm
            weights[context] = 1.0
        elif left <= _EPS:
            _warn('no mass left for unseen successors of a {}-gram context'.format(k - 1))
            for w in successors:
                stored[context + (w,)] = seen[w]
            weights[context] = 0.0
        else:
            for w in successors:
                stored[context + (w,)] = seen[w]
            weights[context] = left / uncovered
    return stored, weights


def _log10(value):
    if value <= 0.0:
        return const.LOG_FLOOR
    return max(math.log10(value), const.LOG_FLOOR)


def estimate(table, method, order=None):
    """
    estimate a back-off model from an NGramTable

    witten-bell and kneser-ney are interpolated and stored in the equivalent
    back-off form; good-turing (Katz), linear and absolute are back-off
    models. lower orders are finished before higher ones so every back-off
    weight normalizes its context exactly.

    :param table: NGramTable
    :param method: SmoothingMethod or a method name
    :param order: model order, defaults to the table order
    :return: BackoffModel
    """
    if not isinstance(method, SmoothingMethod):
        method = SmoothingMethod(method)
    order = table.order if order is None else int(order)
    if order < 1:
        raise StemLMUsageError('order must be >= 1 (got {})'.format(order))
    if order > table.order:
        raise StemLMUsageError('a {}-gram model needs a table of order >= {} (got {})'.format(
            order, order, table.order))
    if table.total(1) == 0:
        raise StemLMDataError('empty n-gram table')
    _logger.info('Estimating %i-gram model with %s...', order, method)
    vocab = table.vocab
    predicted = [idx for idx in range(len(vocab)) if idx != const.BEGIN_ID]
    probs = [_estimate_unigrams(table, method, order, predicted)]
    backoffs = []
    for k in range(2, order + 1):
        stored, weights = _estimate_order(table, method, order, k, probs, backoffs, len(predicted))
        probs.append(stored)
        backoffs.append(weights)

    log_probs = []
    for k in range(1, order + 1):
        log_probs.append(dict((tuple(vocab.token_of(idx) for idx in ngram), _log10(p))
                              for ngram, p in probs[k - 1].items()))
    log_probs[0][(const.SENTENCE_BEGIN,)] = const.LOG_FLOOR
    log_backoffs = []
    for k in range(1, order):
        log_backoffs.append(dict((tuple(vocab.token_of(idx) for idx in context), _log10(w))
                                 for context, w in backoffs[k - 1].items()))
    model = BackoffModel(order, log_probs, log_backoffs, vocab)
    _logger.info('Done. %s', model)
    return model


def conditional_logprob(model, context, word):
    """
    log10 P(word | context) with recursive back-off

    :return: (log10 probability, hit order)
    """
    word = model.resolve(word)
    context = tuple(model.resolve(token) for token in context)
    context = context[len(context) - model.order + 1:] if model.order > 1 else ()
    weight = 0.0
    while True:
        logprob = model.logprob(context + (word,))
        if logprob is not None:
            return weight + logprob, len(context) + 1
        if not context:
            return weight + const.LOG_FLOOR, 1
        weight += model.backoff(context)
        context = context[1:]


def conditional_prob(model, context, word):
    """
    P(word | context) with recursive back-off

    :param model: BackoffModel
    :param context: token sequence, only the last order-1 tokens are used
    :param word: predicted token; unknown tokens map to the unknown symbol
    :return: (probability, hit order)
    """
    logprob, hit = conditional_logprob(model, context, word)
    return 10.0 ** logprob, hit


def sequence_logprob(model, sentence, vocab=None):
    """
    score one sentence

    the sentence is padded with the begin and end symbols; the words and the
    end symbol are predicted. tokens outside vocab are OOV: counted, not
    scored, and seen as the unknown word by later contexts.

    :param model: BackoffModel
    :param sentence: token sequence
    :param vocab: training vocabulary deciding what is OOV, defaults to the model's
    :return: SentenceScore
    """
    vocab = model.vocab if vocab is None else vocab
    history = [const.SENTENCE_BEGIN]
    total = 0.0
    hits = []
    oov = 0
    for token in sentence:
        if token not in vocab:
            oov += 1
            history.append(const.UNKNOWN)
            continue
        logprob, hit = conditional_logprob(model, history, token)
        total += logprob
        hits.append(hit)
        history.append(token)
    logprob, hit = conditional_logprob(model, history, const.SENTENCE_END)
    total += logprob
    hits.append(hit)
    return SentenceScore(total, hits, oov, len(hits))
