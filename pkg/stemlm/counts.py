# -*- coding: utf-8 -*-
import logging
from collections import Counter

from . import const
from .exception import StemLMUsageError

_logger = logging.getLogger(__name__)


class NGramTable(object):
    """
    n-gram counts of orders 1..order plus everything smoothing reads off them

    n-grams are tuples of vocabulary ids. the table is not modified after
    construction; merge returns a new table.
    """

    def __init__(self, order, vocab, counts=None):
        """
        :param order: highest order
        :param vocab: the Vocabulary the ids refer to
        :param counts: list of Counter, counts[k-1] holds the k-grams
        """
        if order < 1:
            raise StemLMUsageError('order must be >= 1 (got {})'.format(order))
        self.order = order
        self.vocab = vocab
        self.__counts = [Counter(counts[k]) if counts else Counter() for k in range(order)]
        self.__context_totals = []
        self.__successor_types = []
        self.__count_of_counts = []
        self.__continuation = []
        for k in range(1, order + 1):
            totals = Counter()
            types = Counter()
            coc = Counter()
            for ngram, count in self.__counts[k - 1].items():
                if count <= 0:
                    continue
                totals[ngram[:-1]] += count
                types[ngram[:-1]] += 1
                coc[count] += 1
            self.__context_totals.append(totals)
            self.__successor_types.append(types)
            self.__count_of_counts.append(coc)
        for k in range(1, order):
            continuation = Counter()
            for ngram in self.__counts[k]:
                continuation[ngram[1:]] += 1
            self.__continuation.append(continuation)

    def __check_order(self, k):
        if not 1 <= k <= self.order:
            raise StemLMUsageError('order {} out of range [1..{}]'.format(k, self.order))

    def ngrams(self, k):
        """
        :return: dict k-gram -> count
        """
        self.__check_order(k)
        return dict(self.__counts[k - 1])

    def count(self, ngram):
        if not ngram or len(ngram) > self.order:
            return 0
        return self.__counts[len(ngram) - 1].get(tuple(ngram), 0)

    def total(self, k):
        """
        :return: number of k-gram tokens
        """
        self.__check_order(k)
        return sum(self.__counts[k - 1].values())

    def context_total(self, context):
        """
        :return: sum of the counts of all extensions of context
        """
        k = len(context) + 1
        if k > self.order:
            return 0
        return self.__context_totals[k - 1].get(tuple(context), 0)

    def context_totals(self, k):
        self.__check_order(k)
        return dict(self.__context_totals[k - 1])

    def successor_types(self, context):
        """
        :return: T(h), the number of distinct tokens seen after context
        """
        k = len(context) + 1
        if k > self.order:
            return 0
        return self.__successor_types[k - 1].get(tuple(context), 0)

    def count_of_counts(self, k):
        """
        :return: dict r -> n_r for order k, r > 0
        """
        self.__check_order(k)
        return dict(self.__count_of_counts[k - 1])

    def continuation_count(self, ngram):
        """
        :return: number of distinct tokens seen immediately before ngram
        """
        k = len(ngram)
        if not 1 <= k < self.order:
            return 0
        return self.__continuation[k - 1].get(tuple(ngram), 0)

    def continuation_counts(self, k):
        """
        :return: dict k-gram -> number of distinct left extensions, for k < order
        """
        if not 1 <= k < self.order:
            raise StemLMUsageError('continuation counts need 1 <= k < {} (got {})'.format(self.order, k))
        return dict(self.__continuation[k - 1])

    def merge(self, other):
        """
        sum two tables over the same vocabulary and order

        :return: new NGramTable
        """
        if self.order != other.order:
            raise StemLMUsageError("can't merge tables of order {} and {}".format(self.order, other.order))
        if self.vocab != other.vocab:
            raise StemLMUsageError("can't merge tables over different vocabularies")
        counts = []
        for k in range(1, self.order + 1):
            merged = Counter(self.__counts[k - 1])
            merged.update(other.ngrams(k))
            counts.append(merged)
        return NGramTable(self.order, self.vocab, counts)

    __add__ = merge

    def dump(self, sink):
        """
        write "token_1 ... token_k<TAB>count" lines, orders ascending, each
        order sorted by token ids
        """
        for k in range(1, self.order + 1):
            for ngram in sorted(self.__counts[k - 1]):
                tokens = u' '.join(self.vocab.token_of(idx) for idx in ngram)
                sink.write(u'{}\t{}\n'.format(tokens, self.__counts[k - 1][ngram]))

    def __eq__(self, other):
        if not isinstance(other, NGramTable) or self.order != other.order:
            return False
        return all(self.ngrams(k) == other.ngrams(k) for k in range(1, self.order + 1))

    def __ne__(self, other):
        return not self == other

    def __str__(self):
        return '<NGramTable>: [order:{}, {}]'.format(
            self.order, ', '.join('{}-grams:{}'.format(k, len(self.__counts[k - 1])) for k in range(1, self.order + 1)))

    def __repr__(self):
        return self.__str__()


def count_ngrams(corpus, order, vocab):
    """
    count all k-grams, k = 1..order

    each sentence is padded with one sentence-begin and one sentence-end
    symbol; tokens missing from vocab count as the unknown word.

    :param corpus: iterable of token tuples
    :param order: highest order (>= 1)
    :param vocab: Vocabulary
    :return: NGramTable
    """
    if order < 1:
        raise StemLMUsageError('order must be >= 1 (got {})'.format(order))
    counts = [Counter() for _ in range(order)]
    sentences = 0
    for tokens in corpus:
        sentences += 1
        ids = (const.BEGIN_ID,) + vocab.ids(tokens) + (const.END_ID,)
        for k in range(1, order + 1):
            bucket = counts[k - 1]
            for i in range(len(ids) - k + 1):
                bucket[ids[i:i + k]] += 1
    table = NGramTable(order, vocab, counts)
    _logger.debug('counted %i sentences: %s', sentences, table)
    return table


def count_ngrams_sharded(shards, order, vocab):
    """
    count every shard on its own and merge the tables
    """
    table = None
    for shard in shards:
        shard_table = count_ngrams(shard, order, vocab)
        table = shard_table if table is None else table.merge(shard_table)
    if table is None:
        table = NGramTable(order, vocab)
    return table


def merge_tables(tables):
    tables = list(tables)
    if not tables:
        raise StemLMUsageError('nothing to merge')
    merged = tables[0]
    for table in tables[1:]:
        merged = merged.merge(table)
    return merged


def count_of_counts(table, k):
    """
    :return: dict r -> n_r, the number of distinct k-grams seen exactly r times
    """
    return table.count_of_counts(k)
