#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import io
import unittest

from stemlm import const
from stemlm.corpus import build_vocabulary
from stemlm.counts import (NGramTable, count_ngrams, count_ngrams_sharded, count_of_counts,
                           merge_tables)
from stemlm.exception import StemLMUsageError


def _table(corpus, order):
    vocab, _ = build_vocabulary(corpus)
    return count_ngrams(corpus, order, vocab), vocab


class CountsTest(unittest.TestCase):
    def test_bigrams(self):
        table, vocab = _table([(u'a', u'b')], 2)
        ids = vocab.ids
        self.assertEqual(table.ngrams(2), {
            ids([const.SENTENCE_BEGIN, u'a']): 1,
            ids([u'a', u'b']): 1,
            ids([u'b', const.SENTENCE_END]): 1,
        })

    def test_unigrams_include_padding(self):
        table, vocab = _table([(u'a',)], 1)
        self.assertEqual(table.ngrams(1), {
            (const.BEGIN_ID,): 1, (vocab.id_of(u'a'),): 1, (const.END_ID,): 1})

    def test_repeated_bigram(self):
        table, vocab = _table([(u'a', u'b'), (u'a', u'b')], 2)
        self.assertEqual(table.count(vocab.ids([u'a', u'b'])), 2)
        self.assertGreaterEqual(table.count_of_counts(2).get(2, 0), 1)

    def test_count_of_counts(self):
        table, vocab = _table([(u'a', u'a', u'b')], 1)
        # a:2, b:1, <s>:1, </s>:1
        self.assertEqual(count_of_counts(table, 1), {1: 3, 2: 1})
        coc = count_of_counts(table, 1)
        self.assertEqual(sum(r * n for r, n in coc.items()), table.total(1))

    def test_count_of_counts_by_hand(self):
        vocab, _ = build_vocabulary([(u'x', u'y', u'z')])
        counts = [{(3,): 2, (4,): 1, (5,): 1}]
        table = NGramTable(1, vocab, counts)
        self.assertEqual(table.count_of_counts(1), {1: 2, 2: 1})
        self.assertEqual(sum(r * n for r, n in table.count_of_counts(1).items()), 4)

    def test_single_count(self):
        vocab, _ = build_vocabulary([(u'x',)])
        table = NGramTable(1, vocab, [{(3,): 5}])
        self.assertEqual(table.count_of_counts(1), {5: 1})

    def test_context_statistics(self):
        table, vocab = _table([(u'a', u'b'), (u'a', u'c'), (u'a', u'b')], 2)
        a = vocab.ids([u'a'])
        self.assertEqual(table.context_total(a), 3)
        self.assertEqual(table.successor_types(a), 2)

    def test_continuation_counts(self):
        table, vocab = _table([(u'a', u'c'), (u'b', u'c'), (u'a', u'c')], 2)
        self.assertEqual(table.continuation_count(vocab.ids([u'c'])), 2)
        self.assertEqual(table.continuation_count(vocab.ids([u'a'])), 1)

    def test_bad_order(self):
        vocab, _ = build_vocabulary([(u'a',)])
        self.assertRaises(StemLMUsageError, count_ngrams, [(u'a',)], 0, vocab)
        table = count_ngrams([(u'a',)], 2, vocab)
        self.assertRaises(StemLMUsageError, table.ngrams, 3)

    def test_oov_counts_as_unknown(self):
        vocab, _ = build_vocabulary([(u'a',)])
        table = count_ngrams([(u'a', u'zz')], 1, vocab)
        self.assertEqual(table.count((const.UNKNOWN_ID,)), 1)

    def test_sharded_counts_match_whole(self):
        corpus = [(u'a', u'b', u'c'), (u'b', u'c'), (u'c', u'a', u'b'), (u'a',)]
        vocab, _ = build_vocabulary(corpus)
        whole = count_ngrams(corpus, 3, vocab)
        sharded = count_ngrams_sharded([corpus[:1], corpus[1:3], corpus[3:]], 3, vocab)
        self.assertEqual(whole, sharded)
        for k in (1, 2, 3):
            self.assertEqual(whole.count_of_counts(k), sharded.count_of_counts(k))
        self.assertEqual(whole.continuation_counts(1), sharded.continuation_counts(1))

    def test_merge_checks_vocabulary_and_order(self):
        corpus = [(u'a', u'b')]
        vocab, _ = build_vocabulary(corpus)
        other, _ = build_vocabulary([(u'x',)])
        two = count_ngrams(corpus, 2, vocab)
        self.assertRaises(StemLMUsageError, two.merge, count_ngrams(corpus, 3, vocab))
        self.assertRaises(StemLMUsageError, two.merge, count_ngrams([(u'x',)], 2, other))
        self.assertRaises(StemLMUsageError, merge_tables, [])
        self.assertEqual(merge_tables([two, two]).count(vocab.ids([u'a', u'b'])), 2)

    def test_dump(self):
        table, _ = _table([(u'a',)], 2)
        sink = io.StringIO()
        table.dump(sink)
        lines = sink.getvalue().splitlines()
        self.assertEqual(lines[:3], [u'<s>\t1', u'</s>\t1', u'a\t1'])
        self.assertIn(u'<s> a\t1', lines)
        self.assertIn(u'a </s>\t1', lines)
        self.assertEqual(len(lines), 5)


if __name__ == '__main__':
    unittest.main()
