#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import io
import os
import shutil
import tempfile
import unicodedata
import unittest

from stemlm import const
from stemlm.corpus import (CorpusStats, Vocabulary, build_vocabulary, build_vocabulary_sharded,
                           read_corpus, tokenize_line, write_corpus)
from stemlm.exception import StemLMDataError


class CorpusTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_tokenize_collapses_whitespace(self):
        self.assertEqual(tokenize_line(u'a  b'), (u'a', u'b'))
        self.assertEqual(tokenize_line(u' a\tb \n'), (u'a', u'b'))

    def test_tokenize_empty_line(self):
        self.assertEqual(tokenize_line(u''), ())

    def test_tokenize_composes(self):
        decomposed = u'e\u0301te'
        tokens = tokenize_line(decomposed)
        self.assertEqual(tokens, (unicodedata.normalize('NFC', decomposed),))
        self.assertEqual(len(tokens[0]), 3)

    def test_tokenize_telugu_bytes(self):
        line = u'చదువు చున్నాడు'.encode('utf-8')
        self.assertEqual(tokenize_line(line), (u'చదువు', u'చున్నాడు'))

    def test_tokenize_invalid_utf8(self):
        with self.assertRaises(StemLMDataError) as ctx:
            tokenize_line(b'ok \xff\xfe', 7)
        self.assertEqual(ctx.exception.line_number, 7)
        self.assertIn('line 7', str(ctx.exception))

    def test_read_corpus_keeps_lines_aligned(self):
        path = os.path.join(self.tmp, 'c.txt')
        with io.open(path, 'wb') as f:
            f.write(b'\xef\xbb\xbfa b\n\nc\n')
        self.assertEqual(list(read_corpus(path)), [(u'a', u'b'), (), (u'c',)])

    def test_read_corpus_reports_bad_line(self):
        path = os.path.join(self.tmp, 'c.txt')
        with io.open(path, 'wb') as f:
            f.write(b'a\nb\n\xc3\x28\n')
        with self.assertRaises(StemLMDataError) as ctx:
            list(read_corpus(path))
        self.assertEqual(ctx.exception.line_number, 3)

    def test_write_then_read(self):
        path = os.path.join(self.tmp, 'out.txt')
        sentences = [(u'గా', u'తో'), (), (u'x',)]
        write_corpus(sentences, path)
        self.assertEqual(list(read_corpus(path)), sentences)

    def test_build_vocabulary_counts(self):
        vocab, stats = build_vocabulary([(u'a', u'b'), (u'b', u'c')])
        self.assertEqual(stats.unique_word_count, 3)
        self.assertEqual(stats.token_count, 4)
        self.assertEqual(stats.sentence_count, 2)
        self.assertEqual(len(vocab), 6)

    def test_minimal_vocabulary(self):
        vocab, _ = build_vocabulary([(u'a',)])
        self.assertEqual(len(vocab), 4)
        self.assertEqual(vocab.tokens(), (const.SENTENCE_BEGIN, const.SENTENCE_END, const.UNKNOWN, u'a'))

    def test_reserved_ids(self):
        vocab, _ = build_vocabulary([(u'z', u'a')])
        self.assertEqual(vocab.id_of(const.SENTENCE_BEGIN), const.BEGIN_ID)
        self.assertEqual(vocab.id_of(const.SENTENCE_END), const.END_ID)
        self.assertEqual(vocab.id_of(const.UNKNOWN), const.UNKNOWN_ID)
        self.assertEqual(vocab.id_of(u'never seen'), const.UNKNOWN_ID)
        self.assertEqual(vocab.token_of(vocab.id_of(u'z')), u'z')

    def test_ids_do_not_depend_on_corpus_order(self):
        a, _ = build_vocabulary([(u'q', u'b'), (u'a',)])
        b, _ = build_vocabulary([(u'a',), (u'b', u'q')])
        self.assertEqual(a, b)
        self.assertEqual(a.words(), (u'a', u'b', u'q'))

    def test_empty_corpus(self):
        self.assertRaises(StemLMDataError, build_vocabulary, [])
        self.assertRaises(StemLMDataError, build_vocabulary, [(), ()])

    def test_sharded_vocabulary_matches_whole(self):
        shards = [[(u'a', u'b')], [(u'c', u'a'), ()], [(u'b',)]]
        whole = [s for shard in shards for s in shard]
        self.assertEqual(build_vocabulary_sharded(shards), build_vocabulary(whole))

    def test_vocabulary_merge(self):
        left = Vocabulary([u'b', u'a'])
        right = Vocabulary([u'c', u'a'])
        self.assertEqual(left + right, right.merge(left))
        self.assertEqual((left + right).words(), (u'a', u'b', u'c'))

    def test_stats_json(self):
        stats = CorpusStats(2, 4, 3)
        self.assertEqual(stats.json_pack(), {"sentence_count": 2, "token_count": 4, "unique_word_count": 3})
        self.assertEqual(CorpusStats.json_unpack(stats.json_pack()), stats)


if __name__ == '__main__':
    unittest.main()
