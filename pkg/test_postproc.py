#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import random
import unittest

from stemlm.exception import StemLMUsageError
from stemlm.postproc import RejoinConfig, rejoin, rejoin_corpus
from stemlm.stem_rules import load_rules, split_corpus_supervised
from stemlm.stem_unsup import StemThresholds, build_segmentation_graph, prune_graph, segment_corpus

ANDHRA = u'ఆంధ్రప్రదేశ్'
ANDHRA_SHORT = u'అంధ్రప్రదేశ్'
EXAMPLE_WORDS = [ANDHRA + s for s in (u'గా', u'లో', u'పైన')] + \
    [ANDHRA_SHORT + s for s in (u'లోని', u'లలోని', u'తోనూ', u'తో', u'కు', u'ను', u'లోన', u'గాన', u'తోన')] + \
    [u'చదువు' + s for s in (u'చున్నాడు', u'చున్నది', u'కున్నాను', u'తున్నారు', u'ట', u'ము')] + \
    [u'గా', u'తో', u'పైన', u'ను', u'గానే', u'లలోని', u'తాము', u'తాను', u'లో', u'కు', u'లోని', u'లోనే',
     u'తోనే', u'తోనూ', u'తారు', u'తావు']


def random_words(seed, count):
    rng = random.Random(seed)
    alphabet = u'abcdeకగాతోనులు'
    return [u''.join(rng.choice(alphabet) for _ in range(rng.randint(1, 9))) for _ in range(count)]


class RejoinTest(unittest.TestCase):
    def test_verb_ending(self):
        self.assertEqual(rejoin([u'చదువు', u'+చున్నాడు']), (u'చదువుచున్నాడు',))

    def test_no_markers(self):
        self.assertEqual(rejoin([u'a', u'b', u'c']), (u'a', u'b', u'c'))

    def test_leading_marker(self):
        self.assertEqual(rejoin([u'+గా', u'ను']), (u'గా', u'ను'))

    def test_chained_markers(self):
        self.assertEqual(rejoin([u'x', u'+y', u'+z', u'w']), (u'xyz', u'w'))

    def test_other_marker(self):
        config = RejoinConfig(u'@')
        self.assertEqual(rejoin([u'a', u'@b', u'+c'], config), (u'ab', u'+c'))
        self.assertRaises(StemLMUsageError, RejoinConfig, u'##')

    def test_output_has_no_marker(self):
        out = rejoin([u'+', u'+a', u'b', u'+'])
        self.assertEqual(out, (u'a', u'b'))

    def test_corpus_report(self):
        sentences, report = rejoin_corpus([(u'+a', u'b', u'+c'), ()])
        self.assertEqual(sentences, [(u'a', u'bc'), ()])
        self.assertEqual((report.sentence_count, report.joined_count, report.orphan_count), (2, 1, 1))

    def test_supervised_round_trip(self):
        words = EXAMPLE_WORDS + random_words(1, 1000)
        corpus = [tuple(words[i:i + 7]) for i in range(0, len(words), 7)]
        split, _ = split_corpus_supervised(corpus, load_rules())
        self.assertNotEqual(split, corpus)
        self.assertEqual(rejoin_corpus(split)[0], corpus)

    def test_unsupervised_round_trip(self):
        words = EXAMPLE_WORDS + random_words(2, 1000)
        corpus = [tuple(words[i:i + 7]) for i in range(0, len(words), 7)]
        graph = prune_graph(build_segmentation_graph(words), StemThresholds(2, 2))
        split, report = segment_corpus(corpus, graph)
        self.assertGreater(report.split_type_count, 0)
        self.assertEqual(rejoin_corpus(split)[0], corpus)


if __name__ == '__main__':
    unittest.main()
