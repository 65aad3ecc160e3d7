#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import math
import random
import unittest
import warnings

from stemlm import const
from stemlm.corpus import build_vocabulary
from stemlm.counts import count_ngrams
from stemlm.exception import DegenerateStatisticsWarning, StemLMUsageError
from stemlm.smoothing import (BackoffModel, SmoothingMethod, absolute_discount, conditional_prob,
                              estimate, good_turing_adjusted_count, katz_discounts,
                              kneser_ney_continuation_probs, linear_discount, sequence_logprob,
                              witten_bell_prob)


def synthetic_corpus(seed, vocab_size, sentence_count, max_length=8):
    rng = random.Random(seed)
    words = [u'w{}'.format(i) for i in range(vocab_size)]
    weights = [1.0 / (i + 1) for i in range(vocab_size)]
    corpus = []
    for _ in range(sentence_count):
        length = rng.randint(1, max_length)
        corpus.append(tuple(rng.choices(words, weights, k=length)))
    return corpus


def train(corpus, method, order=3):
    vocab, _ = build_vocabulary(corpus)
    return estimate(count_ngrams(corpus, order, vocab), method)


def observed_contexts(corpus, order):
    contexts = set([()])
    for tokens in corpus:
        padded = (const.SENTENCE_BEGIN,) + tuple(tokens) + (const.SENTENCE_END,)
        for k in range(1, order):
            for i in range(len(padded) - k):
                contexts.add(padded[i:i + k])
    return sorted(contexts)


class NormalizationTest(unittest.TestCase):
    corpora = [
        synthetic_corpus(1, 8, 60),
        synthetic_corpus(2, 20, 200),
        synthetic_corpus(3, 30, 300, max_length=6),
    ]

    def setUp(self):
        warnings.simplefilter('ignore', DegenerateStatisticsWarning)

    def tearDown(self):
        warnings.resetwarnings()

    def check_method(self, method):
        for corpus in self.corpora:
            model = train(corpus, method)
            for context in observed_contexts(corpus, 3):
                total = model.prob_sum(context)
                self.assertAlmostEqual(total, 1.0, delta=const.NORM_TOLERANCE,
                                       msg='{} context {}: {}'.format(method, context, total))

    def test_good_turing(self):
        self.check_method(const.GOOD_TURING)

    def test_linear(self):
        self.check_method(const.LINEAR)

    def test_absolute(self):
        self.check_method(const.ABSOLUTE)

    def test_witten_bell(self):
        self.check_method(const.WITTEN_BELL)

    def test_kneser_ney(self):
        self.check_method(const.KNESER_NEY)

    def test_tiny_corpus(self):
        for method in const.METHODS:
            model = train([(u'a', u'b'), (u'a',)], method, order=2)
            for context in [(), (u'a',), (const.SENTENCE_BEGIN,), (u'b',)]:
                self.assertAlmostEqual(model.prob_sum(context), 1.0, delta=const.NORM_TOLERANCE)

    def test_same_table_gives_identical_model(self):
        corpus = self.corpora[1]
        vocab, _ = build_vocabulary(corpus)
        table = count_ngrams(corpus, 3, vocab)
        for method in const.METHODS:
            first = estimate(table, method)
            second = estimate(table, method)
            again = estimate(count_ngrams(corpus, 3, vocab), method)
            for k in range(1, 4):
                self.assertEqual(first.entries(k), second.entries(k), msg=method)
                self.assertEqual(first.entries(k), again.entries(k), msg=method)


class FormulaTest(unittest.TestCase):
    def test_good_turing_adjusted_count(self):
        self.assertAlmostEqual(good_turing_adjusted_count(1, {1: 3, 2: 1}), 2.0 / 3.0)
        self.assertRaises(StemLMUsageError, good_turing_adjusted_count, 4, {1: 3, 2: 1})

    def test_absolute_discount(self):
        self.assertAlmostEqual(absolute_discount({1: 3, 2: 1}), 0.6)

    def test_witten_bell_worked_example(self):
        self.assertAlmostEqual(witten_bell_prob(2, 3, 2, 0.3), 0.52)

    def test_witten_bell_bigram_in_model(self):
        # c(a) = 3, T(a) = 2, c(a, b) = 2
        corpus = [(u'a', u'b'), (u'a', u'b'), (u'a', u'c')]
        model = train(corpus, const.WITTEN_BELL, order=2)
        lower, _ = conditional_prob(model, (), u'b')
        prob, hit = conditional_prob(model, (u'a',), u'b')
        self.assertEqual(hit, 2)
        self.assertAlmostEqual(prob, 2.0 / 5.0 + 2.0 / 5.0 * lower)

    def test_linear_discount(self):
        self.assertAlmostEqual(linear_discount({1: 2, 2: 4}), 0.2)

    def test_katz_discounts(self):
        coc = {1: 10, 2: 4, 3: 2, 4: 1}
        discounts = katz_discounts(coc, cutoff=2)
        self.assertEqual(sorted(discounts), [1, 2])
        for d in discounts.values():
            self.assertTrue(0.0 < d <= 1.0)
        common = 3 * 2 / 10.0
        self.assertAlmostEqual(discounts[1], (0.8 - common) / (1.0 - common))

    def test_degenerate_statistics_warn(self):
        with self.assertWarns(DegenerateStatisticsWarning):
            self.assertEqual(absolute_discount({1: 3}), const.FALLBACK_DISCOUNT)
        with self.assertWarns(DegenerateStatisticsWarning):
            self.assertEqual(linear_discount({1: 4}), const.FALLBACK_DISCOUNT)
        with self.assertWarns(DegenerateStatisticsWarning):
            self.assertEqual(katz_discounts({2: 4}), {})

    def test_kneser_ney_continuation_sums_to_one(self):
        corpus = synthetic_corpus(5, 10, 50)
        vocab, _ = build_vocabulary(corpus)
        probs = kneser_ney_continuation_probs(count_ngrams(corpus, 2, vocab))
        self.assertNotIn(const.SENTENCE_BEGIN, probs)
        self.assertAlmostEqual(math.fsum(probs.values()), 1.0)


class SmoothingMethodTest(unittest.TestCase):
    def test_names(self):
        self.assertEqual(SmoothingMethod('Witten_Bell').kind, const.WITTEN_BELL)
        self.assertEqual(SmoothingMethod('kn').kind, const.KNESER_NEY)
        self.assertTrue(SmoothingMethod(const.KNESER_NEY).interpolated)
        self.assertFalse(SmoothingMethod(const.GOOD_TURING).interpolated)

    def test_invalid(self):
        self.assertRaises(StemLMUsageError, SmoothingMethod, 'no-such-method')
        self.assertRaises(StemLMUsageError, SmoothingMethod, const.GOOD_TURING, cutoff=0)
        self.assertRaises(StemLMUsageError, SmoothingMethod, const.ABSOLUTE, discount=1.5)

    def test_estimate_order_checks(self):
        corpus = [(u'a', u'b')]
        vocab, _ = build_vocabulary(corpus)
        table = count_ngrams(corpus, 2, vocab)
        self.assertRaises(StemLMUsageError, estimate, table, const.WITTEN_BELL, 3)
        self.assertRaises(StemLMUsageError, estimate, table, const.WITTEN_BELL, 0)
        self.assertEqual(estimate(table, const.WITTEN_BELL, 1).order, 1)

    def test_sentence_begin_is_never_predicted(self):
        model = train([(u'a', u'b')], const.ABSOLUTE, order=2)
        self.assertEqual(model.logprob((const.SENTENCE_BEGIN,)), const.LOG_FLOOR)
        self.assertNotIn(const.SENTENCE_BEGIN, model.predicted_tokens())
        self.assertIsNotNone(model.logprob((const.UNKNOWN,)))


class ConditionalProbTest(unittest.TestCase):
    def setUp(self):
        probs = [
            {(u'<s>',): -99.0, (u'</s>',): -0.8, (u'u',): -0.6, (u'v',): -0.7, (u'w',): -0.9},
            {(u'v', u'w'): -1.0, (u'u', u'v'): -0.3},
            {(u'u', u'v', u'w'): -0.5},
        ]
        backoffs = [
            {(u'w',): -0.4, (u'v',): -0.1},
            {(u'v', u'v'): -0.2, (u'w', u'w'): -0.3},
        ]
        self.model = BackoffModel(3, probs, backoffs)

    def test_direct_hit(self):
        prob, hit = conditional_prob(self.model, (u'u', u'v'), u'w')
        self.assertAlmostEqual(prob, 10 ** -0.5)
        self.assertEqual(hit, 3)

    def test_one_back_off(self):
        prob, hit = conditional_prob(self.model, (u'v', u'v'), u'w')
        self.assertAlmostEqual(prob, 10 ** -1.2)
        self.assertEqual(hit, 2)

    def test_two_back_offs(self):
        prob, hit = conditional_prob(self.model, (u'w', u'w'), u'u')
        self.assertAlmostEqual(prob, 10 ** (-0.3 - 0.4 - 0.6))
        self.assertEqual(hit, 1)

    def test_long_context_is_truncated(self):
        self.assertEqual(conditional_prob(self.model, (u'w', u'w', u'u', u'v'), u'w'),
                         conditional_prob(self.model, (u'u', u'v'), u'w'))

    def test_sequence_scoring(self):
        score = sequence_logprob(self.model, ())
        self.assertEqual(score.scored_token_count, 1)
        score = sequence_logprob(self.model, (u'u',))
        self.assertEqual((score.scored_token_count, score.oov_count), (2, 0))
        score = sequence_logprob(self.model, (u'u', u'zzz', u'v'))
        self.assertEqual((score.oov_count, score.scored_token_count), (1, 3))
        self.assertEqual(len(score.word_hit_orders), 2)

    def test_sequence_logprob_sums_conditionals(self):
        logprob, hits, oov, scored = sequence_logprob(self.model, (u'u', u'v', u'w'))
        expected = (-0.6 + 0.0) + (-0.3) + (-0.5)
        end = math.log10(conditional_prob(self.model, (u'v', u'w'), u'</s>')[0])
        self.assertAlmostEqual(logprob, expected + end)
        self.assertEqual(hits, [1, 2, 3, 1])
        self.assertEqual((oov, scored), (0, 4))


if __name__ == '__main__':
    unittest.main()
