# -*- coding: utf-8 -*-
from .corpus import Vocabulary, build_vocabulary, read_corpus
from .counts import NGramTable, count_ngrams
from .smoothing import BackoffModel, SmoothingMethod, estimate
from .arpa import read_arpa_file, write_arpa_file
from .evaluation import align_wer, evaluate_perplexity

VERSION = (0, 1, 0)

__all__ = [
    'Vocabulary', 'build_vocabulary', 'read_corpus',
    'NGramTable', 'count_ngrams',
    'BackoffModel', 'SmoothingMethod', 'estimate',
    'read_arpa_file', 'write_arpa_file',
    'align_wer', 'evaluate_perplexity',
]
