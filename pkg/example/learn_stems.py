# -*- coding: utf-8 -*-
import os
import sys

CWD = os.path.dirname(os.path.realpath(__file__))
ROOT_DIR = os.path.dirname(CWD)
sys.path.append(ROOT_DIR)

from stemlm.corpus import build_vocabulary, read_corpus
from stemlm.stem_unsup import StemThresholds, build_segmentation_graph, export_graph, prune_graph, segment_corpus

if len(sys.argv) < 3:
    print ('usage: learn_stems.py CORPUS OUTPUT_DIR [T_STEM T_SUFFIX]')
    sys.exit(1)

thresholds = StemThresholds(*[int(t) for t in sys.argv[3:5]]) if len(sys.argv) > 4 else StemThresholds(3, 3)
try:
    corpus = list(read_corpus(sys.argv[1]))
    vocab, _ = build_vocabulary(corpus)
    graph = build_segmentation_graph(vocab)
    print ('Before: {}'.format(graph))
    graph = prune_graph(graph, thresholds)
    print ('After : {}'.format(graph))
    export_graph(graph, sys.argv[2])
    _, report = segment_corpus(corpus, graph)
    print ('Unique words: {} -> {}'.format(report.unique_before, report.unique_after))
except Exception as e:
    print ("Process terminate : {}".format(e))
