# -*- coding: utf-8 -*-
import os
import sys

CWD = os.path.dirname(os.path.realpath(__file__))
ROOT_DIR = os.path.dirname(CWD)
sys.path.append(ROOT_DIR)

from stemlm.corpus import read_corpus, write_corpus
from stemlm.stem_rules import load_rules, split_corpus_supervised
from stemlm.postproc import rejoin_corpus

if len(sys.argv) < 3:
    print ('usage: split_corpus.py CORPUS OUTPUT')
    sys.exit(1)

try:
    rules = load_rules()
    print ('Rules: {}'.format(rules))
    corpus = list(read_corpus(sys.argv[1]))
    sentences, report = split_corpus_supervised(corpus, rules)
    write_corpus(sentences, sys.argv[2])
    print ('  Words split: {}'.format(report.split_type_count))
    print ('  Unique     : {} -> {}'.format(report.unique_before, report.unique_after))
    rejoined, _ = rejoin_corpus(sentences)
    print ('  Rejoined ok: {}'.format(rejoined == corpus))
except Exception as e:
    print ("Process terminate : {}".format(e))
