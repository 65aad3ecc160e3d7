# -*- coding: utf-8 -*-
import os
import sys

CWD = os.path.dirname(os.path.realpath(__file__))
ROOT_DIR = os.path.dirname(CWD)
sys.path.append(ROOT_DIR)

from stemlm import build_vocabulary, count_ngrams, estimate, evaluate_perplexity, read_corpus, const
from stemlm.arpa import write_arpa_file

if len(sys.argv) < 3:
    print ('usage: train_model.py TRAIN TEST [METHOD]')
    sys.exit(1)

method = sys.argv[3] if len(sys.argv) > 3 else const.WITTEN_BELL
try:
    train = list(read_corpus(sys.argv[1]))
    vocab, stats = build_vocabulary(train)
    print ('--- Training text ---')
    print ('  Sentences  : {}'.format(stats.sentence_count))
    print ('  Tokens     : {}'.format(stats.token_count))
    print ('  Unique     : {}'.format(stats.unique_word_count))
    model = estimate(count_ngrams(train, const.DEFAULT_ORDER, vocab), method)
    write_arpa_file(model, 'model.arpa')
    report = evaluate_perplexity(model, read_corpus(sys.argv[2]), vocab)
    print ('--- Test text ---')
    print ('  Perplexity : {:.2f}'.format(report.perplexity))
    print ('  OOVs       : {} ({:.2f}%)'.format(report.oov_count, report.oov_rate))
    for order in range(model.order, 0, -1):
        count, percent = report.hits_per_order[order]
        print ('  {}-grams hit: {} ({:.2f}%)'.format(order, count, percent))
except Exception as e:
    print ("Process terminate : {}".format(e))
