# -*- coding: utf-8 -*-
import os
import sys

CWD = os.path.dirname(os.path.realpath(__file__))
ROOT_DIR = os.path.dirname(CWD)
sys.path.append(ROOT_DIR)

from stemlm.corpus import read_corpus
from stemlm.evaluation import score_wer_corpus

if len(sys.argv) < 3:
    print ('usage: score_wer.py REFERENCE HYPOTHESIS')
    sys.exit(1)

try:
    report = score_wer_corpus(read_corpus(sys.argv[1]), read_corpus(sys.argv[2]))
    print ('  Words         : {}'.format(report.reference_length))
    print ('  Correct       : {}'.format(report.correct))
    print ('  Insertions    : {}'.format(report.insertions))
    print ('  Deletions     : {}'.format(report.deletions))
    print ('  Substitutions : {}'.format(report.substitutions))
    print ('  WER           : {:.2f}%'.format(report.wer_percent))
    print ('  Word accuracy : {:.2f}%'.format(report.word_accuracy_percent))
except Exception as e:
    print ("Process terminate : {}".format(e))
