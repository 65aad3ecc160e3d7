# -*- coding: utf-8 -*-

# reserved symbols, ARPA spelling
SENTENCE_BEGIN  = '<s>'
SENTENCE_END    = '</s>'
UNKNOWN         = '<unk>'
RESERVED        = (SENTENCE_BEGIN, SENTENCE_END, UNKNOWN)
BEGIN_ID        = 0
END_ID          = 1
UNKNOWN_ID      = 2

NORMALIZATION   = 'NFC'

MARKER          = '+'   # prepended to split-off suffix tokens
MIN_STEM_LENGTH = 3     # code points
U_VOWEL_SIGN    = u'\u0c41' # Telugu vowel sign U

DEFAULT_ORDER   = 3
GT_CUTOFF       = 7     # Katz: counts above this are not discounted
FALLBACK_DISCOUNT = 0.5
PROB_FLOOR      = 1e-10 # unseen unigram floor before renormalization
LOG_FLOOR       = -99.0
ARPA_PRECISION  = 7     # significant digits
NORM_TOLERANCE  = 1e-6

# smoothing methods
GOOD_TURING     = 'good-turing'
LINEAR          = 'linear'
ABSOLUTE        = 'absolute'
WITTEN_BELL     = 'witten-bell'
KNESER_NEY      = 'kneser-ney'
METHODS         = (GOOD_TURING, LINEAR, ABSOLUTE, WITTEN_BELL, KNESER_NEY)
BACKOFF_METHODS = (GOOD_TURING, LINEAR, ABSOLUTE)
INTERPOLATED_METHODS = (WITTEN_BELL, KNESER_NEY)

# stemming modes
MODE_NONE       = 'none'
MODE_SUPERVISED = 'supervised'
MODE_UNSUPERVISED = 'unsupervised'
MODE_COMBINED   = 'combined'
MODES           = (MODE_NONE, MODE_SUPERVISED, MODE_UNSUPERVISED, MODE_COMBINED)

# WER alignment ops, in tie order
OP_MATCH        = 'M'
OP_SUBSTITUTION = 'S'
OP_DELETION     = 'D'
OP_INSERTION    = 'I'

# CLI
EXIT_OK         = 0
EXIT_USAGE      = 1
EXIT_DATA       = 2
DATA_DIR_ENV    = 'STEMLM_DATA_DIR'
DEFAULT_RULES   = 'telugu_rules.tsv'
STEMS_FILE      = 'stems.txt'
SUFFIXES_FILE   = 'suffixes.txt'
EDGES_FILE      = 'edges.txt'
