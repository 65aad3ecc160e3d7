# -*- coding: utf-8 -*-
import io
import logging
import unicodedata
from collections import Counter

from . import const
from .exception import StemLMDataError

_logger = logging.getLogger(__name__)


def normalize(text):
    return unicodedata.normalize(const.NORMALIZATION, text)


def tokenize_line(text, line_number=None):
    """
    split one corpus line into tokens

    tokens are the maximal whitespace-delimited substrings, each in
    canonical composed form. bytes are decoded as UTF-8.

    :param text: the line (str or bytes)
    :param line_number: reported in the error if decoding fails
    :return: tuple of tokens
    """
    if isinstance(text, bytes):
        try:
            text = text.decode('utf-8')
        except UnicodeDecodeError as e:
            raise StemLMDataError('invalid UTF-8 byte sequence ({})'.format(e.reason), line_number)
    return tuple(normalize(token) for token in text.split())


def read_lines(path, error=StemLMDataError):
    """
    decode a UTF-8 text file line by line

    :param path: file name
    :param error: StemLMDataError subclass raised on a bad byte sequence
    :return: generator of (1-based line number, str line with its newline)
    """
    with io.open(path, 'rb') as f:
        for line_number, raw in enumerate(f, 1):
            if line_number == 1 and raw.startswith(b'\xef\xbb\xbf'):
                raw = raw[3:]
            try:
                yield line_number, raw.decode('utf-8')
            except UnicodeDecodeError as e:
                raise error('invalid UTF-8 byte sequence ({})'.format(e.reason), line_number)


def read_corpus(path):
    """
    read a corpus file, one sentence per line

    empty lines come back as empty sentences so files stay aligned line by line.

    :param path: corpus file name
    :return: generator of token tuples
    """
    _logger.info("Reading corpus from '%s'...", path)
    for line_number, line in read_lines(path):
        yield tokenize_line(line, line_number)


def write_corpus(sentences, sink):
    """
    write sentences in the corpus format

    :param sentences: iterable of token sequences
    :param sink: file name or text stream
    """
    if isinstance(sink, str):
        with io.open(sink, 'w', encoding='utf-8', newline='\n') as f:
            return write_corpus(sentences, f)
    for tokens in sentences:
        sink.write(u' '.join(tokens))
        sink.write(u'\n')


class Vocabulary(object):
    """
    token <-> id bijection

    the reserved symbols hold ids 0, 1 and 2; the remaining tokens follow in
    code point order, so the ids never depend on corpus order.
    """

    def __init__(self, tokens=()):
        words = sorted(set(tokens).difference(const.RESERVED))
        self.__id_to_token = tuple(const.RESERVED) + tuple(words)
        self.__token_to_id = dict((token, idx) for idx, token in enumerate(self.__id_to_token))

    def __len__(self):
        return len(self.__id_to_token)

    def __contains__(self, token):
        return token in self.__token_to_id

    def __iter__(self):
        return iter(self.__id_to_token)

    def __eq__(self, other):
        return isinstance(other, Vocabulary) and self.__id_to_token == other.tokens()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.__id_to_token)

    def tokens(self):
        return self.__id_to_token

    def words(self):
        """
        :return: the non-reserved tokens
        """
        return self.__id_to_token[len(const.RESERVED):]

    def id_of(self, token):
        """
        :return: the token id, the unknown-word id for tokens not in the vocabulary
        """
        return self.__token_to_id.get(token, const.UNKNOWN_ID)

    def token_of(self, idx):
        return self.__id_to_token[idx]

    def ids(self, tokens):
        return tuple(self.id_of(token) for token in tokens)

    def merge(self, other):
        return Vocabulary(self.words() + other.words())

    __add__ = merge

    def __str__(self):
        return '<Vocabulary>: [size:{}]'.format(len(self))

    def __repr__(self):
        return '<Vocabulary>: [size:{}]'.format(len(self))


class CorpusStats(object):
    def __init__(self, sentence_count=0, token_count=0, unique_word_count=0):
        self.sentence_count = int(sentence_count)
        self.token_count = int(token_count)
        self.unique_word_count = int(unique_word_count)

    @staticmethod
    def json_unpack(json):
        return CorpusStats(
            sentence_count=json['sentence_count'],
            token_count=json['token_count'],
            unique_word_count=json['unique_word_count']
        )

    def json_pack(self):
        return {
            "sentence_count": self.sentence_count,
            "token_count": self.token_count,
            "unique_word_count": self.unique_word_count
        }

    def __eq__(self, other):
        return self.__dict__ == other.__dict__

    def __ne__(self, other):
        return not self == other

    def __str__(self):
        return '<CorpusStats>: [sentences:{}, tokens:{}, unique:{}]'.format(
            self.sentence_count, self.token_count, self.unique_word_count)

    def __repr__(self):
        return self.__str__()


def _count_words(corpus):
    sentences = 0
    words = Counter()
    for tokens in corpus:
        sentences += 1
        words.update(tokens)
    return sentences, words


def _finish(sentences, words):
    if not words:
        raise StemLMDataError('corpus has no non-empty sentence')
    stats = CorpusStats(sentences, sum(words.values()), len(words))
    _logger.debug('%s', stats)
    return Vocabulary(words), stats


def build_vocabulary(corpus):
    """
    build the vocabulary and corpus statistics of a sentence stream

    :param corpus: iterable of token tuples
    :return: (Vocabulary, CorpusStats)
    """
    sentences, words = _count_words(corpus)
    return _finish(sentences, words)


def build_vocabulary_sharded(shards):
    """
    same as build_vocabulary over the concatenation of the shards

    :param shards: iterable of sentence iterables
    :return: (Vocabulary, CorpusStats)
    """
    sentences = 0
    words = Counter()
    for shard in shards:
        shard_sentences, shard_words = _count_words(shard)
        sentences += shard_sentences
        words.update(shard_words)
    return _finish(sentences, words)
