# -*- coding: utf-8 -*-
import argparse
import csv
import io
import json
import logging
import os
import random
import sys

from . import const
from .arpa import read_arpa_file, write_arpa, write_arpa_file
from .corpus import build_vocabulary, read_corpus, write_corpus
from .counts import count_ngrams
from .evaluation import evaluate_perplexity, score_wer_corpus
from .exception import StemLMDataError, StemLMUsageError
from .postproc import RejoinConfig, rejoin_corpus
from .smoothing import SmoothingMethod, estimate
from .stem_rules import apply_splitter, load_rules, split_corpus_supervised
from .stem_unsup import (StemThresholds, build_segmentation_graph, export_graph, load_graph,
                         prune_graph, segment_corpus, segment_word)

_logger = logging.getLogger(__name__)

WER_NOTE = 'wer needs a recognizer, not computed'


class ExperimentConfig(object):
    """
    everything one experiment run needs

    :param train: training corpus file
    :param test: test corpus file
    :param mode: stemming mode, one of none, supervised, unsupervised, combined
    :param rules: rule file for the supervised splitter, the bundled rules when None
    :param output_dir: where models and reports are saved, nothing saved when None
    :param inject_words: file of words added to training as one-word sentences
    """

    def __init__(self, train=None, test=None, method=const.WITTEN_BELL, order=const.DEFAULT_ORDER,
                 mode=const.MODE_NONE, t_stem=1, t_suffix=1, rules=None, marker=const.MARKER,
                 min_stem_length=const.MIN_STEM_LENGTH, cutoff=const.GT_CUTOFF, discount=None,
                 output_dir=None, inject_words=None, seed=None):
        self.train = train
        self.test = test
        self.method = method
        self.order = order
        self.mode = mode
        self.t_stem = t_stem
        self.t_suffix = t_suffix
        self.rules = rules
        self.marker = marker
        self.min_stem_length = min_stem_length
        self.cutoff = cutoff
        self.discount = discount
        self.output_dir = output_dir
        self.inject_words = inject_words
        self.seed = seed

    @staticmethod
    def json_unpack(json):
        if not isinstance(json, dict):
            raise StemLMDataError('config must be a JSON object (got {})'.format(type(json).__name__))
        unknown = set(json) - set(ExperimentConfig().json_pack())
        if unknown:
            raise StemLMUsageError('unknown config fields: {}'.format(', '.join(sorted(unknown))))
        return ExperimentConfig(**json)

    def json_pack(self):
        return dict(self.__dict__)

    def update(self, **kwargs):
        """
        override fields with every value that is not None
        """
        for key, value in kwargs.items():
            if value is not None and hasattr(self, key):
                setattr(self, key, value)
        return self

    def smoothing(self):
        return SmoothingMethod(self.method, self.cutoff, self.discount)

    def thresholds(self):
        return StemThresholds(self.t_stem, self.t_suffix)

    def _coerce(self, name, kind, required=True):
        value = getattr(self, name)
        if value is None and not required:
            return
        try:
            setattr(self, name, kind(value))
        except (TypeError, ValueError):
            raise StemLMUsageError('{} must be a number (got {!r})'.format(name, value))

    def validate(self):
        for name in ('order', 't_stem', 't_suffix', 'min_stem_length', 'cutoff'):
            self._coerce(name, int)
        self._coerce('seed', int, required=False)
        self._coerce('discount', float, required=False)
        for name in ('train', 'test', 'rules', 'inject_words', 'method', 'mode', 'marker', 'output_dir'):
            value = getattr(self, name)
            if value is not None and not isinstance(value, str):
                raise StemLMUsageError('{} must be a string (got {!r})'.format(name, value))
        for name in ('train', 'test'):
            path = getattr(self, name)
            if not path:
                raise StemLMUsageError('no {} corpus given'.format(name))
        for path in (self.train, self.test, self.rules, self.inject_words):
            if path and not os.path.isfile(path):
                raise StemLMUsageError('no such file: {}'.format(path))
            if path and not os.access(path, os.R_OK):
                raise StemLMUsageError('not readable: {}'.format(path))
        if self.mode not in const.MODES:
            raise StemLMUsageError('unknown stemming mode {!r} (expected one of {})'.format(
                self.mode, ', '.join(const.MODES)))
        if self.order < 1:
            raise StemLMUsageError('order must be >= 1 (got {})'.format(self.order))
        if self.marker is None or len(self.marker) != 1:
            raise StemLMUsageError('marker must be a single character (got {!r})'.format(self.marker))
        self.smoothing()
        self.thresholds()
        return self

    def __str__(self):
        return '<ExperimentConfig>: [mode:{}, method:{}, order:{}]'.format(self.mode, self.method, self.order)

    def __repr__(self):
        return self.__str__()


def _read_words(path):
    return [(word,) for tokens in read_corpus(path) for word in tokens]


def _load_config(args):
    config = ExperimentConfig()
    if getattr(args, 'config', None):
        with io.open(args.config, 'r', encoding='utf-8') as f:
            try:
                config = ExperimentConfig.json_unpack(json.load(f))
            except ValueError as e:
                raise StemLMDataError('bad config file {}: {}'.format(args.config, e))
    return config.update(
        train=getattr(args, 'train', None), test=getattr(args, 'test', None),
        method=getattr(args, 'method', None), order=getattr(args, 'order', None),
        mode=getattr(args, 'mode', None), t_stem=getattr(args, 't_stem', None),
        t_suffix=getattr(args, 't_suffix', None), rules=getattr(args, 'rules', None),
        marker=getattr(args, 'marker', None), min_stem_length=getattr(args, 'min_stem_length', None),
        cutoff=getattr(args, 'cutoff', None), discount=getattr(args, 'discount', None),
        output_dir=getattr(args, 'output_dir', None), inject_words=getattr(args, 'inject_words', None),
        seed=getattr(args, 'seed', None))


def prepare_corpora(config, mode, train, test):
    """
    apply a stemming mode to training and test text

    the unsupervised splitter is learnt on the training vocabulary only and
    splits test words through any surviving stem and suffix. in combined
    mode the training text is the unsplit text followed by its split copy,
    and only test words unknown to the unsplit training text are split.

    :return: (train sentences, test sentences)
    """
    if mode == const.MODE_NONE:
        return list(train), list(test)
    if mode == const.MODE_SUPERVISED:
        rules = load_rules(config.rules, config.min_stem_length, config.marker)
        return split_corpus_supervised(train, rules)[0], split_corpus_supervised(test, rules)[0]
    if mode not in (const.MODE_UNSUPERVISED, const.MODE_COMBINED):
        raise StemLMUsageError('unknown stemming mode {!r}'.format(mode))
    vocab, _ = build_vocabulary(train)
    rng = random.Random(config.seed) if config.seed is not None else None
    graph = prune_graph(build_segmentation_graph(vocab), config.thresholds(), rng)
    train_split, _ = segment_corpus(train, graph, config.marker)
    if mode == const.MODE_UNSUPERVISED:
        return train_split, segment_corpus(test, graph, config.marker, open_vocabulary=True)[0]

    def split_unknown(word):
        if word in vocab:
            return (word,)
        return segment_word(word, graph, config.marker, open_vocabulary=True)

    test_split, _ = apply_splitter(test, split_unknown, config.marker)
    return list(train) + train_split, test_split


def train_and_evaluate(config, train, test):
    """
    :return: (BackoffModel, CorpusStats of the training text, PerplexityReport)
    """
    vocab, stats = build_vocabulary(train)
    table = count_ngrams(train, int(config.order), vocab)
    model = estimate(table, config.smoothing())
    return model, stats, evaluate_perplexity(model, test, vocab)


def _report_row(report, order):
    row = {
        'perplexity': '{:.4f}'.format(report.perplexity),
        'word_count': report.word_count,
        'oov_count': report.oov_count,
        'oov_rate': '{:.2f}'.format(report.oov_rate),
    }
    for k in range(order, 0, -1):
        row['hits_{}'.format(k)] = report.hit_counts.get(k, 0)
        row['hit_rate_{}'.format(k)] = '{:.2f}'.format(report.hit_rate(k))
    return row


def _hit_columns(order):
    columns = []
    for k in range(order, 0, -1):
        columns += ['hits_{}'.format(k), 'hit_rate_{}'.format(k)]
    return columns


def run_experiment(config):
    """
    train and evaluate one model per stemming mode

    :return: (column names, list of row dicts)
    """
    config.validate()
    train = list(read_corpus(config.train))
    test = list(read_corpus(config.test))
    if config.inject_words:
        train += _read_words(config.inject_words)
    order = int(config.order)
    rows = []
    for mode in const.MODES:
        _logger.info('Running %s variant...', mode)
        mode_train, mode_test = prepare_corpora(config, mode, train, test)
        model, stats, report = train_and_evaluate(config, mode_train, mode_test)
        if config.output_dir:
            if not os.path.isdir(config.output_dir):
                os.makedirs(config.output_dir)
            write_arpa_file(model, os.path.join(config.output_dir, '{}.arpa'.format(mode)))
        row = {'variant': mode, 'vocabulary_size': stats.unique_word_count, 'wer': '', 'note': WER_NOTE}
        row.update(_report_row(report, order))
        rows.append(row)
    columns = ['variant', 'vocabulary_size', 'word_count', 'perplexity', 'oov_count', 'oov_rate'] \
        + _hit_columns(order) + ['wer', 'note']
    return columns, rows


def run_inclusion_sweep(config, fractions):
    """
    train on the training text plus the first f% of the test sentences and
    evaluate on the whole test text, once per fraction

    :param fractions: percentages in [0, 100]
    :return: (column names, list of row dicts)
    """
    fractions = [float(f) for f in fractions]
    for f in fractions:
        if not 0.0 <= f <= 100.0:
            raise StemLMUsageError('inclusion fraction must be in [0, 100] (got {})'.format(f))
    config.validate()
    train = list(read_corpus(config.train))
    test = list(read_corpus(config.test))
    if config.inject_words:
        train += _read_words(config.inject_words)
    order = int(config.order)
    rows = []
    for f in fractions:
        included = test[:int(len(test) * f / 100.0)]
        _logger.info('Including %i of %i test sentences...', len(included), len(test))
        mode_train, mode_test = prepare_corpora(config, config.mode, train + included, test)
        _, _, report = train_and_evaluate(config, mode_train, mode_test)
        row = {'fraction': '{:g}'.format(f)}
        row.update(_report_row(report, order))
        rows.append(row)
    columns = ['fraction', 'perplexity', 'oov_count', 'oov_rate'] + _hit_columns(order)
    return columns, rows


def _write_csv(columns, rows, sink):
    writer = csv.DictWriter(sink, fieldnames=columns, extrasaction='ignore', lineterminator='\n')
    writer.writeheader()
    for row in rows:
        writer.writerow(row)


def _emit_json(obj, stdout):
    stdout.write(json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False))
    stdout.write(u'\n')


def _emit_corpus(sentences, output, stdout):
    write_corpus(sentences, output if output else stdout)


def cmd_vocab(args, stdout):
    vocab, stats = build_vocabulary(read_corpus(args.corpus))
    if args.output:
        write_corpus(((word,) for word in vocab.words()), args.output)
    _emit_json(stats.json_pack(), stdout)


def cmd_count(args, stdout):
    corpus = list(read_corpus(args.corpus))
    vocab, _ = build_vocabulary(corpus)
    table = count_ngrams(corpus, args.order, vocab)
    if args.output:
        with io.open(args.output, 'w', encoding='utf-8', newline='\n') as f:
            table.dump(f)
    else:
        table.dump(stdout)


def cmd_train(args, stdout):
    method = SmoothingMethod(args.method, args.cutoff, args.discount)
    corpus = list(read_corpus(args.corpus))
    if args.inject_words:
        corpus += _read_words(args.inject_words)
    vocab, _ = build_vocabulary(corpus)
    model = estimate(count_ngrams(corpus, args.order, vocab), method)
    if args.output:
        write_arpa_file(model, args.output)
    else:
        write_arpa(model, stdout)


def cmd_ppl(args, stdout):
    model = read_arpa_file(args.model)
    _emit_json(evaluate_perplexity(model, read_corpus(args.corpus)).json_pack(), stdout)


def cmd_stem_rules(args, stdout):
    rules = load_rules(args.rules, args.min_stem_length, args.marker)
    sentences, report = split_corpus_supervised(read_corpus(args.corpus), rules)
    _emit_corpus(sentences, args.output, stdout)
    if args.output:
        _emit_json(report.json_pack(), stdout)


def cmd_stem_learn(args, stdout):
    vocab, _ = build_vocabulary(read_corpus(args.corpus))
    rng = random.Random(args.seed) if args.seed is not None else None
    graph = prune_graph(build_segmentation_graph(vocab), StemThresholds(args.t_stem, args.t_suffix), rng)
    export_graph(graph, args.output)
    _emit_json({
        "stem_count": len(graph.prefixes),
        "suffix_count": len(graph.suffixes),
        "edge_count": len(graph.edges)
    }, stdout)


def cmd_stem_apply(args, stdout):
    if len(args.marker) != 1:
        raise StemLMUsageError('marker must be a single character (got {!r})'.format(args.marker))
    graph = load_graph(args.graph)
    sentences, report = segment_corpus(read_corpus(args.corpus), graph, args.marker, args.open_vocabulary)
    _emit_corpus(sentences, args.output, stdout)
    if args.output:
        _emit_json(report.json_pack(), stdout)


def cmd_rejoin(args, stdout):
    sentences, report = rejoin_corpus(read_corpus(args.corpus), RejoinConfig(args.marker))
    _emit_corpus(sentences, args.output, stdout)
    if args.output:
        _emit_json(report.json_pack(), stdout)


def cmd_wer(args, stdout):
    report = score_wer_corpus(read_corpus(args.reference), read_corpus(args.hypothesis))
    _emit_json(report.json_pack(), stdout)


def _emit_table(columns, rows, output, stdout):
    if output:
        with io.open(output, 'w', encoding='utf-8', newline='') as f:
            _write_csv(columns, rows, f)
    else:
        _write_csv(columns, rows, stdout)


def cmd_experiment(args, stdout):
    config = _load_config(args)
    columns, rows = run_experiment(config)
    output = args.output
    if not output and config.output_dir:
        output = os.path.join(config.output_dir, 'experiment.csv')
    _emit_table(columns, rows, output, stdout)


def cmd_sweep(args, stdout):
    config = _load_config(args)
    try:
        fractions = [float(f) for f in args.fractions.split(',') if f.strip()]
    except ValueError:
        raise StemLMUsageError('bad fraction list {!r}'.format(args.fractions))
    columns, rows = run_inclusion_sweep(config, fractions)
    _emit_table(columns, rows, args.output, stdout)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise StemLMUsageError(message)


def _add_marker(parser):
    parser.add_argument('--marker', default=const.MARKER,
                        help='suffix marker [{}]'.format(const.MARKER))


def _add_experiment_arguments(parser):
    parser.add_argument('--config', help='JSON experiment config; flags override it')
    parser.add_argument('--train', help='training corpus')
    parser.add_argument('--test', help='test corpus')
    parser.add_argument('--method', help='smoothing method [{}]'.format(const.WITTEN_BELL))
    parser.add_argument('--order', type=int, help='n-gram order [{}]'.format(const.DEFAULT_ORDER))
    parser.add_argument('--cutoff', type=int, help='Good-Turing cutoff [{}]'.format(const.GT_CUTOFF))
    parser.add_argument('--discount', type=float, help='fixed discount (default: estimated)')
    parser.add_argument('--t-stem', type=int, help='stem degree threshold [1]')
    parser.add_argument('--t-suffix', type=int, help='suffix degree threshold [1]')
    parser.add_argument('--rules', help='suffix rule file (default: bundled Telugu rules)')
    parser.add_argument('--min-stem-length', type=int,
                        help='shortest stem a rule may leave [{}]'.format(const.MIN_STEM_LENGTH))
    parser.add_argument('--marker', help='suffix marker [{}]'.format(const.MARKER))
    parser.add_argument('--seed', type=int, help='shuffle the prune queue with this seed')
    parser.add_argument('--inject-words', help='words added to training as one-word sentences')
    parser.add_argument('--output-dir', help='save models and reports here')
    parser.add_argument('-o', '--output', help='CSV file (default: stdout)')


def build_parser():
    parser = _ArgumentParser(prog='stemlm', description='n-gram language models over stemmed text')
    parser.add_argument('-v', '--verbose', action='store_true', help='Print debug information')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    p = commands.add_parser('vocab', help='corpus statistics as JSON')
    p.add_argument('corpus')
    p.add_argument('-o', '--output', help='also write the vocabulary, one word per line')
    p.set_defaults(func=cmd_vocab)

    p = commands.add_parser('count', help='dump n-gram counts')
    p.add_argument('corpus')
    p.add_argument('--order', type=int, default=const.DEFAULT_ORDER,
                   help='n-gram order [{}]'.format(const.DEFAULT_ORDER))
    p.add_argument('-o', '--output')
    p.set_defaults(func=cmd_count)

    p = commands.add_parser('train', help='estimate an ARPA model')
    p.add_argument('corpus')
    p.add_argument('--order', type=int, default=const.DEFAULT_ORDER,
                   help='n-gram order [{}]'.format(const.DEFAULT_ORDER))
    p.add_argument('--method', default=const.WITTEN_BELL,
                   help='{} [{}]'.format(', '.join(const.METHODS), const.WITTEN_BELL))
    p.add_argument('--cutoff', type=int, default=const.GT_CUTOFF,
                   help='Good-Turing cutoff [{}]'.format(const.GT_CUTOFF))
    p.add_argument('--discount', type=float, help='fixed discount (default: estimated)')
    p.add_argument('--inject-words', help='words added to training as one-word sentences')
    p.add_argument('-o', '--output', help='ARPA file (default: stdout)')
    p.set_defaults(func=cmd_train)

    p = commands.add_parser('ppl', help='perplexity report as JSON')
    p.add_argument('--model', required=True, help='ARPA file')
    p.add_argument('corpus')
    p.set_defaults(func=cmd_ppl)

    p = commands.add_parser('stem-rules', help='split words with suffix rules')
    p.add_argument('corpus')
    p.add_argument('--rules', help='suffix rule file (default: bundled Telugu rules)')
    p.add_argument('--min-stem-length', type=int, default=const.MIN_STEM_LENGTH,
                   help='shortest stem a rule may leave [{}]'.format(const.MIN_STEM_LENGTH))
    _add_marker(p)
    p.add_argument('-o', '--output', help='split corpus (default: stdout)')
    p.set_defaults(func=cmd_stem_rules)

    p = commands.add_parser('stem-learn', help='learn stems and suffixes from a corpus')
    p.add_argument('corpus')
    p.add_argument('--t-stem', type=int, default=1, help='stem degree threshold [1]')
    p.add_argument('--t-suffix', type=int, default=1, help='suffix degree threshold [1]')
    p.add_argument('--seed', type=int, help='shuffle the prune queue with this seed')
    p.add_argument('-o', '--output', required=True, help='directory for stems, suffixes and edges')
    p.set_defaults(func=cmd_stem_learn)

    p = commands.add_parser('stem-apply', help='split words with learnt stems and suffixes')
    p.add_argument('corpus')
    p.add_argument('--graph', required=True, help='directory written by stem-learn')
    p.add_argument('--open-vocabulary', action='store_true',
                   help='split at any surviving stem and suffix, not only learnt words')
    _add_marker(p)
    p.add_argument('-o', '--output', help='split corpus (default: stdout)')
    p.set_defaults(func=cmd_stem_apply)

    p = commands.add_parser('rejoin', help='glue marked suffixes back onto their words')
    p.add_argument('corpus')
    _add_marker(p)
    p.add_argument('-o', '--output', help='rejoined corpus (default: stdout)')
    p.set_defaults(func=cmd_rejoin)

    p = commands.add_parser('wer', help='word error rate report as JSON')
    p.add_argument('reference')
    p.add_argument('hypothesis')
    p.set_defaults(func=cmd_wer)

    p = commands.add_parser('experiment', help='compare the four stemming modes as CSV')
    _add_experiment_arguments(p)
    p.set_defaults(func=cmd_experiment)

    p = commands.add_parser('sweep', help='include growing parts of the test text in training')
    _add_experiment_arguments(p)
    p.add_argument('--mode', help='stemming mode [{}]'.format(const.MODE_NONE))
    p.add_argument('--fractions', default='0,25,50,75,100',
                   help='comma separated percentages [0,25,50,75,100]')
    p.set_defaults(func=cmd_sweep)
    return parser


def run_command(argv, stdout=None, stderr=None):
    """
    run one subcommand

    :return: exit code, 0 ok, 1 usage error, 2 data error
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                            format='%(levelname)s %(name)s: %(message)s', stream=stderr, force=True)
        logging.captureWarnings(True)
        args.func(args, stdout)
    except StemLMUsageError as e:
        parser.print_usage(stderr)
        stderr.write(u'{}: error: {}\n'.format(parser.prog, e))
        return const.EXIT_USAGE
    except (StemLMDataError, OSError) as e:
        stderr.write(u'{}: error: {}\n'.format(parser.prog, e))
        return const.EXIT_DATA
    return const.EXIT_OK


def main():
    try:
        code = run_command(sys.argv[1:])
    except SystemExit as e:
        code = e.code
    sys.exit(code)


if __name__ == '__main__':
    main()
