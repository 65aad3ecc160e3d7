# -*- coding: utf-8 -*-
import io
import logging
import os
from collections import deque

import networkx as nx

from . import const
from .corpus import Vocabulary, normalize, read_lines
from .exception import StemLMDataError, StemLMUsageError
from .stem_rules import apply_splitter

_logger = logging.getLogger(__name__)

PREFIX = 'p'
SUFFIX = 's'


class StemThresholds(object):
    """
    :param t_stem: fewest distinct suffixes a surviving prefix must have
    :param t_suffix: fewest distinct prefixes a surviving suffix must have
    """

    def __init__(self, t_stem=1, t_suffix=1):
        if int(t_stem) < 1 or int(t_suffix) < 1:
            raise StemLMUsageError('thresholds must be >= 1 (got {}, {})'.format(t_stem, t_suffix))
        self.t_stem = int(t_stem)
        self.t_suffix = int(t_suffix)

    def of(self, node):
        return self.t_stem if node[0] == PREFIX else self.t_suffix

    def __str__(self):
        return '<StemThresholds>: [stem:{}, suffix:{}]'.format(self.t_stem, self.t_suffix)

    def __repr__(self):
        return self.__str__()


class SegmentationGraph(object):
    """
    bipartite prefix/suffix graph; an edge (p, s) means p + s is a vocabulary word

    nodes of the underlying networkx graph are ("p", prefix) and ("s", suffix).
    """

    def __init__(self, graph=None):
        self.graph = nx.Graph() if graph is None else graph

    def add_edge(self, prefix, suffix):
        if not prefix or not suffix:
            raise StemLMDataError(u'empty split part in {!r} + {!r}'.format(prefix, suffix))
        self.graph.add_node((PREFIX, prefix), bipartite=0)
        self.graph.add_node((SUFFIX, suffix), bipartite=1)
        self.graph.add_edge((PREFIX, prefix), (SUFFIX, suffix))

    @property
    def prefixes(self):
        return set(name for side, name in self.graph if side == PREFIX)

    @property
    def suffixes(self):
        return set(name for side, name in self.graph if side == SUFFIX)

    @property
    def edges(self):
        edges = set()
        for u, v in self.graph.edges():
            if u[0] == SUFFIX:
                u, v = v, u
            edges.add((u[1], v[1]))
        return edges

    def has_prefix(self, prefix):
        return (PREFIX, prefix) in self.graph

    def has_suffix(self, suffix):
        return (SUFFIX, suffix) in self.graph

    def has_edge(self, prefix, suffix):
        return self.graph.has_edge((PREFIX, prefix), (SUFFIX, suffix))

    def prefix_degree(self, prefix):
        node = (PREFIX, prefix)
        return self.graph.degree(node) if node in self.graph else 0

    def suffix_degree(self, suffix):
        node = (SUFFIX, suffix)
        return self.graph.degree(node) if node in self.graph else 0

    def prefix_degrees(self):
        return dict((name, degree) for (side, name), degree in self.graph.degree() if side == PREFIX)

    def suffix_degrees(self):
        return dict((name, degree) for (side, name), degree in self.graph.degree() if side == SUFFIX)

    def copy(self):
        return SegmentationGraph(self.graph.copy())

    def merge(self, other):
        return SegmentationGraph(nx.compose(self.graph, other.graph))

    __add__ = merge

    def __eq__(self, other):
        return isinstance(other, SegmentationGraph) and self.prefixes == other.prefixes \
            and self.suffixes == other.suffixes and self.edges == other.edges

    def __ne__(self, other):
        return not self == other

    def __str__(self):
        return '<SegmentationGraph>: [prefixes:{}, suffixes:{}, edges:{}]'.format(
            len(self.prefixes), len(self.suffixes), self.graph.number_of_edges())

    def __repr__(self):
        return self.__str__()


def build_segmentation_graph(vocab):
    """
    split every word at every internal code point position

    :param vocab: iterable of words or a Vocabulary (reserved symbols skipped)
    :return: SegmentationGraph
    """
    words = vocab.words() if isinstance(vocab, Vocabulary) else vocab
    graph = SegmentationGraph()
    for word in sorted(set(words)):
        for i in range(1, len(word)):
            graph.add_edge(word[:i], word[i:])
    _logger.info('built %s', graph)
    return graph


def prune_graph(graph, thresholds, rng=None):
    """
    delete prefixes of degree < t_stem and suffixes of degree < t_suffix
    until none is left

    the result is the largest subgraph where every vertex meets its
    threshold; the deletion order (shuffled when rng is given) does not
    change it.

    :param graph: SegmentationGraph, left untouched
    :param thresholds: StemThresholds
    :param rng: optional random.Random
    :return: pruned SegmentationGraph
    """
    pruned = graph.graph.copy()
    queue = [node for node in sorted(pruned.nodes) if pruned.degree(node) < thresholds.of(node)]
    if rng is not None:
        rng.shuffle(queue)
    queue = deque(queue)
    in_queue = set(queue)
    removed = 0
    while queue:
        node = queue.popleft()
        in_queue.discard(node)
        if node not in pruned:
            continue
        neighbors = sorted(pruned.neighbors(node))
        if rng is not None:
            rng.shuffle(neighbors)
        pruned.remove_node(node)
        removed += 1
        for neighbor in neighbors:
            if neighbor in pruned and neighbor not in in_queue \
                    and pruned.degree(neighbor) < thresholds.of(neighbor):
                queue.append(neighbor)
                in_queue.add(neighbor)
    result = SegmentationGraph(pruned)
    _logger.info('pruned %i vertices with %s: %s', removed, thresholds, result)
    return result


def segment_word(word, graph, marker=const.MARKER, open_vocabulary=False):
    """
    split word at the longest prefix the pruned graph accepts

    :param open_vocabulary: accept any surviving prefix + surviving suffix,
        not only surviving edges
    :return: (prefix, marker + suffix) or (word,)
    """
    for i in range(len(word) - 1, 0, -1):
        prefix, suffix = word[:i], word[i:]
        if open_vocabulary:
            if graph.has_prefix(prefix) and graph.has_suffix(suffix):
                return prefix, marker + suffix
        elif graph.has_edge(prefix, suffix):
            return prefix, marker + suffix
    return (word,)


def segment_corpus(corpus, graph, marker=const.MARKER, open_vocabulary=False):
    """
    apply segment_word to every token

    :return: (list of token tuples, SplitReport)
    """
    return apply_splitter(corpus, lambda word: segment_word(word, graph, marker, open_vocabulary), marker)


def _write_lines(path, lines):
    with io.open(path, 'w', encoding='utf-8', newline='\n') as f:
        for line in lines:
            f.write(line + u'\n')


def _read_lines(path):
    for line_number, line in read_lines(path):
        line = line.rstrip(u'\r\n')
        if line:
            yield line_number, normalize(line)


def export_graph(graph, directory):
    """
    write stems.txt, suffixes.txt (one entry per line) and edges.txt (prefix TAB suffix)
    """
    if not os.path.isdir(directory):
        os.makedirs(directory)
    _logger.info("Saving stems and suffixes to '%s'...", directory)
    _write_lines(os.path.join(directory, const.STEMS_FILE), sorted(graph.prefixes))
    _write_lines(os.path.join(directory, const.SUFFIXES_FILE), sorted(graph.suffixes))
    _write_lines(os.path.join(directory, const.EDGES_FILE),
                 (u'{}\t{}'.format(p, s) for p, s in sorted(graph.edges)))
    _logger.info("Done.")


def load_graph(directory):
    """
    read back what export_graph wrote
    """
    _logger.info("Loading stems and suffixes from '%s'...", directory)
    graph = SegmentationGraph()
    for line_number, line in _read_lines(os.path.join(directory, const.EDGES_FILE)):
        fields = line.split(u'\t')
        if len(fields) != 2:
            raise StemLMDataError(u'malformed edge {!r}'.format(line), line_number)
        graph.add_edge(fields[0], fields[1])
    for _, line in _read_lines(os.path.join(directory, const.STEMS_FILE)):
        graph.graph.add_node((PREFIX, line), bipartite=0)
    for _, line in _read_lines(os.path.join(directory, const.SUFFIXES_FILE)):
        graph.graph.add_node((SUFFIX, line), bipartite=1)
    _logger.info("Done. %s", graph)
    return graph
