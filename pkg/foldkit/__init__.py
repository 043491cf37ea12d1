import sys
import warnings

if not sys.warnoptions:  # allow overriding with `-W` option
    warnings.filterwarnings('ignore', category=RuntimeWarning, module='runpy')

from .graph import (Graph, parse_graph6, emit_graph6, parse_edge_list,
                    canonical_key, enumerate_connected, generate, join,
                    add_universal)
from .trace import FoldTrace, simple_fold, fold_candidates, verify_trace
from .coloring import Coloring, chi, psi, is_proper, is_complete, \
    coloring_from_trace
from .folding import sigma, maximal_fold, fold_to_chi, fold_to_k
from .special import (CreationSequence, is_threshold, is_trivially_perfect,
                      psi_threshold, reduce_universal, marcu_min_length)
from .suites import run_suite, VerificationReport

__all__ = ['Graph', 'parse_graph6', 'emit_graph6', 'parse_edge_list',
           'canonical_key', 'enumerate_connected', 'generate', 'join',
           'add_universal', 'FoldTrace', 'simple_fold', 'fold_candidates',
           'verify_trace', 'Coloring', 'chi', 'psi', 'is_proper',
           'is_complete', 'coloring_from_trace', 'sigma', 'maximal_fold',
           'fold_to_chi', 'fold_to_k', 'CreationSequence', 'is_threshold',
           'is_trivially_perfect', 'psi_threshold', 'reduce_universal',
           'marcu_min_length', 'run_suite', 'VerificationReport']
