"""Spin mapping class group computations on the homology of a closed surface."""

from .symplectic import (arf, enumerate_forms, intersection_int, intersection_mod2,
                         quad_eval, square_transvection, transvection_int, transvection_mod2)
from .words import (C, B, CurveClassTable, Letter, WordSyntaxError, default_curve_classes,
                    eval_int, eval_mod2, expand_named, format_word, generators, parse_word,
                    spin_check)
from .transvections import (factor_orthogonal, factor_square_transvection, lambda_reduce,
                            orbit_witness, reduce_blocks, reduce_to_delta)
from .rewriter import RewriteCert, check_rewrite, rewrite_square_conjugate
from .schreier import build_table, coset_representative, orbit_graph, verify_table1

__version__ = "0.1.0"
