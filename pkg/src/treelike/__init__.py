"""Tree-like tableaux: generation, bijections, corner statistics and the
exclusion-process projection."""
from .tableau import Tableau, TableauError, RuleViolation, validate, corners, transpose, is_symmetric
from .insertion import decode, encode, generate_all, insert_point, insert_line
from .permutations import phi, phi_inverse
from .polynomial import IntPolynomial
from .statistics import P_enum, P_recurrence, oc_total, stat_report, survey
from .symmetric import Q_enum, Q_recurrence, generate_symmetric, generate_symmetric_direct
from .paths import partition_classes, paths_below, cc, shift_map, shift_inverse
from .pasep import PasepParams, tableau_distribution, transition_matrix, stationary, expected_X, mc_sample
from .verify import run_suite

__version__ = "0.1.0"
