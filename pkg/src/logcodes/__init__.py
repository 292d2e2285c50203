"""Exact weight distributions of linear codes and their log-concavity."""

__version__ = "0.1.0"

from .errors import (BadParams, BudgetExceeded, DivisionByZero, InexactDivision,
                     InexactTransform, LogCodesError, NotPrimePower, RankDeficient, TooLarge,
                     ZeroDenominator)
from .field import FieldSpec, field_arith, field_make
from .linear_code import (GeneratorMatrix, LinearCode, WeightDistribution,
                          brute_weight_distribution, code_make, dual_code, make_code)
from .macwilliams import macwilliams
from .families import FamilySpec, gen_family, wd_basic, wd_ext_hamming_binary, \
    wd_hamming_binary, wd_hamming_q, wd_hrm2, wd_mds, wd_prm2, wd_rm2
from .analysis import (GapReport, NonzeroDistribution, RealRootCheck, gap_report, mds_f,
                       mds_g, mds_q0, mds_ratio_G, mds_verdict, newton_real_rooted, nonzero)
from .tutte import characteristic_polynomial, tutte_polynomial, wd_via_tutte
