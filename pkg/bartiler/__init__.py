"""
k×1 長條磚鋪法精確計數系統 (bartiler)
"""

__version__ = '0.1.0'

# 核心工具模組
from .errors import BarTilerError, CapacityExceeded, ConfigError
from .config_helper import BarTilerConfig
from .poly_core import (
    BiPoly,
    XPoly,
    XSeries,
    RationalGF,
    Substitution,
    bipoly_arith,
    series_invert,
    hadamard_product,
    rational_to_series,
    coeff_at,
    iter_coefficients,
    sqrt_pair_product,
    substitute,
)

# 組合與對稱函數
from .combinatorics import (
    OddComposition,
    TCompComposition,
    sigma,
    enumerate_oc,
    s_stat,
    canonical_form,
    c_closed,
    f_poly,
    oc_count_by_parts,
    oc_leq_count,
    palpha,
    is_palpha_set,
    tcomp_enumerate,
)
from .symfunc import (
    Partition,
    FrobeniusCoords,
    RimHookDecomposition,
    partition_basics,
    enumerate_asc,
    srht_enumerate,
    inverse_kostka,
    frob_condition,
    plethysm_e_coeffs,
    denominator_from_srht,
)

# 鋪法窮舉
from .tiling_oracle import (
    count_tilings,
    klarner_tileable,
    enumerate_tilings,
    fault_predicates,
    empirical_series,
    graham_fault_free_exists,
    ar_narrow_count,
)

# 生成函數
from .gf_engine import (
    PolyMatrix,
    build_A,
    det_poly,
    phi,
    V_rational,
    U_rational,
    hadamard_rational,
    F_main,
    big_count,
)

# 輸出與驗證
from .oeis_bfiles import OEIS_IDS, bfile_lines, export_bfiles
from .verify_suites import run_suite

__all__ = [
    # 核心工具
    'BarTilerError',
    'CapacityExceeded',
    'ConfigError',
    'BarTilerConfig',
    'BiPoly',
    'XPoly',
    'XSeries',
    'RationalGF',
    'Substitution',
    'bipoly_arith',
    'series_invert',
    'hadamard_product',
    'rational_to_series',
    'coeff_at',
    'iter_coefficients',
    'sqrt_pair_product',
    'substitute',
    # 組合與對稱函數
    'OddComposition',
    'TCompComposition',
    'sigma',
    'enumerate_oc',
    's_stat',
    'canonical_form',
    'c_closed',
    'f_poly',
    'oc_count_by_parts',
    'oc_leq_count',
    'palpha',
    'is_palpha_set',
    'tcomp_enumerate',
    'Partition',
    'FrobeniusCoords',
    'RimHookDecomposition',
    'partition_basics',
    'enumerate_asc',
    'srht_enumerate',
    'inverse_kostka',
    'frob_condition',
    'plethysm_e_coeffs',
    'denominator_from_srht',
    # 鋪法窮舉
    'count_tilings',
    'klarner_tileable',
    'enumerate_tilings',
    'fault_predicates',
    'empirical_series',
    'graham_fault_free_exists',
    'ar_narrow_count',
    # 生成函數
    'PolyMatrix',
    'build_A',
    'det_poly',
    'phi',
    'V_rational',
    'U_rational',
    'hadamard_rational',
    'F_main',
    'big_count',
    # 輸出與驗證
    'OEIS_IDS',
    'bfile_lines',
    'export_bfiles',
    'run_suite',
]
