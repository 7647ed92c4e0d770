"""Exact certificate toolkit for integrality over real closed valued fields.

Everything lives over K = Q(eps) with the eps-adic valuation and the order in
which eps is a positive infinitesimal.  Arithmetic is exact throughout.
"""

from ganz.baer_krull import (
    OrderHandle,
    ResidueOrder,
    SemiSection,
    baer_krull_order,
    build_semisection,
    even_case_order_search,
    f2_max_independent,
    sufficiency_pipeline,
)
from ganz.certificates import (
    SOS,
    AlgebraElem,
    ConeCert,
    LocalizedElem,
    RadicalCert,
    SetDescription,
    Verdict,
    cone_value,
    handelman_search,
    verify_cone_pointwise,
    verify_radical_cert,
)
from ganz.errors import GanzError
from ganz.kernels import BACKEND
from ganz.ovf_core import EPS, INF, ONE, ZERO, KElem, Rat, ValGroupElem
from ganz.parser import format_ratfunc, parse, parse_kelem, parse_point
from ganz.probe import (
    Grid,
    Pseudorandom,
    SampleStrategy,
    boundedness_probe,
    integrality_probe,
    sample_set,
)
from ganz.ratfunc import MPoly, RatFunc
from ganz.valuations import NearPoint, WeightedGauss, residue, val_of

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "EPS", "INF", "ONE", "ZERO", "SOS",
    "AlgebraElem", "ConeCert", "GanzError", "Grid", "KElem", "LocalizedElem",
    "MPoly", "NearPoint", "OrderHandle", "Pseudorandom", "RadicalCert", "Rat",
    "RatFunc", "ResidueOrder", "SampleStrategy", "SemiSection", "SetDescription",
    "ValGroupElem", "Verdict", "WeightedGauss",
    "baer_krull_order", "boundedness_probe", "build_semisection", "cone_value",
    "even_case_order_search", "f2_max_independent", "format_ratfunc",
    "handelman_search", "integrality_probe", "parse", "parse_kelem", "parse_point",
    "residue", "sample_set", "sufficiency_pipeline", "val_of",
    "verify_cone_pointwise", "verify_radical_cert",
]
