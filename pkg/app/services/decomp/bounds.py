"""Closed-form upper bounds on colouring numbers and chromatic numbers.

Each formula takes named integer parameters:

    planar-dcol      k            (2*C(k//2+2, 2) + 1) * (2k+1)
    genus-dcol       g, k         (2g + 2*C(k//2+2, 2) + 1) * (2k+1)
    treewidth-dcol   t, k         t*C(k//2+t, t) + 1
    minor-free-dcol  t, k         flat-dcol with width t-2 and f(k) = (t-3)(2k+1)
    flat-dcol        t, k, f      (t*C(k//2+t, t) + 1) * f
    planar-wcol      k            C(k+2, 2) * (2k+1)
    grohe-wcol       t, k         C(k+t, t) - 1
    signature-count  p, q         (p//2 + 2) ** q
    kierstead-yang   col, k       col ** k

A bound on dcol at radius 2p-1 bounds the chromatic number of the exact
distance-p graph for odd p.
"""

from enum import Enum
from math import comb
from typing import Callable, Dict, Mapping, Tuple

from .exceptions import BoundParameterError


class BoundFormula(Enum):
    PLANAR_DCOL = "planar-dcol"
    GENUS_DCOL = "genus-dcol"
    TREEWIDTH_DCOL = "treewidth-dcol"
    MINOR_FREE_DCOL = "minor-free-dcol"
    FLAT_DCOL = "flat-dcol"
    PLANAR_WCOL = "planar-wcol"
    GROHE_WCOL = "grohe-wcol"
    SIGNATURE_COUNT = "signature-count"
    KIERSTEAD_YANG = "kierstead-yang"


# name -> smallest accepted value
_MINIMA: Dict[BoundFormula, Tuple[Tuple[str, int], ...]] = {
    BoundFormula.PLANAR_DCOL: (("k", 0),),
    BoundFormula.GENUS_DCOL: (("g", 0), ("k", 0)),
    BoundFormula.TREEWIDTH_DCOL: (("t", 0), ("k", 0)),
    BoundFormula.MINOR_FREE_DCOL: (("t", 4), ("k", 0)),
    BoundFormula.FLAT_DCOL: (("t", 0), ("k", 0), ("f", 1)),
    BoundFormula.PLANAR_WCOL: (("k", 0),),
    BoundFormula.GROHE_WCOL: (("t", 0), ("k", 0)),
    BoundFormula.SIGNATURE_COUNT: (("p", 1), ("q", 0)),
    BoundFormula.KIERSTEAD_YANG: (("col", 1), ("k", 1)),
}


def formula_params(which: BoundFormula) -> Tuple[str, ...]:
    return tuple(name for name, _ in _MINIMA[which])


def _flat(t: int, k: int, f: int) -> int:
    return (t * comb(k // 2 + t, t) + 1) * f


def _planar_dcol(k: int) -> int:
    return (2 * comb(k // 2 + 2, 2) + 1) * (2 * k + 1)


_FORMULAS: Dict[BoundFormula, Callable[..., int]] = {
    BoundFormula.PLANAR_DCOL: _planar_dcol,
    BoundFormula.GENUS_DCOL: lambda g, k: (2 * g + 2 * comb(k // 2 + 2, 2) + 1) * (2 * k + 1),
    BoundFormula.TREEWIDTH_DCOL: lambda t, k: t * comb(k // 2 + t, t) + 1,
    BoundFormula.MINOR_FREE_DCOL: lambda t, k: _flat(t - 2, k, (t - 3) * (2 * k + 1)),
    BoundFormula.FLAT_DCOL: _flat,
    BoundFormula.PLANAR_WCOL: lambda k: comb(k + 2, 2) * (2 * k + 1),
    BoundFormula.GROHE_WCOL: lambda t, k: comb(k + t, t) - 1,
    BoundFormula.SIGNATURE_COUNT: lambda p, q: (p // 2 + 2) ** q,
    BoundFormula.KIERSTEAD_YANG: lambda col, k: col**k,
}


def eval_bound_formula(which: BoundFormula, params: Mapping[str, int]) -> int:
    """Evaluate a closed-form bound.

    Args:
        which: Formula to evaluate
        params: Named parameters, exactly those listed for the formula

    Returns:
        The exact integer value

    Raises:
        BoundParameterError: If a parameter is missing, unexpected, not an
            integer or below its range
    """
    expected = formula_params(which)
    for name in params:
        if name not in expected:
            raise BoundParameterError(which.value, name, params[name], f"one of {', '.join(expected)}")
    for name, minimum in _MINIMA[which]:
        if name not in params:
            raise BoundParameterError(which.value, name, None, f"integer >= {minimum}")
        value = params[name]
        if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
            raise BoundParameterError(which.value, name, value, f"integer >= {minimum}")
    return _FORMULAS[which](*(params[name] for name in expected))
