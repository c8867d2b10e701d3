"""Generators of the dual pair (a, b) ~ (sl2, sln) inside sl(2n).

a = <X, H, Y> is the commutant of b = {diag(A, A) : A in sl_n}.  All
operators are word sums in the Weyl generators via E_{i,j} = q_i p_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .weylmodule import (
    ModuleParams,
    NotAWeightVector,
    Offsets,
    Operator,
    WeightVector,
    box_indices,
    op_commutator,
    op_compose,
    op_sum,
)

E = Operator.E


@dataclass(frozen=True)
class DualPairGens:
    n: int
    X: Operator
    Y: Operator
    H: Operator
    raise_b: Tuple[Operator, ...]
    lower_b: Tuple[Operator, ...]
    cartan_b: Tuple[Operator, ...]
    levi_raise: Tuple[Operator, ...]
    zprime: Operator
    zdoubleprime: Operator

    def named(self) -> Dict[str, Operator]:
        """Report names of the generators, in a fixed order."""
        out = {"X": self.X, "Y": self.Y, "H": self.H}
        for i, op in enumerate(self.raise_b, 1):
            out[f"X_{i}"] = op
        for i, op in enumerate(self.lower_b, 1):
            out[f"X_-{i}"] = op
        for i, op in enumerate(self.cartan_b, 1):
            out[f"H_{i}"] = op
        out["Z'"] = self.zprime
        out["Z''"] = self.zdoubleprime
        return out

    def a_gens(self) -> Dict[str, Operator]:
        return {"X": self.X, "Y": self.Y, "H": self.H}

    def b_gens(self) -> Dict[str, Operator]:
        d = self.named()
        return {k: v for k, v in d.items() if k.startswith(("X_", "H_"))}


def _diag_pair(n: int, i: int, j: int) -> Operator:
    """E_{i,j} + E_{n+i,n+j}: the image of the sl_n matrix unit in b."""
    return E(i, j) + E(n + i, n + j)


def build_dual_pair(params: ModuleParams | int) -> DualPairGens:
    n = params if isinstance(params, int) else params.n
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    X = op_sum(*(E(n + i, i) for i in range(1, n + 1)))
    Y = op_sum(*(E(i, n + i) for i in range(1, n + 1)))
    H = op_sum(*(E(i, i) - E(n + i, n + i) for i in range(1, n + 1)))
    raise_b = tuple(_diag_pair(n, i, i + 1) for i in range(1, n))
    lower_b = tuple(_diag_pair(n, i + 1, i) for i in range(1, n))
    cartan_b = tuple(op_commutator(xp, xm) for xp, xm in zip(raise_b, lower_b))
    levi = []
    for block in (0, n):
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                levi.append(E(block + i, block + j))
    zprime = _diag_pair(n, n, 1)
    zdouble = op_sum(
        *(
            op_compose(_diag_pair(n, i + 1, 1), _diag_pair(n, n, i + 1))
            for i in range(1, n - 1)
        )
    )
    return DualPairGens(
        n=n,
        X=X,
        Y=Y,
        H=H,
        raise_b=raise_b,
        lower_b=lower_b,
        cartan_b=cartan_b,
        levi_raise=tuple(levi),
        zprime=zprime,
        zdoubleprime=zdouble,
    )


def h_theta_from_simple_coroots(n: int) -> Operator:
    """H written as sum_j min(j, 2n-j) H_{alpha_j}; must equal gens.H."""
    out = Operator.zero()
    for j in range(1, 2 * n):
        h = E(j, j) - E(j + 1, j + 1)
        out = out + h.scale(min(j, 2 * n - j))
    return out


@dataclass(frozen=True)
class SubWeight:
    theta_weight: Fraction
    b_weight: Tuple[Fraction, ...]


def _eigenvalue(params: ModuleParams, op: Operator, v: WeightVector) -> Fraction:
    w = op.apply(params, v)
    k, c = v.items()[0]
    lam = w.coeff(k) / c
    if w != v.scale(lam):
        raise NotAWeightVector("not an (h_theta + h_n)-weight vector")
    return lam


def sub_weight(params: ModuleParams, gens: DualPairGens, v: WeightVector) -> SubWeight:
    if v.is_zero():
        raise NotAWeightVector("zero vector has no weight")
    theta = _eigenvalue(params, gens.H, v)
    bw = tuple(_eigenvalue(params, h, v) for h in gens.cartan_b)
    return SubWeight(theta, bw)


def levi_singulars(params: ModuleParams, box: int) -> List[Offsets]:
    """Basis indices in the box killed by every generator of l_theta^+."""
    gens = build_dual_pair(params)
    out = []
    for idx in box_indices(params, box):
        v = WeightVector.basis(idx)
        if all(op.apply(params, v).is_zero() for op in gens.levi_raise):
            out.append(idx)
    return out
