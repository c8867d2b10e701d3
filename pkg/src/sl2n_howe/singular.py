"""b^+-singular vectors x(b, c): closed form and a brute-force kernel oracle."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, Sequence, Tuple

from .dualpair import DualPairGens, build_dual_pair
from .exactnum import format_scalar
from .kernel import nullspace
from .weylmodule import ModuleParams, Offsets, WeightVector


class StructuralError(RuntimeError):
    """A computed object contradicts the expected structure of N(a1, a2)."""


@dataclass(frozen=True, order=True)
class HwvLabel:
    b: int
    c: int

    def __post_init__(self):
        if self.c < 0:
            raise ValueError(f"c must be >= 0, got {self.c}")


def _label(label) -> HwvLabel:
    return label if isinstance(label, HwvLabel) else HwvLabel(*label)


def k_tuples(n: int, c: int) -> List[Tuple[int, ...]]:
    """k in N^{n-1} with |k| <= c, lexicographic."""
    if c < 0:
        raise ValueError(f"c must be >= 0, got {c}")
    return [k for k in itertools.product(range(c + 1), repeat=n - 1) if sum(k) <= c]


def x_k_offsets(n: int, b: int, c: int, k: Sequence[int]) -> Offsets:
    """Offsets of x_k(b, c) = x(-1-k_1, ..., a1+b+|k|, a2-b-c+k_1, k_2, ..., c-|k|)."""
    s = sum(k)
    return (
        tuple(-ki for ki in k)
        + (b + s, -b - c + k[0])
        + tuple(k[1:])
        + (c - s,)
    )


def weight_space_basis(params: ModuleParams, label) -> List[Offsets]:
    lab = _label(label)
    return [x_k_offsets(params.n, lab.b, lab.c, k) for k in k_tuples(params.n, lab.c)]


def kappa(params: ModuleParams, label, k: Sequence[int]) -> Fraction:
    lab = _label(label)
    s = sum(k)
    if s > lab.c:
        raise ValueError(f"|k| = {s} exceeds c = {lab.c}")
    if any(ki < 0 for ki in k):
        raise ValueError("k must be nonnegative")
    out = Fraction(1)
    partial = k[0]
    for t in range(1, len(k)):
        out *= comb(partial + k[t], partial)
        partial += k[t]
    for j in range(1, s + 1):
        out *= Fraction(lab.c + 1 - j) / (params.a1 + lab.b + j)
    return out / factorial(s)


def hwv_closed_form(params: ModuleParams, label) -> WeightVector:
    lab = _label(label)
    n = params.n
    return WeightVector(
        {x_k_offsets(n, lab.b, lab.c, k): kappa(params, lab, k) for k in k_tuples(n, lab.c)}
    )


def raising_matrix(
    params: ModuleParams, gens: DualPairGens, basis: Sequence[Offsets]
) -> Tuple[List[List[Fraction]], List[Tuple[int, Offsets]]]:
    """Stacked matrices of X_1..X_{n-1} from span(basis) to the union of images.

    Rows are labelled (i, target offsets) in canonical order.
    """
    images = []
    for op in gens.raise_b:
        images.append([op.apply(params, WeightVector.basis(k)) for k in basis])
    rows = []
    labels = []
    for i, cols in enumerate(images, 1):
        targets = sorted({t for img in cols for t in img.support()})
        for t in targets:
            rows.append([img.coeff(t) for img in cols])
            labels.append((i, t))
    return rows, labels


def singular_kernel(params: ModuleParams, label, gens: DualPairGens | None = None) -> List[WeightVector]:
    """Basis of the joint kernel of the X_i on the weight space of label."""
    gens = gens or build_dual_pair(params)
    basis = weight_space_basis(params, label)
    rows, _ = raising_matrix(params, gens, basis)
    ker = nullspace(rows, len(basis))
    return [WeightVector(dict(zip(basis, vec))) for vec in ker]


def hwv_bruteforce(params: ModuleParams, label, gens: DualPairGens | None = None) -> WeightVector:
    lab = _label(label)
    ker = singular_kernel(params, lab, gens)
    if len(ker) != 1:
        raise StructuralError(f"kernel dimension {len(ker)} != 1 at (b, c) = ({lab.b}, {lab.c})")
    v = ker[0]
    lead = v.coeff(x_k_offsets(params.n, lab.b, lab.c, (0,) * (params.n - 1)))
    if lead == 0:
        raise StructuralError(f"kernel vector misses x_0 at (b, c) = ({lab.b}, {lab.c})")
    return v.scale(1 / lead)


def check_lower_annihilation(params: ModuleParams, label, gens: DualPairGens | None = None) -> bool:
    """X_{-i} x(b, c) = 0 for 2 <= i <= n-2 (vacuous when n <= 3)."""
    gens = gens or build_dual_pair(params)
    v = hwv_closed_form(params, label)
    return all(gens.lower_b[i - 1].apply(params, v).is_zero() for i in range(2, params.n - 1))


def hwv_to_json(params: ModuleParams, label, v: WeightVector | None = None) -> Dict:
    lab = _label(label)
    v = hwv_closed_form(params, lab) if v is None else v
    terms = []
    for k in k_tuples(params.n, lab.c):
        c = v.coeff(x_k_offsets(params.n, lab.b, lab.c, k))
        if c != 0:
            terms.append({"k": list(k), "coeff": format_scalar(c)})
    return {"b": lab.b, "c": lab.c, "terms": terms}
