"""sl2 action on the singular space, the Z intertwiner, and correspondence tables.

Everything that is an infinite-dimensional statement (simplicity, Verma
freeness) is certified only along a finite sl2-string of a given depth; the
check names carry that depth.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .dualpair import DualPairGens, build_dual_pair, sub_weight
from .exactnum import falling_product, format_scalar, is_integer
from .singular import HwvLabel, StructuralError, hwv_closed_form, x_k_offsets
from .weylmodule import ModuleParams, Operator, WeightVector, box_indices

REGIMES = ("generic", "crit_zero", "crit_pos", "crit_neg")
VARIANTS = ("plain", "semisimplified", "bi_semisimplified")
VARIANT_ALIASES = {"plain": "plain", "s": "semisimplified", "ss": "bi_semisimplified"}


# ---------------------------------------------------------------------------
# closed-form sl2 action on x(b, c)


def critical_value(params: ModuleParams, b: int, c: int = 0) -> Fraction:
    """a1 - a2 + 2b + c - (n-2)."""
    return params.a1 - params.a2 + 2 * b + c - (params.n - 2)


def theta_weight(params: ModuleParams, b: int) -> Fraction:
    """H-eigenvalue of x(b, c): a1 - a2 + 2b - (n-1)."""
    return params.a1 - params.a2 + 2 * b - (params.n - 1)


def sl2_on_hwv(params: ModuleParams, gen: str, label) -> Tuple[Fraction, Optional[HwvLabel]]:
    lab = label if isinstance(label, HwvLabel) else HwvLabel(*label)
    b, c = lab.b, lab.c
    if gen == "X":
        return params.a1 + b, HwvLabel(b - 1, c + 1)
    if gen == "Y":
        coeff = c * critical_value(params, b, c) / (params.a1 + b + 1)
        if coeff == 0:
            return Fraction(0), None
        return coeff, HwvLabel(b + 1, c - 1)
    if gen == "H":
        return theta_weight(params, b), lab
    raise ValueError(f"unknown sl2 generator {gen!r}")


def sl2_identity_holds(params: ModuleParams, gens: DualPairGens, gen: str, label) -> bool:
    """Concrete operator on x(b, c) equals the predicted multiple of x(target)."""
    op = gens.a_gens()[gen]
    actual = op.apply(params, hwv_closed_form(params, label))
    coeff, target = sl2_on_hwv(params, gen, label)
    if target is None:
        return actual.is_zero()
    return actual == hwv_closed_form(params, target).scale(coeff)


# ---------------------------------------------------------------------------
# the Z intertwiner


def z_lambda(gens: DualPairGens, lam) -> Operator:
    return gens.zprime + gens.zdoubleprime.scale(lam)


def build_Z(params: ModuleParams, b: int, c: int, gens: DualPairGens | None = None) -> Operator:
    """Z = prod_{i=1}^{c} (Z' + Z''/(a1+b+i)); the factors commute."""
    gens = gens or build_dual_pair(params)
    out = Operator.identity()
    for i in range(1, c + 1):
        out = out @ z_lambda(gens, 1 / (params.a1 + b + i))
    return out


def apply_Z_check(params: ModuleParams, b: int, c: int, gens: DualPairGens | None = None) -> Fraction:
    """Return gamma with Z x(b,0) = gamma x(b,c); raise StructuralError otherwise."""
    gens = gens or build_dual_pair(params)
    gamma = falling_product(params.a2 - b, c)
    # applying the factors one at a time avoids expanding the product
    v = hwv_closed_form(params, (b, 0))
    for i in range(1, c + 1):
        v = z_lambda(gens, 1 / (params.a1 + b + i)).apply(params, v)
    expected = hwv_closed_form(params, (b, c)).scale(gamma)
    if v != expected:
        lead = v.coeff(x_k_offsets(params.n, b, c, (0,) * (params.n - 1)))
        raise StructuralError(
            f"Z x({b},0) != gamma x({b},{c}): gamma={format_scalar(gamma)}, "
            f"x_0 coefficient={format_scalar(lead)}"
        )
    return gamma


# ---------------------------------------------------------------------------
# labels and entries


@dataclass(frozen=True)
class ModuleLabel:
    kind: str  # SimpleHW_slN, SimpleHW_sl2, Verma_sl2, Indecomposable_len2
    hw: Tuple[Fraction, ...]
    submodule_hw: Optional[Tuple[Fraction, ...]] = None
    plus: Optional["ModuleLabel"] = None  # second summand (bi-semisimplified tables)

    def to_json(self) -> Dict:
        d: Dict = {"kind": self.kind, "hw": [format_scalar(x) for x in self.hw]}
        if self.submodule_hw is not None:
            d["submodule_hw"] = [format_scalar(x) for x in self.submodule_hw]
        if self.plus is not None:
            d["plus"] = self.plus.to_json()
        return d

    def __str__(self):
        name = {"Verma_sl2": "V", "Indecomposable_len2": "I"}.get(self.kind, "L")
        s = f"{name}({', '.join(format_scalar(x) for x in self.hw)})"
        if self.submodule_hw is not None:
            s += f" > L({', '.join(format_scalar(x) for x in self.submodule_hw)})"
        if self.plus is not None:
            s += f" + {self.plus}"
        return s


def slN_weight(params: ModuleParams, b: int, c: int = 0) -> Tuple[Fraction, ...]:
    """h_n-weight of x(b, c)."""
    a1, a2, n = params.a1, params.a2, params.n
    if n == 2:
        return (-1 - a1 + a2 - 2 * (b + c),)
    return (a2 - b - c,) + (Fraction(0),) * (n - 3) + (-1 - a1 - b - c,)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> Dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class CorrespondenceEntry:
    b: int
    slN_side: ModuleLabel
    sl2_side: ModuleLabel
    regime: str
    critical_value: Fraction
    checks: Tuple[Check, ...] = ()

    @property
    def passed(self) -> bool:
        return all(ch.passed for ch in self.checks)

    def to_json(self) -> Dict:
        return {
            "b": self.b,
            "regime": self.regime,
            "critical_value": format_scalar(self.critical_value),
            "slN": self.slN_side.to_json(),
            "sl2": self.sl2_side.to_json(),
            "checks": [ch.to_json() for ch in self.checks],
        }


def regime_of(params: ModuleParams, b: int) -> str:
    if params.generic:
        return "generic"
    crit = critical_value(params, b)
    if crit == 0:
        return "crit_zero"
    return "crit_pos" if crit > 0 else "crit_neg"


def classify(params: ModuleParams, b: int, variant: str = "plain") -> CorrespondenceEntry:
    variant = VARIANT_ALIASES.get(variant, variant)
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    regime = regime_of(params, b)
    crit = critical_value(params, b)
    lam = theta_weight(params, b)
    top = slN_weight(params, b)
    slN = ModuleLabel("SimpleHW_slN", top)
    sl2 = ModuleLabel("SimpleHW_sl2", (lam,))
    if regime == "crit_pos":
        if variant == "bi_semisimplified":
            sl2 = ModuleLabel("SimpleHW_sl2", (lam,), plus=ModuleLabel("SimpleHW_sl2", (-lam - 2,)))
        else:
            sl2 = ModuleLabel("Verma_sl2", (lam,), submodule_hw=(-lam - 2,))
    elif regime == "crit_neg" and variant == "plain":
        c = int(-crit)
        slN = ModuleLabel("Indecomposable_len2", top, submodule_hw=slN_weight(params, b, c))
    return CorrespondenceEntry(b, slN, sl2, regime, crit)


# ---------------------------------------------------------------------------
# verification of one entry


class _Checker:
    def __init__(self, params: ModuleParams, gens: DualPairGens):
        self.params = params
        self.gens = gens
        self._hwv: Dict[HwvLabel, WeightVector] = {}

    def hwv(self, b: int, c: int) -> WeightVector:
        lab = HwvLabel(b, c)
        if lab not in self._hwv:
            self._hwv[lab] = hwv_closed_form(self.params, lab)
        return self._hwv[lab]

    def act(self, gen: str, b: int, c: int) -> WeightVector:
        return self.gens.a_gens()[gen].apply(self.params, self.hwv(b, c))

    def predicted(self, gen: str, b: int, c: int) -> WeightVector:
        coeff, target = sl2_on_hwv(self.params, gen, (b, c))
        if target is None:
            return WeightVector.zero()
        return self.hwv(target.b, target.c).scale(coeff)


def _fmt_labels(labels: Iterable) -> str:
    return "[" + ", ".join(f"({b},{c})" for b, c in labels) + "]"


def verify_entry(
    params: ModuleParams,
    entry: CorrespondenceEntry,
    depth: int = 5,
    gens: DualPairGens | None = None,
) -> Tuple[Check, ...]:
    if depth < 1:
        raise ValueError("depth must be >= 1")
    gens = gens or build_dual_pair(params)
    ck = _Checker(params, gens)
    b = entry.b
    n = params.n
    checks: List[Check] = []
    crit = critical_value(params, b)

    # weights of the top vector against the label
    sw = sub_weight(params, gens, ck.hwv(b, 0))
    checks.append(
        Check(
            "weights",
            sw.b_weight == entry.slN_side.hw and sw.theta_weight == theta_weight(params, b),
            f"h_n={[format_scalar(x) for x in sw.b_weight]} h_theta={format_scalar(sw.theta_weight)}",
        )
    )

    # the a-string x(b-k, k); scan far enough to reach the critical label
    span = depth
    if entry.regime == "crit_pos":
        span = max(depth, int(crit))
    bad = [
        (b - k, k)
        for k in range(span + 1)
        for g in ("X", "Y")
        if ck.act(g, b - k, k) != ck.predicted(g, b - k, k)
    ]
    checks.append(Check(f"sl2 coefficients along string (depth {span})", not bad, f"mismatch at {_fmt_labels(bad)}" if bad else ""))

    x_dead = [(b - k, k) for k in range(span + 1) if ck.act("X", b - k, k).is_zero()]
    checks.append(Check(f"X never kills (depth {span})", not x_dead, _fmt_labels(x_dead) if x_dead else ""))

    y_dead = [k for k in range(span + 1) if ck.act("Y", b - k, k).is_zero()]
    if entry.regime == "crit_pos":
        expected_dead = [0, int(crit)]
    else:
        expected_dead = [0]
    checks.append(
        Check(
            f"Y-singular positions along string (finite certificate, depth {span})",
            y_dead == expected_dead,
            f"k in {y_dead}, expected {expected_dead}",
        )
    )

    if entry.regime == "crit_pos":
        cstar = int(crit)
        h = sub_weight(params, gens, ck.hwv(b - cstar, cstar)).theta_weight
        lam = theta_weight(params, b)
        checks.append(
            Check(
                "Verma submodule weight",
                h == -lam - 2 and entry.sl2_side.hw == (lam,),
                f"H at ({b - cstar},{cstar}) = {format_scalar(h)}, -lambda-2 = {format_scalar(-lam - 2)}",
            )
        )

    if entry.regime in ("generic", "crit_pos", "crit_zero"):
        # b-module simplicity certificate: Y x(b, c) != 0 for 1 <= c <= depth
        dead = [c for c in range(1, depth + 1) if ck.act("Y", b, c).is_zero()]
        checks.append(
            Check(f"b-simplicity certificate (depth {depth})", not dead, f"Y x(b,c) = 0 at c in {dead}" if dead else "")
        )

    if entry.regime == "crit_neg":
        c = int(-crit)
        try:
            gamma = apply_Z_check(params, b, c, gens)
            ok, detail = True, f"gamma={format_scalar(gamma)} at c={c}"
        except StructuralError as exc:
            ok, detail = False, str(exc)
        checks.append(Check("Z x(b,0) = gamma x(b,c)", ok, detail))
        zx = ck.hwv(b, 0)
        for i in range(1, c + 1):
            zx = z_lambda(gens, 1 / (params.a1 + b + i)).apply(params, zx)
        killed = all(op.apply(params, zx).is_zero() for op in gens.raise_b)
        checks.append(Check("Z x(b,0) is b+-singular", killed and not zx.is_zero(), ""))
        dead = [cc for cc in range(1, depth + 1) if cc != c and ck.act("Y", b, cc).is_zero()]
        checks.append(
            Check(
                f"Y x(b,c') != 0 away from the submodule (depth {depth})",
                not dead and ck.act("Y", b, c).is_zero() == (c > 0),
                f"dead at {dead}" if dead else "",
            )
        )
    return tuple(checks)


# ---------------------------------------------------------------------------
# tables


@dataclass
class BranchingReport:
    params: ModuleParams
    variant: str
    entries: List[CorrespondenceEntry]
    slN_factors: List[Dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries) and all(f["pass"] for f in self.slN_factors)

    @property
    def one_to_one(self) -> bool:
        return not any(e.sl2_side.plus is not None for e in self.entries)

    def to_json(self) -> Dict:
        p = self.params
        d = {
            "params": {"n": p.n, "a1": format_scalar(p.a1), "a2": format_scalar(p.a2), "generic": p.generic},
            "variant": self.variant,
            "one_to_one": self.one_to_one,
            "entries": [e.to_json() for e in self.entries],
        }
        if self.slN_factors:
            d["slN_factors"] = self.slN_factors
        return d

    def to_markdown(self) -> str:
        p = self.params
        lines = [
            f"n={p.n}, a1={format_scalar(p.a1)}, a2={format_scalar(p.a2)}, "
            f"{'generic' if p.generic else 'non-generic'}, variant={self.variant}"
            + ("" if self.one_to_one else " (not one-to-one)"),
            "",
            "| b | regime | a1-a2+2b-(n-2) | sl_n side | sl_2 side | checks |",
            "|---|---|---|---|---|---|",
        ]
        for e in self.entries:
            status = "pass" if e.passed else "FAIL: " + ", ".join(c.name for c in e.checks if not c.passed)
            lines.append(
                f"| {e.b} | {e.regime} | {format_scalar(e.critical_value)} | {e.slN_side} | {e.sl2_side} | {status} |"
            )
        if self.slN_factors:
            lines += ["", "| b | c | sl_n composition factor | check |", "|---|---|---|---|"]
            for f in self.slN_factors:
                lines.append(f"| {f['b']} | {f['c']} | L({', '.join(f['hw'])}) | {'pass' if f['pass'] else 'FAIL'} |")
        return "\n".join(lines) + "\n"


def semisimplified_factors(
    params: ModuleParams, b_values: Sequence[int], c_max: int, gens: DualPairGens | None = None
) -> List[Dict]:
    """sl_n composition factors L(hw of x(b,c)); hw read from the operators."""
    gens = gens or build_dual_pair(params)
    out = []
    for b in b_values:
        for c in range(c_max + 1):
            sw = sub_weight(params, gens, hwv_closed_form(params, (b, c)))
            expected = slN_weight(params, b, c)
            out.append(
                {
                    "b": b,
                    "c": c,
                    "hw": [format_scalar(x) for x in expected],
                    "pass": sw.b_weight == expected,
                }
            )
    return out


def build_entry(params: ModuleParams, b: int, variant: str, depth: int) -> CorrespondenceEntry:
    """Classified and verified entry; top-level so worker processes can run it."""
    entry = classify(params, b, variant)
    checks = verify_entry(params, entry, depth)
    return CorrespondenceEntry(entry.b, entry.slN_side, entry.sl2_side, entry.regime, entry.critical_value, checks)


def build_table(
    params: ModuleParams,
    b_range: Iterable[int],
    c_max: int = 4,
    variant: str = "plain",
    depth: int = 5,
    map_fn=map,
) -> BranchingReport:
    """Entries ordered by b.  ``map_fn`` may be an ordered parallel map."""
    variant = VARIANT_ALIASES.get(variant, variant)
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if c_max < 0:
        raise ValueError("c_max must be >= 0")
    bs = sorted(set(b_range))
    entries = list(map_fn(build_entry, [params] * len(bs), bs, [variant] * len(bs), [depth] * len(bs)))
    factors = semisimplified_factors(params, bs, c_max) if variant != "plain" else []
    return BranchingReport(params, variant, entries, factors)


def series_detail(params: ModuleParams, b: int, depth: int = 5) -> Dict:
    """Composition-series data for U(a) x(b,0) and U(b) x(b,0)."""
    entry = build_entry(params, b, "plain", depth)
    crit = entry.critical_value
    d: Dict = {
        "b": b,
        "regime": entry.regime,
        "critical_value": format_scalar(crit),
        "a_module": {},
        "b_module": {},
        "checks": [c.to_json() for c in entry.checks],
    }
    lam = theta_weight(params, b)
    if entry.regime == "crit_pos":
        cstar = int(crit)
        d["a_module"] = {
            "length": 2,
            "top_hw": format_scalar(lam),
            "submodule_generator": {"b": b - cstar, "c": cstar},
            "submodule_hw": format_scalar(-lam - 2),
            "verma": f"V({format_scalar(lam)}) (finite certificate, depth {max(depth, cstar)})",
        }
    else:
        d["a_module"] = {"length": 1, "top_hw": format_scalar(lam)}
    top = [format_scalar(x) for x in slN_weight(params, b)]
    if entry.regime == "crit_neg":
        c = int(-crit)
        d["b_module"] = {
            "length": 2,
            "top_hw": top,
            "submodule_generator": {"b": b, "c": c},
            "submodule_hw": [format_scalar(x) for x in slN_weight(params, b, c)],
            "gamma": format_scalar(falling_product(params.a2 - b, c)),
        }
    else:
        d["b_module"] = {"length": 1, "top_hw": top}
    d["pass"] = entry.passed
    return d


# ---------------------------------------------------------------------------
# exhaustiveness


def _x0_label(n: int, offsets) -> Optional[HwvLabel]:
    if any(offsets[: n - 1]) or any(offsets[n + 1 : 2 * n - 1]):
        return None
    b, c = offsets[n - 1], offsets[2 * n - 1]
    if offsets[n] != -b - c or c < 0:
        return None
    return HwvLabel(b, c)


def in_hwv_span(params: ModuleParams, v: WeightVector) -> bool:
    """Greedy reduction of v by the x(b, c); True iff it reaches zero."""
    n = params.n
    while not v.is_zero():
        lab = next((l for l in map(lambda k: _x0_label(n, k), v.support()) if l is not None), None)
        if lab is None:
            return False
        coeff = v.coeff(x_k_offsets(n, lab.b, lab.c, (0,) * (n - 1)))
        v = v - hwv_closed_form(params, lab).scale(coeff)
    return True


@dataclass
class ScanResult:
    passed: bool
    checked: int
    max_steps: int
    failures: List[Dict]

    def to_json(self) -> Dict:
        return {"pass": self.passed, "checked": self.checked, "max_steps": self.max_steps, "failures": self.failures}


def raise_to_singular(params: ModuleParams, gens: DualPairGens, v: WeightVector, budget: int):
    """Apply the first non-annihilating X_i until none applies.

    Returns (terminal vector, steps) or (None, budget) on exhaustion.
    """
    for step in range(budget + 1):
        for op in gens.raise_b:
            w = op.apply(params, v)
            if not w.is_zero():
                v = w
                break
        else:
            return v, step
    return None, budget


def exhaustiveness_scan(params: ModuleParams, box: int, step_budget: int = 200) -> ScanResult:
    gens = build_dual_pair(params)
    failures = []
    max_steps = 0
    indices = box_indices(params, box)
    for idx in indices:
        term, steps = raise_to_singular(params, gens, WeightVector.basis(idx), step_budget)
        max_steps = max(max_steps, steps)
        if term is None:
            failures.append({"offsets": list(idx), "reason": "step budget exhausted"})
        elif not in_hwv_span(params, term):
            failures.append({"offsets": list(idx), "reason": "terminal vector outside span of x(b,c)"})
    return ScanResult(not failures, len(indices), max_steps, failures)
