"""Named invariant checks over all modules, shared by ``verify`` and the tests.

Each check takes a :class:`SuiteConfig` and returns a :class:`Check`.  Every
check draws from its own ``random.Random`` seeded by (seed, check name), so the
outcome does not depend on which worker runs it or in what order.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Dict, List, Sequence, Tuple

from .branching import (
    Check,
    apply_Z_check,
    build_table,
    exhaustiveness_scan,
    sl2_identity_holds,
    slN_weight,
    theta_weight,
    z_lambda,
)
from .dualpair import build_dual_pair, h_theta_from_simple_coroots, levi_singulars, sub_weight
from .exactnum import falling_product, format_scalar
from .singular import (
    check_lower_annihilation,
    hwv_bruteforce,
    hwv_closed_form,
    singular_kernel,
    weight_space_basis,
    x_k_offsets,
)
from .weylmodule import (
    ModuleParams,
    Operator,
    WeightVector,
    box_indices,
    op_commutator,
    random_index,
    weight_of,
)

SAMPLE_SPREAD = 4


@dataclass(frozen=True)
class SuiteConfig:
    n: int
    a1: Fraction
    a2: Fraction
    b_min: int = -3
    b_max: int = 3
    c_max: int = 4
    depth: int = 5
    box: int = 3
    samples: int = 30
    pairs: int = 40
    seed: int = 0

    @property
    def params(self) -> ModuleParams:
        return ModuleParams(self.n, self.a1, self.a2)

    @property
    def b_range(self) -> range:
        return range(self.b_min, self.b_max + 1)

    def rng(self, name: str) -> random.Random:
        return random.Random(f"{self.seed}:{name}")

    def to_json(self) -> Dict:
        d = asdict(self)
        d["a1"] = format_scalar(self.a1)
        d["a2"] = format_scalar(self.a2)
        return d


def _samples(cfg: SuiteConfig, rng: random.Random, count: int | None = None) -> List[WeightVector]:
    p = cfg.params
    return [WeightVector.basis(random_index(p, rng, SAMPLE_SPREAD)) for _ in range(count or cfg.samples)]


def _op_equal_on(p: ModuleParams, lhs: Operator, rhs: Operator, vs: Sequence[WeightVector]) -> bool:
    return all(lhs.apply(p, v) == rhs.apply(p, v) for v in vs)


# ---------------------------------------------------------------------------
# exactnum


def check_field_axioms(cfg: SuiteConfig) -> Check:
    rng = cfg.rng("field_axioms")

    def r():
        return Fraction(rng.randint(-50, 50), rng.randint(1, 30))

    bad = 0
    for _ in range(200):
        x, y, z = r(), r(), r()
        ok = (x + y) + z == x + (y + z) and (x * y) * z == x * (y * z)
        ok &= x * (y + z) == x * y + x * z
        if x != 0:
            ok &= x * (1 / x) == 1
        bad += not ok
    return Check("exactnum: field axioms", bad == 0, f"{bad} failures in 200 triples")


def check_falling_split(cfg: SuiteConfig) -> Check:
    rng = cfg.rng("falling_split")
    bad = 0
    for _ in range(100):
        s = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
        a, b = rng.randint(0, 8), rng.randint(0, 8)
        bad += falling_product(s, a + b) != falling_product(s, a) * falling_product(s - a, b)
    return Check("exactnum: falling product splits", bad == 0, f"{bad} failures")


# ---------------------------------------------------------------------------
# weylmodule


def check_weyl_relations(cfg: SuiteConfig) -> Check:
    p = cfg.params
    rng = cfg.rng("weyl_relations")
    m = p.m
    bad = []
    for _ in range(cfg.pairs):
        i, j = rng.randint(1, m), rng.randint(1, m)
        if rng.random() < 0.5:
            j = i
        vs = _samples(cfg, rng, 20)
        lhs = op_commutator(Operator.p(j), Operator.q(i))
        rhs = Operator.identity() if i == j else Operator.zero()
        if not _op_equal_on(p, lhs, rhs, vs):
            bad.append(f"[p{j},q{i}]")
        if not _op_equal_on(p, op_commutator(Operator.q(i), Operator.q(j)), Operator.zero(), vs):
            bad.append(f"[q{i},q{j}]")
        if not _op_equal_on(p, op_commutator(Operator.p(i), Operator.p(j)), Operator.zero(), vs):
            bad.append(f"[p{i},p{j}]")
    return Check("weylmodule: Weyl relations", not bad, ", ".join(bad))


def check_gl_relations(cfg: SuiteConfig) -> Check:
    p = cfg.params
    rng = cfg.rng("gl_relations")
    m = p.m
    E = Operator.E
    bad = []
    for _ in range(cfg.pairs):
        i, j, k, l = (rng.randint(1, m) for _ in range(4))
        if rng.random() < 0.5:
            k = j
        if rng.random() < 0.3:
            l = i
        rhs = Operator.zero()
        if j == k:
            rhs = rhs + E(i, l)
        if l == i:
            rhs = rhs - E(k, j)
        if not _op_equal_on(p, op_commutator(E(i, j), E(k, l)), rhs, _samples(cfg, rng, 20)):
            bad.append(f"[E{i}{j},E{k}{l}]")
    return Check("weylmodule: gl relations", not bad, ", ".join(bad))


def check_degree_one(cfg: SuiteConfig) -> Check:
    p = cfg.params
    seen: Dict[Tuple, Tuple] = {}
    clash = []
    for idx in box_indices(p, cfg.box):
        w = weight_of(p, idx)
        if w in seen:
            clash.append((seen[w], idx))
        seen[w] = idx
    return Check("weylmodule: degree-1 weight spaces", not clash, f"{len(seen)} weights; {len(clash)} clashes")


def check_injective_middle(cfg: SuiteConfig) -> Check:
    p = cfg.params
    n = p.n
    rng = cfg.rng("injective_middle")
    vs = _samples(cfg, rng, max(50, cfg.samples))
    ops = (Operator.E(n, n + 1), Operator.E(n + 1, n))
    dead = sum(op.apply(p, v).is_zero() for op in ops for v in vs)
    return Check("weylmodule: E_{n,n+1}, E_{n+1,n} injective", dead == 0, f"{dead} zero images on {len(vs)} samples")


def check_admissibility_preserved(cfg: SuiteConfig) -> Check:
    p = cfg.params
    rng = cfg.rng("admissibility")
    bad = 0
    for v in _samples(cfg, rng):
        for i in range(1, p.m + 1):
            for j in range(1, p.m + 1):
                w = Operator.E(i, j).apply(p, v)
                bad += any(not p.is_admissible(k) for k in w.support())
    return Check("weylmodule: E_{ij} preserves admissibility", bad == 0, f"{bad} violations")


# ---------------------------------------------------------------------------
# dualpair


def check_commutant(cfg: SuiteConfig) -> Check:
    p = cfg.params
    g = build_dual_pair(p)
    vs = _samples(cfg, cfg.rng("commutant"))
    bad = [
        f"[{an},{bn}]"
        for an, a in g.a_gens().items()
        for bn, b in g.b_gens().items()
        if not _op_equal_on(p, op_commutator(a, b), Operator.zero(), vs)
    ]
    return Check("dualpair: a commutes with b", not bad, ", ".join(bad))


def check_sl2_triple(cfg: SuiteConfig) -> Check:
    p = cfg.params
    g = build_dual_pair(p)
    vs = _samples(cfg, cfg.rng("sl2_triple"))
    rels = {
        "[H,Y]=2Y": (op_commutator(g.H, g.Y), g.Y.scale(2)),
        "[H,X]=-2X": (op_commutator(g.H, g.X), g.X.scale(-2)),
        "[Y,X]=H": (op_commutator(g.Y, g.X), g.H),
        "H=sum min(j,2n-j) H_alpha_j": (h_theta_from_simple_coroots(p.n), g.H),
    }
    bad = [name for name, (l, r) in rels.items() if not _op_equal_on(p, l, r, vs)]
    return Check("dualpair: sl2 triple", not bad, ", ".join(bad))


def check_chevalley_b(cfg: SuiteConfig) -> Check:
    """Chevalley-Serre relations of sl_n for (X_i, X_-i, H_i)."""
    p = cfg.params
    g = build_dual_pair(p)
    vs = _samples(cfg, cfg.rng("chevalley"), 10)
    r = p.n - 1
    zero = Operator.zero()
    bad = []
    for i in range(r):
        for j in range(r):
            aij = 2 if i == j else (-1 if abs(i - j) == 1 else 0)
            H, Xj, Xmj = g.cartan_b[i], g.raise_b[j], g.lower_b[j]
            if not _op_equal_on(p, op_commutator(H, Xj), Xj.scale(aij), vs):
                bad.append(f"[H{i+1},X{j+1}]")
            if not _op_equal_on(p, op_commutator(H, Xmj), Xmj.scale(-aij), vs):
                bad.append(f"[H{i+1},X-{j+1}]")
            want = g.cartan_b[i] if i == j else zero
            if not _op_equal_on(p, op_commutator(g.raise_b[i], Xmj), want, vs):
                bad.append(f"[X{i+1},X-{j+1}]")
            if i != j:
                for gens_ in (g.raise_b, g.lower_b):
                    t = gens_[j]
                    for _ in range(1 - aij):
                        t = op_commutator(gens_[i], t)
                    if not _op_equal_on(p, t, zero, vs):
                        bad.append(f"serre({i+1},{j+1})")
    return Check("dualpair: Chevalley relations of b", not bad, ", ".join(bad))


def check_levi_singulars(cfg: SuiteConfig) -> Check:
    p = cfg.params
    n = p.n
    got = levi_singulars(p, cfg.box)
    want = sorted(
        (0,) * (n - 1) + (b, -b) + (0,) * (n - 1) for b in range(-cfg.box, cfg.box + 1)
    )
    return Check("dualpair: l_theta^+ singular vectors", got == want, f"{len(got)} found, {len(want)} expected")


# ---------------------------------------------------------------------------
# singular


def _grid(cfg: SuiteConfig):
    for b in cfg.b_range:
        for c in range(cfg.c_max + 1):
            yield b, c


def check_hwv_oracle(cfg: SuiteConfig) -> Check:
    p = cfg.params
    g = build_dual_pair(p)
    bad = []
    for b, c in _grid(cfg):
        basis = weight_space_basis(p, (b, c))
        ker = singular_kernel(p, (b, c), g)
        ok = len(basis) == comb(c + p.n - 1, p.n - 1) and len(ker) == 1
        ok = ok and hwv_bruteforce(p, (b, c), g) == hwv_closed_form(p, (b, c))
        if not ok:
            bad.append((b, c))
    return Check("singular: closed form = kernel oracle", not bad, f"failing cells {bad}" if bad else "")


def check_hwv_structure(cfg: SuiteConfig) -> Check:
    """Annihilation by b^+, weights, and the two extremal support indices."""
    p = cfg.params
    g = build_dual_pair(p)
    n = p.n
    bad = []
    for b, c in _grid(cfg):
        v = hwv_closed_form(p, (b, c))
        ok = all(op.apply(p, v).is_zero() for op in g.raise_b)
        sw = sub_weight(p, g, v)
        ok &= sw.b_weight == slN_weight(p, b, c) and sw.theta_weight == theta_weight(p, b)
        k0 = (0,) * (n - 1) + (b, -b - c) + (0,) * (n - 2) + (c,)
        k1 = (-c,) + (0,) * (n - 2) + (b + c, -b) + (0,) * (n - 1)
        ok &= v.coeff(k0) != 0 and v.coeff(k1) != 0
        ok &= k0 == x_k_offsets(n, b, c, (0,) * (n - 1))
        if not ok:
            bad.append((b, c))
    return Check("singular: annihilation, weights, support", not bad, f"failing cells {bad}" if bad else "")


def check_lower_annihilation_grid(cfg: SuiteConfig) -> Check:
    p = cfg.params
    g = build_dual_pair(p)
    bad = [(b, c) for b, c in _grid(cfg) if not check_lower_annihilation(p, (b, c), g)]
    return Check("singular: X_-i x(b,c) = 0 for 2 <= i <= n-2", not bad, f"failing {bad}" if bad else "")


# ---------------------------------------------------------------------------
# branching


def check_sl2_coefficients(cfg: SuiteConfig) -> Check:
    p = cfg.params
    g = build_dual_pair(p)
    bad = [(gen, b, c) for b, c in _grid(cfg) for gen in ("X", "Y", "H") if not sl2_identity_holds(p, g, gen, (b, c))]
    return Check("branching: sl2 action coefficients", not bad, f"failing {bad}" if bad else "")


def check_z_commute(cfg: SuiteConfig) -> Check:
    p = cfg.params
    g = build_dual_pair(p)
    vs = _samples(cfg, cfg.rng("z_commute"), 20)
    bad = []
    if not _op_equal_on(p, op_commutator(g.zprime, g.zdoubleprime), Operator.zero(), vs):
        bad.append("[Z',Z'']")
    for lam, mu in ((Fraction(1, 3), Fraction(-2, 7)), (p.a1, 1 / (p.a1 + 1))):
        if not _op_equal_on(p, op_commutator(z_lambda(g, lam), z_lambda(g, mu)), Operator.zero(), vs):
            bad.append(f"[Z_{format_scalar(lam)},Z_{format_scalar(mu)}]")
    return Check("branching: Z factors commute", not bad, ", ".join(bad))


def check_z_intertwiner(cfg: SuiteConfig) -> Check:
    """Z x(b,0) = gamma x(b,c) at every negative critical value with c <= c_max."""
    p = cfg.params
    if p.generic:
        return Check("branching: Z intertwiner", True, "generic parameters: no critical b")
    g = build_dual_pair(p)
    done = []
    bad = []
    for b in cfg.b_range:
        crit = p.a1 - p.a2 + 2 * b - (p.n - 2)
        if crit >= 0 or -crit > cfg.c_max:
            continue
        c = int(-crit)
        try:
            gamma = apply_Z_check(p, b, c, g)
            done.append(f"b={b},c={c},gamma={format_scalar(gamma)}")
        except Exception as exc:  # StructuralError
            bad.append(f"b={b}: {exc}")
    return Check("branching: Z intertwiner", not bad, "; ".join(bad or done))


def check_branching_table(cfg: SuiteConfig) -> Check:
    rep = build_table(cfg.params, cfg.b_range, cfg.c_max, "plain", cfg.depth)
    failed = [e.b for e in rep.entries if not e.passed]
    regimes = ",".join(f"{e.b}:{e.regime}" for e in rep.entries)
    return Check("branching: correspondence table", not failed, f"failing b {failed}" if failed else regimes)


def check_exhaustiveness(cfg: SuiteConfig) -> Check:
    res = exhaustiveness_scan(cfg.params, cfg.box)
    return Check(
        f"branching: exhaustiveness (box {cfg.box})",
        res.passed,
        f"{res.checked} indices, max {res.max_steps} raising steps, {len(res.failures)} failures",
    )


CHECKS: Dict[str, Callable[[SuiteConfig], Check]] = {
    "field_axioms": check_field_axioms,
    "falling_split": check_falling_split,
    "weyl_relations": check_weyl_relations,
    "gl_relations": check_gl_relations,
    "degree_one": check_degree_one,
    "injective_middle": check_injective_middle,
    "admissibility": check_admissibility_preserved,
    "commutant": check_commutant,
    "sl2_triple": check_sl2_triple,
    "chevalley_b": check_chevalley_b,
    "levi_singulars": check_levi_singulars,
    "hwv_oracle": check_hwv_oracle,
    "hwv_structure": check_hwv_structure,
    "lower_annihilation": check_lower_annihilation_grid,
    "sl2_coefficients": check_sl2_coefficients,
    "z_commute": check_z_commute,
    "z_intertwiner": check_z_intertwiner,
    "branching_table": check_branching_table,
    "exhaustiveness": check_exhaustiveness,
}


def run_check(name: str, cfg: SuiteConfig) -> Check:
    return CHECKS[name](cfg)


def run_suite(cfg: SuiteConfig, workers: int = 1, names: Sequence[str] | None = None) -> List[Check]:
    names = list(names or CHECKS)
    if workers <= 1:
        return [run_check(name, cfg) for name in names]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_check, names, [cfg] * len(names)))
