"""The module N(a1, a2) of sl(2n) realised inside the Weyl-algebra module W(a).

Basis vectors x(b) are indexed by integer offsets from the anchor tuple

    a = (-1, ..., -1, a1, a2, 0, ..., 0)      (n-1 copies of -1 and of 0)

so an index is a plain ``tuple[int, ...]`` of length 2n.  Positions are
1-based in every public function, matching the usual E_{i,j} notation.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .exactnum import Rational, as_scalar, format_scalar, is_integer

Offsets = Tuple[int, ...]
Atom = Tuple[str, int]  # ("q", i) or ("p", j)
Word = Tuple[Atom, ...]


class NotAWeightVector(ValueError):
    pass


@dataclass(frozen=True)
class ModuleParams:
    n: int
    a1: Fraction
    a2: Fraction
    generic: bool = field(init=False)

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        a1 = as_scalar(self.a1)
        a2 = as_scalar(self.a2)
        if is_integer(a1) or is_integer(a2):
            raise ValueError("parameter must be a non-integer rational")
        object.__setattr__(self, "a1", a1)
        object.__setattr__(self, "a2", a2)
        object.__setattr__(self, "generic", not is_integer(a1 - a2))

    @classmethod
    def of(cls, n: int, a1: Rational | str, a2: Rational | str) -> "ModuleParams":
        return cls(n, as_scalar(a1), as_scalar(a2))

    @property
    def m(self) -> int:
        return 2 * self.n

    @property
    def anchor(self) -> Tuple[Fraction, ...]:
        n = self.n
        return (
            (Fraction(-1),) * (n - 1)
            + (self.a1, self.a2)
            + (Fraction(0),) * (n - 1)
        )

    def coords(self, offsets: Offsets) -> Tuple[Fraction, ...]:
        """The tuple b = a + offsets."""
        return tuple(a + o for a, o in zip(self.anchor, offsets))

    def zero_offsets(self) -> Offsets:
        return (0,) * self.m

    def is_negative_slot(self, i: int) -> bool:
        """True when b_i is forced to be a negative integer (i <= n-1)."""
        return i <= self.n - 1

    def is_admissible(self, offsets: Offsets) -> bool:
        n = self.n
        if len(offsets) != 2 * n or sum(offsets) != 0:
            return False
        if any(o > 0 for o in offsets[: n - 1]):
            return False
        return all(o >= 0 for o in offsets[n + 1 :])

    def check_position(self, i: int) -> None:
        if not 1 <= i <= self.m:
            raise IndexError(f"position {i} out of range 1..{self.m}")


# ---------------------------------------------------------------------------
# weight vectors


class WeightVector:
    """Finitely supported combination of basis vectors with exact coefficients.

    Zero coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Dict[Offsets, Fraction]] = None):
        clean: Dict[Offsets, Fraction] = {}
        if terms:
            for k, c in terms.items():
                if c != 0:
                    clean[tuple(k)] = Fraction(c)
        self._terms = clean

    @classmethod
    def basis(cls, offsets: Sequence[int], coeff: Rational = 1) -> "WeightVector":
        return cls({tuple(offsets): Fraction(coeff)})

    @classmethod
    def zero(cls) -> "WeightVector":
        return cls()

    @classmethod
    def _from_clean(cls, terms: Dict[Offsets, Fraction]) -> "WeightVector":
        v = cls.__new__(cls)
        v._terms = terms
        return v

    @property
    def terms(self) -> Dict[Offsets, Fraction]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Offsets, Fraction]]:
        return sorted(self._terms.items())

    def support(self) -> List[Offsets]:
        return sorted(self._terms)

    def coeff(self, offsets: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(offsets), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Offsets, Fraction]]:
        return iter(self.items())

    def __eq__(self, other):
        if isinstance(other, WeightVector):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "WeightVector") -> "WeightVector":
        out = dict(self._terms)
        _accumulate(out, other._terms.items())
        return WeightVector._from_clean(out)

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        return self + (-other)

    def __neg__(self) -> "WeightVector":
        return WeightVector._from_clean({k: -c for k, c in self._terms.items()})

    def scale(self, s: Rational) -> "WeightVector":
        s = Fraction(s)
        if s == 0:
            return WeightVector()
        return WeightVector._from_clean({k: s * c for k, c in self._terms.items()})

    def __rmul__(self, s: Rational) -> "WeightVector":
        return self.scale(s)

    def __mul__(self, s: Rational) -> "WeightVector":
        return self.scale(s)

    def __repr__(self):
        if not self._terms:
            return "WeightVector(0)"
        body = " + ".join(f"{format_scalar(c)}*x{list(k)}" for k, c in self.items())
        return f"WeightVector({body})"

    def to_json(self) -> List[dict]:
        return [{"offsets": list(k), "coeff": format_scalar(c)} for k, c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "WeightVector":
        from .exactnum import parse_rational

        return cls({tuple(d["offsets"]): parse_rational(d["coeff"]) for d in data})


def _accumulate(acc: Dict[Offsets, Fraction], items) -> None:
    for k, c in items:
        s = acc.get(k, 0) + c
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


# ---------------------------------------------------------------------------
# atomic Weyl generators


def _act_atom(params: ModuleParams, atom: Atom, offsets: Offsets):
    """Action of one q_i / p_j on x(b).  Returns (coeff, new offsets) or None."""
    kind, i = atom
    idx = i - 1
    o = offsets[idx]
    if kind == "q":
        if i <= params.n - 1:
            # b_i + 1 with b_i = -1 + o
            c = Fraction(o)
        else:
            c = Fraction(1)
        if c == 0:
            return None
        new = offsets[:idx] + (o + 1,) + offsets[idx + 1 :]
        return c, new
    if kind == "p":
        if i <= params.n - 1:
            c = Fraction(1)
        else:
            c = params.anchor[idx] + o
        if c == 0:
            return None
        new = offsets[:idx] + (o - 1,) + offsets[idx + 1 :]
        return c, new
    raise ValueError(f"unknown generator {kind!r}")


def _act_word(params: ModuleParams, word: Word, offsets: Offsets):
    coeff = Fraction(1)
    cur = offsets
    for atom in reversed(word):
        r = _act_atom(params, atom, cur)
        if r is None:
            return None
        c, cur = r
        coeff *= c
    return coeff, cur


def apply_q(params: ModuleParams, i: int, v: WeightVector) -> WeightVector:
    params.check_position(i)
    return Operator.q(i).apply(params, v)


def apply_p(params: ModuleParams, j: int, v: WeightVector) -> WeightVector:
    params.check_position(j)
    return Operator.p(j).apply(params, v)


def apply_E(params: ModuleParams, i: int, j: int, v: WeightVector) -> WeightVector:
    params.check_position(i)
    params.check_position(j)
    return Operator.E(i, j).apply(params, v)


def weight_of(params: ModuleParams, offsets: Offsets) -> Tuple[Fraction, ...]:
    b = params.coords(offsets)
    return tuple(b[i] - b[i + 1] for i in range(len(b) - 1))


def h_weight(params: ModuleParams, v: WeightVector) -> Tuple[Fraction, ...]:
    """Eigenvalues of H_{alpha_i} = E_ii - E_{i+1,i+1}, i = 1..2n-1."""
    if v.is_zero():
        raise NotAWeightVector("zero vector has no weight")
    weights = {weight_of(params, k) for k in v.support()}
    if len(weights) != 1:
        raise NotAWeightVector("not a weight vector")
    return weights.pop()


# ---------------------------------------------------------------------------
# operators


class Operator:
    """Formal finite sum of words in the q_i, p_j, applied lazily.

    A word (g_1, ..., g_r) stands for the product g_1 g_2 ... g_r, so g_r acts
    first.  Equal words are merged and zero coefficients dropped.
    """

    __slots__ = ("_words",)

    def __init__(self, words: Optional[Dict[Word, Fraction]] = None):
        clean: Dict[Word, Fraction] = {}
        if words:
            for w, c in words.items():
                if c != 0:
                    clean[tuple(w)] = Fraction(c)
        self._words = clean

    @classmethod
    def _from_clean(cls, words: Dict[Word, Fraction]) -> "Operator":
        op = cls.__new__(cls)
        op._words = words
        return op

    @classmethod
    def identity(cls) -> "Operator":
        return cls({(): Fraction(1)})

    @classmethod
    def zero(cls) -> "Operator":
        return cls()

    @classmethod
    def q(cls, i: int) -> "Operator":
        return cls({(("q", i),): Fraction(1)})

    @classmethod
    def p(cls, j: int) -> "Operator":
        return cls({(("p", j),): Fraction(1)})

    @classmethod
    def E(cls, i: int, j: int) -> "Operator":
        """Elementary matrix E_{i,j} realised as q_i p_j."""
        return cls({(("q", i), ("p", j)): Fraction(1)})

    @property
    def words(self) -> List[Tuple[Fraction, Word]]:
        return [(c, w) for w, c in sorted(self._words.items())]

    def is_zero_word_sum(self) -> bool:
        return not self._words

    def __len__(self):
        return len(self._words)

    def __add__(self, other: "Operator") -> "Operator":
        out = dict(self._words)
        _accumulate(out, other._words.items())
        return Operator._from_clean(out)

    def __neg__(self) -> "Operator":
        return Operator._from_clean({w: -c for w, c in self._words.items()})

    def __sub__(self, other: "Operator") -> "Operator":
        return self + (-other)

    def scale(self, s: Rational) -> "Operator":
        s = Fraction(s)
        if s == 0:
            return Operator()
        return Operator._from_clean({w: s * c for w, c in self._words.items()})

    def __rmul__(self, s: Rational) -> "Operator":
        return self.scale(s)

    def __matmul__(self, other: "Operator") -> "Operator":
        """Composition: (self @ other) v = self(other(v))."""
        out: Dict[Word, Fraction] = {}
        for wa, ca in self._words.items():
            for wb, cb in other._words.items():
                _accumulate(out, [(wa + wb, ca * cb)])
        return Operator._from_clean(out)

    def apply(self, params: ModuleParams, v: WeightVector) -> WeightVector:
        out: Dict[Offsets, Fraction] = {}
        terms = v._terms
        for w, cw in self._words.items():
            for k, ck in terms.items():
                r = _act_word(params, w, k)
                if r is None:
                    continue
                c, new = r
                _accumulate(out, [(new, cw * ck * c)])
        return WeightVector._from_clean(out)

    def __call__(self, params: ModuleParams, v: WeightVector) -> WeightVector:
        return self.apply(params, v)

    def __repr__(self):
        if not self._words:
            return "Operator(0)"
        parts = []
        for c, w in self.words:
            name = "".join(f"{g}{i}" for g, i in w) or "1"
            parts.append(f"{format_scalar(c)}*{name}")
        return "Operator(" + " + ".join(parts) + ")"


def op_sum(*ops: Operator) -> Operator:
    out = Operator.zero()
    for op in ops:
        out = out + op
    return out


def op_scale(s: Rational, op: Operator) -> Operator:
    return op.scale(s)


def op_compose(*ops: Operator) -> Operator:
    out = Operator.identity()
    for op in ops:
        out = out @ op
    return out


def op_commutator(a: Operator, b: Operator) -> Operator:
    return a @ b - b @ a


def op_apply(params: ModuleParams, op: Operator, v: WeightVector) -> WeightVector:
    return op.apply(params, v)


# ---------------------------------------------------------------------------
# index enumeration and sampling


def box_indices(params: ModuleParams, box: int) -> List[Offsets]:
    """All admissible offsets with every |offset_i| <= box, lexicographic."""
    n = params.n
    ranges = (
        [range(-box, 1)] * (n - 1)
        + [range(-box, box + 1)] * 2
        + [range(0, box + 1)] * (n - 1)
    )
    out = []
    for head in itertools.product(*ranges[:-1]):
        last = -sum(head)
        if last in ranges[-1]:
            out.append(head + (last,))
    return out


def random_index(params: ModuleParams, rng: random.Random, spread: int = 4) -> Offsets:
    """A random admissible index; slot n absorbs the sum constraint."""
    n = params.n
    offs = []
    for i in range(1, 2 * n + 1):
        if i <= n - 1:
            offs.append(-rng.randint(0, spread))
        elif i in (n, n + 1):
            offs.append(rng.randint(-spread, spread))
        else:
            offs.append(rng.randint(0, spread))
    offs[n - 1] -= sum(offs)
    return tuple(offs)
