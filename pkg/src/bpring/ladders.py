"""The ladder category Lad(M, N) of a pair of bimodules over one middle Vec(Z_p).

Objects are pairs (m, n) of simples.  The morphism space from (m, n) to (x, y)
has one basis element per admissible rung b in Z_p, where admissibility means

    m == x < b        (left leg:  a vertex in M(m, x . b))
    y == b > n        (right leg: a vertex in N(b . n, y))

so each object has exactly p outgoing basic ladders, one per rung, and the
rung-b target map  (m, n) -> (m < -b, b > n)  is a Z_p action on objects.

Stacking the rung-b1 ladder under the rung-b2 ladder fuses to the rung b1+b2
with the bubble-popping coefficient

    right_assoc_M(top.m, b2, b1) * left_assoc_N(b2, b1, bottom.n),

which is 1 for every catalogue bimodule (their pure associators are trivial).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bimodules import BimoduleData
from .cyclotomic import CyclotomicScalar


class CompositionError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LadderObject:
    m: object
    n: object

    def __str__(self):
        return f"({_fmt(self.m)})({_fmt(self.n)})"


def _fmt(label) -> str:
    if isinstance(label, tuple):
        return ",".join(str(x) for x in label)
    return str(label)


def object_sort_key(obj: LadderObject):
    """Canonical object order: right leg first, then left leg.

    This makes the least member of each isomorphism class the one whose right
    leg is normalised, e.g. (a,b)(0,c) in Lad(T,T) and (a)(0) in Lad(X,X).
    """
    return (_label_key(obj.n), _label_key(obj.m))


def _label_key(label):
    if isinstance(label, tuple):
        return label
    if isinstance(label, int):
        return (label,)
    return ()


class LadderMorphism:
    """A linear combination of basic ladders between two fixed objects."""

    __slots__ = ("source", "target", "coeffs")

    def __init__(self, source: LadderObject, target: LadderObject, coeffs: dict):
        self.source = source
        self.target = target
        self.coeffs = {b: c for b, c in coeffs.items() if not c.is_zero()}

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def scale(self, factor) -> "LadderMorphism":
        return LadderMorphism(self.source, self.target, {b: c * factor for b, c in self.coeffs.items()})

    def __add__(self, other: "LadderMorphism") -> "LadderMorphism":
        if self.source != other.source or self.target != other.target:
            raise CompositionError("cannot add morphisms between different objects")
        coeffs = dict(self.coeffs)
        for b, c in other.coeffs.items():
            coeffs[b] = coeffs[b] + c if b in coeffs else c
        return LadderMorphism(self.source, self.target, coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LadderMorphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.source, self.target, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        terms = " + ".join(f"{c}.[rung {b}]" for b, c in sorted(self.coeffs.items())) or "0"
        return f"Ladder({self.source} -> {self.target}: {terms})"


@dataclass
class EndAlgebra:
    """Structure constants of End(obj) on the admissible-rung basis."""

    rungs: tuple[int, ...]
    table: dict  # (b1, b2) -> LadderMorphism

    @property
    def dimension(self) -> int:
        return len(self.rungs)

    def is_commutative(self) -> bool:
        return all(self.table[(a, b)] == self.table[(b, a)] for a in self.rungs for b in self.rungs)


class LadderCategory:
    """Lad(M, N) for bimodules M, N over the same prime p."""

    def __init__(self, left: BimoduleData, right: BimoduleData):
        if left.p != right.p:
            raise ValueError(f"mismatched primes {left.p} and {right.p}")
        self.M = left
        self.N = right
        self.p = left.p

    def objects(self) -> list[LadderObject]:
        objs = [LadderObject(m, n) for m in self.M.simples for n in self.N.simples]
        objs.sort(key=object_sort_key)
        return objs

    def rung_target(self, obj: LadderObject, b: int) -> LadderObject:
        """Target of the basic rung-b ladder out of obj."""
        p = self.p
        return LadderObject(self.M.right(obj.m, (-b) % p), self.N.left(b, obj.n))

    def hom_rungs(self, src: LadderObject, tgt: LadderObject) -> list[int]:
        return [b for b in range(self.p) if self.rung_target(src, b) == tgt]

    def hom_basis(self, src: LadderObject, tgt: LadderObject) -> list[LadderMorphism]:
        one = CyclotomicScalar.one(self.p)
        return [LadderMorphism(src, tgt, {b: one}) for b in self.hom_rungs(src, tgt)]

    def basic(self, src: LadderObject, b: int) -> LadderMorphism:
        return LadderMorphism(src, self.rung_target(src, b), {b: CyclotomicScalar.one(self.p)})

    def identity(self, obj: LadderObject) -> LadderMorphism:
        return LadderMorphism(obj, obj, {0: CyclotomicScalar.one(self.p)})

    def zero(self, src: LadderObject, tgt: LadderObject) -> LadderMorphism:
        return LadderMorphism(src, tgt, {})

    def compose(self, f: LadderMorphism, g: LadderMorphism) -> LadderMorphism:
        """f followed by g (f is stacked under g)."""
        if f.target != g.source:
            raise CompositionError(f"cannot stack {g.source} on top of {f.target}")
        p = self.p
        coeffs: dict[int, CyclotomicScalar] = {}
        for b1, c1 in f.coeffs.items():
            for b2, c2 in g.coeffs.items():
                b = (b1 + b2) % p
                c = c1 * c2 * self.M.right_assoc(g.target.m, b2, b1) * self.N.left_assoc(b2, b1, f.source.n)
                coeffs[b] = coeffs[b] + c if b in coeffs else c
        return LadderMorphism(f.source, g.target, coeffs)

    def end_rungs(self, obj: LadderObject) -> tuple[int, ...]:
        """Rung stabilizer of obj; a subgroup of Z_p, so size 1 or p."""
        return tuple(b for b in range(self.p) if self.rung_target(obj, b) == obj)

    def end_algebra(self, obj: LadderObject) -> EndAlgebra:
        rungs = self.end_rungs(obj)
        one = CyclotomicScalar.one(self.p)
        table = {}
        for b1 in rungs:
            fb1 = LadderMorphism(obj, obj, {b1: one})
            for b2 in rungs:
                fb2 = LadderMorphism(obj, obj, {b2: one})
                table[(b1, b2)] = self.compose(fb1, fb2)
        return EndAlgebra(rungs, table)
