"""Idempotent completion of a ladder category.

Kar objects are pairs (A, e) with e an idempotent endo-ladder of A; simples of
the completion are primitive such pairs up to isomorphism.  End algebras here
are group algebras C[S] of the rung stabilizer S <= Z_p, so the primitive
idempotents are the character projectors

    I_k = (1/|S|) sum_g zeta^(k g) . (rung g),   k indexing characters of S.

Two primitives (A, e), (A', e') are isomorphic iff nonzero absorbed morphisms
u: (A,e) -> (A',e') and v back exist with v after u equal to e; the envelope
stores one canonical representative per class (least base object, least
character index) together with connecting isomorphisms used downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CyclotomicScalar, root_of_unity
from .ladders import LadderCategory, LadderMorphism, LadderObject, object_sort_key


class UnsupportedEndAlgebra(ValueError):
    pass


@dataclass(frozen=True)
class KarObject:
    obj: LadderObject
    idem: LadderMorphism


@dataclass(frozen=True)
class KarSimple:
    class_index: int
    representative: KarObject
    char_index: int  # character index of the representative's idempotent

    def __str__(self):
        return f"{self.representative.obj}#{self.char_index}"


def primitive_idempotents(lad: LadderCategory, obj: LadderObject) -> list[LadderMorphism]:
    """Complete orthogonal set of primitive idempotents of End(obj)."""
    rungs = lad.end_rungs(obj)
    p = lad.p
    if len(rungs) == 1:
        return [lad.identity(obj)]
    if len(rungs) != p:
        raise UnsupportedEndAlgebra(f"rung stabilizer of size {len(rungs)} at p={p}")
    if not lad.end_algebra(obj).is_commutative():
        raise UnsupportedEndAlgebra(f"non-commutative End algebra at {obj}")
    inv_p = Fraction(1, p)
    out = []
    for k in range(p):
        coeffs = {g: root_of_unity(p, k * g).scale(inv_p) for g in range(p)}
        out.append(LadderMorphism(obj, obj, coeffs))
    return out


def proportionality(f: LadderMorphism, g: LadderMorphism) -> CyclotomicScalar | None:
    """The scalar c with f == c*g, if one exists (g nonzero)."""
    if g.is_zero():
        return None
    if f.is_zero():
        return CyclotomicScalar.zero(next(iter(g.coeffs.values())).p)
    if set(f.coeffs) != set(g.coeffs):
        return None
    ratio = None
    for b, gc in g.coeffs.items():
        r = f.coeffs[b] * gc.inv()
        if ratio is None:
            ratio = r
        elif ratio != r:
            return None
    return ratio


def reduce_to_basis(morphisms) -> list[LadderMorphism]:
    """Row-reduce a list of parallel morphisms to a linearly independent basis."""
    pivots: dict[int, LadderMorphism] = {}
    basis = []
    for f in morphisms:
        g = f
        for b in sorted(pivots):
            if b in g.coeffs:
                g = g + pivots[b].scale(-g.coeffs[b])
        if g.is_zero():
            continue
        lead = min(g.coeffs)
        g = g.scale(g.coeffs[lead].inv())
        pivots[lead] = g
        basis.append(g)
    return basis


class KarEnvelope:
    """Simples of Kar(Lad(M, N)) plus the connecting-isomorphism bookkeeping."""

    def __init__(self, lad: LadderCategory):
        self.lad = lad
        self.objects = lad.objects()
        self.prims: dict[LadderObject, list[LadderMorphism]] = {
            obj: primitive_idempotents(lad, obj) for obj in self.objects
        }
        self.simples: list[KarSimple] = []
        self._class_of: dict[tuple[LadderObject, int], int] = {}
        self._to_rep: dict[tuple[LadderObject, int], LadderMorphism] = {}
        self._from_rep: dict[tuple[LadderObject, int], LadderMorphism] = {}
        self._build_classes()

    # -- class construction -------------------------------------------------

    def _components(self) -> list[list[LadderObject]]:
        seen: set[LadderObject] = set()
        comps = []
        for obj in self.objects:
            if obj in seen:
                continue
            comp = {obj}
            frontier = [obj]
            while frontier:
                x = frontier.pop()
                for b in range(self.lad.p):
                    y = self.lad.rung_target(x, b)
                    if y not in comp:
                        comp.add(y)
                        frontier.append(y)
            comp = sorted(comp, key=object_sort_key)
            comps.append(comp)
            seen.update(comp)
        return comps

    def _build_classes(self):
        for comp in self._components():
            base = comp[0]
            base_prims = self.prims[base]
            first_class = len(self.simples)
            for k, e in enumerate(base_prims):
                self.simples.append(KarSimple(first_class + k, KarObject(base, e), k))
            for obj in comp:
                nprims = self.prims[obj]
                if obj == base:
                    for k, e in enumerate(nprims):
                        key = (obj, k)
                        self._class_of[key] = first_class + k
                        self._to_rep[key] = e
                        self._from_rep[key] = e
                    continue
                if len(nprims) != len(base_prims):
                    raise UnsupportedEndAlgebra(
                        f"objects {obj} and {base} in one component have different End dimensions"
                    )
                for k, e in enumerate(nprims):
                    matches = []
                    for j, e0 in enumerate(base_prims):
                        pair = self._try_connect(obj, e, base, e0)
                        if pair is not None:
                            matches.append((j, pair))
                    if len(matches) != 1:
                        raise UnsupportedEndAlgebra(
                            f"primitive {k} on {obj} matched {len(matches)} base classes"
                        )
                    j, (u, v) = matches[0]
                    key = (obj, k)
                    self._class_of[key] = first_class + j
                    self._to_rep[key] = u
                    self._from_rep[key] = v

    def _try_connect(self, obj, e, base, e0):
        """Absorbed isomorphisms u: (obj,e) -> (base,e0) and v back, or None."""
        lad = self.lad
        u = None
        for r in lad.hom_rungs(obj, base):
            cand = lad.compose(lad.compose(e, lad.basic(obj, r)), e0)
            if not cand.is_zero():
                u = cand
                break
        if u is None:
            return None
        for r in lad.hom_rungs(base, obj):
            v = lad.compose(lad.compose(e0, lad.basic(base, r)), e)
            if v.is_zero():
                continue
            lam = proportionality(lad.compose(u, v), e)
            if lam is None or lam.is_zero():
                continue
            v = v.scale(lam.inv())
            return u, v
        return None

    # -- queries --------------------------------------------------------------

    def primitive_index(self, obj: LadderObject, idem: LadderMorphism) -> int:
        for k, e in enumerate(self.prims[obj]):
            if e == idem:
                return k
        raise UnsupportedEndAlgebra(f"idempotent on {obj} is not a stored primitive")

    def anchor(self, kobj: KarObject) -> tuple[KarSimple, LadderMorphism]:
        """Canonical simple isomorphic to kobj and the connecting map to it."""
        k = self.primitive_index(kobj.obj, kobj.idem)
        key = (kobj.obj, k)
        return self.simples[self._class_of[key]], self._to_rep[key]

    def class_of(self, obj: LadderObject, char_index: int) -> int:
        return self._class_of[(obj, char_index)]

    def connectors(self, obj: LadderObject, char_index: int):
        key = (obj, char_index)
        return self._to_rep[key], self._from_rep[key]

    def kar_hom_basis(self, a: KarObject, b: KarObject) -> list[LadderMorphism]:
        lad = self.lad
        images = [
            lad.compose(lad.compose(a.idem, f), b.idem)
            for f in lad.hom_basis(a.obj, b.obj)
        ]
        return reduce_to_basis(images)

    def is_isomorphic(self, a: KarObject, b: KarObject) -> bool:
        lad = self.lad
        for u in self.kar_hom_basis(a, b):
            for v in self.kar_hom_basis(b, a):
                lam = proportionality(lad.compose(u, v), a.idem)
                if lam is not None and not lam.is_zero():
                    return True
        return False


def simples(left, right) -> list[KarSimple]:
    """Simple objects of Kar(Lad(left, right)), one canonical rep per class."""
    return KarEnvelope(LadderCategory(left, right)).simples
