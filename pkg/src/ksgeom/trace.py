"""Value-propagation traces for two-valued measures on rays.

A trace is a tree of branches; each branch holds justified facts v(ray) = 0
or 1. The rules are:

  assume           seed or case-split assumption (splits name a tripod and
                   the member being decided, and cover both values)
  orthogonal_zero  a ray orthogonal to a value-1 ray gets 0
  triad_one        two zeroed members of a tripod force 1 on the third
  circle_zero      a point on the circle of a zeroed northern ray gets 0;
                   recorded as its expansion: the equator partner gets 0
                   against the pole fact, the circle pole gets 1 by
                   triad_one, the conclusion gets 0 against that pole
  lemma_zero       a lower northern point gets 0 through a reach
                   certificate, replayed as chained circle_zero steps

Facts are deduplicated per branch scope by subspace equality; deriving the
opposite value of a visible fact records the branch's contradiction pair.
Rules can run conjugated through a frame rotation, which is how "by a
rotation we can assume" steps are mechanized: geometry is computed in frame
coordinates, facts are stored as world-coordinate canonical rays.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    BadPremises,
    NotOnCircle,
    NotOrthogonal,
    OpenBranch,
    PremiseNotOne,
    PremiseNotZero,
)
from .reach import ReachCertificate, reach
from .sphere import (
    NORTH_POLE,
    TOL,
    Ray,
    Rotation,
    Tolerance,
    Tripod,
    Vec3,
    canonicalize,
    circle_of,
    equator_partner,
    third_point,
)
from .system import TriadSystem

RULE_ASSUME = "assume"
RULE_ORTHOGONAL_ZERO = "orthogonal_zero"
RULE_TRIAD_ONE = "triad_one"
RULE_CIRCLE_ZERO = "circle_zero"
RULE_LEMMA_ZERO = "lemma_zero"


@dataclass(frozen=True)
class TriadWitness:
    rays: tuple[int, int, int]


@dataclass(frozen=True)
class CertWitness:
    certificate: ReachCertificate
    frame: Rotation | None  # rotation taking world to certificate coordinates


@dataclass(frozen=True)
class ValueFact:
    ray: int
    value: int
    rule: str
    premises: tuple[int, ...]
    branch: int
    witness: TriadWitness | CertWitness | None = None


@dataclass(frozen=True)
class SplitRecord:
    tripod: tuple[int, int, int]
    member: int


@dataclass
class Branch:
    idx: int
    parent: int | None
    assumption: int | None = None
    split: SplitRecord | None = None
    children: tuple[int, int] | None = None
    contradiction: tuple[int, int] | None = None
    facts_by_ray: dict[int, int] = field(default_factory=dict)


class DerivationTrace:
    """Mutable builder for a branch tree of justified value facts.

    Build single-threaded: fact ids are append order and justifications
    must reference earlier facts. Finished traces are read-only data and
    safe to share.
    """

    def __init__(self, tol: Tolerance = TOL):
        self.tol = tol
        self.rays: list[Ray] = []
        self.facts: list[ValueFact] = []
        self.branches: list[Branch] = [Branch(idx=0, parent=None)]
        self.named_tripods: list[tuple[int, int, int]] = []
        self.active_branch = 0
        self.last_fact: int | None = None
        self._buckets: dict[tuple[int, int, int], list[int]] = {}

    # -- ray table ---------------------------------------------------------

    def ray_index(self, ray: Ray) -> int:
        key = (round(ray.x, 6), round(ray.y, 6), round(ray.z, 6))
        for idx in self._buckets.get(key, ()):
            if self.rays[idx].same_subspace(ray, self.tol):
                return idx
        for idx, known in enumerate(self.rays):  # bucket miss near a rounding edge
            if known.same_subspace(ray, self.tol):
                self._buckets.setdefault(key, []).append(idx)
                return idx
        idx = len(self.rays)
        self.rays.append(ray)
        self._buckets.setdefault(key, []).append(idx)
        return idx

    def tripod_indices(self, trip: Tripod) -> tuple[int, int, int]:
        return (
            self.ray_index(trip.a),
            self.ray_index(trip.b),
            self.ray_index(trip.c),
        )

    # -- branch plumbing ----------------------------------------------------

    def _ancestry(self, branch: int):
        b: int | None = branch
        while b is not None:
            yield b
            b = self.branches[b].parent

    def is_ancestor_or_self(self, maybe_ancestor: int, branch: int) -> bool:
        return any(b == maybe_ancestor for b in self._ancestry(branch))

    def value_fact_in(self, branch: int, ray_idx: int) -> int | None:
        for b in self._ancestry(branch):
            fid = self.branches[b].facts_by_ray.get(ray_idx)
            if fid is not None:
                return fid
        return None

    def leaves(self) -> list[int]:
        return [b.idx for b in self.branches if b.children is None]

    @property
    def closed(self) -> bool:
        return all(self.branches[b].contradiction is not None for b in self.leaves())

    @property
    def contradiction(self) -> tuple[int, int] | None:
        """The first closed leaf's clashing fact pair, if any."""
        for b in self.leaves():
            pair = self.branches[b].contradiction
            if pair is not None:
                return pair
        return None

    def contradictions(self) -> dict[int, tuple[int, int]]:
        return {
            b: self.branches[b].contradiction
            for b in self.leaves()
            if self.branches[b].contradiction is not None
        }

    # -- fact insertion -----------------------------------------------------

    def _add_fact(
        self,
        branch: int,
        ray: Ray,
        value: int,
        rule: str,
        premises: tuple[int, ...],
        witness: TriadWitness | CertWitness | None = None,
    ) -> int:
        for fid in premises:
            if not self.is_ancestor_or_self(self.facts[fid].branch, branch):
                raise BadPremises(
                    f"premise {fid} lives in branch {self.facts[fid].branch}, "
                    f"not visible from branch {branch}"
                )
        ridx = self.ray_index(ray)
        existing = self.value_fact_in(branch, ridx)
        if existing is not None and self.facts[existing].value == value:
            self.last_fact = existing
            return existing
        fid = len(self.facts)
        self.facts.append(
            ValueFact(
                ray=ridx,
                value=value,
                rule=rule,
                premises=premises,
                branch=branch,
                witness=witness,
            )
        )
        if existing is not None:
            node = self.branches[branch]
            if node.contradiction is None:
                node.contradiction = (existing, fid)
        else:
            self.branches[branch].facts_by_ray[ridx] = fid
        self.last_fact = fid
        return fid

    def fact_ray(self, fid: int) -> Ray:
        return self.rays[self.facts[fid].ray]

    # -- rules --------------------------------------------------------------

    def assume(self, branch: int, ray: Ray, value: int) -> int:
        return self._add_fact(branch, ray, value, RULE_ASSUME, ())

    def split(self, branch: int, trip: Tripod, member: Ray) -> tuple[int, int]:
        """Case split on the value of a tripod member: children (=0, =1)."""
        node = self.branches[branch]
        if node.children is not None:
            raise BadPremises(f"branch {branch} already split")
        tri_idx = self.tripod_indices(trip)
        m_idx = self.ray_index(member)
        if m_idx not in tri_idx:
            raise BadPremises("split member must belong to the split tripod")
        node.split = SplitRecord(tripod=tri_idx, member=m_idx)
        kids = []
        for value in (0, 1):
            child = Branch(idx=len(self.branches), parent=branch)
            self.branches.append(child)
            child.assumption = self.assume(child.idx, member, value)
            kids.append(child.idx)
        node.children = (kids[0], kids[1])
        return node.children

    def orthogonal_zero(self, branch: int, p: Ray, one_fact: int) -> int:
        fact = self.facts[one_fact]
        if fact.value != 1:
            raise PremiseNotOne(f"fact {one_fact} does not assign value 1")
        basis = self.rays[fact.ray]
        if not basis.is_orthogonal(p, self.tol):
            raise NotOrthogonal(
                f"|dot| = {abs(basis.dot(p))!r} exceeds eps {self.tol.eps!r}"
            )
        return self._add_fact(branch, p, 0, RULE_ORTHOGONAL_ZERO, (one_fact,))

    def triad_one(self, branch: int, trip: Tripod, zero_a: int, zero_b: int) -> int:
        fa, fb = self.facts[zero_a], self.facts[zero_b]
        if fa.value != 0 or fb.value != 0:
            raise BadPremises("triad_one premises must both assign value 0")
        tri_idx = self.tripod_indices(trip)
        if fa.ray == fb.ray:
            raise BadPremises("triad_one premises cite the same ray")
        if fa.ray not in tri_idx or fb.ray not in tri_idx:
            raise BadPremises("triad_one premises must be members of the tripod")
        third = next(m for m in trip.members if self.ray_index(m) not in (fa.ray, fb.ray))
        return self._add_fact(
            branch,
            third,
            1,
            RULE_TRIAD_ONE,
            (zero_a, zero_b),
            witness=TriadWitness(tri_idx),
        )

    def find_pole_fact(self, branch: int, pole: Ray = NORTH_POLE) -> int:
        for b in self._ancestry(branch):
            for fid in self.branches[b].facts_by_ray.values():
                fact = self.facts[fid]
                if fact.value == 1 and self.rays[fact.ray].same_subspace(pole, self.tol):
                    return fid
        raise BadPremises("no value-1 fact for the frame pole in scope")

    # Frame-conjugated geometry: `frame` rotates world coordinates into the
    # frame whose pole is the value-1 ray of pole_fact.

    def _frame_ray(self, frame: Rotation | None, world: Ray) -> Ray:
        if frame is None:
            return world
        return canonicalize(frame.apply(world.vec), self.tol)

    def _world_ray(self, frame: Rotation | None, vec: Vec3) -> Ray:
        if frame is None:
            return canonicalize(vec, self.tol)
        return canonicalize(frame.transpose().apply(vec), self.tol)

    def _macro_step(
        self,
        branch: int,
        q_fact: int,
        p_world: Ray,
        frame: Rotation | None,
        pole_fact: int,
        rule: str,
        witness: CertWitness | None = None,
    ) -> int:
        """One circle-zero expansion from a zeroed q to a point on its circle."""
        fq = self.facts[q_fact]
        if fq.value != 0:
            raise PremiseNotZero(f"fact {q_fact} does not assign value 0")
        q_world = self.rays[fq.ray]
        qf = self._frame_ray(frame, q_world)
        pf = self._frame_ray(frame, p_world)
        residual = circle_of(qf, self.tol).residual(pf)
        if residual > self.tol.eps:
            raise NotOnCircle(
                f"point is off the circle by {residual!r} (eps {self.tol.eps!r})"
            )
        e_world = self._world_ray(frame, equator_partner(qf, self.tol).vec)
        w_world = self._world_ray(frame, third_point(qf, self.tol).vec)
        e_fid = self.orthogonal_zero(branch, e_world, pole_fact)
        w_fid = self.triad_one(branch, Tripod(q_world, e_world, w_world), q_fact, e_fid)
        return self._add_fact(
            branch, p_world, 0, rule, (q_fact, e_fid, w_fid), witness=witness
        )

    def circle_zero(
        self,
        branch: int,
        q_fact: int,
        p: Ray,
        pole_fact: int | None = None,
        frame: Rotation | None = None,
    ) -> int:
        if pole_fact is None:
            pole_fact = self.find_pole_fact(branch)
        return self._macro_step(branch, q_fact, p, frame, pole_fact, RULE_CIRCLE_ZERO)

    def lemma_zero(
        self,
        branch: int,
        q_fact: int,
        p: Ray,
        pole_fact: int | None = None,
        frame: Rotation | None = None,
    ) -> int:
        """Zero a lower northern point through a reach certificate."""
        if pole_fact is None:
            pole_fact = self.find_pole_fact(branch)
        fq = self.facts[q_fact]
        if fq.value != 0:
            raise PremiseNotZero(f"fact {q_fact} does not assign value 0")
        q_world = self.rays[fq.ray]
        qf = self._frame_ray(frame, q_world)
        pf = self._frame_ray(frame, p)
        cert = reach(qf, pf, self.tol)
        witness = CertWitness(certificate=cert, frame=frame)
        prev = q_fact
        inner = cert.points[1:-1]
        for vec in inner:
            step_world = self._world_ray(frame, vec)
            prev = self._macro_step(
                branch, prev, step_world, frame, pole_fact, RULE_CIRCLE_ZERO
            )
        return self._macro_step(
            branch, prev, p, frame, pole_fact, RULE_LEMMA_ZERO, witness=witness
        )

    def register_tripod(self, trip: Tripod) -> tuple[int, int, int]:
        """Name a tripod for extraction without deriving through it."""
        tri_idx = self.tripod_indices(trip)
        self.named_tripods.append(tri_idx)
        return tri_idx


# -- module-level rule surface (operates on the trace's active branch) ------


def seed_north_pole(tol: Tolerance = TOL) -> DerivationTrace:
    """Fresh trace whose root assumes value 1 on the north pole."""
    t = DerivationTrace(tol)
    t.assume(0, NORTH_POLE, 1)
    return t


def rule_orthogonal_zero(t: DerivationTrace, p: Ray, one_fact: int) -> DerivationTrace:
    t.orthogonal_zero(t.active_branch, p, one_fact)
    return t


def rule_triad_one(
    t: DerivationTrace, trip: Tripod, zero_facts: tuple[int, int]
) -> DerivationTrace:
    t.triad_one(t.active_branch, trip, zero_facts[0], zero_facts[1])
    return t


def rule_circle_zero(t: DerivationTrace, q_fact: int, p: Ray) -> DerivationTrace:
    t.circle_zero(t.active_branch, q_fact, p)
    return t


def rule_lemma_zero(t: DerivationTrace, q_fact: int, p: Ray) -> DerivationTrace:
    t.lemma_zero(t.active_branch, q_fact, p)
    return t


# -- extraction --------------------------------------------------------------


def extract_triad_system(t: DerivationTrace) -> TriadSystem:
    """The finite constraint system a closed trace touches.

    Collects the tripods named by splits, triad_one steps (including the
    circle-zero expansions), and register_tripod, plus every orthogonal pair
    used by a zero-against-one step that is not already inside a collected
    tripod. Rays are reordered so the split-member (decision) rays come
    first; with the solver's static lowest-index branch order this keeps the
    refutation search shallow.
    """
    if not t.closed:
        open_leaves = [b for b in t.leaves() if t.branches[b].contradiction is None]
        raise OpenBranch(f"branches without contradiction: {open_leaves}")

    triads: list[tuple[int, int, int]] = []
    seen_triads: set[frozenset[int]] = set()

    def add_triad(tri: tuple[int, int, int]) -> None:
        key = frozenset(tri)
        if key not in seen_triads:
            seen_triads.add(key)
            triads.append(tuple(sorted(tri)))  # type: ignore[arg-type]

    decision_rays: list[int] = []
    for b in t.branches:
        if b.split is not None:
            add_triad(b.split.tripod)
            if b.split.member not in decision_rays:
                decision_rays.append(b.split.member)
    for fact in t.facts:
        if isinstance(fact.witness, TriadWitness):
            add_triad(fact.witness.rays)
    for tri in t.named_tripods:
        add_triad(tri)

    pairs: list[tuple[int, int]] = []
    seen_pairs: set[tuple[int, int]] = set()
    for fact in t.facts:
        if fact.rule not in (RULE_ORTHOGONAL_ZERO, RULE_CIRCLE_ZERO, RULE_LEMMA_ZERO):
            continue
        one_prem = next(
            (p for p in fact.premises if t.facts[p].value == 1), None
        )
        if one_prem is None:
            continue
        a, b_ = t.facts[one_prem].ray, fact.ray
        key = (min(a, b_), max(a, b_))
        if key in seen_pairs:
            continue
        seen_pairs.add(key)
        if any(a in tri and b_ in tri for tri in seen_triads):
            continue
        pairs.append(key)

    touched: list[int] = []
    touched_set: set[int] = set()

    def touch(idx: int) -> None:
        if idx not in touched_set:
            touched_set.add(idx)
            touched.append(idx)

    for idx in decision_rays:
        touch(idx)
    for tri in triads:
        for idx in tri:
            touch(idx)
    for a, b_ in pairs:
        touch(a)
        touch(b_)

    remap = {old: new for new, old in enumerate(touched)}
    return TriadSystem(
        rays=tuple(t.rays[old] for old in touched),
        triads=tuple(
            tuple(sorted(remap[i] for i in tri)) for tri in triads  # type: ignore[misc]
        ),
        pairs=tuple(
            (min(remap[a], remap[b_]), max(remap[a], remap[b_])) for a, b_ in pairs
        ),
        eps=t.tol.eps,
    )


def decision_core(t: DerivationTrace, system: TriadSystem) -> tuple[int, ...]:
    """System indices of the trace's split-member rays.

    These are the only free choices in the trace's case analysis; every
    other derived value is forced, which is what makes them the right core
    for the naive enumeration cross-check.
    """
    members: list[Ray] = []
    for b in t.branches:
        if b.split is not None:
            ray = t.rays[b.split.member]
            if not any(ray.same_subspace(m, t.tol) for m in members):
                members.append(ray)
    out: list[int] = []
    for m in members:
        for idx, ray in enumerate(system.rays):
            if ray.same_subspace(m, t.tol):
                out.append(idx)
                break
        else:
            raise BadPremises("split member missing from extracted system")
    return tuple(out)
