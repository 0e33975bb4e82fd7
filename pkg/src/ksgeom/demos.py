"""End-to-end contradiction demos.

Both demos build closed derivation traces whose extracted triad systems
admit no two-valued coloring, and they do it without unforced assumptions:
every seed value is discharged by a case split over a tripod, so the
extracted constraints are unconditionally uncolorable (the checker cannot
see assumptions, only tripods and pairs).

The first demo is the re-poling argument: once a ray holds value 1, its
frame forces value 0 below height 1/sqrt(2) and value 1 above, and
re-poling at any p' inside the upper cap produces a witness ray that is
forced to both values. The second demo adds the right-half/left-half
argument: a zeroed ray close to the pole zeroes the right half of its
frame, which forces value 1 on both left-half members of a fixed tripod.
"""

from __future__ import annotations

import math

from .errors import BadN, BadPole, NotInRightHalf
from .plane import Side, side_of
from .sphere import (
    TOL,
    Ray,
    Rotation,
    Tolerance,
    Tripod,
    Vec3,
    canonicalize,
    equator_partner,
    rotation_to_pole,
    third_point,
)
from .trace import DerivationTrace

_R2 = math.sqrt(0.5)

#: Frame tripod used to discharge the "some ray holds value 1" seed: the
#: pole together with two equator axes.
SEED_TRIPOD_VECS: tuple[Vec3, Vec3, Vec3] = ((0.0, 0.0, 1.0), (1.0, 0.0, 0.0), (0.0, 1.0, 0.0))

#: Default frame-relative re-poling target, z = cos(0.3) ~ 0.955.
DEFAULT_POLE_ANGLE = 0.3


def qn_sequence(n: int, tol: Tolerance = TOL) -> Ray:
    """The n-th point of the canonical pole-approaching sequence with x > 0.

    theta_n = 1/n, so q(n) = (sin 1/n, 0, cos 1/n) lies in the {y=0} great
    circle and tends to the north pole.
    """
    if n < 1:
        raise BadN(f"sequence index must be >= 1, got {n}")
    return canonicalize((math.sin(1.0 / n), 0.0, math.cos(1.0 / n)), tol)


def cover_index(p: Ray, tol: Tolerance = TOL) -> int:
    """Smallest n with p strictly beyond the circle of q(n).

    Equivalently the smallest n with tan(1/n) < p_x / p_z; defined exactly
    on the open right half of the northern hemisphere, whose covering by
    those circle regions this realizes.
    """
    if not (p.z > tol.eps and p.x > tol.eps):
        raise NotInRightHalf(f"need p_x > eps and p_z > eps, got {p.vec}")
    ratio = p.x / p.z
    n = max(1, math.floor(1.0 / math.atan(ratio)))
    while side_of(p, qn_sequence(n, tol), tol) is not Side.BEYOND:
        n += 1
    while n > 1 and side_of(p, qn_sequence(n - 1, tol), tol) is Side.BEYOND:
        n -= 1
    return n


def _world(t: DerivationTrace, frame: Rotation | None, vec: Vec3) -> Ray:
    if frame is None:
        return canonicalize(vec, t.tol)
    return canonicalize(frame.transpose().apply(vec), t.tol)


def _completion_in_frame(
    t: DerivationTrace, frame: Rotation | None, vec: Vec3
) -> tuple[Ray, Ray, Ray]:
    """World rays of (q, equator_partner(q), third_point(q)) for frame coords."""
    qf = canonicalize(vec, t.tol)
    return (
        _world(t, frame, qf.vec),
        _world(t, frame, equator_partner(qf, t.tol).vec),
        _world(t, frame, third_point(qf, t.tol).vec),
    )


def _heights_and_clash(
    t: DerivationTrace,
    branch: int,
    pole_fact: int,
    frame: Rotation | None,
    pprime_f: Vec3,
    zero45_fact: int,
) -> None:
    """From a zeroed frame-height-1/sqrt(2) ray, force v(p')=1 and clash.

    Everything below the zeroed height is zeroed through reach chains, so
    p' (above the height) gets 1 through its completion tripod, and so does
    the witness ray. Re-poling at p' then zeroes the witness: contradiction.
    """
    theta = math.acos(pprime_f[2])
    azim = math.hypot(pprime_f[0], pprime_f[1])
    ux, uy = pprime_f[0] / azim, pprime_f[1] / azim

    p1, e_p1, w_p1 = _completion_in_frame(t, frame, pprime_f)
    e_fid = t.orthogonal_zero(branch, e_p1, pole_fact)
    w_fid = t.lemma_zero(branch, zero45_fact, w_p1, pole_fact=pole_fact, frame=frame)
    p1_fid = t.triad_one(branch, Tripod(p1, e_p1, w_p1), e_fid, w_fid)

    # Witness at angle pi/4 - theta/2 from the frame pole, in the plane of
    # the pole and p', on the side away from p': above height 1/sqrt(2) in
    # this frame, below it in the p' frame.
    a = math.pi / 4.0 - theta / 2.0
    wit_f: Vec3 = (-math.sin(a) * ux, -math.sin(a) * uy, math.cos(a))
    wit, e_wit, w_wit = _completion_in_frame(t, frame, wit_f)
    e_wit_fid = t.orthogonal_zero(branch, e_wit, pole_fact)
    w_wit_fid = t.lemma_zero(branch, zero45_fact, w_wit, pole_fact=pole_fact, frame=frame)
    t.triad_one(branch, Tripod(wit, e_wit, w_wit), e_wit_fid, w_wit_fid)

    # Re-pole at p' and run the frame argument there far enough to zero the
    # witness in both sub-branches.
    inner = rotation_to_pole(p1, t.tol)
    e2, u2p, u2m = _frame_axes(t, inner)
    e2_fid = t.orthogonal_zero(branch, e2, p1_fid)
    t2 = Tripod(u2p, u2m, e2)
    b0, b1 = t.split(branch, t2, u2p)

    sibling_zero = t.orthogonal_zero(b1, u2m, t.branches[b1].assumption)
    t.lemma_zero(b1, sibling_zero, wit, pole_fact=p1_fid, frame=inner)

    t.triad_one(b0, t2, e2_fid, t.branches[b0].assumption)
    t.lemma_zero(b0, t.branches[b0].assumption, wit, pole_fact=p1_fid, frame=inner)


def _frame_axes(t: DerivationTrace, frame: Rotation | None) -> tuple[Ray, Ray, Ray]:
    """World rays of the frame's equator axis and the two height-1/sqrt(2) rays."""
    return (
        _world(t, frame, (1.0, 0.0, 0.0)),
        _world(t, frame, (0.0, _R2, _R2)),
        _world(t, frame, (0.0, -_R2, _R2)),
    )


def _pole_refutation(
    t: DerivationTrace,
    branch: int,
    pole_fact: int,
    frame: Rotation | None,
    pprime_f: Vec3,
) -> None:
    """Close a branch holding v(pole)=1 via the re-poling contradiction."""
    e_star, u_plus, u_minus = _frame_axes(t, frame)
    e_fid = t.orthogonal_zero(branch, e_star, pole_fact)
    t2 = Tripod(u_plus, u_minus, e_star)
    b0, b1 = t.split(branch, t2, u_plus)

    # u_plus = 1: the sibling is the zeroed height-1/sqrt(2) ray.
    zero45 = t.orthogonal_zero(b1, u_minus, t.branches[b1].assumption)
    _heights_and_clash(t, b1, pole_fact, frame, pprime_f, zero45)

    # u_plus = 0: explicit third-member 1, then u_plus itself is the zero.
    t.triad_one(b0, t2, e_fid, t.branches[b0].assumption)
    _heights_and_clash(t, b0, pole_fact, frame, pprime_f, t.branches[b0].assumption)


def _seed_split(
    t: DerivationTrace,
) -> list[tuple[int, int, Rotation | None]]:
    """Discharge the global seed: one branch per member of the seed tripod.

    Returns (branch, pole_fact, frame) triples; frame is None for the north
    pole branch (identity) and maps the member to the pole otherwise.
    """
    n_ray, x_ray, y_ray = (canonicalize(v, t.tol) for v in SEED_TRIPOD_VECS)
    t0 = Tripod(n_ray, x_ray, y_ray)
    b_n0, b_n1 = t.split(0, t0, n_ray)
    out: list[tuple[int, int, Rotation | None]] = [
        (b_n1, t.branches[b_n1].assumption, None)
    ]
    b_x0, b_x1 = t.split(b_n0, t0, x_ray)
    out.append((b_x1, t.branches[b_x1].assumption, rotation_to_pole(x_ray, t.tol)))
    y_fid = t.triad_one(
        b_x0, t0, t.branches[b_n0].assumption, t.branches[b_x0].assumption
    )
    out.append((b_x0, y_fid, rotation_to_pole(y_ray, t.tol)))
    return out


def demo_first_proof(p_prime: Ray, tol: Tolerance = TOL) -> DerivationTrace:
    """Closed trace of the re-poling contradiction.

    p_prime is the re-poling target, interpreted in each seed branch's local
    frame; it must lie strictly inside the upper cap, 1/sqrt(2) < z < 1.
    """
    if not (_R2 + tol.eps < p_prime.z < 1.0 - tol.eps):
        raise BadPole(
            f"re-poling target needs 1/sqrt(2) < z < 1, got z={p_prime.z!r}"
        )
    t = DerivationTrace(tol)
    for branch, pole_fact, frame in _seed_split(t):
        _pole_refutation(t, branch, pole_fact, frame, p_prime.vec)
    assert t.closed
    return t


def demo_second_proof(
    tol: Tolerance = TOL, pole_angle: float = DEFAULT_POLE_ANGLE
) -> DerivationTrace:
    """Closed trace of the right-half/left-half contradiction.

    In each seed branch: split on q(n)'s completion tripod, where n is the
    cover index of the fixed tripod's right-half completion points. The
    q(n)=1 branch is closed by the re-poling argument at pole q(n); the
    q(n)=0 branch zeroes the right-half points by reach chains, forces 1 on
    both left-half members of the fixed tripod, and clashes.
    """
    t = DerivationTrace(tol)
    a_f: Vec3 = (-0.5, _R2, 0.5)
    b_f: Vec3 = (-0.5, -_R2, 0.5)
    c_f: Vec3 = (_R2, 0.0, _R2)
    pprime_f: Vec3 = (0.0, math.sin(pole_angle), math.cos(pole_angle))

    for branch, pole_fact, frame in _seed_split(t):
        w_a_frame = third_point(canonicalize(a_f, tol), tol)
        n = cover_index(w_a_frame, tol)
        qn_f = qn_sequence(n, tol).vec

        qn, e_qn, w_qn = _completion_in_frame(t, frame, qn_f)
        e_qn_fid = t.orthogonal_zero(branch, e_qn, pole_fact)
        t_qn = Tripod(qn, e_qn, w_qn)
        b0, b1 = t.split(branch, t_qn, qn)

        # q(n) = 1: that ray is a value-1 pole; the re-poling argument kills it.
        _pole_refutation(
            t, b1, t.branches[b1].assumption, rotation_to_pole(qn, tol), pprime_f
        )

        # q(n) = 0: the right half below its circle is zeroed; the fixed
        # tripod's left-half members both inherit value 1.
        qn_zero = t.branches[b0].assumption
        t.triad_one(b0, t_qn, qn_zero, e_qn_fid)

        a_ray, e_a, w_a = _completion_in_frame(t, frame, a_f)
        b_ray, e_b, w_b = _completion_in_frame(t, frame, b_f)
        c_ray = _world(t, frame, c_f)

        w_a_fid = t.lemma_zero(b0, qn_zero, w_a, pole_fact=pole_fact, frame=frame)
        w_b_fid = t.lemma_zero(b0, qn_zero, w_b, pole_fact=pole_fact, frame=frame)
        t.lemma_zero(b0, qn_zero, c_ray, pole_fact=pole_fact, frame=frame)

        e_a_fid = t.orthogonal_zero(b0, e_a, pole_fact)
        e_b_fid = t.orthogonal_zero(b0, e_b, pole_fact)
        a_fid = t.triad_one(b0, Tripod(a_ray, e_a, w_a), e_a_fid, w_a_fid)
        t.triad_one(b0, Tripod(b_ray, e_b, w_b), e_b_fid, w_b_fid)

        t.register_tripod(Tripod(a_ray, b_ray, c_ray))
        t.orthogonal_zero(b0, b_ray, a_fid)  # clashes with v(b)=1

    assert t.closed
    return t
