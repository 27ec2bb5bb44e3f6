"""Rotation-group wrappers for maps and rank-4 polytopes.

A rank-3 rotation group ⟨σ1, σ2⟩ with (σ1 σ2)^2 = 1 describes a map on
an orientable surface: σ1 rotates around the base face, σ2 around the
base vertex, and σ1 σ2 is the half-turn about the base edge.  Rank 4
adds σ3 with the relations (σ2 σ3)^2 = (σ1 σ2 σ3)^2 = 1.  The wrappers
hold a finite GroupRep plus the distinguished generator words, which
need not be the presentation generators (mixing constructions produce
maps whose generators are compound words in a larger group).

Polytopality is the intersection condition on the cyclic/dihedral
subgroups; chirality is decided by testing whether the orientation
reversing generator correspondence extends to a group automorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .engine import DEFAULT_CAP, GroupRep, enumerate_group
from .errors import ConstructionError, InconsistencyError, NotPolytopalError
from .words import Presentation, Word


class Chirality(Enum):
    CHIRAL = "chiral"
    REGULAR = "regular"
    NOT_POLYTOPAL = "not-polytopal"

    def __str__(self):
        return self.value


def _check_generates(rep: GroupRep, words, what: str):
    if rep.subgroup_closure(words).size != rep.order:
        raise ConstructionError(f"{what} do not generate the whole group")


def _check_trivial_word(rep: GroupRep, w: Word, what: str):
    if rep.element_of(w) != 0:
        raise ConstructionError(f"{what} does not evaluate to the identity")


class RotationGroup3:
    """A map given by its rotation group and the pair (σ1, σ2)."""

    def __init__(self, rep: GroupRep, sigma):
        s1, s2 = sigma
        self.rep = rep
        self.sigma = (s1, s2)
        _check_trivial_word(rep, (s1 * s2) ** 2, "(sigma1 sigma2)^2")
        _check_generates(rep, self.sigma, "sigma generators")

    @property
    def order(self):
        return self.rep.order

    @property
    def type_pq(self):
        return schlafli(self)


class RotationGroup4:
    """A rank-4 rotation group with distinguished triple (σ1, σ2, σ3)."""

    def __init__(self, rep: GroupRep, sigma):
        s1, s2, s3 = sigma
        self.rep = rep
        self.sigma = (s1, s2, s3)
        _check_trivial_word(rep, (s1 * s2) ** 2, "(sigma1 sigma2)^2")
        _check_trivial_word(rep, (s2 * s3) ** 2, "(sigma2 sigma3)^2")
        _check_trivial_word(rep, (s1 * s2 * s3) ** 2, "(sigma1 sigma2 sigma3)^2")
        _check_generates(rep, self.sigma, "sigma generators")

    @property
    def order(self):
        return self.rep.order

    @property
    def type_pqr(self):
        return schlafli(self)


class RegularCGroup4:
    """A rank-4 string C-group: four involutions ρ0..ρ3 with commuting
    non-adjacent pairs and the full intersection condition."""

    def __init__(self, rep: GroupRep, rho, check_intersection=True):
        r0, r1, r2, r3 = rho
        self.rep = rep
        self.rho = (r0, r1, r2, r3)
        for i, r in enumerate(self.rho):
            if rep.element_order(r) != 2:
                raise ConstructionError(f"rho{i} is not an involution")
        for i in range(4):
            for j in range(i + 2, 4):
                _check_trivial_word(
                    rep, (self.rho[i] * self.rho[j]) ** 2, f"(rho{i} rho{j})^2"
                )
        _check_generates(rep, self.rho, "rho generators")
        if check_intersection and not _c_group_condition(rep, self.rho):
            raise ConstructionError("intersection condition fails")

    @property
    def order(self):
        return self.rep.order


class RegularMap3:
    """A regular map given by its full group and reflections (ρ0, ρ1, ρ2)."""

    def __init__(self, rep: GroupRep, rho):
        r0, r1, r2 = rho
        self.rep = rep
        self.rho = (r0, r1, r2)
        for i, r in enumerate(self.rho):
            if rep.element_order(r) != 2:
                raise ConstructionError(f"rho{i} is not an involution")
        _check_trivial_word(rep, (r0 * r2) ** 2, "(rho0 rho2)^2")
        _check_generates(rep, self.rho, "rho generators")

    @property
    def order(self):
        return self.rep.order

    @property
    def rotations(self):
        r0, r1, r2 = self.rho
        return ((r0 * r1).reduce(), (r1 * r2).reduce())


def _c_group_condition(rep: GroupRep, gens) -> bool:
    """Intersection condition over all pairs of generator subsets."""
    n = len(gens)
    closures = {}
    for mask in range(1 << n):
        sub = [gens[i] for i in range(n) if mask >> i & 1]
        closures[mask] = rep.subgroup_closure(sub).elements
    for a in range(1 << n):
        for b in range(1 << n):
            if closures[a] & closures[b] != closures[a & b]:
                return False
    return True


# -- polytopality and chirality ---------------------------------------------


def check_polytopal3(m: RotationGroup3) -> bool:
    """Rank-3 intersection condition: ⟨σ1⟩ ∩ ⟨σ2⟩ trivial.  Rotations of
    order < 2 are degenerate (a polygon section needs at least 2 edges)."""
    s1, s2 = m.sigma
    if any(o < 2 for o in schlafli(m)):
        return False
    a = m.rep.subgroup_closure([s1]).elements
    b = m.rep.subgroup_closure([s2]).elements
    return a & b == {0}


def check_polytopal4(m: RotationGroup4) -> bool:
    """Rank-4 intersection condition: ⟨σ1,σ2⟩ ∩ ⟨σ2,σ3⟩ = ⟨σ2⟩ and
    ⟨σ1⟩ ∩ ⟨σ2⟩ = {1} = ⟨σ2⟩ ∩ ⟨σ3⟩, plus non-degenerate rotation
    orders (collapsed generators cannot carry polygon sections)."""
    s1, s2, s3 = m.sigma
    rep = m.rep
    if any(o < 2 for o in schlafli(m)):
        return False
    left = rep.subgroup_closure([s1, s2]).elements
    right = rep.subgroup_closure([s2, s3]).elements
    c1 = rep.subgroup_closure([s1]).elements
    c2 = rep.subgroup_closure([s2]).elements
    c3 = rep.subgroup_closure([s3]).elements
    return left & right == c2 and c1 & c2 == {0} and c2 & c3 == {0}


def is_reflexible3(m: RotationGroup3) -> bool:
    """True iff σ1 -> σ1^-1, σ2 -> σ1^2 σ2 extends to an automorphism
    (conjugation by the base-face reflection of the reflexible cover)."""
    s1, s2 = m.sigma
    images = [(~s1).reduce(), (s1 * s1 * s2).reduce()]
    return m.rep.generator_map_automorphism(m.sigma, images) is not None


def is_reflexible4(m: RotationGroup4) -> bool:
    """True iff σ1 -> σ1, σ2 -> σ2 σ3^2, σ3 -> σ3^-1 extends."""
    s1, s2, s3 = m.sigma
    images = [s1, (s2 * s3 * s3).reduce(), (~s3).reduce()]
    return m.rep.generator_map_automorphism(m.sigma, images) is not None


def classify3(m: RotationGroup3) -> Chirality:
    if not check_polytopal3(m):
        return Chirality.NOT_POLYTOPAL
    return Chirality.REGULAR if is_reflexible3(m) else Chirality.CHIRAL


def classify4(m: RotationGroup4) -> Chirality:
    if not check_polytopal4(m):
        return Chirality.NOT_POLYTOPAL
    return Chirality.REGULAR if is_reflexible4(m) else Chirality.CHIRAL


# -- metrical invariants -----------------------------------------------------


def schlafli(m) -> tuple:
    """Actual element orders of the distinguished rotations."""
    return tuple(m.rep.element_order(w) for w in m.sigma)


def f_vector3(m: RotationGroup3, diagnostic: bool = False) -> tuple:
    """(V, E, F) counts from coset indices: vertices are cosets of ⟨σ2⟩,
    faces cosets of ⟨σ1⟩, edges cosets of the edge half-turn."""
    if not diagnostic and not check_polytopal3(m):
        raise NotPolytopalError("map fails the intersection condition")
    s1, s2 = m.sigma
    v = m.order // m.rep.subgroup_closure([s2]).size
    e = m.order // 2
    f = m.order // m.rep.subgroup_closure([s1]).size
    return (v, e, f)


def euler_genus(m: RotationGroup3, diagnostic: bool = False) -> tuple:
    """(Euler characteristic, genus); rotation-group maps are orientable."""
    v, e, f = f_vector3(m, diagnostic=diagnostic)
    chi = v - e + f
    if chi % 2 != 0:
        raise InconsistencyError(f"odd Euler characteristic {chi}")
    return chi, (2 - chi) // 2


def hole_length(m: RotationGroup3, j: int) -> int:
    """Length of the j-holes: the period of σ1 σ2^(1-j)."""
    s1, s2 = m.sigma
    q = m.rep.element_order(s2)
    if not 1 <= j <= max(1, q // 2):
        raise ValueError(f"hole index {j} out of range for valence {q}")
    return m.rep.element_order((s1 * s2 ** (1 - j)).reduce())


def zigzag_length(m: RegularMap3, j: int) -> int:
    """Length of the j-zigzags of a regular map: period of ρ0 (ρ1 ρ2)^j;
    j = 1 gives the Petrie polygons."""
    if j < 1:
        raise ValueError("zigzag index must be >= 1")
    r0, r1, r2 = m.rho
    return m.rep.element_order((r0 * (r1 * r2) ** j).reduce())


def petrie4(m: RotationGroup4) -> tuple:
    """(left, right) Petrie lengths: periods of σ1 σ3 and σ1 σ3^-1."""
    s1, _, s3 = m.sigma
    return (
        m.rep.element_order(s1 * s3),
        m.rep.element_order((s1 * ~s3).reduce()),
    )


@dataclass(frozen=True)
class InvolutionReport:
    """Diagnostics for generation by involutions via the edge half-turn.

    The normal closure N of the half-turn σ1 σ2 has cyclic quotient, so
    a group generated by involutions forces index 1 or 2; that is the
    consistency bit recorded here.
    """

    n_tau_order: int
    n_tau_index: int
    group_gen_by_involutions: bool
    prop62_consistent: bool


def involution_report(m: RotationGroup3) -> InvolutionReport:
    s1, s2 = m.sigma
    n = m.rep.normal_closure((s1 * s2).reduce())
    index = m.order // n.size
    gbi = m.rep.generated_by_involutions()
    return InvolutionReport(
        n_tau_order=n.size,
        n_tau_index=index,
        group_gen_by_involutions=gbi,
        prop62_consistent=not (gbi and index > 2),
    )


# -- aggregate reports --------------------------------------------------------


@dataclass
class MapInvariants:
    schlafli: tuple
    f_vector: tuple
    euler: int
    genus: int | None
    holes: dict
    zigzags: dict | None
    chirality: Chirality


@dataclass
class MapReport:
    group_order: int
    polytopal: bool
    invariants: MapInvariants
    involutions: InvolutionReport | None


def map_invariants3(m: RotationGroup3) -> MapInvariants:
    cls = classify3(m)
    p, q = schlafli(m)
    chi, genus = euler_genus(m, diagnostic=True)
    holes = {j: hole_length(m, j) for j in range(2, q // 2 + 1)}
    return MapInvariants(
        schlafli=(p, q),
        f_vector=f_vector3(m, diagnostic=True),
        euler=chi,
        genus=genus,
        holes=holes,
        zigzags=None,
        chirality=cls,
    )


def map_report3(m: RotationGroup3) -> MapReport:
    return MapReport(
        group_order=m.order,
        polytopal=check_polytopal3(m),
        invariants=map_invariants3(m),
        involutions=involution_report(m),
    )


def map_invariants_regular(m: RegularMap3) -> MapInvariants:
    r0, r1, r2 = m.rho
    rep = m.rep
    p = rep.element_order(r0 * r1)
    q = rep.element_order(r1 * r2)
    v = m.order // rep.subgroup_closure([r1, r2]).size
    e = m.order // rep.subgroup_closure([r0, r2]).size
    f = m.order // rep.subgroup_closure([r0, r1]).size
    chi = v - e + f
    s1, s2 = m.rotations
    orientable = rep.subgroup_closure([s1, s2]).size * 2 == m.order
    genus = None
    if orientable:
        if chi % 2 != 0:
            raise InconsistencyError(f"odd Euler characteristic {chi}")
        genus = (2 - chi) // 2
    holes = {
        j: rep.element_order((s1 * s2 ** (1 - j)).reduce())
        for j in range(2, q // 2 + 1)
    }
    zigzags = {j: zigzag_length(m, j) for j in range(1, max(1, q // 2) + 1)}
    return MapInvariants(
        schlafli=(p, q),
        f_vector=(v, e, f),
        euler=chi,
        genus=genus,
        holes=holes,
        zigzags=zigzags,
        chirality=Chirality.REGULAR,
    )


def map_report_regular(m: RegularMap3) -> MapReport:
    polytopal = _c_group_condition(m.rep, m.rho)
    return MapReport(
        group_order=m.order,
        polytopal=polytopal,
        invariants=map_invariants_regular(m),
        involutions=None,
    )


# -- rotation subgroup of a regular C-group -----------------------------------


def rotation_subgroup(c: RegularCGroup4, cap: int = DEFAULT_CAP) -> RotationGroup4:
    """The subgroup generated by σi = ρ(i-1) ρi, re-enumerated on its own
    presentation (the standard rotation relations at the computed orders).

    The re-enumeration is validated against the subgroup closure inside
    the C-group; a mismatch means the standard relations do not present
    this particular subgroup and is reported as an error.
    """
    r0, r1, r2, r3 = c.rho
    sigma_words = [(r0 * r1).reduce(), (r1 * r2).reduce(), (r2 * r3).reduce()]
    sub = c.rep.subgroup_closure(sigma_words)
    index = c.order // sub.size
    if index not in (1, 2):
        raise ConstructionError(
            f"rotation subgroup has index {index}, expected 1 or 2"
        )
    orders = [c.rep.element_order(w) for w in sigma_words]
    s1, s2, s3 = (Word.gen(i) for i in range(3))
    pres = Presentation.build(
        ["s1", "s2", "s3"],
        [
            s1 ** orders[0],
            s2 ** orders[1],
            s3 ** orders[2],
            (s1 * s2) ** 2,
            (s2 * s3) ** 2,
            (s1 * s2 * s3) ** 2,
        ],
        [s1, s2, s3],
        "sigma",
    )
    rep = enumerate_group(pres, cap=cap)
    if rep.order != sub.size:
        raise ConstructionError(
            f"standard rotation relations present a group of order "
            f"{rep.order}, but the rotation subgroup has order {sub.size}"
        )
    return RotationGroup4(rep, (s1, s2, s3))
