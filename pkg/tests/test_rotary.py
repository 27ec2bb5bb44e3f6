import pytest

from rotamap import (
    Chirality,
    ConstructionError,
    NotPolytopalError,
    Presentation,
    RegularCGroup4,
    RotationGroup3,
    RotationGroup4,
    TorusFamily,
    Word,
    check_polytopal3,
    check_polytopal4,
    classify3,
    classify4,
    enumerate_group,
    euler_genus,
    f_vector3,
    hole_length,
    involution_report,
    is_reflexible3,
    parse_presentation,
    petrie4,
    rotation_subgroup,
    schlafli,
    simplex_presentation,
    torus_map,
    zigzag_length,
)
from oracle import naive_normal_closure

s1, s2, s3 = Word.gen(0), Word.gen(1), Word.gen(2)


@pytest.fixture(scope="module")
def t44_13():
    return torus_map(TorusFamily("44", 1, 3))


@pytest.fixture(scope="module")
def t44_10():
    return torus_map(TorusFamily("44", 1, 0))


@pytest.fixture(scope="module")
def t36_12():
    return torus_map(TorusFamily("36", 1, 2))


class TestPolytopality3:
    def test_degenerate_torus_map(self, t44_10):
        assert check_polytopal3(t44_10) is False

    def test_chiral_torus_map(self, t44_13):
        # oracle: brute-force intersection of the two cyclic subgroups
        rep = t44_13.rep
        c1 = rep.subgroup_closure([s1]).elements
        c2 = rep.subgroup_closure([s2]).elements
        assert c1 & c2 == {0}
        assert check_polytopal3(t44_13) is True


class TestClassify3:
    def test_chiral(self, t44_13):
        assert classify3(t44_13) is Chirality.CHIRAL

    def test_regular_torus_map(self):
        m = torus_map(TorusFamily("44", 2, 0))
        assert classify3(m) is Chirality.REGULAR

    def test_not_polytopal(self, t44_10):
        assert classify3(t44_10) is Chirality.NOT_POLYTOPAL

    def test_reflexible_but_not_polytopal(self, t44_10):
        assert is_reflexible3(t44_10) is True

    def test_verdict_invariant_under_conjugate_generators(self, t44_13):
        rep = t44_13.rep
        g = s1 * s2
        conj = tuple((~g * w * g).reduce() for w in t44_13.sigma)
        assert classify3(RotationGroup3(rep, conj)) is classify3(t44_13)


class TestMetrics3:
    def test_f_vector_degenerate(self, t44_10):
        assert f_vector3(t44_10, diagnostic=True) == (1, 2, 1)
        with pytest.raises(NotPolytopalError):
            f_vector3(t44_10)

    def test_euler_genus_sphere(self):
        # tetrahedron rotation group: order 12, type {3,3}
        pres = parse_presentation(
            "gens s1 s2\nrel s1^3\nrel s2^3\nrel (s1 s2)^2\nsigma s1 s2\n"
        )
        m = RotationGroup3(enumerate_group(pres), pres.distinguished)
        assert m.order == 12
        assert f_vector3(m) == (4, 6, 4)
        assert euler_genus(m) == (2, 0)

    def test_hole_one_is_face_size(self, t44_13, t36_12):
        for m in (t44_13, t36_12):
            assert hole_length(m, 1) == schlafli(m)[0]

    def test_hole_out_of_range(self, t44_13):
        with pytest.raises(ValueError):
            hole_length(t44_13, 3)

    def test_flag_count(self, t44_13, t36_12):
        # the rotation group acts regularly on oriented flags: 2|G| = 4E
        for m in (t44_13, t36_12):
            _, e, _ = f_vector3(m)
            assert 2 * m.order == 4 * e

    def test_schlafli_computed_orders(self, t44_13, t36_12):
        assert schlafli(t44_13) == (4, 4)
        assert schlafli(t36_12) == (3, 6)


class TestInvolutionReport:
    def test_chiral_44_torus_map(self, t44_13):
        r = involution_report(t44_13)
        assert r.n_tau_index == 4
        assert r.group_gen_by_involutions is False
        assert r.prop62_consistent is True
        assert r.n_tau_index * r.n_tau_order == t44_13.order

    def test_chiral_36_torus_map_pinned_by_oracle(self, t36_12):
        r = involution_report(t36_12)
        oracle = naive_normal_closure(t36_12.rep, s1 * s2)
        assert r.n_tau_order == len(oracle)
        assert 3 % r.n_tau_index == 0
        assert r.n_tau_index == 3
        assert r.group_gen_by_involutions is False


def rank4_of_type(p, q, r, extra=()):
    rels = [
        s1 ** p, s2 ** q, s3 ** r,
        (s1 * s2) ** 2, (s2 * s3) ** 2, (s1 * s2 * s3) ** 2,
    ]
    rels.extend(extra)
    pres = Presentation.build(["s1", "s2", "s3"], rels, [s1, s2, s3], "sigma")
    return RotationGroup4(enumerate_group(pres), pres.distinguished)


@pytest.fixture(scope="module")
def rot_333():
    return rank4_of_type(3, 3, 3)


class TestRank4:
    def test_simplex_rotations_polytopal_and_regular(self, rot_333):
        assert rot_333.order == 60
        assert check_polytopal4(rot_333) is True
        assert classify4(rot_333) is Chirality.REGULAR

    def test_collapsed_quotient_not_polytopal(self):
        from rotamap import LocallyToroidalSpec, locally_toroidal_presentation

        pres = locally_toroidal_presentation(
            LocallyToroidalSpec(TorusFamily("44", 1, 3), TorusFamily("44", 1, 3))
        )
        collapsed = enumerate_group(pres.with_relators(s2))
        m = RotationGroup4(collapsed, (s1, s2, s3))
        assert check_polytopal4(m) is False

    def test_petrie_word_identity(self, rot_333):
        # s1s2 * s1s2s3 * s2s3 * s1s2s3 equals the inverse right Petrie
        # element, so its period is the right Petrie length
        rep = rot_333.rep
        w = (s1 * s2) * (s1 * s2 * s3) * (s2 * s3) * (s1 * s2 * s3)
        assert rep.element_order(w.reduce()) == petrie4(rot_333)[1]

    def test_verdict_invariant_under_conjugate_generators(self, rot_333):
        g = s1 * s3
        conj = tuple((~g * w * g).reduce() for w in rot_333.sigma)
        m = RotationGroup4(rot_333.rep, conj)
        assert classify4(m) is Chirality.REGULAR


class TestRegularCGroup:
    def test_simplex_c_group(self):
        pres = simplex_presentation()
        c = RegularCGroup4(enumerate_group(pres), pres.distinguished)
        assert c.order == 120

    def test_intersection_condition_rejects_bad_group(self):
        # involutions with (r0 r2)^2 = 1 etc. but a collapsed core:
        # quotient of the simplex group by extra relations kills the
        # intersection property
        pres = simplex_presentation()
        r0, r1, r2, r3 = (Word.gen(i) for i in range(4))
        bad = pres.with_relators((r0 * r1) ** 2 * (r2 * r3))
        rep = enumerate_group(bad)
        with pytest.raises(ConstructionError):
            RegularCGroup4(rep, pres.distinguished)

    def test_degenerate_rho_collapse_raises(self):
        pres = simplex_presentation().with_relators(Word.gen(0))
        rep = enumerate_group(pres)
        with pytest.raises(ConstructionError):
            RegularCGroup4(rep, pres.distinguished)


class TestRotationSubgroup:
    def test_simplex_rotation_subgroup(self):
        pres = simplex_presentation()
        c = RegularCGroup4(enumerate_group(pres), pres.distinguished)
        m = rotation_subgroup(c)
        assert m.order == 60
        assert classify4(m) is Chirality.REGULAR

    def test_even_relators_force_index_two(self):
        # every simplex relator has even length, so the sign character
        # survives and the rotation subgroup has index exactly 2
        pres = simplex_presentation()
        assert all(len(r) % 2 == 0 for r in pres.relators)
        c = RegularCGroup4(enumerate_group(pres), pres.distinguished)
        assert c.order // rotation_subgroup(c).order == 2


class TestZigzag:
    def test_zigzag_requires_positive_index(self, simplex_pipe):
        with pytest.raises(ValueError):
            zigzag_length(simplex_pipe["map3"], 0)

    def test_petrie_of_simplex_skew_map(self, simplex_pipe):
        m = simplex_pipe["map3"]
        assert zigzag_length(m, 1) == m.rep.element_order(
            (m.rho[0] * m.rho[1] * m.rho[2]).reduce()
        )
