import pytest

from rotamap import (
    Chirality,
    CollapseError,
    ConstructionError,
    DualityKind,
    Presentation,
    RegularCGroup4,
    RotationGroup4,
    Word,
    detect_self_duality,
    enumerate_group,
    extend_improper,
    extend_polarity,
    extend_proper,
    find_polarity,
    rotation_subgroup,
    simplex_presentation,
    substitute,
)
from oracle import naive_is_automorphism

s1, s2, s3 = Word.gen(0), Word.gen(1), Word.gen(2)


def cube_group4():
    """Rotation presentation of the 4-cube {4,3,3}: not self-dual."""
    rels = [
        s1 ** 4, s2 ** 3, s3 ** 3,
        (s1 * s2) ** 2, (s2 * s3) ** 2, (s1 * s2 * s3) ** 2,
    ]
    pres = Presentation.build(["s1", "s2", "s3"], rels, [s1, s2, s3], "sigma")
    return RotationGroup4(enumerate_group(pres), pres.distinguished)


class TestDetection:
    def test_example1_improper(self, ex1_pipe):
        assert detect_self_duality(ex1_pipe.base).kind is DualityKind.IMPROPER

    def test_example3_proper(self, ex3_chain):
        assert detect_self_duality(ex3_chain["base"].base).kind is DualityKind.PROPER

    def test_non_palindromic_type_is_not_self_dual(self):
        m = cube_group4()
        assert m.order == 192
        assert detect_self_duality(m).kind is DualityKind.NONE

    def test_proper_images_fail_on_example1(self, ex1_pipe):
        # independent oracle: element-by-element homomorphism verification
        m = ex1_pipe.base
        images = [(~s3).reduce(), (~s2).reduce(), (~s1).reduce()]
        assert m.rep.extends_to_automorphism(images) is False
        assert naive_is_automorphism(m.rep, images) is False

    def test_improper_images_extend_on_example1(self, ex1_pipe):
        m = ex1_pipe.base
        images = [(~s3).reduce(), (s1 * s2 * ~s1).reduce(), s1]
        assert m.rep.extends_to_automorphism(images) is True

    def test_regular_self_dual_reports_improper_form(self):
        # the regular simplex rotation group admits both duality forms;
        # the period-4 form is reported so the mixing path applies
        pres = simplex_presentation()
        c = RegularCGroup4(enumerate_group(pres), pres.distinguished)
        m = rotation_subgroup(c)
        assert detect_self_duality(m).kind is DualityKind.IMPROPER


class TestExtendImproper:
    def test_example1_doubles(self, ex1_pipe):
        assert ex1_pipe.base.order == 2000
        assert ex1_pipe.ext.order == 4000

    def test_wrong_kind_is_rejected(self, ex3_chain):
        with pytest.raises(ConstructionError):
            extend_improper(ex3_chain["base"].base)

    def test_embedded_subgroup_has_index_two(self, ex1_pipe):
        ext = ex1_pipe.ext
        w1, w2, w3 = ext.embeddings["sigma"]
        assert ext.rep.subgroup_closure([w1, w2, w3]).size * 2 == ext.order

    def test_duality_squares_to_basic_involution(self, ex1_pipe):
        ext = ex1_pipe.ext
        d = ext.duality
        w1, w2, w3 = ext.embeddings["sigma"]
        rep = ext.rep
        assert rep.element_order(d) == 4
        assert rep.element_of(d * d) == rep.element_of(w1 * w2 * w3)

    def test_conjugation_cycle(self, ex1_pipe):
        ext = ex1_pipe.ext
        rep = ext.rep
        d = ext.duality
        w1, w2, w3 = ext.embeddings["sigma"]
        cycle = [
            (w1 * w2).reduce(),
            (w1 * w2 * w3 * ~w1).reduce(),
            (~w3 * w1 * w2 * w3).reduce(),
            (w2 * w3).reduce(),
        ]
        for cur, nxt in zip(cycle, cycle[1:] + cycle[:1]):
            got = rep.element_of((~d * cur * d).reduce())
            assert got == rep.element_of(nxt)

    def test_self_dual_regular_base_doubles(self):
        pres = simplex_presentation()
        c = RegularCGroup4(enumerate_group(pres), pres.distinguished)
        m = rotation_subgroup(c)
        ext = extend_improper(m)
        assert ext.order == 120
        assert ext.base_chirality is Chirality.REGULAR


class TestExtendProper:
    def test_example3_doubles(self, ex3_chain):
        pipe = ex3_chain["base"]
        assert pipe.base.order == 672
        assert pipe.ext.order == 1344

    def test_quotient_doubles(self, ex3_chain):
        pipe = ex3_chain["quotient"]
        assert pipe.base.order == 336
        assert pipe.ext.order == 672

    def test_wrong_kind_is_rejected(self, ex1_pipe):
        with pytest.raises(ConstructionError):
            extend_proper(ex1_pipe.base)

    def test_polarity_is_involution_and_swaps(self, ex3_chain):
        ext = ex3_chain["base"].ext
        rep = ext.rep
        d = ext.duality
        w1, w2, w3 = ext.embeddings["sigma"]
        assert rep.element_order(d) == 2
        got = rep.element_of((d * w1 * w2 * d).reduce())
        assert got == rep.element_of((w2 * w3).reduce())
        fixed = rep.element_of((d * w1 * w2 * w3 * d).reduce())
        assert fixed == rep.element_of((w1 * w2 * w3).reduce())


class TestPolarity:
    def test_simplex_polarity(self, simplex_pipe):
        assert find_polarity(simplex_pipe["cgroup"]).kind is (
            DualityKind.REGULAR_POLARITY
        )

    def test_simplex_extension_order(self, simplex_pipe):
        assert simplex_pipe["ext"].order == 240

    def test_non_self_dual_c_group(self):
        r = [Word.gen(i) for i in range(4)]
        rels = [w ** 2 for w in r]
        rels += [(r[0] * r[1]) ** 4, (r[1] * r[2]) ** 3, (r[2] * r[3]) ** 3]
        rels += [(r[0] * r[2]) ** 2, (r[0] * r[3]) ** 2, (r[1] * r[3]) ** 2]
        pres = Presentation.build(["r0", "r1", "r2", "r3"], rels, r, "rho")
        c = RegularCGroup4(enumerate_group(pres), pres.distinguished)
        assert c.order == 384
        assert find_polarity(c).kind is DualityKind.NONE
        with pytest.raises(ConstructionError):
            extend_polarity(c)

    def test_period_four_duality_action(self, simplex_pipe):
        # delta = w r0 conjugates r1 to r2
        ext = simplex_pipe["ext"]
        rep = ext.rep
        r0, r1, r2, r3 = ext.embeddings["rho"]
        delta = (ext.duality * r0).reduce()
        assert rep.element_order(delta) == 4
        got = rep.element_of((~delta * r1 * delta).reduce())
        assert got == rep.element_of(r2)


class TestWitnessComposition:
    def test_improper_witness_squares_to_inner(self, ex1_pipe):
        # substituting the witness into itself realises conjugation by
        # the basic involution, which certainly extends
        m = ex1_pipe.base
        witness = detect_self_duality(m).witness
        squared = [substitute(w, witness) for w in witness]
        assert m.rep.extends_to_automorphism(squared) is True
