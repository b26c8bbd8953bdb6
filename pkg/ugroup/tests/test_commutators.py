from ugroup.commutators import commutator_decomposition, is_elementary_abelian
from ugroup.matrix import UnipotentMatrix, commutator, standard_generators


class TestCommutatorDecomposition:
    def test_u4(self):
        phi, basis = commutator_decomposition(4)
        assert len(phi) == 8
        assert is_elementary_abelian(phi)
        s1, s2, s3 = standard_generators(4)
        assert basis == (commutator(s1, s2), commutator(s2, s3), commutator(commutator(s1, s2), s3))

    def test_u3(self):
        phi, basis = commutator_decomposition(3)
        assert len(phi) == 2
        assert basis == (UnipotentMatrix.elementary(1, 3, 3),)

    def test_iterated_commutator_nontrivial(self):
        s1, s2, s3 = standard_generators(4)
        assert not commutator(commutator(s2, s3), s1).is_identity
