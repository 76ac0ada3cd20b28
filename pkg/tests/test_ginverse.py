import numpy as np
import pytest

from altiter.errors import NotIndexOneError
from altiter.ginverse import (
    group_inverse,
    group_projector_residuals,
    is_ep,
    matrix_index,
    verify_group_axioms,
)
from altiter.kernel import moore_penrose, subspaces_equal
from conftest import canonical_index_one, exact_rank, well_conditioned

NILPOTENT = np.array([[0.0, 1.0], [0.0, 0.0]])


class TestMatrixIndex:
    def test_identity_is_zero(self):
        assert matrix_index(np.eye(3)) == 0

    def test_nilpotent_block_is_two(self):
        # ranks along the powers run 1 -> 0 -> 0
        assert matrix_index(NILPOTENT) == 2

    def test_singular_index_one(self, rng):
        a, _ = canonical_index_one(6, 4, rng)
        assert matrix_index(a) == 1

    def test_index_one_when_rank_stabilizes_immediately(self):
        a = np.array([[3.0, 1, 2], [1, -12, 13], [2, 13, -11]])
        assert exact_rank(a) == exact_rank(a @ a) == 2
        assert matrix_index(a) == 1


class TestGroupInverse:
    def test_identity(self):
        result = group_inverse(np.eye(3))
        np.testing.assert_allclose(result.ginv, np.eye(3), atol=1e-14)
        assert result.index == 0

    def test_nonsingular_equals_inverse_and_pseudoinverse(self, rng):
        a = well_conditioned(5, rng)
        g = group_inverse(a).ginv
        np.testing.assert_allclose(g, np.linalg.inv(a), atol=1e-8)
        np.testing.assert_allclose(g, moore_penrose(a), atol=1e-8)

    def test_not_index_one_raises(self):
        with pytest.raises(NotIndexOneError):
            group_inverse(NILPOTENT)

    def test_axioms_on_random_index_one(self, rng):
        for _ in range(30):
            n = int(rng.integers(2, 9))
            r = int(rng.integers(1, n))
            a, _ = canonical_index_one(n, r, rng)
            result = group_inverse(a)
            assert result.index == 1
            assert verify_group_axioms(a, result.ginv).max() < 1e-8

    def test_matches_construction_reference(self, rng):
        a, reference = canonical_index_one(7, 4, rng)
        g = group_inverse(a).ginv
        np.testing.assert_allclose(g, reference, atol=1e-9)

    def test_shares_range_and_null_space(self, rng):
        a, _ = canonical_index_one(6, 3, rng)
        g = group_inverse(a).ginv
        assert subspaces_equal(a, g, "range")
        assert subspaces_equal(a, g, "null")

    def test_product_is_commuting_projector(self, rng):
        a, _ = canonical_index_one(5, 3, rng)
        g = group_inverse(a).ginv
        commute, idempotent = group_projector_residuals(a, g)
        assert commute < 1e-8 and idempotent < 1e-8


class TestVerifyAxioms:
    def test_identity_pair_is_exact(self):
        residuals = verify_group_axioms(np.eye(3), np.eye(3))
        assert residuals.axa == residuals.xax == residuals.commutator == 0.0

    def test_pseudoinverse_fails_commutation_off_range_symmetry(self, rng):
        # skewed change of basis: pseudoinverse and group inverse differ
        a, _ = canonical_index_one(5, 3, rng, orthogonal=False)
        residuals = verify_group_axioms(a, moore_penrose(a))
        assert residuals.commutator > 1e-4

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            verify_group_axioms(np.eye(2), np.eye(3))


class TestIsEp:
    def test_symmetric_matrix(self):
        a = np.array([[2.0, 1.0], [1.0, 2.0]])
        assert is_ep(a)

    def test_orthogonal_embedding_is_ep_and_matches_pseudoinverse(self, rng):
        a, _ = canonical_index_one(6, 4, rng, orthogonal=True)
        assert is_ep(a)
        np.testing.assert_allclose(
            group_inverse(a).ginv, moore_penrose(a), atol=1e-8
        )

    def test_skewed_embedding_is_not_ep(self, rng):
        a, _ = canonical_index_one(6, 4, rng, orthogonal=False)
        assert not is_ep(a)
