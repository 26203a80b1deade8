"""
Tests for density oracles, supports and generating-polynomial Hessians
"""
import numpy as np
import pytest

from app.core.exceptions import CapExceededError, DensityDocumentError, EmptySupportError
from app.services.densities import (
    DppDensity,
    TableDensity,
    complement_inverse_density,
    dpp_eval,
    graphic_basis_density,
    hessian_at,
    positive_eigenvalue_count,
    uniform_matroid_density,
)

pytestmark = pytest.mark.unit


class TestGraphDensities:

    def test_graphic_basis_masses(self, triangle):
        density = graphic_basis_density(triangle)
        assert (density.n, density.k) == (3, 2)
        assert density.eval([1, 0]) == pytest.approx(2.0)
        assert density.eval({1, 2}) == pytest.approx(6.0)
        assert density.eval([0]) == 0.0
        assert density.eval([0, 5]) == 0.0

    def test_graphic_basis_rejects_cycles(self, k4):
        density = graphic_basis_density(k4)
        assert density.eval([0, 1, 3]) == 0.0
        assert density.eval([0, 1, 2]) == 1.0

    def test_complement_inverse_masses(self, triangle):
        density = complement_inverse_density(triangle)
        assert (density.n, density.k) == (3, 1)
        # complement {2} is the tree {0, 1}
        assert density.eval([2]) == pytest.approx(1 / 3)
        assert density.eval([0]) == pytest.approx(1.0)

    def test_complement_support_matches_tree_count(self, k4):
        density = complement_inverse_density(k4)
        support = density.support()
        assert len(support) == 16
        assert all(len(s) == 3 for s in support)
        assert support == sorted(support)

    def test_tree_shaped_graph(self, path4):
        density = complement_inverse_density(path4)
        assert density.k == 0
        assert density.support() == [()]
        assert density.eval([]) == 1.0


class TestTableDensity:

    def test_support_excludes_zero_entries(self):
        density = TableDensity(4, 2, {(1, 0): 2.0, (2, 3): 0.0, (0, 2): 1.0})
        assert density.support() == [(0, 1), (0, 2)]
        assert density.eval([0, 1]) == 2.0
        assert density.eval([1, 3]) == 0.0

    def test_empty_support(self):
        with pytest.raises(EmptySupportError):
            TableDensity(3, 1, {}).support()

    @pytest.mark.parametrize("entries", [
        {(0,): 1.0},
        {(0, 4): 1.0},
        {(0, 1): -1.0},
        {(0, 1): float("nan")},
    ])
    def test_invalid_entries(self, entries):
        with pytest.raises(ValueError):
            TableDensity(4, 2, entries)

    def test_document_round_trip(self, disjoint_pairs):
        rebuilt = TableDensity.from_document(disjoint_pairs.to_document())
        assert rebuilt.entries == disjoint_pairs.entries

    @pytest.mark.parametrize("document", [
        [],
        {"n": 4, "k": 2},
        {"n": "4", "k": 2, "entries": []},
        {"n": 4, "k": 2, "entries": [[[0, 1]]]},
        {"n": 4, "k": 2, "entries": [[[0, 1], "heavy"]]},
        {"n": 4, "k": 2, "entries": [[[0, 1], 1], [[1, 0], 2]]},
        {"n": 4, "k": 2, "entries": [[[0, 9], 1]]},
    ])
    def test_malformed_documents(self, document):
        with pytest.raises(DensityDocumentError):
            TableDensity.from_document(document)

    def test_uniform_matroid(self, u24):
        assert len(u24.support()) == 6
        assert u24.eval([3, 1]) == 1.0

    def test_scaled_keeps_support(self, u24):
        scaled = u24.scaled(5.0)
        assert scaled.support() == u24.support()
        assert scaled.eval([0, 1]) == 5.0

    def test_support_cap(self):
        with pytest.raises(CapExceededError):
            uniform_matroid_density(10, 5).support(cap=100)


class TestDpp:

    def test_squared_determinant(self, small_dpp):
        assert dpp_eval(small_dpp, [0, 1]) == pytest.approx(1.0)
        assert dpp_eval(small_dpp, [2, 3]) == pytest.approx(9.0)  # det [[1,1],[2,-1]] = -3
        assert small_dpp.eval([0, 2]) == pytest.approx(1.0)

    def test_collinear_vectors_have_zero_mass(self):
        density = DppDensity([[1.0, 2.0], [2.0, 4.0], [0.0, 1.0]])
        assert dpp_eval(density, [0, 1]) == pytest.approx(0.0)
        assert density.support() == [(0, 2), (1, 2)]

    def test_vectors_read_only(self, small_dpp):
        with pytest.raises(ValueError):
            small_dpp.vectors[0, 0] = 5.0

    def test_document(self):
        density = DppDensity.from_document({"k": 2, "vectors": [[1, 0], [0, 1], [1, 1]]})
        assert (density.n, density.k) == (3, 2)

    @pytest.mark.parametrize("document", [
        {"vectors": [[1, 0]]},
        {"k": 2, "vectors": [[1, 0], [0]]},
        {"k": 2, "vectors": [[1, 0]]},
        {"k": True, "vectors": []},
    ])
    def test_malformed_documents(self, document):
        with pytest.raises(DensityDocumentError):
            DppDensity.from_document(document)


class TestHessian:

    def test_disjoint_pairs_has_two_positive_eigenvalues(self, disjoint_pairs):
        hessian = hessian_at(disjoint_pairs, np.ones(4))
        expected = np.array([
            [0, 1, 0, 0],
            [1, 0, 0, 0],
            [0, 0, 0, 1],
            [0, 0, 1, 0],
        ], dtype=float)
        np.testing.assert_allclose(hessian, expected)
        assert positive_eigenvalue_count(hessian) == 2

    def test_uniform_matroid_has_one_positive_eigenvalue(self, u24):
        # all-ones minus identity: eigenvalues 3, -1, -1, -1
        assert positive_eigenvalue_count(hessian_at(u24, np.ones(4))) == 1

    def test_hessian_point_dependence(self):
        density = uniform_matroid_density(3, 3)
        hessian = hessian_at(density, [2.0, 3.0, 5.0])
        assert hessian[0, 1] == pytest.approx(5.0)
        assert hessian[1, 2] == pytest.approx(2.0)
        assert np.all(np.diag(hessian) == 0)

    def test_rank_one_is_zero_matrix(self):
        hessian = hessian_at(uniform_matroid_density(4, 1), np.ones(4))
        assert not hessian.any()
        assert positive_eigenvalue_count(hessian) == 0

    def test_invalid_points(self, u24):
        with pytest.raises(ValueError):
            hessian_at(u24, np.ones(3))
        with pytest.raises(ValueError):
            hessian_at(u24, [1.0, 0.0, 1.0, 1.0])

    def test_dimension_cap(self):
        with pytest.raises(CapExceededError):
            positive_eigenvalue_count(np.eye(5), dimension_cap=4)
