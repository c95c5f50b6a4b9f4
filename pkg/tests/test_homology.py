"""Smith normal form and reduced integral homology oracles."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from indcomplex.complexes import SimplicialComplex
from indcomplex.homology import (BettiVector, FACE_COUNT_CAP, HomologyClass,
                                 _INT64_GUARD, is_sphere_like,
                                 matrix_rank_exact, reduced_betti_from_masks,
                                 snf_diagonal)

# the minimal 6-vertex triangulation of the real projective plane
RP2_FACETS = [
    {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
    {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5},
]


class TestSNF:
    def test_simple_diagonals(self):
        assert snf_diagonal(np.zeros((3, 3), dtype=np.int64)) == []
        assert snf_diagonal(np.eye(3, dtype=np.int64)) == [1, 1, 1]
        assert sorted(snf_diagonal(np.diag([2, 6]))) == [2, 6]
        assert snf_diagonal(np.array([[0, 0], [0, 5]])) == [5]

    def test_rank_deficient(self):
        mat = np.array([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
        assert matrix_rank_exact(mat) == 2

    def test_torsion_entry(self):
        # cokernel of [[2, 0], [0, 1]] has a Z/2 summand
        diag = snf_diagonal(np.array([[2, 0], [0, 1]]))
        assert sorted(diag) == [1, 2]

    def test_empty_matrix(self):
        assert snf_diagonal(np.zeros((0, 5), dtype=np.int64)) == []

    def test_bigint_escalation(self):
        big = 1 << 40
        diag = snf_diagonal(np.array([[big, 0], [0, 3]], dtype=object))
        assert sorted(diag) == [3, big]

    def test_guard_is_conservative(self):
        # entries just below the guard still go through the int64 path
        mat = np.diag([int(_INT64_GUARD - 1), 2]).astype(np.int64)
        assert sorted(snf_diagonal(mat)) == [2, _INT64_GUARD - 1]

    @settings(max_examples=80, deadline=None)
    @given(arrays(np.int64, st.tuples(st.integers(1, 5), st.integers(1, 5)),
                  elements=st.integers(-30, 30)))
    def test_rank_matches_float_rank(self, mat):
        assert matrix_rank_exact(mat) == np.linalg.matrix_rank(
            mat.astype(np.float64))

    @settings(max_examples=80, deadline=None)
    @given(arrays(np.int64, st.tuples(st.integers(1, 4), st.integers(1, 4)),
                  elements=st.integers(-9, 9)))
    def test_determinant_preserved_up_to_sign(self, mat):
        if mat.shape[0] != mat.shape[1]:
            return
        det = round(np.linalg.det(mat.astype(np.float64)))
        diag = snf_diagonal(mat)
        prod = 1
        for d in diag:
            prod *= d
        if len(diag) < mat.shape[0]:
            prod = 0
        assert prod == abs(det)


class TestBettiVector:
    def test_indexing_from_dimension_minus_one(self):
        bv = BettiVector((1, 0, 2), (False, True, False))
        assert bv.betti_in(-1) == 1
        assert bv.betti_in(1) == 2
        assert bv.betti_in(5) == 0
        assert bv.torsion_in(0) and not bv.torsion_in(1)
        assert bv.has_torsion

    def test_chi_and_total(self):
        bv = BettiVector((0, 1, 2), (False, False, False))
        # chi-tilde = -b(-1) + b0 - b1 ... sign flips from dimension parity
        assert bv.chi == 1 - 2
        assert bv.total == 3
        assert isinstance(bv.chi, int)

    def test_nonzero_and_dict(self):
        bv = BettiVector((0, 0, 1), (False, False, True))
        assert bv.nonzero() == [(1, 1)]
        d = bv.to_dict()
        assert d["betti"] == {"1": 1}
        assert d["torsion_dimensions"] == [1]

    def test_classification(self):
        assert is_sphere_like(BettiVector((), ())).kind == "trivial"
        assert is_sphere_like(BettiVector((0, 0, 1), (False,) * 3)) == \
            HomologyClass("sphere", 1)
        assert is_sphere_like(BettiVector((0, 2), (False, False))).kind == "other"
        assert is_sphere_like(BettiVector((0, 0), (False, True))).kind == "other"


class TestReducedHomology:
    def test_void_complex(self):
        bv = reduced_betti_from_masks([])
        assert bv.betti == () and bv.chi == 0

    def test_empty_complex_is_minus_one_sphere(self):
        bv = reduced_betti_from_masks([0])
        assert bv.betti_in(-1) == 1 and bv.total == 1
        assert bv.chi == -1

    def test_point_is_trivial(self):
        bv = reduced_betti_from_masks([0, 1])
        assert bv.total == 0 and bv.chi == 0

    def test_two_points_are_a_zero_sphere(self):
        bv = reduced_betti_from_masks([0, 0b01, 0b10])
        assert is_sphere_like(bv) == HomologyClass("sphere", 0)

    def test_boundary_of_tetrahedron_is_a_two_sphere(self):
        faces = [m for m in range(16) if m != 0b1111]
        bv = reduced_betti_from_masks(faces)
        assert is_sphere_like(bv) == HomologyClass("sphere", 2)
        assert bv.chi == 1

    def test_missing_empty_face_rejected(self):
        with pytest.raises(ValueError):
            reduced_betti_from_masks([0b1])

    def test_projective_plane_torsion(self):
        bv = SimplicialComplex.from_facets(RP2_FACETS).betti_vector()
        assert bv.total == 0
        assert bv.torsion_in(1) and not bv.torsion_in(0)
        assert bv.chi == 0
        assert is_sphere_like(bv).kind == "other"

    def test_torus(self):
        # the 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
        facets = [{i % 7, (i + 1) % 7, (i + 3) % 7} for i in range(7)]
        facets += [{i % 7, (i + 2) % 7, (i + 3) % 7} for i in range(7)]
        bv = SimplicialComplex.from_facets(facets).betti_vector()
        assert dict(bv.nonzero()) == {1: 2, 2: 1}
        assert not bv.has_torsion

    def test_face_count_cap(self):
        with pytest.raises(ValueError):
            reduced_betti_from_masks(iter(range(FACE_COUNT_CAP + 2)))
