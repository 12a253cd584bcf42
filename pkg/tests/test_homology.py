"""Chain complexes, Smith normal form, and exact integer homology."""

import random

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from partition_complex.cliques import maximal_simplices
from partition_complex.graph import build_graph
from partition_complex.homology import (
    EmptyComplexError,
    build_chain_complex,
    reduced_homology,
    smith_normal_form,
)


def test_snf_edge_cases():
    assert smith_normal_form([]) == (0, ())
    assert smith_normal_form([[0, 0], [0, 0]]) == (0, ())
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == (3, ())


def test_snf_known_factors():
    # d1 = gcd of all entries = 2, d1*d2 = |det| = 8.
    assert smith_normal_form([[2, 4], [6, 8]]) == (2, (2, 4))
    # Diagonal entries must be rearranged into divisibility order.
    assert smith_normal_form([[2, 0], [0, 3]]) == (2, (6,))
    assert smith_normal_form([[4, 0], [0, 6]]) == (2, (2, 12))


def _sympy_rank_and_factors(rows):
    matrix = sympy.Matrix(rows)
    rank = matrix.rank()
    diagonal = sympy_snf(matrix, domain=sympy.ZZ)
    factors = []
    for i in range(min(diagonal.rows, diagonal.cols)):
        value = abs(int(diagonal[i, i]))
        if value > 1:
            factors.append(value)
    return rank, tuple(sorted(factors))


def test_snf_matches_sympy_on_random_matrices():
    rng = random.Random(20260817)
    for _ in range(40):
        rows = rng.randrange(1, 6)
        cols = rng.randrange(1, 6)
        matrix = [[rng.randrange(-6, 7) for _ in range(cols)] for _ in range(rows)]
        rank, factors = smith_normal_form(matrix)
        expected_rank, expected_factors = _sympy_rank_and_factors(matrix)
        assert rank == expected_rank
        assert tuple(sorted(factors)) == expected_factors


def test_chain_complex_single_triangle():
    cplx = build_chain_complex([(0, 1, 2)])
    assert cplx.fvector == (3, 3, 1)
    assert cplx.euler_characteristic == 1
    assert cplx.dimension == 2


def test_chain_complex_rejects_bad_input():
    with pytest.raises(EmptyComplexError):
        build_chain_complex([])
    with pytest.raises(ValueError):
        build_chain_complex([(0, 0, 1)])


def test_chain_complex_from_partition_facets():
    cplx = build_chain_complex(maximal_simplices(build_graph(4)))
    assert cplx.fvector == (5, 5, 1)
    # Boundary composition to zero is asserted inside the builder; n <= 10
    # complexes building cleanly is itself the check.
    for n in range(1, 11):
        build_chain_complex(maximal_simplices(build_graph(n)))


def test_circle():
    report = reduced_homology(build_chain_complex([(0, 1), (1, 2), (0, 2)]))
    assert report.reduced_betti == (0, 1)
    assert report.torsion == ((), ())


def test_sphere_as_tetrahedron_boundary():
    facets = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    report = reduced_homology(build_chain_complex(facets))
    assert report.reduced_betti == (0, 0, 1)
    assert report.torsion == ((), (), ())
    assert report.summary() == "reduced homology: H~2=Z; euler characteristic 2"


# Antipodal quotient of the icosahedron: 6 vertices, 15 edges, 10 triangles;
# the unique closed surface with euler characteristic 1.
PROJECTIVE_PLANE = [
    (1, 2, 3), (1, 3, 4), (1, 2, 6), (1, 4, 5), (1, 5, 6),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
]

# Vertex-minimal 7-vertex torus.
TORUS = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)] + [
    (i, (i + 2) % 7, (i + 3) % 7) for i in range(7)]


def klein_bottle_facets():
    """4x4 grid torus construction with one gluing reversed."""

    def vid(i, j):
        if j >= 4:
            j -= 4
            i = (4 - i) % 4
        return 4 * (i % 4) + j

    facets = []
    for i in range(4):
        for j in range(4):
            facets.append((vid(i, j), vid(i + 1, j), vid(i, j + 1)))
            facets.append((vid(i + 1, j), vid(i, j + 1), vid(i + 1, j + 1)))
    return facets


def _assert_closed_surface(cplx):
    incidence = {}
    for column in cplx.boundaries[2]:
        for edge_index in column:
            incidence[edge_index] = incidence.get(edge_index, 0) + 1
    assert len(incidence) == len(cplx.basis[1])
    assert all(count == 2 for count in incidence.values())


def test_projective_plane_has_two_torsion():
    cplx = build_chain_complex(PROJECTIVE_PLANE)
    assert cplx.fvector == (6, 15, 10)
    _assert_closed_surface(cplx)
    report = reduced_homology(cplx)
    assert report.reduced_betti == (0, 0, 0)
    assert report.torsion == ((), (2,), ())
    assert "H~1=Z/2" in report.summary()


def test_torus():
    cplx = build_chain_complex(TORUS)
    assert cplx.fvector == (7, 21, 14)
    _assert_closed_surface(cplx)
    report = reduced_homology(cplx)
    assert report.betti == (1, 2, 1)
    assert report.torsion == ((), (), ())


def test_klein_bottle():
    cplx = build_chain_complex(klein_bottle_facets())
    assert cplx.fvector == (16, 48, 32)
    _assert_closed_surface(cplx)
    report = reduced_homology(cplx)
    assert report.reduced_betti == (0, 1, 0)
    assert report.torsion == ((), (2,), ())
    assert "H~1=Z+Z/2" in report.summary()


def partition_homology(n):
    return reduced_homology(build_chain_complex(maximal_simplices(build_graph(n))))


def test_contractible_at_7():
    report = partition_homology(7)
    assert all(b == 0 for b in report.reduced_betti)
    assert all(t == () for t in report.torsion)


def test_single_sphere_at_8():
    report = partition_homology(8)
    assert report.betti == (1, 0, 1, 0)
    assert report.reduced_betti == (0, 0, 1, 0)
    assert report.torsion == ((), (), (), ())


def test_five_spheres_at_10():
    report = partition_homology(10)
    assert report.reduced_betti[2] == 5
    assert all(t == () for t in report.torsion)
    assert report.summary() == "reduced homology: H~2=Z^5; euler characteristic 6"


def test_report_json_shape():
    report = partition_homology(9)
    payload = report.to_json_dict()
    assert payload["dimensions"]["2"] == {"betti": 2, "torsion": []}
    assert payload["reduced_betti"] == [0, 0, 2, 0]
    assert payload["euler_characteristic"] == 3
    assert payload["reduced_euler_characteristic"] == 2
    # The alternating unreduced betti sum must recover chi.
    alternating = sum(
        (-1) ** p * payload["dimensions"][str(p)]["betti"]
        for p in range(len(payload["reduced_betti"])))
    assert alternating == payload["euler_characteristic"]
