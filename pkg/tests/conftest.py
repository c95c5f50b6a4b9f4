import pytest
from hypothesis import strategies as st

from indcomplex.graphs import Graph
from indcomplex.verify import graph_from_edge_mask


@st.composite
def graphs(draw, min_n=0, max_n=8):
    """Random labeled graph as (n, edge mask), decoded through the sweep path."""
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return graph_from_edge_mask(n, mask)


@pytest.fixture
def two_triangles_sharing_a_vertex():
    return Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
