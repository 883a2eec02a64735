import pytest
from hypothesis import given
from hypothesis import strategies as st

from cayleypotts import kernels
from cayleypotts.energy import ball_at, class_of, signature
from cayleypotts.errors import InvalidParamsError
from cayleypotts.families import from_mapping
from cayleypotts.words import ball_size, ball_vertices

value_lists = st.lists(
    st.integers(min_value=0, max_value=9),
    min_size=ball_size(3), max_size=ball_size(3))


def test_backend_constant():
    assert kernels.BACKEND in kernels.available_backends()
    assert "pure" in kernels.available_backends()


@given(value_lists)
def test_backends_agree(values):
    n_centers = ball_size(2)
    pure = kernels.census_classes(values, n_centers, backend="pure")
    default = kernels.census_classes(values, n_centers)
    assert pure == default
    if "compiled" in kernels.available_backends():
        compiled = kernels.census_classes(values, n_centers,
                                          backend="compiled")
        assert pure == compiled


@given(value_lists)
def test_kernel_matches_word_route(values):
    vs = ball_vertices(3)
    table = dict(zip(vs, values))
    cfg = from_mapping(table, "inline", 3)
    classes = kernels.census_classes(values, ball_size(2))
    for w, cls in zip(ball_vertices(2), classes):
        assert cls == class_of(signature(ball_at(cfg.value, w)))


@given(value_lists)
def test_chunked_ranges_agree(values):
    n_centers = ball_size(2)
    full = kernels.census_classes(values, n_centers)
    pieces = []
    for lo in range(0, n_centers, 4):
        hi = min(lo + 4, n_centers)
        pieces.extend(kernels.census_classes(values, n_centers, lo, hi))
    assert pieces == full


def test_validation_errors():
    with pytest.raises(InvalidParamsError):
        kernels.census_classes([1, 2, 3], 1)
    with pytest.raises(InvalidParamsError):
        kernels.census_classes([0] * 17, ball_size(2))
    with pytest.raises(InvalidParamsError):
        kernels.census_classes([0] * 53, 17, start=-1)
    with pytest.raises(InvalidParamsError):
        kernels.census_classes([0] * 53, 17, start=5, stop=3)
    with pytest.raises(InvalidParamsError):
        kernels.census_classes([0] * 53, 17, backend="quantum")


def test_root_only_census():
    # a single center still needs the root plus its four neighbors
    classes = kernels.census_classes([0, 1, 2, 3, 4], 1)
    assert classes == [12]
    classes = kernels.census_classes([7, 7, 7, 7, 7], 1)
    assert classes == [1]
