import pytest

from graycat import fixtures, functors, mapspace, transfors


@pytest.fixture(scope="session")
def bc():
    return fixtures.bc2()


@pytest.fixture(scope="session")
def bc_zero():
    return fixtures.bc2(nontrivial=False)


@pytest.fixture(scope="session")
def bc_four():
    return fixtures.bc4()


@pytest.fixture(scope="session")
def one():
    return fixtures.terminal_category()


@pytest.fixture(scope="session")
def w1():
    return fixtures.build_walking(1)


@pytest.fixture(scope="session")
def wpair():
    return fixtures.walking_pair()


@pytest.fixture(scope="session")
def wtriple():
    return fixtures.walking_triple()


@pytest.fixture(scope="session")
def bc_endos(bc):
    """The two endofunctors of the nontrivial bicharacter category:
    index 0 collapses the 2-cell group, index 1 is the identity."""
    return functors.enumerate_functors(bc, bc)


@pytest.fixture(scope="session")
def bc_transf(bc_endos):
    """The two endo-transformations of the identity functor (labelled by the
    zero and identity homomorphisms)."""
    return transfors.enumerate_pstransf(bc_endos[1], bc_endos[1])


@pytest.fixture(scope="session")
def space_one_bc(one, bc):
    return mapspace.build_mapping_space(one, bc)


@pytest.fixture(scope="session")
def space_w1_bc(w1, bc):
    return mapspace.build_mapping_space(w1, bc)


@pytest.fixture(scope="session")
def space_bc_bc(bc):
    return mapspace.build_mapping_space(bc, bc)


def bc_label(cell_id):
    """Split a bicharacter cell id into its (A, U) integer labels."""
    if cell_id.startswith("a") and "u" in cell_id:
        a, u = cell_id[1:].split("u")
        return tuple(int(t) for t in a.split("_")), tuple(int(t) for t in u.split("_"))
    if cell_id.startswith("a"):
        return tuple(int(t) for t in cell_id[1:].split("_")), None
    raise ValueError(cell_id)
