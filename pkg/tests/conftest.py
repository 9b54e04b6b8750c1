import warnings

import pytest

import contlie as cl


@pytest.fixture
def chi1():
    return cl.GenSymbol("chi", 1)


@pytest.fixture
def phi1():
    return cl.GenSymbol("phi", 1)


@pytest.fixture
def chain_tree(chi1, phi1):
    return cl.derive_tree(cl.CHAIN, chi1, phi1, depth_cap=1)


@pytest.fixture
def gv_tree():
    return cl.derive_gv_tree()


@pytest.fixture
def gv():
    return cl.godbillon_vey(cl.CECH_DE_RHAM, 1, 1)


@pytest.fixture
def E8():
    return cl.DiscreteE(8)


@pytest.fixture
def sl2(E8):
    return cl.sl2_kernels(E8)


@pytest.fixture
def generic_tree():
    # both branches pruned at the root: chi in C^{1,0}, phi in C^{0,2}
    chi = cl.GenSymbol("chi", (1, 0))
    phi = cl.GenSymbol("phi", (0, 2))
    return cl.derive_tree(cl.CECH_DE_RHAM, chi, phi, depth_cap=1)


@pytest.fixture
def small_trees():
    # chain and bicomplex seeds at every depth cap up to 4
    seeds = [
        (cl.CHAIN, cl.GenSymbol("chi", 1), cl.GenSymbol("phi", 1)),
        (cl.CHAIN, cl.GenSymbol("chi", 0), cl.GenSymbol("phi", 1)),
        (cl.CHAIN, cl.GenSymbol("chi", 2), cl.GenSymbol("phi", 1)),
        (cl.CECH_DE_RHAM, cl.GenSymbol("chi", (1, 0)), cl.GenSymbol("phi", (0, 2))),
    ]
    trees = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for cap in range(1, 5):
            for spec, chi, phi in seeds:
                trees.append(cl.derive_tree(spec, chi, phi, depth_cap=cap))
            trees.append(cl.derive_gv_tree(depth_cap=cap))
    return trees
