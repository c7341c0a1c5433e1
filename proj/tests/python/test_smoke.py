"""Python smoke tests for the fusionprod extension module."""

import fusionprod as fp


def test_version():
    assert fp.__version__ == "0.1.0"


def test_weyl_character_sl2():
    ch = fp.weyl_character(1, [1])
    assert ch == {(1,): 1, (-1,): 1}
    assert fp.weyl_dimension(1, [4]) == 5
    assert fp.weyl_dimension(3, [0, 2, 0]) == 20


def test_clebsch_gordan():
    a = fp.weyl_character(1, [2])
    b = fp.weyl_character(1, [1])
    prod = {}
    for wa, ma in a.items():
        for wb, mb in b.items():
            key = (wa[0] + wb[0],)
            prod[key] = prod.get(key, 0) + ma * mb
    dec = fp.decompose_character(1, prod)
    assert dec == [((3,), 1), ((1,), 1)]


def test_fusion_graded_dims():
    assert fp.fusion_graded_dims(1, 1, [1, 1]) == [3, 1]
    assert fp.fusion_graded_dims(1, 1, [2, 1]) == [4, 2]
    gc = fp.fusion_graded_character(2, 1, [1, 1])
    assert sum(gc.values()) == 9


def test_fusion_with_params():
    default = fp.fusion_graded_character(1, 1, [2, 1])
    other = fp.fusion_graded_character(1, 1, [2, 1], [(0, 1), (1, 2)])
    assert default == other


def test_verify_instance():
    v = fp.verify_theorem_instance(1, 1, [2, 1])
    assert v["pass"]
    assert v["dim_presented"] == v["dim_fusion"] == 6
    v2 = fp.verify_theorem_instance(2, 2, [1, 1])
    assert v2["pass"] and v2["dim_fusion"] == 9


def test_schur():
    assert fp.dominates([2, 2, 2], [3, 2, 1])
    assert not fp.dominates([2], [1, 1])
    v = fp.schur_check(1, 1, [1, 1], [2])
    assert v["dominates"] and v["schur_positive"] and v["witness"]
    assert v["decomposition"] == [((0,), 1)]
