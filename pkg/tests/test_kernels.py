from catx import _biclosed_py, kernels
from catx.rootsystem import build_root_system


def test_backend_is_declared():
    assert kernels.BACKEND in ("python", "cython")


def test_tiny_hand_case():
    # two roots, no sums: every subset is biclosed
    assert _biclosed_py.biclosed_masks(2, ()) == [0, 1, 2, 3]
    # roots 0,1 sum to 2: {0,1} fails, complement rule kills {2} and {0,2},{1,2}
    masks = _biclosed_py.biclosed_masks(3, ((0, 1, 2),))
    for mask in masks:
        comp = 7 ^ mask
        for side in (mask, comp):
            if side & 1 and side & 2:
                assert side & 4
    assert 0 in masks and 7 in masks
    assert 3 not in masks  # {0,1} misses the sum
    assert len(masks) == 6


def test_backends_agree_on_root_systems():
    for name in ("A2", "B2", "G2", "A3", "B3"):
        rs = build_root_system(name)
        n = len(rs.positive_roots)
        triples = rs.sum_triples()
        ref = _biclosed_py.biclosed_masks(n, triples)
        active = kernels.biclosed_masks(n, triples)
        assert list(active) == ref, name
        assert ref == sorted(ref)


def test_mask_count_matches_weyl_order():
    for name in ("A2", "B2", "G2", "D4"):
        rs = build_root_system(name)
        masks = kernels.biclosed_masks(len(rs.positive_roots), rs.sum_triples())
        assert len(masks) == rs.cartan_type.weyl_order(), name
