import json
from fractions import Fraction as Q

import pytest

from catx.charcalc import FormalCharacter, ModuleCharacter, costandard_character
from catx.chario import (
    character_dumps,
    character_loads,
    character_to_json,
    module_dumps,
    module_loads,
)
from catx.errors import InputError
from catx.incidence import build_incidence_algebra, regular_module
from catx.rootsystem import build_root_system


def test_character_roundtrip_byte_identical():
    rs = build_root_system("B2")
    th = FormalCharacter("theta", frozenset([1, 2]))
    char = costandard_character(rs, th, [1])
    text = character_dumps(rs, char)
    loaded, base, warnings = character_loads(rs, text)
    assert warnings == []
    assert base == th
    assert loaded == char
    assert character_dumps(rs, loaded) == text


def test_character_empty_needs_base():
    rs = build_root_system("A2")
    th = FormalCharacter("theta", frozenset([1]))
    with pytest.raises(InputError):
        character_to_json(rs, ModuleCharacter())
    data = character_to_json(rs, ModuleCharacter(), base=th)
    assert data["weights"] == [] and data["itheta"] == [1]
    loaded, base, _ = character_loads(rs, json.dumps(data))
    assert not loaded and base == th


def test_character_noncanonical_rep_lenient_vs_strict():
    rs = build_root_system("A2")
    payload = {
        "type": "A2",
        "label": "theta",
        "itheta": [1],
        # s1 lies in the stabilizer subgroup, so the rep is not canonical
        "weights": [{"coset_rep": [1], "v": [], "mult": 1}],
    }
    text = json.dumps(payload)
    loaded, _, warnings = character_loads(rs, text)
    assert len(warnings) == 1 and "not canonical" in warnings[0]
    assert loaded.total() == 1
    assert all(w.tchar.is_untwisted for w in loaded.weights())
    with pytest.raises(InputError):
        character_loads(rs, text, strict=True)


def test_character_duplicate_weights_merge_or_fail():
    rs = build_root_system("A2")
    payload = {
        "type": "A2",
        "label": "theta",
        "itheta": [],
        "weights": [
            {"coset_rep": [], "v": [1], "mult": 1},
            {"coset_rep": [], "v": [1], "mult": 2},
        ],
    }
    text = json.dumps(payload)
    loaded, _, warnings = character_loads(rs, text)
    assert loaded.total() == 3 and len(loaded) == 1
    assert any("duplicates" in w for w in warnings)
    with pytest.raises(InputError):
        character_loads(rs, text, strict=True)


def test_character_payload_validation():
    rs = build_root_system("A2")
    good = {"type": "A2", "label": "theta", "itheta": [], "weights": []}
    for corrupt in (
        {**good, "type": "B2"},
        {**good, "label": ""},
        {**good, "itheta": [9]},
        {**good, "itheta": "nope"},
        {**good, "weights": [{"coset_rep": [], "v": []}]},
        {**good, "weights": [{"coset_rep": [], "v": [], "mult": 0}]},
        {**good, "weights": [{"coset_rep": [], "v": ["x"], "mult": 1}]},
        {k: v for k, v in good.items() if k != "weights"},
    ):
        with pytest.raises(InputError):
            character_loads(rs, json.dumps(corrupt))
    with pytest.raises(InputError):
        character_loads(rs, "{not json")


def test_mixed_bases_rejected():
    rs = build_root_system("A2")
    th1 = FormalCharacter("theta", frozenset())
    th2 = FormalCharacter("eta", frozenset())
    c1 = costandard_character(rs, th1, [])
    c2 = costandard_character(rs, th2, [])
    with pytest.raises(InputError):
        character_to_json(rs, c1 + c2)
    with pytest.raises(InputError):
        character_to_json(rs, c1, base=th2)


def test_module_roundtrip_byte_identical():
    a = build_incidence_algebra(2)
    mod = regular_module(a)
    text = module_dumps(mod)
    loaded = module_loads(text)
    assert loaded.signature() == mod.signature()
    assert module_dumps(loaded) == text


def test_module_roundtrip_with_fractions():
    from catx.incidence import AlgebraModule

    a = build_incidence_algebra(1)
    mod = AlgebraModule(
        a,
        {frozenset(): 1, frozenset({1}): 1},
        {(frozenset(), frozenset({1})): [[Q(1, 3)]]},
    )
    text = module_dumps(mod)
    assert '"1/3"' in text
    loaded = module_loads(text)
    assert loaded.covering_map(frozenset(), frozenset({1})) == [[Q(1, 3)]]
    assert module_dumps(loaded) == text


def test_module_payload_validation():
    good = json.loads(module_dumps(regular_module(build_incidence_algebra(1))))
    for corrupt in (
        {**good, "n": "one"},
        {**good, "dims": {"bad": 1}},
        {**good, "dims": {"[1]": -2}},
        {**good, "maps": {"[1]": [[1]]}},
        {**good, "maps": {"[]->[1]": [[True]]}},
        {**good, "maps": {"[]->[1]": [["1/0"]]}},
        {k: v for k, v in good.items() if k != "maps"},
    ):
        with pytest.raises(InputError):
            module_loads(json.dumps(corrupt))
    with pytest.raises(InputError):
        module_loads("[1,2]")
