"""JSON serialization for characters and lattice modules.

Characters ship as words in the simple generators so files stay
readable and system independent; readers canonicalize every word and
either warn or fail (strict mode) on non-canonical coset data.  Module
files carry vertex dimensions and the nonzero covering matrices with
exact rational entries.  Writing is canonical: for any payload, write
then read then write is byte identical.
"""

from __future__ import annotations

import json
from fractions import Fraction as Q
from typing import Optional

from catx.charcalc import FormalCharacter, ModuleCharacter, TwistedCharacter, Weight
from catx.errors import InputError
from catx.incidence import AlgebraModule, build_incidence_algebra
from catx.rootsystem import RootSystem
from catx.weyl import element_from_word


def _word_list(value, what: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) for x in value):
        raise InputError(f"{what} must be a list of simple indices")
    return value


def character_to_json(
    rs: RootSystem, char: ModuleCharacter, *, base: Optional[FormalCharacter] = None
) -> dict:
    bases = {w.tchar.base for w in char.mapping}
    if len(bases) > 1:
        raise InputError("cannot serialize a character with mixed torus characters")
    if bases:
        found = next(iter(bases))
        if base is not None and base != found:
            raise InputError("explicit base disagrees with the character contents")
        base = found
    if base is None:
        raise InputError("an empty character needs an explicit base to record")
    weights = [
        {
            "coset_rep": list(w.tchar.coset_rep.word),
            "v": list(w.v.word),
            "mult": mult,
        }
        for w, mult in char.items()
    ]
    return {
        "type": str(rs.cartan_type),
        "label": base.label,
        "itheta": sorted(base.itheta),
        "weights": weights,
    }


def character_dumps(
    rs: RootSystem, char: ModuleCharacter, *, base: Optional[FormalCharacter] = None
) -> str:
    return json.dumps(character_to_json(rs, char, base=base), indent=2) + "\n"


def character_from_json(
    rs: RootSystem, data: dict, *, strict: bool = False
) -> tuple[ModuleCharacter, FormalCharacter, list[str]]:
    """Parse a character payload; returns the character, its base, and
    any canonicalization warnings (strict mode turns those into errors).
    """
    if not isinstance(data, dict):
        raise InputError("character payload must be a JSON object")
    missing = {"type", "label", "itheta", "weights"} - set(data)
    if missing:
        raise InputError(f"character payload missing keys {sorted(missing)}")
    if data["type"] != str(rs.cartan_type):
        raise InputError(
            f"payload is for type {data['type']!r}, expected {rs.cartan_type}"
        )
    if not isinstance(data["label"], str) or not data["label"]:
        raise InputError("label must be a non-empty string")
    itheta = data["itheta"]
    if not isinstance(itheta, list) or not all(isinstance(i, int) for i in itheta):
        raise InputError("itheta must be a list of simple indices")
    base = FormalCharacter(data["label"], frozenset(itheta))
    bad = base.itheta - set(rs.simple_indices)
    if bad:
        raise InputError(f"itheta indices {sorted(bad)} out of range")
    warnings: list[str] = []
    entries: dict[Weight, int] = {}
    if not isinstance(data["weights"], list):
        raise InputError("weights must be a list")
    for k, entry in enumerate(data["weights"]):
        if not isinstance(entry, dict):
            raise InputError(f"weight #{k} must be an object")
        missing = {"coset_rep", "v", "mult"} - set(entry)
        if missing:
            raise InputError(f"weight #{k} missing keys {sorted(missing)}")
        mult = entry["mult"]
        if not isinstance(mult, int) or mult < 1:
            raise InputError(f"weight #{k}: mult must be a positive int")
        rep_word = _word_list(entry["coset_rep"], f"weight #{k}: coset_rep")
        v_word = _word_list(entry["v"], f"weight #{k}: v")
        rep = element_from_word(rs, rep_word)
        tc = TwistedCharacter.of(base, rep)
        if tc.coset_rep != rep:
            message = (
                f"weight #{k}: coset_rep {rep_word} is not canonical; "
                f"replaced by {list(tc.coset_rep.word)}"
            )
            if strict:
                raise InputError(message)
            warnings.append(message)
        weight = Weight(tc, element_from_word(rs, v_word))
        if weight in entries:
            message = f"weight #{k} duplicates an earlier entry; multiplicities merged"
            if strict:
                raise InputError(message)
            warnings.append(message)
        entries[weight] = entries.get(weight, 0) + mult
    return ModuleCharacter(entries), base, warnings


def character_loads(
    rs: RootSystem, text: str, *, strict: bool = False
) -> tuple[ModuleCharacter, FormalCharacter, list[str]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    return character_from_json(rs, data, strict=strict)


# ----------------------------------------------------------------------
# lattice modules


def _subset_tag(s) -> str:
    return json.dumps(sorted(s), separators=(",", ":"))


def _parse_subset(tag: str, n: int, what: str) -> frozenset[int]:
    try:
        items = json.loads(tag)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: bad subset key {tag!r}") from exc
    if not isinstance(items, list) or not all(isinstance(x, int) for x in items):
        raise InputError(f"{what}: bad subset key {tag!r}")
    out = frozenset(items)
    if len(out) != len(items) or not out <= set(range(1, n + 1)):
        raise InputError(f"{what}: subset {tag!r} invalid for ground set 1..{n}")
    return out


def _encode_entry(q: Q):
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _decode_entry(x, what: str) -> Q:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise InputError(f"{what}: entries must be ints or 'p/q' strings")
    try:
        return Q(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{what}: bad rational {x!r}") from exc


def module_to_json(module: AlgebraModule) -> dict:
    dims = {
        _subset_tag(y): d
        for y, d in sorted(module.dims.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
        if d
    }
    maps = {}
    for (y, z), m in module.nonzero_maps().items():
        maps[f"{_subset_tag(y)}->{_subset_tag(z)}"] = [
            [_encode_entry(x) for x in row] for row in m
        ]
    return {"n": module.algebra.n, "dims": dims, "maps": maps}


def module_dumps(module: AlgebraModule) -> str:
    return json.dumps(module_to_json(module), indent=2) + "\n"


def module_from_json(data: dict) -> AlgebraModule:
    if not isinstance(data, dict):
        raise InputError("module payload must be a JSON object")
    missing = {"n", "dims", "maps"} - set(data)
    if missing:
        raise InputError(f"module payload missing keys {sorted(missing)}")
    n = data["n"]
    if not isinstance(n, int):
        raise InputError("n must be an int")
    algebra = build_incidence_algebra(n)
    if not isinstance(data["dims"], dict) or not isinstance(data["maps"], dict):
        raise InputError("dims and maps must be objects")
    dims = {}
    for tag, d in data["dims"].items():
        y = _parse_subset(tag, n, "dims")
        if not isinstance(d, int) or d < 0:
            raise InputError(f"dims[{tag!r}] must be a non-negative int")
        dims[y] = d
    maps = {}
    for tag, rows in data["maps"].items():
        if "->" not in tag:
            raise InputError(f"maps key {tag!r} must look like 'Y->Z'")
        left, right = tag.split("->", 1)
        y = _parse_subset(left, n, "maps")
        z = _parse_subset(right, n, "maps")
        if not isinstance(rows, list):
            raise InputError(f"maps[{tag!r}] must be a matrix")
        maps[(y, z)] = [
            [_decode_entry(x, f"maps[{tag!r}]") for x in row] for row in rows
        ]
    return AlgebraModule(algebra, dims, maps)


def module_loads(text: str) -> AlgebraModule:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    return module_from_json(data)
