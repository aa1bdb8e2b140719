"""Weight characters of parabolically induced families and their
triangular decomposition into simple characters.

The model tracks a torus character theta only through a label and the
set itheta of simple indices on which it restricts trivially.  The full
Weyl stabilizer of theta is declared to be the standard subgroup on
itheta; reports carry that declaration so downstream consumers know the
approximation.  Twists theta^w therefore live on the left cosets of
that subgroup and are stored via the minimal-length representative.

A weight pairs a twisted character with a group element v; the root
side of the weight is the set of positive roots v keeps positive.  The
strict order on weights moves the root set into a strictly smaller one
through any group element compatible with the twist, and the
decomposition peels maximal weights of longest-element shape,
subtracting one simple character per step.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Optional

from catx.errors import InputError
from catx.rootsystem import RootSystem
from catx.weyl import (
    WeylElement,
    coset_minimize,
    longest_element,
    min_coset_reps,
    weyl_subgroup,
)

STABILIZER_MODEL = "standard subgroup on itheta (declared, not computed)"

JPRIME_CONVENTIONS = ("itheta-minus-j", "i-minus-j")


@dataclass(frozen=True)
class FormalCharacter:
    """A torus character: a label plus its trivial simple indices.

    Equal labels are required to carry equal itheta sets; equality
    compares both fields, so respecting that contract makes the label
    alone decisive.
    """

    label: str
    itheta: frozenset[int]

    def __repr__(self) -> str:
        body = ",".join(str(i) for i in sorted(self.itheta))
        return f"{self.label}|{{{body}}}"


def _check_itheta(rs: RootSystem, theta: FormalCharacter) -> frozenset[int]:
    bad = theta.itheta - set(rs.simple_indices)
    if bad:
        raise InputError(
            f"itheta indices {sorted(bad)} out of range for {rs.cartan_type}"
        )
    return theta.itheta


def _check_j(rs: RootSystem, theta: FormalCharacter, j: Iterable[int]) -> frozenset[int]:
    jj = frozenset(j)
    if not jj <= _check_itheta(rs, theta):
        raise InputError(
            f"J={sorted(jj)} is not contained in itheta={sorted(theta.itheta)}"
        )
    return jj


@dataclass(frozen=True)
class TwistedCharacter:
    """theta twisted by a group element, stored by its canonical coset rep.

    The representative must be the minimal-length element of its left
    coset modulo the stabilizer subgroup; construct through `of` to
    canonicalize an arbitrary element.
    """

    base: FormalCharacter
    coset_rep: WeylElement

    def __post_init__(self) -> None:
        rep = self.coset_rep
        rs = rep.rs
        for i in sorted(_check_itheta(rs, self.base)):
            if rep.perm[rs.simple_root_index(i)] < 0:
                raise InputError(
                    f"coset representative {rep!r} is not canonical for "
                    f"itheta={sorted(self.base.itheta)}"
                )

    @classmethod
    def of(cls, base: FormalCharacter, w: WeylElement) -> "TwistedCharacter":
        return cls(base, coset_minimize(w, base.itheta))

    @property
    def is_untwisted(self) -> bool:
        return self.coset_rep.is_identity

    def __repr__(self) -> str:
        return f"{self.base!r}^{self.coset_rep!r}"


def canonical_twist(tc: TwistedCharacter, v: WeylElement) -> TwistedCharacter:
    """Twist by a further element; twists compose through left products."""
    return TwistedCharacter.of(tc.base, v * tc.coset_rep)


@dataclass(frozen=True)
class Weight:
    """A twisted character paired with a group element.

    The combinatorial content of the second component is the set of
    positive roots it keeps positive.
    """

    tchar: TwistedCharacter
    v: WeylElement

    def __repr__(self) -> str:
        return f"({self.tchar!r}, {self.v!r})"


def weight_sort_key(w: Weight):
    rep_word = w.tchar.coset_rep.word
    v_word = w.v.word
    return (
        w.tchar.base.label,
        tuple(sorted(w.tchar.base.itheta)),
        len(rep_word),
        rep_word,
        len(v_word),
        v_word,
    )


class ModuleCharacter:
    """A finite multiset of weights with positive multiplicities."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()):
        data: dict[Weight, int] = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for weight, mult in items:
            if not isinstance(mult, int) or mult < 1:
                raise InputError(f"multiplicity for {weight!r} must be a positive int")
            data[weight] = data.get(weight, 0) + mult
        self._entries = data

    @property
    def mapping(self) -> dict[Weight, int]:
        return dict(self._entries)

    def items(self) -> list[tuple[Weight, int]]:
        return sorted(self._entries.items(), key=lambda kv: weight_sort_key(kv[0]))

    def weights(self) -> list[Weight]:
        return [w for w, _ in self.items()]

    def get(self, weight: Weight) -> int:
        return self._entries.get(weight, 0)

    def total(self) -> int:
        return sum(self._entries.values())

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __add__(self, other: "ModuleCharacter") -> "ModuleCharacter":
        out = dict(self._entries)
        for w, m in other._entries.items():
            out[w] = out.get(w, 0) + m
        return ModuleCharacter(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ModuleCharacter) and self._entries == other._entries

    def __repr__(self) -> str:
        body = ", ".join(f"{w!r}:{m}" for w, m in self.items())
        return f"ModuleCharacter({{{body}}})"

    @staticmethod
    def sum(pieces: Iterable["ModuleCharacter"]) -> "ModuleCharacter":
        out: dict[Weight, int] = {}
        for piece in pieces:
            for w, m in piece._entries.items():
                out[w] = out.get(w, 0) + m
        return ModuleCharacter(out)


# ----------------------------------------------------------------------
# the strict order on weights


@lru_cache(maxsize=None)
def weight_lt(a: Weight, b: Weight) -> bool:
    """Strict order: some twist-compatible element carries a's kept-root
    set into a proper subset of b's, staying inside the positive roots.

    The search runs over the whole coset of elements matching the
    twists; any image root falling outside the positive roots fails
    that element.  A proper subset forces a's kept set to be smaller,
    so unequal lengths are a cheap necessary precheck.
    """
    if a.tchar.base != b.tchar.base:
        return False
    va, vb = a.v, b.v
    if va.length <= vb.length:
        return False
    rs = va.rs
    kept_a = [k for k, j in enumerate(va.perm) if j >= 0]
    mask_b = vb.plus_mask
    w_a = a.tchar.coset_rep
    w_b = b.tchar.coset_rep
    w_a_inv = w_a.inverse()
    both_trivial = w_a.is_identity and w_b.is_identity
    for u in weyl_subgroup(rs, a.tchar.base.itheta):
        x_inv = u if both_trivial else w_b * (u * w_a_inv)
        perm = x_inv.perm
        ok = True
        for k in kept_a:
            j = perm[k]
            if j < 0 or not mask_b & (1 << j):
                ok = False
                break
        if ok:
            return True
    return False


# ----------------------------------------------------------------------
# characters of the standard families


def _character(
    rs: RootSystem, theta: FormalCharacter, reps: Iterable[WeylElement], wj: WeylElement
) -> ModuleCharacter:
    out: dict[Weight, int] = {}
    for w in reps:
        weight = Weight(TwistedCharacter.of(theta, w), wj * w.inverse())
        out[weight] = out.get(weight, 0) + 1
    return ModuleCharacter(out)


def induced_character(
    rs: RootSystem, theta: FormalCharacter, j: Iterable[int]
) -> ModuleCharacter:
    """Character of the full induced family at (theta, J).

    One weight per minimal coset representative w: theta twisted by w,
    paired with w_J w^{-1}.
    """
    jj = _check_j(rs, theta, j)
    return _character(rs, theta, min_coset_reps(rs, jj), longest_element(rs, jj))


def simple_coset_reps(
    rs: RootSystem, theta: FormalCharacter, j: Iterable[int]
) -> tuple[WeylElement, ...]:
    """The representatives indexing the simple character at (theta, J).

    Keeps w in the minimal coset representatives whose product with w_J
    has every right descent inside J or outside itheta.
    """
    jj = _check_j(rs, theta, j)
    allowed = jj | (frozenset(rs.simple_indices) - theta.itheta)
    wj = longest_element(rs, jj)
    return tuple(
        w for w in min_coset_reps(rs, jj) if (w * wj).descent_set() <= allowed
    )


def simple_character(
    rs: RootSystem, theta: FormalCharacter, j: Iterable[int]
) -> ModuleCharacter:
    """Character of the simple quotient at (theta, J)."""
    jj = _check_j(rs, theta, j)
    return _character(rs, theta, simple_coset_reps(rs, theta, jj), longest_element(rs, jj))


def costandard_character(
    rs: RootSystem,
    theta: FormalCharacter,
    j: Iterable[int],
    *,
    jprime_convention: str = "itheta-minus-j",
) -> ModuleCharacter:
    """Character of the costandard family at (theta, J).

    Induction from the parabolic on J' pairs each minimal coset
    representative w of J' with plain w^{-1}: the subgroup fixing the
    corresponding vector is indexed by the roots w^{-1} keeps positive.
    The adopted convention takes J' inside itheta; the rejected
    complement-in-I reading stays available behind the flag so sweeps
    can demonstrate where it breaks the filtration identity.
    """
    if jprime_convention not in JPRIME_CONVENTIONS:
        raise InputError(
            f"unknown jprime convention {jprime_convention!r}; "
            f"expected one of {JPRIME_CONVENTIONS}"
        )
    jj = _check_j(rs, theta, j)
    if jprime_convention == "itheta-minus-j":
        jprime = theta.itheta - jj
    else:
        jprime = frozenset(rs.simple_indices) - jj
    return _character(
        rs, theta, min_coset_reps(rs, jprime), WeylElement.identity(rs)
    )


# ----------------------------------------------------------------------
# decomposition into simple characters


@dataclass
class Decomposition:
    """Outcome of the greedy triangular elimination.

    factors maps (theta, J) to how many copies of the simple character
    were subtracted.  A nonzero remainder means the input was not a
    nonnegative combination of simple characters; diagnostic then says
    why the loop stopped.
    """

    factors: dict[tuple[FormalCharacter, frozenset[int]], int] = field(default_factory=dict)
    remainder: ModuleCharacter = field(default_factory=ModuleCharacter)
    diagnostic: Optional[str] = None

    @property
    def ok(self) -> bool:
        return not self.remainder and self.diagnostic is None


def _candidate_label(rs: RootSystem, weight: Weight) -> Optional[frozenset[int]]:
    """J such that the weight reads (untwisted theta, w_J), if any."""
    if not weight.tchar.is_untwisted:
        return None
    j = weight.v.descent_set()
    if not j <= weight.tchar.base.itheta:
        return None
    if weight.v != longest_element(rs, j):
        return None
    return j


def decompose_character(
    rs: RootSystem, char: ModuleCharacter, *, tie_break: int = 0
) -> Decomposition:
    """Greedy triangular elimination against the simple characters.

    Each round selects a maximal weight of longest-element shape
    (untwisted character, v = w_J with J inside itheta) and subtracts
    the simple character at (theta, J).  Maximality is taken against
    every weight still present.  Incomparable maxima are ordered by
    (|J| descending, J lexicographic, label); tie_break in {0, 1, 2}
    picks the first, last, or middle entry of that order, and results
    must not depend on the choice.

    A subtraction that would drive a multiplicity negative stops the
    loop, leaving the offending weights in the remainder and naming
    the missing ones in the diagnostic.
    """
    if tie_break not in (0, 1, 2):
        raise InputError("tie_break must be 0, 1, or 2")
    work = char.mapping
    out = Decomposition()
    while work:
        cands = []
        for weight in work:
            j = _candidate_label(rs, weight)
            if j is not None:
                cands.append((weight, j))
        maximal = [
            (weight, j)
            for weight, j in cands
            if not any(other != weight and weight_lt(weight, other) for other in work)
        ]
        if not maximal:
            out.diagnostic = (
                "no maximal weight of longest-element shape remains; "
                f"{sum(work.values())} weight(s) left"
            )
            break
        maximal.sort(
            key=lambda wj: (-len(wj[1]), tuple(sorted(wj[1])), wj[0].tchar.base.label)
        )
        pick = {0: 0, 1: len(maximal) - 1, 2: len(maximal) // 2}[tie_break]
        weight, j = maximal[pick]
        piece = simple_character(rs, weight.tchar.base, j)
        missing = [pw for pw, pm in piece.items() if work.get(pw, 0) < pm]
        if missing:
            out.diagnostic = (
                f"subtracting the simple character at J={sorted(j)} needs "
                f"weight(s) {missing!r} not present with enough multiplicity"
            )
            break
        for pw, pm in piece.items():
            left = work[pw] - pm
            if left:
                work[pw] = left
            else:
                del work[pw]
        key = (weight.tchar.base, j)
        out.factors[key] = out.factors.get(key, 0) + 1
    out.remainder = ModuleCharacter(work)
    return out


def simple_label_lt(
    a: tuple[FormalCharacter, Iterable[int]], b: tuple[FormalCharacter, Iterable[int]]
) -> bool:
    """Strict order on simple-character labels: same character, first
    index set strictly contains the second."""
    (ta, ja), (tb, jb) = a, b
    return ta == tb and frozenset(ja) > frozenset(jb)


# ----------------------------------------------------------------------
# verification sweeps


def _subsets(items: Iterable[int]) -> list[frozenset[int]]:
    base = sorted(items)
    out = [frozenset()]
    for x in base:
        out += [s | {x} for s in out]
    return sorted(out, key=lambda s: (len(s), tuple(sorted(s))))


def _weight_diff(a: ModuleCharacter, b: ModuleCharacter) -> dict[str, int]:
    diff: dict[str, int] = {}
    for w in set(a.mapping) | set(b.mapping):
        if a.get(w) != b.get(w):
            diff[repr(w)] = a.get(w) - b.get(w)
    return diff


def verify_filtration(
    rs: RootSystem,
    theta: FormalCharacter,
    *,
    jprime_convention: str = "itheta-minus-j",
) -> list[dict]:
    """Check the costandard filtration identities for every J in itheta.

    Per J: the costandard character equals the sum of the simple
    characters over all subsets of J (as multisets); the representative
    counts satisfy the matching counting identity; decomposing the
    costandard character returns exactly the subsets of J with
    multiplicity one; decomposing the induced character returns exactly
    the supersets of J inside itheta with multiplicity one.

    Returns one JSON-ready record per (J, check).
    """
    _check_itheta(rs, theta)
    records = []
    tname = str(rs.cartan_type)
    for j in _subsets(theta.itheta):
        params = {
            "type": tname,
            "itheta": sorted(theta.itheta),
            "j": sorted(j),
            "jprime_convention": jprime_convention,
        }
        nabla = costandard_character(rs, theta, j, jprime_convention=jprime_convention)
        total = ModuleCharacter.sum(simple_character(rs, theta, k) for k in _subsets(j))
        diff = _weight_diff(nabla, total)
        records.append(
            {
                "check": "filtration-multiset",
                "params": dict(params),
                "passed": not diff,
                "counterexample": {"weight_diff": diff} if diff else None,
            }
        )

        if jprime_convention == "itheta-minus-j":
            jprime = theta.itheta - j
        else:
            jprime = frozenset(rs.simple_indices) - j
        lhs = len(min_coset_reps(rs, jprime))
        rhs = sum(len(simple_coset_reps(rs, theta, k)) for k in _subsets(j))
        records.append(
            {
                "check": "filtration-counting",
                "params": dict(params),
                "passed": lhs == rhs,
                "counterexample": None if lhs == rhs else {"lhs": lhs, "rhs": rhs},
            }
        )

        dec = decompose_character(rs, nabla)
        want = {(theta, k): 1 for k in _subsets(j)}
        ok = dec.ok and dec.factors == want
        records.append(
            {
                "check": "costandard-decomposition",
                "params": dict(params),
                "passed": ok,
                "counterexample": None
                if ok
                else {
                    "factors": sorted(
                        (sorted(k), m) for (_, k), m in dec.factors.items()
                    ),
                    "remainder": dec.remainder.total(),
                    "diagnostic": dec.diagnostic,
                },
            }
        )

        dec_m = decompose_character(rs, induced_character(rs, theta, j))
        want_m = {(theta, k): 1 for k in _subsets(theta.itheta) if j <= k}
        ok_m = dec_m.ok and dec_m.factors == want_m
        records.append(
            {
                "check": "projective-pattern",
                "params": dict(params),
                "passed": ok_m,
                "counterexample": None
                if ok_m
                else {
                    "factors": sorted(
                        (sorted(k), m) for (_, k), m in dec_m.factors.items()
                    ),
                    "remainder": dec_m.remainder.total(),
                    "diagnostic": dec_m.diagnostic,
                },
            }
        )
    return records


def weight_universe(rs: RootSystem, theta: FormalCharacter) -> tuple[Weight, ...]:
    """Every weight appearing across the costandard sweep of theta."""
    seen: set[Weight] = set()
    for j in _subsets(theta.itheta):
        seen.update(costandard_character(rs, theta, j).mapping)
    return tuple(sorted(seen, key=weight_sort_key))


def order_axiom_records(
    rs: RootSystem,
    theta: FormalCharacter,
    *,
    seed: int = 1729,
    sample_triples: int = 10000,
) -> list[dict]:
    """Irreflexivity and transitivity of the weight order on the sweep
    universe of theta.

    Rank at most 2 is checked exhaustively via the full relation
    digraph; higher ranks draw seeded random triples (at least the
    requested count) and additionally complete every related pair found
    into triples.
    """
    universe = weight_universe(rs, theta)
    params = {"type": str(rs.cartan_type), "itheta": sorted(theta.itheta)}
    records = []

    refl = [w for w in universe if weight_lt(w, w)]
    records.append(
        {
            "check": "order-irreflexive",
            "params": dict(params),
            "passed": not refl,
            "counterexample": {"weight": repr(refl[0])} if refl else None,
        }
    )

    n = len(universe)
    violations: list[tuple[Weight, Weight, Weight]] = []
    checked = 0
    if rs.rank <= 2:
        rel = {
            (a, b)
            for a in universe
            for b in universe
            if a != b and weight_lt(a, b)
        }
        succ: dict[Weight, list[Weight]] = {}
        for a, b in rel:
            succ.setdefault(a, []).append(b)
        for a, b in rel:
            for c in succ.get(b, ()):
                checked += 1
                if (a, c) not in rel and a != c:
                    violations.append((a, b, c))
        mode = "exhaustive"
    else:
        rng = random.Random(seed)
        found_pairs: set[tuple[Weight, Weight]] = set()
        for _ in range(sample_triples):
            a, b, c = (universe[rng.randrange(n)] for _ in range(3))
            checked += 1
            if weight_lt(a, b):
                found_pairs.add((a, b))
                if weight_lt(b, c):
                    found_pairs.add((b, c))
                    if a != c and not weight_lt(a, c):
                        violations.append((a, b, c))
        # complete discovered chains: every related pair extended by a
        # third sampled endpoint
        for a, b in sorted(found_pairs, key=lambda p: (weight_sort_key(p[0]), weight_sort_key(p[1]))):
            for c in universe:
                if weight_lt(b, c):
                    checked += 1
                    if a != c and not weight_lt(a, c):
                        violations.append((a, b, c))
        mode = f"sampled({sample_triples})+chain-completion"
    records.append(
        {
            "check": "order-transitive",
            "params": {**params, "mode": mode, "triples_checked": checked},
            "passed": not violations,
            "counterexample": (
                {"triple": [repr(x) for x in violations[0]]} if violations else None
            ),
        }
    )
    return records


def successive_weight_diagnostic(
    rs: RootSystem, theta: FormalCharacter, j: Iterable[int]
) -> dict:
    """Non-asserted probe of the successive-weight phenomenon.

    For the simple character at (theta, J), scan length-increasing
    chains v < s v < r s v between indexing representatives and count
    how often the intermediate predicted weight is present, under both
    readings of the twist (right product v*s versus left product s*v).
    Offered as a diagnostic only; neither reading is an invariant of
    this model.
    """
    jj = _check_j(rs, theta, j)
    reps = set(simple_coset_reps(rs, theta, jj))
    wj = longest_element(rs, jj)
    char = simple_character(rs, theta, jj)
    present = set(char.mapping)
    simples = [WeylElement.simple_reflection(rs, i) for i in rs.simple_indices]
    triples = 0
    hits_right = 0
    hits_left = 0
    for v in sorted(reps, key=lambda w: (w.length, w.word)):
        for s in simples:
            sv = s * v
            if sv.length != v.length + 1:
                continue
            for r in simples:
                w = r * sv
                if w.length != sv.length + 1 or w not in reps:
                    continue
                triples += 1
                vcomp = wj * v.inverse() * s
                right = Weight(TwistedCharacter.of(theta, v * s), vcomp)
                left = Weight(TwistedCharacter.of(theta, sv), vcomp)
                hits_right += right in present
                hits_left += left in present
    return {
        "type": str(rs.cartan_type),
        "itheta": sorted(theta.itheta),
        "j": sorted(jj),
        "triples": triples,
        "hits_right_product": hits_right,
        "hits_left_product": hits_left,
    }
