"""The incidence algebra of the Boolean lattice and its finite modules.

The algebra on ground set {1..n} has one basis element per containment
pair (Y, Z) of subsets, multiplying like matrix units: (Y, Z) times
(Z', W) is (Y, W) when Z = Z' and zero otherwise.  Basis pairs are kept
in the fixed order (|Y|, lex Y, |Z|, lex Z).

A right module is stored vertex-wise: a dimension per subset and one
exact rational matrix per covering pair, mapping the Y-component into
the Z-component (rows act from the left on the matrix, so shapes are
dim(Y) x dim(Z)).  Maps for longer containments are chain products,
which path-independence validation makes well defined.

Everything downstream (radical series, heredity layers, endomorphism
algebras, direct-summand splitting) is computed over exact rationals;
randomized steps take explicit seeds and are certified after the fact.
"""

from __future__ import annotations

import random
from fractions import Fraction as Q
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence

from catx import linalg
from catx.errors import InputError, ResourceGuardError

Subset = frozenset[int]
Pair = tuple[Subset, Subset]

ALGEBRA_SIZE_GUARD = 6
MODULE_DIM_GUARD = 64
DEFAULT_SEED = 1729


def subset_key(s: Subset) -> tuple[int, tuple[int, ...]]:
    return (len(s), tuple(sorted(s)))


def all_subsets(n: int) -> tuple[Subset, ...]:
    items = list(range(1, n + 1))
    out: list[Subset] = [frozenset()]
    for x in items:
        out += [s | {x} for s in out]
    return tuple(sorted(out, key=subset_key))


class IncidenceAlgebra:
    """Matrix-unit presentation of the Boolean-lattice incidence algebra."""

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise InputError("ground-set size must be a non-negative int")
        if n > ALGEBRA_SIZE_GUARD:
            raise ResourceGuardError(
                f"ground-set size {n} beyond the guard ({ALGEBRA_SIZE_GUARD})"
            )
        self.n = n
        self.subsets = all_subsets(n)
        self.subset_index = {s: i for i, s in enumerate(self.subsets)}
        self.basis: tuple[Pair, ...] = tuple(
            sorted(
                ((y, z) for y in self.subsets for z in self.subsets if y <= z),
                key=lambda p: subset_key(p[0]) + subset_key(p[1]),
            )
        )
        self.basis_index = {p: i for i, p in enumerate(self.basis)}
        self.dim = len(self.basis)
        if self.dim != 3**n:
            raise AssertionError(f"basis size {self.dim} != 3^{n}")

    def mul_basis(self, p: Pair, q: Pair) -> Optional[Pair]:
        """Product of two basis pairs, or None when it vanishes."""
        if p not in self.basis_index or q not in self.basis_index:
            raise InputError("arguments must be basis pairs of this algebra")
        if p[1] != q[0]:
            return None
        return (p[0], q[1])

    def __repr__(self) -> str:
        return f"IncidenceAlgebra(n={self.n}, dim={self.dim})"


def build_incidence_algebra(n: int) -> IncidenceAlgebra:
    return IncidenceAlgebra(n)


def _pair_product(s: Iterable[Pair], t: Iterable[Pair]) -> set[Pair]:
    by_start: dict[Subset, list[Subset]] = {}
    for z, w in t:
        by_start.setdefault(z, []).append(w)
    return {(y, w) for y, z in s for w in by_start.get(z, ())}


def algebra_radical(a: IncidenceAlgebra) -> tuple[tuple[Pair, ...], list[int]]:
    """Radical basis (strict pairs) and the dimensions of its powers.

    The power dimensions are computed by honest span products, not by a
    closed form, and the returned list ends with the 0 of the first
    vanishing power.
    """
    rad = {p for p in a.basis if p[0] != p[1]}
    series = []
    cur = set(rad)
    while cur:
        series.append(len(cur))
        cur = _pair_product(cur, rad)
    series.append(0)
    basis = tuple(sorted(rad, key=lambda p: subset_key(p[0]) + subset_key(p[1])))
    return basis, series


def cartan_and_ext(
    a: IncidenceAlgebra,
) -> tuple[list[list[int]], dict[Pair, int]]:
    """Cartan matrix over the subset order, and the arrow multiplicities.

    The Cartan entry at (Y, Z) counts basis elements in the (Y, Z)
    corner; arrows live on the pairs spanning rad but not rad squared.
    """
    m = len(a.subsets)
    cartan = [[0] * m for _ in range(m)]
    for y, z in a.basis:
        cartan[a.subset_index[y]][a.subset_index[z]] += 1
    rad = {p for p in a.basis if p[0] != p[1]}
    rad2 = _pair_product(rad, rad)
    ext1 = {
        p: 1
        for p in sorted(rad - rad2, key=lambda p: subset_key(p[0]) + subset_key(p[1]))
    }
    return cartan, ext1


def cartan_determinant(a: IncidenceAlgebra) -> Q:
    cartan, _ = cartan_and_ext(a)
    return linalg.det(cartan)


def heredity_chain_check(a: IncidenceAlgebra) -> dict:
    """Peel idempotent ideals by descending subset cardinality and check
    the heredity axioms at every layer.

    Per layer: the generated ideal is idempotent (span product), it
    kills the radical of the current quotient from both sides, and the
    multiplication map from the two one-sided pieces over the (diagonal,
    hence semisimple) corner is a dimension-exact surjection onto the
    ideal.  All of it runs at the matrix-unit level, where every span
    is a set of pairs.
    """
    if a.n == 0:
        return {
            "n": 0,
            "layers": [],
            "passed": True,
            "note": "ground field; nothing to peel",
        }
    quotient = set(a.basis)
    layers = []
    passed = True
    for level in range(a.n, -1, -1):
        level_sets = [c for c in a.subsets if len(c) == level]
        ideal = {
            (y, w)
            for y, w in quotient
            if any((y, c) in quotient and (c, w) in quotient for c in level_sets)
        }
        idem_ok = _pair_product(ideal, ideal) == ideal
        rad = {(y, z) for y, z in quotient if y != z}
        kills_rad = not _pair_product(_pair_product(ideal, rad), ideal)
        left = {(y, c) for y, c in quotient if len(c) == level}
        right = {(c, z) for c, z in quotient if len(c) == level}
        corner = {
            (c, c2) for c, c2 in quotient if len(c) == level and len(c2) == level
        }
        corner_diagonal = all(c == c2 for c, c2 in corner)
        left_at = {c: sum(1 for _, cc in left if cc == c) for c in level_sets}
        right_at = {c: sum(1 for cc, _ in right if cc == c) for c in level_sets}
        tensor_dim = sum(left_at[c] * right_at[c] for c in level_sets)
        surjective = _pair_product(left, right) == ideal
        tensor_ok = corner_diagonal and surjective and tensor_dim == len(ideal)
        layer_ok = idem_ok and kills_rad and tensor_ok
        passed = passed and layer_ok
        layers.append(
            {
                "level": level,
                "ideal_dim": len(ideal),
                "idempotent": idem_ok,
                "kills_quotient_radical": kills_rad,
                "tensor_dimension": tensor_dim,
                "tensor_bijective": tensor_ok,
                "passed": layer_ok,
            }
        )
        quotient -= ideal
    if quotient:
        passed = False
    return {"n": a.n, "layers": layers, "passed": passed}


# ----------------------------------------------------------------------
# modules


def _as_matrix(rows, nr: int, nc: int, what: str) -> list[list[Q]]:
    m = [[Q(x) for x in row] for row in rows]
    if len(m) != nr or any(len(row) != nc for row in m):
        raise InputError(f"{what}: expected shape {nr}x{nc}")
    return m


def _is_zero(mat: Sequence[Sequence[Q]]) -> bool:
    return all(not x for row in mat for x in row)


class AlgebraModule:
    """A finite right module, stored vertex-wise with covering maps."""

    def __init__(
        self,
        algebra: IncidenceAlgebra,
        dims: Mapping[Subset, int],
        maps: Mapping[Pair, Sequence[Sequence[Q]]] = (),
        *,
        validate: bool = True,
    ):
        self.algebra = algebra
        self.dims: dict[Subset, int] = {}
        for y in algebra.subsets:
            d = int(dims.get(y, 0))
            if d < 0:
                raise InputError(f"dimension at {sorted(y)} must be >= 0")
            self.dims[y] = d
        extra = set(dims) - set(algebra.subsets)
        if extra:
            raise InputError(f"unknown vertices {sorted(map(sorted, extra))}")
        self._maps: dict[Pair, list[list[Q]]] = {}
        items = maps.items() if isinstance(maps, Mapping) else maps
        for (y, z), rows in items:
            y, z = frozenset(y), frozenset(z)
            if not (y <= z and len(z - y) == 1):
                raise InputError(
                    f"map key ({sorted(y)}, {sorted(z)}) is not a covering pair"
                )
            mat = _as_matrix(
                rows, self.dims[y], self.dims[z], f"map {sorted(y)}->{sorted(z)}"
            )
            if not _is_zero(mat):
                self._maps[(y, z)] = mat
        if validate:
            self._validate()

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def covering_map(self, y: Subset, z: Subset) -> list[list[Q]]:
        got = self._maps.get((y, z))
        if got is not None:
            return [row[:] for row in got]
        return linalg.zeros(self.dims[y], self.dims[z])

    def action(self, y: Subset, z: Subset) -> list[list[Q]]:
        """Matrix of the basis pair (Y, Z) from the Y- to the Z-component."""
        y, z = frozenset(y), frozenset(z)
        if (y, z) not in self.algebra.basis_index:
            raise InputError(f"({sorted(y)}, {sorted(z)}) is not a basis pair")
        if y == z:
            return linalg.identity(self.dims[y])
        chain = [y]
        for x in sorted(z - y):
            chain.append(chain[-1] | {x})
        if any(self.dims[c] == 0 for c in chain):
            return linalg.zeros(self.dims[y], self.dims[z])
        cur = self.covering_map(chain[0], chain[1])
        for c0, c1 in zip(chain[1:], chain[2:]):
            cur = linalg.mat_mul(cur, self.covering_map(c0, c1))
        return cur

    def _validate(self) -> None:
        # Path independence on every square with nonzero endpoints; a
        # path through a zero vertex is the zero map of the right shape.
        for y in self.algebra.subsets:
            if self.dims[y] == 0:
                continue
            rest = sorted(set(range(1, self.algebra.n + 1)) - y)
            for a_, b_ in combinations(rest, 2):
                z = y | {a_, b_}
                if self.dims[z] == 0:
                    continue
                if self._path(y, y | {a_}, z) != self._path(y, y | {b_}, z):
                    raise InputError(
                        f"action matrices do not commute on the square "
                        f"{sorted(y)} -> {sorted(z)}"
                    )

    def _path(self, y: Subset, mid: Subset, z: Subset) -> list[list[Q]]:
        if self.dims[mid] == 0:
            return linalg.zeros(self.dims[y], self.dims[z])
        return linalg.mat_mul(self.covering_map(y, mid), self.covering_map(mid, z))

    def nonzero_maps(self) -> dict[Pair, list[list[Q]]]:
        return {p: [row[:] for row in m] for p, m in sorted(
            self._maps.items(), key=lambda kv: subset_key(kv[0][0]) + subset_key(kv[0][1])
        )}

    def signature(self):
        """Hashable canonical form: dims plus nonzero covering maps."""
        dims = tuple(self.dims[s] for s in self.algebra.subsets)
        maps = tuple(
            (subset_key(y), subset_key(z), tuple(tuple(x for x in row) for row in m))
            for (y, z), m in sorted(
                self._maps.items(),
                key=lambda kv: subset_key(kv[0][0]) + subset_key(kv[0][1]),
            )
        )
        return (self.algebra.n, dims, maps)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AlgebraModule) and self.signature() == other.signature()
        )

    def __hash__(self) -> int:
        return hash(self.signature())

    def __repr__(self) -> str:
        dims = {tuple(sorted(y)): d for y, d in self.dims.items() if d}
        return f"AlgebraModule(n={self.algebra.n}, dims={dims})"


def interval_module(a: IncidenceAlgebra, lower: Iterable[int], upper: Iterable[int]) -> AlgebraModule:
    """One-dimensional spaces on the interval [lower, upper], identity maps."""
    lo, hi = frozenset(lower), frozenset(upper)
    if lo not in a.subset_index or hi not in a.subset_index or not lo <= hi:
        raise InputError("interval endpoints must satisfy lower <= upper inside the lattice")
    dims = {s: 1 if lo <= s <= hi else 0 for s in a.subsets}
    maps = {}
    for y in a.subsets:
        if not lo <= y <= hi:
            continue
        for x in sorted(hi - y):
            z = y | {x}
            if z <= hi:
                maps[(y, z)] = [[Q(1)]]
    return AlgebraModule(a, dims, maps)


def direct_sum(a: IncidenceAlgebra, modules: Sequence[AlgebraModule]) -> AlgebraModule:
    dims = {s: sum(m.dims[s] for m in modules) for s in a.subsets}
    maps = {}
    for y in a.subsets:
        for x in range(1, a.n + 1):
            if x in y:
                continue
            z = y | {x}
            if dims[y] == 0 or dims[z] == 0:
                continue
            block = linalg.zeros(dims[y], dims[z])
            ro = co = 0
            for m in modules:
                sub = m.covering_map(y, z)
                for i, row in enumerate(sub):
                    for j, val in enumerate(row):
                        block[ro + i][co + j] = val
                ro += m.dims[y]
                co += m.dims[z]
            maps[(y, z)] = block
    return AlgebraModule(a, dims, maps)


def regular_module(a: IncidenceAlgebra) -> AlgebraModule:
    """The algebra as a right module over itself: the direct sum of the
    projectives, one upward interval per subset."""
    top = frozenset(range(1, a.n + 1))
    return direct_sum(a, [interval_module(a, y, top) for y in a.subsets])


def projective_injective_dims(a: IncidenceAlgebra) -> dict:
    """Dimensions and composition data of the projectives and injectives.

    Built from the actual interval modules: the projective at Y lives on
    [Y, top], the injective at Z on [bottom, Z].  Composition length is
    the total dimension (vertex simples), and every factor has
    multiplicity at most one exactly when every vertex dimension is.
    """
    top = frozenset(range(1, a.n + 1))
    bottom: Subset = frozenset()
    out: dict[str, dict[Subset, dict]] = {"projective": {}, "injective": {}}
    for y in a.subsets:
        p = interval_module(a, y, top)
        i = interval_module(a, bottom, y)
        out["projective"][y] = {
            "dim": p.total_dim,
            "length": sum(p.dims.values()),
            "multiplicity_free": all(d <= 1 for d in p.dims.values()),
        }
        out["injective"][y] = {
            "dim": i.total_dim,
            "length": sum(i.dims.values()),
            "multiplicity_free": all(d <= 1 for d in i.dims.values()),
        }
    return out


# ----------------------------------------------------------------------
# hom spaces, endomorphism algebras, and Krull-Schmidt splitting


class _HomSpace:
    """Basis of module homomorphisms with coordinate bookkeeping."""

    def __init__(self, source: AlgebraModule, target: AlgebraModule):
        a = source.algebra
        verts = [
            y
            for y in a.subsets
            if source.dims[y] > 0 and target.dims[y] > 0
        ]
        offsets: dict[Subset, int] = {}
        width = 0
        for y in verts:
            offsets[y] = width
            width += source.dims[y] * target.dims[y]
        rows: list[list[Q]] = []
        for y in a.subsets:
            for x in range(1, a.n + 1):
                if x in y:
                    continue
                z = y | {x}
                d1y, d2y = source.dims[y], target.dims[y]
                d1z, d2z = source.dims[z], target.dims[z]
                if d1y == 0 or d2z == 0:
                    continue
                m1 = source.covering_map(y, z)
                m2 = target.covering_map(y, z)
                for r_ in range(d1y):
                    for c_ in range(d2z):
                        row = [Q(0)] * width
                        if d2y > 0:
                            base = offsets[y]
                            for t in range(d2y):
                                row[base + r_ * d2y + t] += m2[t][c_]
                        if d1z > 0 and z in offsets:
                            base = offsets[z]
                            for t in range(d1z):
                                row[base + t * d2z + c_] -= m1[r_][t]
                        if any(row):
                            rows.append(row)
        self.source = source
        self.target = target
        self.verts = verts
        self.offsets = offsets
        self.width = width
        self.vectors, self.free_cols = linalg.nullspace(rows, ncols=width)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def matrices(self, vec: Sequence[Q]) -> dict[Subset, list[list[Q]]]:
        out = {}
        for y in self.verts:
            d1, d2 = self.source.dims[y], self.target.dims[y]
            base = self.offsets[y]
            out[y] = [
                [vec[base + r * d2 + c] for c in range(d2)] for r in range(d1)
            ]
        return out

    def element(self, coeffs: Sequence[Q]) -> dict[Subset, list[list[Q]]]:
        vec = [Q(0)] * self.width
        for coeff, basis_vec in zip(coeffs, self.vectors):
            if coeff:
                for j, x in enumerate(basis_vec):
                    vec[j] += coeff * x
        return self.matrices(vec)

    def flatten(self, endo: Mapping[Subset, Sequence[Sequence[Q]]]) -> list[Q]:
        vec = [Q(0)] * self.width
        for y in self.verts:
            base = self.offsets[y]
            d2 = self.target.dims[y]
            m = endo[y]
            for r, row in enumerate(m):
                for c, x in enumerate(row):
                    vec[base + r * d2 + c] = Q(x)
        return vec

    def coords(self, endo: Mapping[Subset, Sequence[Sequence[Q]]]) -> list[Q]:
        return linalg.coords_in_span(self.vectors, self.free_cols, self.flatten(endo))


def hom_basis(
    source: AlgebraModule, target: AlgebraModule
) -> list[dict[Subset, list[list[Q]]]]:
    space = _HomSpace(source, target)
    return [space.matrices(v) for v in space.vectors]


def _endo_identity(m: AlgebraModule) -> dict[Subset, list[list[Q]]]:
    return {
        y: linalg.identity(m.dims[y]) for y in m.algebra.subsets if m.dims[y] > 0
    }


def _endo_compose(
    m: AlgebraModule,
    a_: Mapping[Subset, list[list[Q]]],
    b_: Mapping[Subset, list[list[Q]]],
) -> dict[Subset, list[list[Q]]]:
    return {
        y: linalg.mat_mul(a_[y], b_[y]) for y in a_
    }


def _is_local_end(space: _HomSpace) -> bool:
    """Sound certificate that the endomorphism algebra is local: the
    semisimple quotient is one dimensional over the rationals.

    The trace form of the regular representation has the radical as its
    null space in characteristic zero, so the quotient dimension is the
    form's rank.  Rank one certifies locality; a local algebra whose
    residue division algebra is bigger than the rationals is not
    certified here and surfaces as an honest uncertified summand.
    """
    m = space.dim
    if m == 1:
        return True
    endos = [space.matrices(v) for v in space.vectors]
    struct = []
    for ei in endos:
        row = []
        for ej in endos:
            row.append(space.coords(_endo_compose(space.source, ei, ej)))
        struct.append(row)
    regular_trace = [
        sum(struct[k][i][i] for i in range(m)) for k in range(m)
    ]
    gram = [
        [
            sum(struct[i][j][k] * regular_trace[k] for k in range(m))
            for j in range(m)
        ]
        for i in range(m)
    ]
    return linalg.rank(gram) == 1


def _poly_mul(a_: list[Q], b_: list[Q]) -> list[Q]:
    out = [Q(0)] * (len(a_) + len(b_) - 1)
    for i, x in enumerate(a_):
        if x:
            for j, y in enumerate(b_):
                out[i + j] += x * y
    return out


def _poly_pow(p: list[Q], e: int) -> list[Q]:
    out = [Q(1)]
    for _ in range(e):
        out = _poly_mul(out, p)
    return out


def _min_poly(m: AlgebraModule, endo: Mapping[Subset, list[list[Q]]]) -> list[Q]:
    """Monic minimal polynomial, coefficients lowest degree first."""
    space_dims = [
        (y, m.dims[y]) for y in m.algebra.subsets if m.dims[y] > 0
    ]

    def flat(e: Mapping[Subset, list[list[Q]]]) -> list[Q]:
        vec: list[Q] = []
        for y, _ in space_dims:
            for row in e[y]:
                vec.extend(Q(x) for x in row)
        return vec

    powers = [_endo_identity(m)]
    rows = [flat(powers[0])]
    while True:
        nxt = _endo_compose(m, powers[-1], endo)
        coeffs = linalg.express_in_rowspace(rows, flat(nxt))
        if coeffs is not None:
            k = len(rows)
            out = [-c for c in coeffs] + [Q(1)]
            assert len(out) == k + 1
            return out
        powers.append(nxt)
        rows.append(flat(nxt))


def _factor_rational_poly(coeffs: list[Q]) -> list[tuple[list[Q], int]]:
    """Irreducible factors (lowest-first coefficients) with exponents."""
    import sympy

    x = sympy.Symbol("x")
    expr = sum(
        sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(coeffs)
    )
    _, factors = sympy.Poly(expr, x, domain="QQ").factor_list()
    out = []
    for poly, exp in factors:
        cs = list(reversed(poly.all_coeffs()))
        out.append(([Q(c.p, c.q) for c in cs], int(exp)))
    out.sort(key=lambda fe: (len(fe[0]), [(c.numerator, c.denominator) for c in fe[0]]))
    return out


def _poly_at_endo(
    m: AlgebraModule, endo: Mapping[Subset, list[list[Q]]], coeffs: list[Q]
) -> dict[Subset, list[list[Q]]]:
    out = {}
    for y in m.algebra.subsets:
        d = m.dims[y]
        if d == 0:
            continue
        g = endo[y]
        acc = linalg.zeros(d, d)
        for c in reversed(coeffs):
            acc = linalg.mat_mul(acc, g)
            if c:
                for i in range(d):
                    acc[i][i] += c
        out[y] = acc
    return out


def _kernel_restriction(
    m: AlgebraModule, op: Mapping[Subset, list[list[Q]]]
) -> AlgebraModule:
    """Submodule cut out by the kernel of a commuting operator."""
    bases: dict[Subset, tuple[list[list[Q]], list[int]]] = {}
    dims: dict[Subset, int] = {}
    for y in m.algebra.subsets:
        if m.dims[y] == 0:
            dims[y] = 0
            continue
        rows, free = linalg.nullspace(
            [list(col) for col in zip(*op[y])], ncols=m.dims[y]
        )
        bases[y] = (rows, free)
        dims[y] = len(rows)
    maps = {}
    for y in m.algebra.subsets:
        if dims[y] == 0:
            continue
        for x in range(1, m.algebra.n + 1):
            if x in y:
                continue
            z = y | {x}
            if dims[z] == 0:
                continue
            by, _ = bases[y]
            bz, free_z = bases[z]
            image = linalg.mat_mul(by, m.covering_map(y, z))
            maps[(y, z)] = [
                linalg.coords_in_span(bz, free_z, row) for row in image
            ]
    return AlgebraModule(m.algebra, dims, maps, validate=False)


def _find_split(
    m: AlgebraModule, space: _HomSpace, rng: random.Random, retries: int = 60
) -> Optional[tuple[AlgebraModule, AlgebraModule]]:
    """Look for a proper direct-sum split through one endomorphism.

    Tries each basis endomorphism first and then seeded random integer
    combinations; an endomorphism splits the module whenever its
    minimal polynomial has two coprime parts (kernels of the parts are
    complementary submodules).
    """
    total = m.total_dim

    def candidates():
        for v in space.vectors:
            yield space.matrices(v)
        bound = 3
        for k in range(retries):
            if k and k % 20 == 0:
                bound += 2
            coeffs = [Q(rng.randint(-bound, bound)) for _ in range(space.dim)]
            yield space.element(coeffs)

    for endo in candidates():
        minpoly = _min_poly(m, endo)
        factors = _factor_rational_poly(minpoly)
        if len(factors) < 2:
            continue
        first, exp = factors[0]
        rest = [Q(1)]
        for poly, e in factors[1:]:
            rest = _poly_mul(rest, _poly_pow(poly, e))
        part1 = _kernel_restriction(m, _poly_at_endo(m, endo, _poly_pow(first, exp)))
        part2 = _kernel_restriction(m, _poly_at_endo(m, endo, rest))
        if (
            part1.total_dim
            and part2.total_dim
            and part1.total_dim + part2.total_dim == total
        ):
            return part1, part2
    return None


def is_isomorphic(
    m1: AlgebraModule, m2: AlgebraModule, *, seed: int = DEFAULT_SEED, rounds: int = 40
) -> bool:
    """Randomized isomorphism test with exact verification.

    Requires equal dimension vectors, then searches the hom space for an
    element invertible at every vertex: basis elements first, then
    seeded integer combinations drawn from a box wide enough that a
    nonzero determinant polynomial is missed with probability at most
    one half per round.  A hit is verified exactly, so the only failure
    mode is declaring isomorphic modules distinct, at probability at
    most 2**-rounds.
    """
    if m1.algebra.n != m2.algebra.n:
        return False
    if any(m1.dims[y] != m2.dims[y] for y in m1.algebra.subsets):
        return False
    if m1.total_dim == 0:
        return True
    space = _HomSpace(m1, m2)
    if space.dim == 0:
        return False

    def invertible(endo: Mapping[Subset, list[list[Q]]]) -> bool:
        for y in space.verts:
            if m1.dims[y] and not linalg.det(endo[y]):
                return False
        return True

    for v in space.vectors:
        if invertible(space.matrices(v)):
            return True
    rng = random.Random(seed)
    box = max(7, m1.total_dim + 1)
    for _ in range(rounds):
        coeffs = [Q(rng.randint(-box, box)) for _ in range(space.dim)]
        if invertible(space.element(coeffs)):
            return True
    return False


def _split_recursive(
    m: AlgebraModule, rng: random.Random, out: list[tuple[AlgebraModule, bool]]
) -> None:
    if m.total_dim == 0:
        return
    space = _HomSpace(m, m)
    if _is_local_end(space):
        out.append((m, True))
        return
    pair = _find_split(m, space, rng)
    if pair is None:
        out.append((m, False))
        return
    for part in pair:
        _split_recursive(part, rng, out)


def krull_schmidt_decompose(
    a: IncidenceAlgebra, m: AlgebraModule, seed: int = DEFAULT_SEED
) -> list[tuple[AlgebraModule, int, bool]]:
    """Indecomposable summands with multiplicities and local certificates.

    Splits recursively through endomorphism kernels until every piece
    has a local endomorphism algebra (certified via the trace-form
    radical, valid in characteristic zero) or no further split is found;
    the latter is reported honestly through is_certified_local=False
    rather than guessed.  Pieces are then grouped into isomorphism
    classes by the randomized-but-verified hom test.  The whole run is
    deterministic for a fixed seed.
    """
    if m.algebra.n != a.n:
        raise InputError("module does not live over the given algebra")
    if m.total_dim > MODULE_DIM_GUARD:
        raise ResourceGuardError(
            f"module dimension {m.total_dim} beyond the guard ({MODULE_DIM_GUARD})"
        )
    rng = random.Random(seed)
    pieces: list[tuple[AlgebraModule, bool]] = []
    _split_recursive(m, rng, pieces)
    pieces.sort(key=lambda pc: (-pc[0].total_dim, pc[0].signature()))
    classes: list[tuple[AlgebraModule, int, bool]] = []
    for piece, certified in pieces:
        for k, (rep, mult, cert) in enumerate(classes):
            if piece.total_dim == rep.total_dim and is_isomorphic(
                rep, piece, seed=rng.randrange(2**32)
            ):
                classes[k] = (rep, mult + 1, cert and certified)
                break
        else:
            classes.append((piece, 1, certified))
    return classes
