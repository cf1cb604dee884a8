"""Totally symmetric multilinear cochains on a multiset basis.

A cochain of arity n on a d-dimensional space is a symmetric n-linear map
J x ... x J -> J.  Coefficients are stored per sorted index multiset:
coeffs[M][k] is coordinate k of the value at the basis tuple of M,
repetitions included (NOT a divided-power coefficient).  Symmetry of
evaluation is therefore an invariant of the representation itself.

The bracket grading assigns a cochain of arity n the degree n - 1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from math import comb, factorial

from .exactla import rat_from_str, rat_to_str, vzero


@lru_cache(maxsize=None)
def multisets(dim: int, n: int) -> tuple[tuple[int, ...], ...]:
    """All size-n multisets over {0..dim-1} as sorted tuples, lexicographic."""
    return tuple(combinations_with_replacement(range(dim), n))


def sym_basis_dim(dim: int, n: int) -> int:
    """dim of the space of symmetric n-cochains: C(dim+n-1, n) * dim."""
    if dim < 1:
        raise ValueError("ambient dimension must be >= 1")
    return comb(dim + n - 1, n) * dim


class SymCochain:
    __slots__ = ("n", "dim", "coeffs")

    def __init__(self, n: int, dim: int, coeffs=None):
        if n < 0 or dim < 1:
            raise ValueError("bad cochain shape")
        self.n = n
        self.dim = dim
        clean: dict[tuple[int, ...], tuple[Fraction, ...]] = {}
        for key, vec in (coeffs or {}).items():
            key = tuple(key)
            if len(key) != n or tuple(sorted(key)) != key or any(not 0 <= i < dim for i in key):
                raise ValueError(f"bad multiset key {key} for arity {n}, dim {dim}")
            vec = tuple(Fraction(x) for x in vec)
            if len(vec) != dim:
                raise ValueError("value vector has wrong length")
            if any(vec):
                clean[key] = vec
        self.coeffs = clean

    # -- degree bookkeeping ------------------------------------------------
    @property
    def degree(self) -> int:
        return self.n - 1

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, n: int, dim: int) -> "SymCochain":
        return cls(n, dim, {})

    @classmethod
    def from_entries(cls, n: int, dim: int, entries) -> "SymCochain":
        """entries: iterable of (multiset, k, value)."""
        coeffs: dict[tuple[int, ...], list[Fraction]] = {}
        for mset, k, val in entries:
            key = tuple(sorted(mset))
            vec = coeffs.setdefault(key, [Fraction(0)] * dim)
            vec[k] += Fraction(val)
        return cls(n, dim, coeffs)

    # -- access ------------------------------------------------------------
    def value_at(self, mset) -> tuple[Fraction, ...]:
        """Value vector at the basis tuple of the given multiset."""
        return self.coeffs.get(tuple(sorted(mset)), vzero(self.dim))

    def coeff(self, mset, k: int) -> Fraction:
        return self.value_at(mset)[k]

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self):
        """Deterministic iteration: sorted multisets, then output index."""
        for key in sorted(self.coeffs):
            vec = self.coeffs[key]
            for k in range(self.dim):
                if vec[k]:
                    yield key, k, vec[k]

    # -- linear structure ----------------------------------------------------
    def _binop(self, other: "SymCochain", sign: int) -> "SymCochain":
        if not isinstance(other, SymCochain):
            return NotImplemented
        if self.dim != other.dim or self.n != other.n:
            raise ValueError("cochain arity/dimension mismatch")
        out = dict(self.coeffs)
        for key, vec in other.coeffs.items():
            cur = out.get(key, vzero(self.dim))
            out[key] = tuple(a + sign * b for a, b in zip(cur, vec))
        return SymCochain(self.n, self.dim, out)

    def __add__(self, other):
        return self._binop(other, 1)

    def __sub__(self, other):
        return self._binop(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "SymCochain":
        c = Fraction(c)
        if c == 0:
            return SymCochain.zero(self.n, self.dim)
        return SymCochain(self.n, self.dim,
                          {k: tuple(c * x for x in v) for k, v in self.coeffs.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SymCochain) and self.n == other.n
                and self.dim == other.dim and self.coeffs == other.coeffs)

    def __repr__(self) -> str:
        return f"SymCochain(n={self.n}, dim={self.dim}, {len(self.coeffs)} keys)"

    # -- evaluation ----------------------------------------------------------
    def evaluate(self, args) -> tuple[Fraction, ...]:
        """Multilinear symmetric extension at general vectors.

        Contracts one argument at a time; by the storage convention the
        result at a basis tuple is exactly the stored coefficient vector.
        """
        args = [tuple(Fraction(x) for x in a) for a in args]
        if len(args) != self.n:
            raise ValueError(f"expected {self.n} arguments, got {len(args)}")
        if any(len(a) != self.dim for a in args):
            raise ValueError("argument vector has wrong length")
        cur = self.coeffs
        for v in args:
            nxt: dict[tuple[int, ...], tuple[Fraction, ...]] = {}
            for mset, vec in cur.items():
                prev = None
                for pos, i in enumerate(mset):
                    if i == prev:
                        continue
                    prev = i
                    c = v[i]
                    if c == 0:
                        continue
                    red = mset[:pos] + mset[pos + 1:]
                    acc = nxt.get(red)
                    if acc is None:
                        nxt[red] = tuple(c * x for x in vec)
                    else:
                        nxt[red] = tuple(a + c * x for a, x in zip(acc, vec))
            cur = nxt
        return cur.get((), vzero(self.dim))

    # -- serialization --------------------------------------------------------
    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "dim": self.dim,
            "coeffs": [
                {"multiset": list(key), "k": k, "c": rat_to_str(val)}
                for key, k, val in self.items()
            ],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "SymCochain":
        if not isinstance(d, dict):
            raise ValueError("cochain document must be an object")
        try:
            n = int(d["n"])
            dim = int(d["dim"])
            raw = d["coeffs"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"cochain document missing field: {exc}") from None
        if not isinstance(raw, list):
            raise ValueError("coeffs must be a list")
        seen = set()
        entries = []
        for item in raw:
            try:
                mset = tuple(int(i) for i in item["multiset"])
                k = int(item["k"])
                c = rat_from_str(item["c"])
            except (KeyError, TypeError) as exc:
                raise ValueError(f"bad coefficient entry: {exc}") from None
            if tuple(sorted(mset)) != mset:
                raise ValueError(f"multiset not sorted: {list(mset)}")
            if len(mset) != n or any(not 0 <= i < dim for i in mset) or not 0 <= k < dim:
                raise ValueError(f"coefficient entry out of range: {item}")
            if (mset, k) in seen:
                raise ValueError(f"duplicate coefficient key {(list(mset), k)}")
            seen.add((mset, k))
            entries.append((mset, k, c))
        return cls.from_entries(n, dim, entries)


def symmetrize(table, n: int, dim: int) -> SymCochain:
    """Average a full multilinear table over all argument orders.

    `table` maps ordered basis index tuples to value vectors; missing
    tuples count as zero.  Idempotent on already-symmetric input.
    """
    fact = factorial(n)
    coeffs = {}
    for mset in multisets(dim, n):
        tot = list(vzero(dim))
        for perm in permutations(mset):
            vec = table.get(perm)
            if vec is None:
                continue
            for k in range(dim):
                tot[k] += Fraction(vec[k])
        vec = tuple(x / fact for x in tot)
        if any(vec):
            coeffs[mset] = vec
    return SymCochain(n, dim, coeffs)


def linear_combine(scalars, cochains) -> SymCochain:
    cochains = list(cochains)
    scalars = [Fraction(s) for s in scalars]
    if len(scalars) != len(cochains) or not cochains:
        raise ValueError("need matching nonempty scalar/cochain lists")
    first = cochains[0]
    out = SymCochain.zero(first.n, first.dim)
    for s, f in zip(scalars, cochains):
        out = out + f.scale(s)
    return out


def basis_cochains(dim: int, n: int):
    """Yield ((multiset, k), cochain) in the canonical flat order."""
    for mset in multisets(dim, n):
        for k in range(dim):
            yield (mset, k), SymCochain(n, dim, {mset: tuple(
                Fraction(1 if t == k else 0) for t in range(dim))})


def coeff_vector(f: SymCochain) -> list[Fraction]:
    """Flatten to the canonical coordinate order (multiset-major, then k)."""
    out = []
    for mset in multisets(f.dim, f.n):
        vec = f.value_at(mset)
        out.extend(vec)
    return out


def from_coeff_vector(dim: int, n: int, vec) -> SymCochain:
    vec = list(vec)
    msets = multisets(dim, n)
    if len(vec) != len(msets) * dim:
        raise ValueError("coefficient vector has wrong length")
    coeffs = {}
    for idx, mset in enumerate(msets):
        chunk = tuple(Fraction(x) for x in vec[idx * dim:(idx + 1) * dim])
        if any(chunk):
            coeffs[mset] = chunk
    return SymCochain(n, dim, coeffs)
