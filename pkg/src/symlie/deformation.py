"""Order-by-order deformation machinery: residuals of the quadratic
deformation equation, the linear solver for each order, obstruction
classes modulo the image of the differential, and exact truncated
exponential gauge transport.

Series are truncated t-power series; everything is exact rational.
The order-n equation is  d phi_n = -(1/2) sum_{i+j=n, i,j>=1} [phi_i, phi_j]
(the i=0 terms are the left-hand side), and the order-0 datum
(1/2)[mu, mu] is reported separately rather than treated as a failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import Algebra, product_cochain
from .bracket import InsertionMode, graded_bracket
from .cochain import SymCochain, coeff_vector, from_coeff_vector, multisets, sym_basis_dim
from .errors import InvariantViolation
from .exactla import Matrix, rref, solve, vzero
from .complexes import coboundary_c1_matrix, differential, differential_matrix


@dataclass
class DeformationSeries:
    """mu_t = mu + t phi_1 + ... + t^N phi_N with arity-2 terms."""
    base: Algebra
    order: int
    terms: list[SymCochain]
    mode: InsertionMode = InsertionMode.SUM

    def __post_init__(self):
        if len(self.terms) != self.order:
            raise ValueError("need exactly `order` series terms")
        for t in self.terms:
            if t.n != 2 or t.dim != self.base.dim:
                raise ValueError("series terms must be arity-2 cochains on the base algebra")

    def term(self, i: int) -> SymCochain:
        """phi_i, with phi_i = 0 beyond the truncation order."""
        if i < 1:
            raise ValueError("series terms start at order 1")
        if i <= self.order:
            return self.terms[i - 1]
        return SymCochain.zero(2, self.base.dim)

    def to_json_list(self) -> list:
        return [dict(t.to_json_dict(), order=i + 1) for i, t in enumerate(self.terms)]


@dataclass
class GaugeSeries:
    """T_t = exp(t f_1 + t^2 f_2 + ...) with arity-1 terms f_i."""
    order: int
    terms: list[SymCochain]

    def __post_init__(self):
        if len(self.terms) != self.order:
            raise ValueError("need exactly `order` series terms")
        for t in self.terms:
            if t.n != 1:
                raise ValueError("gauge terms must be arity-1 cochains")

    @property
    def dim(self) -> int:
        return self.terms[0].dim if self.terms else 0

    def inverse(self) -> "GaugeSeries":
        """exp(X)^{-1} = exp(-X): negate every exponent term."""
        return GaugeSeries(self.order, [-t for t in self.terms])

    def to_json_list(self) -> list:
        return [dict(t.to_json_dict(), order=i + 1) for i, t in enumerate(self.terms)]


def series_from_json_list(raw, arity: int) -> list[SymCochain]:
    """Read a series file: a list of cochain objects carrying an "order" field.
    Missing orders are zero; duplicate orders are rejected."""
    if not isinstance(raw, list):
        raise ValueError("series document must be a list of cochain objects")
    by_order: dict[int, SymCochain] = {}
    for item in raw:
        if not isinstance(item, dict) or "order" not in item:
            raise ValueError("each series entry needs an integer 'order' field")
        i = int(item["order"])
        if i < 1:
            raise ValueError("series orders start at 1")
        if i in by_order:
            raise ValueError(f"duplicate series order {i}")
        c = SymCochain.from_json_dict({k: v for k, v in item.items() if k != "order"})
        if c.n != arity:
            raise ValueError(f"series term at order {i} has arity {c.n}, expected {arity}")
        by_order[i] = c
    if not by_order:
        raise ValueError("series document is empty")
    top = max(by_order)
    dim = next(iter(by_order.values())).dim
    return [by_order.get(i, SymCochain.zero(arity, dim)) for i in range(1, top + 1)]


# ---------------------------------------------------------------------------
# residuals and the order-by-order solver

def mc_order0(s: DeformationSeries) -> SymCochain:
    """The order-0 datum (1/2)[mu, mu] of the quadratic equation."""
    mu = product_cochain(s.base)
    return graded_bracket(mu, mu, s.mode).scale(Fraction(1, 2))


def mc_residual(s: DeformationSeries, upto: int) -> list[SymCochain]:
    """Residuals R_n = d phi_n + (1/2) sum_{i+j=n, i,j>=1} [phi_i, phi_j]
    for n = 1..upto (phi_n = 0 past the truncation order)."""
    if upto < 0 or upto > 2 * s.order:
        raise ValueError("residual order out of range")
    half = Fraction(1, 2)
    out = []
    for n in range(1, upto + 1):
        r = differential(s.base, s.term(n), s.mode)
        for i in range(1, n):
            j = n - i
            r = r + graded_bracket(s.term(i), s.term(j), s.mode).scale(half)
        out.append(r)
    return out


@dataclass
class ObstructionClass:
    representative: SymCochain
    in_image: bool
    quotient_coords: tuple[Fraction, ...]

    def to_json_dict(self) -> dict:
        from .exactla import rat_to_str
        return {
            "representative": self.representative.to_json_dict(),
            "in_image": self.in_image,
            "quotient_coords": [rat_to_str(x) for x in self.quotient_coords],
        }


def _image_and_complement(A: Algebra, mode: InsertionMode):
    """Independent columns of the arity-2 differential plus a deterministic
    complement of standard basis vectors; together a basis of the arity-3
    coefficient space."""
    D = differential_matrix(A, 2, mode).matrix
    _, pivots = rref(D)
    imvecs = [D.column(j) for j in pivots]
    R = D.rows
    eye = Matrix.identity(R)
    probe = Matrix.from_columns(imvecs + [eye.column(i) for i in range(R)], R) \
        if imvecs else eye
    _, ppiv = rref(probe)
    complement = [p - len(imvecs) for p in ppiv if p >= len(imvecs)]
    return imvecs, complement


def class_modulo_image(A: Algebra, r: SymCochain, mode: InsertionMode) -> ObstructionClass:
    """Coordinates of an arity-3 cochain modulo the image of d at arity 2,
    in a fixed complement basis."""
    imvecs, complement = _image_and_complement(A, mode)
    R = sym_basis_dim(A.dim, 3)
    eye = Matrix.identity(R)
    basis = Matrix.from_columns(imvecs + [eye.column(i) for i in complement], R)
    coords = solve(basis, coeff_vector(r))
    if coords is None:
        raise InvariantViolation("image+complement failed to span the cochain space")
    quotient = tuple(coords[len(imvecs):])
    return ObstructionClass(r, all(x == 0 for x in quotient), quotient)


def obstruction_class(A: Algebra, phi1: SymCochain,
                      mode: InsertionMode = InsertionMode.SUM) -> ObstructionClass:
    """Class data of r = -(1/2)[phi1, phi1] modulo the image of d."""
    r = graded_bracket(phi1, phi1, mode).scale(Fraction(-1, 2))
    return class_modulo_image(A, r, mode)


@dataclass
class MCStep:
    order: int
    solvable: bool
    solution: SymCochain | None = None
    obstruction: ObstructionClass | None = None


def mc_solve_step(s: DeformationSeries, n: int) -> MCStep:
    """Solve the order-n equation for phi_n given phi_1..phi_{n-1} from s.

    Returns the deterministic particular solution (free variables zeroed),
    or the obstruction residual (1/2) sum [phi_i, phi_j] with its class data
    when the linear system is inconsistent.
    """
    if n < 1:
        raise ValueError("solver orders start at 1")
    A, mode = s.base, s.mode
    half = Fraction(1, 2)
    rhs = SymCochain.zero(3, A.dim)
    for i in range(1, n):
        j = n - i
        rhs = rhs + graded_bracket(s.term(i), s.term(j), mode).scale(half)
    D = differential_matrix(A, 2, mode).matrix
    x = solve(D, [-c for c in coeff_vector(rhs)])
    if x is None:
        return MCStep(n, False, obstruction=class_modulo_image(A, rhs, mode))
    return MCStep(n, True, solution=from_coeff_vector(A.dim, 2, x))


def mc_solve_chain(A: Algebra, phi1: SymCochain, order: int,
                   mode: InsertionMode = InsertionMode.SUM):
    """Extend phi1 order by order up to `order`; stops at the first
    obstruction.  Returns (series, failed_step_or_None)."""
    s = DeformationSeries(A, 1, [phi1], mode)
    for n in range(2, order + 1):
        step = mc_solve_step(s, n)
        if not step.solvable:
            return s, step
        s = DeformationSeries(A, n, s.terms + [step.solution], mode)
    return s, None


# ---------------------------------------------------------------------------
# gauge transport

def _endo_matrix(f: SymCochain) -> Matrix:
    d = f.dim
    return Matrix.from_columns([f.value_at((j,)) for j in range(d)], d)


def _series_mul(a: list[Matrix], b: list[Matrix], N: int, d: int) -> list[Matrix]:
    out = []
    for n in range(N + 1):
        acc = Matrix.zeros(d, d)
        for i in range(n + 1):
            if not a[i].is_zero() and not b[n - i].is_zero():
                acc = acc.add(a[i].mul(b[n - i]))
        out.append(acc)
    return out


def _exp_series(fmats: list[Matrix], N: int, d: int) -> list[Matrix]:
    """exp(t f_1 + t^2 f_2 + ...) truncated at t^N, exact rationals."""
    X = [Matrix.zeros(d, d)] + [fmats[i - 1] if i <= len(fmats) else Matrix.zeros(d, d)
                                for i in range(1, N + 1)]
    T = [Matrix.identity(d)] + [Matrix.zeros(d, d) for _ in range(N)]
    power = X
    k = 1
    while k <= N:
        c = Fraction(1, factorial(k))
        for n in range(k, N + 1):
            T[n] = T[n].add(power[n].scale(c))
        k += 1
        if k <= N:
            power = _series_mul(power, X, N, d)
    return T


def _inverse_series(T: list[Matrix], N: int, d: int) -> list[Matrix]:
    S = [Matrix.identity(d)] + [Matrix.zeros(d, d) for _ in range(N)]
    for n in range(1, N + 1):
        acc = Matrix.zeros(d, d)
        for a in range(1, n + 1):
            acc = acc.add(T[a].mul(S[n - a]))
        S[n] = acc.scale(-1)
    return S


def gauge_transport_series(T: GaugeSeries, s: DeformationSeries, N: int) -> DeformationSeries:
    """Transport a full series: mu_t' (x, y) = T_t mu_t(T_t^{-1} x, T_t^{-1} y),
    expanded order by order and truncated at t^N."""
    A = s.base
    d = A.dim
    Tm = _exp_series([_endo_matrix(f) for f in T.terms], N, d)
    Sm = _inverse_series(Tm, N, d)
    mu_terms = [product_cochain(A)] + [s.term(i) for i in range(1, N + 1)]

    transported = []
    for n in range(N + 1):
        coeffs = {}
        for mset in multisets(d, 2):
            i, j = mset
            acc = list(vzero(d))
            for a in range(n + 1):
                for b in range(n - a + 1):
                    for c in range(n - a - b + 1):
                        e = n - a - b - c
                        val = mu_terms[e].evaluate(
                            (Sm[b].column(i), Sm[c].column(j)))
                        if any(val):
                            out = Tm[a].mul_vec(val)
                            for t in range(d):
                                acc[t] += out[t]
            if any(acc):
                coeffs[mset] = tuple(acc)
        transported.append(SymCochain(2, d, coeffs))
    if transported[0] != product_cochain(A):
        raise InvariantViolation("gauge transport must fix the product at order 0")
    return DeformationSeries(A, N, transported[1:], s.mode)


def gauge_transport(T: GaugeSeries, A: Algebra, N: int,
                    mode: InsertionMode = InsertionMode.SUM) -> DeformationSeries:
    """Transport of the undeformed product.  The order-1 term is the printed
    arity-1 coboundary of f_1: f_1(x*y) - f_1(x)*y - x*f_1(y)."""
    if N < 1:
        raise ValueError("transport order must be >= 1")
    trivial = DeformationSeries(A, 0, [], mode)
    return gauge_transport_series(T, trivial, N)


def gauge_equiv_first_order(A: Algebra, phi: SymCochain, phi2: SymCochain):
    """Solve (printed arity-1 coboundary)(f) = phi2 - phi for f; returns an
    arity-1 cochain or None when the two are not equivalent at first order."""
    if phi.n != 2 or phi2.n != 2 or phi.dim != A.dim or phi2.dim != A.dim:
        raise ValueError("first-order gauge equivalence needs arity-2 cochains on A")
    B = coboundary_c1_matrix(A)
    x = solve(B, coeff_vector(phi2 - phi))
    if x is None:
        return None
    return from_coeff_vector(A.dim, 1, x)
