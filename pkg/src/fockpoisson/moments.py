"""Moment engines, the orthogonal-polynomial recurrence, and the limit cases.

Three independent routes compute the same moment polynomial m_n(l, s, t):

  * moment_nc        - sum over non-crossing partitions of l^blocks *
                       s^td1 * t^td2,
  * moment_blockwise - the same sum written as a per-block product, blocks of
                       size <= 2 contributing s^depth and larger blocks
                       (s * t^(size-2))^depth,
  * moment_jacobi    - (0,0) entry of powers of the monic tridiagonal matrix
                       built from the recurrence coefficients
                       alpha_1 = l, alpha_{k} = l*s^(k-1) + t^(k-2) (k >= 2),
                       omega_k = l*s^(k-1),

with the operator engine in fockpoisson.fock as a fourth.  Exact agreement of
all four is the package's central cross-check and is wired into the test
suite and the CLI's all-engines mode.

Limits are polynomial operations: s = 1 or t = 1 erase an exponent, s -> 0 or
t -> 0 drop every term carrying the variable.  The s = 1, t -> 0 table also
arises by counting non-crossing partitions whose inner blocks all have size
at most 2, which cfree_moments computes directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from . import fock
from .partitions import Family, NCPartition, count_by_blocks, enumerate_nc, stats
from .poly import LAM, ONE, ZERO, MultiPoly


class DegreeOutOfRangeError(ValueError):
    """The functional was applied to a polynomial beyond the table's degree."""


# -- Jacobi parameters and orthogonal polynomials ---------------------------


@dataclass(frozen=True)
class JacobiParams:
    """Recurrence coefficients; alpha[k-1] is alpha_k, omega[k-1] is omega_k."""

    alpha: tuple
    omega: tuple


def jacobi(kmax: int) -> JacobiParams:
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    alpha = [LAM]
    for k in range(2, kmax + 1):
        alpha.append(MultiPoly.term(1, el=1, es=k - 1) + MultiPoly.term(1, et=k - 2))
    omega = [MultiPoly.term(1, el=1, es=k - 1) for k in range(1, kmax + 1)]
    return JacobiParams(alpha=tuple(alpha), omega=tuple(omega))


class XPoly:
    """Polynomial in x with MultiPoly coefficients; coeffs[k] multiplies x^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while len(coeffs) > 1 and not coeffs[-1]:
            coeffs.pop()
        if not coeffs:
            coeffs = [ZERO]
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return self.coeffs[-1] == ONE

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            return XPoly([other * c for c in self.coeffs])
        if not isinstance(other, XPoly):
            return NotImplemented
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return XPoly(out)

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        pad = lambda cs: list(cs) + [ZERO] * (n - len(cs))
        return XPoly([a - b for a, b in zip(pad(self.coeffs), pad(other.coeffs))])

    def shift_up(self) -> "XPoly":
        """Multiply by x."""
        return XPoly((ZERO,) + self.coeffs)

    def __str__(self):
        chunks = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c and self.degree > 0:
                continue
            xpart = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            body = str(c)
            if xpart and body == "1":
                body = xpart
            elif xpart:
                body = f"({body})*{xpart}"
            chunks.append(body)
        # a chunk opening with a bare minus folds into the join
        return " + ".join(chunks).replace(" + -", " - ")


def ortho_polys(nmax: int):
    """Monic orthogonal polynomials C_0 .. C_nmax from the three-term recurrence."""
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    polys = [XPoly([ONE])]
    if nmax == 0:
        return polys
    polys.append(XPoly([-LAM, ONE]))
    jp = jacobi(nmax) if nmax >= 1 else None
    for n in range(1, nmax):
        # C_{n+1} = (x - alpha_{n+1}) * C_n - omega_n * C_{n-1}
        recent = polys[n]
        step = recent.shift_up() - recent * jp.alpha[n]
        polys.append(step - polys[n - 1] * jp.omega[n - 1])
    return polys


# -- the three moment engines -----------------------------------------------


def moment_jacobi(n: int) -> MultiPoly:
    """Vacuum moment as the (0,0) entry of the n-th monic Jacobi matrix power."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ONE
    jp = jacobi(n + 1)
    vec = [ONE] + [ZERO] * n
    for _ in range(n):
        new = []
        for i in range(n + 1):
            acc = jp.alpha[i] * vec[i]
            if i > 0 and vec[i - 1]:
                acc = acc + vec[i - 1]
            if i < n and vec[i + 1]:
                acc = acc + jp.omega[i] * vec[i + 1]
            new.append(acc)
        vec = new
    return vec[0]


def weight(p: NCPartition) -> MultiPoly:
    """l^(number of blocks) * s^td1 * t^td2."""
    st = stats(p)
    return MultiPoly.term(1, el=len(p.blocks), es=st.td1, et=st.td2)


def moment_nc(n: int, max_n=None) -> MultiPoly:
    """Vacuum moment as the weight sum over all non-crossing partitions."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ONE
    acc = {}
    for p in enumerate_nc(n, max_n=max_n):
        st = stats(p)
        key = (2 * len(p.blocks), st.td1, st.td2)
        acc[key] = acc.get(key, 0) + 1
    return MultiPoly(acc)


def moment_blockwise(n: int, max_n=None) -> MultiPoly:
    """Vacuum moment via the per-block depth products (same sum, reshaped)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ONE
    acc = {}
    for p in enumerate_nc(n, max_n=max_n):
        depths = stats(p).block_depths
        es = et = 0
        for b, d in zip(p.blocks, depths):
            if len(b) <= 2:
                es += d
            else:
                es += d
                et += (len(b) - 2) * d
        key = (2 * len(p.blocks), es, et)
        acc[key] = acc.get(key, 0) + 1
    return MultiPoly(acc)


# -- moment tables and the functional ----------------------------------------


@dataclass(frozen=True)
class MomentTable:
    """Moments m[0..n_max] as exact polynomials, m[0] = 1."""

    n_max: int
    m: tuple

    def __post_init__(self):
        if len(self.m) != self.n_max + 1:
            raise ValueError("table length must be n_max + 1")
        if self.m[0] != ONE:
            raise ValueError("m[0] must be 1")


_ENGINES = {
    "nc": moment_nc,
    "blockwise": moment_blockwise,
    "jacobi": moment_jacobi,
    "operator": fock.vacuum_moment,
}


@lru_cache(maxsize=None)
def moment_table(n_max: int, engine: str = "jacobi") -> MomentTable:
    """Moments 0..n_max via one engine; tables are cached per (n_max, engine)."""
    try:
        fn = _ENGINES[engine]
    except KeyError:
        raise ValueError(f"unknown engine {engine!r}") from None
    return MomentTable(n_max=n_max, m=tuple(fn(n) for n in range(n_max + 1)))


def moment_functional(p: XPoly, table: MomentTable) -> MultiPoly:
    """The linear functional sending x^n to m_n, applied coefficient-wise."""
    if p.degree > table.n_max:
        raise DegreeOutOfRangeError(
            f"degree {p.degree} exceeds the table degree {table.n_max}"
        )
    acc = ZERO
    for k, c in enumerate(p.coeffs):
        if c:
            acc = acc + c * table.m[k]
    return acc


# -- special cases ------------------------------------------------------------


def cfree_moments(nmax: int, max_n=None) -> MomentTable:
    """The s = 1, t -> 0 table via counts of partitions with small inner blocks.

    m_n = sum over k of #{pi non-crossing with k blocks, every inner block of
    size <= 2} * l^k.
    """
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    ms = [ONE]
    for n in range(1, nmax + 1):
        counts = count_by_blocks(n, Family.NC12_INNER, max_n=max_n)
        ms.append(MultiPoly({(2 * k, 0, 0): c for k, c in enumerate(counts, 1) if c}))
    return MomentTable(n_max=nmax, m=tuple(ms))


class LimitCase(Enum):
    FREE = "FREE"          # s = t = 1
    BOOLEAN = "BOOLEAN"    # s -> 0, t -> 0
    CFREE = "CFREE"        # s = 1, t -> 0


def limit_case(nmax: int, case: LimitCase, max_n=None) -> MomentTable:
    """Moment table in one of the three classical limits."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    if case is LimitCase.CFREE:
        return cfree_moments(nmax, max_n=max_n)
    ms = [ONE]
    for n in range(1, nmax + 1):
        m = moment_nc(n, max_n=max_n)
        if case is LimitCase.FREE:
            ms.append(m.specialize_one(s=True, t=True))
        elif case is LimitCase.BOOLEAN:
            ms.append(m.specialize_zero(kill_s=True, kill_t=True))
        else:
            raise ValueError(f"unknown limit case {case}")
    return MomentTable(n_max=nmax, m=tuple(ms))
