"""Finite involutive non-degenerate set-theoretic solutions (X, r).

X is always {0,...,m-1}. A solution is stored as the table of left
actions sigma[x] = σ_x; the right actions gamma[y] = γ_y are derived,
never user-supplied, via γ_y(x) = σ⁻¹_{σ_x(y)}(x) (forced by
involutivity). r(x, y) = (σ_x(y), γ_y(x)).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import perm as pm
from .errors import AxiomError, SizeCapExceeded
from .perm import Perm, GeneratedGroup

AXIOMS = (
    "involutive",
    "left_nondegenerate",
    "right_nondegenerate",
    "braid_direct",
    "braid_sigma_condition",
)


@dataclass(frozen=True)
class VerifyReport:
    """Per-axiom pass/fail record for a candidate sigma/gamma pair."""

    involutive: bool
    left_nondegenerate: bool
    right_nondegenerate: bool
    braid_direct: bool
    braid_sigma_condition: bool
    counterexamples: tuple = ()  # pairs (axiom name, witness index tuple)

    @property
    def all_ok(self) -> bool:
        return all(getattr(self, a) for a in AXIOMS)

    def first_counterexample(self, axiom: str):
        for name, witness in self.counterexamples:
            if name == axiom:
                return witness
        return None


@dataclass(frozen=True)
class Solution:
    """A verified involutive non-degenerate solution on m points."""

    m: int
    sigma: tuple[Perm, ...]
    gamma: tuple[Perm, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("empty set is not allowed")


def derive_gamma(sigma) -> tuple[tuple[int, ...], ...]:
    """gamma[y][x] = σ⁻¹_{σ_x(y)}(x). Rows need not be bijections for a
    bad candidate; verification checks that separately."""
    m = len(sigma)
    inv = [pm.inverse(s) for s in sigma]
    return tuple(
        tuple(inv[sigma[x][y]][x] for x in range(m)) for y in range(m)
    )


def _r(sigma, gamma, x, y):
    return sigma[x][y], gamma[y][x]


def verify_tables(sigma, gamma) -> VerifyReport:
    """Check all five axioms by exhaustive loops; always returns a
    report, recording the first counterexample of each failed axiom."""
    m = len(sigma)
    bad = []

    left = True
    for x in range(m):
        if not pm.is_perm(sigma[x]):
            left = False
            bad.append(("left_nondegenerate", (x,)))
            break

    right = True
    for y in range(m):
        if not pm.is_perm(gamma[y]):
            right = False
            bad.append(("right_nondegenerate", (y,)))
            break

    involutive = True
    for x in range(m):
        for y in range(m):
            u, v = _r(sigma, gamma, x, y)
            if _r(sigma, gamma, u, v) != (x, y):
                involutive = False
                bad.append(("involutive", (x, y)))
                break
        if not involutive:
            break

    braid_direct = True
    for x in range(m):
        for y in range(m):
            for z in range(m):
                # r12 r23 r12 vs r23 r12 r23 on (x, y, z)
                a, b = _r(sigma, gamma, x, y)
                b2, c = _r(sigma, gamma, b, z)
                a2, b3 = _r(sigma, gamma, a, b2)
                lhs = (a2, b3, c)
                b4, c2 = _r(sigma, gamma, y, z)
                a3, b5 = _r(sigma, gamma, x, b4)
                b6, c3 = _r(sigma, gamma, b5, c2)
                rhs = (a3, b6, c3)
                if lhs != rhs:
                    braid_direct = False
                    bad.append(("braid_direct", (x, y, z)))
                    break
            if not braid_direct:
                break
        if not braid_direct:
            break

    braid_sigma = True
    if left:
        inv = [pm.inverse(s) for s in sigma]
        for x in range(m):
            for y in range(m):
                lhs = pm.compose(sigma[x], sigma[inv[x][y]])
                rhs = pm.compose(sigma[y], sigma[inv[y][x]])
                if lhs != rhs:
                    braid_sigma = False
                    bad.append(("braid_sigma_condition", (x, y)))
                    break
            if not braid_sigma:
                break
    else:
        # the sigma condition needs σ⁻¹; without left non-degeneracy it
        # degenerates to the direct check's verdict
        braid_sigma = braid_direct

    # built-in self-test: for involutive left-non-degenerate tables the
    # direct braid check and the sigma condition must agree
    if involutive and left:
        assert braid_direct == braid_sigma, (
            "braid checks disagree on an involutive left-non-degenerate table"
        )

    return VerifyReport(
        involutive=involutive,
        left_nondegenerate=left,
        right_nondegenerate=right,
        braid_direct=braid_direct,
        braid_sigma_condition=braid_sigma,
        counterexamples=tuple(bad),
    )


def from_sigma(sigmas) -> Solution:
    """Build a Solution from its σ-table, deriving γ and verifying all
    axioms. Raises AxiomError (carrying the VerifyReport) on failure."""
    if not sigmas:
        raise ValueError("empty sigma table")
    m = len(sigmas)
    sigma = []
    for x, row in enumerate(sigmas):
        row = tuple(row)
        if len(row) != m or not pm.is_perm(row):
            raise AxiomError(
                f"sigma[{x}] = {list(row)} is not a bijection of degree {m}",
                witness=(x,),
            )
        sigma.append(row)
    sigma = tuple(sigma)
    gamma = derive_gamma(sigma)
    report = verify_tables(sigma, gamma)
    if not report.all_ok:
        failed = [a for a in AXIOMS if not getattr(report, a)]
        raise AxiomError(
            "not a solution; failed axioms: " + ", ".join(failed),
            report=report,
        )
    return Solution(m=m, sigma=sigma, gamma=gamma)


def r_apply(s: Solution, x: int, y: int) -> tuple[int, int]:
    """r(x, y) = (σ_x(y), γ_y(x))."""
    if not (0 <= x < s.m and 0 <= y < s.m):
        raise ValueError(f"index out of range for m={s.m}: ({x}, {y})")
    return s.sigma[x][y], s.gamma[y][x]


def trivial(m: int) -> Solution:
    """r(x, y) = (y, x): every σ_x is the identity."""
    if m < 1:
        raise ValueError("empty set is not allowed")
    ident = pm.identity(m)
    return Solution(m=m, sigma=(ident,) * m, gamma=(ident,) * m)


def disjoint_union(parts) -> Solution:
    """Concatenate solutions; within a part r is that part's r, across
    parts r(x, y) = (y, x)."""
    parts = list(parts)
    if not parts:
        raise ValueError("need at least one part")
    offsets = []
    total = 0
    for p in parts:
        offsets.append(total)
        total += p.m
    sigma = []
    for p, off in zip(parts, offsets):
        for row in p.sigma:
            full = list(range(total))
            for j, img in enumerate(row):
                full[off + j] = off + img
            sigma.append(tuple(full))
    return from_sigma(sigma)


def adjoin_fixed_point(s: Solution) -> Solution:
    """Add one point z with σ_z = id; the permutation group is preserved."""
    return disjoint_union([s, trivial(1)])


def permutation_group(s: Solution, cap: int = pm.DEFAULT_CAP) -> GeneratedGroup:
    """The subgroup of Sym_m generated by the distinct σ_x."""
    gens = list(dict.fromkeys(s.sigma))
    return pm.close_group(gens, cap=cap)


def enumerate_solutions(m: int, bound: int = 4) -> list[Solution]:
    """Exhaustively scan all (m!)^m σ-tables in lexicographic order and
    return every one passing all five axioms."""
    if m < 1:
        raise ValueError("empty set is not allowed")
    if m > bound:
        raise SizeCapExceeded(f"enumeration bound {bound} exceeded (m={m})")
    perms = pm.all_perms(m)
    out = []
    for table in itertools.product(perms, repeat=m):
        gamma = derive_gamma(table)
        if verify_tables(table, gamma).all_ok:
            out.append(Solution(m=m, sigma=table, gamma=gamma))
    return out


def solutions_isomorphic(a: Solution, b: Solution, cap_m: int = 8):
    """A relabeling φ with σ_{φ(x)} = φ∘σ_x∘φ⁻¹ for all x, or None.

    Exhaustive over all m! bijections; declined above cap_m.
    """
    if a.m != b.m:
        return None
    if a.m > cap_m:
        raise SizeCapExceeded(f"isomorphism search declined above m={cap_m}")
    for phi in itertools.permutations(range(a.m)):
        phi_inv = pm.inverse(phi)
        if all(
            b.sigma[phi[x]] == pm.compose(phi, pm.compose(a.sigma[x], phi_inv))
            for x in range(a.m)
        ):
            return phi
    return None
