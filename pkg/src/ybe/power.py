"""The power construction: from (X, r) on m points to (Xⁿ, r⁽ⁿ⁾) on mⁿ.

The σ-maps of the power solution are the maps f_x̄ given by a recursion
in h_1, ..., h_n; they coincide with the image of the product
σ_{x₁}⋯σ_{xₙ} under an embedding ψ: Sym_X → Sym_{Xⁿ}. f_map implements
the recursion directly; the ψ route is kept as an independent code path
and cross-checked in tests, never used to build the table.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import perm as pm
from . import solution as sol
from .errors import SizeCapExceeded
from .perm import Perm
from .solution import Solution

#: Default cap on the power-solution degree mⁿ.
DEFAULT_POWER_CAP = 4096


@dataclass(frozen=True)
class TupleCodec:
    """Fixes the identification of Xⁿ with {0,...,mⁿ-1}.

    Encoding is lexicographic with the first tuple component most
    significant: encode(x₁,...,xₙ) = Σ x_j · m^(n-j).
    """

    m: int
    n: int

    @property
    def size(self) -> int:
        return self.m**self.n

    def encode(self, tup) -> int:
        if len(tup) != self.n:
            raise ValueError(f"expected a {self.n}-tuple, got {len(tup)} entries")
        code = 0
        for x in tup:
            if not 0 <= x < self.m:
                raise ValueError(f"tuple entry {x} out of range for m={self.m}")
            code = code * self.m + x
        return code

    def decode(self, code: int) -> tuple[int, ...]:
        if not 0 <= code < self.size:
            raise ValueError(f"code {code} out of range for {self.m}^{self.n}")
        out = []
        for _ in range(self.n):
            out.append(code % self.m)
            code //= self.m
        return tuple(reversed(out))

    def all_tuples(self):
        return (self.decode(c) for c in range(self.size))


class IsoCondition(enum.Enum):
    """Predicted reason the power group matches the base group, if any."""

    FIXED_POINT_PRESENT = "FixedPointPresent"
    COPRIME_ORDER = "CoprimeOrder"
    NO_GUARANTEE = "NoGuarantee"


@dataclass(frozen=True)
class PowerSolution:
    base: Solution
    n: int
    codec: TupleCodec
    result: Solution


def _check_entries(m, ybar):
    for y in ybar:
        if not 0 <= y < m:
            raise ValueError(f"tuple entry {y} out of range for m={m}")


def psi_apply(sigma_table, tau: Perm, ybar) -> tuple[int, ...]:
    """Image of ȳ under the embedded permutation for τ.

    First component τ(y₁); component j+1 is
    σ(t_j)⁻¹⋯σ(t_1)⁻¹ τ σ(y₁)⋯σ(y_j) applied to y_{j+1}.
    """
    m = len(tau)
    _check_entries(m, ybar)
    sigma = [tuple(s) for s in sigma_table]
    t = [tau[ybar[0]]]
    acc_t = sigma[t[0]]  # σ(t_1)∘⋯∘σ(t_j), leftmost acts last
    acc_y = sigma[ybar[0]]  # σ(y_1)∘⋯∘σ(y_j)
    for j in range(1, len(ybar)):
        v = pm.inverse(acc_t)[tau[acc_y[ybar[j]]]]
        t.append(v)
        if j + 1 < len(ybar):
            acc_t = pm.compose(acc_t, sigma[v])
            acc_y = pm.compose(acc_y, sigma[ybar[j]])
    return tuple(t)


def psi_inverse_apply(sigma_table, tau: Perm, ybar) -> tuple[int, ...]:
    """Inverse of psi_apply: the same recursion run with τ⁻¹."""
    m = len(tau)
    _check_entries(m, ybar)
    sigma = [tuple(s) for s in sigma_table]
    tau_inv = pm.inverse(tau)
    t = [tau_inv[ybar[0]]]
    acc_t = sigma[t[0]]
    acc_y = sigma[ybar[0]]
    for j in range(1, len(ybar)):
        v = pm.inverse(acc_t)[tau_inv[acc_y[ybar[j]]]]
        t.append(v)
        if j + 1 < len(ybar):
            acc_t = pm.compose(acc_t, sigma[v])
            acc_y = pm.compose(acc_y, sigma[ybar[j]])
    return tuple(t)


def psi_perm(sigma_table, tau: Perm, n: int, cap: int = DEFAULT_POWER_CAP) -> Perm:
    """The embedded permutation as a Perm of degree mⁿ."""
    m = len(tau)
    codec = TupleCodec(m, n)
    if codec.size > cap:
        raise SizeCapExceeded(f"degree {m}^{n} exceeds cap {cap}")
    return tuple(
        codec.encode(psi_apply(sigma_table, tau, ybar))
        for ybar in codec.all_tuples()
    )


def _sigma_product(s: Solution, xbar) -> Perm:
    """σ_{x₁}∘σ_{x₂}∘⋯∘σ_{xₙ} (rightmost acts first)."""
    prod = s.sigma[xbar[0]]
    for x in xbar[1:]:
        prod = pm.compose(prod, s.sigma[x])
    return prod


def _f_tuple(s: Solution, xbar, ybar) -> tuple[int, ...]:
    """f_x̄(ȳ) via the h_j recursion (independent of psi_apply)."""
    sig_x = _sigma_product(s, xbar)
    inv = [pm.inverse(p) for p in s.sigma]
    h = [sig_x[ybar[0]]]
    for j in range(1, len(ybar)):
        # v = σ_{y_1}⋯σ_{y_{j-1}}(y_j), then the x-product, then the
        # inverses σ⁻¹_{h_1} up through σ⁻¹_{h_{j-1}}
        v = ybar[j]
        for i in range(j - 1, -1, -1):
            v = s.sigma[ybar[i]][v]
        v = sig_x[v]
        for hi in h:
            v = inv[hi][v]
        h.append(v)
    return tuple(h)


def f_map(s: Solution, xbar, n: int, cap: int = DEFAULT_POWER_CAP) -> Perm:
    """The permutation f_x̄ of degree mⁿ, from the h_j recursion."""
    if len(xbar) != n:
        raise ValueError(f"expected a {n}-tuple, got {len(xbar)} entries")
    _check_entries(s.m, xbar)
    codec = TupleCodec(s.m, n)
    if codec.size > cap:
        raise SizeCapExceeded(f"degree {s.m}^{n} exceeds cap {cap}")
    return tuple(
        codec.encode(_f_tuple(s, xbar, ybar)) for ybar in codec.all_tuples()
    )


def power_solution(s: Solution, n: int, cap: int = DEFAULT_POWER_CAP) -> PowerSolution:
    """Build (Xⁿ, r⁽ⁿ⁾) with σ-table {f_x̄}, fully verified."""
    if n < 2:
        raise ValueError("exponent must be at least 2")
    codec = TupleCodec(s.m, n)
    if codec.size > cap:
        raise SizeCapExceeded(f"degree {s.m}^{n} exceeds cap {cap}")
    sigma = tuple(f_map(s, xbar, n, cap=cap) for xbar in codec.all_tuples())
    result = sol.from_sigma(sigma)
    # the derived gamma must coincide with ȳ ↦ f⁻¹_{f_x̄(ȳ)}(x̄)
    f_inv = [pm.inverse(row) for row in sigma]
    for xe in range(codec.size):
        for ye in range(codec.size):
            expected = f_inv[sigma[xe][ye]][xe]
            assert result.gamma[ye][xe] == expected, (
                "gamma derivation disagrees with the f-inverse description"
            )
    return PowerSolution(base=s, n=n, codec=codec, result=result)


def power_solution_n2_direct(s: Solution, x1, x2, y1, y2) -> tuple[int, int]:
    """Closed n=2 formula:
    (σ_{x₁}σ_{x₂}(y₁), σ⁻¹_{σ_{x₁}σ_{x₂}(y₁)} σ_{x₁}σ_{x₂}σ_{y₁}(y₂))."""
    for v in (x1, x2, y1, y2):
        if not 0 <= v < s.m:
            raise ValueError(f"index {v} out of range for m={s.m}")
    prod = pm.compose(s.sigma[x1], s.sigma[x2])
    first = prod[y1]
    second = pm.inverse(s.sigma[first])[prod[s.sigma[y1][y2]]]
    return first, second


def power_perm_group(s: Solution, n: int, cap: int = DEFAULT_POWER_CAP):
    """(A, B, φ): A the permutation group of the power solution, B the
    subgroup of Sym_m generated by all products σ_{x₁}⋯σ_{xₙ}, and φ an
    isomorphism A -> B when one exists (always, per the construction)."""
    ps = power_solution(s, n, cap=cap)
    a = sol.permutation_group(ps.result)
    codec = ps.codec
    products = list(dict.fromkeys(_sigma_product(s, xbar) for xbar in codec.all_tuples()))
    b = pm.close_group(products)
    phi = pm.groups_isomorphic(a, b)
    return a, b, phi


def iso_condition(s: Solution, n: int) -> IsoCondition:
    """Predict whether the power group must match the base group."""
    ident = pm.identity(s.m)
    if any(row == ident for row in s.sigma):
        return IsoCondition.FIXED_POINT_PRESENT
    order = sol.permutation_group(s).order
    if math.gcd(order, n) == 1:
        return IsoCondition.COPRIME_ORDER
    return IsoCondition.NO_GUARANTEE
