"""Finite left braces and their associated solutions.

A left brace is a set with an abelian group (G, +) and a group (G, ·)
sharing identity 0 and satisfying a(b+c)+a = ab+ac for all a, b, c.
The maps λ_a(b) = ab − a bridge brace multiplication and solution σ-maps.
Element 0 must be both identities; tables not normalized this way are
rejected rather than relabeled.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import perm as pm
from . import solution as sol
from .errors import AxiomError, SizeCapExceeded
from .perm import Perm
from .solution import Solution

LAMBDA_PROPERTIES = (
    "inverse_is_lambda_of_inverse",   # λ_a bijective, λ_a⁻¹ = λ_{a⁻¹}
    "additive_automorphism",          # λ_a(x+y) = λ_a(x) + λ_a(y)
    "multiplicative_homomorphism",    # λ_a∘λ_b = λ_{a·b}
    "sum_via_lambda",                 # a+b = a·λ⁻¹_a(b)
    "symmetric_product",              # a·λ⁻¹_a(b) = b·λ⁻¹_b(a)
    "sigma_condition",                # λ_aλ_{λ⁻¹_a(b)} = λ_bλ_{λ⁻¹_b(a)}
)


@dataclass(frozen=True)
class Brace:
    k: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    neg: tuple[int, ...]   # additive inverses
    inv: tuple[int, ...]   # multiplicative inverses

    def sub(self, a: int, b: int) -> int:
        """a − b in the additive group."""
        return self.add[a][self.neg[b]]

    def mul_many(self, elems) -> int:
        """Product of a sequence in the multiplicative group (empty = 0)."""
        acc = 0
        for e in elems:
            acc = self.mul[acc][e]
        return acc


@dataclass(frozen=True)
class LambdaTable:
    owner: Brace
    table: tuple[Perm, ...]   # table[a] is λ_a


@dataclass(frozen=True)
class LambdaReport:
    """Pass/fail per λ-map property, with a witness for each failure."""

    flags: dict
    witnesses: dict

    @property
    def all_ok(self) -> bool:
        return all(self.flags.values())


def _freeze_table(table, k, what):
    rows = []
    for a, row in enumerate(table):
        row = tuple(int(v) for v in row)
        if len(row) != k:
            raise AxiomError(f"{what} row {a} has length {len(row)}, expected {k}")
        for v in row:
            if not 0 <= v < k:
                raise AxiomError(f"{what}[{a}] contains out-of-range entry {v}")
        rows.append(row)
    if len(rows) != k:
        raise AxiomError(f"{what} has {len(rows)} rows, expected {k}")
    return tuple(rows)


def _group_inverses(table, k, what, commutative):
    """Validate a Cayley table as a group with identity 0; return inverses."""
    for a in range(k):
        if table[a][0] != a or table[0][a] != a:
            raise AxiomError(f"{what}: 0 is not an identity", witness=(a,))
    for a in range(k):
        for b in range(k):
            if commutative and table[a][b] != table[b][a]:
                raise AxiomError(f"{what}: not commutative", witness=(a, b))
            for c in range(k):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise AxiomError(f"{what}: not associative", witness=(a, b, c))
    inv = [None] * k
    for a in range(k):
        for b in range(k):
            if table[a][b] == 0 and table[b][a] == 0:
                inv[a] = b
                break
        if inv[a] is None:
            raise AxiomError(f"{what}: element {a} has no inverse", witness=(a,))
    return tuple(inv)


def brace_from_tables(add, mul) -> Brace:
    """Validate the two Cayley tables and the brace property exhaustively."""
    k = len(add)
    if k < 1:
        raise AxiomError("empty brace is not allowed")
    add = _freeze_table(add, k, "add")
    mul = _freeze_table(mul, k, "mul")
    neg = _group_inverses(add, k, "add", commutative=True)
    inv = _group_inverses(mul, k, "mul", commutative=False)
    for a in range(k):
        for b in range(k):
            for c in range(k):
                lhs = add[mul[a][add[b][c]]][a]
                rhs = add[mul[a][b]][mul[a][c]]
                if lhs != rhs:
                    raise AxiomError(
                        "brace property a(b+c)+a = ab+ac fails",
                        witness=(a, b, c),
                    )
    return Brace(k=k, add=add, mul=mul, neg=neg, inv=inv)


def trivial_brace(add_table) -> Brace:
    """The brace with a·b = a+b; every λ_a is the identity."""
    k = len(add_table)
    add = _freeze_table(add_table, k, "add")
    return brace_from_tables(add, add)


def lambda_table(b: Brace) -> LambdaTable:
    """λ_a(x) = a·x − a for every a."""
    rows = []
    for a in range(b.k):
        row = tuple(b.sub(b.mul[a][x], a) for x in range(b.k))
        if not pm.is_perm(row):
            raise AxiomError(f"lambda map of element {a} is not a bijection")
        rows.append(row)
    return LambdaTable(owner=b, table=tuple(rows))


def check_lambda_properties(b: Brace) -> LambdaReport:
    """Exhaustively verify the six λ-map identities of a left brace."""
    lt = lambda_table(b).table
    lt_inv = [pm.inverse(p) for p in lt]
    flags = {name: True for name in LAMBDA_PROPERTIES}
    witnesses = {}

    def fail(name, witness):
        if flags[name]:
            flags[name] = False
            witnesses[name] = witness

    for a in range(b.k):
        if lt_inv[a] != lt[b.inv[a]]:
            fail("inverse_is_lambda_of_inverse", (a,))
        for x in range(b.k):
            for y in range(b.k):
                if lt[a][b.add[x][y]] != b.add[lt[a][x]][lt[a][y]]:
                    fail("additive_automorphism", (a, x, y))

    for a in range(b.k):
        for c in range(b.k):
            if pm.compose(lt[a], lt[c]) != lt[b.mul[a][c]]:
                fail("multiplicative_homomorphism", (a, c))
            if b.add[a][c] != b.mul[a][lt_inv[a][c]]:
                fail("sum_via_lambda", (a, c))
            if b.mul[a][lt_inv[a][c]] != b.mul[c][lt_inv[c][a]]:
                fail("symmetric_product", (a, c))
            lhs = pm.compose(lt[a], lt[lt_inv[a][c]])
            rhs = pm.compose(lt[c], lt[lt_inv[c][a]])
            if lhs != rhs:
                fail("sigma_condition", (a, c))

    return LambdaReport(flags=flags, witnesses=witnesses)


def associated_solution(b: Brace) -> Solution:
    """The solution on the brace's underlying set with σ_x = λ_x."""
    lt = lambda_table(b).table
    s = sol.from_sigma(lt)
    # derived gamma must match λ⁻¹_{λ_x(y)}(x)
    lt_inv = [pm.inverse(p) for p in lt]
    for x in range(b.k):
        for y in range(b.k):
            assert s.gamma[y][x] == lt_inv[lt[x][y]][x], (
                "gamma disagrees with the lambda-inverse description"
            )
    return s


def check_eq_3_1(b: Brace, xbar, ybar) -> bool:
    """Inside the multiplicative group, with σ = λ over the whole brace:
    the product h₁⋯h_j must equal λ_{x₁⋯xₙ}(y₁⋯y_j) for every j, and
    each h_j (j ≥ 2) must equal the quotient
    λ_{x₁⋯xₙ}(y₁⋯y_{j-1})⁻¹ · λ_{x₁⋯xₙ}(y₁⋯y_j)."""
    n = len(xbar)
    if len(ybar) != n:
        raise ValueError("tuples must have equal length")
    for v in itertools.chain(xbar, ybar):
        if not 0 <= v < b.k:
            raise ValueError(f"entry {v} out of range for brace of order {b.k}")
    lt = lambda_table(b).table
    # h recursion with sigma = lambda, run inside the brace
    inv = [pm.inverse(p) for p in lt]
    prod_x = lt[xbar[0]]
    for x in xbar[1:]:
        prod_x = pm.compose(prod_x, lt[x])
    h = [prod_x[ybar[0]]]
    for j in range(1, n):
        v = ybar[j]
        for i in range(j - 1, -1, -1):
            v = lt[ybar[i]][v]
        v = prod_x[v]
        for hi in h:
            v = inv[hi][v]
        h.append(v)

    big_x = b.mul_many(xbar)
    ok = True
    for j in range(1, n + 1):
        y_prod = b.mul_many(ybar[:j])
        lhs = lt[big_x][y_prod]
        rhs = b.mul_many(h[:j])
        if lhs != rhs:
            ok = False
        if j >= 2:
            prev = lt[big_x][b.mul_many(ybar[: j - 1])]
            quotient = b.mul[b.inv[prev]][lhs]
            if h[j - 1] != quotient:
                ok = False
    return ok


def _abelian_tables(k: int):
    """The abelian group structures on {0,...,k-1} used by the search:
    cyclic for every k, plus the Klein four-group at k=4."""
    cyclic = tuple(tuple((a + c) % k for c in range(k)) for a in range(k))
    tables = [("cyclic", cyclic)]
    if k == 4:
        klein = tuple(tuple(a ^ c for c in range(4)) for a in range(4))
        tables.append(("klein", klein))
    return tables


def _automorphisms(add, k):
    """All permutations fixing 0 that respect the addition table."""
    auts = []
    for p in itertools.permutations(range(k)):
        if p[0] != 0:
            continue
        if all(p[add[a][c]] == add[p[a]][p[c]] for a in range(k) for c in range(k)):
            auts.append(tuple(p))
    return auts


def find_braces(k: int, bound: int = 6) -> list[Brace]:
    """Exhaustive search for all left braces of order k (identity 0).

    For each abelian structure, scan all assignments a ↦ λ_a into
    Aut(G, +) and keep those for which a·b := a + λ_a(b) is a group with
    identity 0 satisfying the brace property. Deduplicated by literal
    table equality.
    """
    if k < 1:
        raise ValueError("order must be at least 1")
    if k > bound:
        raise SizeCapExceeded(f"brace search bound {bound} exceeded (k={k})")
    found = []
    seen = set()
    for _, add in _abelian_tables(k):
        auts = _automorphisms(add, k)
        ident = pm.identity(k)
        for assignment in itertools.product(auts, repeat=k):
            if assignment[0] != ident:   # 0·b must equal b
                continue
            mul = tuple(
                tuple(add[a][assignment[a][c]] for c in range(k)) for a in range(k)
            )
            try:
                b = brace_from_tables(add, mul)
            except AxiomError:
                continue
            key = (b.add, b.mul)
            if key not in seen:
                seen.add(key)
                found.append(b)
    return found
