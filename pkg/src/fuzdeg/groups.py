"""Finite groups as validated multiplication tables.

Elements are the indices ``0..order-1`` and the identity is always index 0.
A Group is immutable; all constructors are pure functions.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Sequence

import numpy as np

from .config import default_max_order
from .errors import CapacityError, GroupValidationError, SpecError

MAX_SYMMETRIC_DEGREE = 5


@dataclass(frozen=True, eq=False)
class Group:
    order: int
    table: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    label: str = "G"
    names: tuple[str, ...] = field(default=())

    identity = 0

    def __post_init__(self) -> None:
        if not self.names:
            object.__setattr__(self, "names", tuple(str(i) for i in range(self.order)))

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inv(self, x: int) -> int:
        return self.inverse[x]

    @cached_property
    def array(self) -> np.ndarray:
        """The table as an ``order x order`` integer array (read-only)."""
        arr = np.array(self.table, dtype=np.int64).reshape(self.order, self.order)
        arr.setflags(write=False)
        return arr

    @cached_property
    def inverse_array(self) -> np.ndarray:
        arr = np.array(self.inverse, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @cached_property
    def is_abelian(self) -> bool:
        return all(
            self.table[i][j] == self.table[j][i]
            for i in range(self.order)
            for j in range(i + 1, self.order)
        )

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = self.table[y][x]
            k += 1
        return k

    def relabel(self, perm: Sequence[int], label: str | None = None) -> Group:
        """Return the isomorphic group whose element ``i`` is renamed ``perm[i]``.

        ``perm`` must fix 0 so the identity stays at index 0.
        """
        n = self.order
        if sorted(perm) != list(range(n)) or perm[0] != 0:
            raise ValueError("relabeling must be a permutation of the elements fixing 0")
        new = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                new[perm[i]][perm[j]] = perm[self.table[i][j]]
        names = [""] * n
        for i in range(n):
            names[perm[i]] = self.names[i]
        return _build(new, label or self.label, tuple(names))

    def __repr__(self) -> str:
        return f"Group({self.label!r}, order={self.order})"


def _build(table: Sequence[Sequence[int]], label: str, names: tuple[str, ...] = ()) -> Group:
    # Trusted construction: table already satisfies the axioms with identity at 0.
    n = len(table)
    frozen = tuple(tuple(int(v) for v in row) for row in table)
    inverse = [0] * n
    for i in range(n):
        inverse[i] = frozen[i].index(0)
    return Group(n, frozen, tuple(inverse), label, names)


def _check_order(order: int, max_order: int | None) -> None:
    limit = default_max_order() if max_order is None else max_order
    if order > limit:
        raise CapacityError(f"group order {order} exceeds the configured maximum {limit}")


def validate_table(table: Sequence[Sequence[int]]) -> None:
    """Check the four group invariants on a table with identity at index 0.

    Raises GroupValidationError naming the first failing entry or triple.
    """
    n = len(table)
    full = list(range(n))
    for i in range(n):
        if sorted(table[i]) != full:
            raise GroupValidationError(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if sorted(table[i][j] for i in range(n)) != full:
            raise GroupValidationError(f"column {j} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if table[0][j] != j or table[j][0] != j:
            raise GroupValidationError(f"identity law fails at (0, {j})")
    for i in range(n):
        ti = table[i]
        for j in range(n):
            tij = table[ti[j]]
            tj = table[j]
            for k in range(n):
                if tij[k] != ti[tj[k]]:
                    raise GroupValidationError(
                        f"associativity fails at triple ({i}, {j}, {k})"
                    )


def from_cayley_table(
    raw: Sequence[Sequence[int]],
    label: str = "G",
    names: Sequence[str] | None = None,
    max_order: int | None = None,
) -> Group:
    """Validate a raw Cayley table and return it as a Group.

    If the identity is not at index 0 it is swapped into place; ``names`` is
    permuted along with it.
    """
    n = len(raw)
    if n == 0:
        raise GroupValidationError("empty table")
    _check_order(n, max_order)
    rows = [list(row) for row in raw]
    for i, row in enumerate(rows):
        if len(row) != n:
            raise GroupValidationError(f"row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not isinstance(v, (int, np.integer)) or not 0 <= v < n:
                raise GroupValidationError(f"entry ({i}, {j}) = {v!r} is out of range")
    full = list(range(n))
    for i in range(n):
        if sorted(rows[i]) != full:
            raise GroupValidationError(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if sorted(rows[i][j] for i in range(n)) != full:
            raise GroupValidationError(f"column {j} is not a permutation of 0..{n - 1}")

    ident = next(
        (e for e in range(n) if rows[e] == full and all(rows[i][e] == i for i in range(n))),
        None,
    )
    if ident is None:
        raise GroupValidationError("no two-sided identity element")
    labels = tuple(names) if names is not None else tuple(str(i) for i in range(n))
    if len(labels) != n:
        raise GroupValidationError(f"{len(labels)} names given for {n} elements")
    if ident != 0:
        swap = list(range(n))
        swap[0], swap[ident] = ident, 0
        rows = [[swap[rows[swap[i]][swap[j]]] for j in range(n)] for i in range(n)]
        labels = tuple(labels[swap[i]] for i in range(n))
    validate_table(rows)
    return _build(rows, label, labels)


def make_cyclic(n: int, max_order: int | None = None) -> Group:
    if n < 1:
        raise SpecError(f"cyclic order must be positive, got {n}")
    _check_order(n, max_order)
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return _build(table, f"Z{n}", tuple(str(i) for i in range(n)))


def _rotation_name(i: int) -> str:
    if i == 0:
        return ""
    return "a" if i == 1 else f"a^{i}"


def make_dihedral(two_n: int, max_order: int | None = None) -> Group:
    """Dihedral group of order ``two_n`` generated by a rotation ``a`` and reflection ``b``.

    Index ``i < n`` is ``a^i``; index ``n + i`` is ``a^i b``. Products follow
    ``a^n = b^2 = 1`` and ``b a b = a^-1``.
    """
    if two_n % 2 or two_n < 4:
        raise SpecError(f"dihedral order must be even and at least 4, got {two_n}")
    _check_order(two_n, max_order)
    n = two_n // 2

    def mul(x: int, y: int) -> int:
        i, s = x % n, x // n
        j, t = y % n, y // n
        k = (i + j) % n if s == 0 else (i - j) % n
        return ((s + t) % 2) * n + k

    table = [[mul(x, y) for y in range(two_n)] for x in range(two_n)]
    names = tuple(_rotation_name(i) or "e" for i in range(n)) + tuple(
        f"{_rotation_name(i)}b" for i in range(n)
    )
    return _build(table, f"D{two_n}", names)


def _cycle_notation(p: tuple[int, ...]) -> str:
    seen, parts = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            seen.add(start)
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = p[x]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "e"


def make_symmetric(n: int, max_order: int | None = None) -> Group:
    """S_n on permutations in lexicographic order; ``(p*q)(k) = p(q(k))``."""
    if n < 1:
        raise SpecError(f"symmetric degree must be positive, got {n}")
    if n > MAX_SYMMETRIC_DEGREE:
        raise CapacityError(f"symmetric degree {n} exceeds {MAX_SYMMETRIC_DEGREE}")
    _check_order(math.factorial(n), max_order)
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[k]] for k in range(n))] for q in perms] for p in perms]
    return _build(table, f"S{n}", tuple(_cycle_notation(p) for p in perms))


def direct_product(g: Group, h: Group, max_order: int | None = None) -> Group:
    """Componentwise product; element ``(x, y)`` has index ``x * h.order + y``."""
    _check_order(g.order * h.order, max_order)
    m = h.order
    n = g.order * m
    table = [
        [g.table[a // m][b // m] * m + h.table[a % m][b % m] for b in range(n)]
        for a in range(n)
    ]
    names = tuple(f"({x},{y})" for x in g.names for y in h.names)
    return _build(table, f"{g.label}x{h.label}", names)


def make_klein(max_order: int | None = None) -> Group:
    z2 = make_cyclic(2, max_order)
    g = direct_product(z2, z2, max_order)
    return Group(g.order, g.table, g.inverse, "V4", g.names)


def read_cayley_file(path: str | Path, max_order: int | None = None) -> Group:
    """Parse the text table format: ``order n``, optional ``label <s>``, then n rows."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SpecError(f"cannot read Cayley table file {path}: {exc}") from exc
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise SpecError(f"{path}: empty file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "order":
        raise SpecError(f"{path}: first line must be 'order <n>'")
    try:
        n = int(head[1])
    except ValueError:
        raise SpecError(f"{path}: bad order {head[1]!r}") from None
    if n < 1:
        raise SpecError(f"{path}: order must be positive")
    _check_order(n, max_order)
    rest = lines[1:]
    label = Path(path).stem
    if rest and rest[0].split(maxsplit=1)[0] == "label":
        parts = rest[0].split(maxsplit=1)
        label = parts[1] if len(parts) > 1 else label
        rest = rest[1:]
    if len(rest) != n:
        raise SpecError(f"{path}: expected {n} table rows, found {len(rest)}")
    try:
        rows = [[int(tok) for tok in ln.split()] for ln in rest]
    except ValueError as exc:
        raise SpecError(f"{path}: non-integer table entry ({exc})") from None
    return from_cayley_table(rows, label, max_order=max_order)


def write_cayley_file(g: Group, path: str | Path) -> None:
    lines = [f"order {g.order}", f"label {g.label}"]
    lines += [" ".join(str(v) for v in row) for row in g.table]
    Path(path).write_text("\n".join(lines) + "\n")


def _split_product_args(body: str) -> tuple[str, str]:
    # The left factor ends at the first comma outside parentheses; nest products
    # on the left as "product:(A,B),C".
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return body[:i], body[i + 1 :]
    raise SpecError(f"product spec needs two comma-separated factors: {body!r}")


def _unwrap(text: str) -> str:
    text = text.strip()
    while text.startswith("(") and text.endswith(")"):
        text = text[1:-1].strip()
    return text


def _int_arg(family: str, arg: str) -> int:
    try:
        return int(arg)
    except ValueError:
        raise SpecError(f"{family} expects an integer parameter, got {arg!r}") from None


def parse_group_spec(spec: str, max_order: int | None = None) -> Group:
    """Build a group from a spec string such as ``dihedral:8`` or ``product:cyclic:2,cyclic:4``."""
    text = _unwrap(spec)
    family, _, arg = text.partition(":")
    family = family.strip().lower()
    if family == "klein":
        if arg:
            raise SpecError("klein takes no parameter")
        return make_klein(max_order)
    if not arg:
        raise SpecError(f"group spec {spec!r} is missing its parameter")
    if family == "cyclic":
        return make_cyclic(_int_arg(family, arg), max_order)
    if family == "dihedral":
        return make_dihedral(_int_arg(family, arg), max_order)
    if family == "symmetric":
        return make_symmetric(_int_arg(family, arg), max_order)
    if family == "product":
        left, right = _split_product_args(arg)
        limit = default_max_order() if max_order is None else max_order
        g = parse_group_spec(left, limit)
        h = parse_group_spec(right, limit)
        return direct_product(g, h, limit)
    if family == "file":
        return read_cayley_file(arg, max_order)
    raise SpecError(f"unknown group family {family!r} in spec {spec!r}")


def induced_subgroup(g: Group, members: int, label: str | None = None) -> Group:
    """The subgroup with element bitmask ``members`` as a standalone validated Group."""
    elems = [x for x in range(g.order) if members >> x & 1]
    pos = {x: i for i, x in enumerate(elems)}
    try:
        table = [[pos[g.table[x][y]] for y in elems] for x in elems]
    except KeyError:
        raise GroupValidationError("member set is not closed under the product") from None
    return from_cayley_table(
        table, label or f"sub({g.label})", [g.names[x] for x in elems], max_order=g.order
    )
