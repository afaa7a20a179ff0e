"""Closure operators on small ground sets, closed/biclosed families, search."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from itertools import permutations

from .bitsets import bits, mask_of
from .congruence import is_congruence_uniform
from .lattice import (
    Lattice,
    NotALattice,
    Verdict,
    as_lattice,
    is_meet_semidistributive,
)
from .poset import FormatError, Poset, from_covers


class ClosureOperator:
    """A closure operator on ground set {0..m-1}, stored as a full table."""

    __slots__ = ("m", "table")

    def __init__(self, m: int, table):
        self.m = m
        self.table = tuple(table)
        if len(self.table) != 1 << m:
            raise ValueError("table must cover all subsets of the ground set")

    def cl(self, x: int) -> int:
        return self.table[x]

    def __eq__(self, other):
        return (
            isinstance(other, ClosureOperator)
            and self.m == other.m
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.m, self.table))


def validate(op: ClosureOperator) -> Verdict:
    """Check extensivity, monotonicity, idempotence; witness on failure."""
    size = 1 << op.m
    for x in range(size):
        if op.table[x] & x != x:
            return Verdict(False, ("extensive", x))
    for y in range(size):
        sub = y
        while True:
            if op.table[sub] & ~op.table[y]:
                return Verdict(False, ("monotone", sub, y))
            if sub == 0:
                break
            sub = (sub - 1) & y
    for x in range(size):
        if op.table[op.table[x]] != op.table[x]:
            return Verdict(False, ("idempotent", x))
    return Verdict(True)


def closed_family(op: ClosureOperator) -> tuple[int, ...]:
    """Closed sets as masks, sorted by (size, value): a linear extension."""
    fam = [x for x in range(1 << op.m) if op.table[x] == x]
    fam.sort(key=lambda x: (x.bit_count(), x))
    return tuple(fam)


def biclosed_family(op: ClosureOperator) -> tuple[int, ...]:
    """Sets closed along with their complements, sorted by (size, value)."""
    full = (1 << op.m) - 1
    closed = {x for x in range(1 << op.m) if op.table[x] == x}
    fam = [x for x in closed if full ^ x in closed]
    fam.sort(key=lambda x: (x.bit_count(), x))
    return tuple(fam)


def _containment_poset(fam: tuple[int, ...]) -> Poset:
    edges = [
        (i, k)
        for i in range(len(fam))
        for k in range(len(fam))
        if i != k and fam[i] & ~fam[k] == 0
    ]
    return from_covers(len(fam), edges)


def closed_sets_lattice(op: ClosureOperator) -> Lattice:
    """The lattice of closed sets; element i is closed_family(op)[i]."""
    lat = as_lattice(_containment_poset(closed_family(op)))
    assert isinstance(lat, Lattice), "closed sets always form a lattice"
    return lat


def biclosed_poset(op: ClosureOperator):
    """The containment poset of biclosed sets and its lattice conversion.

    Returns (poset, lattice_or_witness); element i is biclosed_family(op)[i].
    """
    fam = biclosed_family(op)
    p = _containment_poset(fam)
    if p.n == 0:
        return p, NotALattice("join", (0, 0), ())
    return p, as_lattice(p)


def is_single_step(op: ClosureOperator) -> Verdict:
    """Every strict containment of biclosed sets grows one element at a time."""
    fam = biclosed_family(op)
    members = set(fam)
    for i, x in enumerate(fam):
        for y in fam[i + 1:]:
            if x & ~y or x == y:
                continue
            if not any(x | (1 << e) in members for e in bits(y & ~x)):
                return Verdict(False, (x, y))
    return Verdict(True)


def moore_families(m: int) -> Iterator[frozenset[int]]:
    """All intersection-closed families on {0..m-1} containing the ground set."""
    full = (1 << m) - 1
    fam = [full]
    forced = bytearray(1 << m)

    def include(x: int) -> list[int]:
        marked = []
        for y in fam:
            r = x & y
            if r != x and not forced[r]:
                forced[r] = 1
                marked.append(r)
        fam.append(x)
        return marked

    def undo(marked: list[int]) -> None:
        fam.pop()
        for r in marked:
            forced[r] = 0

    def rec(x: int) -> Iterator[frozenset[int]]:
        if x < 0:
            yield frozenset(fam)
            return
        if forced[x]:
            marked = include(x)
            yield from rec(x - 1)
            undo(marked)
            return
        yield from rec(x - 1)
        marked = include(x)
        yield from rec(x - 1)
        undo(marked)

    yield from rec(full - 1)


def operator_from_family(m: int, fam: Iterable[int]) -> ClosureOperator:
    """The closure operator whose closed sets are the given Moore family."""
    members = sorted(fam)
    full = (1 << m) - 1
    if full not in members:
        raise ValueError("a Moore family must contain the ground set")
    table = [0] * (1 << m)
    for x in range(1 << m):
        acc = full
        for f in members:
            if f & x == x:
                acc &= f
        table[x] = acc
    op = ClosureOperator(m, table)
    return op


def canonical_family_key(m: int, fam: Iterable[int]) -> tuple[int, ...]:
    """Least relabeling of a set family under ground-set permutations."""
    fs = sorted(fam)
    best = None
    for perm in permutations(range(m)):
        remap = [0] * (1 << m)
        for x in range(1 << m):
            y = 0
            for b in bits(x):
                y |= 1 << perm[b]
            remap[x] = y
        img = tuple(sorted(remap[f] for f in fs))
        if best is None or img < best:
            best = img
    return best if best is not None else tuple(fs)


def search_problem_6_1(
    m: int,
    *,
    require_cu: bool = True,
    require_spherical: bool = True,
    require_single_step: bool = True,
    require_clo_not_lattice: bool = True,
    bound: int = 5,
) -> Iterator[ClosureOperator]:
    """Scan closure operators on m points (up to ground-set symmetry) for ones
    whose biclosed sets form a spherical congruence-uniform lattice under
    single-step inclusion with a non-lattice core label order.

    An exhausted stream with no hits is a verified-empty result.
    """
    if m > bound:
        raise ValueError(f"ground size {m} above bound {bound}; raise bound explicitly")
    from .core_label import _clo_is_lattice_raw, _labels_raw, _psi_masks_raw

    full = (1 << m) - 1
    seen: set[tuple[int, ...]] = set()
    for fam in moore_families(m):
        members = set(fam)
        bic = [x for x in members if full ^ x in members]
        bic.sort(key=lambda x: (x.bit_count(), x))
        if require_cu or require_spherical or require_clo_not_lattice:
            if not bic:
                continue
            p = _containment_poset(tuple(bic))
            lat = as_lattice(p)
            if not isinstance(lat, Lattice):
                continue
            if require_cu or require_clo_not_lattice:
                cu = is_congruence_uniform(lat)
                if require_cu and not cu:
                    continue
            if require_spherical:
                if not is_meet_semidistributive(lat):
                    continue
                if lat.poset.mobius(lat.bottom, lat.top) == 0:
                    continue
            if require_clo_not_lattice:
                if not cu:
                    continue
                got = _labels_raw(
                    lat.n, lat.poset.up, lat.poset.down,
                    lat.poset.upper, lat.poset.lower,
                )
                assert got is not None
                jlist, label = got
                masks = _psi_masks_raw(
                    lat.n, lat.poset.up, lat.poset.down,
                    lat.poset.upper, lat.poset.lower, jlist, label,
                )
                if _clo_is_lattice_raw(lat.n, masks):
                    continue
        if require_single_step:
            members_set = set(bic)
            ok = True
            for i, x in enumerate(bic):
                for y in bic[i + 1:]:
                    if x & ~y or x == y:
                        continue
                    if not any(x | (1 << e) in members_set for e in bits(y & ~x)):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
        key = canonical_family_key(m, fam)
        if key in seen:
            continue
        seen.add(key)
        yield operator_from_family(m, key)


def read_closure_text(text: str) -> tuple[ClosureOperator, list[str]]:
    """Parse a closure table: lines `X -> cl(X)` with comma-listed elements.

    An optional first line without `->` declares the ground set; otherwise
    the ground set is every element mentioned.  Unlisted subsets close to
    themselves.  Returns the operator and the sorted element names.
    """
    assignments: list[tuple[int, list[str], list[str]]] = []
    ground_decl: list[str] | None = None
    first = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            if first:
                ground_decl = _split_names(line)
                first = False
                continue
            raise FormatError(lineno, f"expected `X -> cl(X)`, got {line!r}")
        first = False
        left, right = line.split("->", 1)
        assignments.append((lineno, _split_names(left), _split_names(right)))
    names = set(ground_decl or [])
    for _, left, right in assignments:
        names.update(left)
        names.update(right)
    ordered = sorted(names)
    index = {name: i for i, name in enumerate(ordered)}
    m = len(ordered)
    table = list(range(1 << m))
    for lineno, left, right in assignments:
        x = mask_of(index[e] for e in left)
        y = mask_of(index[e] for e in right)
        table[x] = y
    op = ClosureOperator(m, table)
    v = validate(op)
    if not v:
        raise ValueError(f"not a closure operator: violates {v.witness}")
    return op, ordered


def _split_names(part: str) -> list[str]:
    part = part.strip()
    if not part or part in ("{}", "∅"):
        return []
    return [tok.strip() for tok in part.split(",") if tok.strip()]


def write_closure_text(op: ClosureOperator, names: list[str] | None = None) -> str:
    """Serialize the non-identity assignments of a closure operator."""
    if names is None:
        names = [chr(ord("a") + i) for i in range(op.m)]
    lines = [",".join(names)]
    for x in range(1 << op.m):
        if op.table[x] != x:
            left = ",".join(names[b] for b in bits(x))
            right = ",".join(names[b] for b in bits(op.table[x]))
            lines.append(f"{left} -> {right}")
    return "\n".join(lines) + "\n"
