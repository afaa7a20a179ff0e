"""Lattice congruences: cover congruences, Con(L), uniformity, quotients."""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import highest, lowest, mask_of
from .lattice import Lattice, Verdict, as_lattice, join_irreducibles
from .poset import from_covers


class Congruence:
    """A partition of a lattice compatible with meet and join.

    Stored as a class-index array where each element maps to the least
    element of its class.  Construction validates that classes are
    intervals and that collapsing them respects meet and join.
    """

    __slots__ = ("parent", "cls")

    def __init__(self, parent: Lattice, cls):
        self.parent = parent
        self.cls = tuple(cls)
        if len(self.cls) != parent.n:
            raise ValueError("class array length must equal the lattice size")
        _validate_congruence(parent, self.cls)

    def __eq__(self, other):
        return isinstance(other, Congruence) and self.cls == other.cls

    def __hash__(self):
        return hash(self.cls)

    def __repr__(self):
        return f"Congruence({self.classes()})"

    def classes(self) -> list[list[int]]:
        """The partition as a list of sorted classes, ordered by minimum."""
        groups: dict[int, list[int]] = {}
        for i, c in enumerate(self.cls):
            groups.setdefault(c, []).append(i)
        return [groups[k] for k in sorted(groups)]

    def collapses(self, x: int, y: int) -> bool:
        """True iff x and y lie in one class."""
        return self.cls[x] == self.cls[y]

    def refines(self, other: "Congruence") -> bool:
        """True iff every class of self lies inside a class of other."""
        image: dict[int, int] = {}
        for i in range(len(self.cls)):
            c = image.setdefault(self.cls[i], other.cls[i])
            if c != other.cls[i]:
                return False
        return True

    def num_classes(self) -> int:
        return len(set(self.cls))


def _validate_congruence(lat: Lattice, cls: tuple[int, ...]) -> None:
    n = lat.n
    groups: dict[int, list[int]] = {}
    for i, c in enumerate(cls):
        groups.setdefault(c, []).append(i)
    for c, members in groups.items():
        if c != members[0]:
            raise ValueError("class ids must be the least member of each class")
        lo, hi = members[0], members[-1]
        interval = lat.poset.up[lo] & lat.poset.down[hi]
        if interval != mask_of(members):
            raise ValueError(
                f"class {members} is not the interval [{lo}, {hi}]"
            )
    # With interval classes, compatibility reduces to checking the
    # endpoints of each class against every element.
    for members in groups.values():
        lo, hi = members[0], members[-1]
        if lo == hi:
            continue
        for u in range(n):
            if cls[lat.meet[lo][u]] != cls[lat.meet[hi][u]]:
                raise ValueError(
                    f"partition not meet-compatible at class [{lo},{hi}], u={u}"
                )
            if cls[lat.join[lo][u]] != cls[lat.join[hi][u]]:
                raise ValueError(
                    f"partition not join-compatible at class [{lo},{hi}], u={u}"
                )


def cg(lat: Lattice, x: int, y: int) -> Congruence:
    """Finest congruence collapsing the cover x covered-by y."""
    if not lat.poset.upper[x] >> y & 1:
        if lat.poset.upper[y] >> x & 1:
            x, y = y, x
        else:
            raise ValueError(f"cg requires a cover pair, got ({x}, {y})")
    arr = _cg_classes(lat.n, lat.poset.up, lat.poset.down, ((x, y),))
    return Congruence(lat, arr)


def cg_join_irreducible(lat: Lattice, j: int) -> Congruence:
    """cg(j) = cg(j_star, j) for a join-irreducible j."""
    lc = lat.poset.lower[j]
    if not lc or lc & (lc - 1):
        raise ValueError(f"{j} is not join-irreducible")
    return cg(lat, lowest(lc), j)


def _cg_classes(n: int, up, down, seed_pairs) -> tuple[int, ...]:
    # Worklist congruence closure: each merge forces the meet and join
    # translates of the merged pair.
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    queue = list(seed_pairs)
    while queue:
        a, b = queue.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[max(ra, rb)] = min(ra, rb)
        for u in range(n):
            ma = highest(down[a] & down[u])
            mb = highest(down[b] & down[u])
            if find(ma) != find(mb):
                queue.append((ma, mb))
            ja = lowest(up[a] & up[u])
            jb = lowest(up[b] & up[u])
            if find(ja) != find(jb):
                queue.append((ja, jb))
    roots: dict[int, int] = {}
    arr = [0] * n
    for i in range(n):
        r = find(i)
        if r not in roots:
            roots[r] = i  # first hit is the least member in index order
        arr[i] = roots[r]
    return tuple(arr)


def identity_congruence(lat: Lattice) -> Congruence:
    """The finest congruence: every class a singleton."""
    return Congruence(lat, tuple(range(lat.n)))


@dataclass(frozen=True)
class CongruenceLattice:
    """Con(L) under refinement: a Lattice whose element i is congruences[i]."""

    lattice: Lattice
    congruences: tuple[Congruence, ...]


def congruence_lattice(lat: Lattice) -> CongruenceLattice:
    """All congruences of L, as joins of the cover congruences cg(j)."""
    n = lat.n
    gens = []
    seen = set()
    for ji in join_irreducibles(lat):
        arr = _cg_classes(n, lat.poset.up, lat.poset.down, ((ji.j_star, ji.j),))
        if arr not in seen:
            seen.add(arr)
            gens.append(arr)
    ident = tuple(range(n))
    known = {ident} | set(gens)
    frontier = list(known)
    while frontier:
        fresh = []
        for a in frontier:
            for g in gens:
                j = _join_partitions(n, lat, a, g)
                if j not in known:
                    known.add(j)
                    fresh.append(j)
        frontier = fresh
    ordered = sorted(known, key=lambda arr: (-len(set(arr)), arr))
    congruences = tuple(Congruence(lat, arr) for arr in ordered)
    edges = []
    for i, ci in enumerate(congruences):
        for k, ck in enumerate(congruences):
            if i != k and ci.refines(ck):
                edges.append((i, k))
    conlat = as_lattice(from_covers(len(ordered), edges))
    assert isinstance(conlat, Lattice), "Con(L) must be a lattice"
    return CongruenceLattice(conlat, congruences)


def _join_partitions(n: int, lat: Lattice, a, b) -> tuple[int, ...]:
    # Join in Con(L): transitive closure of the union, then the
    # compatibility closure (a no-op for lattice congruences, kept cheap
    # by seeding the worklist with both partitions' pairs).
    pairs = [(i, a[i]) for i in range(n) if a[i] != i]
    pairs += [(i, b[i]) for i in range(n) if b[i] != i]
    return _cg_classes(n, lat.poset.up, lat.poset.down, tuple(pairs))


def is_congruence_uniform(lat: Lattice) -> Verdict:
    """j -> cg(j) injective on J(L) and, dually, on M(L)."""
    w = _cu_witness(lat.n, lat.poset.up, lat.poset.down,
                    lat.poset.upper, lat.poset.lower)
    return Verdict(w is None, w)


def _cu_witness(n: int, up, down, upper, lower):
    # Returns ("join"|"meet", e1, e2) for two irreducibles inducing the
    # same congruence, else None.  Congruences of the dual are the same
    # partitions, so the meet side closes covers (m, unique upper cover)
    # directly in L.
    seen: dict[tuple[int, ...], int] = {}
    for j in range(n):
        lc = lower[j]
        if lc and lc & (lc - 1) == 0:
            arr = _cg_classes(n, up, down, ((lowest(lc), j),))
            if arr in seen:
                return ("join", seen[arr], j)
            seen[arr] = j
    seen = {}
    for m in range(n):
        uc = upper[m]
        if uc and uc & (uc - 1) == 0:
            arr = _cg_classes(n, up, down, ((m, lowest(uc)),))
            if arr in seen:
                return ("meet", seen[arr], m)
            seen[arr] = m
    return None


def quotient(lat: Lattice, theta: Congruence) -> tuple[Lattice, list[int]]:
    """The quotient lattice and the projection x -> class index.

    Quotient elements are the classes sorted by least original member,
    which is a linear extension of the quotient order.
    """
    if theta.parent is not lat:
        raise ValueError("congruence belongs to a different lattice")
    classes = theta.classes()
    index = {c[0]: k for k, c in enumerate(classes)}
    proj = [index[theta.cls[i]] for i in range(lat.n)]
    edges = []
    for a, ca in enumerate(classes):
        for b, cb in enumerate(classes):
            if a != b and lat.poset.leq(ca[0], cb[-1]):
                edges.append((a, b))
    q = as_lattice(from_covers(len(classes), edges))
    assert isinstance(q, Lattice), "quotient of a lattice must be a lattice"
    return q, proj


def kernel_irreducibles(lat: Lattice, theta: Congruence) -> list[int]:
    """Join-irreducibles j whose defining cover (j_star, j) is collapsed."""
    return [
        ji.j
        for ji in join_irreducibles(lat)
        if theta.cls[ji.j] == theta.cls[ji.j_star]
    ]
