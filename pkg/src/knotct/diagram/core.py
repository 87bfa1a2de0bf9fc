"""Oriented planar diagrams as PD codes.

A crossing is a 4-tuple of arc ids listed counterclockwise starting from the
incoming under-strand (slot 0).  The over strand occupies slots 1 and 3;
`over_entry` records which of the two is its incoming end.  Orientation is
therefore fully encoded positionally: slots 0 and over_entry are arc heads,
slots 2 and (4 - over_entry) are arc tails.

Sign convention: a crossing is positive when the over strand enters at slot 3
(right-hand rule).  All operations are pure; diagrams are immutable.
"""

from __future__ import annotations

from ..errors import InvalidInput, NotAlternating, NotReduced

__all__ = [
    "PlanarDiagram",
    "crossing_signs",
    "a_state_loops",
    "signature_alternating",
    "is_alternating",
    "serialize_pd",
    "parse_pd",
]


class _DSU:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


class PlanarDiagram:
    __slots__ = ("crossings", "over_entry", "free_loops", "provenance",
                 "_components", "_positions")

    def __init__(self, crossings, over_entry, free_loops=0, provenance=None):
        crossings = tuple(tuple(int(a) for a in c) for c in crossings)
        over_entry = tuple(int(o) for o in over_entry)
        if len(crossings) != len(over_entry):
            raise InvalidInput("crossings and over_entry length mismatch")
        for c in crossings:
            if len(c) != 4:
                raise InvalidInput("each crossing needs 4 arc slots")
        for o in over_entry:
            if o not in (1, 3):
                raise InvalidInput("over_entry must be 1 or 3")
        self.crossings = crossings
        self.over_entry = over_entry
        self.free_loops = int(free_loops)
        self.provenance = provenance
        self._components = None
        self._positions = None
        self._validate()

    # -- structural invariants ------------------------------------------------

    def _validate(self):
        seen = {}
        for ci, c in enumerate(self.crossings):
            for s, a in enumerate(c):
                seen.setdefault(a, []).append((ci, s))
        for a, occ in seen.items():
            if len(occ) != 2:
                raise InvalidInput(f"arc {a} occurs {len(occ)} times, expected 2")
            heads = sum(1 for ci, s in occ if self._is_head(ci, s))
            if heads != 1:
                raise InvalidInput(f"arc {a} has {heads} heads, expected 1")
        self._positions = seen

    def _is_head(self, ci, s):
        return s == 0 or s == self.over_entry[ci]

    # -- basic queries --------------------------------------------------------

    @property
    def n(self):
        return len(self.crossings)

    def arcs(self):
        out = set()
        for c in self.crossings:
            out.update(c)
        return sorted(out)

    def positions(self):
        """arc -> [(crossing, slot), (crossing, slot)]"""
        if self._positions is None:
            pos = {}
            for ci, c in enumerate(self.crossings):
                for s, a in enumerate(c):
                    pos.setdefault(a, []).append((ci, s))
            self._positions = pos
        return self._positions

    def head_of(self, arc):
        for ci, s in self.positions()[arc]:
            if self._is_head(ci, s):
                return ci, s
        raise AssertionError

    def sign(self, ci):
        return 1 if self.over_entry[ci] == 3 else -1

    def signs(self):
        return [self.sign(i) for i in range(self.n)]

    def writhe(self):
        return sum(self.signs())

    def positive_count(self):
        """y(D): the number of positive crossings."""
        return sum(1 for s in self.signs() if s > 0)

    def next_arc(self, arc):
        """The arc following `arc` along its strand."""
        ci, s = self.head_of(arc)
        if s == 0:
            return self.crossings[ci][2]
        return self.crossings[ci][4 - self.over_entry[ci]]

    def components(self):
        """Partition of arcs into oriented cycles, in traversal order."""
        if self._components is None:
            left = set(self.arcs())
            comps = []
            while left:
                start = min(left)
                cyc = []
                a = start
                while True:
                    cyc.append(a)
                    left.discard(a)
                    a = self.next_arc(a)
                    if a == start:
                        break
                comps.append(tuple(cyc))
            self._components = tuple(comps)
        return self._components

    def component_count(self):
        return len(self.components()) + self.free_loops

    def component_of(self):
        out = {}
        for k, cyc in enumerate(self.components()):
            for a in cyc:
                out[a] = k
        return out

    # -- predicates -----------------------------------------------------------

    def is_alternating(self):
        for cyc in self.components():
            passes = []
            for a in cyc:
                _, s = self.head_of(a)
                passes.append(s == 0)  # True = goes under next
            k = len(passes)
            if any(passes[i] == passes[(i + 1) % k] for i in range(k)):
                return False
        return True

    def nugatory_crossings(self):
        """Crossings removable by untwisting: cut vertices of the arc graph,
        including kinks (an arc with both ends on one crossing)."""
        out = []
        pos = self.positions()
        edges = []  # (crossing, crossing) per arc
        for a, occ in pos.items():
            edges.append((occ[0][0], occ[1][0]))
        for ci in range(self.n):
            if any(u == v == ci for u, v in edges):
                out.append(ci)
                continue
            rest = [e for e in edges if ci not in e]
            nodes = set(range(self.n)) - {ci}
            if not nodes:
                continue
            adj = {v: set() for v in nodes}
            for u, v in rest:
                adj[u].add(v)
                adj[v].add(u)
            stack = [next(iter(nodes))]
            seen = set(stack)
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != len(nodes):
                out.append(ci)
        return out

    def is_reduced(self):
        return not self.nugatory_crossings()

    def is_connected(self):
        if self.free_loops:
            return self.n == 0 and self.free_loops == 1
        if self.n == 0:
            return False
        adj = {v: set() for v in range(self.n)}
        for a, occ in self.positions().items():
            u, v = occ[0][0], occ[1][0]
            adj[u].add(v)
            adj[v].add(u)
        stack, seen = [0], {0}
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    # -- state smoothings -----------------------------------------------------

    def a_state_loops(self):
        """o(D): loop count after the A-smoothing at every crossing.

        The A-smoothing joins the arcs at slots (0,1) and (2,3); this depends
        only on over/under, not on orientation.
        """
        arcs = self.arcs()
        if not arcs:
            return max(self.free_loops, 0) or 1
        dsu = _DSU(arcs)
        for c in self.crossings:
            dsu.union(c[0], c[1])
            dsu.union(c[2], c[3])
        return len({dsu.find(a) for a in arcs}) + self.free_loops

    def seifert_circles(self):
        """Loop count of the orientation-preserving smoothing everywhere."""
        arcs = self.arcs()
        if not arcs:
            return max(self.free_loops, 0) or 1
        dsu = _DSU(arcs)
        for ci, c in enumerate(self.crossings):
            o = self.over_entry[ci]
            dsu.union(c[0], c[4 - o])
            dsu.union(c[o], c[2])
        return len({dsu.find(a) for a in arcs}) + self.free_loops

    def seifert_circle_of(self):
        """arc -> representative id of its Seifert circle."""
        arcs = self.arcs()
        dsu = _DSU(arcs)
        for ci, c in enumerate(self.crossings):
            o = self.over_entry[ci]
            dsu.union(c[0], c[4 - o])
            dsu.union(c[o], c[2])
        return {a: dsu.find(a) for a in arcs}

    # -- faces ----------------------------------------------------------------

    def faces(self):
        """Faces of the underlying 4-valent map as orbits of directed arc
        sides.  A dart is (arc, dir) with dir=+1 along the arc's orientation;
        the successor turns counterclockwise at the crossing it reaches."""
        pos = self.positions()

        def endpoint(dart):
            a, d = dart
            occ = pos[a]
            if d == 1:
                return occ[0] if self._is_head(*occ[0]) else occ[1]
            return occ[0] if not self._is_head(*occ[0]) else occ[1]

        def succ(dart):
            ci, s = endpoint(dart)
            s2 = (s + 1) % 4
            b = self.crossings[ci][s2]
            return (b, 1) if not self._is_head(ci, s2) else (b, -1)

        darts = [(a, d) for a in self.arcs() for d in (1, -1)]
        left = set(darts)
        out = []
        while left:
            start = min(left)
            orbit = []
            d = start
            while True:
                orbit.append(d)
                left.discard(d)
                d = succ(d)
                if d == start:
                    break
            out.append(tuple(orbit))
        return out

    # -- crossing surgery -----------------------------------------------------

    def _rebuild(self, keep, joins, dropped_arcs=(), provenance=None, free_extra=0):
        """Keep the crossings in `keep` (ordered), merge arcs per `joins`,
        discard `dropped_arcs` classes, turn portless leftover classes into
        free loops."""
        arcs = self.arcs()
        dsu = _DSU(arcs)
        for grp in joins:
            grp = list(grp)
            for x in grp[1:]:
                dsu.union(grp[0], x)
        dropped = {dsu.find(a) for a in dropped_arcs}
        kept_cross = [self.crossings[i] for i in keep]
        kept_over = [self.over_entry[i] for i in keep]
        used = set()
        for c in kept_cross:
            used.update(dsu.find(a) for a in c)
        loops = self.free_loops + free_extra
        for r in {dsu.find(a) for a in arcs}:
            if r not in used and r not in dropped:
                loops += 1
        relabel = {}
        for r in sorted(used):
            relabel[r] = len(relabel)
        new_cross = [tuple(relabel[dsu.find(a)] for a in c) for c in kept_cross]
        return PlanarDiagram(new_cross, kept_over, loops, provenance)

    def switch(self, ci):
        """Reverse over/under at one crossing."""
        o = self.over_entry[ci]
        cross = list(self.crossings)
        over = list(self.over_entry)
        c = cross[ci]
        cross[ci] = tuple(c[(o + k) % 4] for k in range(4))
        over[ci] = 4 - o
        return PlanarDiagram(cross, over, self.free_loops, None)

    def smooth(self, ci):
        """Oriented smoothing at a crossing (both strands keep direction)."""
        c = self.crossings[ci]
        o = self.over_entry[ci]
        keep = [i for i in range(self.n) if i != ci]
        joins = [(c[0], c[4 - o]), (c[o], c[2])]
        return self._rebuild(keep, joins)

    # -- Reidemeister I / II cleanup ------------------------------------------

    def _r1_spot(self):
        for ci, c in enumerate(self.crossings):
            for s in range(4):
                if c[s] == c[(s + 1) % 4]:
                    return ci, s
        return None

    def _r2_spot(self):
        pos = self.positions()
        by_pair = {}
        for a, occ in pos.items():
            (ci, si), (cj, sj) = occ
            if ci == cj:
                continue
            key = (min(ci, cj), max(ci, cj))
            by_pair.setdefault(key, []).append(a)
        for (ci, cj), shared in by_pair.items():
            if len(shared) < 2:
                continue
            for x in range(len(shared)):
                for y in range(x + 1, len(shared)):
                    e, f = shared[x], shared[y]
                    se_i = next(s for s in range(4) if self.crossings[ci][s] == e)
                    sf_i = next(s for s in range(4) if self.crossings[ci][s] == f)
                    se_j = next(s for s in range(4) if self.crossings[cj][s] == e)
                    sf_j = next(s for s in range(4) if self.crossings[cj][s] == f)
                    if (se_i - sf_i) % 4 not in (1, 3):
                        continue
                    if (se_j - sf_j) % 4 not in (1, 3):
                        continue
                    e_over_i = se_i in (1, 3)
                    e_over_j = se_j in (1, 3)
                    if e_over_i == e_over_j:  # same strand over at both: cancels
                        return ci, cj, e, f, se_i, sf_i, se_j, sf_j
        return None

    def simplify(self):
        """Remove kinks and cancelling clasp pairs until none remain."""
        d = self
        while True:
            spot = d._r1_spot()
            if spot is not None:
                ci, s = spot
                c = d.crossings[ci]
                kink = c[s]
                keep = [i for i in range(d.n) if i != ci]
                others = [c[(s + 2) % 4], c[(s + 3) % 4]]
                d = d._rebuild(keep, [(others[0], others[1], kink)])
                continue
            spot = d._r2_spot()
            if spot is not None:
                ci, cj, e, f, se_i, sf_i, se_j, sf_j = spot
                keep = [i for i in range(d.n) if i not in (ci, cj)]
                xi = d.crossings[ci][(se_i + 2) % 4]
                xj = d.crossings[cj][(se_j + 2) % 4]
                yi = d.crossings[ci][(sf_i + 2) % 4]
                yj = d.crossings[cj][(sf_j + 2) % 4]
                d = d._rebuild(keep, [(xi, e, xj), (yi, f, yj)])
                continue
            return d

    # -- components and linking ----------------------------------------------

    def strand_components(self, ci):
        """Component indices of (under strand, over strand) at a crossing."""
        comp = self.component_of()
        c = self.crossings[ci]
        return comp[c[0]], comp[c[self.over_entry[ci]]]

    def linking_number(self, ka, kb):
        """lk of components ka, kb: half the signed count of inter-component
        crossings."""
        total = 0
        for ci in range(self.n):
            u, o = self.strand_components(ci)
            if {u, o} == {ka, kb} and u != o:
                total += self.sign(ci)
        if total % 2:
            raise AssertionError("odd inter-component crossing sum")
        return total // 2

    def component_diagram(self, k):
        """Sub-diagram of component k alone (other strands deleted)."""
        comp = self.component_of()
        keep, joins, dropped = [], [], set()
        for a, c in comp.items():
            if c != k:
                dropped.add(a)
        for ci in range(self.n):
            u, o = self.strand_components(ci)
            c = self.crossings[ci]
            oe = self.over_entry[ci]
            if u == k and o == k:
                keep.append(ci)
            elif u == k:
                joins.append((c[0], c[2]))
            elif o == k:
                joins.append((c[oe], c[4 - oe]))
        return self._rebuild(keep, joins, dropped_arcs=dropped)

    def component_diagrams(self):
        out = [self.component_diagram(k) for k in range(len(self.components()))]
        for _ in range(self.free_loops):
            out.append(PlanarDiagram((), (), 1, None))
        return out

    # -- misc -----------------------------------------------------------------

    def mirror(self):
        cross, over = [], []
        for ci, c in enumerate(self.crossings):
            o = self.over_entry[ci]
            cross.append(tuple(c[(o + k) % 4] for k in range(4)))
            over.append(4 - o)
        return PlanarDiagram(cross, over, self.free_loops, self.provenance)

    def relabeled(self, perm):
        """Apply an arc-id bijection (dict)."""
        cross = [tuple(perm[a] for a in c) for c in self.crossings]
        return PlanarDiagram(cross, self.over_entry, self.free_loops, self.provenance)

    def canonical_key(self):
        """A relabeling-invariant memo key (minimized over traversal starts)."""
        if self.n == 0:
            return f"loops={self.free_loops}"
        best = None
        for start in self.arcs():
            relabel = {}
            a = start
            while a not in relabel:
                relabel[a] = len(relabel)
                a = self.next_arc(a)
            for a in self.arcs():
                if a not in relabel:
                    # other components: deterministic but label-dependent order
                    b = a
                    while b not in relabel:
                        relabel[b] = len(relabel)
                        b = self.next_arc(b)
            rows = sorted(
                (tuple(relabel[x] for x in c), self.over_entry[i])
                for i, c in enumerate(self.crossings)
            )
            key = repr((rows, self.free_loops))
            if best is None or key < best:
                best = key
        return best


# -- module-level forms matching the operation contracts ----------------------


def crossing_signs(d: PlanarDiagram):
    return d.signs()


def a_state_loops(d: PlanarDiagram) -> int:
    return d.a_state_loops()


def is_alternating(d: PlanarDiagram) -> bool:
    return d.is_alternating()


def signature_alternating(d: PlanarDiagram) -> int:
    """sigma = o(D) - y(D) - 1 on a reduced alternating diagram."""
    if not d.is_alternating():
        raise NotAlternating("diagram is not alternating")
    bad = d.nugatory_crossings()
    if bad:
        raise NotReduced(f"nugatory crossings at {bad}")
    return d.a_state_loops() - d.positive_count() - 1


# -- PD-code serialization ----------------------------------------------------


def serialize_pd(d: PlanarDiagram) -> str:
    lines = [f"components={d.component_count()} crossings={d.n}"]
    for i, c in enumerate(d.crossings):
        lines.append(f"X({c[0]},{c[1]},{c[2]},{c[3]},{'+' if d.sign(i) > 0 else '-'})")
    return "\n".join(lines) + "\n"


def parse_pd(text: str) -> PlanarDiagram:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("components="):
        raise InvalidInput("missing PD header")
    try:
        comp_part, cross_part = lines[0].split()
        n_comp = int(comp_part.split("=")[1])
        n_cross = int(cross_part.split("=")[1])
    except (ValueError, IndexError):
        raise InvalidInput(f"bad PD header: {lines[0]!r}") from None
    cross, over = [], []
    for ln in lines[1:]:
        if not (ln.startswith("X(") and ln.endswith(")")):
            raise InvalidInput(f"bad PD line: {ln!r}")
        parts = ln[2:-1].split(",")
        if len(parts) != 5:
            raise InvalidInput(f"bad PD line: {ln!r}")
        cross.append(tuple(int(p) for p in parts[:4]))
        over.append(3 if parts[4] == "+" else 1)
    if len(cross) != n_cross:
        raise InvalidInput("crossing count does not match header")
    d = PlanarDiagram(cross, over, free_loops=n_comp if n_cross == 0 else 0)
    if d.component_count() != n_comp:
        raise InvalidInput("component count does not match header")
    return d
