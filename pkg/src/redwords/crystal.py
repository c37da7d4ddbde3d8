"""Crystal structure on decreasing factorizations.

A decreasing factorization of a group element w splits a reduced word for w
into consecutive strictly decreasing blocks.  With ``num_factors`` blocks
(empty blocks allowed) the set of all such factorizations carries raising and
lowering operators e_i / f_i for 1 <= i < num_factors that move one letter
between adjacent blocks after a bracketing of their contents.  The weight of
a factorization lists the block lengths starting from the rightmost block.

Internally ``factors[0]`` is the rightmost block (the one acted on first by
the group product); display order is the reverse, matching the usual
left-to-right notation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Callable, Iterable, Iterator, Optional

from .coxeter import CoxeterSystem, Word


def bracket_unpaired(upper: Iterable[int], lower: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Pair letters of ``upper`` into ``lower`` and return the leftovers.

    Letters of ``upper`` are processed in decreasing order; each is paired
    with the smallest strictly larger letter of ``lower`` not yet used.
    Returns (unpaired upper letters, unpaired lower letters), both sorted
    increasingly.
    """
    lower_set = set(lower)
    used: set[int] = set()
    unpaired_upper = []
    for b in sorted(upper, reverse=True):
        candidates = [a for a in lower_set - used if a > b]
        if candidates:
            used.add(min(candidates))
        else:
            unpaired_upper.append(b)
    return tuple(sorted(unpaired_upper)), tuple(sorted(lower_set - used))


@dataclass(frozen=True)
class DecreasingFactorization:
    """A tuple of strictly decreasing blocks multiplying to ``target``.

    ``factors[k]`` is block k+1 counted from the right; each block is a
    strictly decreasing tuple of generator indices.  The group element the
    blocks multiply to is carried along so crystal operators can assert they
    never change it.
    """

    factors: tuple[Word, ...]
    target: object

    def __post_init__(self) -> None:
        for block in self.factors:
            if any(block[k] <= block[k + 1] for k in range(len(block) - 1)):
                raise ValueError(f"block {block} is not strictly decreasing")

    # ------------------------------------------------------------------
    # construction helpers

    @classmethod
    def from_display(cls, blocks: Iterable[Iterable[int]], target) -> "DecreasingFactorization":
        """Build from blocks listed left to right (highest block first)."""
        ordered = tuple(tuple(b) for b in blocks)[::-1]
        return cls(ordered, target)

    @classmethod
    def from_word(cls, system: CoxeterSystem, word: Word) -> "DecreasingFactorization":
        """Embed a word as singleton blocks, one letter per block."""
        factors = tuple((letter,) for letter in reversed(tuple(word)))
        return cls(factors, system.evaluate(word))

    # ------------------------------------------------------------------
    # basic data

    @property
    def num_factors(self) -> int:
        return len(self.factors)

    def weight(self) -> tuple[int, ...]:
        """Block lengths, rightmost block first."""
        return tuple(len(b) for b in self.factors)

    def display_factors(self) -> tuple[Word, ...]:
        """Blocks in left-to-right display order (highest block first)."""
        return self.factors[::-1]

    def word(self) -> Word:
        """Concatenation of the blocks in display order."""
        out: list[int] = []
        for block in self.display_factors():
            out.extend(block)
        return tuple(out)

    def validate(self, system: CoxeterSystem) -> None:
        """Check the concatenated word is reduced and spells ``target``."""
        w = self.word()
        if system.evaluate(w) != self.target:
            raise ValueError(f"{self} does not multiply to {self.target}")
        if system.length(self.target) != len(w):
            raise ValueError(f"{self} is not reduced")

    def __str__(self) -> str:
        parts = []
        for block in self.display_factors():
            parts.append("1" if not block else "*".join(f"s{i}" for i in block))
        return "(" + ", ".join(parts) + ")"

    def compact(self) -> str:
        """Digit notation, e.g. ``(32)(31)(2)`` with ``()`` for an empty block."""
        return "".join(
            "(" + "".join(str(i) for i in block) + ")"
            for block in self.display_factors()
        )

    # ------------------------------------------------------------------
    # crystal operators

    def _check_op_index(self, i: int) -> None:
        if not 1 <= i < self.num_factors:
            raise ValueError(f"operator index {i} out of range for {self.num_factors} blocks")

    def pairing(self, i: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Unpaired letters between blocks i+1 (upper) and i (lower)."""
        self._check_op_index(i)
        return bracket_unpaired(self.factors[i], self.factors[i - 1])

    def e(self, i: int) -> Optional["DecreasingFactorization"]:
        """Raising operator: move a letter from block i+1 down to block i.

        Returns None when every letter of block i+1 is paired.  The moved
        letter b drops to b-t where t counts the consecutive letters just
        below b present in block i+1.
        """
        left, _ = self.pairing(i)
        if not left:
            return None
        b = left[0]
        upper = set(self.factors[i])
        lower = set(self.factors[i - 1])
        t = 0
        while b - t - 1 in upper:
            t += 1
        assert b - t not in lower
        return self._with_blocks(i, upper - {b}, lower | {b - t})

    def f(self, i: int) -> Optional["DecreasingFactorization"]:
        """Lowering operator, inverse to :meth:`e` on every edge.

        Moves a letter from block i up to block i+1: the moved letter a rises
        to a+s where s counts the consecutive letters just above a present in
        block i.  Returns None when every letter of block i is paired.
        """
        _, right = self.pairing(i)
        if not right:
            return None
        a = right[-1]
        upper = set(self.factors[i])
        lower = set(self.factors[i - 1])
        s = 0
        while a + s + 1 in lower:
            s += 1
        assert a + s not in upper
        return self._with_blocks(i, upper | {a + s}, lower - {a})

    def _with_blocks(self, i: int, upper: set[int], lower: set[int]) -> "DecreasingFactorization":
        blocks = list(self.factors)
        blocks[i] = tuple(sorted(upper, reverse=True))
        blocks[i - 1] = tuple(sorted(lower, reverse=True))
        return replace(self, factors=tuple(blocks))

    def epsilon(self, i: int) -> int:
        """Number of times :meth:`e` applies at index i."""
        count = 0
        cur = self.e(i)
        while cur is not None:
            count += 1
            cur = cur.e(i)
        return count

    def phi(self, i: int) -> int:
        """Number of times :meth:`f` applies at index i."""
        count = 0
        cur = self.f(i)
        while cur is not None:
            count += 1
            cur = cur.f(i)
        return count


# ----------------------------------------------------------------------
# enumeration


def _decreasing_moves(system: CoxeterSystem) -> tuple[tuple[Word, object, object], ...]:
    """All decreasing elements as (letters, element, inverse), cached per system."""
    cached = getattr(system, "_decreasing_moves_cache", None)
    if cached is not None:
        return cached
    moves = []
    indices = sorted(system.index_set)
    for mask in range(1 << len(indices)):
        letters = tuple(
            indices[k] for k in range(len(indices) - 1, -1, -1) if mask >> k & 1
        )
        v = system.evaluate(letters)
        assert system.length(v) == len(letters), "decreasing words must be reduced"
        moves.append((letters, v, system.inverse(v)))
    moves.sort(key=lambda m: (len(m[0]), m[0]))
    out = tuple(moves)
    system._decreasing_moves_cache = out
    return out


def default_num_factors(system: CoxeterSystem, w) -> int:
    """Block count used when unspecified: the length of w (at least one)."""
    return max(1, system.length(w))


def decreasing_factorizations(system: CoxeterSystem, w, num_factors: int | None = None) -> Iterator[DecreasingFactorization]:
    """All decreasing factorizations of ``w`` into exactly ``num_factors`` blocks.

    Blocks may be empty; the block lengths always sum to the length of ``w``.
    """
    if num_factors is None:
        num_factors = default_num_factors(system, w)
    if num_factors < 1:
        raise ValueError("need at least one block")
    moves = _decreasing_moves(system)
    max_block = len(system.index_set)
    identity = system.identity

    def rec(u, k: int):
        remaining = system.length(u)
        if k == 0:
            if u == identity:
                yield ()
            return
        if remaining > k * max_block:
            return
        for letters, _, vinv in moves:
            if len(letters) > remaining:
                continue
            u2 = system.multiply(u, vinv)
            if system.length(u2) == remaining - len(letters):
                for rest in rec(u2, k - 1):
                    yield (letters,) + rest

    for blocks in rec(w, num_factors):
        yield DecreasingFactorization(blocks, w)


def highest_weight_factorizations(system: CoxeterSystem, w, num_factors: int | None = None) -> list[DecreasingFactorization]:
    """Factorizations killed by every raising operator.

    Enumerates with pruning: block k+1 is admissible only if the bracketing
    against block k leaves no unpaired upper letter, which is exactly the
    condition e_k = None and depends on no later block.
    """
    if num_factors is None:
        num_factors = default_num_factors(system, w)
    if num_factors < 1:
        raise ValueError("need at least one block")
    moves = _decreasing_moves(system)
    max_block = len(system.index_set)
    identity = system.identity
    out: list[DecreasingFactorization] = []

    def rec(u, chosen: tuple[Word, ...]) -> None:
        remaining = system.length(u)
        k = num_factors - len(chosen)
        if k == 0:
            if u == identity:
                out.append(DecreasingFactorization(chosen, w))
            return
        if remaining > k * max_block:
            return
        for letters, _, vinv in moves:
            if len(letters) > remaining:
                continue
            if chosen:
                unpaired_upper, _ = bracket_unpaired(letters, chosen[-1])
                if unpaired_upper:
                    continue
            u2 = system.multiply(u, vinv)
            if system.length(u2) == remaining - len(letters):
                rec(u2, chosen + (letters,))

    rec(w, ())
    return sorted(out, key=lambda fz: fz.factors)


# ----------------------------------------------------------------------
# crystal graphs


@dataclass(eq=False)
class CrystalGraph:
    """Edge-labelled graph of a crystal: f_i arrows between vertices.

    Vertices are any hashable values carrying a weight; ``f_edges`` maps
    (vertex, i) to the target vertex.
    """

    vertices: tuple
    index_set: tuple[int, ...]
    f_edges: dict
    weights: dict

    def __post_init__(self) -> None:
        self._e_edges = {(v, i): u for (u, i), v in self.f_edges.items()}
        vertex_set = set(self.vertices)
        for (u, _), v in self.f_edges.items():
            if u not in vertex_set or v not in vertex_set:
                raise ValueError("edge endpoint outside the vertex set")

    def f(self, v, i: int):
        return self.f_edges.get((v, i))

    def e(self, v, i: int):
        return self._e_edges.get((v, i))

    def edges(self) -> list[tuple[object, int, object]]:
        """Sorted (source, label, target) triples."""
        order = {v: k for k, v in enumerate(self.vertices)}
        return sorted(
            ((u, i, v) for (u, i), v in self.f_edges.items()),
            key=lambda t: (order[t[0]], t[1]),
        )

    def highest_weights(self) -> list[tuple[object, tuple[int, ...]]]:
        """Vertices with no incoming f-arrow of any colour, with weights."""
        out = []
        for v in self.vertices:
            if all((v, i) not in self._e_edges for i in self.index_set):
                out.append((v, self.weights[v]))
        return out

    def components(self) -> tuple[frozenset, ...]:
        """Connected components, each a frozenset of vertices."""
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (u, _), v in self.f_edges.items():
            parent[find(u)] = find(v)
        groups: dict = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        order = {v: k for k, v in enumerate(self.vertices)}
        return tuple(
            frozenset(g) for g in sorted(groups.values(), key=lambda g: min(order[v] for v in g))
        )

    def component_of(self) -> dict:
        """Map from vertex to its component index."""
        out = {}
        for k, comp in enumerate(self.components()):
            for v in comp:
                out[v] = k
        return out

    def to_dot(self, name: str = "crystal", label: Callable[[object], str] = str) -> str:
        from .dot import digraph

        ids = {v: f"n{k}" for k, v in enumerate(self.vertices)}
        nodes = [(ids[v], label(v)) for v in self.vertices]
        edges = [
            (ids[u], ids[v], {"label": str(i)})
            for u, i, v in self.edges()
        ]
        return digraph(name, nodes, edges)


def factorization_crystal(system: CoxeterSystem, w, num_factors: int | None = None) -> CrystalGraph:
    """The crystal graph on all decreasing factorizations of ``w``."""
    if num_factors is None:
        num_factors = default_num_factors(system, w)
    vertices = tuple(
        sorted(
            decreasing_factorizations(system, w, num_factors),
            key=lambda fz: fz.factors,
        )
    )
    index_set = tuple(range(1, num_factors))
    f_edges = {}
    for v in vertices:
        for i in index_set:
            image = v.f(i)
            if image is not None:
                f_edges[(v, i)] = image
    weights = {v: v.weight() for v in vertices}
    return CrystalGraph(vertices, index_set, f_edges, weights)


# ----------------------------------------------------------------------
# parsing


_FACTOR_TOKEN = re.compile(r"\(([^()]*)\)|1")


def parse_factorization(system: CoxeterSystem, text: str) -> DecreasingFactorization:
    """Parse digit notation like ``(32)(31)(2)``, blocks listed left to right.

    A bare ``1`` or an empty group ``()`` denotes an empty block.  Letters
    are single digits, or comma separated inside a group.
    """
    stripped = text.replace(" ", "")
    blocks: list[tuple[int, ...]] = []
    pos = 0
    while pos < len(stripped):
        match = _FACTOR_TOKEN.match(stripped, pos)
        if match is None:
            raise ValueError(f"cannot parse factorization {text!r} at {stripped[pos:]!r}")
        if match.group(0) == "1":
            blocks.append(())
        else:
            inner = match.group(1)
            if not inner:
                blocks.append(())
            elif "," in inner:
                blocks.append(tuple(int(tok) for tok in inner.split(",")))
            else:
                blocks.append(tuple(int(ch) for ch in inner))
        pos = match.end()
    word: list[int] = []
    for b in blocks:
        word.extend(b)
    target = system.evaluate(word)
    fz = DecreasingFactorization.from_display(blocks, target)
    fz.validate(system)
    return fz


# ----------------------------------------------------------------------
# structural checks


def stembridge_violations(graph: CrystalGraph) -> list[str]:
    """Local axiom spot checks on a crystal graph, simply laced indices.

    Checks, for every vertex x and indices i != j with e_i(x) defined:
    distant colours leave the j-string data unchanged and commute; adjacent
    colours change (eps_j, phi_j) by (0,-1) or (+1,0); and the matching
    square or double-string closures hold.  Returns human-readable
    descriptions of any violations.
    """
    bad: list[str] = []

    def eps(x, i):
        count = 0
        while (cur := graph.e(x, i)) is not None:
            count += 1
            x = cur
        return count

    def phi(x, i):
        count = 0
        while (cur := graph.f(x, i)) is not None:
            count += 1
            x = cur
        return count

    for x in graph.vertices:
        for i in graph.index_set:
            y = graph.e(x, i)
            if y is None:
                continue
            for j in graph.index_set:
                if j == i:
                    continue
                d_eps = eps(y, j) - eps(x, j)
                d_phi = phi(y, j) - phi(x, j)
                if abs(i - j) >= 2:
                    if (d_eps, d_phi) != (0, 0):
                        bad.append(f"distant colours {i},{j} move string data at {x}")
                    z = graph.e(x, j)
                    if z is not None and graph.e(y, j) != graph.e(z, i):
                        bad.append(f"distant colours {i},{j} fail to commute at {x}")
                else:
                    if (d_eps, d_phi) not in {(0, -1), (1, 0)}:
                        bad.append(
                            f"adjacent colours {i},{j} give (d_eps,d_phi)=({d_eps},{d_phi}) at {x}"
                        )
        for i in graph.index_set:
            for j in graph.index_set:
                if abs(i - j) != 1:
                    continue
                yi = graph.e(x, i)
                yj = graph.e(x, j)
                if yi is None or yj is None:
                    continue
                di = eps(yi, j) - eps(x, j)
                dj = eps(yj, i) - eps(x, i)
                if di == 0 and dj == 0:
                    if graph.e(yi, j) != graph.e(yj, i) or graph.e(yi, j) is None:
                        bad.append(f"square closure fails for colours {i},{j} at {x}")
                if di == 1 and dj == 1:
                    a = _apply_chain(graph, x, [(i, "e"), (j, "e"), (j, "e"), (i, "e")])
                    b = _apply_chain(graph, x, [(j, "e"), (i, "e"), (i, "e"), (j, "e")])
                    if a is None or a != b:
                        bad.append(f"double-string closure fails for colours {i},{j} at {x}")
    return bad


def _apply_chain(graph: CrystalGraph, x, steps):
    for i, kind in steps:
        x = graph.e(x, i) if kind == "e" else graph.f(x, i)
        if x is None:
            return None
    return x
