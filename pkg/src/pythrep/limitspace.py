"""The limit Hilbert space of leaf-decorated trees.

A vector is a tree together with one C^d value per leaf, taken up to
growth: grafting a caret at a leaf replaces its value xi by (A xi, B xi),
which preserves inner products because (A, B) is a Pythagorean pair.  Two
decorated trees represent the same vector exactly when they agree after
growing to a common refinement, and every pair of vectors can be compared
that way.

``tau(v, z)`` reads off the component of z over the vertex v, rescaled to
a vector in its own right; ``tau_star(v, z)`` embeds a vector back under
v, padding the rest of the tree with zeros.  Their composite ``rho(v, z)``
is the orthogonal projection onto the part of the space sitting over v,
and summing rho over a standard dyadic partition gives back the identity.
"""

from __future__ import annotations

import numpy as np

from .forests import Forest, Tree, common_refinement
from .pythagorean import PythagoreanPair, leaf_decorations, word_operator
from .words import IntervalUnion, check_word, sibling

__all__ = [
    "LimitVector",
    "tau",
    "tau_star",
    "rho",
    "rho_union",
    "parse_limit_vector",
]


class LimitVector:
    """A decorated tree: ``values[i]`` is the vector at ``tree.leaves[i]``.

    Instances are immutable.  Arithmetic grows both operands to a common
    refinement; representatives are kept as produced, use :meth:`trim` to
    shrink one explicitly.
    """

    __slots__ = ("pair", "tree", "values")

    def __init__(self, pair: PythagoreanPair, tree: Tree, values):
        values = np.array(values, dtype=np.complex128)
        if values.shape != (tree.n_leaves, pair.dim):
            raise ValueError(
                f"expected values of shape {(tree.n_leaves, pair.dim)}, got {values.shape}"
            )
        values.setflags(write=False)
        object.__setattr__(self, "pair", pair)
        object.__setattr__(self, "tree", tree)
        object.__setattr__(self, "values", values)

    @classmethod
    def embed(cls, pair: PythagoreanPair, xi) -> "LimitVector":
        """The vector with a bare root decorated by xi."""
        xi = np.asarray(xi, dtype=np.complex128).reshape(1, pair.dim)
        return cls(pair, Tree.leaf(), xi)

    @classmethod
    def zero(cls, pair: PythagoreanPair) -> "LimitVector":
        return cls.embed(pair, np.zeros(pair.dim))

    # -- growth ---------------------------------------------------------

    def grow(self, forest: Forest) -> "LimitVector":
        """Graft one tree of the forest under each leaf, pushing values
        down with the word operators."""
        if forest.n_roots != self.tree.n_leaves:
            raise ValueError(
                f"forest has {forest.n_roots} roots, vector has {self.tree.n_leaves} leaves"
            )
        rows = np.vstack(
            [
                leaf_decorations(self.pair, t, x)
                for t, x in zip(forest.trees, self.values)
            ]
        )
        return LimitVector(self.pair, self.tree.composed(forest), rows)

    def refine_to(self, tree: Tree) -> "LimitVector":
        forest = Forest(tree.subtree(a) for a in self.tree.leaves)
        return self.grow(forest)

    def _aligned(self, other: "LimitVector") -> tuple[Tree, np.ndarray, np.ndarray]:
        if self.pair is not other.pair and self.pair.dim != other.pair.dim:
            raise ValueError("vectors live over different pairs")
        if self.tree == other.tree:
            return self.tree, self.values, other.values
        w, f, h = common_refinement(self.tree, other.tree)
        return w, self.grow(f).values, other.grow(h).values

    # -- Hilbert space structure ----------------------------------------

    def inner(self, other: "LimitVector") -> complex:
        """Inner product, linear in self and conjugate-linear in other."""
        _, v1, v2 = self._aligned(other)
        return complex(np.sum(v1 * np.conj(v2)))

    def norm(self) -> float:
        return float(np.sqrt(max(self.inner(self).real, 0.0)))

    def distance(self, other: "LimitVector") -> float:
        return (self - other).norm()

    def isclose(self, other: "LimitVector", tol: float = 1e-9) -> bool:
        return self.distance(other) <= tol

    def __add__(self, other: "LimitVector") -> "LimitVector":
        w, v1, v2 = self._aligned(other)
        return LimitVector(self.pair, w, v1 + v2)

    def __sub__(self, other: "LimitVector") -> "LimitVector":
        w, v1, v2 = self._aligned(other)
        return LimitVector(self.pair, w, v1 - v2)

    def __neg__(self) -> "LimitVector":
        return LimitVector(self.pair, self.tree, -self.values)

    def __mul__(self, scalar) -> "LimitVector":
        return LimitVector(self.pair, self.tree, self.values * complex(scalar))

    __rmul__ = __mul__

    # -- representatives --------------------------------------------------

    def trim(self, tol: float = 1e-12) -> "LimitVector":
        """Collapse carets whose two leaf values are, within tol, the
        growth of a single parent value.

        For leaf values (eta0, eta1) the best parent is
        xi = A* eta0 + B* eta1; the caret collapses when the residual
        norm of (eta0 - A xi, eta1 - B xi) is at most tol.  Collapses
        cascade upward in one pass.
        """
        a, b = self.pair.a, self.pair.b
        a_h, b_h = a.conj().T, b.conj().T
        addrs: list[str] = []
        vals: list[np.ndarray] = []
        for addr, val in zip(self.tree.leaves, self.values):
            addrs.append(addr)
            vals.append(val)
            while (
                len(addrs) >= 2
                and len(addrs[-1]) == len(addrs[-2])
                and addrs[-1][:-1] == addrs[-2][:-1]
                and addrs[-2][-1] == "0"
                and addrs[-1][-1] == "1"
            ):
                eta0, eta1 = vals[-2], vals[-1]
                xi = a_h @ eta0 + b_h @ eta1
                residual = np.linalg.norm(eta0 - a @ xi) ** 2
                residual += np.linalg.norm(eta1 - b @ xi) ** 2
                if residual > tol * tol:
                    break
                parent = addrs[-2][:-1]
                addrs.pop()
                addrs.pop()
                vals.pop()
                vals.pop()
                addrs.append(parent)
                vals.append(xi)
        return LimitVector(self.pair, Tree(addrs), np.array(vals))

    def __repr__(self) -> str:
        return (
            f"LimitVector(dim={self.pair.dim}, leaves={self.tree.n_leaves}, "
            f"norm={self.norm():.6g})"
        )

    def __setattr__(self, *a):
        raise AttributeError("LimitVector is immutable")


def tau(v: str, z: LimitVector) -> LimitVector:
    """Component of z over the vertex v, as a vector in its own right.

    When v sits below a leaf of the representative, the component is the
    single value obtained by pushing that leaf's vector down to v.
    """
    check_word(v)
    if z.tree.has_vertex(v):
        idx = [i for i, w in enumerate(z.tree.leaves) if w.startswith(v)]
        return LimitVector(z.pair, z.tree.subtree(v), z.values[idx])
    for i, leaf in enumerate(z.tree.leaves):
        if v.startswith(leaf):
            op = word_operator(z.pair, v[len(leaf):])
            return LimitVector.embed(z.pair, op @ z.values[i])
    raise AssertionError("vertex neither above nor below the leaf set")


def tau_star(v: str, z: LimitVector) -> LimitVector:
    """Adjoint of tau: place z under the vertex v and zero elsewhere."""
    check_word(v)
    if not v:
        return z
    side = [sibling(v[: k + 1]) for k in range(len(v))]
    leaves = sorted([v + w for w in z.tree.leaves] + side)
    values = np.zeros((len(leaves), z.pair.dim), dtype=np.complex128)
    rows = [i for i, w in enumerate(leaves) if w.startswith(v)]
    values[rows] = z.values
    return LimitVector(z.pair, Tree(leaves), values)


def rho(v: str, z: LimitVector) -> LimitVector:
    """Projection onto the part of the space over v."""
    return tau_star(v, tau(v, z))


def rho_union(intervals: IntervalUnion, z: LimitVector) -> LimitVector:
    """Sum of the projections over the words of a canonical union."""
    out = LimitVector.zero(z.pair)
    for v in intervals.words:
        out = out + rho(v, z)
    return out


def parse_limit_vector(pair: PythagoreanPair, text: str) -> LimitVector:
    """Parse ``tree : v1 ; v2 ; ...`` with one complex vector per leaf;
    vector entries are comma-separated in ``re+imi`` form."""
    if ":" not in text:
        raise ValueError("expected 'tree : values'")
    tree_part, _, value_part = text.partition(":")
    tree = Tree.from_text(tree_part.strip())
    groups = [g for g in value_part.split(";")]
    if len(groups) != tree.n_leaves:
        raise ValueError(f"expected {tree.n_leaves} vectors, got {len(groups)}")
    values = np.zeros((tree.n_leaves, pair.dim), dtype=np.complex128)
    for i, group in enumerate(groups):
        entries = [e.strip() for e in group.split(",")]
        if len(entries) != pair.dim:
            raise ValueError(
                f"leaf {i}: expected {pair.dim} entries, got {len(entries)}"
            )
        for j, entry in enumerate(entries):
            try:
                values[i, j] = complex(entry.replace("i", "j").replace(" ", ""))
            except ValueError:
                raise ValueError(f"bad complex entry {entry!r}") from None
    return LimitVector(pair, tree, values)
