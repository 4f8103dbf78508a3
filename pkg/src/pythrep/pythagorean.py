"""Pythagorean pairs: matrices (A, B) with A*A + B*B = 1.

Such a pair makes the map xi -> (A xi, B xi) an isometry from C^d into
C^d + C^d, which is the seed of everything downstream: adding a caret to
a tree multiplies the leaf value by A along the left edge and by B along
the right edge.  The operator attached to a vertex word w is the product
of edge operators read from the root, newest letter multiplying on the
left.

A pair is *diffuse* when every infinite product ... X_3 X_2 X_1 with
X_k in {A, B} tends to 0 in norm.  ``diffuse_certificate`` decides this
where it can: a short periodic word whose operator has spectral radius 1
refutes diffuseness, while a depth-first search that drives every branch
below a norm threshold certifies it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .forests import Forest, Tree

__all__ = [
    "PythagoreanPair",
    "scalar_pair",
    "random_pair",
    "word_operator",
    "leaf_decorations",
    "phi",
    "operator_norm",
    "spectral_radius",
    "DiffuseVerdict",
    "diffuse_certificate",
    "pair_to_json",
    "pair_from_json",
]


class PythagoreanPair:
    """A pair of d x d complex matrices with A*A + B*B = 1 (within tol)."""

    __slots__ = ("a", "b", "dim", "tol")

    def __init__(self, a, b, tol: float = 1e-12):
        a = np.array(a, dtype=np.complex128)
        b = np.array(b, dtype=np.complex128)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape != b.shape:
            raise ValueError(f"need two square matrices of equal size, got {a.shape} and {b.shape}")
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "dim", a.shape[0])
        object.__setattr__(self, "tol", float(tol))

    def validate(self) -> float:
        """Frobenius defect of A*A + B*B from the identity."""
        gram = self.a.conj().T @ self.a + self.b.conj().T @ self.b
        return float(np.linalg.norm(gram - np.eye(self.dim), "fro"))

    @property
    def is_valid(self) -> bool:
        return self.validate() <= self.tol

    def __repr__(self) -> str:
        if self.dim == 1:
            return f"PythagoreanPair(a={complex(self.a[0, 0]):.6g}, b={complex(self.b[0, 0]):.6g})"
        return f"PythagoreanPair(dim={self.dim})"

    def __setattr__(self, *a):
        raise AttributeError("PythagoreanPair is immutable")


def scalar_pair(a: complex, b: complex, tol: float = 1e-12) -> PythagoreanPair:
    """The 1-dimensional pair; (a, b) must sit on the unit 3-sphere."""
    defect = abs(abs(a) ** 2 + abs(b) ** 2 - 1.0)
    if defect > tol:
        raise ValueError(f"|a|^2 + |b|^2 differs from 1 by {defect:.3g}")
    return PythagoreanPair([[a]], [[b]], tol)


def random_pair(dim: int, seed: int, tol: float = 1e-12) -> PythagoreanPair:
    """A Haar-ish random pair: orthonormalize 2d x d complex Gaussians and
    split the isometry into its top and bottom blocks."""
    if dim < 1:
        raise ValueError("dimension must be positive")
    rng = np.random.default_rng(seed)
    m = rng.normal(size=(2 * dim, dim)) + 1j * rng.normal(size=(2 * dim, dim))
    q, _ = np.linalg.qr(m)
    return PythagoreanPair(q[:dim], q[dim:], tol)


def word_operator(pair: PythagoreanPair, w: str) -> np.ndarray:
    """Operator at vertex w: each descent multiplies on the left, bit 0
    contributing A and bit 1 contributing B."""
    op = np.eye(pair.dim, dtype=np.complex128)
    for bit in w:
        if bit == "0":
            op = pair.a @ op
        elif bit == "1":
            op = pair.b @ op
        else:
            raise ValueError(f"not a binary word: {w!r}")
    return op


def leaf_decorations(pair: PythagoreanPair, tree: Tree, xi) -> np.ndarray:
    """All leaf values of the tree grown from root value xi, leaf order.

    Walks the leaves left to right keeping the partial products along the
    current root path, so the work is one matrix-vector product per edge.
    """
    xi = np.asarray(xi, dtype=np.complex128).reshape(pair.dim)
    scalar = pair.dim == 1  # plain complex products; 1x1 matmuls are ~10x slower
    if scalar:
        a, b = complex(pair.a[0, 0]), complex(pair.b[0, 0])
        path: list = [complex(xi[0])]
    else:
        a, b = pair.a, pair.b
        path = [xi]  # path[k] = value at the length-k prefix
    prev = None
    rows = np.empty((tree.n_leaves, pair.dim), dtype=np.complex128)
    for i, leaf in enumerate(tree.leaves):
        if prev is not None:
            # consecutive leaves branch at the previous leaf's last 0
            k = len(prev.rstrip("1")) - 1
            del path[k + 1 :]
        start = len(path) - 1
        if scalar:
            for bit in leaf[start:]:
                path.append((a if bit == "0" else b) * path[-1])
        else:
            for bit in leaf[start:]:
                path.append((a if bit == "0" else b) @ path[-1])
        rows[i] = path[-1]
        prev = leaf
    return rows


def phi(pair: PythagoreanPair, forest: Forest, xs) -> np.ndarray:
    """The forest isometry applied to one vector per root; returns one
    vector per leaf, in leaf order."""
    xs = np.asarray(xs, dtype=np.complex128)
    if xs.ndim == 1:
        xs = xs.reshape(1, -1)
    if xs.shape != (forest.n_roots, pair.dim):
        raise ValueError(
            f"expected {forest.n_roots} vectors of dimension {pair.dim}, got shape {xs.shape}"
        )
    return np.vstack(
        [leaf_decorations(pair, t, x) for t, x in zip(forest.trees, xs)]
    )


def operator_norm(m: np.ndarray, tol: float = 1e-12, max_iter: int = 1000) -> float:
    """Largest singular value by power iteration on the Gram matrix."""
    m = np.asarray(m, dtype=np.complex128)
    d = m.shape[0]
    if d == 1:
        return abs(complex(m[0, 0]))
    gram = m.conj().T @ m
    v = np.arange(1, d + 1, dtype=np.complex128)
    v /= np.linalg.norm(v)
    lam = 0.0
    for _ in range(max_iter):
        w = gram @ v
        nw = np.linalg.norm(w)
        if nw == 0.0:
            return 0.0
        v = w / nw
        new = float(np.real(np.vdot(v, gram @ v)))
        if abs(new - lam) <= tol * max(new, 1.0):
            lam = new
            break
        lam = new
    return float(np.sqrt(max(lam, 0.0)))


def spectral_radius(m: np.ndarray) -> float:
    return float(np.max(np.abs(np.linalg.eigvals(np.asarray(m, dtype=np.complex128)))))


@dataclass(frozen=True)
class DiffuseVerdict:
    """Outcome of the diffuseness search.

    ``certified``: every word of length ``depth`` has operator 2-norm at
    most ``eps``, hence so do all longer words.  ``not_diffuse``: the
    periodic word ``witness`` has spectral radius 1, so products along it
    do not die out.  ``unknown``: the search budget ran out first.
    """

    status: str
    depth: int | None = None
    eps: float | None = None
    witness: str | None = None

    @property
    def is_certified(self) -> bool:
        return self.status == "certified"

    @property
    def is_not_diffuse(self) -> bool:
        return self.status == "not_diffuse"

    @property
    def is_unknown(self) -> bool:
        return self.status == "unknown"

    def __str__(self) -> str:
        if self.is_certified:
            return f"CERTIFIED depth={self.depth} eps={self.eps:g}"
        if self.is_not_diffuse:
            return f"NOT-DIFFUSE witness={self.witness}"
        return f"UNKNOWN depth={self.depth}"


def diffuse_certificate(
    pair: PythagoreanPair,
    max_depth: int = 24,
    eps: float = 1e-3,
    witness_len: int = 8,
    max_nodes: int = 1_000_000,
) -> DiffuseVerdict:
    """Try to decide diffuseness of the pair.

    Phase 1 scans words in shortlex order up to ``witness_len`` for one
    whose operator has spectral radius at least 1 - tol.  Phase 2 runs a
    depth-first search from the identity, multiplying by A and B and
    pruning any branch whose product 2-norm falls to ``eps``; all
    extensions of a pruned word stay at or below eps, so if every branch
    prunes within ``max_depth`` the pair is certified.  Identical
    products are memoised, which collapses the search for scalar and
    diagonal pairs without changing the verdict.
    """
    tol = pair.tol
    sqrt_d = float(np.sqrt(pair.dim))

    for length in range(1, witness_len + 1):
        words = [""]
        for _ in range(length):
            words = [w + bit for w in words for bit in "01"]
        for w in sorted(words):
            if spectral_radius(word_operator(pair, w)) >= 1.0 - tol:
                return DiffuseVerdict(status="not_diffuse", witness=w)

    def pruned(op: np.ndarray) -> bool:
        fro = float(np.linalg.norm(op, "fro"))
        if fro <= eps:
            return True
        if fro > eps * sqrt_d:
            return False
        return operator_norm(op) <= eps

    def key(op: np.ndarray) -> bytes:
        return np.round(op, 13).tobytes()

    # heights[k] = levels until every extension of the product is pruned
    heights: dict[bytes, int] = {}
    root = np.eye(pair.dim, dtype=np.complex128)
    stack: list[tuple[np.ndarray, bytes, int, list[int]]] = []

    def open_frame(op: np.ndarray, depth: int) -> bool:
        """Push op for exploration; False when the budget is exhausted."""
        k = key(op)
        if k in heights:
            return True
        if depth >= max_depth or len(heights) + len(stack) > max_nodes:
            return False
        if pruned(op):
            heights[k] = 0
            return True
        stack.append((op, k, depth, []))
        return True

    if not open_frame(root, 0):
        return DiffuseVerdict(status="unknown", depth=max_depth)
    while stack:
        op, k, depth, child_heights = stack[-1]
        n_done = len(child_heights)
        if n_done == 2:
            heights[k] = 1 + max(child_heights)
            stack.pop()
            if stack:
                stack[-1][3].append(heights[k])
            continue
        child = (pair.a if n_done == 0 else pair.b) @ op
        ck = key(child)
        if ck in heights:
            child_heights.append(heights[ck])
            continue
        if not open_frame(child, depth + 1):
            return DiffuseVerdict(status="unknown", depth=max_depth)

    return DiffuseVerdict(status="certified", depth=heights[key(root)], eps=eps)


# -- JSON pair format -----------------------------------------------------


def _matrix_to_json(m: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def _matrix_from_json(data, dim: int) -> np.ndarray:
    if len(data) != dim or any(len(row) != dim for row in data):
        raise ValueError(f"matrix data is not {dim}x{dim}")
    m = np.empty((dim, dim), dtype=np.complex128)
    for i, row in enumerate(data):
        for j, (re, im) in enumerate(row):
            m[i, j] = complex(re, im)
    return m


def pair_to_json(pair: PythagoreanPair) -> dict:
    return {
        "dim": pair.dim,
        "A": _matrix_to_json(pair.a),
        "B": _matrix_to_json(pair.b),
        "tol": pair.tol,
    }


def pair_from_json(data) -> PythagoreanPair:
    """Accepts the full matrix form and the scalar shorthand
    ``{"a": [re, im], "b": [re, im]}``."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict):
        raise ValueError("pair data must be a JSON object")
    try:
        tol = float(data.get("tol", 1e-12))
        if "a" in data or "b" in data:
            a = complex(*data["a"])
            b = complex(*data["b"])
            return scalar_pair(a, b, tol)
        dim = int(data["dim"])
        a = _matrix_from_json(data["A"], dim)
        b = _matrix_from_json(data["B"], dim)
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed pair data: {exc}") from None
    return PythagoreanPair(a, b, tol)
