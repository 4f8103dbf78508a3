"""The limit Hilbert space: decorated trees up to growth.

A vector is a tree with one C^d value per leaf.  Growing a caret at a
leaf replaces its value xi by (A xi, B xi); the sphere relation makes
this an isometry, and two decorated trees are the same vector when they
agree after growing to a common shape.  tau reads off the component over
a vertex, tau_star puts a vector back under a vertex, and rho = tau_star
tau projects onto the part of the space over that vertex.
"""

import numpy as np

from pythrep.forests import Forest, Tree
from pythrep.limitspace import LimitVector, parse_limit_vector, rho, tau, tau_star
from pythrep.pythagorean import random_pair, scalar_pair

real = scalar_pair(0.6, 0.8)

# -- representatives -----------------------------------------------------------

z = LimitVector.embed(real, [1.0])
grown = z.refine_to(Tree.vine_left(3))
print("root value 1 grown down a vine:", np.round(grown.values.ravel(), 4))
print("same vector?", z.isclose(grown), "| norms:", z.norm(), grown.norm())

# trim finds the smallest representative again
assert grown.trim().tree == Tree.leaf()

# arithmetic aligns representatives automatically
w = parse_limit_vector(real, "(**) : 0.5 ; 1-2i")
print("z + w lives on", (z + w).tree.to_text(), "with norm", f"{(z + w).norm():.4f}")

# -- components and projections ---------------------------------------------------

pair = random_pair(2, seed=42)
rng = np.random.default_rng(7)
v = LimitVector(
    pair, Tree.vine_right(1), rng.normal(size=(3, 2)) + 1j * rng.normal(size=(3, 2))
)

# tau reads below a leaf by pushing the leaf value down
top = tau("0", v)
print("\ncomponent over 0 has norm", f"{top.norm():.4f}")

# tau_star is a right inverse of tau and an adjoint:
assert tau("10", tau_star("10", v)).isclose(v)
lhs = tau_star("01", v).inner(v)
rhs = v.inner(tau("01", v))
assert abs(lhs - rhs) < 1e-12

# rho projects; the projections over a dyadic partition sum to the identity
parts = [rho(u, v) for u in ("00", "01", "1")]
total = parts[0] + parts[1] + parts[2]
print("partition reassembles v:", total.isclose(v))
print("norms of the pieces:", [f"{p.norm():.4f}" for p in parts])

# pieces over disjoint vertices are orthogonal
print("cross inner product:", abs(parts[0].inner(parts[2])))
