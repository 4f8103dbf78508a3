"""The unitary representation and its matrix coefficients.

An element [t, s] acts on a decorated tree by refining against the
domain tree s and rehanging the values under the range tree t.  The
coefficients <g z, z> recover three classical pictures: a character for
pairs with b = 0, the Koopman representation on L^2[0,1] for the
balanced pair, and coefficient decay along vines for diffuse pairs.
"""

import math

import numpy as np

from pythrep.limitspace import LimitVector
from pythrep.pythagorean import random_pair, scalar_pair
from pythrep.rep import (
    act,
    character_check,
    coefficient,
    coefficient_cyclic,
    ergodic_defect,
    fit_koopman_twist,
    gram_average_norm,
    koopman_coefficient,
    mixing_scan,
)
from pythrep.thompson import generator, vine_element

x0 = generator(0)
balanced = scalar_pair(1 / math.sqrt(2), 1 / math.sqrt(2))

# -- the action is unitary ------------------------------------------------------

z = LimitVector.embed(balanced, [1.0])
print("||x0 z|| =", act(x0, z).norm(), " <x0 z, z> =", f"{coefficient(x0, z):.6f}")

# -- character pairs (b = 0) ------------------------------------------------------

pred, meas = character_check(scalar_pair(1j, 0.0), x0)
print("\ncharacter at a=i on x0: predicted", pred, "measured", np.round(meas, 12))

# -- Koopman comparison ------------------------------------------------------------

g = generator(1) * x0**-2
print("\nbalanced pair vs the classical integral:")
print("  coefficient      ", f"{coefficient_cyclic(balanced, g):.10f}")
print("  koopman integral ", f"{koopman_coefficient(g, 0.0):.10f}")

# rotating the pair twists the integral by a one-parameter family
s, worst = fit_koopman_twist(np.exp(0.3j))
print(f"twist fitted for omega=e^0.3i: s = {s:.6f} (validation err {worst:.1e})")

# -- coefficient decay along vines ---------------------------------------------------

print("\n|<vine(i) z, z>| for the balanced pair and a random 2x2 pair:")
other = random_pair(2, seed=7)
for i in (1, 2, 4, 8, 16, 32):
    b = abs(coefficient_cyclic(balanced, vine_element(i)))
    r = abs(coefficient_cyclic(other, vine_element(i)))
    print(f"  i={i:>2}  balanced {b:.6f}   random {r:.6f}")

# the same scan as a byte-stable CSV table
csv = mixing_scan(balanced, i_max=3).to_csv()
print("\nmixing_scan CSV head:", csv.splitlines()[0])

# -- ergodic averages ----------------------------------------------------------------

# x0 moves every dyadic cell, so the averaged vector must die; the Gram
# identity computes the norm of the average from coefficients alone
print("\nnorm of (1/n) sum x0^k z:")
for n in (4, 64, 1024):
    print(f"  n={n:>4}  {gram_average_norm(balanced, x0, n):.6f}")
print("defect against the direct average at n=16:",
      f"{abs(ergodic_defect(x0, z, 16) - gram_average_norm(balanced, x0, 16)):.2e}")
