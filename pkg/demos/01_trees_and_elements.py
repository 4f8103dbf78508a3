"""Trees, forests, and the group of tree pairs.

A full binary tree is stored as the sorted tuple of its leaf addresses,
each address a binary word naming a dyadic interval: "" is [0,1), "0" is
[0,1/2), "10" is [1/2,3/4), and so on.  A pair of trees with the same
leaf count is a group element: it maps each interval of the domain tree
affinely onto the corresponding interval of the range tree.
"""

from fractions import Fraction

from pythrep.forests import Forest, Tree, common_refinement
from pythrep.thompson import ThompsonElement, generator, parse_element, vine_element
from pythrep.words import CantorPoint, word_to_interval

# -- trees ------------------------------------------------------------------

caret = Tree.caret()
left = Tree.vine_left(2)
print("caret leaves:     ", caret.leaves)
print("left vine leaves: ", left.leaves, "as text", left.to_text())

for w in left.leaves:
    lo, hi = word_to_interval(w)
    print(f"  leaf {w:>3} covers [{lo}, {hi})")

# the smallest tree refining two others, with the forests that grow them
w, f, h = common_refinement(Tree.vine_left(1), Tree.vine_right(1))
print("refinement of the two vines:", w.leaves)
assert w == Tree.vine_left(1).composed(f) == Tree.vine_right(1).composed(h)

# -- group elements -----------------------------------------------------------

x0, x1 = generator(0), generator(1)
print("\nx0  =", x0.to_text())
print("x1  =", x1.to_text())
print("x0 maps [0,1/2) onto", x0.image_of_word("0"))

# products reduce to canonical form, so equality is plain ==
assert x0 * x0.inverse() == ThompsonElement.identity()
assert x0.inverse() * x1 * x0 == generator(2)

# powers of the vine pair walk along the vines
assert vine_element(2) ** 3 == vine_element(6)
print("vine(2)^3 = vine(6):", vine_element(6).to_text())

# -- the action on points ------------------------------------------------------

p = CantorPoint.parse("1(0)")  # the dyadic point 1/2
q = x0.act_point(p)
print(f"\nx0 sends {p} = {p.to_fraction()} to {q} = {q.to_fraction()}")
assert q.to_fraction() == Fraction(1, 4)

# slopes at 0 add under composition
print("slope exponent of x0^3 at zero:", (x0**3).slope_exponent_at_zero())

# -- supports and restriction ---------------------------------------------------

print("\nsupport of x1:", x1.support(), "measure", x1.support().measure())
assert x1.stabilizes("1")
assert x1.restrict("1") == x0  # x1 is x0 rescaled into the right half

# elements can also be written and parsed in a small expression language
g = parse_element("x0^2 x1^-1")
print("parsed x0^2 x1^-1 =", g.to_text())
assert parse_element(g.to_text()) == g
