"""
Chambers of a plane arrangement
===============================

Four lines through the origin cut the plane into eight chambers.
"""

from deligne import catalog
from deligne.arrangement import parse_arrangement

# normals are reduced to primitive integer vectors with a positive leading entry
arr = parse_arrangement(2, [[1, 0], [0, 1], [1, 1], [2, 4]])
print(arr.normals)

# chambers are sign vectors; ids follow their sorted order
for c in arr.chambers:
    print(c.id, c.sign, arr.witness(c), arr.chamber_rays(c))

# walls of a chamber and the hyperplanes separating two chambers
print(arr.walls("++++"), arr.separation("++++", "-+-+"))
print(arr.antipode("++++").sign)

# a three-dimensional example with a non-simplicial chamber
boolean = catalog.get("BOOLEAN3+")
print(len(boolean.chambers), boolean.is_simplicial())
