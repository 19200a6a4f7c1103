"""The mod-2 cohomology ring of one polygon space.

For the single gee {3,2,1} on eight sides the top class is R^2 V{1,2,3}
and R^5 vanishes.  The duality functionals phi and psi read off values on
the two top degrees.
"""

from polygon_tc import CohContext, GeneticCode
from polygon_tc.cohomology import format_monomial

ctx = CohContext(GeneticCode.parse("8321"))
m = ctx.m
print("dimensions:", ctx.dims())
for d in (m - 1, m):
    print(f"basis of H^{d}:", [format_monomial(d, s) for s in ctx.basis(d)])

print("R^m is zero:", not ctx.R(m))
print("phi on the top basis monomial:", ctx.phi({1, 2, 3}))
print("psi on degree m-1:", {format_monomial(m - 1, s): ctx.psi(s) for s in ctx.basis(m - 1)})

x = ctx.V(1) * ctx.V(2)
print("V1 * V2 =", x, "and (V1 V2) * V1 =", x * ctx.V(1))
