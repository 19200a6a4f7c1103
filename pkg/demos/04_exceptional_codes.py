"""Which polygon spaces escape the cohomological lower bound?

Among the 134 codes on seven sides only two single-gene codes lack a
certificate of degree 2n - 7 (the projective space and the torus are set
aside).  Genes of size 5 add one more exception on eight sides.
"""

from polygon_tc.sweeps import exceptional_codes, monogenic_sweep, sweep

rows = sweep(7)
print("seven sides:", len(rows), "codes, exceptional:", exceptional_codes(rows))

methods = {}
for row, _ in rows:
    methods[row.method] = methods.get(row.method, 0) + 1
print("how the bound was certified:", methods)

size5 = monogenic_sweep(5)
print("single genes of size 5 without a degree 2n-7 product:", size5.exceptional)
