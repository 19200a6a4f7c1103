"""Certificates for the lower bound TC >= 2n - 6.

A nonzero product of D zero divisors zbar = z x 1 + 1 x z gives TC >= D + 1.
For gee 321 a closed-form product works once m >= 5; at m = 4 no product of
seven barred classes survives, which the exhaustive search confirms.
"""

from polygon_tc import CohContext, GeneticCode, tc_report, verify_certificate, zcl_search

rep = tc_report("8321")
print("8321:", rep.certificate.product, "in bidegree", rep.certificate.bidegree,
      "via", rep.method, "so TC >=", rep.tc_lower)
print("independent re-check:", verify_certificate(rep.certificate))

ctx = CohContext(GeneticCode.parse("7321"))
print("7321, seven factors:", zcl_search(ctx, 7))
print("7321, six factors:", zcl_search(ctx, 6).product)

hit = zcl_search(CohContext(GeneticCode.parse("94321")), 11)
print("94321, eleven factors:", hit.product, hit.bidegree)
print(hit.to_json())
