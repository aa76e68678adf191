"""Growth of the Lebesgue constant of simplex interpolation (d = 2).

Estimates the operator norm by maximising the Lebesgue function over a
fine barycentric grid and compares it with (log n)^2.  Takes about a minute.
"""
import math
import time

from adfourier import lebesgue_estimate

print(" n   estimate   estimate/(log n)^2   seconds")
for n in (2, 4, 8, 16, 32):
    start = time.perf_counter()
    est = lebesgue_estimate("LnStar", 2, n)
    print(f"{n:2d}   {est:8.4f}   {est / math.log(n) ** 2:18.3f}   {time.perf_counter() - start:7.1f}")
