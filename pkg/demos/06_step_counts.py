"""
Where the time goes
===================

Step counts for the derived operations.  Classification is linear in the
input; recursion on M re-classifies at every level and so is quadratic.
"""

from natfromint.bench import format_table, run_bench

print(format_table(run_bench(64)))
