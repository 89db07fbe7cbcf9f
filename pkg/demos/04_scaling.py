"""Doubling the operand size: how much longer does shinv take?

With Karatsuba products the ratio should sit near 3 (2**1.585).  The
schoolbook backend is a vectorized convolution whose constant is tiny, so
at these sizes it often wins and its ratio only creeps up toward 4 as the
operands grow.  The iteration count grows by one per doubling.  Timings on
a shared machine are noisy; run it twice before reading much into one row.
"""

from exactquo.bigdigits import MultBackend
from exactquo.cli import bench_shinv

sizes = (256, 512, 1024, 2048, 4096, 8192)
for mult in ("karatsuba", "schoolbook"):
    print(mult)
    for row in bench_shinv(sizes, "refine3", MultBackend(mult), repeats=3):
        ratio = "-" if row["ratio"] is None else f"{row['ratio']:.2f}"
        print(f"  {row['digits']:>5} words  {row['median_s'] * 1e3:8.2f} ms"
              f"  ratio {ratio:>5}  iterations {row['iterations']}")
