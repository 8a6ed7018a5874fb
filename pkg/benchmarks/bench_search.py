"""Compare the compiled and pure-Python IP-loop search kernels.

Run:  python3 benchmarks/bench_search.py [max_order]

Both kernels enumerate all reduced IP-loop Cayley tables of each order and
canonicalize them; results are asserted identical before timing is
reported.
"""

import importlib
import sys
import time

from hopfloop import _ipsearch_py


def _load_cython():
    try:
        return importlib.import_module("hopfloop._ipsearch")
    except ImportError:
        return None


def _run(mod, n):
    tables = list(mod.enumerate_ip_tables(n))
    classes = {mod.canonical_form(t) for t in tables}
    return tables, classes


def bench(n, repeats=3):
    cy = _load_cython()
    results = {}
    for name, mod in (("cython", cy), ("python", _ipsearch_py)):
        if mod is None:
            results[name] = None
            continue
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            tables, classes = _run(mod, n)
            best = min(best, time.perf_counter() - t0)
        results[name] = (best, len(tables), len(classes))
    if cy is not None:
        assert _run(cy, n)[0] == _run(_ipsearch_py, n)[0], \
            f"backend disagreement at order {n}"
    return results


def main():
    max_order = int(sys.argv[1]) if len(sys.argv) > 1 else 7
    print(f"{'order':>5} {'backend':>8} {'tables':>7} {'classes':>8} "
          f"{'best (s)':>10}")
    for n in range(4, max_order + 1):
        res = bench(n)
        for name in ("cython", "python"):
            if res[name] is None:
                print(f"{n:>5} {name:>8}  (extension not built)")
                continue
            t, ntab, ncls = res[name]
            print(f"{n:>5} {name:>8} {ntab:>7} {ncls:>8} {t:>10.4f}")
        if res["cython"] and res["python"]:
            speedup = res["python"][0] / res["cython"][0]
            print(f"{'':>5} speedup: {speedup:.1f}x")


if __name__ == "__main__":
    main()
