#!/usr/bin/env python3
"""Run the full acceptance gate and print one pass/fail line per criterion.

Exit code 0 when every criterion passes, 1 otherwise.
"""

import sys
import time

from symfunc.verify import ACCEPTANCE, run_checks


def main() -> int:
    all_ok = True
    for num, desc, checks, bounds in ACCEPTANCE:
        start = time.time()
        results, ok = run_checks(checks, bounds)
        elapsed = time.time() - start
        cases = sum(c for _, c, _ in results)
        print(
            f"criterion {num} [{'PASS' if ok else 'FAIL'}] {desc} "
            f"({cases} cases, {elapsed:.1f}s)",
            flush=True,
        )
        if not ok:
            all_ok = False
            for name, _, failures in results:
                for msg in failures[:5]:
                    print(f"    {name}: {msg}")
    return 0 if all_ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
