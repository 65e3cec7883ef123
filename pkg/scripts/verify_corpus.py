"""Run the identity suite on every matroid file in a directory (default: corpus/).

Prints one block per file and exits non-zero if any check fails.
"""

import sys
import time
from pathlib import Path

from tutteconv.io import load_matroid
from tutteconv.verify import FAIL, run_checks


def main(directory: Path) -> int:
    failures = 0
    for path in sorted(directory.glob("*.json")):
        M = load_matroid(path)
        t0 = time.perf_counter()
        results = run_checks(M)
        print(f"== {path.stem} (n={M.n}, {time.perf_counter() - t0:.2f}s)")
        for r in results:
            print("  " + r.line())
        failures += sum(r.status == FAIL for r in results)
    print(f"{failures} failing checks")
    return 1 if failures else 0


if __name__ == "__main__":
    root = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "corpus"
    sys.exit(main(root))
