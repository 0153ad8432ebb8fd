"""Rewrite tests/golden/*.out from tests/golden/cases.json.

Run after an intentional output change and review the diff before committing.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from golden_cases import GOLDEN, invoke, load_cases, render  # noqa: E402


def main():
    bad = 0
    for case in load_cases():
        code, out, err = invoke(case["argv"])
        (GOLDEN / f"{case['name']}.out").write_text(render(out, err))
        flag = "" if code == case["exit"] else f"  (exit {code}, expected {case['exit']})"
        bad += bool(flag)
        print(f"{case['name']}{flag}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
