"""Rewrite the golden outputs from the current build: python3 regenerate.py BUILD_DIR"""

import pathlib
import subprocess
import sys

here = pathlib.Path(__file__).resolve().parent
binary = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else here.parents[1] / "build") / "semiring-lab"

for line in (here / "cases.txt").read_text().splitlines():
    if not line or line.startswith("#"):
        continue
    golden, *args = line.split("\t")
    args = [str(here / a[1:]) if a.startswith("@") else a for a in args]
    result = subprocess.run([str(binary), *args], capture_output=True, text=True)
    (here / golden).write_text(f"exit {result.returncode}\n{result.stdout}")
