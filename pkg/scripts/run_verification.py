#!/usr/bin/env python3
"""Run the verification suite from a source checkout.

Equivalent to the installed `qhopf` command; see `--help` for the flags
(--n, --q-exp, --checks, --out, --seed, --dump, --timings).
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from qhopf.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
