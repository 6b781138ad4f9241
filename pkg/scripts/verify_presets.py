#!/usr/bin/env python3
"""Run the full identity battery on every built-in preset.

Prints one summary line per preset and exits nonzero if anything fails.
Useful as a quick end-to-end sanity run after changes:

    python3 scripts/verify_presets.py
    python3 scripts/verify_presets.py --window 3 --json-dir /tmp/reports
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hopfcheck.cli import main as hopf_main  # noqa: E402


def run(argv: list[str], json_dir: Path | None, tag: str) -> int:
    if json_dir is None:
        return hopf_main(argv)
    import contextlib
    import io

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = hopf_main(argv + ["--json"])
    out = json_dir / f"{tag}.json"
    out.write_text(buf.getvalue())
    return code


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--window", type=int, default=5,
                        help="grid bound for the laurent preset")
    parser.add_argument("--xi", default="1",
                        help="parameter for the 4-dimensional preset")
    parser.add_argument("--json-dir", type=Path, default=None,
                        help="also write one JSON report per preset here")
    args = parser.parse_args()

    if args.json_dir is not None:
        args.json_dir.mkdir(parents=True, exist_ok=True)

    jobs = [
        ("group_c2", ["verify", "preset:group:C2"]),
        ("group_c4", ["verify", "preset:group:C4"]),
        ("sweedler4", ["verify", "preset:sweedler4", "--xi", args.xi]),
        ("sweedler4_xi0", ["verify", "preset:sweedler4", "--xi", "0"]),
        ("laurent", ["verify", "preset:laurent", "--window", str(args.window)]),
    ]
    worst = 0
    for tag, argv in jobs:
        code = run(argv, args.json_dir, tag)
        status = "ok" if code == 0 else f"exit {code}"
        print(f"[{status}] {' '.join(argv)}", file=sys.stderr)
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
