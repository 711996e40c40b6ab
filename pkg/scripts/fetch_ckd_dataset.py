#!/usr/bin/env python3
"""Fetch the UCI chronic-kidney-disease dataset and write the canonical CSV.

Downloads the official archive (or converts a locally downloaded copy),
parses the ARFF inside, normalizes the file's known whitespace noise, and
writes data/chronic_kidney_disease.csv in the 25-column layout the package
expects (header row, "?" for missing cells). Requires network access unless
--from-zip/--from-arff points at a local copy.

The converter validates the result: exactly 400 rows, 250 labeled ckd and
150 labeled notckd.
"""

import argparse
import io
import sys
import urllib.request
import zipfile
from pathlib import Path

UCI_ZIP_URL = "https://archive.ics.uci.edu/static/public/336/chronic+kidney+disease.zip"

COLUMNS = [
    "age", "bp", "sg", "al", "su", "rbc", "pc", "pcc", "ba", "bgr", "bu",
    "sc", "sod", "pot", "hemo", "pcv", "wc", "rc", "htn", "dm", "cad",
    "appet", "pe", "ane", "class",
]


def parse_arff(text: str) -> list[list[str]]:
    rows = []
    in_data = False
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("%"):
            continue
        if line.lower().startswith("@data"):
            in_data = True
            continue
        if not in_data or line.startswith("@"):
            continue
        cells = [c.strip().strip("'\"").strip() for c in line.split(",")]
        # the published file carries stray tabs and a few trailing commas
        cells = [c if c else "?" for c in cells]
        if len(cells) == len(COLUMNS) + 1 and cells[-1] == "?":
            cells = cells[:-1]
        if len(cells) != len(COLUMNS):
            raise SystemExit(f"unexpected row with {len(cells)} fields: {line!r}")
        rows.append(cells)
    return rows


def arff_from_zip(blob: bytes) -> str:
    with zipfile.ZipFile(io.BytesIO(blob)) as zf:
        names = [n for n in zf.namelist() if n.endswith(".arff") and "full" in n]
        if not names:
            names = [n for n in zf.namelist() if n.endswith(".arff")]
        if not names:
            raise SystemExit("no .arff file inside the archive")
        return zf.read(names[0]).decode("utf-8", errors="replace")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--from-zip", type=Path, help="Use a locally downloaded UCI zip.")
    parser.add_argument("--from-arff", type=Path, help="Use a locally extracted .arff file.")
    parser.add_argument(
        "--out",
        type=Path,
        default=Path(__file__).resolve().parent.parent / "data" / "chronic_kidney_disease.csv",
    )
    args = parser.parse_args()

    if args.from_arff:
        text = args.from_arff.read_text(errors="replace")
    elif args.from_zip:
        text = arff_from_zip(args.from_zip.read_bytes())
    else:
        print(f"downloading {UCI_ZIP_URL}", file=sys.stderr)
        with urllib.request.urlopen(UCI_ZIP_URL) as resp:
            text = arff_from_zip(resp.read())

    rows = parse_arff(text)
    labels = [r[-1] for r in rows]
    if len(rows) != 400 or labels.count("ckd") != 250 or labels.count("notckd") != 150:
        raise SystemExit(
            f"sanity check failed: {len(rows)} rows, "
            f"{labels.count('ckd')} ckd / {labels.count('notckd')} notckd "
            "(expected 400 = 250 + 150)"
        )
    args.out.parent.mkdir(parents=True, exist_ok=True)
    with args.out.open("w", newline="") as fh:
        fh.write(",".join(COLUMNS) + "\n")
        for cells in rows:
            fh.write(",".join(cells) + "\n")
    print(f"wrote {args.out} ({len(rows)} rows)")


if __name__ == "__main__":
    main()
