#!/usr/bin/env python3
"""Convert TEI poems with metrical annotation into the signs corpus format.

Every <l met="-+---+---+-"> line becomes `verse<TAB>signs`. Pass one or more
XML files or directories; output goes to stdout.

    python3 scripts/tei_to_tsv.py corpus/tei/ > fixed.tsv
    escansion eval --corpus fixed.tsv --corpus-format signs --mode fixed
"""

import sys
import xml.etree.ElementTree as ET
from pathlib import Path


def local(tag):
    return tag.rsplit("}", 1)[-1]


def lines(path):
    for el in ET.parse(path).iter():
        if local(el.tag) != "l":
            continue
        met = (el.get("met") or "").strip()
        text = " ".join("".join(el.itertext()).split())
        if met and text and set(met) <= {"+", "-"}:
            yield text, met


def main(args):
    if not args:
        sys.exit(__doc__)
    files = []
    for arg in args:
        p = Path(arg)
        files.extend(sorted(p.rglob("*.xml")) if p.is_dir() else [p])
    for f in files:
        for text, met in lines(f):
            print(f"{text}\t{met}")


if __name__ == "__main__":
    main(sys.argv[1:])
