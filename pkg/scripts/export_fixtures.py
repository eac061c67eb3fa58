#!/usr/bin/env python3
"""Regenerate the JSON copies of the fixture corpus under src/flathol/data/."""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from flathol.fixtures import FIXTURE_BUILDERS
from flathol.specfile import save_group_spec


def main():
    data_dir = pathlib.Path(__file__).resolve().parent.parent / "src" / "flathol" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    for name, build in FIXTURE_BUILDERS.items():
        spec = build()
        path = data_dir / f"{name}.json"
        save_group_spec(spec, path)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
