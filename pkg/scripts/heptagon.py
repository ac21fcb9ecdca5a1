#!/usr/bin/env python3
"""
heptagon.py: exact spectrum, verification and Galois action for the XXX heptagon.

Usage:
  python heptagon.py spectrum
  python heptagon.py spectrum --format json --numeric
  python heptagon.py verify --section 5
  python heptagon.py galois '{"eps": [[1,1,1],[1,1,1]], "l": 2}'
  python heptagon.py export --k 2 --out ../output/k2.json --timestamped

Requires: the packages in requirements.txt
  pip install -r requirements.txt
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "src"))

from heptagon.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
