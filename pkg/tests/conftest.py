"""Make the package importable from a plain checkout (no install required)."""

import sys
from pathlib import Path

_SRC = Path(__file__).resolve().parent.parent / "src"

try:
    import powsumseq  # noqa: F401
except ImportError:  # pragma: no cover - only hit on uninstalled checkouts
    sys.path.insert(0, str(_SRC))
