import sys
from pathlib import Path

# src layout: make the package importable without installation
src = str(Path(__file__).parent / "src")
if src not in sys.path:
    sys.path.insert(0, src)
