import sys
from pathlib import Path

# Allow running pytest from a fresh checkout without installing the package.
_src = Path(__file__).resolve().parent / "src"
if str(_src) not in sys.path:
    sys.path.insert(0, str(_src))
