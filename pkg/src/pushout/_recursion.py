from __future__ import annotations

import sys
from contextlib import contextmanager
from typing import Iterator


@contextmanager
def recursion_room(depth: int) -> Iterator[None]:
    """Temporarily raise the interpreter recursion limit to fit ``depth`` frames."""
    old = sys.getrecursionlimit()
    want = depth + 200
    if want > old:
        sys.setrecursionlimit(want)
    try:
        yield
    finally:
        if want > old:
            sys.setrecursionlimit(old)
