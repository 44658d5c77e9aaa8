"""Shared exception types."""


class SizeCapExceeded(RuntimeError):
    """A requested construction or computation is larger than its cap.

    Caps exist because matrix sides (binomials, half-diagram counts) explode;
    callers can raise them explicitly when they mean it.
    """

    def __init__(self, what: str, size: int, cap: int) -> None:
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap
