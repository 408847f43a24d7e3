"""Operation tallies for base-ring arithmetic and membership tests.

Counting is off unless a :func:`count_ops` block is active, so library
calls outside a report pay only a context-variable lookup.
"""

import contextvars
from contextlib import contextmanager
from dataclasses import dataclass


@dataclass
class OpCounts:
    ring_ops: int = 0
    membership_tests: int = 0

    def as_dict(self):
        return {"ring_ops": self.ring_ops, "membership_tests": self.membership_tests}


_active = contextvars.ContextVar("ginv_op_counts", default=None)


@contextmanager
def count_ops():
    """Tally ring operations performed inside the block.

    Nested blocks each see the operations done while they are active.
    """
    counts = OpCounts()
    parent = _active.get()
    token = _active.set(counts)
    try:
        yield counts
    finally:
        _active.reset(token)
        if parent is not None:
            parent.ring_ops += counts.ring_ops
            parent.membership_tests += counts.membership_tests


_get_active = _active.get


def tick(n=1):
    c = _get_active()
    if c is not None:
        c.ring_ops += n


def tick_membership():
    c = _get_active()
    if c is not None:
        c.membership_tests += 1
