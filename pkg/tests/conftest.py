import pytest

from chevkit import CartanType, build_root_system, build_special, orientation

SMALL_TYPES = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2"]
MEDIUM_TYPES = SMALL_TYPES + ["A5", "B4", "C4", "D5", "E6", "F4"]

# every type/rank the exhaustive criteria cover
DESK_TYPES = (
    [f"A{r}" for r in range(1, 9)]
    + [f"B{r}" for r in range(2, 7)]
    + [f"C{r}" for r in range(2, 7)]
    + [f"D{r}" for r in range(3, 8)]
    + ["E6", "E7", "E8", "F4", "G2"]
)


@pytest.fixture(scope="session")
def special():
    cache = {}

    def get(t, which="plus"):
        key = (t, which)
        if key not in cache:
            cache[key] = build_special(t, orientation(build_root_system(t), which))
        return cache[key]

    return get


def ctype(t):
    return CartanType.parse(t)
